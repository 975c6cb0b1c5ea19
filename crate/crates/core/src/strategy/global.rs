//! Global Frequency: a character trie over corpus sub-tokens.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{Candidate, DIM_GLOBAL_COUNT, DIM_GLOBAL_FILE_COUNT, DIM_GLOBAL_PROJECT_COUNT, GLOBAL};
use crate::corpus::CodeFile;
use crate::error::{Error, Result};
use crate::lexer::{identifier_prefix, subtokens, tokenize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordStats {
    pub count: u64,
    pub file_count: u64,
    pub project_count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RareFilter {
    /// drop a sub-token only when it is both single-project and short
    And,
    /// drop a sub-token when it is single-project or short
    Or,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GlobalConfig {
    pub min_length: usize,
    pub rare_filter: RareFilter,
}

impl Default for GlobalConfig {
    fn default() -> Self {
        GlobalConfig {
            min_length: 5,
            rare_filter: RareFilter::And,
        }
    }
}

impl GlobalConfig {
    fn keeps(&self, word: &str, stats: &WordStats) -> bool {
        let single_project = stats.project_count <= 1;
        let short = word.chars().count() < self.min_length;
        match self.rare_filter {
            RareFilter::And => !(single_project && short),
            RareFilter::Or => !(single_project || short),
        }
    }
}

#[derive(Debug, Clone, Default)]
struct Node {
    children: BTreeMap<char, usize>,
    stats: Option<WordStats>,
}

#[derive(Debug, Clone)]
pub struct TrieIndex {
    nodes: Vec<Node>,
    words: usize,
}

impl Default for TrieIndex {
    fn default() -> Self {
        TrieIndex {
            nodes: vec![Node::default()],
            words: 0,
        }
    }
}

/// Sub-token statistics over identifier and keyword tokens.
pub fn subtoken_stats<'a>(files: impl IntoIterator<Item = &'a CodeFile>) -> BTreeMap<String, WordStats> {
    let mut count: HashMap<String, u64> = HashMap::new();
    let mut in_files: HashMap<String, HashSet<usize>> = HashMap::new();
    let mut in_projects: HashMap<String, HashSet<&str>> = HashMap::new();
    for (fi, file) in files.into_iter().enumerate() {
        for tok in tokenize(&file.text).into_iter().filter(|t| t.kind.is_word()) {
            for sub in subtokens(tok.text) {
                *count.entry(sub.to_string()).or_insert(0) += 1;
                in_files.entry(sub.to_string()).or_default().insert(fi);
                in_projects.entry(sub.to_string()).or_default().insert(&file.project_id);
            }
        }
    }
    count
        .into_iter()
        .map(|(w, n)| {
            let stats = WordStats {
                count: n,
                file_count: in_files[&w].len() as u64,
                project_count: in_projects[&w].len() as u64,
            };
            (w, stats)
        })
        .collect()
}

/// Distinct whole identifier/keyword tokens, the vocabulary sub-token
/// splitting is compared against.
pub fn token_vocabulary_size<'a>(files: impl IntoIterator<Item = &'a CodeFile>) -> usize {
    let mut vocab = HashSet::new();
    for file in files {
        for tok in tokenize(&file.text).into_iter().filter(|t| t.kind.is_word()) {
            vocab.insert(tok.text.to_string());
        }
    }
    vocab.len()
}

impl TrieIndex {
    pub fn build<'a>(files: impl IntoIterator<Item = &'a CodeFile>, cfg: &GlobalConfig) -> Self {
        let stats = subtoken_stats(files);
        Self::from_words(stats.into_iter().filter(|(w, s)| cfg.keeps(w, s)))
    }

    pub fn from_words(words: impl IntoIterator<Item = (String, WordStats)>) -> Self {
        let mut trie = TrieIndex::default();
        for (w, s) in words {
            trie.insert(&w, s);
        }
        trie
    }

    pub fn insert(&mut self, word: &str, stats: WordStats) {
        let mut node = 0;
        for c in word.chars() {
            node = match self.nodes[node].children.get(&c) {
                Some(&next) => next,
                None => {
                    self.nodes.push(Node::default());
                    let next = self.nodes.len() - 1;
                    self.nodes[node].children.insert(c, next);
                    next
                }
            };
        }
        if self.nodes[node].stats.replace(stats).is_none() {
            self.words += 1;
        }
    }

    pub fn len(&self) -> usize {
        self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words == 0
    }

    pub fn get(&self, word: &str) -> Option<WordStats> {
        self.find(word).and_then(|n| self.nodes[n].stats)
    }

    fn find(&self, prefix: &str) -> Option<usize> {
        let mut node = 0;
        for c in prefix.chars() {
            node = *self.nodes[node].children.get(&c)?;
        }
        Some(node)
    }

    /// Every stored word in lexicographic order.
    pub fn words(&self) -> Vec<(String, WordStats)> {
        let mut out = Vec::with_capacity(self.words);
        self.collect(0, &mut String::new(), &mut out);
        out
    }

    fn collect(&self, node: usize, buf: &mut String, out: &mut Vec<(String, WordStats)>) {
        if let Some(s) = self.nodes[node].stats {
            out.push((buf.clone(), s));
        }
        for (&c, &child) in &self.nodes[node].children {
            buf.push(c);
            self.collect(child, buf, out);
            buf.pop();
        }
    }

    /// One `word<TAB>count<TAB>file_count<TAB>project_count` line per word,
    /// in lexicographic order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (w, s) in self.words() {
            out.push_str(&format!("{w}\t{}\t{}\t{}\n", s.count, s.file_count, s.project_count));
        }
        out
    }

    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut trie = TrieIndex::default();
        for (n, line) in text.lines().enumerate() {
            let bad = || Error::Model(format!("trie line {}: {line:?}", n + 1));
            let mut parts = line.split('\t');
            let word = parts.next().filter(|w| !w.is_empty()).ok_or_else(bad)?;
            let mut num = || parts.next().and_then(|p| p.parse::<u64>().ok()).ok_or_else(bad);
            let stats = WordStats {
                count: num()?,
                file_count: num()?,
                project_count: num()?,
            };
            trie.insert(word, stats);
        }
        Ok(trie)
    }

    /// Up to `k` completions of `prefix`, most frequent first, ties broken
    /// lexicographically. Candidate text omits the typed prefix.
    pub fn query(&self, prefix: &str, k: usize) -> Vec<Candidate> {
        if prefix.is_empty() || k == 0 {
            return Vec::new();
        }
        let Some(node) = self.find(prefix) else {
            return Vec::new();
        };
        let mut found = Vec::new();
        let mut buf = prefix.to_string();
        self.collect(node, &mut buf, &mut found);
        found.retain(|(w, _)| w.len() > prefix.len());
        found.sort_by(|(wa, a), (wb, b)| b.count.cmp(&a.count).then_with(|| wa.cmp(wb)));
        found
            .into_iter()
            .take(k)
            .enumerate()
            .map(|(i, (w, s))| {
                Candidate::new(&w[prefix.len()..], GLOBAL, i + 1)
                    .with_score(DIM_GLOBAL_COUNT, s.count as f64)
                    .with_score(DIM_GLOBAL_FILE_COUNT, s.file_count as f64)
                    .with_score(DIM_GLOBAL_PROJECT_COUNT, s.project_count as f64)
            })
            .collect()
    }

    /// Completes the sub-token under the cursor.
    pub fn query_context(&self, context: &str, k: usize) -> Vec<Candidate> {
        let ident = identifier_prefix(context);
        if ident.is_empty() || ident.ends_with('_') {
            return Vec::new();
        }
        match subtokens(ident).last() {
            Some(last) => self.query(last, k),
            None => Vec::new(),
        }
    }
}
