//! Byte-pair encoding trained on lexer words.
//!
//! Merges never cross word boundaries (see [`super::bpe_words`]), so no
//! end-of-word marker is needed. The base alphabet is printable ASCII plus
//! tab and newline, extended by any other character seen in training.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::bpe_words;

const HEADER_TAG: &str = "#bpe-v1";

#[derive(Debug, Clone)]
pub struct BpeModel {
    merges: Vec<(String, String)>,
    /// pair of ids -> (rank, merged id)
    ranks: HashMap<(u32, u32), (usize, u32)>,
    vocab: HashMap<String, u32>,
    tokens: Vec<String>,
    base_len: usize,
    /// token strings sorted lexicographically, for prefix queries
    sorted: Vec<(String, u32)>,
}

fn default_alphabet() -> BTreeSet<char> {
    let mut set: BTreeSet<char> = (' '..='~').collect();
    set.insert('\t');
    set.insert('\n');
    set
}

impl BpeModel {
    /// Trains merges until the vocabulary holds `vocab_size` tokens or no
    /// adjacent pair is left. Ties between equally frequent pairs go to the
    /// lexicographically smallest `(left, right)` pair.
    pub fn train<S: AsRef<str>>(texts: &[S], vocab_size: usize) -> Result<Self> {
        if texts.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mut word_counts: HashMap<&str, u64> = HashMap::new();
        let mut alphabet = default_alphabet();
        for text in texts {
            let text = text.as_ref();
            alphabet.extend(text.chars());
            for w in bpe_words(text) {
                *word_counts.entry(w).or_insert(0) += 1;
            }
        }
        if vocab_size < alphabet.len() {
            return Err(Error::VocabTooSmall {
                requested: vocab_size,
                base: alphabet.len(),
            });
        }
        let mut model = Self::from_alphabet(alphabet);

        let mut distinct: Vec<(&str, u64)> = word_counts.into_iter().collect();
        distinct.sort_unstable();
        let mut words: Vec<Vec<u32>> = distinct
            .iter()
            .map(|(w, _)| w.chars().map(|c| model.vocab[&c.to_string()]).collect())
            .collect();
        let freqs: Vec<i64> = distinct.iter().map(|&(_, n)| n as i64).collect();

        let mut pair_counts: HashMap<(u32, u32), i64> = HashMap::new();
        let mut pair_words: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
        for (wi, syms) in words.iter().enumerate() {
            for p in syms.windows(2) {
                *pair_counts.entry((p[0], p[1])).or_insert(0) += freqs[wi];
                pair_words.entry((p[0], p[1])).or_default().push(wi);
            }
        }

        while model.tokens.len() < vocab_size {
            let best = pair_counts
                .iter()
                .filter(|(_, &n)| n > 0)
                .max_by(|(pa, na), (pb, nb)| {
                    na.cmp(nb).then_with(|| {
                        // smaller pair string wins the tie, so it compares greater
                        model.pair_strings(**pb).cmp(&model.pair_strings(**pa))
                    })
                })
                .map(|(p, _)| *p);
            let Some(pair) = best else { break };
            let merged = model.push_merge(pair);

            let mut affected = pair_words.remove(&pair).unwrap_or_default();
            affected.sort_unstable();
            affected.dedup();
            for wi in affected {
                let syms = &mut words[wi];
                if !syms.windows(2).any(|p| (p[0], p[1]) == pair) {
                    continue;
                }
                for p in syms.windows(2) {
                    *pair_counts.get_mut(&(p[0], p[1])).expect("counted pair") -= freqs[wi];
                }
                *syms = merge_pair(syms, pair, merged);
                for p in syms.windows(2) {
                    *pair_counts.entry((p[0], p[1])).or_insert(0) += freqs[wi];
                    pair_words.entry((p[0], p[1])).or_default().push(wi);
                }
            }
            pair_counts.retain(|_, n| *n > 0);
        }
        model.rebuild_sorted();
        Ok(model)
    }

    fn from_alphabet(alphabet: BTreeSet<char>) -> Self {
        let tokens: Vec<String> = alphabet.iter().map(|c| c.to_string()).collect();
        let vocab = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        let mut model = BpeModel {
            merges: Vec::new(),
            ranks: HashMap::new(),
            vocab,
            base_len: tokens.len(),
            tokens,
            sorted: Vec::new(),
        };
        model.rebuild_sorted();
        model
    }

    fn pair_strings(&self, (a, b): (u32, u32)) -> (&str, &str) {
        (&self.tokens[a as usize], &self.tokens[b as usize])
    }

    fn push_merge(&mut self, pair: (u32, u32)) -> u32 {
        let (a, b) = self.pair_strings(pair);
        let (a, b) = (a.to_string(), b.to_string());
        let joined = format!("{a}{b}");
        let id = match self.vocab.get(&joined) {
            Some(&id) => id,
            None => {
                let id = self.tokens.len() as u32;
                self.tokens.push(joined.clone());
                self.vocab.insert(joined, id);
                id
            }
        };
        self.ranks.insert(pair, (self.merges.len(), id));
        self.merges.push((a, b));
        id
    }

    fn rebuild_sorted(&mut self) {
        self.sorted = self
            .tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        self.sorted.sort_unstable();
    }

    pub fn vocab_size(&self) -> usize {
        self.tokens.len()
    }

    pub fn base_size(&self) -> usize {
        self.base_len
    }

    pub fn merges(&self) -> &[(String, String)] {
        &self.merges
    }

    pub fn token_text(&self, id: u32) -> Option<&str> {
        self.tokens.get(id as usize).map(String::as_str)
    }

    pub fn token_id(&self, text: &str) -> Option<u32> {
        self.vocab.get(text).copied()
    }

    pub fn encode(&self, text: &str) -> Result<Vec<u32>> {
        let mut ids = Vec::new();
        for w in bpe_words(text) {
            ids.extend(self.encode_word(w)?);
        }
        Ok(ids)
    }

    /// Encodes one pre-segmented word.
    pub fn encode_word(&self, word: &str) -> Result<Vec<u32>> {
        let mut syms = word
            .chars()
            .map(|c| {
                let mut buf = [0u8; 4];
                self.vocab
                    .get(&*c.encode_utf8(&mut buf))
                    .copied()
                    .ok_or(Error::UnknownSymbol(c))
            })
            .collect::<Result<Vec<u32>>>()?;
        loop {
            let best = syms
                .windows(2)
                .filter_map(|p| self.ranks.get(&(p[0], p[1])).map(|&(r, id)| (r, (p[0], p[1]), id)))
                .min();
            let Some((_, pair, id)) = best else { break };
            syms = merge_pair(&syms, pair, id);
        }
        Ok(syms)
    }

    pub fn decode(&self, ids: &[u32]) -> Result<String> {
        let mut out = String::new();
        for &id in ids {
            out.push_str(self.token_text(id).ok_or(Error::UnknownTokenId(id))?);
        }
        Ok(out)
    }

    /// Ids of every token that starts with `prefix`.
    pub fn tokens_with_prefix<'s>(&'s self, prefix: &'s str) -> impl Iterator<Item = u32> + 's {
        let start = self.sorted.partition_point(|(t, _)| t.as_str() < prefix);
        self.sorted[start..]
            .iter()
            .take_while(move |(t, _)| t.starts_with(prefix))
            .map(|&(_, id)| id)
    }

    /// Ids of tokens consistent with having to spell `pending` next: the
    /// token is a proper prefix of `pending`, or starts with it.
    pub fn tokens_consistent_with(&self, pending: &str) -> Vec<u32> {
        let mut ids: Vec<u32> = pending
            .char_indices()
            .skip(1)
            .filter_map(|(i, _)| self.token_id(&pending[..i]))
            .collect();
        ids.extend(self.tokens_with_prefix(pending));
        ids
    }

    /// Text form: a header line carrying the vocabulary size and alphabet,
    /// then one escaped, space-separated merge pair per line in rank order.
    pub fn to_text(&self) -> String {
        let alphabet: String = self.tokens[..self.base_len].concat();
        let mut out = format!(
            "{HEADER_TAG} vocab_size={} alphabet={}\n",
            self.vocab_size(),
            escape(&alphabet)
        );
        for (a, b) in &self.merges {
            let _ = writeln!(out, "{} {}", escape(a), escape(b));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Model("empty bpe file".into()))?;
        let mut parts = header.split(' ');
        if parts.next() != Some(HEADER_TAG) {
            return Err(Error::Model(format!("bad bpe header {header:?}")));
        }
        let mut vocab_size = None;
        let mut alphabet = None;
        for p in parts {
            if let Some(v) = p.strip_prefix("vocab_size=") {
                vocab_size = v.parse::<usize>().ok();
            } else if let Some(v) = p.strip_prefix("alphabet=") {
                alphabet = Some(unescape(v)?);
            }
        }
        let (Some(vocab_size), Some(alphabet)) = (vocab_size, alphabet) else {
            return Err(Error::Model(format!("incomplete bpe header {header:?}")));
        };
        let mut model = Self::from_alphabet(alphabet.chars().collect());
        for line in lines.filter(|l| !l.is_empty()) {
            let (a, b) = line
                .split_once(' ')
                .ok_or_else(|| Error::Model(format!("bad merge line {line:?}")))?;
            let (a, b) = (unescape(a)?, unescape(b)?);
            let pair = match (model.token_id(&a), model.token_id(&b)) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(Error::Model(format!("merge parts not in vocabulary: {line:?}"))),
            };
            model.push_merge(pair);
        }
        model.rebuild_sorted();
        if model.vocab_size() != vocab_size {
            return Err(Error::Model(format!(
                "header says {vocab_size} tokens, merges produce {}",
                model.vocab_size()
            )));
        }
        Ok(model)
    }
}

fn merge_pair(syms: &[u32], pair: (u32, u32), id: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(syms.len());
    let mut i = 0;
    while i < syms.len() {
        if i + 1 < syms.len() && (syms[i], syms[i + 1]) == pair {
            out.push(id);
            i += 2;
        } else {
            out.push(syms[i]);
            i += 1;
        }
    }
    out
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            ' ' => out.push_str("\\s"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(s: &str) -> Result<String> {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        out.push(match chars.next() {
            Some('\\') => '\\',
            Some('s') => ' ',
            Some('n') => '\n',
            Some('t') => '\t',
            Some('r') => '\r',
            other => return Err(Error::Model(format!("bad escape \\{other:?} in {s:?}"))),
        });
    }
    Ok(out)
}
