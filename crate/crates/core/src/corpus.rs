//! Dataset filtering, preprocessing, and train/simulation/test splitting.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use log::warn;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexer::{tokenize, Token, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Simulation,
    Test,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::Train, Split::Simulation, Split::Test];

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Simulation => "simulation",
            Split::Test => "test",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeFile {
    /// Relative path with `/` separators; doubles as the file id.
    pub path: String,
    pub text: String,
    pub project_id: String,
    pub split: Option<Split>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PreprocessConfig {
    pub string_len_threshold: usize,
    pub string_freq_threshold: u64,
    pub placeholder_string: String,
    pub placeholder_number: String,
    /// Excise filtered methods from files. Off by default: simulation replays
    /// whole files.
    pub method_filtering: bool,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            string_len_threshold: 32,
            string_freq_threshold: 10,
            placeholder_string: "\"__STR__\"".to_string(),
            placeholder_number: "__NUM__".to_string(),
            method_filtering: false,
        }
    }
}

impl PreprocessConfig {
    pub fn validate(&self) -> Result<()> {
        if self.string_len_threshold == 0 || self.string_freq_threshold == 0 {
            return Err(Error::Config("literal thresholds must be positive".into()));
        }
        for p in [&self.placeholder_string, &self.placeholder_number] {
            let toks = tokenize(p);
            if toks.len() != 1 || p.chars().count() > self.string_len_threshold {
                return Err(Error::Config(format!(
                    "placeholder {p:?} must be a single short token"
                )));
            }
        }
        Ok(())
    }
}

/// Keeps a file unless its name contains "test" in any case.
pub fn filter_file(path: &Path) -> bool {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().to_lowercase())
        .unwrap_or_default();
    !name.contains("test")
}

const DROPPED_METHODS: [&str; 4] = ["toString", "equals", "finalize", "clone"];
const MAX_METHOD_LINES: usize = 20;

/// Keeps a method unless it is one of the boilerplate overrides or longer
/// than twenty lines.
pub fn filter_method(method_name: &str, line_count: usize) -> bool {
    !DROPPED_METHODS.contains(&method_name) && line_count <= MAX_METHOD_LINES
}

/// Drops every character outside ASCII letters, digits, punctuation, space,
/// tab and newline.
pub fn remove_non_english(text: &str) -> String {
    text.chars()
        .filter(|&c| c.is_ascii_alphanumeric() || c.is_ascii_punctuation() || matches!(c, ' ' | '\t' | '\n'))
        .collect()
}

const NON_SIGNATURE_WORDS: &[&str] = &[
    "assert", "case", "catch", "do", "else", "for", "if", "new", "return", "switch",
    "synchronized", "throw", "try", "while",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LineKind {
    Blank,
    /// Only comments start on this line.
    Comment,
    /// Covered by a block comment that started on an earlier line.
    Continuation,
    Annotation,
    Code,
}

struct LineIndex<'a> {
    tokens: Vec<Token<'a>>,
    /// line of each token's first character
    token_line: Vec<usize>,
    kinds: Vec<LineKind>,
    /// token indices of the significant (non-blank) tokens starting per line
    significant: Vec<Vec<usize>>,
}

impl<'a> LineIndex<'a> {
    fn new(text: &'a str) -> Self {
        let tokens = tokenize(text);
        let mut token_line = Vec::with_capacity(tokens.len());
        let n_lines = text.matches('\n').count() + 1;
        let mut significant = vec![Vec::new(); n_lines];
        let mut covered = vec![false; n_lines];
        let mut line = 0;
        for (i, tok) in tokens.iter().enumerate() {
            token_line.push(line);
            if !matches!(tok.kind, TokenKind::Whitespace | TokenKind::Newline) {
                significant[line].push(i);
            }
            let breaks = tok.text.matches('\n').count();
            if tok.kind == TokenKind::Comment {
                for c in covered.iter_mut().skip(line + 1).take(breaks) {
                    *c = true;
                }
            }
            line += breaks;
        }
        let kinds = (0..n_lines)
            .map(|l| {
                let sig = &significant[l];
                if sig.is_empty() {
                    if covered[l] {
                        LineKind::Continuation
                    } else {
                        LineKind::Blank
                    }
                } else if sig.iter().all(|&i| tokens[i].kind == TokenKind::Comment) {
                    LineKind::Comment
                } else if tokens[sig[0]].text == "@" {
                    LineKind::Annotation
                } else {
                    LineKind::Code
                }
            })
            .collect();
        LineIndex {
            tokens,
            token_line,
            kinds,
            significant,
        }
    }

    /// Name of the function declared on `line`, if the line looks like a
    /// method or function signature: at least two words before the first
    /// `(`, the last of them an identifier, no assignment or member access,
    /// and the line is not a statement.
    fn signature_name(&self, line: usize) -> Option<&'a str> {
        if self.kinds[line] != LineKind::Code {
            return None;
        }
        let sig: Vec<&Token<'a>> = self.significant[line]
            .iter()
            .map(|&i| &self.tokens[i])
            .filter(|t| t.kind != TokenKind::Comment)
            .collect();
        let paren = sig.iter().position(|t| t.text == "(")?;
        if paren < 2 || sig.last().is_some_and(|t| t.text == ";") {
            return None;
        }
        let head = &sig[..paren];
        if head.iter().any(|t| t.text == "=" || t.text == "." || NON_SIGNATURE_WORDS.contains(&t.text)) {
            return None;
        }
        let name = head[paren - 1];
        (name.kind == TokenKind::Identifier).then_some(name.text)
    }

    fn line_of_last_char(&self, tok: usize) -> usize {
        self.token_line[tok] + self.tokens[tok].text.matches('\n').count()
    }

    /// Comment tokens directly above a signature (annotations may sit in
    /// between) and directly below it.
    fn kept_comments(&self) -> HashSet<usize> {
        let mut keep = HashSet::new();
        let n = self.kinds.len();
        for line in 0..n {
            if self.signature_name(line).is_none() {
                continue;
            }
            let mut l = line;
            while l > 0 {
                l -= 1;
                match self.kinds[l] {
                    LineKind::Comment => keep.extend(self.significant[l].iter().copied()),
                    LineKind::Continuation | LineKind::Annotation => {}
                    LineKind::Blank | LineKind::Code => break,
                }
            }
            let opens_body = self.significant[line]
                .iter()
                .rev()
                .map(|&i| &self.tokens[i])
                .find(|t| t.kind != TokenKind::Comment)
                .is_some_and(|t| t.text == "{" || t.text == ":");
            if opens_body {
                let mut l = line + 1;
                while l < n && matches!(self.kinds[l], LineKind::Comment | LineKind::Continuation) {
                    keep.extend(self.significant[l].iter().copied());
                    l += 1;
                }
            }
        }
        keep
    }
}

/// Removes comments except those adjacent to a method signature: pure
/// comment lines right above it, and the comment block opening its body.
/// Every non-comment byte is preserved.
pub fn strip_comments(text: &str) -> String {
    let index = LineIndex::new(text);
    let keep = index.kept_comments();
    let mut out = String::with_capacity(text.len());
    for (i, tok) in index.tokens.iter().enumerate() {
        if tok.kind != TokenKind::Comment {
            out.push_str(tok.text);
            continue;
        }
        if tok.text.starts_with("/*") && (tok.text.len() < 4 || !tok.text.ends_with("*/")) {
            warn!("unterminated block comment at byte {}; dropped to end of file", tok.offset);
            continue;
        }
        if keep.contains(&i) {
            out.push_str(tok.text);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodSpan {
    pub name: String,
    /// first line (annotations and leading comments included)
    pub start_line: usize,
    pub signature_line: usize,
    /// line holding the closing brace
    pub end_line: usize,
}

impl MethodSpan {
    pub fn line_count(&self) -> usize {
        self.end_line - self.signature_line + 1
    }
}

/// Locates brace-delimited method bodies by signature heuristics.
pub fn find_methods(text: &str) -> Vec<MethodSpan> {
    let index = LineIndex::new(text);
    let mut spans = Vec::new();
    let mut line = 0;
    while line < index.kinds.len() {
        let Some(name) = index.signature_name(line) else {
            line += 1;
            continue;
        };
        // first `{` at or after the signature line, then its match
        let first = index.significant[line][0];
        let mut depth = 0usize;
        let mut end = None;
        let mut opened = false;
        for i in first..index.tokens.len() {
            match index.tokens[i].text {
                "{" => {
                    depth += 1;
                    opened = true;
                }
                "}" if opened => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(index.line_of_last_char(i));
                        break;
                    }
                }
                ";" if !opened => break,
                _ => {}
            }
        }
        let Some(end_line) = end else {
            line += 1;
            continue;
        };
        let mut start_line = line;
        while start_line > 0
            && matches!(
                index.kinds[start_line - 1],
                LineKind::Comment | LineKind::Continuation | LineKind::Annotation
            )
        {
            start_line -= 1;
        }
        spans.push(MethodSpan {
            name: name.to_string(),
            start_line,
            signature_line: line,
            end_line,
        });
        line = end_line + 1;
    }
    spans
}

/// Deletes the lines of every method rejected by [`filter_method`].
pub fn remove_filtered_methods(text: &str) -> String {
    let drop: Vec<(usize, usize)> = find_methods(text)
        .into_iter()
        .filter(|m| !filter_method(&m.name, m.line_count()))
        .map(|m| (m.start_line, m.end_line))
        .collect();
    if drop.is_empty() {
        return text.to_string();
    }
    text.split_inclusive('\n')
        .enumerate()
        .filter(|(l, _)| !drop.iter().any(|&(s, e)| (s..=e).contains(l)))
        .map(|(_, line)| line)
        .collect()
}

/// Occurrence counts of string and number literals.
pub fn literal_counts<S: AsRef<str>>(texts: &[S]) -> HashMap<String, u64> {
    let mut counts = HashMap::new();
    for text in texts {
        for tok in tokenize(text.as_ref()) {
            if matches!(tok.kind, TokenKind::String | TokenKind::Number) {
                *counts.entry(tok.text.to_string()).or_insert(0) += 1;
            }
        }
    }
    counts
}

/// Replaces literals that are both long and rare with a placeholder token.
pub fn replace_literals(text: &str, cfg: &PreprocessConfig, literal_counts: &HashMap<String, u64>) -> String {
    let mut out = String::with_capacity(text.len());
    for tok in tokenize(text) {
        let placeholder = match tok.kind {
            TokenKind::String => &cfg.placeholder_string,
            TokenKind::Number => &cfg.placeholder_number,
            _ => {
                out.push_str(tok.text);
                continue;
            }
        };
        let long = tok.text.chars().count() > cfg.string_len_threshold;
        let rare = literal_counts.get(tok.text).copied().unwrap_or(0) < cfg.string_freq_threshold;
        out.push_str(if long && rare { placeholder } else { tok.text });
    }
    out
}

/// The per-file part of preprocessing, which needs no corpus statistics.
pub fn clean_text(text: &str, cfg: &PreprocessConfig) -> String {
    let text = remove_non_english(text);
    let text = if cfg.method_filtering {
        remove_filtered_methods(&text)
    } else {
        text
    };
    strip_comments(&text)
}

/// Assigns splits deterministically, stratified by project. Split sizes
/// follow `ratios` by largest-remainder rounding. Each project first gets
/// the whole-file share of every split; the leftover files go, project by
/// project, to the split that still needs files and is furthest below the
/// project's exact share. Files within a project are shuffled before they
/// are dealt.
pub fn split_corpus(mut files: Vec<CodeFile>, ratios: [f64; 3], seed: u64) -> Result<Vec<CodeFile>> {
    if files.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if ratios.iter().any(|r| !(0.0..=1.0).contains(r)) || (ratios.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
        return Err(Error::Config(format!("split ratios {ratios:?} must be non-negative and sum to 1")));
    }
    files.sort_by(|a, b| a.path.cmp(&b.path));
    let targets = apportion(files.len(), ratios);

    let mut by_project: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, f) in files.iter().enumerate() {
        by_project.entry(f.project_id.as_str()).or_default().push(i);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut groups: Vec<Vec<usize>> = by_project.into_values().collect();
    for g in &mut groups {
        g.shuffle(&mut rng);
    }
    let mut counts: Vec<[usize; 3]> = groups
        .iter()
        .map(|g| {
            let mut c = [0usize; 3];
            for (s, slot) in c.iter_mut().enumerate() {
                *slot = (ratios[s] * g.len() as f64 + 1e-9).floor() as usize;
            }
            c
        })
        .collect();
    let mut deficit = [0usize; 3];
    for s in 0..3 {
        deficit[s] = targets[s] - counts.iter().map(|c| c[s]).sum::<usize>();
    }
    for (g, c) in groups.iter().zip(counts.iter_mut()) {
        while c.iter().sum::<usize>() < g.len() {
            let s = (0..3)
                .filter(|&s| deficit[s] > 0)
                .max_by(|&a, &b| {
                    let da = ratios[a] * g.len() as f64 - c[a] as f64;
                    let db = ratios[b] * g.len() as f64 - c[b] as f64;
                    da.total_cmp(&db).then(b.cmp(&a))
                })
                .expect("deficits cover the leftover files");
            c[s] += 1;
            deficit[s] -= 1;
        }
    }
    let mut splits = vec![Split::Train; files.len()];
    for (g, c) in groups.iter().zip(&counts) {
        let mut it = g.iter();
        for s in 0..3 {
            for &fi in it.by_ref().take(c[s]) {
                splits[fi] = Split::ALL[s];
            }
        }
    }
    for (f, s) in files.iter_mut().zip(splits) {
        f.split = Some(s);
    }
    Ok(files)
}

/// Largest-remainder rounding of `n * ratios`.
fn apportion(n: usize, ratios: [f64; 3]) -> [usize; 3] {
    let exact: Vec<f64> = ratios.iter().map(|r| r * n as f64).collect();
    let mut counts = [0usize; 3];
    for (c, e) in counts.iter_mut().zip(&exact) {
        *c = (e + 1e-9).floor() as usize;
    }
    let mut rest = n - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| {
        let ra = exact[a] - counts[a] as f64;
        let rb = exact[b] - counts[b] as f64;
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    for &s in order.iter().cycle() {
        if rest == 0 {
            break;
        }
        counts[s] += 1;
        rest -= 1;
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub path: String,
    pub project_id: String,
    pub split: Split,
    pub byte_length: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub method_filtering: bool,
    pub files: Vec<ManifestEntry>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub files: Vec<CodeFile>,
    pub method_filtering: bool,
}

impl Corpus {
    pub fn split(&self, split: Split) -> impl Iterator<Item = &CodeFile> {
        self.files.iter().filter(move |f| f.split == Some(split))
    }

    pub fn manifest(&self) -> CorpusManifest {
        CorpusManifest {
            method_filtering: self.method_filtering,
            files: self
                .files
                .iter()
                .map(|f| ManifestEntry {
                    path: f.path.clone(),
                    project_id: f.project_id.clone(),
                    split: f.split.expect("split assigned"),
                    byte_length: f.text.len(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IngestOptions {
    pub extensions: Vec<String>,
    pub ratios: [f64; 3],
    pub seed: u64,
    pub preprocess: PreprocessConfig,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            extensions: vec!["java".into()],
            ratios: [0.6, 0.2, 0.2],
            seed: 0,
            preprocess: PreprocessConfig::default(),
        }
    }
}

fn collect_files(dir: &Path, out: &mut Vec<PathBuf>) -> Result<()> {
    let mut entries: Vec<_> = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    entries.sort();
    for path in entries {
        if path.is_dir() {
            collect_files(&path, out)?;
        } else {
            out.push(path);
        }
    }
    Ok(())
}

/// Reads, filters, cleans and splits every source file under `root`. The
/// first path component below `root` names the project.
pub fn ingest(root: &Path, opts: &IngestOptions) -> Result<Corpus> {
    opts.preprocess.validate()?;
    let mut paths = Vec::new();
    collect_files(root, &mut paths)?;
    let mut files = Vec::new();
    for path in paths {
        let ext_ok = path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| opts.extensions.iter().any(|x| x == e));
        if !ext_ok || !filter_file(&path) {
            continue;
        }
        let raw = match fs::read(&path) {
            Ok(bytes) => String::from_utf8_lossy(&bytes).into_owned(),
            Err(e) => {
                warn!("skipping unreadable file {}: {e}", path.display());
                continue;
            }
        };
        let rel = path.strip_prefix(root).expect("walked under root");
        let rel_str = rel
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        let project_id = rel_str.split('/').next().unwrap_or_default().to_string();
        files.push(CodeFile {
            path: rel_str,
            text: clean_text(&raw, &opts.preprocess),
            project_id,
            split: None,
        });
    }
    let mut files = split_corpus(files, opts.ratios, opts.seed)?;
    let train: Vec<&str> = files
        .iter()
        .filter(|f| f.split == Some(Split::Train))
        .map(|f| f.text.as_str())
        .collect();
    let counts = literal_counts(&train);
    for f in &mut files {
        f.text = replace_literals(&f.text, &opts.preprocess, &counts);
    }
    Ok(Corpus {
        files,
        method_filtering: opts.preprocess.method_filtering,
    })
}
