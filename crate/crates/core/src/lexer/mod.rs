//! Lossless lexing of C-family source text, identifier sub-token splitting,
//! and the byte-pair-encoding codec used by the line language model.

mod bpe;

pub use bpe::BpeModel;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Identifier,
    Keyword,
    Number,
    String,
    Symbol,
    Comment,
    Whitespace,
    Newline,
}

impl TokenKind {
    pub fn is_word(self) -> bool {
        matches!(self, TokenKind::Identifier | TokenKind::Keyword)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub kind: TokenKind,
    /// Byte offset into the source. The lexer only produces byte-aligned
    /// tokens, and preprocessed text is ASCII so bytes and characters agree.
    pub offset: usize,
}

const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "false", "final", "finally",
    "float", "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "null", "package", "private", "protected", "public", "return", "short",
    "static", "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "true", "try", "var", "void", "volatile", "while",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.binary_search(&word).is_ok()
}

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '$'
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

/// Splits `text` into tokens whose concatenation is exactly `text`.
pub fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < text.len() {
        let (end, kind) = scan_token(text, i);
        debug_assert!(end > i);
        tokens.push(Token {
            text: &text[i..end],
            kind,
            offset: i,
        });
        i = end;
    }
    debug_assert_eq!(i, bytes.len());
    tokens
}

fn next_char_boundary(text: &str, i: usize) -> usize {
    let mut j = i + 1;
    while j < text.len() && !text.is_char_boundary(j) {
        j += 1;
    }
    j
}

fn scan_token(text: &str, start: usize) -> (usize, TokenKind) {
    let b = text.as_bytes();
    let c = b[start];
    match c {
        b'\n' => (start + 1, TokenKind::Newline),
        b'\r' if b.get(start + 1) == Some(&b'\n') => (start + 2, TokenKind::Newline),
        b' ' | b'\t' | b'\r' | b'\x0c' => {
            let mut j = start + 1;
            while j < b.len() && matches!(b[j], b' ' | b'\t' | b'\x0c') {
                j += 1;
            }
            (j, TokenKind::Whitespace)
        }
        b'/' if b.get(start + 1) == Some(&b'/') => {
            let mut j = start + 2;
            while j < b.len() && b[j] != b'\n' {
                j += 1;
            }
            (j, TokenKind::Comment)
        }
        b'/' if b.get(start + 1) == Some(&b'*') => {
            let end = text[start + 2..]
                .find("*/")
                .map(|k| start + 2 + k + 2)
                .unwrap_or(b.len());
            (end, TokenKind::Comment)
        }
        b'"' | b'\'' => (scan_quoted(b, start, c), TokenKind::String),
        b'0'..=b'9' => (scan_number(b, start), TokenKind::Number),
        _ if is_ident_start(c as char) => {
            let mut j = start + 1;
            while j < b.len() && is_ident_char(b[j] as char) {
                j += 1;
            }
            let kind = if is_keyword(&text[start..j]) {
                TokenKind::Keyword
            } else {
                TokenKind::Identifier
            };
            (j, kind)
        }
        _ => (next_char_boundary(text, start), TokenKind::Symbol),
    }
}

/// Quoted literal with backslash escapes. Unterminated literals stop before
/// the end of the line.
fn scan_quoted(b: &[u8], start: usize, quote: u8) -> usize {
    let mut j = start + 1;
    while j < b.len() {
        match b[j] {
            b'\\' if j + 1 < b.len() && b[j + 1] != b'\n' => j += 2,
            b'\n' => return j,
            x if x == quote => return j + 1,
            _ => j += 1,
        }
    }
    b.len().min(j)
}

fn scan_number(b: &[u8], start: usize) -> usize {
    let mut j = start + 1;
    while j < b.len() {
        let c = b[j];
        if c.is_ascii_alphanumeric() || c == b'_' {
            // exponent sign: 1e-5, 2E+3
            if (c == b'e' || c == b'E')
                && matches!(b.get(j + 1), Some(b'+') | Some(b'-'))
                && b.get(j + 2).is_some_and(|d| d.is_ascii_digit())
                && !is_hex_literal(b, start)
            {
                j += 3;
                continue;
            }
            j += 1;
        } else if c == b'.' && b.get(j + 1).is_some_and(|d| d.is_ascii_digit()) {
            j += 1;
        } else {
            break;
        }
    }
    j
}

fn is_hex_literal(b: &[u8], start: usize) -> bool {
    b[start] == b'0' && matches!(b.get(start + 1), Some(b'x') | Some(b'X'))
}

/// Splits an identifier at underscores (dropped) and camel-case boundaries.
/// Runs of capitals stay together until the capital that starts a
/// lower-case word: `HTTPServer` becomes `["HTTP", "Server"]`.
pub fn subtokens(identifier: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    for chunk in identifier.split('_').filter(|s| !s.is_empty()) {
        let chars: Vec<(usize, char)> = chunk.char_indices().collect();
        let mut start = 0;
        for k in 1..chars.len() {
            let (pos, cur) = chars[k];
            let prev = chars[k - 1].1;
            let next = chars.get(k + 1).map(|&(_, c)| c);
            let lower_to_upper = (prev.is_ascii_lowercase() || prev.is_ascii_digit()) && cur.is_ascii_uppercase();
            let acronym_end = prev.is_ascii_uppercase()
                && cur.is_ascii_uppercase()
                && next.is_some_and(|n| n.is_ascii_lowercase());
            if lower_to_upper || acronym_end {
                parts.push(&chunk[start..pos]);
                start = pos;
            }
        }
        parts.push(&chunk[start..]);
    }
    parts
}

/// The trailing identifier fragment under the cursor, or `""` when the
/// cursor does not follow an identifier character. Trailing digit runs that
/// belong to a number literal do not count.
pub fn identifier_prefix(context: &str) -> &str {
    let start = context
        .char_indices()
        .rev()
        .take_while(|&(_, c)| is_ident_char(c))
        .last()
        .map(|(i, _)| i)
        .unwrap_or(context.len());
    let run = &context[start..];
    match run.chars().next() {
        Some(c) if is_ident_start(c) => run,
        _ => "",
    }
}

/// Word boundaries used to pre-segment text for BPE: lexer tokens, except
/// that adjacent symbol tokens form one word.
pub fn bpe_words(text: &str) -> Vec<&str> {
    let mut words = Vec::new();
    let mut run_start: Option<usize> = None;
    let mut run_end = 0;
    for tok in tokenize(text) {
        if tok.kind == TokenKind::Symbol {
            if run_start.is_none() {
                run_start = Some(tok.offset);
            }
            run_end = tok.offset + tok.text.len();
            continue;
        }
        if let Some(s) = run_start.take() {
            words.push(&text[s..run_end]);
        }
        words.push(tok.text);
    }
    if let Some(s) = run_start {
        words.push(&text[s..run_end]);
    }
    words
}
