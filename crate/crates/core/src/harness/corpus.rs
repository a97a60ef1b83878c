//! Corpus files: one ring expression per line, `#` starts a comment.

use std::fmt;

use crate::dsl::{parse_ring, RingExpr};
use crate::error::SyntaxError;

const DEFAULT: &str = include_str!("../../corpus/default.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusError {
    /// 1-based line number.
    pub line: usize,
    pub error: SyntaxError,
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for CorpusError {}

pub fn parse_corpus(text: &str) -> Result<Vec<RingExpr>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let expr = parse_ring(line).map_err(|error| CorpusError { line: i + 1, error })?;
        out.push(expr);
    }
    Ok(out)
}

pub fn default_corpus_text() -> &'static str {
    DEFAULT
}

pub fn default_corpus() -> Vec<RingExpr> {
    parse_corpus(DEFAULT).expect("bundled corpus parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_contents() {
        let c = default_corpus();
        let texts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        for want in ["Z2", "Z100", "Z10 x Z10", "Z2 x Z50", "Z2 x Z2 x Z2", "LocalAlg(3)", "Idealize(Z8, (0))"] {
            assert!(texts.iter().any(|t| t == want), "{want}");
        }
        assert_eq!(texts.iter().filter(|t| t.starts_with('Z') && !t.contains(' ')).count(), 99);
        assert_eq!(texts.iter().filter(|t| t.starts_with("Idealize")).count(), 12);
    }

    #[test]
    fn comments_and_errors() {
        let c = parse_corpus("# header\n\nZ4  # trailing\n  Z2 x Z3\n").unwrap();
        assert_eq!(c.len(), 2);
        assert!(parse_corpus("").unwrap().is_empty());
        let e = parse_corpus("Z4\nZ4 x\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
