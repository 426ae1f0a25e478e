use std::fmt;

/// A position in a source file. Lines and columns count from 1; `col_end`
/// is one past the last character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceSpan {
    pub file: String,
    pub line: usize,
    pub col_start: usize,
    pub col_end: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.line, self.col_start)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl ParseError {
    /// Whether the span lies within `text`.
    pub fn span_within(&self, text: &str) -> bool {
        let lines: Vec<&str> = text.split('\n').collect();
        let s = &self.span;
        s.line >= 1
            && s.line <= lines.len()
            && s.col_start >= 1
            && s.col_start <= s.col_end
            && s.col_end <= lines[s.line - 1].chars().count() + 1
    }
}
