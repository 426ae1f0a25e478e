//! Tokens shared by the three formats.

use crate::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Num(u64),
    Sym(&'static str),
    Newline,
    Eof,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
    pub len: usize,
}

const SYMBOLS: &[&str] = &[
    ":=", "->", "<-", "==", "\\", ".", "(", ")", ",", ";", "=", "+", "-", "*", "×", "<", "~", "&",
    "|", "?", ":", "{", "}", "/",
];

/// Splits `text` into tokens. With `newlines`, line breaks outside
/// brackets become [`Tok::Newline`].
pub(crate) fn tokenize(text: &str, file: &str, newlines: bool) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut last = (1, 1);
    for (i, line) in text.split('\n').enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let lineno = i + 1;
        if i > 0 && newlines && depth == 0 {
            if let Some(prev) = out.last() {
                let prev: &Token = prev;
                if prev.tok != Tok::Newline {
                    out.push(Token { tok: Tok::Newline, line: last.0, col: last.1, len: 0 });
                }
            }
        }
        let mut c = 0;
        while c < chars.len() {
            let ch = chars[c];
            let col = c + 1;
            if ch == '#' {
                break;
            }
            if ch.is_whitespace() {
                c += 1;
                continue;
            }
            if ch.is_ascii_digit() {
                let start = c;
                while c < chars.len() && chars[c].is_ascii_digit() {
                    c += 1;
                }
                let digits: String = chars[start..c].iter().collect();
                let n = digits.parse().map_err(|_| ParseError {
                    span: SourceSpan { file: file.into(), line: lineno, col_start: col, col_end: c + 1 },
                    message: format!("numeral {digits} is too large"),
                    expected: vec![],
                })?;
                out.push(Token { tok: Tok::Num(n), line: lineno, col, len: c - start });
                continue;
            }
            if ch == 'λ' {
                out.push(Token { tok: Tok::Sym("\\"), line: lineno, col, len: 1 });
                c += 1;
                continue;
            }
            if ch.is_alphabetic() || ch == '_' {
                let start = c;
                while c < chars.len()
                    && chars[c] != 'λ'
                    && (chars[c].is_alphanumeric() || chars[c] == '_' || chars[c] == '\'')
                {
                    c += 1;
                }
                let word: String = chars[start..c].iter().collect();
                out.push(Token { tok: Tok::Ident(word), line: lineno, col, len: c - start });
                continue;
            }
            let rest: String = chars[c..].iter().take(2).collect();
            let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
                return Err(ParseError {
                    span: SourceSpan { file: file.into(), line: lineno, col_start: col, col_end: col + 1 },
                    message: format!("unexpected character {ch:?}"),
                    expected: vec![],
                });
            };
            let sym: &'static str = sym;
            match sym {
                "(" | "{" => depth += 1,
                ")" | "}" => depth = depth.saturating_sub(1),
                _ => {}
            }
            let len = sym.chars().count();
            out.push(Token { tok: Tok::Sym(sym), line: lineno, col, len });
            c += len;
        }
        last = (lineno, chars.len() + 1);
    }
    out.push(Token { tok: Tok::Eof, line: last.0, col: last.1, len: 0 });
    Ok(out)
}

/// Cursor over tokens with error helpers.
pub(crate) struct Cursor {
    pub toks: Vec<Token>,
    pub pos: usize,
    pub file: String,
}

impl Cursor {
    pub fn new(text: &str, file: &str, newlines: bool) -> Result<Self, ParseError> {
        Ok(Cursor { toks: tokenize(text, file, newlines)?, pos: 0, file: file.to_string() })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    pub fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn at_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    pub fn at_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(x) if x == w)
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if self.at_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn eat_word(&mut self, w: &str) -> bool {
        if self.at_word(w) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn skip_newlines(&mut self) {
        while *self.peek() == Tok::Newline {
            self.bump();
        }
    }

    pub fn span_here(&self) -> SourceSpan {
        let t = &self.toks[self.pos];
        SourceSpan { file: self.file.clone(), line: t.line, col_start: t.col, col_end: t.col + t.len }
    }

    pub fn error(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            span: self.span_here(),
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let t = &self.toks[pos];
        ParseError {
            span: SourceSpan { file: self.file.clone(), line: t.line, col_start: t.col, col_end: t.col + t.len },
            message: message.into(),
            expected: vec![],
        }
    }

    pub fn unexpected(&self, expected: &[&str]) -> ParseError {
        let found = match self.peek() {
            Tok::Ident(x) => format!("identifier {x}"),
            Tok::Num(n) => format!("numeral {n}"),
            Tok::Sym(s) => format!("'{s}'"),
            Tok::Newline => "end of line".to_string(),
            Tok::Eof => "end of input".to_string(),
        };
        self.error(format!("unexpected {found}"), expected)
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("'{s}'")]))
        }
    }

    pub fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(x) => {
                self.bump();
                Ok(x)
            }
            _ => Err(self.unexpected(&[what])),
        }
    }

    pub fn expect_num(&mut self) -> Result<u64, ParseError> {
        match *self.peek() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected(&["numeral"])),
        }
    }
}
