use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Semi,
    Colon,
    Caret,
    Minus,
    Arrow,
    Define,
    Eq,
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Eof => "end of input".into(),
        other => {
            let s = match other {
                Tok::LBrace => "{",
                Tok::RBrace => "}",
                Tok::LParen => "(",
                Tok::RParen => ")",
                Tok::LBrack => "[",
                Tok::RBrack => "]",
                Tok::Comma => ",",
                Tok::Semi => ";",
                Tok::Colon => ":",
                Tok::Caret => "^",
                Tok::Minus => "-",
                Tok::Arrow => "->",
                Tok::Define => ":=",
                _ => "=",
            };
            format!("`{s}`")
        }
    }
}

pub fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, col, m: String| Error::Syntax { line, column: col, message: m };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            col += i - s;
            Tok::Ident(chars[s..i].iter().collect())
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - s;
            let text: String = chars[s..i].iter().collect();
            Tok::Int(text.parse().map_err(|_| err(tl, tc, format!("integer `{text}` too large")))?)
        } else if c == '"' {
            let s = i + 1;
            let mut j = s;
            while j < chars.len() && chars[j] != '"' && chars[j] != '\n' {
                j += 1;
            }
            if j >= chars.len() || chars[j] != '"' {
                return Err(err(tl, tc, "unterminated string".into()));
            }
            col += j + 1 - i;
            i = j + 1;
            Tok::Str(chars[s..j].iter().collect())
        } else {
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let (t, n) = match (c, two.as_str()) {
                (_, "->") => (Tok::Arrow, 2),
                (_, ":=") => (Tok::Define, 2),
                ('{', _) => (Tok::LBrace, 1),
                ('}', _) => (Tok::RBrace, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                ('[', _) => (Tok::LBrack, 1),
                (']', _) => (Tok::RBrack, 1),
                (',', _) => (Tok::Comma, 1),
                (';', _) => (Tok::Semi, 1),
                (':', _) => (Tok::Colon, 1),
                ('^', _) => (Tok::Caret, 1),
                ('-', _) => (Tok::Minus, 1),
                ('=', _) => (Tok::Eq, 1),
                _ => return Err(err(tl, tc, format!("unexpected character `{c}`"))),
            };
            i += n;
            col += n;
            t
        };
        out.push(Token { tok, line: tl, col: tc });
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}
