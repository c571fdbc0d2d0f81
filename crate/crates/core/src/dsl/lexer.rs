use num::BigInt;

use super::{DslError, DslErrorKind, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Arrow,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Eq => "=",
            Tok::Arrow => "->",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            _ => "",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits `text` into tokens; `#` starts a comment running to the end of the line.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = Pos { line, col };
        let advance = |k: &mut usize, col: &mut usize, n: usize| {
            *k += n;
            *col += n;
        };
        if c == '\n' {
            k += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(&mut k, &mut col, 1);
            continue;
        }
        if c == '#' {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            col += k - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..k].iter().collect()),
                pos,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            col += k - start;
            if k < chars.len() && chars[k] == '.' {
                return Err(DslError::new(
                    DslErrorKind::Syntax,
                    Pos { line, col },
                    "decimal literals are not accepted; write rationals as p/q",
                ));
            }
            let digits: String = chars[start..k].iter().collect();
            let value = digits.parse::<BigInt>().expect("ascii digits");
            out.push(Token {
                tok: Tok::Int(value),
                pos,
            });
            continue;
        }
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            ':' => Tok::Colon,
            '=' => Tok::Eq,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '-' if chars.get(k + 1) == Some(&'>') => {
                advance(&mut k, &mut col, 2);
                out.push(Token {
                    tok: Tok::Arrow,
                    pos,
                });
                continue;
            }
            '-' => Tok::Minus,
            other => {
                return Err(DslError::new(
                    DslErrorKind::Syntax,
                    pos,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        advance(&mut k, &mut col, 1);
        out.push(Token { tok, pos });
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<Tok> {
        tokenize(text).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn arrows_and_minus() {
        assert_eq!(
            kinds("u -> -v"),
            vec![
                Tok::Ident("u".into()),
                Tok::Arrow,
                Tok::Minus,
                Tok::Ident("v".into()),
                Tok::Eof
            ]
        );
    }

    #[test]
    fn positions_skip_comments() {
        let toks = tokenize("# header\n  top 6;").unwrap();
        assert_eq!(toks[0].pos, Pos { line: 2, col: 3 });
        assert_eq!(toks[1].pos, Pos { line: 2, col: 7 });
    }

    #[test]
    fn rejects_floats_and_strays() {
        let e = tokenize("1.5").unwrap_err();
        assert_eq!(e.kind, DslErrorKind::Syntax);
        let e = tokenize("a $ b").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
    }
}
