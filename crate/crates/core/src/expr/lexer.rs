use num_bigint::BigInt;
use num_traits::Zero;

use super::ParseError;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub(super) enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Num(r) => format!("number `{r}`"),
            Tok::Ident(s) => format!("name `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

/// Token with its 1-based start column.
pub(super) type Spanned = (Tok, usize);

pub(super) fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let ch = chars[pos];
        let col = pos + 1;
        if ch.is_whitespace() {
            pos += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            pos += 1;
        } else if ch.is_ascii_digit() {
            let (numer, next) = digits(&chars, pos);
            pos = next;
            let mut denom = BigInt::from(1);
            if chars.get(pos) == Some(&'/') {
                if !chars.get(pos + 1).is_some_and(char::is_ascii_digit) {
                    return Err(ParseError {
                        column: pos + 2,
                        found: chars
                            .get(pos + 1)
                            .map_or("end of input".into(), |c| format!("`{c}`")),
                        expected: vec!["denominator digits".into()],
                    });
                }
                let (d, next) = digits(&chars, pos + 1);
                if d.is_zero() {
                    return Err(ParseError {
                        column: pos + 2,
                        found: "zero denominator".into(),
                        expected: vec!["nonzero denominator".into()],
                    });
                }
                denom = d;
                pos = next;
            }
            out.push((Tok::Num(Rational::new(numer, denom)), col));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = pos;
            while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
                pos += 1;
            }
            out.push((Tok::Ident(chars[start..pos].iter().collect()), col));
        } else {
            return Err(ParseError {
                column: col,
                found: format!("character `{ch}`"),
                expected: vec!["number".into(), "name".into(), "operator".into()],
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

fn digits(chars: &[char], mut pos: usize) -> (BigInt, usize) {
    let start = pos;
    while pos < chars.len() && chars[pos].is_ascii_digit() {
        pos += 1;
    }
    let s: String = chars[start..pos].iter().collect();
    (s.parse().expect("ascii digits"), pos)
}
