//! Parser for sums of products such as `2*X^3 - 1/2*x*y^-1 + e11`.
//!
//! Numeric factors are coefficients; every other atom is a name. Names may
//! contain letters, digits (not in first position), `_`, `.`, `@`, `[`, `]`
//! and `'`.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse `{input}` at offset {offset}: {reason}")]
pub struct ExprError {
    pub input: String,
    pub offset: usize,
    pub reason: String,
}

/// One signed term: a product of numeric coefficients and named powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    /// Coefficient texts such as `3` or `1/2`, to be read in the target field.
    pub coefficients: Vec<String>,
    /// Named factors in order, with integer exponents.
    pub factors: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '@' | '[' | ']' | '\'')
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let err = |offset, reason: &str| ExprError {
        input: input.to_string(),
        offset,
        reason: reason.to_string(),
    };
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push((off, Tok::Plus));
                i += 1
            }
            '-' => {
                out.push((off, Tok::Minus));
                i += 1
            }
            '*' => {
                out.push((off, Tok::Star));
                i += 1
            }
            '^' => {
                out.push((off, Tok::Caret));
                i += 1
            }
            '(' => {
                out.push((off, Tok::LParen));
                i += 1
            }
            ')' => {
                out.push((off, Tok::RParen));
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '/') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|x| x.1).collect();
                if text.ends_with('/') || text.matches('/').count() > 1 {
                    return Err(err(off, "malformed number"));
                }
                out.push((off, Tok::Num(text)));
            }
            c if is_name_char(c) => {
                let start = i;
                while i < chars.len() && is_name_char(chars[i].1) {
                    i += 1;
                }
                out.push((off, Tok::Name(chars[start..i].iter().map(|x| x.1).collect())));
            }
            _ => return Err(err(off, "unexpected character")),
        }
    }
    Ok(out)
}

pub fn parse(input: &str) -> Result<Expr, ExprError> {
    let toks = lex(input)?;
    let err = |offset: usize, reason: &str| ExprError {
        input: input.to_string(),
        offset,
        reason: reason.to_string(),
    };
    let end = input.len();
    let off = |k: usize| toks.get(k).map(|t| t.0).unwrap_or(end);
    let mut terms = Vec::new();
    let mut k = 0;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    loop {
        let mut negative = false;
        while let Some((_, t @ (Tok::Plus | Tok::Minus))) = toks.get(k) {
            if *t == Tok::Minus {
                negative = !negative;
            }
            k += 1;
        }
        let mut term = Term {
            negative,
            coefficients: vec![],
            factors: vec![],
        };
        loop {
            match toks.get(k) {
                Some((_, Tok::Num(n))) => {
                    term.coefficients.push(n.clone());
                    k += 1;
                }
                Some((_, Tok::Name(n))) => {
                    k += 1;
                    let mut exp = 1i64;
                    if let Some((_, Tok::Caret)) = toks.get(k) {
                        k += 1;
                        let paren = matches!(toks.get(k), Some((_, Tok::LParen)));
                        if paren {
                            k += 1;
                        }
                        let neg = matches!(toks.get(k), Some((_, Tok::Minus)));
                        if neg {
                            k += 1;
                        }
                        match toks.get(k) {
                            Some((o, Tok::Num(e))) => {
                                let v: i64 = e.parse().map_err(|_| err(*o, "exponent must be an integer"))?;
                                exp = if neg { -v } else { v };
                                k += 1;
                            }
                            _ => return Err(err(off(k), "expected exponent")),
                        }
                        if paren {
                            if !matches!(toks.get(k), Some((_, Tok::RParen))) {
                                return Err(err(off(k), "expected `)`"));
                            }
                            k += 1;
                        }
                    }
                    term.factors.push((n.clone(), exp));
                }
                _ => return Err(err(off(k), "expected a number or a name")),
            }
            if let Some((_, Tok::Star)) = toks.get(k) {
                k += 1;
                continue;
            }
            break;
        }
        terms.push(term);
        match toks.get(k) {
            None => break,
            Some((_, Tok::Plus | Tok::Minus)) => continue,
            Some((o, _)) => return Err(err(*o, "expected `+`, `-` or `*`")),
        }
    }
    Ok(Expr { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms() {
        let e = parse("2*X^3 - 1/2*x*y^-1 + e11").unwrap();
        assert_eq!(e.terms.len(), 3);
        assert_eq!(e.terms[0].coefficients, vec!["2"]);
        assert_eq!(e.terms[0].factors, vec![("X".to_string(), 3)]);
        assert!(e.terms[1].negative);
        assert_eq!(e.terms[1].factors, vec![("x".to_string(), 1), ("y".to_string(), -1)]);
        assert_eq!(parse("X^(-2)").unwrap().terms[0].factors, vec![("X".to_string(), -2)]);
        assert_eq!(parse("1").unwrap().terms[0].factors, vec![]);
        assert!(!parse("-e1@e2 + --3").unwrap().terms[1].negative);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("").is_err());
        assert!(parse("X +").is_err());
        assert!(parse("X^Y").is_err());
        assert!(parse("2 3/").is_err());
        assert!(parse("X $ Y").is_err());
    }
}
