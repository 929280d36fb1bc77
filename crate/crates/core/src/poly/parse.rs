//! Parser for the polynomial expression grammar:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. Printing (`Display` on `Polynomial`) emits
//! grevlex-descending terms with explicit `*` and `^`, and
//! `parse(print(p)) == p` on canonical forms.

use super::{Monomial, Polynomial, Rational, VarSet};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            '+' => {
                toks.push((start, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((start, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((start, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((start, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((start, Tok::Slash));
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigInt = text[i..j].parse().expect("digit run");
                toks.push((start, Tok::Int(n)));
                i = j;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len()
                    && ((bytes[j] as char).is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                toks.push((start, Tok::Ident(text[i..j].to_string())));
                i = j;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: start,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a VarSet,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.here(),
            message: message.into(),
        }
    }

    fn expect_uint(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.syntax(format!("expected {what}")))
            }
        }
    }

    /// factor := var ('^' uint)?
    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        let pos = self.here();
        let name = match self.bump() {
            Some(Tok::Ident(name)) => name,
            _ => {
                self.pos = self.pos.saturating_sub(1);
                return Err(self.syntax("expected variable"));
            }
        };
        let idx = self
            .vars
            .index_of(&name)
            .ok_or(ParseError::UnknownVariable { pos, name })?;
        let mut exp = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let n = self.expect_uint("exponent")?;
            exp = u32::try_from(&n).map_err(|_| self.syntax("exponent too large"))?;
        }
        Ok((idx, exp))
    }

    /// term := coeff ('*' factor)* | factor ('*' factor)*
    fn term(&mut self, sign_neg: bool) -> Result<(Monomial, Rational), ParseError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.vars.len()];
        match self.peek() {
            Some(Tok::Int(_)) => {
                let n = self.expect_uint("integer")?;
                let mut c = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let d = self.expect_uint("denominator")?;
                    if d.is_zero() {
                        return Err(self.syntax("zero denominator"));
                    }
                    c /= Rational::from_integer(d);
                }
                coeff = c;
            }
            Some(Tok::Ident(_)) => {
                let (i, e) = self.factor()?;
                exps[i] += e;
            }
            _ => return Err(self.syntax("expected term")),
        }
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let (i, e) = self.factor()?;
            exps[i] += e;
        }
        if sign_neg {
            coeff = -coeff;
        }
        Ok((Monomial::new(exps), coeff))
    }
}

/// Parses `text` into a canonical polynomial in the given variables.
pub fn parse(text: &str, vars: &VarSet) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        vars,
        end: text.len(),
    };
    let mut out = Polynomial::zero(vars);
    let mut neg = false;
    if parser.peek() == Some(&Tok::Minus) {
        parser.bump();
        neg = true;
    } else if parser.peek() == Some(&Tok::Plus) {
        parser.bump();
    }
    loop {
        let (m, c) = parser.term(neg)?;
        out = out.add(&Polynomial::term(vars, m, c));
        match parser.peek() {
            None => break,
            Some(Tok::Plus) => {
                parser.bump();
                neg = false;
            }
            Some(Tok::Minus) => {
                parser.bump();
                neg = true;
            }
            Some(_) => return Err(parser.syntax("expected `+` or `-`")),
        }
    }
    Ok(out)
}
