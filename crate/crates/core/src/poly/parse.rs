//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := var | rational | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Products and powers are expanded eagerly, so the result is always in
//! canonical form. Juxtaposition is rejected; `2x` is a syntax error.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Coefficient, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), start));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: Arc<[String]>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => {
                let e: u32 = n.try_into().map_err(|_| Error::BadExponent { pos })?;
                Ok(base.pow(e))
            }
            _ => Err(Error::BadExponent { pos }),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump().0 {
            Tok::Ident(name) => Polynomial::var(self.vars.clone(), &name)
                .map_err(|_| Error::UnknownIdentifier { name, pos }),
            Tok::Int(num) => {
                let mut value = Coefficient::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump().0 {
                        Tok::Int(den) if !den.is_zero() => {
                            value /= Coefficient::from_integer(den);
                        }
                        Tok::Int(_) => {
                            return Err(Error::Syntax {
                                pos: dpos,
                                message: "zero denominator".into(),
                            })
                        }
                        _ => {
                            return Err(Error::Syntax {
                                pos: dpos,
                                message: "expected unsigned integer denominator".into(),
                            })
                        }
                    }
                }
                Ok(Polynomial::constant(self.vars.clone(), value))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax {
                pos,
                message: "unexpected end of input".into(),
            }),
            other => Err(Error::Syntax {
                pos,
                message: format!("unexpected token {other:?}"),
            }),
        }
    }
}

/// Parse `text` into a canonical polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<Polynomial> {
    let ring: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
    parse_in_ring(text, ring)
}

pub fn parse_in_ring(text: &str, vars: Arc<[String]>) -> Result<Polynomial> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        vars,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax(match p.peek() {
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
                "implicit multiplication is not allowed; use `*`".to_string()
            }
            t => format!("unexpected token {t:?}"),
        });
    }
    Ok(out)
}
