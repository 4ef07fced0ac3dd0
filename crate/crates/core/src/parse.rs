//! Polynomial text format.
//!
//! Grammar: integer literals, declared identifiers, `+ - * ^` and
//! parentheses, with `*` required between factors and `^` taking a
//! nonnegative integer. Whitespace is ignored. As an output-compatible
//! extension, `/` by a nonzero constant is accepted so that printed rational
//! coefficients such as `1/2*x` re-parse to the same polynomial.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;
use num_bigint::BigInt;

const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(mut self) -> Result<Vec<(usize, Tok)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((start, Tok::Plus));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((start, Tok::Minus));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((start, Tok::Star));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((start, Tok::Slash));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((start, Tok::Caret));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((start, Tok::LParen));
                    self.pos += 1;
                }
                b')' => {
                    out.push((start, Tok::RParen));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((start, Tok::Int(text.parse::<BigInt>().unwrap())));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((start, Tok::Ident(text.to_string())));
                }
                other => {
                    return Err(Error::Parse {
                        position: start,
                        message: format!("unexpected character {:?}", other as char),
                    })
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.idx += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                position: self.pos(),
                message: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.idx += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.idx += 1;
                    let at = self.pos();
                    let f = self.factor()?;
                    let c = f.constant_value().cloned().ok_or(Error::Parse {
                        position: at,
                        message: "division is only allowed by a nonzero constant".into(),
                    })?;
                    let inv = self.ring.field().inv(&c).map_err(|_| Error::Parse {
                        position: at,
                        message: "division by zero".into(),
                    })?;
                    acc = acc.mul_coeff(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.idx += 1;
            let at = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u64 = n.try_into().map_err(|_| Error::Parse {
                        position: at,
                        message: "exponent must be a nonnegative integer".into(),
                    })?;
                    if e > MAX_EXPONENT {
                        return Err(Error::Parse {
                            position: at,
                            message: format!("exponent exceeds the cap of {MAX_EXPONENT}"),
                        });
                    }
                    Ok(base.pow(e as u32))
                }
                _ => Err(Error::Parse {
                    position: at,
                    message: "expected a nonnegative integer exponent after '^'".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(
                self.ring,
                self.ring.field().from_bigint(&n),
            )),
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::Parse {
                    position: at,
                    message: format!("unknown variable {name:?}"),
                }),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(t) => Err(Error::Parse {
                position: at,
                message: format!("unexpected token {t:?}"),
            }),
            None => Err(Error::Parse {
                position: at,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parse `text` as a polynomial over `ring`.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let toks = Lexer {
        src: text.as_bytes(),
        pos: 0,
    }
    .tokens()?;
    if toks.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks,
        idx: 0,
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(Error::Parse {
            position: p.pos(),
            message: "trailing input after polynomial".into(),
        });
    }
    Ok(poly)
}
