//! Polynomial text grammar and canonical printer.
//!
//! Grammar: signed terms joined by `+` and `-`; a term is an optional
//! integer or integer/integer coefficient followed by `*`-separated factors
//! `var` or `var^int`. Whitespace insensitive, variable names case-sensitive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::coeff::{is_negative, Coeff};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token with its starting byte offset; None at end of input.
    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.src[self.pos];
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let s = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Int(s.parse::<BigInt>().unwrap())
            }
            b if b.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let s = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                Tok::Ident(s)
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{}`", other as char),
                })
            }
        };
        Ok(Some((start, tok)))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<Option<(usize, Tok)>>,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Result<Option<&(usize, Tok)>> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next()?);
        }
        Ok(self.peeked.as_ref().unwrap().as_ref())
    }

    fn advance(&mut self) -> Result<Option<(usize, Tok)>> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lexer.next(),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(usize, BigInt)> {
        match self.advance()? {
            Some((p, Tok::Int(n))) => Ok((p, n)),
            Some((p, _)) => Err(Error::Syntax {
                position: p,
                message: format!("expected {}", what),
            }),
            None => Err(Error::Syntax {
                position: self.lexer.pos,
                message: format!("expected {}, found end of input", what),
            }),
        }
    }
}

/// Parse into an uncanonicalized term list. Exposed so that weight-search
/// helpers can inspect exponent vectors before a grading exists.
pub fn parse_raw_terms(
    characteristic: u32,
    vars: &[String],
    src: &str,
) -> Result<Vec<(Monomial, Coeff)>> {
    let mut parser = Parser {
        lexer: Lexer::new(src),
        peeked: None,
    };
    let arity = vars.len();
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    let mut first = true;
    loop {
        // sign
        let mut negative = false;
        match parser.peek()? {
            None if first => {
                return Err(Error::Syntax {
                    position: 0,
                    message: "empty polynomial".to_string(),
                })
            }
            None => break,
            Some((_, Tok::Plus)) => {
                parser.advance()?;
            }
            Some((_, Tok::Minus)) => {
                negative = true;
                parser.advance()?;
            }
            Some((p, t)) if !first => {
                let p = *p;
                return Err(Error::Syntax {
                    position: p,
                    message: format!("expected `+` or `-`, found {:?}", t),
                });
            }
            _ => {}
        }
        first = false;

        // optional coefficient
        let mut num: Option<BigInt> = None;
        let mut den = BigInt::from(1);
        if let Some((_, Tok::Int(_))) = parser.peek()? {
            let (_, n) = parser.expect_int("integer")?;
            num = Some(n);
            if let Some((_, Tok::Slash)) = parser.peek()? {
                parser.advance()?;
                let (dp, d) = parser.expect_int("denominator integer")?;
                if d.is_zero() {
                    return Err(Error::Syntax {
                        position: dp,
                        message: "zero denominator".to_string(),
                    });
                }
                den = d;
            }
        }

        // factors
        let mut exps = vec![0u32; arity];
        let mut saw_factor = false;
        loop {
            let want_star = num.is_some() || saw_factor;
            match parser.peek()? {
                Some((_, Tok::Star)) if want_star => {
                    parser.advance()?;
                }
                Some((p, Tok::Ident(_))) if want_star => {
                    let p = *p;
                    return Err(Error::Syntax {
                        position: p,
                        message: "expected `*` between factors".to_string(),
                    });
                }
                Some((_, Tok::Ident(_))) => {}
                _ => break,
            }
            match parser.advance()? {
                Some((p, Tok::Ident(name))) => {
                    let idx = vars.iter().position(|v| *v == name).ok_or(
                        Error::UnknownVariable {
                            position: p,
                            name: name.clone(),
                        },
                    )?;
                    let mut e: u32 = 1;
                    if let Some((_, Tok::Caret)) = parser.peek()? {
                        parser.advance()?;
                        let (ep, n) = parser.expect_int("exponent integer")?;
                        e = n.to_u32().ok_or(Error::Syntax {
                            position: ep,
                            message: "exponent exceeds 32 bits".to_string(),
                        })?;
                    }
                    exps[idx] = exps[idx].checked_add(e).ok_or(Error::Syntax {
                        position: p,
                        message: "exponent exceeds 32 bits".to_string(),
                    })?;
                    saw_factor = true;
                }
                Some((p, t)) => {
                    return Err(Error::Syntax {
                        position: p,
                        message: format!("expected variable, found {:?}", t),
                    })
                }
                None => {
                    return Err(Error::Syntax {
                        position: parser.lexer.pos,
                        message: "expected variable, found end of input".to_string(),
                    })
                }
            }
        }

        if num.is_none() && !saw_factor {
            let pos = parser
                .peek()?
                .map(|(p, _)| *p)
                .unwrap_or(parser.lexer.pos);
            return Err(Error::Syntax {
                position: pos,
                message: "expected term".to_string(),
            });
        }

        let mut n = num.unwrap_or_else(|| BigInt::from(1));
        if negative {
            n = -n;
        }
        let coeff = coeff_from_big_ratio(characteristic, n, den)?;
        let mono = Monomial::from_exps(&exps)?;
        if !coeff.is_zero() {
            terms.push((mono, coeff));
        }
    }
    Ok(terms)
}

fn coeff_from_big_ratio(characteristic: u32, num: BigInt, den: BigInt) -> Result<Coeff> {
    match characteristic {
        0 => Ok(Coeff::Rat(BigRational::new(num, den))),
        p => {
            let pb = BigInt::from(p);
            let d = den.mod_floor(&pb).to_u64().unwrap();
            if d == 0 {
                return Err(Error::BadCharacteristic {
                    denominator: den.to_string(),
                });
            }
            let n = num.mod_floor(&pb).to_u64().unwrap();
            let n_over_d = Coeff::Mod { value: n, prime: p }
                .mul(&Coeff::Mod { value: d, prime: p }.inv());
            Ok(n_over_d)
        }
    }
}

/// Parse a polynomial in the given ring; the result is canonical and
/// round-trips through [`print_poly`].
pub fn parse_poly(ring: &PolyRing, src: &str) -> Result<Polynomial> {
    let terms = parse_raw_terms(ring.characteristic(), ring.vars(), src)?;
    ring.from_terms(terms)
}

fn monomial_string(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..m.arity() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(ring.vars()[i].clone()),
            e => parts.push(format!("{}^{}", ring.vars()[i], e)),
        }
    }
    parts.join("*")
}

/// Canonical rendering: descending terms, `-` absorbed into the separator
/// for rational coefficients, unit coefficients elided.
pub fn print_poly(ring: &PolyRing, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        let neg = is_negative(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let c_abs = if neg { c.neg() } else { c.clone() };
        let ms = monomial_string(ring, m);
        if ms.is_empty() {
            out.push_str(&c_abs.to_string());
        } else if c_abs.is_one() {
            out.push_str(&ms);
        } else {
            out.push_str(&format!("{}*{}", c_abs, ms));
        }
    }
    out
}
