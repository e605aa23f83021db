//! Text parser for polynomials.
//!
//! Grammar:
//! ```text
//! expr := '-'? term (('+'|'-') term)*
//! term := coeff? ('*'? var ('^' nat)?)*
//! ```
//! Variables come from the ring descriptor; coefficients reduce mod p.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingCtx;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<RingCtx>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn natural(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected a number".into(),
            });
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<u64>().map_err(|_| Error::ExponentOverflow(text.into()))
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.src.len() {
            let c = self.src[end] as char;
            let ok = if end == start {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            end += 1;
        }
        if end == start {
            return None;
        }
        self.pos = end;
        Some((
            std::str::from_utf8(&self.src[start..end]).unwrap().to_string(),
            start,
        ))
    }

    /// One term: optional coefficient followed by variable powers.
    fn term(&mut self) -> Result<(Monomial, u64)> {
        let field = self.ring.field();
        let start = self.pos;
        let mut coeff = 1u64;
        let mut saw_anything = false;

        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = field.reduce(self.natural()?);
            saw_anything = true;
        }

        let mut exps = vec![0u32; self.ring.num_vars()];
        loop {
            let before = self.pos;
            let had_star = if self.peek() == Some('*') {
                self.bump();
                true
            } else {
                false
            };
            match self.ident() {
                Some((name, at)) => {
                    let idx = self
                        .ring
                        .var_index(&name)
                        .ok_or(Error::UnknownVariable { name, pos: at })?;
                    let mut e: u64 = 1;
                    if self.peek() == Some('^') {
                        self.bump();
                        e = self.natural()?;
                    }
                    let total = (exps[idx] as u64)
                        .checked_add(e)
                        .filter(|&v| v <= u32::MAX as u64)
                        .ok_or_else(|| Error::ExponentOverflow(format!("exponent {e}")))?;
                    exps[idx] = total as u32;
                    saw_anything = true;
                }
                None => {
                    if had_star {
                        return Err(Error::Parse {
                            pos: self.pos,
                            msg: "expected a variable after `*`".into(),
                        });
                    }
                    self.pos = before;
                    break;
                }
            }
        }

        if !saw_anything {
            return Err(Error::Parse {
                pos: start,
                msg: "expected a term".into(),
            });
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        let mut raw: Vec<(Monomial, u64)> = Vec::new();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.bump();
            negate = true;
        }
        loop {
            let (m, c) = self.term()?;
            raw.push((m, if negate { field.neg(c) } else { c }));
            match self.peek() {
                Some('+') => {
                    self.bump();
                    negate = false;
                }
                Some('-') => {
                    self.bump();
                    negate = true;
                }
                Some(c) => {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: format!("unexpected character `{c}`"),
                    });
                }
                None => break,
            }
        }
        Ok(Polynomial::from_terms(self.ring, raw))
    }
}

/// Parse `text` as a polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<RingCtx>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: "trailing input".into(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::TermOrder;

    fn ring(p: u64, vars: &[&str]) -> Arc<RingCtx> {
        RingCtx::new(p, vars.iter().map(|s| s.to_string()).collect(), TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn parses_simple_products() {
        let r = ring(2, &["x", "y"]);
        let f = parse_polynomial("x*y", &r).unwrap();
        assert_eq!(f.to_string(), "x*y");
        assert_eq!(f.terms().len(), 1);
    }

    #[test]
    fn coefficient_reduces_mod_p() {
        let r = ring(3, &["x", "y"]);
        let f = parse_polynomial("3*x + y", &r).unwrap();
        assert_eq!(f.to_string(), "y");
    }

    #[test]
    fn char2_collapse() {
        let r = ring(2, &["x"]);
        let f = parse_polynomial("x^2 + 2*x + 1", &r).unwrap();
        assert_eq!(f.to_string(), "x^2 + 1");
    }

    #[test]
    fn subtraction_and_leading_minus() {
        let r = ring(5, &["x"]);
        let f = parse_polynomial("-x + 2", &r).unwrap();
        assert_eq!(f.to_string(), "4*x + 2");
        let g = parse_polynomial("x - x", &r).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn implicit_star_and_repeated_vars() {
        let r = ring(5, &["x", "y"]);
        let f = parse_polynomial("2 x y^2 x", &r).unwrap();
        assert_eq!(f.to_string(), "2*x^2*y^2");
    }

    #[test]
    fn error_positions() {
        let r = ring(2, &["x"]);
        match parse_polynomial("x + z", &r) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "z");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x +", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("x ^ 99999999999999999999", &r),
            Err(Error::ExponentOverflow(_))
        ));
        assert!(matches!(parse_polynomial("", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn print_parse_round_trip() {
        let r = ring(7, &["x", "y", "z"]);
        for text in ["x^2*y + 3*z + 6", "x*y*z", "5", "z^4 + x^4"] {
            let f = parse_polynomial(text, &r).unwrap();
            let g = parse_polynomial(&f.to_string(), &r).unwrap();
            assert_eq!(f, g);
        }
    }
}
