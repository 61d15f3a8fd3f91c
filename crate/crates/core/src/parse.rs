//! Text grammar for polynomials and ideals.
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := factor ('*' factor)*
//! factor:= integer | var ['^' integer]
//! ideal := poly (',' poly)*
//! ```

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected integer");
        }
        self.src[start..self.pos]
            .parse::<u64>()
            .or_else(|_| self.err(start, "integer too large"))
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected variable or coefficient");
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let field = *self.ring.field();
        let n = self.ring.nvars();
        let mut exps = vec![0u32; n];
        let mut coeff = 1u32;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = self.integer()?;
                    coeff = field.mul(coeff, (v % field.modulus() as u64) as u32);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (at, name) = self.ident()?;
                    let Some(i) = self.ring.var_index(name) else {
                        return self.err(at, format!("unknown variable '{name}'"));
                    };
                    let mut e = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let at = self.pos;
                        e = self.integer()?;
                        if e > u32::MAX as u64 / 4 {
                            return self.err(at, "exponent too large");
                        }
                    }
                    exps[i] += e as u32;
                }
                Some(_) => return self.err(self.pos, "expected variable or coefficient"),
                None => return self.err(self.pos, "unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        let mut terms = Vec::new();
        let mut sign = 1u32;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = field.neg(1);
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, field.mul(c, sign)));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = field.neg(1);
                }
                _ => break,
            }
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

/// Parses one polynomial; it need not be homogeneous.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let mut p = Parser { src: text, bytes: text.as_bytes(), pos: 0, ring };
    let f = p.polynomial()?;
    if p.peek().is_some() {
        return p.err(p.pos, "unexpected trailing input");
    }
    Ok(f)
}

/// Parses a comma-separated list of homogeneous, nonzero polynomials.
pub fn parse_generators(ring: &RingRef, text: &str) -> Result<Vec<Polynomial>> {
    let mut p = Parser { src: text, bytes: text.as_bytes(), pos: 0, ring };
    let mut out = Vec::new();
    loop {
        let start = {
            p.skip_ws();
            p.pos
        };
        let f = p.polynomial()?;
        if !f.is_homogeneous() {
            return p.err(start, format!("generator '{f}' is not homogeneous"));
        }
        if f.is_zero() {
            return p.err(start, "zero generator");
        }
        out.push(f);
        match p.peek() {
            Some(b',') => p.pos += 1,
            None => break,
            Some(_) => return p.err(p.pos, "expected ',' or end of input"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn parses_family_generators() {
        let r = Ring::standard();
        let g = parse_generators(&r, "x*z, y*z, z^12, x^4, y^7").unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[2].degree(), Some(12));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = Ring::standard();
        assert!(matches!(parse_generators(&r, "x + 1"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn reports_positions() {
        let r = Ring::standard();
        match parse_polynomial(&r, "x*y + w") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial(&r, "x^").is_err());
        assert!(parse_polynomial(&r, "x y").is_err());
    }

    #[test]
    fn coefficients_and_signs() {
        let r = Ring::standard();
        let f = parse_polynomial(&r, "3*x*y*z^5 - 2*x*x").unwrap();
        assert_eq!(f.to_string(), "3*x*y*z^5 - 2*x^2");
        let g = parse_polynomial(&r, "-y^12 + 2 * 5 * z^12").unwrap();
        assert_eq!(g.to_string(), "-y^12 + 10*z^12");
    }
}
