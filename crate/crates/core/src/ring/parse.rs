use std::sync::Arc;

use num::bigint::BigInt;
use num::Num;

use super::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Parses the polynomial text grammar:
///
/// ```text
/// poly    := ['+'|'-'] term (('+'|'-') term)*
/// term    := factor ('*' factor)*
/// factor  := atom ('^' uint)?
/// atom    := coeff | name | '(' poly ')'
/// coeff   := int ('/' uint)?            (rational literal, reduced into the field)
/// ```
///
/// Whitespace is insignificant. Float literals and any other use of `/`
/// are rejected.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            if e > u32::from(u16::MAX) {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.bump() != Some(b')') {
                    self.pos -= 1;
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.variable(),
            Some(b'.') => Err(self.err("float literals are not supported")),
            Some(b'/') => Err(self.err("division is not supported")),
            _ => Err(self.err("expected a coefficient, variable, or `(`")),
        }
    }

    fn number(&mut self) -> Result<Polynomial> {
        let num = self.integer_literal()?;
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(self.err("float literals are not supported"));
        }
        // a `/` directly after an integer is a rational coefficient literal
        let coeff = if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            match self.src.get(self.pos) {
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.err("division is not supported")),
            }
            let den = self.integer_literal()?;
            self.ring
                .field()
                .from_ratio(&num, &den)
                .map_err(|_| self.err("zero denominator in coefficient"))?
        } else {
            self.ring.field().from_bigint(&num)
        };
        Ok(Polynomial::constant(self.ring, coeff))
    }

    fn integer_literal(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        BigInt::from_str_radix(digits, 10).map_err(|_| self.err("bad integer literal"))
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("exponent too large"))
    }

    fn variable(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match self.ring.var_index(name) {
            Some(i) => Ok(Polynomial::var(self.ring, i)),
            None => Err(Error::UnknownVariable(name.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    fn qring() -> Arc<PolyRing> {
        PolyRing::rationals(&["x0", "x1", "x2", "x3", "x4", "x5"])
    }

    #[test]
    fn two_term_polynomial() {
        let r = qring();
        let f = parse_polynomial("x0*x5 - x1^2", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.total_degree(), Some(2));
        assert!(f.is_homogeneous());
    }

    #[test]
    fn like_terms_collapse_by_field() {
        let r = PolyRing::rationals(&["x"]);
        let f = parse_polynomial("x + x", &r).unwrap();
        assert_eq!(f.render(), "2*x");

        let r2 = PolyRing::prime_field(&["x"], 2).unwrap();
        let f2 = parse_polynomial("x + x", &r2).unwrap();
        assert!(f2.is_zero());
    }

    #[test]
    fn unknown_variable_is_reported() {
        let r = qring();
        match parse_polynomial("2*x2 + a*x2", &r) {
            Err(Error::UnknownVariable(name)) => assert_eq!(name, "a"),
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_floats_and_division() {
        let r = qring();
        assert!(matches!(
            parse_polynomial("1.5*x0", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("x0/x1", &r),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("(x0+x1)/2", &r),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn rational_coefficient_literals() {
        let r = qring();
        let f = parse_polynomial("1/2*x0 + 3/2*x0", &r).unwrap();
        assert_eq!(f.render(), "2*x0");
    }

    #[test]
    fn parentheses_and_powers() {
        let r = PolyRing::rationals(&["x", "y"]);
        let f = parse_polynomial("(x + y)^2", &r).unwrap();
        assert_eq!(f.render(), "x^2 + 2*x*y + y^2");

        let r2 = PolyRing::prime_field(&["x", "y"], 2).unwrap();
        let f2 = parse_polynomial("(x + y)^2", &r2).unwrap();
        assert_eq!(f2.render(), "x^2 + y^2");
    }

    #[test]
    fn render_parse_round_trip() {
        let r = qring();
        for text in [
            "x0*x4*x5 - x0*x3^2 - x1^2*x4 + 2*x1*x2*x3 - x2^2*x5",
            "0",
            "-x0 + 7",
            "1/3*x1^4 - 2/3",
        ] {
            let f = parse_polynomial(text, &r).unwrap();
            let g = parse_polynomial(&f.render(), &r).unwrap();
            assert_eq!(f, g);
        }
    }
}
