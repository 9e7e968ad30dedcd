//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | variable ('^' integer)?
//! ```
//!
//! Whitespace is ignored. Columns in errors are 1-based character positions.

use std::sync::Arc;

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::gf::FieldElement;

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    chars: Vec<char>,
    pos: usize,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { column, message: message.into() })
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                None => break,
                Some(c) => return err(self.column(), format!("expected `+`, `-` or `*`, found `{c}`")),
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        let n = self.ring.nvars();
        let mut coeff = FieldElement::ONE;
        let mut mono = vec![0u16; n];
        loop {
            match self.factor()? {
                Factor::Number(c) => coeff = field.mul(coeff, c),
                Factor::Power(i, e, col) => {
                    mono[i] = mono[i].checked_add(e).map_or_else(|| err(col, "exponent too large"), Ok)?;
                }
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(self.ring.term(coeff, Monomial::new(mono)))
    }

    fn factor(&mut self) -> Result<Factor> {
        let col = match self.peek() {
            None => return err(self.column(), "unexpected end of input"),
            Some(_) => self.column(),
        };
        let c = self.chars[self.pos];
        if c.is_ascii_digit() {
            let p = self.ring.modulus();
            let mut v = 0u64;
            while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
                v = (v * 10 + u64::from(d)) % p;
                self.pos += 1;
            }
            Ok(Factor::Number(self.ring.field().elem(v)))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                self.pos += 1;
            }
            let name: String = self.chars[start..self.pos].iter().collect();
            let Some(i) = self.ring.var_index(&name) else {
                return Err(Error::UnknownVariable { name, column: col });
            };
            let mut e = 1u16;
            if self.peek() == Some('^') {
                self.pos += 1;
                e = self.exponent()?;
            }
            Ok(Factor::Power(i, e, col))
        } else {
            err(col, format!("unexpected character `{c}`"))
        }
    }

    fn exponent(&mut self) -> Result<u16> {
        let col = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.column(),
            Some(c) => return err(self.column(), format!("expected exponent, found `{c}`")),
            None => return err(self.column(), "expected exponent, found end of input"),
        };
        let mut v: u32 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            v = v * 10 + d;
            if v > u32::from(u16::MAX) {
                return err(col, "exponent too large");
            }
            self.pos += 1;
        }
        Ok(v as u16)
    }
}

enum Factor {
    Number(FieldElement),
    Power(usize, u16, usize),
}

pub(super) fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, chars: text.chars().collect(), pos: 0 };
    p.expr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::OrderKind;

    fn ring() -> Arc<Ring> {
        Ring::new(5, &["x", "y", "z"], OrderKind::Lex).unwrap()
    }

    #[test]
    fn big_integers_reduce() {
        let r = ring();
        let f = r.parse("123456789012345678901234567890*x").unwrap();
        // 123456789012345678901234567890 ends in 0 => divisible by 5
        assert!(f.is_zero());
        assert_eq!(r.parse("7 * 8").unwrap().to_string(), "1");
    }

    #[test]
    fn whitespace_and_repeated_factors() {
        let r = ring();
        assert_eq!(r.parse(" x * x ^ 2 * 3 ").unwrap().to_string(), "3*x^3");
        assert_eq!(r.parse("-x-y").unwrap().to_string(), "4*x+4*y");
    }

    #[test]
    fn errors_carry_columns() {
        let r = ring();
        assert_eq!(r.parse("x + w").unwrap_err(), Error::UnknownVariable { name: "w".into(), column: 5 });
        assert!(matches!(r.parse("x y"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(r.parse("x +"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(r.parse("x^"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(r.parse("x^99999"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(r.parse("(x)"), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(r.parse(""), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(r.parse("--x"), Err(Error::Parse { column: 2, .. })));
    }
}
