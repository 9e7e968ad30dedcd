//! Sparse multivariate polynomials over F_p.
//!
//! A [`Polynomial`] keeps its terms sorted strictly descending under the
//! monomial order of its [`Ring`], with no zero coefficients. The zero
//! polynomial has no terms.

mod monomial;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use monomial::{Monomial, MonomialOrder, OrderKind};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeField};

/// `F_p[x_1..x_n]` together with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], order: OrderKind) -> Result<Arc<Ring>> {
        let order = MonomialOrder::new(order, vars.len());
        Ring::with_field(PrimeField::new(p)?, vars, order)
    }

    pub fn with_field<S: AsRef<str>>(field: PrimeField, vars: &[S], order: MonomialOrder) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::NoVariables);
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) || vars[..i].contains(v) {
                return Err(Error::BadVariable(v.clone()));
            }
        }
        assert_eq!(order.precedence().len(), vars.len(), "order does not match variable count");
        Ok(Arc::new(Ring { field, vars, order }))
    }

    /// Same field and variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        assert_eq!(order.precedence().len(), self.vars.len());
        Arc::new(Ring { field: self.field, vars: self.vars.clone(), order })
    }

    /// A ring with one extra variable in front, greatest under pure lex, the
    /// remaining variables keeping their current precedence. The new name
    /// starts from `hint` and is made distinct from the existing names.
    pub fn with_leading_variable(&self, hint: &str) -> Arc<Ring> {
        let mut name = hint.to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name);
        vars.extend(self.vars.iter().cloned());
        let mut precedence = vec![0];
        precedence.extend(self.order.precedence().iter().map(|&i| i + 1));
        let order = MonomialOrder::with_precedence(OrderKind::Lex, precedence);
        Arc::new(Ring { field: self.field, vars, order })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial { ring: Arc::clone(self), terms: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(FieldElement::ONE)
    }

    pub fn constant(self: &Arc<Self>, c: FieldElement) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(self: &Arc<Self>, c: FieldElement, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![Term { coeff: c, monomial: m }] };
        Polynomial { ring: Arc::clone(self), terms }
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        self.term(FieldElement::ONE, Monomial::var(self.nvars(), i, 1))
    }

    /// Builds a polynomial from arbitrary (possibly unsorted, repeated) terms.
    pub fn from_terms(self: &Arc<Self>, terms: Vec<(FieldElement, Monomial)>) -> Polynomial {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, monomial)| {
                assert_eq!(monomial.nvars(), self.nvars());
                Term { coeff, monomial }
            })
            .collect();
        terms.sort_by(|a, b| self.cmp_monomials(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Polynomial { ring: Arc::clone(self), terms: merged }
    }

    /// Parses the textual polynomial grammar (`+ - * ^`, integers, variable names).
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        parse::parse_poly(self, text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.terms.first().map_or(FieldElement::ZERO, |t| t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.total_degree()).max()
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|t| u32::from(t.monomial.exponent(i))).max()
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff_of(&self, m: &Monomial) -> FieldElement {
        self.terms
            .binary_search_by(|t| self.ring.cmp_monomials(m, &t.monomial))
            .map_or(FieldElement::ZERO, |i| self.terms[i].coeff)
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Wraps terms that are already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| { ring.cmp_monomials(&w[0].monomial, &w[1].monomial) == Ordering::Greater }));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: Arc::clone(ring), terms }
    }

    fn with_terms(&self, terms: Vec<Term>) -> Polynomial {
        Polynomial { ring: Arc::clone(&self.ring), terms }
    }

    fn check_ring(&self, other: &Polynomial) {
        debug_assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        self.with_terms(
            self.terms.iter().map(|t| Term { coeff: f.neg(t.coeff), monomial: t.monomial.clone() }).collect(),
        )
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(FieldElement::ONE, &Monomial::one(self.ring.nvars()), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let minus_one = self.ring.field.neg(FieldElement::ONE);
        self.add_scaled(minus_one, &Monomial::one(self.ring.nvars()), other)
    }

    /// `self + c * m * other` in one merge pass.
    pub fn add_scaled(&self, c: FieldElement, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let field = &self.ring.field;
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b =
            other.terms.iter().map(|t| Term { coeff: field.mul(c, t.coeff), monomial: t.monomial.mul(m) }).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match self.ring.cmp_monomials(&x.monomial, &y.monomial) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = field.add(x.coeff, y.coeff);
                        if !s.is_zero() {
                            out.push(Term { coeff: s, monomial: y.monomial });
                        }
                    }
                },
            }
        }
        self.with_terms(out)
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let f = self.ring.field;
        self.with_terms(
            self.terms.iter().map(|t| Term { coeff: f.mul(c, t.coeff), monomial: t.monomial.clone() }).collect(),
        )
    }

    /// Multiplication by `c * m`; order is preserved since orders are multiplicative.
    pub fn mul_term(&self, c: FieldElement, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let f = self.ring.field;
        self.with_terms(
            self.terms.iter().map(|t| Term { coeff: f.mul(c, t.coeff), monomial: t.monomial.mul(m) }).collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        small.terms.iter().fold(self.ring.zero(), |acc, t| acc.add_scaled(t.coeff, &t.monomial, large))
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(t) if t.coeff == FieldElement::ONE => self.clone(),
            Some(t) => self.scale(self.ring.field.inv(t.coeff).expect("nonzero leading coeff")),
        }
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `var_map[i]`.
    pub fn embed(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        assert_eq!(target.field, self.ring.field);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0u16; target.nvars()];
                for (i, &j) in var_map.iter().enumerate() {
                    e[j] = t.monomial.exponent(i);
                }
                (t.coeff, Monomial::new(e))
            })
            .collect();
        target.from_terms(terms)
    }

    /// Same terms, reinterpreted in a ring that differs only in its order.
    pub fn reorder(&self, target: &Arc<Ring>) -> Polynomial {
        assert_eq!(target.vars, self.ring.vars);
        let terms = self.terms.iter().map(|t| (t.coeff, t.monomial.clone())).collect();
        target.from_terms(terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if t.coeff != FieldElement::ONE || t.monomial.is_one() {
                factors.push(t.coeff.to_string());
            }
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
