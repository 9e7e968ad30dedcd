//! The quotient algebra `F_p[x]/I` as a finite-dimensional vector space over
//! its standard-monomial basis.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Matrix, PrimeField};
use crate::groebner::GroebnerBasis;
use crate::mpoly::{Monomial, Polynomial, Ring};

/// Coordinates of an element of the quotient, indexed by the basis monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuotientElement {
    pub coords: Vec<FieldElement>,
}

impl QuotientElement {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        QuotientElement { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// True iff every variable has a pure power among the leading monomials.
/// The unit ideal counts as zero-dimensional (its quotient is `{0}`).
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    if gb.is_unit() {
        return true;
    }
    let n = gb.ring().nvars();
    let mut seen = vec![false; n];
    for lm in gb.leading_monomials() {
        if let Some(i) = lm.pure_power_var() {
            seen[i] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Standard monomials of a zero-dimensional ideal, sorted descending.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    gb: GroebnerBasis,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// The monomials not divisible by any leading monomial of `gb`.
pub fn macaulay_basis(gb: &GroebnerBasis) -> Result<QuotientBasis> {
    if !is_zero_dimensional(gb) {
        return Err(Error::NotZeroDimensional);
    }
    let ring = gb.ring();
    let n = ring.nvars();
    let lms: Vec<&Monomial> = gb.leading_monomials().collect();
    let standard = |m: &Monomial| !lms.iter().any(|lm| lm.divides(m));
    let mut monomials = Vec::new();
    if !gb.is_unit() {
        // walk the staircase upward from 1; standard monomials are closed under division
        let mut seen: std::collections::HashSet<Monomial> = std::collections::HashSet::new();
        let mut frontier = vec![Monomial::one(n)];
        seen.insert(Monomial::one(n));
        while let Some(m) = frontier.pop() {
            for i in 0..n {
                let next = m.mul(&Monomial::var(n, i, 1));
                if standard(&next) && seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
            monomials.push(m);
        }
        monomials.sort_by(|a, b| ring.cmp_monomials(b, a));
    }
    let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(QuotientBasis { gb: gb.clone(), monomials, index })
}

impl QuotientBasis {
    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.gb.ring()
    }

    pub fn field(&self) -> &PrimeField {
        self.gb.ring().field()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb.normal_form(f)
    }

    /// Coordinates of `NF(f)` on the basis.
    pub fn to_coords(&self, f: &Polynomial) -> QuotientElement {
        self.coords_of_normal_form(&self.gb.normal_form(f))
    }

    fn coords_of_normal_form(&self, nf: &Polynomial) -> QuotientElement {
        let mut coords = vec![FieldElement::ZERO; self.dim()];
        for t in nf.terms() {
            let i = self.index[&t.monomial];
            coords[i] = t.coeff;
        }
        QuotientElement { coords }
    }

    /// The canonical representative (a normal form) of the coordinate vector.
    pub fn from_coords(&self, e: &QuotientElement) -> Polynomial {
        assert_eq!(e.coords.len(), self.dim());
        let terms =
            self.monomials.iter().zip(&e.coords).filter(|(_, c)| !c.is_zero()).map(|(m, &c)| (c, m.clone())).collect();
        self.ring().from_terms(terms)
    }

    pub fn one(&self) -> QuotientElement {
        self.to_coords(&self.ring().one())
    }

    pub fn zero(&self) -> QuotientElement {
        QuotientElement { coords: vec![FieldElement::ZERO; self.dim()] }
    }

    pub fn mul(&self, a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
        self.to_coords(&self.from_coords(a).mul(&self.from_coords(b)))
    }

    pub fn add(&self, a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
        let f = self.field();
        QuotientElement { coords: a.coords.iter().zip(&b.coords).map(|(&x, &y)| f.add(x, y)).collect() }
    }

    pub fn scale(&self, c: FieldElement, a: &QuotientElement) -> QuotientElement {
        let f = self.field();
        QuotientElement { coords: a.coords.iter().map(|&x| f.mul(c, x)).collect() }
    }

    /// `f^e` modulo the ideal, reducing after every multiplication.
    pub fn pow(&self, f: &Polynomial, mut e: u64) -> Polynomial {
        let mut base = self.normal_form(f);
        let mut acc = self.normal_form(&self.ring().one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.normal_form(&acc.mul(&base));
            }
            e >>= 1;
            if e > 0 {
                base = self.normal_form(&base.mul(&base));
            }
        }
        acc
    }

    /// Matrix of multiplication by `f`: column `j` holds the coordinates of `f · B_j`.
    pub fn mult_matrix(&self, f: &Polynomial) -> Matrix {
        let nf = self.normal_form(f);
        let cols: Vec<Vec<FieldElement>> =
            self.monomials.iter().map(|m| self.to_coords(&nf.mul_term(FieldElement::ONE, m)).coords).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// Matrix of `f ↦ f^p − f`: column `j` holds the coordinates of `B_j^p − B_j`.
    pub fn frobenius_matrix(&self) -> Matrix {
        let p = self.field().modulus();
        let cols: Vec<Vec<FieldElement>> = self
            .monomials
            .iter()
            .map(|m| {
                let b = self.ring().term(FieldElement::ONE, m.clone());
                self.to_coords(&self.pow(&b, p).sub(&b)).coords
            })
            .collect();
        Matrix::from_columns(&cols, self.dim())
    }
}
