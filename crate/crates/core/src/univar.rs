//! Univariate factorization into primary factors by decomposing `⟨f⟩`.
//!
//! Each primary component of `⟨f⟩ ⊂ F_p[x]` is principal, generated by a
//! power of one irreducible factor, so the decomposition pipeline returns
//! `f` split into pairwise coprime irreducible powers.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::groebner::Ideal;
use crate::mpoly::Polynomial;
use crate::primdec::{primary_decomposition_with, DecomposeConfig};

#[derive(Clone, Debug)]
pub struct Factorization {
    pub input: Polynomial,
    pub leading_coefficient: FieldElement,
    /// Monic, pairwise coprime, sorted by `(degree, text)`.
    pub factors: Vec<Polynomial>,
}

impl Factorization {
    pub fn product(&self) -> Polynomial {
        let ring = self.input.ring();
        self.factors.iter().fold(ring.constant(self.leading_coefficient), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for Factorization {
    /// `2*(x+1)(x^2+2)`; the coefficient is omitted when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.leading_coefficient != FieldElement::ONE {
            write!(f, "{}*", self.leading_coefficient)?;
        }
        for g in &self.factors {
            write!(f, "({g})")?;
        }
        Ok(())
    }
}

pub fn factor(f: &Polynomial) -> Result<Factorization> {
    factor_with(f, &DecomposeConfig::default())
}

pub fn factor_with(f: &Polynomial, config: &DecomposeConfig) -> Result<Factorization> {
    if f.ring().nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let lc = f.leading_coeff();
    let ideal = Ideal::new(f.ring(), vec![f.clone()]);
    let d = primary_decomposition_with(&ideal, config)?;
    let mut factors = Vec::with_capacity(d.components.len());
    for c in &d.components {
        match c.groebner().polys() {
            [g] => factors.push(g.clone()),
            _ => return Err(Error::NonPrincipalComponent),
        }
    }
    factors.sort_by_cached_key(|g| (g.total_degree(), g.to_string()));
    Ok(Factorization { input: f.clone(), leading_coefficient: lc, factors })
}
