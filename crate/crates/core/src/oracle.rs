//! Exhaustive oracles for certifying the pipeline on small instances.
//!
//! They use enumeration and trial division only: no eigenspaces, no kernels,
//! no saturation. Agreement with the engine is therefore meaningful.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeField};
use crate::groebner::Ideal;
use crate::idem::Subalgebra;
use crate::mpoly::{Monomial, Polynomial, Ring};
use crate::quotient::QuotientElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Ceiling on `q^dim` for subalgebra enumeration.
    pub max_subalgebra_size: u128,
    /// Ceiling on `p^deg` for univariate trial division.
    pub max_univariate_space: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_subalgebra_size: 3125, max_univariate_space: 3u128.pow(7) }
    }
}

fn checked_power(base: u64, exp: usize, bound: u128) -> Result<u128> {
    let mut size: u128 = 1;
    for _ in 0..exp {
        size = size.saturating_mul(base as u128);
        if size > bound {
            return Err(Error::BoundExceeded { size, bound });
        }
    }
    Ok(size)
}

/// Enumerates every element of `v`, keeps the nonzero idempotents and returns
/// the minimal ones under `e ≤ f ⇔ e·f = e`, sorted.
pub fn primitive_idempotents_bruteforce(v: &Subalgebra, config: &OracleConfig) -> Result<Vec<QuotientElement>> {
    let field = v.ambient().field();
    let p = field.modulus();
    let size = checked_power(p, v.dim(), config.max_subalgebra_size)?;
    let qb = v.ambient();

    let mut idempotents = Vec::new();
    let mut digits = vec![FieldElement::ZERO; v.dim()];
    for _ in 0..size {
        let e = v.combine(&digits);
        if !e.is_zero() && qb.mul(&e, &e) == e {
            idempotents.push(e);
        }
        // odometer increment over F_p^dim
        for d in digits.iter_mut() {
            if d.value() + 1 < p {
                *d = field.elem(d.value() + 1);
                break;
            }
            *d = FieldElement::ZERO;
        }
    }

    let mut primitive: Vec<QuotientElement> =
        idempotents.iter().filter(|e| !idempotents.iter().any(|f| f != *e && qb.mul(e, f) == *f)).cloned().collect();
    primitive.sort();
    Ok(primitive)
}

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
type Dense = Vec<u64>;

fn to_dense(f: &Polynomial) -> Dense {
    let deg = f.total_degree().unwrap_or(0) as usize;
    let mut out = vec![0; deg + 1];
    for t in f.terms() {
        out[t.monomial.exponent(0) as usize] = t.coeff.value();
    }
    out
}

fn from_dense(ring: &Arc<Ring>, d: &Dense) -> Polynomial {
    let terms = d
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (ring.field().elem(c), Monomial::var(1, 0, i as u16)))
        .collect();
    ring.from_terms(terms)
}

/// Exact division by a monic divisor; `None` if the remainder is nonzero.
fn divide_exact(field: &PrimeField, f: &Dense, g: &Dense) -> Option<Dense> {
    let (n, m) = (f.len() - 1, g.len() - 1);
    if n < m {
        return None;
    }
    let mut r = f.clone();
    let mut q = vec![0; n - m + 1];
    for k in (0..=n - m).rev() {
        let c = r[k + m];
        q[k] = c;
        if c != 0 {
            for (j, &gj) in g.iter().enumerate() {
                let sub = field.mul(field.elem(c), field.elem(gj));
                r[k + j] = field.sub(field.elem(r[k + j]), sub).value();
            }
        }
    }
    r[..m].iter().all(|&c| c == 0).then_some(q)
}

/// Every monic polynomial of degree `d`, in counting order.
fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = Dense> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut k| {
        let mut g = vec![0; d + 1];
        for c in g.iter_mut().take(d) {
            *c = k % p;
            k /= p;
        }
        g[d] = 1;
        g
    })
}

/// Irreducible factors with multiplicity, by trial division in ascending
/// degree; sorted by `(degree, text)`. The input is made monic first.
pub fn factor_bruteforce(f: &Polynomial, config: &OracleConfig) -> Result<Vec<(Polynomial, u32)>> {
    let ring = f.ring();
    if ring.nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let field = ring.field();
    let p = field.modulus();
    let deg = f.total_degree().unwrap_or(0) as usize;
    checked_power(p, deg, config.max_univariate_space)?;

    let mut rest = to_dense(&f.monic());
    let mut found: Vec<(Dense, u32)> = Vec::new();
    let mut d = 1;
    while 2 * d < rest.len() {
        for g in monic_of_degree(p, d) {
            let mut mult = 0;
            while let Some(q) = divide_exact(field, &rest, &g) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                found.push((g, mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        // no divisor up to half its degree: irreducible; may repeat an earlier factor
        match found.iter_mut().find(|(g, _)| *g == rest) {
            Some((_, m)) => *m += 1,
            None => found.push((rest, 1)),
        }
    }

    let mut out: Vec<(Polynomial, u32)> = found.iter().map(|(g, m)| (from_dense(ring, g), *m)).collect();
    out.sort_by_cached_key(|(g, _)| (g.total_degree(), g.to_string()));
    Ok(out)
}

/// The ideal of a finite point set, `∏ ⟨x_1 − a_1, …, x_n − a_n⟩`.
/// The maximal ideals are pairwise comaximal, so the product is their
/// intersection and its primary components are exactly those ideals.
pub fn point_ideal(ring: &Arc<Ring>, points: &[Vec<u64>]) -> Result<Ideal> {
    if points.is_empty() {
        return Err(Error::EmptyPointList);
    }
    let n = ring.nvars();
    let mut seen = HashSet::new();
    let mut product: Option<Ideal> = None;
    for pt in points {
        if pt.len() != n {
            return Err(Error::PointDimension { expected: n, got: pt.len() });
        }
        let pt: Vec<u64> = pt.iter().map(|&a| ring.field().elem(a).value()).collect();
        if !seen.insert(pt.clone()) {
            return Err(Error::DuplicatePoint);
        }
        let m = maximal_ideal(ring, &pt);
        product = Some(match product {
            None => Ideal::from_groebner(m.groebner().clone()),
            Some(acc) => {
                let gens: Vec<Polynomial> =
                    acc.groebner().polys().iter().flat_map(|a| m.generators().iter().map(move |b| a.mul(b))).collect();
                let prod = Ideal::new(ring, gens);
                Ideal::from_groebner(prod.groebner().clone())
            }
        });
    }
    Ok(product.expect("nonempty"))
}

/// `⟨x_1 − a_1, …, x_n − a_n⟩`.
pub fn maximal_ideal(ring: &Arc<Ring>, point: &[u64]) -> Ideal {
    let field = ring.field();
    let gens = point.iter().enumerate().map(|(i, &a)| ring.var(i).sub(&ring.constant(field.elem(a)))).collect();
    Ideal::new(ring, gens)
}
