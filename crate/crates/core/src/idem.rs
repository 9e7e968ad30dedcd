//! The Frobenius-invariant subalgebra `V = {f : f^p = f}` of `F_p[x]/I` and
//! its splitting into primitive idempotents.
//!
//! `V` is reduced and isomorphic to `F_p^t`, so multiplication by any of its
//! elements is diagonalizable with eigenvalues in `F_p`. Splitting a
//! component along the eigenspaces of a non-scalar multiplication map and
//! recursing ends in one-dimensional pieces `⟨g⟩` with `g² = k·g`, `k ≠ 0`;
//! `k⁻¹·g` is then a primitive idempotent.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Matrix, PrimeField};
use crate::quotient::{QuotientBasis, QuotientElement};

/// A multiplicatively closed subspace of the quotient, kept as RREF rows of
/// coordinate vectors.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient: Arc<QuotientBasis>,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subalgebra {
    /// The span of `vectors` (ambient coordinates). Closure is not checked here.
    pub fn from_vectors(ambient: &Arc<QuotientBasis>, vectors: &[Vec<FieldElement>]) -> Subalgebra {
        let n = ambient.dim();
        let (rref, pivots) = Matrix::from_rows(vectors, n).rref(ambient.field());
        let rows: Vec<Vec<FieldElement>> = (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect();
        Subalgebra { ambient: Arc::clone(ambient), basis: Matrix::from_rows(&rows, n), pivots }
    }

    pub fn ambient(&self) -> &Arc<QuotientBasis> {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// RREF basis rows, `dim × ambient.dim()`.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<QuotientElement> {
        (0..self.dim()).map(|i| QuotientElement::new(self.basis.row(i).to_vec())).collect()
    }

    /// Coordinates of `v` with respect to the RREF rows, or `None` if `v` is outside the span.
    pub fn coords_of(&self, v: &QuotientElement) -> Option<Vec<FieldElement>> {
        let f = self.ambient.field();
        let c: Vec<FieldElement> = self.pivots.iter().map(|&pc| v.coords[pc]).collect();
        let mut residual = v.coords.clone();
        for (i, &ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (r, &b) in residual.iter_mut().zip(self.basis.row(i)) {
                *r = f.sub(*r, f.mul(ci, b));
            }
        }
        residual.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &QuotientElement) -> bool {
        self.coords_of(v).is_some()
    }

    /// Combination `Σ c_k w_k` of the basis rows.
    pub fn combine(&self, c: &[FieldElement]) -> QuotientElement {
        let f = self.ambient.field();
        let mut out = vec![FieldElement::ZERO; self.ambient.dim()];
        for (i, &ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.basis.row(i)) {
                *o = f.add(*o, f.mul(ci, b));
            }
        }
        QuotientElement::new(out)
    }

    /// Every product of two basis elements lies in the span.
    pub fn is_closed(&self) -> bool {
        let basis = self.basis();
        basis.iter().enumerate().all(|(i, a)| basis[i..].iter().all(|b| self.contains(&self.ambient.mul(a, b))))
    }

    /// Matrix of `v ↦ w·v` on this subalgebra in its RREF basis.
    pub fn restricted_mult(&self, w: &QuotientElement) -> Result<Matrix> {
        let cols = self
            .basis()
            .iter()
            .map(|b| self.coords_of(&self.ambient.mul(w, b)).ok_or(Error::ClosureViolation))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, self.dim()))
    }
}

/// `Ker(f ↦ f^p − f)` on the quotient. Its dimension is the number of primary components.
pub fn invariant_subspace(qb: &Arc<QuotientBasis>) -> Subalgebra {
    let kernel = qb.frobenius_matrix().kernel_basis(qb.field());
    Subalgebra::from_vectors(qb, &kernel)
}

/// Matrix of multiplication by `w` with respect to an arbitrary basis of a
/// subspace (column `k` = coordinates of `w·basis[k]`).
pub fn matrix_in_basis(qb: &QuotientBasis, basis: &[QuotientElement], w: &QuotientElement) -> Result<Matrix> {
    let field = qb.field();
    let d = basis.len();
    let cols: Vec<Vec<FieldElement>> = basis.iter().map(|b| b.coords.clone()).collect();
    let span = Matrix::from_columns(&cols, qb.dim());
    let mut out = Vec::with_capacity(d);
    for b in basis {
        let prod = qb.mul(w, b);
        // solve span · c = prod
        let aug: Vec<Vec<FieldElement>> = (0..qb.dim())
            .map(|i| {
                let mut row = span.row(i).to_vec();
                row.push(prod.coords[i]);
                row
            })
            .collect();
        let (r, pivots) = Matrix::from_rows(&aug, d + 1).rref(field);
        if pivots.contains(&d) || pivots.len() < d {
            return Err(Error::ClosureViolation);
        }
        out.push((0..d).map(|i| r[(i, d)]).collect::<Vec<_>>());
    }
    Ok(Matrix::from_columns(&out, d))
}

/// The primitive idempotents of a split reduced algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    pub elements: Vec<QuotientElement>,
}

impl IdempotentSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitConfig {
    /// Eigenvalues are found by scanning all of `F_p` up to this modulus;
    /// above it, by root extraction from the minimal polynomial.
    pub eigenvalue_scan_limit: u64,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig { eigenvalue_scan_limit: 1 << 16 }
    }
}

/// Splits `v` into its primitive idempotents, sorted by their normal-form text.
pub fn split_algebra(v: &Subalgebra) -> Result<IdempotentSet> {
    split_algebra_with(v, &SplitConfig::default())
}

pub fn split_algebra_with(v: &Subalgebra, config: &SplitConfig) -> Result<IdempotentSet> {
    split_algebra_traced(v, config).map(|(set, _)| set)
}

/// Like [`split_algebra_with`], also returning every component visited
/// during the recursion (starting with `v`).
pub fn split_algebra_traced(v: &Subalgebra, config: &SplitConfig) -> Result<(IdempotentSet, Vec<Subalgebra>)> {
    let qb = v.ambient();
    let field = *qb.field();
    let mut trace = Vec::new();
    let mut out = Vec::new();
    let mut stack = vec![v.clone()];
    while let Some(w) = stack.pop() {
        trace.push(w.clone());
        match w.dim() {
            0 => {}
            1 => out.push(normalize(&w)?),
            d => {
                let (mult, _) = first_non_scalar(&w)?;
                let spaces = eigenspaces(&field, &mult, config)?;
                if spaces.iter().map(Vec::len).sum::<usize>() != d {
                    return Err(Error::NotSplit);
                }
                for space in spaces.into_iter().rev() {
                    let vectors: Vec<Vec<FieldElement>> = space.iter().map(|c| w.combine(c).coords).collect();
                    stack.push(Subalgebra::from_vectors(qb, &vectors));
                }
            }
        }
    }
    out.sort_by_cached_key(|e| qb.from_coords(e).to_string());
    Ok((IdempotentSet { elements: out }, trace))
}

fn normalize(w: &Subalgebra) -> Result<QuotientElement> {
    let g = &w.basis()[0];
    let sq = w.ambient().mul(g, g);
    let k = w.coords_of(&sq).ok_or(Error::ClosureViolation)?[0];
    if k.is_zero() {
        return Err(Error::Nilpotent);
    }
    let inv = w.ambient().field().inv(k)?;
    Ok(w.ambient().scale(inv, g))
}

/// The first basis row whose multiplication map on `w` is not a scalar matrix.
fn first_non_scalar(w: &Subalgebra) -> Result<(Matrix, usize)> {
    for (i, b) in w.basis().iter().enumerate() {
        let m = w.restricted_mult(b)?;
        let scalar = Matrix::identity(w.dim()).scale(w.ambient().field(), m[(0, 0)]);
        if m != scalar {
            return Ok((m, i));
        }
    }
    // every basis element acting as a scalar forces zero products, i.e. nilpotents
    Err(Error::Nilpotent)
}

/// Eigenspaces of `m` (as kernel bases of `m − λ`), in increasing `λ`.
fn eigenspaces(field: &PrimeField, m: &Matrix, config: &SplitConfig) -> Result<Vec<Vec<Vec<FieldElement>>>> {
    let d = m.rows();
    let kernel_at = |lambda: FieldElement| m.sub(field, &Matrix::identity(d).scale(field, lambda)).kernel_basis(field);
    let mut spaces = Vec::new();
    if field.modulus() <= config.eigenvalue_scan_limit || field.modulus() == 2 {
        let mut found = 0;
        for lambda in field.elements() {
            let k = kernel_at(lambda);
            if !k.is_empty() {
                found += k.len();
                spaces.push(k);
            }
            if found == d {
                break;
            }
        }
    } else {
        let mut roots = upoly::split_roots(field, &minimal_polynomial(field, m))?;
        roots.sort();
        for lambda in roots {
            spaces.push(kernel_at(lambda));
        }
    }
    Ok(spaces)
}

/// Minimal polynomial of a square matrix (ascending coefficients, monic), from
/// the first linear dependency among `I, M, M², …`.
fn minimal_polynomial(field: &PrimeField, m: &Matrix) -> Vec<FieldElement> {
    let d = m.rows();
    let flatten = |a: &Matrix| -> Vec<FieldElement> { (0..d).flat_map(|i| a.row(i).to_vec()).collect() };
    let mut powers = vec![flatten(&Matrix::identity(d))];
    let mut current = Matrix::identity(d);
    loop {
        current = current.mul(field, m);
        let target = flatten(&current);
        let k = powers.len();
        let mut cols = powers.clone();
        cols.push(target.clone());
        let (r, pivots) = Matrix::from_columns(&cols, d * d).rref(field);
        if !pivots.contains(&k) {
            // x^k = Σ c_i x^i
            let mut poly: Vec<FieldElement> = (0..k).map(|i| field.neg(r[(i, k)])).collect();
            poly.push(FieldElement::ONE);
            return poly;
        }
        powers.push(target);
    }
}

/// Dense univariate polynomials over F_p, ascending coefficients, used only
/// for eigenvalue extraction at large moduli.
mod upoly {
    use crate::error::{Error, Result};
    use crate::gf::{FieldElement, PrimeField};

    pub(super) type Poly = Vec<FieldElement>;

    fn trim(mut a: Poly) -> Poly {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    fn degree(a: &Poly) -> Option<usize> {
        a.len().checked_sub(1)
    }

    fn sub(f: &PrimeField, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let get = |p: &Poly, i: usize| p.get(i).copied().unwrap_or(FieldElement::ZERO);
        trim((0..n).map(|i| f.sub(get(a, i), get(b, i))).collect())
    }

    fn mul(f: &PrimeField, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    /// Quotient and remainder; `b` nonzero.
    fn divrem(f: &PrimeField, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = degree(b).expect("nonzero divisor");
        let inv = f.inv(b[db]).expect("nonzero leading coefficient");
        let mut r = trim(a.clone());
        let mut q = vec![FieldElement::ZERO; r.len().saturating_sub(db)];
        while let Some(dr) = degree(&r).filter(|&dr| dr >= db) {
            let c = f.mul(r[dr], inv);
            q[dr - db] = c;
            for (i, &bi) in b.iter().enumerate() {
                r[dr - db + i] = f.sub(r[dr - db + i], f.mul(c, bi));
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    fn monic(f: &PrimeField, a: Poly) -> Poly {
        match a.last() {
            Some(&lc) => {
                let inv = f.inv(lc).expect("nonzero");
                a.into_iter().map(|c| f.mul(c, inv)).collect()
            }
            None => a,
        }
    }

    fn gcd(f: &PrimeField, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
        while !b.is_empty() {
            let (_, r) = divrem(f, &a, &b);
            a = b;
            b = r;
        }
        monic(f, a)
    }

    fn powmod(f: &PrimeField, base: &Poly, mut e: u64, modulus: &Poly) -> Poly {
        let mut acc = divrem(f, &vec![FieldElement::ONE], modulus).1;
        let mut b = divrem(f, base, modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = divrem(f, &mul(f, &acc, &b), modulus).1;
            }
            e >>= 1;
            if e > 0 {
                b = divrem(f, &mul(f, &b, &b), modulus).1;
            }
        }
        acc
    }

    /// Roots of `m`, which must split into distinct linear factors over F_p
    /// (checked through `gcd(m, x^p − x) = m`). Requires odd `p`.
    pub(super) fn split_roots(f: &PrimeField, m: &Poly) -> Result<Vec<FieldElement>> {
        let m = monic(f, trim(m.clone()));
        let x = vec![FieldElement::ZERO, FieldElement::ONE];
        let xp = powmod(f, &x, f.modulus(), &m);
        let g = gcd(f, &m, &sub(f, &xp, &x));
        if g.len() != m.len() {
            return Err(Error::NotSplit);
        }
        let mut roots = Vec::new();
        split(f, &g, &mut roots);
        Ok(roots)
    }

    fn split(f: &PrimeField, g: &Poly, roots: &mut Vec<FieldElement>) {
        match degree(g) {
            None | Some(0) => {}
            Some(1) => roots.push(f.neg(f.div(g[0], g[1]).expect("nonzero"))),
            Some(dg) => {
                let half = (f.modulus() - 1) / 2;
                for a in 0..f.modulus() {
                    let shifted = vec![f.elem(a), FieldElement::ONE];
                    let pw = powmod(f, &shifted, half, g);
                    let h = gcd(f, g, &sub(f, &pw, &vec![FieldElement::ONE]));
                    if let Some(dh) = degree(&h) {
                        if dh > 0 && dh < dg {
                            let (q, _) = divrem(f, g, &h);
                            split(f, &h, roots);
                            split(f, &monic(f, q), roots);
                            return;
                        }
                    }
                }
                unreachable!("distinct roots are separated by some shift");
            }
        }
    }

}
