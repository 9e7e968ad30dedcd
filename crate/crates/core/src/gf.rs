//! Arithmetic in a prime field F_p and dense linear algebra over it.
//!
//! Residues live in `u64` with `p < 2^32`, so a product of two residues fits
//! in the machine word before reduction.

use std::fmt;

use crate::error::{Error, Result};

/// A residue modulo the ambient prime. Always in `0..p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field context: every element of one computation shares it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> FieldElement {
        FieldElement(v % self.p)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 * b.0 % self.p)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(t0))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Iterates over all residues `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(FieldElement)
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    /// Builds a matrix from rows of raw integers, reducing each entry mod p.
    pub fn from_rows_u64(field: &PrimeField, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = field.elem(v);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<FieldElement>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_columns(cols: &[Vec<FieldElement>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix columns");
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, field: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = field.mul(a, other[(k, j)]);
                    out[(i, j)] = field.add(out[(i, j)], prod);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &PrimeField, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "matrix/vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(FieldElement::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect()
    }

    pub fn sub(&self, field: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, field: &PrimeField, c: FieldElement) -> Matrix {
        let data = self.data.iter().map(|&a| field.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and the pivot columns, left to right.
    pub fn rref(&self, field: &PrimeField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = field.inv(m[(r, c)]).expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = field.mul(m[(r, j)], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = field.mul(factor, m[(r, j)]);
                    m[(i, j)] = field.sub(m[(i, j)], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        self.rref(field).1.len()
    }

    /// Basis of the right null space `{v : M v = 0}`.
    ///
    /// One vector per free column `f`: `v[f] = 1`, every other free entry 0,
    /// pivot entries solved from the RREF.
    pub fn kernel_basis(&self, field: &PrimeField) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![FieldElement::ZERO; self.cols];
                v[f] = FieldElement::ONE;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(r[(row, f)]);
                }
                v
            })
            .collect()
    }

    /// Basis of the column space: the original columns at the pivot positions.
    pub fn image_basis(&self, field: &PrimeField) -> Vec<Vec<FieldElement>> {
        let (_, pivots) = self.rref(field);
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// RREF of the rows, with zero rows dropped.
    pub fn row_space(&self, field: &PrimeField) -> Matrix {
        let (r, pivots) = self.rref(field);
        let mut out = r;
        out.data.truncate(pivots.len() * out.cols);
        out.rows = pivots.len();
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;

    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_and_huge_moduli() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(0), Err(Error::NotPrime(0)));
        assert!(matches!(PrimeField::new(1 << 33), Err(Error::ModulusTooLarge(_))));
        assert!(PrimeField::new(4294967291).is_ok());
    }

    #[test]
    fn inverses() {
        let f5 = gf(5);
        assert_eq!(f5.inv(f5.elem(2)).unwrap(), f5.elem(3));
        let f3 = gf(3);
        assert_eq!(f3.inv(f3.elem(1)).unwrap(), f3.elem(1));
        let f7 = gf(7);
        assert_eq!(f7.inv(f7.elem(3)).unwrap(), f7.elem(5));
        assert_eq!(f7.inv(FieldElement::ZERO), Err(Error::DivisionByZero(7)));
    }

    #[test]
    fn inverse_and_fermat_exhaustive_small_primes() {
        for p in (2..=101).filter(|&n| is_prime(n)) {
            let f = gf(p);
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE, "p={p} a={a}");
                assert_eq!(f.pow(a, p - 1), FieldElement::ONE, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn rref_examples() {
        let f5 = gf(5);
        let z = Matrix::zeros(2, 3);
        assert_eq!(z.rref(&f5), (z.clone(), vec![]));
        let id = Matrix::identity(3);
        assert_eq!(id.rref(&f5), (id.clone(), vec![0, 1, 2]));

        let f3 = gf(3);
        let m = Matrix::from_rows_u64(&f3, &[vec![1, 2], vec![2, 1]]);
        let (r, piv) = m.rref(&f3);
        assert_eq!(r, Matrix::from_rows_u64(&f3, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f5 = gf(5);
        assert!(Matrix::identity(4).kernel_basis(&f5).is_empty());
        let k = Matrix::zeros(3, 3).kernel_basis(&f5);
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.value(), u64::from(i == j));
            }
        }
    }

    #[test]
    fn kernel_canonical_form() {
        // x0 + 2 x1 + 3 x3 = 0, x2 + x3 = 0 over F_5
        let f5 = gf(5);
        let m = Matrix::from_rows_u64(&f5, &[vec![1, 2, 0, 3], vec![0, 0, 1, 1]]);
        let k = m.kernel_basis(&f5);
        let expect = vec![
            vec![f5.elem(3), f5.elem(1), f5.elem(0), f5.elem(0)],
            vec![f5.elem(2), f5.elem(0), f5.elem(4), f5.elem(1)],
        ];
        assert_eq!(k, expect);
    }

    #[test]
    fn image_and_product() {
        let f7 = gf(7);
        let m = Matrix::from_rows_u64(&f7, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let img = m.image_basis(&f7);
        assert_eq!(img.len(), 2);
        assert_eq!(img[0], m.column(0));
        let a = Matrix::from_rows_u64(&f7, &[vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_rows_u64(&f7, &[vec![5, 6], vec![0, 1]]);
        // [[5, 8], [15, 22]] mod 7
        assert_eq!(a.mul(&f7, &b), Matrix::from_rows_u64(&f7, &[vec![5, 1], vec![1, 1]]));
        assert_eq!(a.mul_vec(&f7, &[f7.elem(1), f7.elem(1)]), vec![f7.elem(3), f7.elem(0)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix_strategy() -> impl Strategy<Value = (u64, Vec<Vec<u64>>)> {
            (prop::sample::select(vec![2u64, 3, 5, 7]), 1usize..6, 1usize..6)
                .prop_flat_map(|(p, r, c)| (Just(p), prop::collection::vec(prop::collection::vec(0..p, c), r)))
        }

        proptest! {
            #[test]
            fn rref_is_idempotent((p, rows) in matrix_strategy()) {
                let f = gf(p);
                let m = Matrix::from_rows_u64(&f, &rows);
                let (r, piv) = m.rref(&f);
                let (rr, piv2) = r.rref(&f);
                prop_assert_eq!(&r, &rr);
                prop_assert_eq!(piv, piv2);
            }

            #[test]
            fn kernel_is_annihilated_and_rank_nullity((p, rows) in matrix_strategy()) {
                let f = gf(p);
                let m = Matrix::from_rows_u64(&f, &rows);
                let k = m.kernel_basis(&f);
                for v in &k {
                    prop_assert!(m.mul_vec(&f, v).iter().all(|x| x.is_zero()));
                }
                prop_assert_eq!(m.rank(&f) + k.len(), m.cols());
            }
        }
    }
}
