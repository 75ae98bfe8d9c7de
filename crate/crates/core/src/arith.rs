//! Arithmetic in a prime field `F_p` and dense linear algebra over it.
//!
//! Every degreewise computation in the crate (Hilbert functions, Ext groups,
//! Čech cohomology) ends up as a rank computation on a [`DenseMatrix`].
//! Elimination uses the first nonzero pivot in each column and skips zero
//! entries of the pivot row, which matters because the matrices coming from
//! monomial multiplication maps are very sparse.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Characteristic used when the caller does not choose one.
pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field `F_p`. Elements are stored as `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        t.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn elem(self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            p: self.p,
        }
    }
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn inverse(self) -> Option<FieldElement> {
        (self.value != 0).then(|| FieldElement {
            value: self.field().inv(self.value),
            p: self.p,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! field_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                assert_eq!(self.p, rhs.p, "field elements with different moduli");
                FieldElement {
                    value: self.field().$method(self.value, rhs.value),
                    p: self.p,
                }
            }
        }
    };
}

field_binop!(Add, add);
field_binop!(Sub, sub);
field_binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field().neg(self.value),
            p: self.p,
        }
    }
}

/// Row-major dense matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.reduce(v));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        FieldElement {
            value: self.get(i, j),
            p: self.field.p,
        }
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(false).len()
    }

    /// Brings the matrix to reduced row echelon form in place and returns the
    /// pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        self.eliminate(true)
    }

    /// Gaussian elimination with first-nonzero pivoting. With `full` the
    /// result is reduced (pivots are 1 and alone in their column); otherwise
    /// only rows below each pivot are cleared.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let f = self.field;
        let p = f.p as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        let mut nz: Vec<usize> = Vec::with_capacity(cols);
        for c in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if r != prow {
                for k in c..cols {
                    self.data.swap(r * cols + k, prow * cols + k);
                }
            }
            let inv = f.inv(self.data[prow * cols + c]) as u64;
            nz.clear();
            for k in c..cols {
                let v = self.data[prow * cols + k];
                if v != 0 {
                    self.data[prow * cols + k] = ((v as u64 * inv) % p) as u32;
                    nz.push(k);
                }
            }
            let start = if full { 0 } else { prow + 1 };
            for r2 in start..self.rows {
                if r2 == prow {
                    continue;
                }
                let factor = self.data[r2 * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor as u64;
                let (lo, hi) = if r2 < prow {
                    let (a, b) = self.data.split_at_mut(prow * cols);
                    (&mut a[r2 * cols..(r2 + 1) * cols], &b[..cols])
                } else {
                    let (a, b) = self.data.split_at_mut(r2 * cols);
                    (&mut b[..cols], &a[prow * cols..(prow + 1) * cols])
                };
                for &k in &nz {
                    lo[k] = ((lo[k] as u64 + neg * hi[k] as u64) % p) as u32;
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    /// Columns form a basis of the right kernel; shape `cols x (cols - rank)`.
    pub fn kernel_basis(&self) -> DenseMatrix {
        let mut work = self.clone();
        let pivots = work.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = work.get(r, fc);
                if v != 0 {
                    basis.set(pc, k, f.neg(v));
                }
            }
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// `dim ker B - rank A` for a composable pair `A: U -> V`, `B: V -> W` with
/// `B A = 0`.
pub fn homology_dim(a: &DenseMatrix, b: &DenseMatrix) -> Result<usize> {
    assert_eq!(a.rows(), b.cols(), "matrices are not composable");
    if !b.mul(a).is_zero() {
        return Err(Error::ComposeNonzero);
    }
    Ok(homology_dim_unchecked(a, b))
}

/// As [`homology_dim`] without verifying `B A = 0`.
pub(crate) fn homology_dim_unchecked(a: &DenseMatrix, b: &DenseMatrix) -> usize {
    b.nullity() - a.rank()
}
