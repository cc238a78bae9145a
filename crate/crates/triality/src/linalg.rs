//! Exact dense linear algebra over a field, used with Q and Q(ω) scalars.
//!
//! Elimination is plain Gauss–Jordan with the first nonzero entry as pivot:
//! with exact arithmetic there is nothing to gain from pivot heuristics, and
//! a fixed pivot rule keeps every canonical form deterministic. Matrices here
//! are at most 28×28, so no effort is spent on sparsity.

use std::fmt;
use std::ops::{Neg, Sub};

use num::{One, Zero};

use crate::exact::{Eis, Rat};

/// Field scalar usable in [`Matrix`].
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rat {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for Eis {
    fn inv(&self) -> Option<Self> {
        Eis::inv(self)
    }
}

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S: Scalar = Rat> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
            }
            acc
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(i, k).clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn stack_vertical(blocks: &[&Matrix<S>]) -> Self {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols));
        let mut rows = Vec::new();
        for b in blocks {
            rows.extend(b.row_vecs());
        }
        Matrix::from_rows(rows)
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    /// Reduced row echelon form; the row space is unchanged and the result is
    /// the unique RREF representative of it.
    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(pr) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, pr);
            let inv = m.at(pivot_row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.at(pivot_row, j).clone() * inv.clone();
                *m.at_mut(pivot_row, j) = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for j in col..m.cols {
                        let v = m.at(r, j).clone()
                            - factor.clone() * m.at(pivot_row, j).clone();
                        *m.at_mut(r, j) = v;
                    }
                }
            }
            pivot_row += 1;
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Columns holding a leading 1, assuming `self` is in RREF.
    fn pivot_cols(&self) -> Vec<usize> {
        let mut pivots = Vec::new();
        for i in 0..self.rows {
            if let Some(j) = (0..self.cols).find(|&j| !self.at(i, j).is_zero()) {
                pivots.push(j);
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().pivot_cols().len()
    }

    /// Basis of the right kernel {x : Mx = 0}, one vector per row.
    pub fn kernel(&self) -> Matrix<S> {
        let r = self.rref();
        let pivots = r.pivot_cols();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::zeros(0, self.cols)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Determinant by elimination. Panics if not square.
    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = S::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return S::zero();
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone() * inv.clone();
                for j in col..n {
                    let v = m.at(r, j).clone() - factor.clone() * m.at(col, j).clone();
                    *m.at_mut(r, j) = v;
                }
            }
        }
        det
    }

    /// One solution x of Mx = b, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        aug = aug.rref();
        let pivots = aug.pivot_cols();
        if pivots.contains(&self.cols) {
            return None; // a row reads 0 = 1
        }
        let mut x = vec![S::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(i, self.cols).clone();
        }
        Some(x)
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of Q^n held as its unique RREF basis, one basis vector
/// per row. Equality of subspaces is therefore plain `==` on the bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix<Rat>,
}

impl Subspace {
    /// Subspace spanned by the rows of `m`.
    pub fn from_rows(m: &Matrix<Rat>) -> Self {
        let ambient = m.cols();
        let r = m.rref();
        let rank = r.pivot_cols().len();
        let basis = if rank == 0 {
            Matrix::zeros(0, ambient)
        } else {
            Matrix::from_rows(r.row_vecs().into_iter().take(rank).collect())
        };
        Subspace { ambient, basis }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rat>]) -> Self {
        if vecs.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_rows(&Matrix::from_rows(vecs.to_vec()))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<Rat> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(|x| Zero::is_zero(x)) {
            return true;
        }
        if self.dim() == 0 {
            return false;
        }
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    /// Largest subspace contained in both, via the kernel of the stacked
    /// dual system: a kernel vector (α, β) of [Uᵀ | −Wᵀ] encodes one element
    /// αᵀU = βᵀW of the intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient, other.ambient,
            "ambient-dimension mismatch in subspace intersection"
        );
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let ut = self.basis.transpose();
        let wt = other.basis.transpose().scale(&-Rat::one());
        let stacked = Matrix::from_fn(self.ambient, self.dim() + other.dim(), |i, j| {
            if j < self.dim() {
                ut.at(i, j).clone()
            } else {
                wt.at(i, j - self.dim()).clone()
            }
        });
        let ker = stacked.kernel();
        let mut vecs = Vec::new();
        for k in 0..ker.rows() {
            let alpha = &ker.row(k)[..self.dim()];
            let mut v = vec![Rat::zero(); self.ambient];
            for (i, a) in alpha.iter().enumerate() {
                for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                    *x += a * b;
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.ambient, &vecs)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Subspace::from_vectors(self.ambient, &rows)
    }
}
