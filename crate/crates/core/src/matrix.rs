//! Dense matrices over the exact coefficient field.

use crate::scalars::{QScalar, ScalarError};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QScalar>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![QScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = QScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QScalar) -> Self {
        let mut m = QMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Elementary matrix unit with a single nonzero entry. Indices are
    /// 1-based to match the usual e_{ij} notation.
    pub fn unit(n: usize, i: usize, j: usize, v: QScalar) -> Self {
        let mut m = QMatrix::zero(n, n);
        m[(i - 1, j - 1)] = v;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn add(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> QMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> QMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = QMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &QMatrix) -> QMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose with the scalar conjugation.
    pub fn dagger(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn column(&self, j: usize) -> Vec<QScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn apply(&self, v: &[QScalar]) -> Vec<QScalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = QScalar::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn kron(&self, rhs: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a.mul(b);
                    }
                }
            }
        }
        out
    }

    /// Diagonal inverse; errors on non-diagonal or singular input.
    pub fn inv_diagonal(&self) -> Result<QMatrix, ScalarError> {
        assert_eq!(self.rows, self.cols);
        if !self.is_diagonal() {
            return Err(ScalarError::Payload("matrix is not diagonal".into()));
        }
        let mut out = QMatrix::zero(self.rows, self.rows);
        for i in 0..self.rows {
            out[(i, i)] = self[(i, i)].inv()?;
        }
        Ok(out)
    }

    /// Exact rank by Gaussian elimination, pivoting on the first nonzero
    /// entry of each column.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let pinv = m[(row, col)].inv().expect("nonzero pivot");
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].mul(&pinv);
                    for c in col..m.cols {
                        let delta = m[(row, c)].mul(&factor);
                        m[(r, c)] = m[(r, c)].sub(&delta);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Basis of the right null space, by exact elimination.
    pub fn null_space(&self) -> Vec<Vec<QScalar>> {
        let mut m = self.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0usize;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let pinv = m[(row, col)].inv().expect("nonzero pivot");
            for c in 0..m.cols {
                m[(row, c)] = m[(row, c)].mul(&pinv);
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in 0..m.cols {
                        let delta = m[(row, c)].mul(&factor);
                        m[(r, c)] = m[(r, c)].sub(&delta);
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == m.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![QScalar::zero(); m.cols];
            v[free] = QScalar::one();
            for &(r, c) in &pivots {
                v[c] = m[(r, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b`; `None` when the system is singular or
    /// inconsistent. Square systems only.
    pub fn solve(&self, b: &[QScalar]) -> Option<Vec<QScalar>> {
        assert_eq!(self.rows, b.len());
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        let n = m.rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero())?;
            m.swap_rows(col, pivot);
            rhs.swap(col, pivot);
            let pinv = m[(col, col)].inv().ok()?;
            for r in 0..n {
                if r != col && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].mul(&pinv);
                    for c in col..n {
                        let delta = m[(col, c)].mul(&factor);
                        m[(r, c)] = m[(r, c)].sub(&delta);
                    }
                    let delta = rhs[col].mul(&factor);
                    rhs[r] = rhs[r].sub(&delta);
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(rhs[i].mul(&m[(i, i)].inv().ok()?));
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn map(&self, mut f: impl FnMut(&QScalar) -> QScalar) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QScalar)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(idx, v)| (idx / cols, idx % cols, v))
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = QScalar;
    fn index(&self, (i, j): (usize, usize)) -> &QScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Hermitian inner product of coordinate vectors, conjugating the left slot.
pub fn inner(a: &[QScalar], b: &[QScalar]) -> QScalar {
    assert_eq!(a.len(), b.len());
    let mut acc = QScalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.conj().mul(y));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q_int;

    #[test]
    fn rank_and_null_space() {
        // [[1, q], [q^-1, 1]] has rank 1
        let q = QScalar::q_power(1);
        let qinv = QScalar::q_power(-1);
        let mut m = QMatrix::zero(2, 2);
        m[(0, 0)] = QScalar::one();
        m[(0, 1)] = q;
        m[(1, 0)] = qinv;
        m[(1, 1)] = QScalar::one();
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_small() {
        let mut m = QMatrix::identity(2);
        m[(0, 1)] = q_int(2, 1);
        let b = vec![QScalar::from_i64(3), QScalar::from_i64(5)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
    }
}
