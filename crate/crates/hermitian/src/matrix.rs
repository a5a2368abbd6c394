//! Dense exact matrices over an involutive field, with the row-reduction
//! routines the subspace and adjoint computations need.

use crate::scalar::Scalar;
use crate::HermitianError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<K: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> std::fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<K: Scalar> Matrix<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Result<Self, HermitianError> {
        if data.len() != rows * cols {
            return Err(HermitianError::Shape(format!(
                "{rows}×{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self, HermitianError> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(HermitianError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| K::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { K::one() } else { K::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<K> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix<K> {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn conj(&self) -> Matrix<K> {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).conj())
    }

    pub fn conj_transpose(&self) -> Matrix<K> {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn scale(&self, k: &K) -> Matrix<K> {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c).mul(k))
    }

    pub fn add(&self, other: &Matrix<K>) -> Result<Matrix<K>, HermitianError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(HermitianError::Shape("matrix addition shape mismatch".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).add(other.at(r, c))
        }))
    }

    pub fn sub(&self, other: &Matrix<K>) -> Result<Matrix<K>, HermitianError> {
        self.add(&other.scale(&K::from_int(-1)))
    }

    pub fn mul(&self, other: &Matrix<K>) -> Result<Matrix<K>, HermitianError> {
        if self.cols != other.rows {
            return Err(HermitianError::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
            }
            acc
        }))
    }

    pub fn apply(&self, v: &[K]) -> Result<Vec<K>, HermitianError> {
        if v.len() != self.cols {
            return Err(HermitianError::Shape("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = K::zero();
                for c in 0..self.cols {
                    acc = acc.add(&self.at(r, c).mul(&v[c]));
                }
                acc
            })
            .collect())
    }

    pub fn hstack(&self, other: &Matrix<K>) -> Result<Matrix<K>, HermitianError> {
        if self.rows != other.rows {
            return Err(HermitianError::Shape("hstack row mismatch".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Matrix<K>) -> Result<Matrix<K>, HermitianError> {
        if self.cols != other.cols {
            return Err(HermitianError::Shape("vstack column mismatch".into()));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        }))
    }

    pub fn block_diag(&self, other: &Matrix<K>) -> Matrix<K> {
        Self::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |r, c| {
                if r < self.rows && c < self.cols {
                    self.at(r, c).clone()
                } else if r >= self.rows && c >= self.cols {
                    other.at(r - self.rows, c - self.cols).clone()
                } else {
                    K::zero()
                }
            },
        )
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<K> {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    /// Reduced row-echelon form and its pivot columns; the canonical form
    /// for row-space comparison.
    pub fn rref(&self) -> (Matrix<K>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pr, lead);
            let inv = m.at(lead, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                m.set(lead, c, m.at(lead, c).mul(&inv));
            }
            for r in 0..m.rows {
                if r != lead && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.at(r, c).sub(&factor.mul(m.at(lead, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace `{v : Mv = 0}`, as matrix rows.
    pub fn nullspace(&self) -> Matrix<K> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.at(i, f).neg();
            }
            basis.push(v);
        }
        Matrix::from_rows(basis).unwrap_or_else(|_| Matrix::zero(0, self.cols))
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Result<K, HermitianError> {
        if !self.is_square() {
            return Err(HermitianError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(K::zero());
            };
            if pr != col {
                m.swap_rows(pr, col);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in (col + 1)..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).mul(&inv);
                    for c in col..n {
                        let v = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix<K>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::identity(0));
        }
        let aug = self.hstack(&Matrix::identity(n)).expect("same rows");
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.submatrix(&rows, &cols))
    }

    /// Leading principal minors, in order of size 1..=n.
    pub fn leading_principal_minors(&self) -> Result<Vec<K>, HermitianError> {
        if !self.is_square() {
            return Err(HermitianError::Shape("minors of a non-square matrix".into()));
        }
        (1..=self.rows)
            .map(|k| {
                let idx: Vec<usize> = (0..k).collect();
                self.submatrix(&idx, &idx).det()
            })
            .collect()
    }
}
