//! Exact finite-dimensional Hermitian spaces: a positive-definite Hermitian
//! Gram matrix over an involutive field, subspaces in reduced row-echelon
//! canonical form, orthocomplements, splitting, and projectors.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::HermitianError;
use num::Signed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianSpace<K: Scalar> {
    dim: usize,
    gram: Matrix<K>,
}

impl<K: Scalar> HermitianSpace<K> {
    /// Validates the Gram matrix: Hermitian symmetry and positive
    /// definiteness, the latter certified by all leading principal minors
    /// being positive rationals.
    pub fn new(gram: Matrix<K>) -> Result<Self, HermitianError> {
        if !gram.is_square() {
            return Err(HermitianError::Shape("Gram matrix must be square".into()));
        }
        if gram != gram.conj_transpose() {
            return Err(HermitianError::NotHermitian);
        }
        for minor in gram.leading_principal_minors()? {
            let r = minor
                .to_rational()
                .ok_or(HermitianError::NotPositiveDefinite)?;
            if !r.is_positive() {
                return Err(HermitianError::NotPositiveDefinite);
            }
        }
        Ok(HermitianSpace {
            dim: gram.rows(),
            gram,
        })
    }

    /// The standard inner product on `K^n`.
    pub fn standard(n: usize) -> Self {
        HermitianSpace {
            dim: n,
            gram: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &Matrix<K> {
        &self.gram
    }

    /// `⟨u, v⟩ = uᵀ G v̄`: linear in the first slot, conjugate-linear in the
    /// second.
    pub fn inner(&self, u: &[K], v: &[K]) -> Result<K, HermitianError> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(HermitianError::Shape("vector length mismatch".into()));
        }
        let mut acc = K::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc = acc.add(&u[i].mul(self.gram.at(i, j)).mul(&v[j].conj()));
            }
        }
        Ok(acc)
    }

    pub fn orthogonal(&self, u: &[K], v: &[K]) -> Result<bool, HermitianError> {
        Ok(self.inner(u, v)?.is_zero())
    }

    /// ⟨u, u⟩ as a rational; positive definiteness keeps it real.
    pub fn length(&self, u: &[K]) -> Result<num::BigRational, HermitianError> {
        Ok(self
            .inner(u, u)?
            .to_rational()
            .expect("⟨u,u⟩ is invariant under the involution"))
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &HermitianSpace<K>) -> HermitianSpace<K> {
        HermitianSpace {
            dim: self.dim + other.dim,
            gram: self.gram.block_diag(&other.gram),
        }
    }

    /// The span of a list of vectors, as a canonical subspace.
    pub fn span(&self, vectors: &[Vec<K>]) -> Result<Subspace<K>, HermitianError> {
        for v in vectors {
            if v.len() != self.dim {
                return Err(HermitianError::Shape("vector length mismatch".into()));
            }
        }
        let m = if vectors.is_empty() {
            Matrix::zero(0, self.dim)
        } else {
            Matrix::from_rows(vectors.to_vec())?
        };
        Ok(Subspace::from_spanning(self.dim, m))
    }

    pub fn zero_subspace(&self) -> Subspace<K> {
        Subspace::from_spanning(self.dim, Matrix::zero(0, self.dim))
    }

    pub fn full_subspace(&self) -> Subspace<K> {
        Subspace::from_spanning(self.dim, Matrix::identity(self.dim))
    }

    /// The orthocomplement: the exact nullspace of the pairing against a
    /// basis of `s`.
    pub fn orthocomplement(&self, s: &Subspace<K>) -> Subspace<K> {
        // x ⊥ b ⟺ Σᵢ xᵢ (G b̄)ᵢ = 0, one linear condition per basis row
        let m = s
            .basis()
            .conj()
            .mul(&self.gram.transpose())
            .expect("shapes agree");
        Subspace::from_spanning(self.dim, m.nullspace())
    }

    /// S + S⊥ spans everything; with anisotropy this makes S splitting.
    pub fn is_splitting(&self, s: &Subspace<K>) -> bool {
        let comp = self.orthocomplement(s);
        s.dim() + comp.dim() == self.dim && s.intersect(&comp).dim() == 0
    }

    /// The orthogonal projector onto `s`, as a matrix acting on column
    /// vectors.
    pub fn projector(&self, s: &Subspace<K>) -> Result<Matrix<K>, HermitianError> {
        if s.dim() == 0 {
            return Ok(Matrix::zero(self.dim, self.dim));
        }
        let b = s.basis();
        let w = b
            .mul(&self.gram)?
            .mul(&b.conj_transpose())?;
        let w_inv = w
            .inverse()
            .ok_or(HermitianError::NotPositiveDefinite)?;
        // π = Bᵀ (W⁻¹)ᵀ B̄ Gᵀ, so that v − πv ⊥ s for every v
        b.transpose()
            .mul(&w_inv.transpose())?
            .mul(&b.conj())?
            .mul(&self.gram.transpose())
    }
}

/// Splitting verified for a sample of subspaces.
#[derive(Clone, Debug)]
pub struct OrthomodularReport {
    pub checked: usize,
    /// Indices of sampled subspaces that failed to split (none are expected
    /// for positive-definite forms).
    pub failures: Vec<usize>,
}

impl OrthomodularReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Asserts `S + S⊥ = H` and `S ∩ S⊥ = 0` for every sampled subspace.
pub fn verify_orthomodular<K: Scalar>(
    h: &HermitianSpace<K>,
    sample: &[Subspace<K>],
) -> OrthomodularReport {
    let failures = sample
        .iter()
        .enumerate()
        .filter(|(_, s)| !h.is_splitting(s))
        .map(|(i, _)| i)
        .collect();
    OrthomodularReport {
        checked: sample.len(),
        failures,
    }
}

/// A subspace, stored through its reduced row-echelon basis; equality of
/// subspaces is equality of matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<K: Scalar> {
    ambient_dim: usize,
    basis: Matrix<K>,
}

impl<K: Scalar> Subspace<K> {
    fn from_spanning(ambient_dim: usize, spanning: Matrix<K>) -> Self {
        let (r, pivots) = spanning.rref();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..ambient_dim).collect();
        Subspace {
            ambient_dim,
            basis: r.submatrix(&rows, &cols),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<K> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<K>> {
        (0..self.dim()).map(|r| self.basis.row(r)).collect()
    }

    pub fn contains(&self, v: &[K]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let stacked = self
            .basis
            .vstack(&Matrix::from_rows(vec![v.to_vec()]).expect("single row"))
            .expect("same ambient dimension");
        stacked.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace<K>) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        let stacked = self
            .basis
            .vstack(&other.basis)
            .expect("same ambient dimension");
        Subspace::from_spanning(self.ambient_dim, stacked)
    }

    /// Intersection via the kernel of the stacked-basis relation.
    pub fn intersect(&self, other: &Subspace<K>) -> Subspace<K> {
        // rows of A and B span the two spaces; solutions of
        // xᵀA = yᵀB give the common vectors xᵀA
        let a = &self.basis;
        let b = &other.basis;
        if a.rows() == 0 || b.rows() == 0 {
            return Subspace::from_spanning(self.ambient_dim, Matrix::zero(0, self.ambient_dim));
        }
        let stacked = a
            .transpose()
            .hstack(&b.transpose().scale(&K::from_int(-1)))
            .expect("same ambient dimension");
        let ns = stacked.nullspace();
        let mut vectors = Vec::new();
        for r in 0..ns.rows() {
            let coeffs = ns.row(r);
            let x = &coeffs[..a.rows()];
            let mut v = vec![K::zero(); self.ambient_dim];
            for (i, xi) in x.iter().enumerate() {
                for c in 0..self.ambient_dim {
                    v[c] = v[c].add(&xi.mul(a.at(i, c)));
                }
            }
            vectors.push(v);
        }
        let m = if vectors.is_empty() {
            Matrix::zero(0, self.ambient_dim)
        } else {
            Matrix::from_rows(vectors).expect("uniform length")
        };
        Subspace::from_spanning(self.ambient_dim, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gaussian, Rational};

    fn qv(v: Vec<i64>) -> Vec<Rational> {
        v.into_iter().map(Rational::from_int).collect()
    }

    fn gv(v: Vec<(i64, i64)>) -> Vec<Gaussian> {
        v.into_iter().map(|(a, b)| Gaussian::from_ints(a, b)).collect()
    }

    #[test]
    fn standard_inner_product_examples() {
        let h = HermitianSpace::<Gaussian>::standard(2);
        // ⟨(1,i),(1,-i)⟩ = 1 + i·(−i)* = 1 + i·i = 0
        let u = gv(vec![(1, 0), (0, 1)]);
        let v = gv(vec![(1, 0), (0, -1)]);
        assert!(h.inner(&u, &v).unwrap().is_zero());
        let zero = gv(vec![(0, 0), (0, 0)]);
        assert!(h.inner(&zero, &zero).unwrap().is_zero());

        let g = Matrix::from_rows(vec![qv(vec![2, 0]), qv(vec![0, 1])]).unwrap();
        let h = HermitianSpace::new(g).unwrap();
        let u = qv(vec![1, 1]);
        assert_eq!(h.inner(&u, &u).unwrap(), Rational::from_int(3));
    }

    #[test]
    fn gram_validation() {
        let asym = Matrix::from_rows(vec![qv(vec![1, 2]), qv(vec![0, 1])]).unwrap();
        assert!(matches!(
            HermitianSpace::new(asym),
            Err(HermitianError::NotHermitian)
        ));
        let indef = Matrix::from_rows(vec![qv(vec![1, 0]), qv(vec![0, -1])]).unwrap();
        assert!(matches!(
            HermitianSpace::new(indef),
            Err(HermitianError::NotPositiveDefinite)
        ));
        // Hermitian with complex off-diagonal entries, positive definite
        let g = Matrix::from_rows(vec![
            gv(vec![(2, 0), (0, 1)]),
            gv(vec![(0, -1), (2, 0)]),
        ])
        .unwrap();
        assert!(HermitianSpace::new(g).is_ok());
    }

    #[test]
    fn orthocomplement_examples() {
        let h = HermitianSpace::<Gaussian>::standard(2);
        let s = h.span(&[gv(vec![(1, 0), (0, 1)])]).unwrap();
        let c = h.orthocomplement(&s);
        // lin{(i,1)} canonicalizes to lin{(1,−i)}
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&gv(vec![(0, 1), (1, 0)])));

        let full = h.full_subspace();
        assert_eq!(h.orthocomplement(&full).dim(), 0);

        let h3 = HermitianSpace::<Rational>::standard(3);
        let s = h3.span(&[qv(vec![1, 1, 0])]).unwrap();
        let c = h3.orthocomplement(&s);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&qv(vec![1, -1, 0])));
        assert!(c.contains(&qv(vec![0, 0, 1])));
    }

    #[test]
    fn splitting_and_double_complement() {
        let g = Matrix::from_rows(vec![qv(vec![2, 0]), qv(vec![0, 1])]).unwrap();
        let h = HermitianSpace::new(g).unwrap();
        let s = h.span(&[qv(vec![1, 1])]).unwrap();
        assert!(h.is_splitting(&s));
        let c = h.orthocomplement(&s);
        assert!(c.contains(&qv(vec![1, -2])));
        assert_eq!(h.orthocomplement(&c), s);
        assert!(h.is_splitting(&h.zero_subspace()));
    }

    #[test]
    fn projector_calculus() {
        let h = HermitianSpace::<Rational>::standard(2);
        let s = h.span(&[qv(vec![1, 1])]).unwrap();
        let p = h.projector(&s).unwrap();
        assert_eq!(p.mul(&p).unwrap(), p, "idempotent");
        assert_eq!(p.conj_transpose(), p, "self-adjoint w.r.t. standard form");
        let v = qv(vec![1, 0]);
        let pv = p.apply(&v).unwrap();
        assert!(s.contains(&pv));
        let diff: Vec<Rational> = v
            .iter()
            .zip(&pv)
            .map(|(a, b)| Scalar::sub(a, b))
            .collect();
        assert!(h.orthogonal(&diff, &s.basis().row(0)).unwrap());

        let q = h.projector(&h.orthocomplement(&s)).unwrap();
        assert_eq!(p.add(&q).unwrap(), Matrix::identity(2), "id − π = π⊥");
    }

    #[test]
    fn subspace_lattice_operations() {
        let h = HermitianSpace::<Rational>::standard(3);
        let s1 = h.span(&[qv(vec![1, 0, 0]), qv(vec![0, 1, 0])]).unwrap();
        let s2 = h.span(&[qv(vec![0, 1, 0]), qv(vec![0, 0, 1])]).unwrap();
        let meet = s1.intersect(&s2);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&qv(vec![0, 1, 0])));
        let join = s1.sum(&s2);
        assert_eq!(join.dim(), 3);
        assert!(h.zero_subspace().is_subspace_of(&s1));
        assert!(meet.is_subspace_of(&s1) && meet.is_subspace_of(&s2));
    }
}
