//! Linear maps between Hermitian spaces, their exact adjoints, and the
//! unitary / isometry / projection taxonomy.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::space::{HermitianSpace, Subspace};
use crate::HermitianError;

/// A linear map, acting on column vectors: `φ(v) = M v` with `M` of shape
/// `cod.dim × dom.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<K: Scalar> {
    dom: HermitianSpace<K>,
    cod: HermitianSpace<K>,
    mat: Matrix<K>,
}

impl<K: Scalar> LinearMap<K> {
    pub fn new(
        dom: HermitianSpace<K>,
        cod: HermitianSpace<K>,
        mat: Matrix<K>,
    ) -> Result<Self, HermitianError> {
        if mat.rows() != cod.dim() || mat.cols() != dom.dim() {
            return Err(HermitianError::Shape(format!(
                "map matrix must be {}×{}, got {}×{}",
                cod.dim(),
                dom.dim(),
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(LinearMap { dom, cod, mat })
    }

    pub fn identity(h: &HermitianSpace<K>) -> Self {
        LinearMap {
            dom: h.clone(),
            cod: h.clone(),
            mat: Matrix::identity(h.dim()),
        }
    }

    pub fn zero(dom: &HermitianSpace<K>, cod: &HermitianSpace<K>) -> Self {
        LinearMap {
            dom: dom.clone(),
            cod: cod.clone(),
            mat: Matrix::zero(cod.dim(), dom.dim()),
        }
    }

    pub fn dom(&self) -> &HermitianSpace<K> {
        &self.dom
    }

    pub fn cod(&self) -> &HermitianSpace<K> {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.mat
    }

    pub fn apply(&self, v: &[K]) -> Result<Vec<K>, HermitianError> {
        self.mat.apply(v)
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &LinearMap<K>, inner: &LinearMap<K>) -> Result<LinearMap<K>, HermitianError> {
        if inner.cod != outer.dom {
            return Err(HermitianError::Shape("maps are not composable".into()));
        }
        Ok(LinearMap {
            dom: inner.dom.clone(),
            cod: outer.cod.clone(),
            mat: outer.mat.mul(&inner.mat)?,
        })
    }

    pub fn add(&self, other: &LinearMap<K>) -> Result<LinearMap<K>, HermitianError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(HermitianError::Shape("maps do not share a hom-set".into()));
        }
        Ok(LinearMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.add(&other.mat)?,
        })
    }

    /// The unique linear adjoint: `⟨φu, v⟩ = ⟨u, φ*v⟩` for all `u`, `v`.
    ///
    /// For the standard form this is the conjugate transpose; in general the
    /// Gram-twisted version `(G₁ᵀ)⁻¹ Mᴴ G₂ᵀ`. The defining identity is
    /// re-verified on all basis pairs after construction.
    pub fn adjoint(&self) -> LinearMap<K> {
        let standard = self.dom.gram() == &Matrix::identity(self.dom.dim())
            && self.cod.gram() == &Matrix::identity(self.cod.dim());
        let mat = if standard {
            self.mat.conj_transpose()
        } else {
            let g1t = self.dom.gram().transpose();
            let g2t = self.cod.gram().transpose();
            let g1t_inv = g1t.inverse().expect("Gram matrices are invertible");
            g1t_inv
                .mul(&self.mat.conj_transpose())
                .and_then(|m| m.mul(&g2t))
                .expect("shapes agree")
        };
        let adj = LinearMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            mat,
        };
        debug_assert!(is_adjoint_pair(self, &adj).unwrap());
        adj
    }

    pub fn image(&self) -> Subspace<K> {
        let cols: Vec<Vec<K>> = (0..self.mat.cols())
            .map(|c| (0..self.mat.rows()).map(|r| self.mat.at(r, c).clone()).collect())
            .collect();
        self.cod.span(&cols).expect("columns live in the codomain")
    }

    pub fn kernel(&self) -> Subspace<K> {
        Subspace::from_nullspace_of(&self.dom, &self.mat)
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.mat == Matrix::identity(self.dom.dim())
    }

    /// Block-diagonal sum of maps between direct sums.
    pub fn direct_sum(&self, other: &LinearMap<K>) -> LinearMap<K> {
        let sum = LinearMap {
            dom: self.dom.direct_sum(&other.dom),
            cod: self.cod.direct_sum(&other.cod),
            mat: self.mat.block_diag(&other.mat),
        };
        debug_assert_eq!(
            sum.adjoint().mat,
            self.adjoint().mat.block_diag(&other.adjoint().mat),
            "the adjoint of a blockwise sum is the blockwise sum of adjoints"
        );
        sum
    }
}

impl<K: Scalar> Subspace<K> {
    fn from_nullspace_of(h: &HermitianSpace<K>, m: &Matrix<K>) -> Subspace<K> {
        let ns = m.nullspace();
        let rows: Vec<Vec<K>> = (0..ns.rows()).map(|r| ns.row(r)).collect();
        h.span(&rows).expect("nullspace vectors live in the domain")
    }
}

/// `⟨φu, v⟩ = ⟨u, ψv⟩` checked on all basis pairs; exactness makes this a
/// complete check for linear maps.
pub fn is_adjoint_pair<K: Scalar>(
    phi: &LinearMap<K>,
    psi: &LinearMap<K>,
) -> Result<bool, HermitianError> {
    if psi.dom() != phi.cod() || psi.cod() != phi.dom() {
        return Err(HermitianError::Shape("adjoint shapes do not match".into()));
    }
    let n = phi.dom().dim();
    let m = phi.cod().dim();
    let basis = |dim: usize, k: usize| -> Vec<K> {
        (0..dim).map(|i| if i == k { K::one() } else { K::zero() }).collect()
    };
    for i in 0..n {
        let ei = basis(n, i);
        let phi_ei = phi.apply(&ei)?;
        for j in 0..m {
            let fj = basis(m, j);
            let psi_fj = psi.apply(&fj)?;
            if phi.cod().inner(&phi_ei, &fj)? != phi.dom().inner(&ei, &psi_fj)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Morphism classes of a linear map, each decided by its defining identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearLabels<K: Scalar> {
    pub unitary: bool,
    pub isometry: bool,
    pub self_adjoint: bool,
    pub projection_onto: Option<Subspace<K>>,
}

pub fn classify_linear<K: Scalar>(phi: &LinearMap<K>) -> LinearLabels<K> {
    let adj = phi.adjoint();
    let endo = phi.dom() == phi.cod();
    let comp_left = LinearMap::compose(&adj, phi).expect("composable");
    let isometry = comp_left.is_identity();
    let unitary = isometry
        && LinearMap::compose(phi, &adj)
            .map(|m| m.is_identity())
            .unwrap_or(false);
    let self_adjoint = endo && adj.mat == phi.mat;
    let projection_onto = if endo
        && self_adjoint
        && phi.mat.mul(&phi.mat).map(|m| m == phi.mat).unwrap_or(false)
    {
        Some(phi.image())
    } else {
        None
    };
    LinearLabels {
        unitary,
        isometry,
        self_adjoint,
        projection_onto,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gaussian, Rational};

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rational::from_int).collect())
                .collect(),
        )
        .unwrap()
    }

    fn gm(rows: Vec<Vec<(i64, i64)>>) -> Matrix<Gaussian> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(a, b)| Gaussian::from_ints(a, b)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn standard_adjoint_is_conjugate_transpose() {
        let h = HermitianSpace::<Gaussian>::standard(2);
        let phi = LinearMap::new(h.clone(), h, gm(vec![vec![(0, 0), (1, 0)], vec![(0, 0), (0, 0)]])).unwrap();
        let adj = phi.adjoint();
        assert_eq!(adj.matrix(), &gm(vec![vec![(0, 0), (0, 0)], vec![(1, 0), (0, 0)]]));
    }

    #[test]
    fn identity_is_its_own_adjoint() {
        let h = HermitianSpace::<Rational>::standard(3);
        let id = LinearMap::identity(&h);
        assert_eq!(id.adjoint(), id);
    }

    #[test]
    fn gram_twisted_adjoint() {
        let g = qm(vec![vec![2, 0], vec![0, 1]]);
        let h = HermitianSpace::new(g).unwrap();
        let phi = LinearMap::new(h.clone(), h, qm(vec![vec![0, 1], vec![0, 0]])).unwrap();
        let adj = phi.adjoint();
        assert_eq!(adj.matrix(), &qm(vec![vec![0, 0], vec![2, 0]]));
    }

    #[test]
    fn classification_examples() {
        let h = HermitianSpace::<Rational>::standard(2);
        let rot = LinearMap::new(h.clone(), h.clone(), qm(vec![vec![0, -1], vec![1, 0]])).unwrap();
        let labels = classify_linear(&rot);
        assert!(labels.unitary && labels.isometry);
        assert!(!labels.self_adjoint);

        let half = Rational::new(1.into(), 2.into());
        let avg = Matrix::from_fn(2, 2, |_, _| half.clone());
        let proj = LinearMap::new(h.clone(), h.clone(), avg).unwrap();
        let labels = classify_linear(&proj);
        let expected = h.span(&[vec![Rational::from_int(1), Rational::from_int(1)]]).unwrap();
        assert_eq!(labels.projection_onto, Some(expected));
        assert!(labels.self_adjoint);
        assert!(!labels.unitary);

        let coord = LinearMap::new(h.clone(), h, qm(vec![vec![1, 0], vec![0, 0]])).unwrap();
        let labels = classify_linear(&coord);
        let e1 = coord.dom().span(&[vec![Rational::from_int(1), Rational::from_int(0)]]).unwrap();
        assert_eq!(labels.projection_onto, Some(e1));
    }

    #[test]
    fn direct_sum_of_maps_is_blockwise() {
        let q1 = HermitianSpace::<Gaussian>::standard(1);
        let phi = LinearMap::new(q1.clone(), q1.clone(), gm(vec![vec![(0, 1)]])).unwrap();
        let psi = LinearMap::new(q1.clone(), q1.clone(), gm(vec![vec![(2, 0)]])).unwrap();
        let sum = phi.direct_sum(&psi);
        assert_eq!(
            sum.matrix(),
            &gm(vec![vec![(0, 1), (0, 0)], vec![(0, 0), (2, 0)]])
        );
        let adj = sum.adjoint();
        assert_eq!(
            adj.matrix(),
            &gm(vec![vec![(0, -1), (0, 0)], vec![(0, 0), (2, 0)]])
        );
    }

    #[test]
    fn kernel_image_and_rank() {
        let h2 = HermitianSpace::<Rational>::standard(2);
        let phi = LinearMap::new(h2.clone(), h2.clone(), qm(vec![vec![1, 1], vec![0, 0]])).unwrap();
        assert_eq!(phi.rank(), 1);
        assert!(phi.kernel().contains(&[Rational::from_int(1), Rational::from_int(-1)]));
        assert!(phi
            .image()
            .contains(&[Rational::from_int(1), Rational::from_int(0)]));
    }
}
