//! Strict square roots of unitaries, checked relative to a finite family of
//! projections: `V² = U` and `V` commutes with exactly the projections `U`
//! commutes with.

use crate::linmap::{classify_linear, LinearMap};
use crate::scalar::Scalar;
use crate::HermitianError;

#[derive(Clone, Debug)]
pub struct StrictSqrtReport {
    pub square_matches: bool,
    /// Projections that commute with one of U, V but not the other, by
    /// index into the supplied family.
    pub strictness_violations: Vec<usize>,
    /// The check is relative to the supplied projection family, not the
    /// full subspace lattice.
    pub family_size: usize,
}

impl StrictSqrtReport {
    pub fn passed(&self) -> bool {
        self.square_matches && self.strictness_violations.is_empty()
    }
}

/// Verifies the inputs (U, V unitary; every listed map a projection), then
/// checks `V∘V = U` and commutation agreement over the family.
pub fn strict_square_root_check<K: Scalar>(
    u: &LinearMap<K>,
    v: &LinearMap<K>,
    projections: &[LinearMap<K>],
) -> Result<StrictSqrtReport, HermitianError> {
    if !classify_linear(u).unitary {
        return Err(HermitianError::NotUnitary("U".into()));
    }
    if !classify_linear(v).unitary {
        return Err(HermitianError::NotUnitary("V".into()));
    }
    for (k, p) in projections.iter().enumerate() {
        if classify_linear(p).projection_onto.is_none() {
            return Err(HermitianError::NotAProjection(k));
        }
    }
    let square_matches = LinearMap::compose(v, v)? == *u;
    let commutes = |a: &LinearMap<K>, b: &LinearMap<K>| -> Result<bool, HermitianError> {
        Ok(LinearMap::compose(a, b)? == LinearMap::compose(b, a)?)
    };
    let mut violations = Vec::new();
    for (k, p) in projections.iter().enumerate() {
        if commutes(p, u)? != commutes(p, v)? {
            violations.push(k);
        }
    }
    Ok(StrictSqrtReport {
        square_matches,
        strictness_violations: violations,
        family_size: projections.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::scalar::{Gaussian, Rational};
    use crate::space::HermitianSpace;

    #[test]
    fn i_times_identity_is_a_strict_root_of_minus_identity() {
        let h = HermitianSpace::<Gaussian>::standard(2);
        let minus_id = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::identity(2).scale(&Gaussian::from_ints(-1, 0)),
        )
        .unwrap();
        let v = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::identity(2).scale(&Gaussian::i()),
        )
        .unwrap();
        let projections = crate::sqrt::tests::coordinate_plus_oblique_projections(&h);
        let report = strict_square_root_check(&minus_id, &v, &projections).unwrap();
        assert!(report.passed());
        assert_eq!(report.family_size, 4);
    }

    pub(crate) fn coordinate_plus_oblique_projections(
        h: &HermitianSpace<Gaussian>,
    ) -> Vec<LinearMap<Gaussian>> {
        let span1 = |v: Vec<Gaussian>| h.span(&[v]).unwrap();
        [
            span1(vec![Gaussian::from_ints(1, 0), Gaussian::from_ints(0, 0)]),
            span1(vec![Gaussian::from_ints(0, 0), Gaussian::from_ints(1, 0)]),
            span1(vec![Gaussian::from_ints(1, 0), Gaussian::from_ints(1, 0)]),
            span1(vec![Gaussian::from_ints(1, 0), Gaussian::from_ints(0, 1)]),
        ]
        .into_iter()
        .map(|s| LinearMap::new(h.clone(), h.clone(), h.projector(&s).unwrap()).unwrap())
        .collect()
    }

    #[test]
    fn rational_roots_of_minus_identity_fail_strictness() {
        let h = HermitianSpace::<Rational>::standard(2);
        let minus_id = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::identity(2).scale(&Rational::from_int(-1)),
        )
        .unwrap();
        // V = [[0,-1],[1,0]] squares to −id but is perturbed away from every
        // coordinate projector
        let v = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::from_rows(vec![
                vec![Rational::from_int(0), Rational::from_int(-1)],
                vec![Rational::from_int(1), Rational::from_int(0)],
            ])
            .unwrap(),
        )
        .unwrap();
        let p = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::from_rows(vec![
                vec![Rational::from_int(1), Rational::from_int(0)],
                vec![Rational::from_int(0), Rational::from_int(0)],
            ])
            .unwrap(),
        )
        .unwrap();
        let report = strict_square_root_check(&minus_id, &v, &[p]).unwrap();
        assert!(report.square_matches);
        assert_eq!(report.strictness_violations, vec![0]);
        assert!(!report.passed());
    }

    #[test]
    fn identity_is_its_own_strict_root() {
        let h = HermitianSpace::<Rational>::standard(2);
        let id = LinearMap::identity(&h);
        let p = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::from_rows(vec![
                vec![Rational::from_int(1), Rational::from_int(0)],
                vec![Rational::from_int(0), Rational::from_int(0)],
            ])
            .unwrap(),
        )
        .unwrap();
        assert!(strict_square_root_check(&id, &id, &[p]).unwrap().passed());
    }

    #[test]
    fn non_unitary_inputs_are_rejected() {
        let h = HermitianSpace::<Rational>::standard(2);
        let id = LinearMap::identity(&h);
        let z = LinearMap::zero(&h, &h);
        assert!(matches!(
            strict_square_root_check(&z, &id, &[]),
            Err(HermitianError::NotUnitary(_))
        ));
        let shear = LinearMap::new(
            h.clone(),
            h.clone(),
            Matrix::from_rows(vec![
                vec![Rational::from_int(1), Rational::from_int(1)],
                vec![Rational::from_int(0), Rational::from_int(1)],
            ])
            .unwrap(),
        )
        .unwrap();
        assert!(matches!(
            strict_square_root_check(&id, &id, &[shear]),
            Err(HermitianError::NotAProjection(0))
        ));
    }
}
