//! Lines (at most 1-dimensional subspaces) of a Hermitian space, their
//! canonical representatives, induced maps, and finite orthoset samples.

use crate::linmap::LinearMap;
use crate::scalar::Scalar;
use crate::space::HermitianSpace;
use crate::HermitianError;
use ortho_core::{FiniteOrthoset, Subset};

/// A line through the origin: the zero line or a canonical representative
/// whose first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line<K: Scalar> {
    repr: Option<Vec<K>>,
}

impl<K: Scalar> Line<K> {
    pub fn zero(dim: usize) -> Self {
        let _ = dim;
        Line { repr: None }
    }

    /// Canonicalizes `v`, scaling its first nonzero coordinate to 1.
    pub fn through(v: &[K]) -> Self {
        match v.iter().position(|x| !x.is_zero()) {
            None => Line { repr: None },
            Some(k) => {
                let inv = v[k].inv().expect("nonzero coordinate");
                Line {
                    repr: Some(v.iter().map(|x| x.mul(&inv)).collect()),
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_none()
    }

    pub fn representative(&self) -> Option<&[K]> {
        self.repr.as_deref()
    }
}

pub fn lines_orthogonal<K: Scalar>(
    h: &HermitianSpace<K>,
    l1: &Line<K>,
    l2: &Line<K>,
) -> Result<bool, HermitianError> {
    match (l1.representative(), l2.representative()) {
        (Some(u), Some(v)) => h.orthogonal(u, v),
        _ => Ok(true),
    }
}

/// Sends each listed line through `φ` and re-canonicalizes; the zero image
/// maps to the zero line.
pub fn induced_line_map<K: Scalar>(
    phi: &LinearMap<K>,
    lines: &[Line<K>],
) -> Result<Vec<Line<K>>, HermitianError> {
    lines
        .iter()
        .map(|l| match l.representative() {
            None => Ok(Line::zero(phi.cod().dim())),
            Some(v) => Ok(Line::through(&phi.apply(v)?)),
        })
        .collect()
}

/// Outcome of sampling a finite orthoset from a list of lines.
#[derive(Clone, Debug)]
pub struct OrthosetSample<K: Scalar> {
    pub orthoset: FiniteOrthoset,
    /// Line represented by orthoset element `i + 1`.
    pub lines: Vec<Line<K>>,
    /// Whether every sample-orthoclosed set is the trace of a subspace of
    /// the ambient space. Orthoclosure inside the sample may otherwise
    /// differ from closure in the space.
    pub closure_faithful: bool,
}

/// The finite orthoset on `{0} ∪ lines` with orthogonality inherited from
/// the form. The given vectors must be nonzero and distinct as lines.
pub fn orthoset_sample<K: Scalar>(
    h: &HermitianSpace<K>,
    vectors: &[Vec<K>],
) -> Result<OrthosetSample<K>, HermitianError> {
    let mut lines = Vec::with_capacity(vectors.len());
    for v in vectors {
        let l = Line::through(v);
        if l.is_zero() {
            return Err(HermitianError::ZeroVectorLine);
        }
        if lines.contains(&l) {
            return Err(HermitianError::DuplicateLine);
        }
        lines.push(l);
    }
    let mut edges = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if lines_orthogonal(h, &lines[i], &lines[j])? {
                edges.push((i + 1, j + 1));
            }
        }
    }
    let orthoset = FiniteOrthoset::from_edges(lines.len() + 1, &edges)
        .map_err(|e| HermitianError::Shape(e.to_string()))?;

    let family = orthoset
        .orthoclosed_sets(ortho_core::DEFAULT_FAMILY_CAP)
        .map_err(|e| HermitianError::Shape(e.to_string()))?;
    let mut closure_faithful = true;
    for a in family {
        let spanning: Vec<Vec<K>> = a
            .iter()
            .filter(|&i| i != 0)
            .map(|i| lines[i - 1].representative().expect("proper line").to_vec())
            .collect();
        let span = h.span(&spanning)?;
        let trace = Subset::from_indices(
            std::iter::once(0).chain(
                lines
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| span.contains(l.representative().expect("proper line")))
                    .map(|(i, _)| i + 1),
            ),
        );
        if trace != a {
            closure_faithful = false;
            break;
        }
    }
    Ok(OrthosetSample {
        orthoset,
        lines,
        closure_faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gaussian, Rational};

    fn gv(v: Vec<(i64, i64)>) -> Vec<Gaussian> {
        v.into_iter().map(|(a, b)| Gaussian::from_ints(a, b)).collect()
    }

    #[test]
    fn canonical_representatives() {
        let v = gv(vec![(2, 0), (0, 2)]);
        let l = Line::through(&v);
        assert_eq!(l.representative().unwrap(), &gv(vec![(1, 0), (0, 1)])[..]);
        assert!(Line::<Rational>::through(&[Rational::from_int(0)]).is_zero());
    }

    #[test]
    fn six_line_sample_of_q_i_squared_is_mo3() {
        let h = HermitianSpace::<Gaussian>::standard(2);
        let vectors = vec![
            gv(vec![(1, 0), (0, 0)]),
            gv(vec![(0, 0), (1, 0)]),
            gv(vec![(1, 0), (1, 0)]),
            gv(vec![(1, 0), (-1, 0)]),
            gv(vec![(1, 0), (0, 1)]),
            gv(vec![(1, 0), (0, -1)]),
        ];
        let s = orthoset_sample(&h, &vectors).unwrap();
        assert_eq!(s.orthoset.n(), 7);
        assert_eq!(
            s.orthoset.proper_edges(),
            vec![(1, 2), (3, 4), (5, 6)],
            "three orthogonal pairs of lines"
        );
        assert!(s.closure_faithful);
        assert_eq!(ortho_core::rank(&s.orthoset, 4096).value, 2);
    }

    #[test]
    fn standard_basis_of_q3_samples_a_rank_three_orthoset() {
        let h = HermitianSpace::<Rational>::standard(3);
        let e = |k: usize| {
            (0..3)
                .map(|i| Rational::from_int((i == k) as i64))
                .collect::<Vec<_>>()
        };
        let s = orthoset_sample(&h, &[e(0), e(1), e(2)]).unwrap();
        assert_eq!(s.orthoset.proper_edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(ortho_core::rank(&s.orthoset, 4096).value, 3);
        assert!(s.closure_faithful);
    }

    #[test]
    fn single_line_samples_a_singleton() {
        let h = HermitianSpace::<Rational>::standard(2);
        let s = orthoset_sample(&h, &[vec![Rational::from_int(1), Rational::from_int(1)]]).unwrap();
        assert!(s.orthoset.is_singleton());
    }

    #[test]
    fn duplicate_lines_are_rejected() {
        let h = HermitianSpace::<Rational>::standard(2);
        let err = orthoset_sample(
            &h,
            &[
                vec![Rational::from_int(1), Rational::from_int(1)],
                vec![Rational::from_int(2), Rational::from_int(2)],
            ],
        )
        .unwrap_err();
        assert!(matches!(err, HermitianError::DuplicateLine));
    }

    #[test]
    fn induced_map_functoriality_on_lines() {
        let h = HermitianSpace::<Rational>::standard(2);
        let m = crate::matrix::Matrix::from_rows(vec![
            vec![Rational::from_int(0), Rational::from_int(1)],
            vec![Rational::from_int(1), Rational::from_int(0)],
        ])
        .unwrap();
        let swap = LinearMap::new(h.clone(), h.clone(), m).unwrap();
        let lines = vec![
            Line::through(&[Rational::from_int(1), Rational::from_int(0)]),
            Line::through(&[Rational::from_int(0), Rational::from_int(1)]),
        ];
        let mapped = induced_line_map(&swap, &lines).unwrap();
        assert_eq!(mapped, vec![lines[1].clone(), lines[0].clone()]);

        let comp = LinearMap::compose(&swap, &swap).unwrap();
        let twice = induced_line_map(&swap, &mapped).unwrap();
        assert_eq!(twice, induced_line_map(&comp, &lines).unwrap());
    }
}
