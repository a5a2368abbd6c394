use crate::subset::Subset;
use crate::OrthoError;

/// A finite orthoset: a carrier `{0, .., n-1}` with a symmetric orthogonality
/// relation, irreflexive off the designated falsity element 0, which is
/// orthogonal to everything.
///
/// The relation is stored row-wise: `rows[x]` is the orthocomplement of the
/// singleton `{x}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteOrthoset {
    n: usize,
    rows: Vec<Subset>,
}

impl std::fmt::Debug for FiniteOrthoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteOrthoset(n={}, edges={:?})", self.n, self.proper_edges())
    }
}

/// Hard limit imposed by the bitmask representation.
pub const MAX_CARRIER: usize = 63;

/// Default cap on the number of orthoclosed sets materialized at once.
pub const DEFAULT_FAMILY_CAP: usize = 4096;

impl FiniteOrthoset {
    /// Validates a candidate given by its size and proper edge list.
    ///
    /// The falsity row and symmetry are completed automatically. Rejects
    /// `n = 0` and any self-loop on a nonzero element.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, OrthoError> {
        if n == 0 {
            return Err(OrthoError::EmptyCarrier);
        }
        if n > MAX_CARRIER {
            return Err(OrthoError::CarrierTooLarge { n, max: MAX_CARRIER });
        }
        let mut rows = vec![Subset::singleton(0); n];
        rows[0] = Subset::full(n);
        for &(a, b) in edges {
            if a >= n {
                return Err(OrthoError::IndexOutOfRange { index: a, n });
            }
            if b >= n {
                return Err(OrthoError::IndexOutOfRange { index: b, n });
            }
            if a == b && a != 0 {
                return Err(OrthoError::ProperSelfLoop(a));
            }
            rows[a] = rows[a].with(b);
            rows[b] = rows[b].with(a);
        }
        // 0-edges are implicit; every proper row already carries bit 0.
        rows[0] = Subset::full(n);
        Ok(FiniteOrthoset { n, rows })
    }

    /// The zero orthoset `{0}`.
    pub fn zero() -> Self {
        Self::from_edges(1, &[]).unwrap()
    }

    /// A singleton of carrier size `n`: no proper orthogonalities at all.
    pub fn singleton_orthoset(n: usize) -> Result<Self, OrthoError> {
        Self::from_edges(n, &[])
    }

    /// The five-element "Chinese lantern" with proper pairs 1⊥2 and 3⊥4.
    pub fn mo2() -> Self {
        Self::from_edges(5, &[(1, 2), (3, 4)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn falsity_set(&self) -> Subset {
        Subset::singleton(0)
    }

    pub fn proper_set(&self) -> Subset {
        self.full_set().without(0)
    }

    pub fn orthogonal(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// The orthocomplement of the singleton `{x}`.
    pub fn row(&self, x: usize) -> Subset {
        self.rows[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn proper_elements(&self) -> impl Iterator<Item = usize> {
        1..self.n
    }

    /// Proper edges (x < y, both nonzero), suitable for serialization.
    pub fn proper_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 1..self.n {
            for y in (x + 1)..self.n {
                if self.orthogonal(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The orthocomplement of an arbitrary subset: everything orthogonal to
    /// all of its members. The empty set yields the full carrier.
    pub fn complement(&self, a: Subset) -> Subset {
        let mut acc = self.full_set();
        for x in a.iter() {
            acc = acc.inter(self.rows[x]);
        }
        acc
    }

    /// The double orthocomplement, a closure operator.
    pub fn closure(&self, a: Subset) -> Subset {
        self.complement(self.complement(a))
    }

    pub fn is_orthoclosed(&self, a: Subset) -> bool {
        self.closure(a) == a
    }

    /// Join of orthoclosed sets: closure of the union.
    pub fn join(&self, a: Subset, b: Subset) -> Subset {
        self.closure(a.union(b))
    }

    /// All orthoclosed subsets, generated as the intersection closure of the
    /// relation rows together with the full carrier. Results are sorted by
    /// bitmask. Errors if the family would exceed `cap`.
    pub fn orthoclosed_sets(&self, cap: usize) -> Result<Vec<Subset>, OrthoError> {
        // Every orthoclosed set is an intersection of single-element
        // orthocomplements: A⊥⊥ = ∩ {x}⊥ over x ∈ A⊥, and ∅⊥ = X.
        let mut family: Vec<Subset> = vec![self.full_set()];
        let mut seen: std::collections::HashSet<Subset> = family.iter().copied().collect();
        let mut frontier = family.clone();
        while let Some(s) = frontier.pop() {
            for x in 1..self.n {
                let t = s.inter(self.rows[x]);
                if seen.insert(t) {
                    if seen.len() > cap {
                        return Err(OrthoError::FamilyCapExceeded { cap });
                    }
                    family.push(t);
                    frontier.push(t);
                }
            }
        }
        family.sort();
        Ok(family)
    }

    /// Distinct proper elements have distinct orthocomplement rows.
    pub fn is_irredundant(&self) -> bool {
        for x in 1..self.n {
            for y in (x + 1)..self.n {
                if self.rows[x] == self.rows[y] {
                    return false;
                }
            }
        }
        true
    }

    /// Row containment between proper elements implies row equality.
    pub fn is_atomistic(&self) -> bool {
        for x in 1..self.n {
            for y in 1..self.n {
                if x != y && self.rows[x].is_subset_of(self.rows[y]) && self.rows[x] != self.rows[y]
                {
                    return false;
                }
            }
        }
        true
    }

    /// A proper element orthogonal to no proper element, if one exists.
    pub fn unital_witness(&self) -> Option<usize> {
        (1..self.n).find(|&z| self.rows[z] == self.falsity_set())
    }

    pub fn is_unital(&self) -> bool {
        self.unital_witness().is_some()
    }

    /// Rank 1: some proper element, but no orthogonal pair of proper elements.
    pub fn is_singleton(&self) -> bool {
        self.n >= 2 && (1..self.n).all(|x| self.rows[x].proper().is_empty())
    }

    /// The subspace on an orthoclosed (or at least falsity-containing) set,
    /// as a standalone orthoset together with the map from new to old indices.
    pub fn subspace(&self, a: Subset) -> Result<(FiniteOrthoset, Vec<usize>), OrthoError> {
        if !a.contains(0) {
            return Err(OrthoError::SubspaceWithoutFalsity);
        }
        let old: Vec<usize> = a.indices();
        let mut edges = Vec::new();
        for (i, &x) in old.iter().enumerate() {
            for (j, &y) in old.iter().enumerate().skip(i + 1) {
                if x != 0 && self.orthogonal(x, y) {
                    edges.push((i, j));
                }
            }
        }
        let sub = FiniteOrthoset::from_edges(old.len(), &edges)?;
        Ok((sub, old))
    }

    /// Wedge sum: disjoint union with the falsities identified and every
    /// proper element of one side orthogonal to every proper element of the
    /// other. Returns the inclusion index maps alongside.
    pub fn wedge_sum(&self, other: &FiniteOrthoset) -> Result<(FiniteOrthoset, Vec<usize>, Vec<usize>), OrthoError> {
        let n = self.n + other.n - 1;
        let left: Vec<usize> = (0..self.n).collect();
        let right: Vec<usize> = std::iter::once(0)
            .chain((1..other.n).map(|y| self.n + y - 1))
            .collect();
        let mut edges = Vec::new();
        for (x, y) in self.proper_edges() {
            edges.push((left[x], left[y]));
        }
        for (x, y) in other.proper_edges() {
            edges.push((right[x], right[y]));
        }
        for x in 1..self.n {
            for y in 1..other.n {
                edges.push((left[x], right[y]));
            }
        }
        let sum = FiniteOrthoset::from_edges(n, &edges)?;
        Ok((sum, left, right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_self_loops() {
        assert!(matches!(
            FiniteOrthoset::from_edges(0, &[]),
            Err(OrthoError::EmptyCarrier)
        ));
        assert!(matches!(
            FiniteOrthoset::from_edges(3, &[(1, 1)]),
            Err(OrthoError::ProperSelfLoop(1))
        ));
        assert!(FiniteOrthoset::from_edges(3, &[(0, 0)]).is_ok());
        assert!(matches!(
            FiniteOrthoset::from_edges(2, &[(1, 5)]),
            Err(OrthoError::IndexOutOfRange { index: 5, n: 2 })
        ));
    }

    #[test]
    fn axioms_hold_after_validation() {
        let x = FiniteOrthoset::from_edges(5, &[(1, 2), (3, 4), (0, 3)]).unwrap();
        for a in x.elements() {
            assert!(x.orthogonal(0, a), "O3");
            for b in x.elements() {
                assert_eq!(x.orthogonal(a, b), x.orthogonal(b, a), "O1");
            }
            if a != 0 {
                assert!(!x.orthogonal(a, a), "O2");
            }
        }
    }

    #[test]
    fn mo2_complements_and_closures() {
        let x = FiniteOrthoset::mo2();
        assert_eq!(x.complement(Subset::from_indices([1])), Subset::from_indices([0, 2]));
        assert_eq!(x.complement(Subset::EMPTY), x.full_set());
        assert_eq!(x.complement(Subset::singleton(0)), x.full_set());
        assert_eq!(x.closure(Subset::from_indices([1])), Subset::from_indices([0, 1]));
        assert_eq!(x.closure(Subset::from_indices([1, 3])), x.full_set());
        assert_eq!(x.closure(x.full_set()), x.full_set());
    }

    #[test]
    fn mo2_has_six_orthoclosed_sets() {
        let x = FiniteOrthoset::mo2();
        let fam = x.orthoclosed_sets(DEFAULT_FAMILY_CAP).unwrap();
        let expect: Vec<Subset> = vec![
            Subset::from_indices([0]),
            Subset::from_indices([0, 1]),
            Subset::from_indices([0, 2]),
            Subset::from_indices([0, 3]),
            Subset::from_indices([0, 4]),
            x.full_set(),
        ];
        let mut expect = expect;
        expect.sort();
        assert_eq!(fam, expect);
    }

    #[test]
    fn zero_and_singleton_families() {
        let z = FiniteOrthoset::zero();
        assert_eq!(z.orthoclosed_sets(16).unwrap(), vec![Subset::singleton(0)]);
        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        assert_eq!(
            i2.orthoclosed_sets(16).unwrap(),
            vec![Subset::singleton(0), Subset::from_indices([0, 1])]
        );
    }

    #[test]
    fn separation_axioms() {
        let mo2 = FiniteOrthoset::mo2();
        assert!(mo2.is_irredundant());
        assert!(mo2.is_atomistic());

        let collapsed = FiniteOrthoset::from_edges(4, &[(1, 3), (2, 3)]).unwrap();
        assert!(!collapsed.is_irredundant());
        assert!(collapsed.is_atomistic());

        let z = FiniteOrthoset::zero();
        assert!(z.is_irredundant());
        assert!(z.is_atomistic());

        // On the path 1-2-3-4, the row of 1 is {0,2} and the row of 3 is
        // {0,2,4}: strict containment, so not atomistic.
        let path = FiniteOrthoset::from_edges(5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!path.is_atomistic());
    }

    #[test]
    fn unital_and_singleton_flags() {
        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        assert!(i2.is_unital());
        assert!(i2.is_singleton());

        let mo2 = FiniteOrthoset::mo2();
        assert!(!mo2.is_unital());
        assert!(!mo2.is_singleton());

        let x = FiniteOrthoset::from_edges(4, &[(1, 2)]).unwrap();
        assert_eq!(x.unital_witness(), Some(3));
        assert!(!x.is_singleton());

        assert!(!FiniteOrthoset::zero().is_unital());
        assert!(!FiniteOrthoset::zero().is_singleton());
    }

    #[test]
    fn wedge_of_singletons() {
        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        let (w, l, r) = i2.wedge_sum(&i2).unwrap();
        assert_eq!(w.n(), 3);
        assert_eq!(w.proper_edges(), vec![(1, 2)]);
        assert_eq!(l, vec![0, 1]);
        assert_eq!(r, vec![0, 2]);

        let x = FiniteOrthoset::mo2();
        let (same, _, _) = x.wedge_sum(&FiniteOrthoset::zero()).unwrap();
        assert_eq!(same, x);
    }
}
