//! The complete ortholattice of orthoclosed subsets of a finite orthoset,
//! materialized: orthomodularity, atoms, covering property, length, and
//! irreducibility.

use ortho_core::{FiniteOrthoset, Subset};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("lattice would exceed the configured cap of {cap} elements")]
    TooLarge { cap: usize },
    #[error(transparent)]
    Core(#[from] ortho_core::OrthoError),
    #[error("ortholattice axiom violated during construction: {0}")]
    AxiomViolation(String),
}

/// The lattice of orthoclosed sets, with elements sorted by bitmask; element
/// 0 is the bottom `{0}` and the last element is the full carrier.
#[derive(Clone, Debug)]
pub struct OrthoLattice {
    orthoset: FiniteOrthoset,
    elements: Vec<Subset>,
    comp: Vec<usize>,
}

impl OrthoLattice {
    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn orthoset(&self) -> &FiniteOrthoset {
        &self.orthoset
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset_of(self.elements[j])
    }

    pub fn complement_of(&self, i: usize) -> usize {
        self.comp[i]
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.elements.binary_search(&s).ok()
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index_of(self.elements[i].inter(self.elements[j]))
            .expect("closed sets are intersection-closed")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index_of(self.orthoset.join(self.elements[i], self.elements[j]))
            .expect("join of closed sets is closed")
    }

    /// Indices covering `i`: minimal elements strictly above it.
    pub fn covers_of(&self, i: usize) -> Vec<usize> {
        let ups: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && self.leq(i, j))
            .collect();
        ups.iter()
            .copied()
            .filter(|&j| !ups.iter().any(|&k| k != j && self.leq(k, j)))
            .collect()
    }
}

/// Materializes the lattice and machine-verifies the ortholattice axioms:
/// meet/join closure, involution, order reversal, and the complement laws.
pub fn build_lattice(x: &FiniteOrthoset, cap: usize) -> Result<OrthoLattice, LatticeError> {
    let elements = x
        .orthoclosed_sets(cap)
        .map_err(|e| match e {
            ortho_core::OrthoError::FamilyCapExceeded { cap } => LatticeError::TooLarge { cap },
            other => LatticeError::Core(other),
        })?;
    let index_of = |s: Subset| elements.binary_search(&s).ok();
    let mut comp = Vec::with_capacity(elements.len());
    for &a in &elements {
        let c = x.complement(a);
        let ci = index_of(c).ok_or_else(|| {
            LatticeError::AxiomViolation(format!("complement of {a:?} is not closed"))
        })?;
        comp.push(ci);
    }
    let lat = OrthoLattice {
        orthoset: x.clone(),
        elements,
        comp,
    };
    verify_ortholattice_axioms(&lat)?;
    Ok(lat)
}

fn verify_ortholattice_axioms(l: &OrthoLattice) -> Result<(), LatticeError> {
    let n = l.len();
    let bottom = l.elements[l.bottom()];
    let top = l.elements[l.top()];
    if bottom != l.orthoset.falsity_set() || top != l.orthoset.full_set() {
        return Err(LatticeError::AxiomViolation(
            "bottom and top are not the falsity set and the carrier".into(),
        ));
    }
    for i in 0..n {
        if l.comp[l.comp[i]] != i {
            return Err(LatticeError::AxiomViolation(format!(
                "complement is not involutive at {:?}",
                l.elements[i]
            )));
        }
        if l.elements[i].inter(l.elements[l.comp[i]]) != bottom {
            return Err(LatticeError::AxiomViolation(format!(
                "A ∧ A⊥ ≠ 0 at {:?}",
                l.elements[i]
            )));
        }
        if l.orthoset.join(l.elements[i], l.elements[l.comp[i]]) != top {
            return Err(LatticeError::AxiomViolation(format!(
                "A ∨ A⊥ ≠ 1 at {:?}",
                l.elements[i]
            )));
        }
        for j in 0..n {
            if l.leq(i, j) && !l.leq(l.comp[j], l.comp[i]) {
                return Err(LatticeError::AxiomViolation(format!(
                    "complement does not reverse {:?} ⊆ {:?}",
                    l.elements[i], l.elements[j]
                )));
            }
            // meets and joins must stay in the family
            l.meet(i, j);
            l.join(i, j);
        }
    }
    Ok(())
}

/// A ⊆ B implies B = A ∨ (B ∧ A⊥), over all comparable pairs.
pub fn is_orthomodular(l: &OrthoLattice) -> bool {
    for i in 0..l.len() {
        for j in 0..l.len() {
            if l.leq(i, j) && l.join(i, l.meet(j, l.comp[i])) != j {
                return false;
            }
        }
    }
    true
}

/// Atom indices: covers of the bottom.
pub fn atoms(l: &OrthoLattice) -> Vec<usize> {
    l.covers_of(l.bottom())
}

/// For any element `a` and atom `p` not below it, `a ∨ p` covers `a`.
pub fn has_covering_property(l: &OrthoLattice) -> bool {
    let atom_ids = atoms(l);
    for a in 0..l.len() {
        for &p in &atom_ids {
            if l.leq(p, a) {
                continue;
            }
            let up = l.join(a, p);
            let strictly_between = (0..l.len())
                .any(|c| c != a && c != up && l.leq(a, c) && l.leq(c, up));
            if strictly_between {
                return false;
            }
        }
    }
    true
}

/// Atomistic: every element is a join of atoms.
pub fn is_atomistic_lattice(l: &OrthoLattice) -> bool {
    let atom_ids = atoms(l);
    (0..l.len()).all(|a| {
        let below = atom_ids
            .iter()
            .copied()
            .filter(|&p| l.leq(p, a))
            .fold(Subset::EMPTY, |acc, p| acc.union(l.elements[p]));
        l.orthoset.closure(below) == l.elements[a]
    })
}

/// Atomistic with the covering property.
pub fn is_ac(l: &OrthoLattice) -> bool {
    is_atomistic_lattice(l) && has_covering_property(l)
}

/// Length of the longest chain from bottom to top, via longest path in the
/// cover relation.
pub fn length(l: &OrthoLattice) -> usize {
    // elements are sorted by mask, which is compatible enough for a DP over
    // the order relation: process in any linear extension of ⊆ by cardinality
    let mut order: Vec<usize> = (0..l.len()).collect();
    order.sort_by_key(|&i| l.elements[i].card());
    let mut height = vec![0usize; l.len()];
    for &i in &order {
        for &j in &order {
            if j != i && l.leq(j, i) {
                height[i] = height[i].max(height[j] + 1);
            }
        }
    }
    height[l.top()]
}

/// No nontrivial central element: `z` is central when every `a` splits as
/// `a = (a ∧ z) ∨ (a ∧ z⊥)`.
pub fn is_irreducible_lattice(l: &OrthoLattice) -> bool {
    central_element(l).is_none()
}

/// The least nontrivial central element, if any.
pub fn central_element(l: &OrthoLattice) -> Option<usize> {
    (0..l.len())
        .filter(|&z| z != l.bottom() && z != l.top())
        .find(|&z| {
            (0..l.len()).all(|a| l.join(l.meet(a, z), l.meet(a, l.comp[z])) == a)
        })
}

/// Lattice report emitted as JSON: elements, Hasse edges, complement
/// permutation, and property flags.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeReport {
    pub elements: Vec<Vec<usize>>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub complement: Vec<usize>,
    pub size: usize,
    pub orthomodular: bool,
    pub atoms: Vec<usize>,
    pub covering_property: bool,
    pub atomistic: bool,
    pub ac: bool,
    pub length: usize,
    pub irreducible: bool,
}

pub fn lattice_report(l: &OrthoLattice) -> LatticeReport {
    let mut hasse = Vec::new();
    for i in 0..l.len() {
        for j in l.covers_of(i) {
            hasse.push((i, j));
        }
    }
    LatticeReport {
        elements: l.elements.iter().map(|s| s.indices()).collect(),
        hasse_edges: hasse,
        complement: l.comp.clone(),
        size: l.len(),
        orthomodular: is_orthomodular(l),
        atoms: atoms(l),
        covering_property: has_covering_property(l),
        atomistic: is_atomistic_lattice(l),
        ac: is_ac(l),
        length: length(l),
        irreducible: is_irreducible_lattice(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ortho_core::DEFAULT_FAMILY_CAP;

    fn build(x: &FiniteOrthoset) -> OrthoLattice {
        build_lattice(x, DEFAULT_FAMILY_CAP).unwrap()
    }

    #[test]
    fn mo2_lattice_shape() {
        let l = build(&FiniteOrthoset::mo2());
        assert_eq!(l.len(), 6);
        assert_eq!(atoms(&l).len(), 4);
        assert_eq!(length(&l), 2);
        assert!(is_orthomodular(&l));
        assert!(has_covering_property(&l));
        assert!(is_ac(&l));
        assert!(is_irreducible_lattice(&l));
    }

    #[test]
    fn zero_orthoset_gives_one_element_lattice() {
        let l = build(&FiniteOrthoset::zero());
        assert_eq!(l.len(), 1);
        assert_eq!(length(&l), 0);
        assert!(is_orthomodular(&l));
        assert!(atoms(&l).is_empty());
    }

    #[test]
    fn two_element_chain() {
        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        let l = build(&i2);
        assert_eq!(l.len(), 2);
        assert_eq!(length(&l), 1);
        assert_eq!(atoms(&l), vec![l.top()]);
        assert!(is_orthomodular(&l));
    }

    #[test]
    fn path_of_four_is_not_orthomodular() {
        let x = FiniteOrthoset::from_edges(5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let l = build(&x);
        assert!(!is_orthomodular(&l));
    }

    #[test]
    fn wedge_lattice_is_reducible() {
        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        let (w, _, _) = i2.wedge_sum(&i2).unwrap();
        let l = build(&w);
        assert!(!is_irreducible_lattice(&l));
        let z = central_element(&l).unwrap();
        assert_eq!(l.elements()[z], Subset::from_indices([0, 1]));
    }

    #[test]
    fn de_morgan_over_all_pairs() {
        for x in [
            FiniteOrthoset::mo2(),
            FiniteOrthoset::from_edges(5, &[(1, 2), (2, 3), (3, 4)]).unwrap(),
        ] {
            let l = build(&x);
            for i in 0..l.len() {
                for j in 0..l.len() {
                    assert_eq!(
                        l.complement_of(l.join(i, j)),
                        l.meet(l.complement_of(i), l.complement_of(j))
                    );
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let x = FiniteOrthoset::mo2();
        assert!(matches!(
            build_lattice(&x, 3),
            Err(LatticeError::TooLarge { .. })
        ));
    }
}
