use crate::clique::maximal_perp_sets_within;
use crate::orthoset::FiniteOrthoset;
use crate::subset::Subset;
use crate::OrthoError;

/// The five provably equivalent characterisations of a Dacey space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DaceyCriterion {
    /// Mutually orthogonal subspaces joining to the whole carrier form
    /// decompositions.
    A,
    /// The lattice of orthoclosed sets is orthomodular.
    B,
    /// Relative double complements inside a subspace agree with the global
    /// double complement.
    C,
    /// The closed sets of a subspace are exactly the global closed sets it
    /// contains.
    D,
    /// Every maximal set of mutually orthogonal proper elements of a closed
    /// set generates it.
    E,
    All,
}

impl DaceyCriterion {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "a" => Some(Self::A),
            "b" => Some(Self::B),
            "c" => Some(Self::C),
            "d" => Some(Self::D),
            "e" => Some(Self::E),
            "all" => Some(Self::All),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DaceyReport {
    /// Outcome per criterion letter; only the requested ones are present.
    pub outcomes: Vec<(char, bool)>,
    pub is_dacey: bool,
    /// Whether all evaluated criteria agreed (always true unless the
    /// implementation itself is inconsistent).
    pub agree: bool,
    pub witness: Option<String>,
}

/// Evaluates the requested Dacey criterion (or all five) on `x`.
///
/// Disagreement between criteria would indicate an implementation bug, not a
/// property of `x`; it is reported through `agree` rather than panicking.
pub fn dacey_check(
    x: &FiniteOrthoset,
    criterion: DaceyCriterion,
    cap: usize,
) -> Result<DaceyReport, OrthoError> {
    let family = x.orthoclosed_sets(cap)?;
    let mut outcomes = Vec::new();
    let mut witness = None;
    let mut run = |c: char, r: Result<(), String>| {
        let ok = r.is_ok();
        if let Err(w) = r {
            if witness.is_none() {
                witness = Some(format!("({c}) {w}"));
            }
        }
        outcomes.push((c, ok));
    };
    match criterion {
        DaceyCriterion::A => run('a', criterion_a(x, &family)),
        DaceyCriterion::B => run('b', criterion_b(x, &family)),
        DaceyCriterion::C => run('c', criterion_c(x, &family)),
        DaceyCriterion::D => run('d', criterion_d(x, &family, cap)),
        DaceyCriterion::E => run('e', criterion_e(x, &family)),
        DaceyCriterion::All => {
            run('a', criterion_a(x, &family));
            run('b', criterion_b(x, &family));
            run('c', criterion_c(x, &family));
            run('d', criterion_d(x, &family, cap));
            run('e', criterion_e(x, &family));
        }
    }
    let first = outcomes[0].1;
    let agree = outcomes.iter().all(|&(_, v)| v == first);
    Ok(DaceyReport {
        is_dacey: first,
        outcomes,
        agree,
        witness,
    })
}

/// Criterion (a): any family of mutually orthogonal subspaces whose join is
/// the carrier is a decomposition.
///
/// A failing family contracts to a failing pair: joining all parts but one
/// preserves orthogonality, the total join, and the part's violation. The
/// search therefore ranges over pairs of orthogonal closed sets.
fn criterion_a(x: &FiniteOrthoset, family: &[Subset]) -> Result<(), String> {
    for &a in family {
        let ac = x.complement(a);
        for &b in family {
            if b.is_subset_of(ac) && x.join(a, b) == x.full_set() && (x.complement(b) != a || ac != b)
            {
                return Err(format!(
                    "orthogonal pair ({a:?}, {b:?}) joins to the carrier but is not a decomposition"
                ));
            }
        }
    }
    Ok(())
}

/// Criterion (b): orthomodularity of the closed-set lattice, checked as
/// A ⊆ B implies B = A ∨ (B ∧ A⊥) over all comparable pairs.
fn criterion_b(x: &FiniteOrthoset, family: &[Subset]) -> Result<(), String> {
    for &a in family {
        let ac = x.complement(a);
        for &b in family {
            if a.is_subset_of(b) {
                let rebuilt = x.join(a, b.inter(ac));
                if rebuilt != b {
                    return Err(format!(
                        "orthomodular law fails at A={a:?} ⊆ B={b:?}: A ∨ (B ∧ A⊥) = {rebuilt:?}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Criterion (c): for every subspace A and every B ⊆ A, the double
/// complement relative to A equals the global one. For A = X the relative
/// and global complements coincide definitionally, so X is skipped.
fn criterion_c(x: &FiniteOrthoset, family: &[Subset]) -> Result<(), String> {
    for &a in family {
        if a == x.full_set() {
            continue;
        }
        for b in a.submasks() {
            let rel = x.complement(b).inter(a);
            let relrel = x.complement(rel).inter(a);
            if relrel != x.closure(b) {
                return Err(format!(
                    "relative closure of B={b:?} inside A={a:?} is {relrel:?}, global closure is {:?}",
                    x.closure(b)
                ));
            }
        }
    }
    Ok(())
}

/// Criterion (d): the closed sets of each subspace are exactly the global
/// closed sets contained in it.
fn criterion_d(x: &FiniteOrthoset, family: &[Subset], cap: usize) -> Result<(), String> {
    for &a in family {
        let (sub, old) = x
            .subspace(a)
            .map_err(|e| format!("subspace {a:?}: {e}"))?;
        let sub_family = sub
            .orthoclosed_sets(cap)
            .map_err(|e| format!("subspace {a:?}: {e}"))?;
        let lifted: std::collections::BTreeSet<Subset> = sub_family
            .iter()
            .map(|s| Subset::from_indices(s.iter().map(|i| old[i])))
            .collect();
        let restricted: std::collections::BTreeSet<Subset> = family
            .iter()
            .copied()
            .filter(|b| b.is_subset_of(a))
            .collect();
        if lifted != restricted {
            return Err(format!(
                "C(A) for A={a:?} has {} sets, the trace of C(X) has {}",
                lifted.len(),
                restricted.len()
            ));
        }
    }
    Ok(())
}

/// Criterion (e): every maximal ⊥-set inside a closed set generates it.
fn criterion_e(x: &FiniteOrthoset, family: &[Subset]) -> Result<(), String> {
    for &a in family {
        for d in maximal_perp_sets_within(x, a) {
            if x.closure(d) != a {
                return Err(format!(
                    "maximal ⊥-set {d:?} in A={a:?} closes to {:?}",
                    x.closure(d)
                ));
            }
        }
    }
    Ok(())
}

/// An ordered list of orthoclosed parts, each the orthocomplement of the
/// join of the others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Subset>,
}

/// Verifies the decomposition condition for an explicit list of parts.
pub fn is_decomposition(x: &FiniteOrthoset, parts: &[Subset]) -> bool {
    parts.iter().enumerate().all(|(i, &a)| {
        let rest = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Subset::EMPTY, |acc, (_, &b)| acc.union(b));
        x.is_orthoclosed(a) && a == x.complement(x.closure(rest))
    })
}

/// Splits an atomistic Dacey orthoset with the covering property into a
/// verified decomposition of ranks `n1` and `n2`.
pub fn split_by_rank(
    x: &FiniteOrthoset,
    n1: usize,
    n2: usize,
    cap: usize,
) -> Result<Decomposition, OrthoError> {
    let info = crate::rank::rank(x, cap);
    if !info.shortcut_hypotheses_hold {
        return Err(OrthoError::SplitHypothesesUnverified);
    }
    if info.value != n1 + n2 {
        return Err(OrthoError::SplitRankMismatch {
            rank: info.value,
            requested: n1 + n2,
        });
    }
    let d = crate::rank::maximal_perp_set(x, x.full_set());
    let idx = d.indices();
    let d1 = Subset::from_indices(idx[..n1].iter().copied());
    let d2 = Subset::from_indices(idx[n1..].iter().copied());
    let parts = vec![x.closure(d1), x.closure(d2)];
    if !is_decomposition(x, &parts) {
        return Err(OrthoError::SplitVerificationFailed);
    }
    Ok(Decomposition { parts })
}

/// Complementary orthoclosed sets covering the carrier with proper elements
/// on both sides.
pub fn is_reducible(x: &FiniteOrthoset, cap: usize) -> Result<bool, OrthoError> {
    let family = x.orthoclosed_sets(cap)?;
    for &a in &family {
        let b = x.complement(a);
        if !a.proper().is_empty() && !b.proper().is_empty() && a.union(b) == x.full_set() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthoset::DEFAULT_FAMILY_CAP;

    fn check_all(x: &FiniteOrthoset) -> DaceyReport {
        dacey_check(x, DaceyCriterion::All, DEFAULT_FAMILY_CAP).unwrap()
    }

    #[test]
    fn mo2_is_dacey_under_all_criteria() {
        let r = check_all(&FiniteOrthoset::mo2());
        assert!(r.is_dacey);
        assert!(r.agree);
        assert_eq!(r.outcomes.len(), 5);
    }

    #[test]
    fn zero_orthoset_is_dacey() {
        let r = check_all(&FiniteOrthoset::zero());
        assert!(r.is_dacey && r.agree);
    }

    // The four-element path 1-2-3-4 is the smallest path that fails; the
    // three-element path has a height-two closed-set lattice, and every
    // ortholattice of height two is orthomodular.
    #[test]
    fn path_of_four_proper_elements_is_not_dacey() {
        let x = FiniteOrthoset::from_edges(5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let r = check_all(&x);
        assert!(!r.is_dacey);
        assert!(r.agree, "criteria disagreed: {:?}", r.outcomes);
    }

    #[test]
    fn path_of_three_proper_elements_is_dacey() {
        let x = FiniteOrthoset::from_edges(4, &[(1, 2), (2, 3)]).unwrap();
        let r = check_all(&x);
        assert!(r.is_dacey);
        assert!(r.agree);
    }

    #[test]
    fn criterion_e_witness_names_the_offending_subspace() {
        let x = FiniteOrthoset::from_edges(5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let r = dacey_check(&x, DaceyCriterion::E, DEFAULT_FAMILY_CAP).unwrap();
        assert!(!r.is_dacey);
        assert!(r.witness.is_some());
    }

    #[test]
    fn mo2_decompositions() {
        let x = FiniteOrthoset::mo2();
        let a = Subset::from_indices([0, 1]);
        let b = Subset::from_indices([0, 2]);
        let c = Subset::from_indices([0, 3]);
        assert!(is_decomposition(&x, &[a, b]));
        assert!(!is_decomposition(&x, &[a, c]));
    }

    #[test]
    fn split_mo2_by_rank() {
        let x = FiniteOrthoset::mo2();
        let d = split_by_rank(&x, 1, 1, DEFAULT_FAMILY_CAP).unwrap();
        assert_eq!(
            d.parts,
            vec![Subset::from_indices([0, 1]), Subset::from_indices([0, 2])]
        );
        assert!(split_by_rank(&x, 2, 1, DEFAULT_FAMILY_CAP).is_err());
    }

    #[test]
    fn reducibility() {
        let x = FiniteOrthoset::mo2();
        assert!(!is_reducible(&x, DEFAULT_FAMILY_CAP).unwrap());
        let w = FiniteOrthoset::from_edges(3, &[(1, 2)]).unwrap();
        assert!(is_reducible(&w, DEFAULT_FAMILY_CAP).unwrap());
        assert!(!is_reducible(&FiniteOrthoset::zero(), DEFAULT_FAMILY_CAP).unwrap());
    }
}
