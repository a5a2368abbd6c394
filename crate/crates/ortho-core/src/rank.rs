use crate::clique;
use crate::dacey::{dacey_check, DaceyCriterion};
use crate::orthoset::FiniteOrthoset;
use crate::subset::Subset;

pub use crate::clique::{max_clique, maximal_perp_set};

/// How a rank value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Greedy maximal ⊥-set, justified for atomistic Dacey orthosets whose
    /// closed-set lattice has the covering property.
    GreedyPerpSet,
    /// Exact branch-and-bound maximum clique, used whenever the shortcut's
    /// hypotheses could not be verified.
    ExactClique,
}

#[derive(Clone, Debug)]
pub struct RankReport {
    pub value: usize,
    pub method: RankMethod,
    /// Whether the instance was verified to be atomistic, Dacey, and with
    /// the covering property.
    pub shortcut_hypotheses_hold: bool,
}

/// The rank: the largest cardinality of a set of mutually orthogonal proper
/// elements.
///
/// The greedy shortcut is taken only after machine-verifying its hypotheses
/// on the instance; otherwise exact clique search decides.
pub fn rank(x: &FiniteOrthoset, cap: usize) -> RankReport {
    if shortcut_hypotheses(x, cap) {
        RankReport {
            value: clique::maximal_perp_set(x, x.full_set()).card(),
            method: RankMethod::GreedyPerpSet,
            shortcut_hypotheses_hold: true,
        }
    } else {
        RankReport {
            value: clique::max_clique(x, x.full_set()).card(),
            method: RankMethod::ExactClique,
            shortcut_hypotheses_hold: false,
        }
    }
}

/// Atomistic + Dacey + covering property, all machine-checked.
pub fn shortcut_hypotheses(x: &FiniteOrthoset, cap: usize) -> bool {
    if !x.is_atomistic() {
        return false;
    }
    let Ok(report) = dacey_check(x, DaceyCriterion::B, cap) else {
        return false;
    };
    if !report.is_dacey {
        return false;
    }
    let Ok(family) = x.orthoclosed_sets(cap) else {
        return false;
    };
    covering_property(x, &family)
}

/// The covering property of the closed-set lattice: for any closed `a` and
/// atom `p` not below it, `a ∨ p` covers `a`.
fn covering_property(x: &FiniteOrthoset, family: &[Subset]) -> bool {
    let bottom = x.falsity_set();
    let atoms: Vec<Subset> = family
        .iter()
        .copied()
        .filter(|&a| a != bottom && family.iter().all(|&b| b == bottom || b == a || !b.is_subset_of(a)))
        .collect();
    for &a in family {
        for &p in &atoms {
            if p.is_subset_of(a) {
                continue;
            }
            let up = x.join(a, p);
            // a ∨ p covers a: no closed set strictly between.
            for &c in family {
                if a.is_subset_of(c) && c.is_subset_of(up) && c != a && c != up {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthoset::DEFAULT_FAMILY_CAP;

    #[test]
    fn ranks_of_fixtures() {
        let mo2 = FiniteOrthoset::mo2();
        let r = rank(&mo2, DEFAULT_FAMILY_CAP);
        assert_eq!(r.value, 2);
        assert_eq!(r.method, RankMethod::GreedyPerpSet);

        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        assert_eq!(rank(&i2, DEFAULT_FAMILY_CAP).value, 1);

        let z = FiniteOrthoset::zero();
        assert_eq!(rank(&z, DEFAULT_FAMILY_CAP).value, 0);
    }

    #[test]
    fn non_dacey_instances_fall_back_to_exact_search() {
        let path = FiniteOrthoset::from_edges(5, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let r = rank(&path, DEFAULT_FAMILY_CAP);
        assert_eq!(r.method, RankMethod::ExactClique);
        assert_eq!(r.value, 2);
    }

    #[test]
    fn wedge_rank_is_additive() {
        let mo2 = FiniteOrthoset::mo2();
        let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
        let (w, _, _) = mo2.wedge_sum(&i2).unwrap();
        assert_eq!(w.n(), 6);
        assert_eq!(rank(&w, DEFAULT_FAMILY_CAP).value, 3);
    }

    #[test]
    fn singleton_flag_matches_rank_one() {
        for (n, edges) in [(2usize, vec![]), (3, vec![]), (5, vec![(1usize, 2usize), (3, 4)])] {
            let x = FiniteOrthoset::from_edges(n, &edges).unwrap();
            assert_eq!(x.is_singleton(), rank(&x, DEFAULT_FAMILY_CAP).value == 1);
        }
    }
}
