//! Clique machinery on the orthogonality graph of the proper elements.
//!
//! A ⊥-set is exactly a clique of that graph, so maximal ⊥-sets come from
//! Bron–Kerbosch enumeration and exact rank from branch-and-bound maximum
//! clique search.

use crate::orthoset::FiniteOrthoset;
use crate::subset::Subset;

/// Neighbourhood of `v` inside the proper part: elements orthogonal to `v`,
/// falsity excluded.
fn nbr(x: &FiniteOrthoset, v: usize) -> Subset {
    x.row(v).proper()
}

/// All maximal ⊥-sets contained in `within` (maximality relative to
/// `within`). The empty set is reported when `within` has no proper element.
pub fn maximal_perp_sets_within(x: &FiniteOrthoset, within: Subset) -> Vec<Subset> {
    let p = within.proper();
    if p.is_empty() {
        return vec![Subset::EMPTY];
    }
    let mut out = Vec::new();
    bron_kerbosch(x, Subset::EMPTY, p, Subset::EMPTY, p, &mut out);
    out
}

fn bron_kerbosch(
    x: &FiniteOrthoset,
    r: Subset,
    mut p: Subset,
    mut excluded: Subset,
    universe: Subset,
    out: &mut Vec<Subset>,
) {
    if p.is_empty() && excluded.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(excluded)
        .iter()
        .max_by_key(|&u| nbr(x, u).inter(p).card())
        .unwrap();
    for v in p.minus(nbr(x, pivot)).iter() {
        let nv = nbr(x, v).inter(universe);
        bron_kerbosch(x, r.with(v), p.inter(nv), excluded.inter(nv), universe, out);
        p = p.without(v);
        excluded = excluded.with(v);
    }
}

/// Greedy maximal ⊥-set inside `within`, grown in least-index order.
pub fn maximal_perp_set(x: &FiniteOrthoset, within: Subset) -> Subset {
    let mut chosen = Subset::EMPTY;
    for v in within.proper().iter() {
        if chosen.is_subset_of(x.row(v)) {
            chosen = chosen.with(v);
        }
    }
    chosen
}

/// Exact maximum clique over the proper elements of `within`, by
/// branch-and-bound seeded with the greedy maximal ⊥-set.
pub fn max_clique(x: &FiniteOrthoset, within: Subset) -> Subset {
    let mut best = maximal_perp_set(x, within);
    expand(x, Subset::EMPTY, within.proper(), &mut best);
    best
}

fn expand(x: &FiniteOrthoset, r: Subset, p: Subset, best: &mut Subset) {
    if p.is_empty() {
        if r.card() > best.card() {
            *best = r;
        }
        return;
    }
    let mut p = p;
    while let Some(v) = p.min_element() {
        if r.card() + p.card() <= best.card() {
            return;
        }
        expand(x, r.with(v), p.inter(nbr(x, v)), best);
        p = p.without(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mo2_maximal_perp_sets() {
        let x = FiniteOrthoset::mo2();
        let mut sets = maximal_perp_sets_within(&x, x.full_set());
        sets.sort();
        assert_eq!(
            sets,
            vec![Subset::from_indices([1, 2]), Subset::from_indices([3, 4])]
        );
        assert_eq!(maximal_perp_set(&x, x.full_set()), Subset::from_indices([1, 2]));
        assert_eq!(max_clique(&x, x.full_set()).card(), 2);
    }

    #[test]
    fn perp_sets_within_a_subspace() {
        let x = FiniteOrthoset::mo2();
        let a = Subset::from_indices([0, 1]);
        assert_eq!(maximal_perp_sets_within(&x, a), vec![Subset::singleton(1)]);
        assert_eq!(
            maximal_perp_sets_within(&x, Subset::singleton(0)),
            vec![Subset::EMPTY]
        );
    }

    #[test]
    fn greedy_prefers_least_index() {
        // 1 ⊥ 2, 1 ⊥ 3, plus 4 isolated: greedy from 1 picks {1,2}.
        let x = FiniteOrthoset::from_edges(5, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(maximal_perp_set(&x, x.full_set()), Subset::from_indices([1, 2]));
    }

    #[test]
    fn exact_clique_beats_greedy_when_greedy_is_unlucky() {
        // greedy takes {1,2} and stops; the true maximum is {3,4,5}.
        let x = FiniteOrthoset::from_edges(6, &[(1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(maximal_perp_set(&x, x.full_set()).card(), 2);
        assert_eq!(max_clique(&x, x.full_set()).card(), 3);
    }
}
