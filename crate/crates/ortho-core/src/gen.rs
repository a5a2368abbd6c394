//! Generation of small orthoset instances: exhaustive canonical families for
//! oracle-grade sweeps and seeded random instances for bulk checks.

use crate::orthoset::FiniteOrthoset;
use rand::Rng;

/// All orthosets of carrier size exactly `n`, one per isomorphism class.
///
/// An orthoset on `{0,..,n-1}` is a graph on the proper elements; classes
/// are reduced by taking the minimal edge bitmask over all permutations of
/// the proper elements. Practical for `n ≤ 8`.
pub fn canonical_orthosets(n: usize) -> Vec<FiniteOrthoset> {
    assert!((1..=8).contains(&n), "canonical generation is meant for small n");
    let k = n - 1;
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
        .collect();
    let perms = permutations(k);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = canonical_mask(mask, &pairs, &perms);
        if seen.insert(canon) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| (canon >> b) & 1 == 1)
                .map(|(_, &(i, j))| (i + 1, j + 1))
                .collect();
            out.push(FiniteOrthoset::from_edges(n, &edges).unwrap());
        }
    }
    out
}

/// All canonical orthosets with carrier size at most `n`.
pub fn canonical_orthosets_up_to(n: usize) -> Vec<FiniteOrthoset> {
    (1..=n).flat_map(canonical_orthosets).collect()
}

fn canonical_mask(mask: u32, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    let k = pairs.iter().map(|&(_, j)| j + 1).max().unwrap_or(0);
    let mut index = vec![vec![0usize; k]; k];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = b;
        index[j][i] = b;
    }
    perms
        .iter()
        .map(|perm| {
            let mut m = 0u32;
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if (mask >> b) & 1 == 1 {
                    m |= 1 << index[perm[i]][perm[j]];
                }
            }
            m
        })
        .min()
        .unwrap_or(0)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(&mut cur, k, &mut out);
    out
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// A random orthoset with `n` elements where each proper pair is orthogonal
/// with probability `density`.
pub fn random_orthoset<R: Rng>(rng: &mut R, n: usize, density: f64) -> FiniteOrthoset {
    let mut edges = Vec::new();
    for i in 1..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    FiniteOrthoset::from_edges(n, &edges).unwrap()
}

/// A random total map table from a carrier of size `dom_n` into one of size
/// `cod_n`; the falsity need not map to falsity, matching arbitrary
/// candidate tables.
pub fn random_table<R: Rng>(rng: &mut R, dom_n: usize, cod_n: usize) -> Vec<usize> {
    (0..dom_n).map(|_| rng.gen_range(0..cod_n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_unlabeled_graph_numbers() {
        // Numbers of graphs on 0..5 unlabeled vertices: 1, 1, 2, 4, 11, 34.
        assert_eq!(canonical_orthosets(1).len(), 1);
        assert_eq!(canonical_orthosets(2).len(), 1);
        assert_eq!(canonical_orthosets(3).len(), 2);
        assert_eq!(canonical_orthosets(4).len(), 4);
        assert_eq!(canonical_orthosets(5).len(), 11);
        assert_eq!(canonical_orthosets(6).len(), 34);
    }

    #[test]
    fn all_generated_instances_validate() {
        for x in canonical_orthosets_up_to(5) {
            for a in x.elements() {
                assert!(x.orthogonal(0, a));
                assert!(a == 0 || !x.orthogonal(a, a));
            }
        }
    }
}
