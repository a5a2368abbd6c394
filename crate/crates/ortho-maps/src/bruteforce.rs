//! Brute-force adjoint search, kept deliberately independent of the
//! synthesis path: candidates are tested against the defining biconditional
//! directly, with no realizer-row lookup. This is the completeness oracle
//! for `synthesize_adjoint`.

use crate::adjoint::is_adjoint_pair;
use crate::map::OrthoMap;

/// Enumerates every candidate table `g: Y → X` and returns the first (in
/// lexicographic order) that forms an adjoint pair with `f`. Cost is
/// |X|^|Y| · |X| · |Y|; use only on small carriers.
pub fn brute_force_adjoint_exhaustive(f: &OrthoMap) -> Option<OrthoMap> {
    let xn = f.dom().n();
    let yn = f.cod().n();
    let mut table = vec![0usize; yn];
    loop {
        let g = OrthoMap::new(f.cod().clone(), f.dom().clone(), table.clone()).unwrap();
        if is_adjoint_pair(f, &g).unwrap() {
            return Some(g);
        }
        // odometer increment
        let mut pos = yn;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < xn {
                break;
            }
            table[pos] = 0;
        }
    }
}

/// Backtracking search over candidate tables with early pruning: a partial
/// assignment `g(0..=k)` is abandoned as soon as the biconditional fails for
/// some `x` and some assigned `y`. Finds the lexicographically least adjoint.
pub fn brute_force_adjoint_pruned(f: &OrthoMap) -> Option<OrthoMap> {
    let yn = f.cod().n();
    let mut table = vec![0usize; yn];
    if assign(f, &mut table, 0) {
        let g = OrthoMap::new(f.cod().clone(), f.dom().clone(), table).unwrap();
        debug_assert!(is_adjoint_pair(f, &g).unwrap());
        Some(g)
    } else {
        None
    }
}

fn assign(f: &OrthoMap, table: &mut Vec<usize>, y: usize) -> bool {
    if y == f.cod().n() {
        return true;
    }
    for z in 0..f.dom().n() {
        let consistent = (0..f.dom().n()).all(|x| {
            f.cod().orthogonal(f.apply(x), y) == f.dom().orthogonal(x, z)
        });
        if consistent {
            table[y] = z;
            if assign(f, table, y + 1) {
                return true;
            }
        }
    }
    table[y] = 0;
    false
}
