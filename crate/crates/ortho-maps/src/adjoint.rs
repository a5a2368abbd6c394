use crate::map::OrthoMap;
use crate::MapError;
use ortho_core::Subset;
use std::collections::HashMap;

/// Two maps forming a verified adjoint pair: `f(x) ⊥ y ⟺ x ⊥ g(y)` for all
/// `x`, `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointPair {
    f: OrthoMap,
    g: OrthoMap,
}

impl AdjointPair {
    /// Checks the biconditional over all pairs before admitting the pair.
    pub fn new(f: OrthoMap, g: OrthoMap) -> Result<Self, MapError> {
        if !is_adjoint_pair(&f, &g)? {
            return Err(MapError::NotAnAdjointPair);
        }
        Ok(AdjointPair { f, g })
    }

    pub fn f(&self) -> &OrthoMap {
        &self.f
    }

    pub fn g(&self) -> &OrthoMap {
        &self.g
    }

    /// The same pair with the roles swapped; adjointness is symmetric.
    pub fn flip(&self) -> AdjointPair {
        AdjointPair {
            f: self.g.clone(),
            g: self.f.clone(),
        }
    }
}

/// The defining biconditional, checked over all |X|·|Y| pairs.
pub fn is_adjoint_pair(f: &OrthoMap, g: &OrthoMap) -> Result<bool, MapError> {
    if g.dom() != f.cod() || g.cod() != f.dom() {
        return Err(MapError::ShapeMismatch);
    }
    for x in 0..f.dom().n() {
        for y in 0..f.cod().n() {
            if f.cod().orthogonal(f.apply(x), y) != f.dom().orthogonal(x, g.apply(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Witness that no adjoint exists: for the offending `y`, the set of `x`
/// with `f(x) ⊥ y` is not the orthocomplement row of any element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotAdjointable {
    pub y: usize,
    pub required: Subset,
}

impl std::fmt::Display for NotAdjointable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "not adjointable; witness y={}, S={:?} unrealized",
            self.y, self.required
        )
    }
}

/// Decides adjointability and synthesizes the canonical adjoint.
///
/// For each `y` in the codomain, any adjoint `g` must satisfy
/// `{g(y)}⊥ = {x : f(x) ⊥ y}`, so `g(y)` is forced up to row equality; the
/// least-index realizer is chosen. If some row is unrealized, no adjoint
/// exists at all. Runs in O(|X|²·|Y|) row operations.
pub fn synthesize_adjoint(f: &OrthoMap) -> Result<AdjointPair, NotAdjointable> {
    let dom = f.dom();
    let cod = f.cod();
    let mut realizer: HashMap<Subset, usize> = HashMap::new();
    for z in (0..dom.n()).rev() {
        realizer.insert(dom.row(z), z);
    }
    let mut table = Vec::with_capacity(cod.n());
    for y in 0..cod.n() {
        let mut need = dom.full_set();
        for x in 0..dom.n() {
            if !cod.orthogonal(f.apply(x), y) {
                need = need.without(x);
            }
        }
        match realizer.get(&need) {
            Some(&z) => table.push(z),
            None => return Err(NotAdjointable { y, required: need }),
        }
    }
    let g = OrthoMap::new(cod.clone(), dom.clone(), table).expect("table is total by construction");
    debug_assert!(is_adjoint_pair(f, &g).unwrap());
    debug_assert!(f.apply(0) == 0, "adjointable maps send falsity to falsity");
    Ok(AdjointPair {
        f: f.clone(),
        g,
    })
}

pub fn is_adjointable(f: &OrthoMap) -> bool {
    synthesize_adjoint(f).is_ok()
}

/// All adjointable maps from `dom` to `cod`, in lexicographic table order.
/// Adjointable maps fix the falsity, which prunes the enumeration.
pub fn all_adjointable_maps(
    dom: &ortho_core::FiniteOrthoset,
    cod: &ortho_core::FiniteOrthoset,
) -> Vec<OrthoMap> {
    let mut out = Vec::new();
    let mut table = vec![0usize; dom.n()];
    enumerate_tables(dom, cod, &mut table, 1, &mut out);
    out
}

fn enumerate_tables(
    dom: &ortho_core::FiniteOrthoset,
    cod: &ortho_core::FiniteOrthoset,
    table: &mut Vec<usize>,
    pos: usize,
    out: &mut Vec<OrthoMap>,
) {
    if pos == dom.n() {
        let f = OrthoMap::new(dom.clone(), cod.clone(), table.clone()).unwrap();
        if is_adjointable(&f) {
            out.push(f);
        }
        return;
    }
    for v in 0..cod.n() {
        table[pos] = v;
        enumerate_tables(dom, cod, table, pos + 1, out);
    }
    table[pos] = 0;
}
