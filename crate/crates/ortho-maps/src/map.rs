use crate::MapError;
use ortho_core::{FiniteOrthoset, Subset};

/// A total function between finite orthosets, stored as a dense table.
///
/// No property is imposed at construction: adjointability is a property to
/// be decided, not an assumption.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrthoMap {
    dom: FiniteOrthoset,
    cod: FiniteOrthoset,
    table: Vec<usize>,
}

impl std::fmt::Debug for OrthoMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrthoMap({:?})", self.table)
    }
}

impl OrthoMap {
    pub fn new(dom: FiniteOrthoset, cod: FiniteOrthoset, table: Vec<usize>) -> Result<Self, MapError> {
        if table.len() != dom.n() {
            return Err(MapError::TableLength {
                expected: dom.n(),
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod.n()) {
            return Err(MapError::ValueOutOfRange { value: bad, n: cod.n() });
        }
        Ok(OrthoMap { dom, cod, table })
    }

    pub fn identity(x: &FiniteOrthoset) -> Self {
        OrthoMap {
            dom: x.clone(),
            cod: x.clone(),
            table: (0..x.n()).collect(),
        }
    }

    /// The constant-falsity map.
    pub fn zero(dom: &FiniteOrthoset, cod: &FiniteOrthoset) -> Self {
        OrthoMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table: vec![0; dom.n()],
        }
    }

    pub fn dom(&self) -> &FiniteOrthoset {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteOrthoset {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = Subset::EMPTY;
        for &v in &self.table {
            if seen.contains(v) {
                return false;
            }
            seen = seen.with(v);
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.n() == self.cod.n() && self.is_injective()
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &OrthoMap, inner: &OrthoMap) -> Result<OrthoMap, MapError> {
        if inner.cod != outer.dom {
            return Err(MapError::NotComposable);
        }
        Ok(OrthoMap {
            dom: inner.dom.clone(),
            cod: outer.cod.clone(),
            table: inner.table.iter().map(|&v| outer.table[v]).collect(),
        })
    }

    /// Set of values taken.
    pub fn image(&self) -> Subset {
        Subset::from_indices(self.table.iter().copied())
    }

    /// Preimage of the falsity.
    pub fn kernel(&self) -> Subset {
        Subset::from_indices(
            self.table
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v == 0)
                .map(|(x, _)| x),
        )
    }

    pub fn inverse(&self) -> Option<OrthoMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod.n()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(OrthoMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table,
        })
    }

    /// Pointwise equivalence: images have equal orthocomplement rows.
    pub fn equivalent_to(&self, other: &OrthoMap) -> Result<bool, MapError> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(MapError::ShapeMismatch);
        }
        Ok(self
            .table
            .iter()
            .zip(&other.table)
            .all(|(&a, &b)| self.cod.row(a) == self.cod.row(b)))
    }

    /// A bijection preserving and reflecting orthogonality.
    pub fn is_orthoiso_bijection(&self) -> bool {
        self.is_bijective()
            && (0..self.dom.n()).all(|x1| {
                (0..self.dom.n()).all(|x2| {
                    self.dom.orthogonal(x1, x2)
                        == self.cod.orthogonal(self.table[x1], self.table[x2])
                })
            })
    }
}

/// Same-shape equality of maps, after checking domains and codomains agree.
pub fn maps_equivalent(f: &OrthoMap, g: &OrthoMap) -> Result<bool, MapError> {
    f.equivalent_to(g)
}
