//! Finite, explicitly-enumerated dagger categories. Hom-sets are explicit
//! lists, so every check is relative to the listed morphisms; "the category"
//! is always an instance approximation.

use crate::HarnessError;
use hermitian::{HermitianSpace, Matrix, Scalar};
use ortho_core::FiniteOrthoset;
use ortho_maps::OrthoMap;

/// Common interface for the two instance kinds: objects by index, explicit
/// hom-lists, delegated composition, and a canonical dagger.
pub trait Category {
    type Payload: Clone + Eq + std::hash::Hash + std::fmt::Debug;

    fn n_objects(&self) -> usize;
    fn object_name(&self, i: usize) -> String;
    fn hom(&self, dom: usize, cod: usize) -> &[Self::Payload];
    fn compose(&self, inner_dom: usize, mid: usize, cod: usize, outer: &Self::Payload, inner: &Self::Payload) -> Self::Payload;
    fn dagger(&self, dom: usize, cod: usize, f: &Self::Payload) -> Self::Payload;
    fn identity(&self, i: usize) -> Self::Payload;
    fn is_zero_object(&self, i: usize) -> bool;
    fn zero_payload(&self, dom: usize, cod: usize) -> Self::Payload;

    fn contains(&self, dom: usize, cod: usize, f: &Self::Payload) -> bool {
        self.hom(dom, cod).iter().any(|g| g == f)
    }

    fn zero_object(&self) -> Option<usize> {
        (0..self.n_objects()).find(|&i| self.is_zero_object(i))
    }

    fn is_dagger_mono(&self, dom: usize, cod: usize, f: &Self::Payload) -> bool {
        let fd = self.dagger(dom, cod, f);
        self.compose(dom, cod, dom, &fd, f) == self.identity(dom)
    }

    fn is_dagger_iso(&self, dom: usize, cod: usize, f: &Self::Payload) -> bool {
        let fd = self.dagger(dom, cod, f);
        self.compose(dom, cod, dom, &fd, f) == self.identity(dom)
            && self.compose(cod, dom, cod, f, &fd) == self.identity(cod)
    }
}

/// A dagger category of finite orthosets and adjointable maps. Objects must
/// be irredundant so that adjoints, and hence the dagger, are unique; the
/// builder quotients redundant inputs.
#[derive(Clone, Debug)]
pub struct OrthosetInstance {
    pub objects: Vec<FiniteOrthoset>,
    /// `homs[a][b]` lists morphism tables from `objects[a]` to `objects[b]`,
    /// lexicographically sorted.
    pub homs: Vec<Vec<Vec<Vec<usize>>>>,
    /// Objects that were replaced by their irredundant quotients.
    pub quotiented: Vec<usize>,
}

impl OrthosetInstance {
    /// Builds the instance with hom-sets consisting of all adjointable maps
    /// between the given objects.
    pub fn with_all_adjointable_maps(objects: Vec<FiniteOrthoset>) -> Result<Self, HarnessError> {
        let mut quotiented = Vec::new();
        let objects: Vec<FiniteOrthoset> = objects
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                if x.is_irredundant() {
                    x
                } else {
                    quotiented.push(i);
                    ortho_core::irredundant_quotient(&x).quotient
                }
            })
            .collect();
        // |cod|^(|dom|-1) candidate tables per hom-set; refuse hopeless sizes
        for dom in &objects {
            for cod in &objects {
                let candidates = (cod.n() as f64).powi(dom.n() as i32 - 1);
                if candidates > 2e6 {
                    return Err(HarnessError::EnumerationTooLarge {
                        dom: dom.n(),
                        cod: cod.n(),
                    });
                }
            }
        }
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                homs[a][b] = ortho_maps::all_adjointable_maps(&objects[a], &objects[b])
                    .into_iter()
                    .map(|m| m.table().to_vec())
                    .collect();
                homs[a][b].sort();
            }
        }
        Ok(OrthosetInstance {
            objects,
            homs,
            quotiented,
        })
    }

    /// An instance with explicitly listed morphism tables; the lists are
    /// sorted and deduplicated but otherwise taken as given.
    pub fn with_explicit_homs(
        objects: Vec<FiniteOrthoset>,
        morphisms: Vec<(usize, usize, Vec<usize>)>,
    ) -> Result<Self, HarnessError> {
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (dom, cod, table) in morphisms {
            if dom >= n || cod >= n {
                return Err(HarnessError::BadObjectIndex(dom.max(cod)));
            }
            OrthoMap::new(objects[dom].clone(), objects[cod].clone(), table.clone())?;
            homs[dom][cod].push(table);
        }
        for row in &mut homs {
            for cell in row.iter_mut() {
                cell.sort();
                cell.dedup();
            }
        }
        Ok(OrthosetInstance {
            objects,
            homs,
            quotiented: Vec::new(),
        })
    }

    pub fn map(&self, dom: usize, cod: usize, table: &[usize]) -> OrthoMap {
        OrthoMap::new(
            self.objects[dom].clone(),
            self.objects[cod].clone(),
            table.to_vec(),
        )
        .expect("tables in an instance are valid")
    }
}

impl Category for OrthosetInstance {
    type Payload = Vec<usize>;

    fn n_objects(&self) -> usize {
        self.objects.len()
    }

    fn object_name(&self, i: usize) -> String {
        format!("X{}(n={})", i, self.objects[i].n())
    }

    fn hom(&self, dom: usize, cod: usize) -> &[Vec<usize>] {
        &self.homs[dom][cod]
    }

    fn compose(&self, _dom: usize, _mid: usize, _cod: usize, outer: &Vec<usize>, inner: &Vec<usize>) -> Vec<usize> {
        inner.iter().map(|&v| outer[v]).collect()
    }

    fn dagger(&self, dom: usize, cod: usize, f: &Vec<usize>) -> Vec<usize> {
        let m = self.map(dom, cod, f);
        let pair = ortho_maps::synthesize_adjoint(&m)
            .expect("instance morphisms are adjointable");
        pair.g().table().to_vec()
    }

    fn identity(&self, i: usize) -> Vec<usize> {
        (0..self.objects[i].n()).collect()
    }

    fn is_zero_object(&self, i: usize) -> bool {
        self.objects[i].n() == 1
    }

    fn zero_payload(&self, dom: usize, _cod: usize) -> Vec<usize> {
        vec![0; self.objects[dom].n()]
    }
}

/// A dagger category of Hermitian spaces over one scalar field with explicit
/// finite hom-lists of matrices.
#[derive(Clone, Debug)]
pub struct HermitianInstance<K: Scalar> {
    pub objects: Vec<HermitianSpace<K>>,
    pub homs: Vec<Vec<Vec<Matrix<K>>>>,
}

impl<K: Scalar> HermitianInstance<K> {
    pub fn new(
        objects: Vec<HermitianSpace<K>>,
        morphisms: Vec<(usize, usize, Matrix<K>)>,
    ) -> Result<Self, HarnessError> {
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (dom, cod, m) in morphisms {
            if dom >= n || cod >= n {
                return Err(HarnessError::BadObjectIndex(dom.max(cod)));
            }
            if m.rows() != objects[cod].dim() || m.cols() != objects[dom].dim() {
                return Err(HarnessError::Hermitian(hermitian::HermitianError::Shape(
                    "morphism shape does not match its hom-set".into(),
                )));
            }
            if !homs[dom][cod].contains(&m) {
                homs[dom][cod].push(m);
            }
        }
        Ok(HermitianInstance { objects, homs })
    }

    /// Objects of dimensions `dims` over the standard form, with hom-sets
    /// all matrices whose entries come from `entries`.
    pub fn bounded_entry_instance(dims: &[usize], entries: &[K]) -> Result<Self, HarnessError> {
        let objects: Vec<HermitianSpace<K>> =
            dims.iter().map(|&d| HermitianSpace::standard(d)).collect();
        let mut morphisms = Vec::new();
        for (a, ha) in objects.iter().enumerate() {
            for (b, hb) in objects.iter().enumerate() {
                let size = hb.dim() * ha.dim();
                let mut counters = vec![0usize; size];
                loop {
                    let data: Vec<K> = counters.iter().map(|&c| entries[c].clone()).collect();
                    let m = Matrix::new(hb.dim(), ha.dim(), data)?;
                    morphisms.push((a, b, m));
                    let mut pos = 0;
                    loop {
                        if pos == size {
                            break;
                        }
                        counters[pos] += 1;
                        if counters[pos] < entries.len() {
                            break;
                        }
                        counters[pos] = 0;
                        pos += 1;
                    }
                    if pos == size {
                        break;
                    }
                }
            }
        }
        Self::new(objects, morphisms)
    }

    pub fn linear_map(&self, dom: usize, cod: usize, m: &Matrix<K>) -> hermitian::LinearMap<K> {
        hermitian::LinearMap::new(
            self.objects[dom].clone(),
            self.objects[cod].clone(),
            m.clone(),
        )
        .expect("instance matrices have valid shapes")
    }
}

impl<K: Scalar> Category for HermitianInstance<K> {
    type Payload = Matrix<K>;

    fn n_objects(&self) -> usize {
        self.objects.len()
    }

    fn object_name(&self, i: usize) -> String {
        format!("H{}(dim={})", i, self.objects[i].dim())
    }

    fn hom(&self, dom: usize, cod: usize) -> &[Matrix<K>] {
        &self.homs[dom][cod]
    }

    fn compose(&self, _dom: usize, _mid: usize, _cod: usize, outer: &Matrix<K>, inner: &Matrix<K>) -> Matrix<K> {
        outer.mul(inner).expect("hom shapes are compatible")
    }

    fn dagger(&self, dom: usize, cod: usize, f: &Matrix<K>) -> Matrix<K> {
        self.linear_map(dom, cod, f).adjoint().matrix().clone()
    }

    fn identity(&self, i: usize) -> Matrix<K> {
        Matrix::identity(self.objects[i].dim())
    }

    fn is_zero_object(&self, i: usize) -> bool {
        self.objects[i].dim() == 0
    }

    fn zero_payload(&self, dom: usize, cod: usize) -> Matrix<K> {
        Matrix::zero(self.objects[cod].dim(), self.objects[dom].dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthoset_fixture_hom_sets_are_closed_under_dagger() {
        let inst = OrthosetInstance::with_all_adjointable_maps(vec![
            FiniteOrthoset::zero(),
            FiniteOrthoset::singleton_orthoset(2).unwrap(),
            FiniteOrthoset::mo2(),
        ])
        .unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for f in inst.hom(a, b) {
                    let fd = inst.dagger(a, b, f);
                    assert!(inst.contains(b, a, &fd));
                    assert_eq!(inst.dagger(b, a, &fd), *f, "involutive on irredundant objects");
                }
            }
        }
        assert!(!inst.hom(2, 2).is_empty());
    }

    #[test]
    fn oversized_enumeration_is_rejected() {
        // an irredundant 20-element path; the redundant 20-element
        // singleton would instead collapse to a two-element quotient
        let edges: Vec<(usize, usize)> = (1..19).map(|k| (k, k + 1)).collect();
        let big = FiniteOrthoset::from_edges(20, &edges).unwrap();
        assert!(matches!(
            OrthosetInstance::with_all_adjointable_maps(vec![big]),
            Err(crate::HarnessError::EnumerationTooLarge { .. })
        ));
        let collapsible = FiniteOrthoset::from_edges(20, &[]).unwrap();
        let inst = OrthosetInstance::with_all_adjointable_maps(vec![collapsible]).unwrap();
        assert_eq!(inst.objects[0].n(), 2);
    }

    #[test]
    fn redundant_objects_are_quotiented() {
        let redundant = FiniteOrthoset::singleton_orthoset(3).unwrap();
        let inst = OrthosetInstance::with_all_adjointable_maps(vec![redundant]).unwrap();
        assert_eq!(inst.quotiented, vec![0]);
        assert_eq!(inst.objects[0].n(), 2);
    }
}
