use crate::adjoint::{is_adjoint_pair, AdjointPair};
use crate::map::OrthoMap;
use ortho_core::Subset;

/// Morphism classes of the first component of an adjoint pair. Labels are
/// cumulative: an orthoisomorphism is in particular an orthometry and a
/// partial orthometry.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismLabels {
    pub orthoisomorphism: bool,
    pub orthometry: bool,
    pub partial_orthometry: bool,
    /// `f` is a Sasaki map onto its codomain, which `g` embeds as this
    /// orthoclosed subset of the domain.
    pub sasaki_for: Option<Subset>,
    /// `f` is a projection onto this orthoclosed subset of its carrier.
    pub projection_onto: Option<Subset>,
    pub self_adjoint: bool,
}

impl MorphismLabels {
    pub fn none(&self) -> bool {
        *self == MorphismLabels::default()
    }

    pub fn names(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.orthoisomorphism {
            v.push("orthoisomorphism".into());
        }
        if self.orthometry {
            v.push("orthometry".into());
        }
        if self.partial_orthometry {
            v.push("partial_orthometry".into());
        }
        if let Some(a) = self.sasaki_for {
            v.push(format!("sasaki_for {:?}", a));
        }
        if let Some(a) = self.projection_onto {
            v.push(format!("projection_onto {:?}", a));
        }
        if self.self_adjoint {
            v.push("self_adjoint".into());
        }
        if v.is_empty() {
            v.push("none".into());
        }
        v
    }
}

/// Evaluates each label independently from its defining criterion; the
/// implication chains between them are invariants to test, not shortcuts to
/// assume.
pub fn classify(pair: &AdjointPair) -> MorphismLabels {
    let f = pair.f();
    let g = pair.g();
    let gf = OrthoMap::compose(g, f).expect("pair shapes are compatible");
    let fg = OrthoMap::compose(f, g).expect("pair shapes are compatible");
    let fgf = OrthoMap::compose(f, &gf).expect("pair shapes are compatible");
    let gfg = OrthoMap::compose(g, &fg).expect("pair shapes are compatible");

    let im_f_closed = f.cod().is_orthoclosed(f.image());
    let im_g_closed = f.dom().is_orthoclosed(g.image());

    let orthoisomorphism = f.is_bijective() && g == &f.inverse().expect("bijective");
    let partial_orthometry = im_f_closed && im_g_closed && &fgf == f && &gfg == g;
    let orthometry = im_f_closed && gf.is_identity();

    // f: X → A is a Sasaki map when g embeds its domain as an orthoclosed
    // subset and f restricts to the identity along that embedding.
    let sasaki_for = if g.is_injective()
        && g.is_orthoiso_onto_image()
        && f.dom().is_orthoclosed(g.image())
        && (0..g.dom().n()).all(|a| f.apply(g.apply(a)) == a)
    {
        Some(g.image())
    } else {
        None
    };

    let endo = f.dom() == f.cod();
    let self_adjoint = endo && is_adjoint_pair(f, f).unwrap_or(false);
    let projection_onto = if endo
        && OrthoMap::compose(f, f).map(|ff| &ff == f).unwrap_or(false)
        && self_adjoint
        && im_f_closed
    {
        Some(f.image())
    } else {
        None
    };

    MorphismLabels {
        orthoisomorphism,
        orthometry,
        partial_orthometry,
        sasaki_for,
        projection_onto,
        self_adjoint,
    }
}

impl OrthoMap {
    /// Injective on orthogonality: x₁ ⊥ x₂ iff their images are orthogonal.
    pub(crate) fn is_orthoiso_onto_image(&self) -> bool {
        (0..self.dom().n()).all(|x1| {
            (0..self.dom().n()).all(|x2| {
                self.dom().orthogonal(x1, x2)
                    == self.cod().orthogonal(self.apply(x1), self.apply(x2))
            })
        })
    }
}

/// Report of the lattice-level laws for an adjointable map: closures push
/// forward (`f(A⊥⊥) ⊆ f(A)⊥⊥`) and joins are preserved up to closure.
#[derive(Clone, Debug)]
pub struct LatticeLawReport {
    pub closure_pushforward_ok: bool,
    pub join_preservation_ok: bool,
    pub witness: Option<String>,
}

pub fn verify_lattice_adjoint_laws(
    pair: &AdjointPair,
    cap: usize,
) -> Result<LatticeLawReport, ortho_core::OrthoError> {
    let f = pair.f();
    let dom = f.dom();
    let cod = f.cod();
    let push = |a: Subset| Subset::from_indices(a.iter().map(|x| f.apply(x)));

    let mut closure_ok = true;
    let mut join_ok = true;
    let mut witness = None;

    // exhaustive over the powerset while it is small, pseudorandom above
    let subsets: Box<dyn Iterator<Item = Subset>> = if dom.n() <= 16 {
        Box::new(dom.full_set().submasks())
    } else {
        let n = dom.n();
        let mut state = 0x9e3779b97f4a7c15u64;
        Box::new((0..10_000).map(move |_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            Subset(state & ((1u64 << n) - 1))
        }))
    };
    for a in subsets {
        let lhs = push(dom.closure(a));
        let rhs = cod.closure(push(a));
        if !lhs.is_subset_of(rhs) {
            closure_ok = false;
            witness.get_or_insert(format!("f({:?}⊥⊥) ⊄ f({:?})⊥⊥", a, a));
            break;
        }
    }

    let family = dom.orthoclosed_sets(cap)?;
    for &a in &family {
        for &b in &family {
            let lhs = cod.closure(push(dom.join(a, b)));
            let rhs = cod.join(cod.closure(push(a)), cod.closure(push(b)));
            if lhs != rhs {
                join_ok = false;
                witness.get_or_insert(format!("join law fails at A={a:?}, B={b:?}"));
            }
        }
    }
    // the join of the whole family at once
    let total = family.iter().fold(Subset::EMPTY, |acc, &a| acc.union(a));
    let lhs = cod.closure(push(dom.closure(total)));
    let rhs = family.iter().fold(Subset::singleton(0), |acc, &a| {
        cod.join(acc, cod.closure(push(a)))
    });
    if lhs != rhs {
        join_ok = false;
        witness.get_or_insert("join law fails for the full family".to_string());
    }

    Ok(LatticeLawReport {
        closure_pushforward_ok: closure_ok,
        join_preservation_ok: join_ok,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoint::synthesize_adjoint;
    use crate::restrict::inclusion_map;
    use ortho_core::{FiniteOrthoset, DEFAULT_FAMILY_CAP};

    #[test]
    fn inclusion_is_an_orthometry_and_its_adjoint_a_sasaki_map() {
        let mo2 = FiniteOrthoset::mo2();
        let a = Subset::from_indices([0, 1]);
        let (incl, _) = inclusion_map(&mo2, a).unwrap();
        let pair = synthesize_adjoint(&incl).unwrap();

        let f_labels = classify(&pair);
        assert!(f_labels.orthometry);
        assert!(f_labels.partial_orthometry);
        assert!(!f_labels.orthoisomorphism);
        assert_eq!(f_labels.sasaki_for, None);

        let g_labels = classify(&pair.flip());
        assert_eq!(g_labels.sasaki_for, Some(a));
        assert!(g_labels.partial_orthometry);
    }

    #[test]
    fn sasaki_composite_is_a_projection() {
        let mo2 = FiniteOrthoset::mo2();
        let p = OrthoMap::new(mo2.clone(), mo2.clone(), vec![0, 1, 0, 1, 1]).unwrap();
        let pair = synthesize_adjoint(&p).unwrap();
        let labels = classify(&pair);
        assert_eq!(labels.projection_onto, Some(Subset::from_indices([0, 1])));
        assert!(labels.self_adjoint);
        assert!(labels.partial_orthometry);
        assert!(!labels.orthometry);
    }

    #[test]
    fn double_swap_is_an_orthoisomorphism() {
        let mo2 = FiniteOrthoset::mo2();
        let swap = OrthoMap::new(mo2.clone(), mo2.clone(), vec![0, 2, 1, 4, 3]).unwrap();
        let pair = AdjointPair::new(swap.clone(), swap).unwrap();
        let labels = classify(&pair);
        assert!(labels.orthoisomorphism);
        assert!(labels.orthometry);
        assert!(labels.partial_orthometry);
        assert!(labels.self_adjoint);
    }

    #[test]
    fn zero_map_has_no_labels_beyond_projection_cases() {
        let mo2 = FiniteOrthoset::mo2();
        let z = OrthoMap::zero(&mo2, &mo2);
        let pair = synthesize_adjoint(&z).unwrap();
        let labels = classify(&pair);
        // the zero endomap is idempotent, self-adjoint, with orthoclosed
        // image {0}: a projection onto the zero subspace
        assert_eq!(labels.projection_onto, Some(Subset::singleton(0)));
        assert!(labels.partial_orthometry);
        assert!(!labels.orthometry);
        assert!(!labels.orthoisomorphism);
    }

    #[test]
    fn lattice_laws_hold_for_the_sasaki_pair() {
        let mo2 = FiniteOrthoset::mo2();
        let a = Subset::from_indices([0, 1]);
        let (incl, _) = inclusion_map(&mo2, a).unwrap();
        let pair = synthesize_adjoint(&incl).unwrap();
        let r = verify_lattice_adjoint_laws(&pair.flip(), DEFAULT_FAMILY_CAP).unwrap();
        assert!(r.closure_pushforward_ok && r.join_preservation_ok, "{:?}", r.witness);

        let id_pair = synthesize_adjoint(&OrthoMap::identity(&mo2)).unwrap();
        let r = verify_lattice_adjoint_laws(&id_pair, DEFAULT_FAMILY_CAP).unwrap();
        assert!(r.closure_pushforward_ok && r.join_preservation_ok);

        let zero_pair = synthesize_adjoint(&OrthoMap::zero(&mo2, &mo2)).unwrap();
        let r = verify_lattice_adjoint_laws(&zero_pair, DEFAULT_FAMILY_CAP).unwrap();
        assert!(r.closure_pushforward_ok && r.join_preservation_ok);
    }
}
