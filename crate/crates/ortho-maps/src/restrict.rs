use crate::adjoint::AdjointPair;
use crate::map::OrthoMap;
use crate::MapError;
use ortho_core::{FiniteOrthoset, Subset};

/// The zero-kernel restriction of an adjoint pair: `f` restricted to
/// `(ker f)⊥` and corestricted to `(im f)⊥⊥`, with the matching restriction
/// of `g` adjoint to it. Embeddings map new indices back into the original
/// carriers.
#[derive(Clone, Debug)]
pub struct ZeroKernelRestriction {
    pub pair: AdjointPair,
    /// New domain as a subspace of the original domain, plus index map.
    pub dom_subspace: Subset,
    pub dom_embedding: Vec<usize>,
    /// New codomain as a subspace of the original codomain, plus index map.
    pub cod_subspace: Subset,
    pub cod_embedding: Vec<usize>,
}

/// Restriction/corestriction of a map to falsity-containing subspaces; the
/// image must land inside the chosen codomain part.
pub fn restrict_map(
    f: &OrthoMap,
    dom_part: Subset,
    cod_part: Subset,
) -> Result<(OrthoMap, Vec<usize>, Vec<usize>), MapError> {
    let (dsub, dold) = f
        .dom()
        .subspace(dom_part)
        .map_err(MapError::Core)?;
    let (csub, cold) = f
        .cod()
        .subspace(cod_part)
        .map_err(MapError::Core)?;
    let mut cod_index = vec![usize::MAX; f.cod().n()];
    for (i, &o) in cold.iter().enumerate() {
        cod_index[o] = i;
    }
    let mut table = Vec::with_capacity(dsub.n());
    for &x in &dold {
        let y = f.apply(x);
        if cod_index[y] == usize::MAX {
            return Err(MapError::ImageEscapesCorestriction { x, y });
        }
        table.push(cod_index[y]);
    }
    Ok((OrthoMap::new(dsub, csub, table)?, dold, cold))
}

pub fn zero_kernel_restriction(pair: &AdjointPair) -> Result<ZeroKernelRestriction, MapError> {
    let f = pair.f();
    let g = pair.g();
    let dom_part = f.dom().complement(f.kernel());
    let cod_part = f.cod().closure(f.image());
    let (f0, dold, cold) = restrict_map(f, dom_part, cod_part)?;
    let (g0, _, _) = restrict_map(g, cod_part, dom_part)?;
    let pair = AdjointPair::new(f0, g0)?;
    Ok(ZeroKernelRestriction {
        pair,
        dom_subspace: dom_part,
        dom_embedding: dold,
        cod_subspace: cod_part,
        cod_embedding: cold,
    })
}

/// The induced map between irredundant quotients, `[x] ↦ [f(x)]`.
///
/// Requires `f` adjointable; its adjoint passes to the quotients as the
/// unique adjoint there.
pub fn quotient_map(f: &OrthoMap) -> Result<(OrthoMap, ortho_core::Quotient, ortho_core::Quotient), MapError> {
    let pair = crate::adjoint::synthesize_adjoint(f).map_err(MapError::NotAdjointable)?;
    let qd = ortho_core::irredundant_quotient(f.dom());
    let qc = ortho_core::irredundant_quotient(f.cod());
    let push = |map: &OrthoMap, dq: &ortho_core::Quotient, cq: &ortho_core::Quotient| {
        let mut table = vec![usize::MAX; dq.quotient.n()];
        for x in 0..map.dom().n() {
            let c = dq.class_of[x];
            let v = cq.class_of[map.apply(x)];
            if table[c] == usize::MAX {
                table[c] = v;
            } else {
                debug_assert_eq!(table[c], v, "adjointable maps preserve equivalence");
            }
        }
        OrthoMap::new(dq.quotient.clone(), cq.quotient.clone(), table)
    };
    let pf = push(f, &qd, &qc)?;
    let pg = push(pair.g(), &qc, &qd)?;
    debug_assert!(crate::adjoint::is_adjoint_pair(&pf, &pg).unwrap());
    Ok((pf, qd, qc))
}

/// Builds the inclusion map of an orthoclosed subset as a standalone map.
pub fn inclusion_map(x: &FiniteOrthoset, a: Subset) -> Result<(OrthoMap, FiniteOrthoset), MapError> {
    let (sub, embed) = x.subspace(a).map_err(MapError::Core)?;
    let incl = OrthoMap::new(sub.clone(), x.clone(), embed)?;
    Ok((incl, sub))
}
