//! The canonical semiadditive structure `f + g = ∇ ∘ (f ⊕ g) ∘ Δ`.
//!
//! For Hermitian instances the biproduct is the block direct sum with
//! coordinate coprojections, so the diagram can be evaluated symbolically
//! and compared with entrywise matrix addition. For finite orthoset
//! instances the diagonal and codiagonal are only canonical choices among
//! possibly several mediators; the laws that survive the truncation are
//! checked and the rest reported.

use crate::biproduct::{mediators, oplus_candidates, BiproductWitness};
use crate::instance::Category;
use crate::HarnessError;
use hermitian::{HermitianSpace, LinearMap, Matrix, Scalar};

/// `∇_Y ∘ (f ⊕ g) ∘ Δ_X` evaluated with the canonical coordinate biproduct
/// witnesses of the direct sums `X ⊕ X` and `Y ⊕ Y`.
pub fn hermitian_sum_via_biproduct<K: Scalar>(
    f: &LinearMap<K>,
    g: &LinearMap<K>,
) -> Result<LinearMap<K>, HarnessError> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(HarnessError::Hermitian(hermitian::HermitianError::Shape(
            "sum of maps from different hom-sets".into(),
        )));
    }
    let x = f.dom();
    let y = f.cod();
    let xx = x.direct_sum(x);
    let yy = y.direct_sum(y);
    let id_x = Matrix::<K>::identity(x.dim());
    let id_y = Matrix::<K>::identity(y.dim());
    // Δ_X: X → X⊕X is the product mediator of (id, id); ∇_Y = Δ_Y†
    let delta = LinearMap::new(x.clone(), xx.clone(), id_x.vstack(&id_x)?)?;
    let nabla = LinearMap::new(yy.clone(), y.clone(), id_y.hstack(&id_y)?)?;
    let f_oplus_g = LinearMap::new(xx, yy, f.matrix().block_diag(g.matrix()))?;
    Ok(LinearMap::compose(
        &nabla,
        &LinearMap::compose(&f_oplus_g, &delta)?,
    )?)
}

#[derive(Clone, Debug)]
pub struct SemiadditiveReport {
    /// The diagram formula reproduces entrywise addition.
    pub matches_matrix_addition: bool,
    pub commutative_monoid: bool,
    pub distributive: bool,
    /// `(f+g)* = f* + g*`.
    pub adjoint_law: bool,
    /// `(f₁ ⊕ 0) + (0 ⊕ f₂) = f₁ ⊕ f₂`.
    pub plus_oplus_interchange: bool,
    pub pairs_checked: usize,
    pub witness: Option<String>,
}

impl SemiadditiveReport {
    pub fn passed(&self) -> bool {
        self.matches_matrix_addition
            && self.commutative_monoid
            && self.distributive
            && self.adjoint_law
            && self.plus_oplus_interchange
    }
}

/// Verifies the semiadditive laws on explicit triples of Hermitian maps
/// sharing a hom-set, with composable partners on both sides for the
/// two-sided distributivity law.
pub fn verify_semiadditive_hermitian<K: Scalar>(
    x: &HermitianSpace<K>,
    y: &HermitianSpace<K>,
    triples: &[(LinearMap<K>, LinearMap<K>, LinearMap<K>)],
    post: &[LinearMap<K>],
    pre: &[LinearMap<K>],
) -> Result<SemiadditiveReport, HarnessError> {
    let mut report = SemiadditiveReport {
        matches_matrix_addition: true,
        commutative_monoid: true,
        distributive: true,
        adjoint_law: true,
        plus_oplus_interchange: true,
        pairs_checked: 0,
        witness: None,
    };
    let zero = LinearMap::zero(x, y);
    for (f, g, h) in triples {
        report.pairs_checked += 1;
        let sum = hermitian_sum_via_biproduct(f, g)?;
        if sum != f.add(g)? {
            report.matches_matrix_addition = false;
            report.witness.get_or_insert("∇∘(f⊕g)∘Δ ≠ f+g".into());
        }
        let gf = hermitian_sum_via_biproduct(g, f)?;
        let assoc_l = hermitian_sum_via_biproduct(&sum, h)?;
        let assoc_r = hermitian_sum_via_biproduct(f, &hermitian_sum_via_biproduct(g, h)?)?;
        let unit = hermitian_sum_via_biproduct(f, &zero)?;
        if gf != sum || assoc_l != assoc_r || unit != *f {
            report.commutative_monoid = false;
            report.witness.get_or_insert("monoid law failure".into());
        }
        if sum.adjoint() != hermitian_sum_via_biproduct(&f.adjoint(), &g.adjoint())? {
            report.adjoint_law = false;
            report.witness.get_or_insert("(f+g)* ≠ f* + g*".into());
        }
        for p in post {
            let lhs = LinearMap::compose(p, &sum)?;
            let rhs = hermitian_sum_via_biproduct(
                &LinearMap::compose(p, f)?,
                &LinearMap::compose(p, g)?,
            )?;
            if lhs != rhs {
                report.distributive = false;
                report.witness.get_or_insert("p∘(f+g) ≠ p∘f + p∘g".into());
            }
        }
        for q in pre {
            let lhs = LinearMap::compose(&sum, q)?;
            let rhs = hermitian_sum_via_biproduct(
                &LinearMap::compose(f, q)?,
                &LinearMap::compose(g, q)?,
            )?;
            if lhs != rhs {
                report.distributive = false;
                report.witness.get_or_insert("(f+g)∘q ≠ f∘q + g∘q".into());
            }
        }
        // (f ⊕ 0) + (0 ⊕ g) = f ⊕ g as maps X⊕X → Y⊕Y
        let f_zero = LinearMap::new(
            x.direct_sum(x),
            y.direct_sum(y),
            f.matrix().block_diag(&Matrix::zero(y.dim(), x.dim())),
        )?;
        let zero_g = LinearMap::new(
            x.direct_sum(x),
            y.direct_sum(y),
            Matrix::zero(y.dim(), x.dim()).block_diag(g.matrix()),
        )?;
        let interchange = hermitian_sum_via_biproduct(&f_zero, &zero_g)?;
        if interchange.matrix() != &f.matrix().block_diag(g.matrix()) {
            report.plus_oplus_interchange = false;
            report.witness.get_or_insert("(f⊕0)+(0⊕g) ≠ f⊕g".into());
        }
    }
    Ok(report)
}

/// Semiadditive structure on a finite orthoset instance, relative to its
/// hom-lists and canonical mediator choices.
#[derive(Clone, Debug)]
pub struct OrthosetSumReport {
    /// Canonical Δ and ∇ exist for the supplied witnesses.
    pub diagonals_exist: bool,
    /// `f + 0 = f` for all applicable morphisms.
    pub unit_law: bool,
    /// `f + g = g + f` under the canonical choices.
    pub commutative: bool,
    pub sums_computed: usize,
    pub witness: Option<String>,
}

impl OrthosetSumReport {
    pub fn passed(&self) -> bool {
        self.diagonals_exist && self.unit_law && self.commutative
    }
}

/// The canonical diagonal: least `d: X → X⊕X` with `ι₁† ∘ d = ι₂† ∘ d = id`.
pub fn canonical_diagonal<C: Category>(
    c: &C,
    w: &BiproductWitness<C::Payload>,
) -> Option<C::Payload> {
    let p1 = c.dagger(w.a, w.carrier, &w.ia);
    let p2 = c.dagger(w.b, w.carrier, &w.ib);
    c.hom(w.a, w.carrier)
        .iter()
        .find(|d| {
            c.compose(w.a, w.carrier, w.a, &p1, d) == c.identity(w.a)
                && c.compose(w.a, w.carrier, w.b, &p2, d) == c.identity(w.a)
        })
        .cloned()
}

/// The canonical codiagonal: least mediator of `(id, id)`.
pub fn canonical_codiagonal<C: Category>(
    c: &C,
    w: &BiproductWitness<C::Payload>,
) -> Option<C::Payload> {
    mediators(c, w, w.a, &c.identity(w.a), &c.identity(w.b))
        .into_iter()
        .next()
}

/// `f + g` on an orthoset instance through a carrier witnessing `X ⊕ X` and
/// one witnessing `Y ⊕ Y`.
pub fn orthoset_sum<C: Category>(
    c: &C,
    w_xx: &BiproductWitness<C::Payload>,
    w_yy: &BiproductWitness<C::Payload>,
    f: &C::Payload,
    g: &C::Payload,
) -> Result<C::Payload, HarnessError> {
    let delta = canonical_diagonal(c, w_xx).ok_or(HarnessError::MediatorMissing)?;
    let nabla = canonical_codiagonal(c, w_yy).ok_or(HarnessError::MediatorMissing)?;
    let fg = oplus_candidates(c, w_xx, w_yy, f, g)
        .into_iter()
        .next()
        .ok_or(HarnessError::MediatorMissing)?;
    let x = w_xx.a;
    let xx = w_xx.carrier;
    let yy = w_yy.carrier;
    let y = w_yy.a;
    let inner = c.compose(x, xx, yy, &fg, &delta);
    Ok(c.compose(x, yy, y, &nabla, &inner))
}

pub fn verify_semiadditive_orthoset<C: Category>(
    c: &C,
    w_xx: &BiproductWitness<C::Payload>,
    w_yy: &BiproductWitness<C::Payload>,
) -> OrthosetSumReport {
    let mut report = OrthosetSumReport {
        diagonals_exist: true,
        unit_law: true,
        commutative: true,
        sums_computed: 0,
        witness: None,
    };
    if canonical_diagonal(c, w_xx).is_none() || canonical_codiagonal(c, w_yy).is_none() {
        report.diagonals_exist = false;
        report.witness = Some("Δ or ∇ missing from the hom-lists".into());
        return report;
    }
    let x = w_xx.a;
    let y = w_yy.a;
    let zero = c.zero_payload(x, y);
    for f in c.hom(x, y) {
        for g in c.hom(x, y) {
            match (
                orthoset_sum(c, w_xx, w_yy, f, g),
                orthoset_sum(c, w_xx, w_yy, g, f),
            ) {
                (Ok(fg), Ok(gf)) => {
                    report.sums_computed += 1;
                    if fg != gf {
                        report.commutative = false;
                        report.witness.get_or_insert("f+g ≠ g+f".into());
                    }
                }
                _ => {
                    report.diagonals_exist = false;
                    report.witness.get_or_insert("sum undefined for a pair".into());
                }
            }
        }
        if let Ok(unit) = orthoset_sum(c, w_xx, w_yy, f, &zero) {
            if unit != *f {
                report.unit_law = false;
                report.witness.get_or_insert("f + 0 ≠ f".into());
            }
        }
    }
    report
}
