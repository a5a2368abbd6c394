//! Drives the full check battery over a loaded instance and collects
//! serializable outcomes, the payload behind `category check`.

use crate::format::LoadedInstance;
use crate::{
    check_hypotheses_hermitian, check_hypotheses_orthoset, verify_category_laws,
    verify_dagger_biproduct, verify_derived_lemmas, verify_zero_object, HarnessError,
    HypothesisStatus,
};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    /// `pass`, `fail`, `gap` (structure absent from the instance), or `n/a`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: "pass".into(),
            detail: None,
        }
    }

    fn fail(name: impl Into<String>, detail: Option<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: "fail".into(),
            detail,
        }
    }

    fn of(name: impl Into<String>, ok: bool, detail: Option<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail)
        }
    }

    pub fn passed(&self) -> bool {
        self.status != "fail"
    }
}

fn hypothesis_outcome(name: &str, status: &HypothesisStatus) -> CheckOutcome {
    match status {
        HypothesisStatus::Witnessed => CheckOutcome::pass(name),
        HypothesisStatus::NotWitnessed(d) => CheckOutcome {
            name: name.into(),
            status: "gap".into(),
            detail: Some(d.clone()),
        },
        HypothesisStatus::Failed(d) => CheckOutcome::fail(name, Some(d.clone())),
        HypothesisStatus::NotApplicable(d) => CheckOutcome {
            name: name.into(),
            status: "n/a".into(),
            detail: Some(d.clone()),
        },
    }
}

/// Runs laws, zero object, declared biproduct witnesses, and optionally the
/// hypothesis battery and the derived lemmas.
pub fn run_category_check(
    loaded: &LoadedInstance,
    hypotheses: bool,
    lemmas: bool,
) -> Result<Vec<CheckOutcome>, HarnessError> {
    let mut out = Vec::new();
    match loaded {
        LoadedInstance::Orthoset(inst, witnesses) => {
            let laws = verify_category_laws(inst);
            out.push(CheckOutcome::of(
                "category and dagger laws",
                laws.passed_strict(),
                laws.witness.clone(),
            ));
            let zero = verify_zero_object(inst);
            out.push(CheckOutcome::of("zero object", zero.passed(), zero.witness.clone()));
            for (k, w) in witnesses.iter().enumerate() {
                let report = verify_dagger_biproduct(inst, w)?;
                out.push(CheckOutcome::of(
                    format!("biproduct witness #{k}"),
                    report.passed(),
                    report.witness.clone(),
                ));
                out.push(CheckOutcome {
                    name: format!("biproduct witness #{k} mediator uniqueness"),
                    status: if report.mediator_unique { "pass" } else { "gap" }.into(),
                    detail: (!report.mediator_unique).then(|| {
                        format!(
                            "up to {} mediators per cospan over {} cospans",
                            report.max_mediators, report.cospans_checked
                        )
                    }),
                });
            }
            if hypotheses {
                let h = check_hypotheses_orthoset(inst)?;
                for (name, status) in h.entries() {
                    out.push(hypothesis_outcome(name, status));
                }
                if !h.h1_gaps.is_empty() {
                    out.push(CheckOutcome {
                        name: "H1 carrier gaps".into(),
                        status: "gap".into(),
                        detail: Some(h.h1_gaps.join("; ")),
                    });
                }
            }
            if lemmas {
                let report = verify_derived_lemmas(inst)?;
                for o in report.outcomes {
                    out.push(CheckOutcome::of(o.name, o.passed, o.witness));
                }
            }
        }
        LoadedInstance::HermitianQ(inst, witnesses) => {
            run_hermitian_checks(inst, witnesses, hypotheses, &mut out)?;
        }
        LoadedInstance::HermitianQi(inst, witnesses) => {
            run_hermitian_checks(inst, witnesses, hypotheses, &mut out)?;
        }
    }
    if lemmas {
        if let LoadedInstance::HermitianQ(..) | LoadedInstance::HermitianQi(..) = loaded {
            out.push(CheckOutcome {
                name: "derived lemmas".into(),
                status: "n/a".into(),
                detail: Some("the derived-lemma suite runs on orthoset instances".into()),
            });
        }
    }
    Ok(out)
}

fn run_hermitian_checks<K: hermitian::Scalar>(
    inst: &crate::instance::HermitianInstance<K>,
    witnesses: &[crate::biproduct::BiproductWitness<hermitian::Matrix<K>>],
    hypotheses: bool,
    out: &mut Vec<CheckOutcome>,
) -> Result<(), HarnessError> {
    let laws = verify_category_laws(inst);
    out.push(CheckOutcome::of(
        "category and dagger laws",
        laws.passed_lawful(),
        laws.witness.clone(),
    ));
    if laws.closure_misses > 0 {
        out.push(CheckOutcome {
            name: "composition closure".into(),
            status: "gap".into(),
            detail: Some(format!(
                "{} of {} composites fall outside the entry bound",
                laws.closure_misses, laws.composition_pairs_checked
            )),
        });
    }
    let zero = verify_zero_object(inst);
    out.push(CheckOutcome::of("zero object", zero.passed(), zero.witness.clone()));
    for (k, w) in witnesses.iter().enumerate() {
        let report = verify_dagger_biproduct(inst, w)?;
        out.push(CheckOutcome::of(
            format!("biproduct witness #{k}"),
            report.passed() && report.mediator_unique,
            report.witness.clone(),
        ));
    }
    if hypotheses {
        let h = check_hypotheses_hermitian(inst)?;
        for (name, status) in h.entries() {
            out.push(hypothesis_outcome(name, status));
        }
        if !h.h1_gaps.is_empty() {
            out.push(CheckOutcome {
                name: "H1 carrier gaps".into(),
                status: "gap".into(),
                detail: Some(h.h1_gaps.join("; ")),
            });
        }
    }
    Ok(())
}
