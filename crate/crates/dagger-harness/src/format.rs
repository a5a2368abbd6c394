//! Instance file format (JSON): a tagged object list, an explicit morphism
//! list or a generation directive, and optional biproduct witnesses.

use crate::biproduct::BiproductWitness;
use crate::instance::{HermitianInstance, OrthosetInstance};
use crate::HarnessError;
use hermitian::format::parse_matrix;
use hermitian::{Gaussian, Rational, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ObjectFile {
    #[serde(rename = "orthoset")]
    Orthoset {
        n: usize,
        #[serde(default)]
        edges: Vec<(usize, usize)>,
    },
    #[serde(rename = "hermitian")]
    Hermitian {
        scalars: String,
        gram: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub dom: usize,
    pub cod: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BiproductFile {
    pub a: usize,
    pub b: usize,
    pub carrier: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ia_table: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ib_table: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ia_matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ib_matrix: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    pub objects: Vec<ObjectFile>,
    /// Explicit morphisms; may be empty when `generate_homs` is set.
    #[serde(default)]
    pub morphisms: Vec<MorphismFile>,
    /// For orthoset instances: populate hom-sets with all adjointable maps.
    /// For Hermitian instances: all matrices over the listed entries.
    #[serde(default)]
    pub generate_homs: bool,
    #[serde(default)]
    pub entries: Vec<String>,
    #[serde(default)]
    pub biproducts: Vec<BiproductFile>,
}

/// A loaded instance with its declared biproduct witnesses.
pub enum LoadedInstance {
    Orthoset(OrthosetInstance, Vec<BiproductWitness<Vec<usize>>>),
    HermitianQ(
        HermitianInstance<Rational>,
        Vec<BiproductWitness<hermitian::Matrix<Rational>>>,
    ),
    HermitianQi(
        HermitianInstance<Gaussian>,
        Vec<BiproductWitness<hermitian::Matrix<Gaussian>>>,
    ),
}

pub fn parse_instance(json: &str) -> Result<LoadedInstance, HarnessError> {
    let file: InstanceFile = serde_json::from_str(json)
        .map_err(|e| HarnessError::Core(ortho_core::OrthoError::Format(e.to_string())))?;
    load_instance(&file)
}

pub fn load_instance(file: &InstanceFile) -> Result<LoadedInstance, HarnessError> {
    let all_orthosets = file
        .objects
        .iter()
        .all(|o| matches!(o, ObjectFile::Orthoset { .. }));
    let all_hermitian = file
        .objects
        .iter()
        .all(|o| matches!(o, ObjectFile::Hermitian { .. }));
    if all_orthosets {
        let objects: Result<Vec<_>, _> = file
            .objects
            .iter()
            .map(|o| match o {
                ObjectFile::Orthoset { n, edges } => {
                    ortho_core::FiniteOrthoset::from_edges(*n, edges)
                }
                _ => unreachable!(),
            })
            .collect();
        let objects = objects?;
        let inst = if file.generate_homs {
            OrthosetInstance::with_all_adjointable_maps(objects)?
        } else {
            let morphisms: Result<Vec<_>, HarnessError> = file
                .morphisms
                .iter()
                .map(|m| {
                    let table = m.table.clone().ok_or_else(|| {
                        HarnessError::Core(ortho_core::OrthoError::Format(
                            "orthoset morphism needs a table".into(),
                        ))
                    })?;
                    Ok((m.dom, m.cod, table))
                })
                .collect();
            OrthosetInstance::with_explicit_homs(objects, morphisms?)?
        };
        let witnesses: Result<Vec<_>, HarnessError> = file
            .biproducts
            .iter()
            .map(|b| {
                let ia = b.ia_table.clone().ok_or_else(|| {
                    HarnessError::Core(ortho_core::OrthoError::Format(
                        "orthoset biproduct witness needs ia_table".into(),
                    ))
                })?;
                let ib = b.ib_table.clone().ok_or_else(|| {
                    HarnessError::Core(ortho_core::OrthoError::Format(
                        "orthoset biproduct witness needs ib_table".into(),
                    ))
                })?;
                Ok(BiproductWitness {
                    a: b.a,
                    b: b.b,
                    carrier: b.carrier,
                    ia,
                    ib,
                })
            })
            .collect();
        return Ok(LoadedInstance::Orthoset(inst, witnesses?));
    }
    if all_hermitian {
        let scalars: Vec<&str> = file
            .objects
            .iter()
            .map(|o| match o {
                ObjectFile::Hermitian { scalars, .. } => scalars.as_str(),
                _ => unreachable!(),
            })
            .collect();
        let Some(&field) = scalars.first() else {
            return Err(HarnessError::Core(ortho_core::OrthoError::Format(
                "an instance needs at least one object".into(),
            )));
        };
        if scalars.iter().any(|&s| s != field) {
            return Err(HarnessError::Hermitian(
                hermitian::HermitianError::UnknownScalars(
                    "all objects of an instance must share one scalar field".into(),
                ),
            ));
        }
        return match field {
            "Q" => load_hermitian::<Rational>(file).map(|(i, w)| LoadedInstance::HermitianQ(i, w)),
            "Q(i)" => {
                load_hermitian::<Gaussian>(file).map(|(i, w)| LoadedInstance::HermitianQi(i, w))
            }
            other => Err(HarnessError::Hermitian(
                hermitian::HermitianError::UnknownScalars(other.to_string()),
            )),
        };
    }
    Err(HarnessError::Core(ortho_core::OrthoError::Format(
        "instances mixing orthoset and hermitian objects are not supported".into(),
    )))
}

fn load_hermitian<K: Scalar>(
    file: &InstanceFile,
) -> Result<(HermitianInstance<K>, Vec<BiproductWitness<hermitian::Matrix<K>>>), HarnessError> {
    let objects: Result<Vec<_>, HermitianErrorWrap> = file
        .objects
        .iter()
        .map(|o| match o {
            ObjectFile::Hermitian { gram, .. } => parse_matrix::<K>(gram)
                .and_then(hermitian::HermitianSpace::new)
                .map_err(HermitianErrorWrap),
            _ => unreachable!(),
        })
        .collect();
    let objects = objects.map_err(|e| HarnessError::Hermitian(e.0))?;
    let inst = if file.generate_homs {
        let entries: Result<Vec<K>, _> = file.entries.iter().map(|s| K::parse(s)).collect();
        let dims: Vec<usize> = objects.iter().map(|h| h.dim()).collect();
        let entries = entries?;
        if objects
            .iter()
            .any(|h| h.gram() != &hermitian::Matrix::identity(h.dim()))
        {
            return Err(HarnessError::Hermitian(hermitian::HermitianError::Shape(
                "generated hom-sets require standard Gram matrices".into(),
            )));
        }
        HermitianInstance::bounded_entry_instance(&dims, &entries)?
    } else {
        let morphisms: Result<Vec<_>, HarnessError> = file
            .morphisms
            .iter()
            .map(|m| {
                let rows = m.matrix.clone().ok_or_else(|| {
                    HarnessError::Core(ortho_core::OrthoError::Format(
                        "hermitian morphism needs a matrix".into(),
                    ))
                })?;
                Ok((m.dom, m.cod, parse_matrix::<K>(&rows)?))
            })
            .collect();
        HermitianInstance::new(objects, morphisms?)?
    };
    let witnesses: Result<Vec<_>, HarnessError> = file
        .biproducts
        .iter()
        .map(|b| {
            let ia = parse_matrix::<K>(b.ia_matrix.as_deref().ok_or_else(|| {
                HarnessError::Core(ortho_core::OrthoError::Format(
                    "hermitian biproduct witness needs ia_matrix".into(),
                ))
            })?)?;
            let ib = parse_matrix::<K>(b.ib_matrix.as_deref().ok_or_else(|| {
                HarnessError::Core(ortho_core::OrthoError::Format(
                    "hermitian biproduct witness needs ib_matrix".into(),
                ))
            })?)?;
            Ok(BiproductWitness {
                a: b.a,
                b: b.b,
                carrier: b.carrier,
                ia,
                ib,
            })
        })
        .collect();
    Ok((inst, witnesses?))
}

struct HermitianErrorWrap(hermitian::HermitianError);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Category;

    #[test]
    fn parse_generated_orthoset_instance() {
        let json = r#"{
            "objects": [
                {"kind": "orthoset", "n": 1},
                {"kind": "orthoset", "n": 2},
                {"kind": "orthoset", "n": 5, "edges": [[1,2],[3,4]]}
            ],
            "generate_homs": true,
            "biproducts": [
                {"a": 1, "b": 1, "carrier": 2, "ia_table": [0,1], "ib_table": [0,2]}
            ]
        }"#;
        let LoadedInstance::Orthoset(inst, wits) = parse_instance(json).unwrap() else {
            panic!("expected an orthoset instance")
        };
        assert_eq!(inst.objects.len(), 3);
        assert_eq!(wits.len(), 1);
        assert!(!inst.hom(2, 2).is_empty());
    }

    #[test]
    fn parse_explicit_hermitian_instance() {
        let json = r#"{
            "objects": [
                {"kind": "hermitian", "scalars": "Q(i)", "gram": [["1"]]}
            ],
            "morphisms": [
                {"dom": 0, "cod": 0, "matrix": [["0+1 i"]]},
                {"dom": 0, "cod": 0, "matrix": [["1"]]}
            ]
        }"#;
        let LoadedInstance::HermitianQi(inst, _) = parse_instance(json).unwrap() else {
            panic!("expected a Q(i) instance")
        };
        assert_eq!(inst.hom(0, 0).len(), 2);
    }

    #[test]
    fn mixed_instances_are_rejected() {
        let json = r#"{
            "objects": [
                {"kind": "orthoset", "n": 1},
                {"kind": "hermitian", "scalars": "Q", "gram": [["1"]]}
            ]
        }"#;
        assert!(parse_instance(json).is_err());
    }
}
