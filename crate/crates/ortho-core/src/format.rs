//! JSON file format for orthosets: `{"n": <int>, "edges": [[i,j], ...]}`.
//! The falsity 0 and its edges are implicit, symmetry is implied. Subsets
//! serialize as sorted index arrays.

use crate::orthoset::FiniteOrthoset;
use crate::subset::Subset;
use crate::OrthoError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrthosetFile {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
}

impl OrthosetFile {
    pub fn to_orthoset(&self) -> Result<FiniteOrthoset, OrthoError> {
        FiniteOrthoset::from_edges(self.n, &self.edges)
    }
}

impl From<&FiniteOrthoset> for OrthosetFile {
    fn from(x: &FiniteOrthoset) -> Self {
        OrthosetFile {
            n: x.n(),
            edges: x.proper_edges(),
        }
    }
}

pub fn parse_orthoset(json: &str) -> Result<FiniteOrthoset, OrthoError> {
    let file: OrthosetFile =
        serde_json::from_str(json).map_err(|e| OrthoError::Format(e.to_string()))?;
    file.to_orthoset()
}

pub fn subset_to_indices(s: Subset) -> Vec<usize> {
    s.indices()
}

pub fn subset_from_indices(v: &[usize], n: usize) -> Result<Subset, OrthoError> {
    let mut s = Subset::EMPTY;
    for &i in v {
        if i >= n {
            return Err(OrthoError::IndexOutOfRange { index: i, n });
        }
        s = s.with(i);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = FiniteOrthoset::mo2();
        let json = serde_json::to_string(&OrthosetFile::from(&x)).unwrap();
        let back = parse_orthoset(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn edges_field_is_optional() {
        let x = parse_orthoset(r#"{"n": 1}"#).unwrap();
        assert_eq!(x, FiniteOrthoset::zero());
    }

    #[test]
    fn malformed_input_is_a_format_error() {
        assert!(matches!(
            parse_orthoset("{"),
            Err(OrthoError::Format(_))
        ));
    }

    #[test]
    fn subsets_serialize_as_sorted_index_arrays() {
        let s = subset_from_indices(&[3, 0, 2], 5).unwrap();
        assert_eq!(subset_to_indices(s), vec![0, 2, 3]);
        assert!(matches!(
            subset_from_indices(&[9], 5),
            Err(OrthoError::IndexOutOfRange { index: 9, n: 5 })
        ));
    }
}
