//! JSON file formats for spaces and maps. Matrices are arrays of scalar
//! strings such as `"a/b"` or `"a/b+c/d i"`; parsing is exact and nothing is
//! ever represented in floating point.

use crate::linmap::LinearMap;
use crate::matrix::Matrix;
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::space::HermitianSpace;
use crate::HermitianError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceFile {
    /// `"Q"` or `"Q(i)"`.
    pub scalars: String,
    pub gram: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub scalars: String,
    pub dom_gram: Vec<Vec<String>>,
    pub cod_gram: Vec<Vec<String>>,
    pub matrix: Vec<Vec<String>>,
}

/// Runtime dispatch over the two supported scalar fields.
#[derive(Clone, Debug)]
pub enum AnySpace {
    Q(HermitianSpace<Rational>),
    Qi(HermitianSpace<Gaussian>),
}

#[derive(Clone, Debug)]
pub enum AnyMap {
    Q(LinearMap<Rational>),
    Qi(LinearMap<Gaussian>),
}

pub fn parse_matrix<K: Scalar>(rows: &[Vec<String>]) -> Result<Matrix<K>, HermitianError> {
    let parsed: Result<Vec<Vec<K>>, _> = rows
        .iter()
        .map(|row| row.iter().map(|s| K::parse(s)).collect())
        .collect();
    Matrix::from_rows(parsed?)
}

pub fn render_matrix<K: Scalar>(m: &Matrix<K>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect()
}

impl SpaceFile {
    pub fn to_space(&self) -> Result<AnySpace, HermitianError> {
        match self.scalars.as_str() {
            "Q" => Ok(AnySpace::Q(HermitianSpace::new(parse_matrix(&self.gram)?)?)),
            "Q(i)" => Ok(AnySpace::Qi(HermitianSpace::new(parse_matrix(&self.gram)?)?)),
            other => Err(HermitianError::UnknownScalars(other.to_string())),
        }
    }
}

impl MapFile {
    pub fn to_map(&self) -> Result<AnyMap, HermitianError> {
        match self.scalars.as_str() {
            "Q" => {
                let dom = HermitianSpace::new(parse_matrix::<Rational>(&self.dom_gram)?)?;
                let cod = HermitianSpace::new(parse_matrix::<Rational>(&self.cod_gram)?)?;
                Ok(AnyMap::Q(LinearMap::new(dom, cod, parse_matrix(&self.matrix)?)?))
            }
            "Q(i)" => {
                let dom = HermitianSpace::new(parse_matrix::<Gaussian>(&self.dom_gram)?)?;
                let cod = HermitianSpace::new(parse_matrix::<Gaussian>(&self.cod_gram)?)?;
                Ok(AnyMap::Qi(LinearMap::new(dom, cod, parse_matrix(&self.matrix)?)?))
            }
            other => Err(HermitianError::UnknownScalars(other.to_string())),
        }
    }
}

pub fn parse_space(json: &str) -> Result<AnySpace, HermitianError> {
    let file: SpaceFile =
        serde_json::from_str(json).map_err(|e| HermitianError::Shape(e.to_string()))?;
    file.to_space()
}

pub fn parse_map(json: &str) -> Result<AnyMap, HermitianError> {
    let file: MapFile =
        serde_json::from_str(json).map_err(|e| HermitianError::Shape(e.to_string()))?;
    file.to_map()
}
