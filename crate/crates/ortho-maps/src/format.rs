//! JSON file format for maps:
//! `{"dom": <orthoset>, "cod": <orthoset>, "table": [j0, j1, ...]}`.

use crate::map::OrthoMap;
use crate::MapError;
use ortho_core::format::OrthosetFile;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub dom: OrthosetFile,
    pub cod: OrthosetFile,
    pub table: Vec<usize>,
}

impl MapFile {
    pub fn to_map(&self) -> Result<OrthoMap, MapError> {
        let dom = self.dom.to_orthoset().map_err(MapError::Core)?;
        let cod = self.cod.to_orthoset().map_err(MapError::Core)?;
        OrthoMap::new(dom, cod, self.table.clone())
    }
}

impl From<&OrthoMap> for MapFile {
    fn from(f: &OrthoMap) -> Self {
        MapFile {
            dom: OrthosetFile::from(f.dom()),
            cod: OrthosetFile::from(f.cod()),
            table: f.table().to_vec(),
        }
    }
}

pub fn parse_map(json: &str) -> Result<OrthoMap, MapError> {
    let file: MapFile =
        serde_json::from_str(json).map_err(|e| MapError::Core(ortho_core::OrthoError::Format(e.to_string())))?;
    file.to_map()
}
