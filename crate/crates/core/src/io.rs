//! JSON model files.
//!
//! ```json
//! { "name": "torus-cw-z2",
//!   "geometry": { "kind": "cw", "groups": [{"rank": 1}, {"rank": 2}, {"rank": 1}] },
//!   "gauge":    { "kind": "cw", "start": 1, "groups": [{"rank": 0, "torsion": [2]}] } }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::abelian::{CyclicSum, IntMatrix};
use crate::chain::{from_simplicial, GaugeModel, GradedChain, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub geometry: ChainSpec,
    pub gauge: ChainSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ChainSpec {
    Cw(CwSpec),
    Simplicial(SimplicialSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CwSpec {
    #[serde(default)]
    pub start: i64,
    pub groups: Vec<GroupSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub boundaries: Vec<BoundarySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundarySpec {
    pub from: i64,
    /// Rows index generators of degree `from − 1`, columns those of `from`.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialSpec {
    pub vertices: Vec<serde_json::Value>,
    /// Degree → simplices; a simplex is a vertex-index list, or a bare index
    /// for a vertex. Degree `"0"` defaults to all vertices.
    pub simplices: BTreeMap<String, Vec<SimplexSpec>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SimplexSpec {
    Vertex(usize),
    Simplex(Vec<usize>),
}

impl SimplexSpec {
    fn tuple(&self) -> Vec<usize> {
        match self {
            SimplexSpec::Vertex(v) => vec![*v],
            SimplexSpec::Simplex(s) => s.clone(),
        }
    }
}

/// Reference values shipped with bundled models.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gsd: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u64>,
    /// `p` → `H^p` in invariant-factor notation.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cohomology: BTreeMap<String, String>,
    /// `n` → `H_n` of the gauge chain.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub gauge_homology: BTreeMap<String, String>,
    /// `n` → `H_n` of the geometric chain.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub geometry_homology: BTreeMap<String, String>,
}

fn group_of(spec: &GroupSpec) -> Result<CyclicSum> {
    let mut moduli = vec![BigInt::from(0); spec.rank];
    for &d in &spec.torsion {
        if d < 1 {
            return Err(Error::Schema(format!("torsion order {d} must be >= 1")));
        }
        moduli.push(BigInt::from(d));
    }
    CyclicSum::new(moduli)
}

impl CwSpec {
    pub fn build(&self) -> Result<GradedChain> {
        let groups = self
            .groups
            .iter()
            .map(group_of)
            .collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::new();
        for b in &self.boundaries {
            let k = b.from - self.start;
            let cols = usize::try_from(k)
                .ok()
                .and_then(|k| groups.get(k))
                .map_or(0, CyclicSum::ngens);
            let rows = usize::try_from(k - 1)
                .ok()
                .and_then(|k| groups.get(k))
                .map_or(0, CyclicSum::ngens);
            let m = if b.matrix.is_empty() {
                IntMatrix::zeros(rows, cols)
            } else {
                let width = b.matrix[0].len();
                if b.matrix.iter().any(|r| r.len() != width) {
                    return Err(Error::ShapeMismatch(format!(
                        "boundary from degree {} has ragged rows",
                        b.from
                    )));
                }
                IntMatrix::from_rows(&b.matrix)
            };
            maps.push((b.from, m));
        }
        let chain = GradedChain::from_matrices(self.start, groups, maps)?;
        match &self.labels {
            Some(l) => chain.with_labels(l.clone()),
            None => Ok(chain),
        }
    }
}

impl SimplicialSpec {
    pub fn complex(&self) -> Result<SimplicialComplex> {
        let vertices: Vec<String> = self
            .vertices
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect();
        let mut levels: Vec<Vec<Vec<usize>>> = Vec::new();
        for (key, list) in &self.simplices {
            let n: usize = key.parse().map_err(|_| {
                Error::Schema(format!("simplex degree key {key:?} is not a number"))
            })?;
            if levels.len() <= n {
                levels.resize(n + 1, Vec::new());
            }
            levels[n] = list.iter().map(SimplexSpec::tuple).collect();
        }
        if levels.is_empty() {
            levels.push(Vec::new());
        }
        if !self.simplices.contains_key("0") {
            levels[0] = (0..vertices.len()).map(|v| vec![v]).collect();
        }
        SimplicialComplex::new(vertices, levels)
    }
}

impl ChainSpec {
    pub fn build(&self) -> Result<GradedChain> {
        match self {
            ChainSpec::Cw(cw) => cw.build(),
            ChainSpec::Simplicial(s) => from_simplicial(&s.complex()?),
        }
    }
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files serialize")
    }

    /// Build and validate both chains.
    pub fn build(&self) -> Result<GaugeModel> {
        let geometry = self.geometry.build()?;
        let gauge = self.gauge.build()?;
        GaugeModel::new(&self.name, &self.description, geometry, gauge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TORUS: &str = r#"{
        "name": "t",
        "geometry": {"kind": "cw", "groups": [{"rank": 1}, {"rank": 2}, {"rank": 1}]},
        "gauge": {"kind": "cw", "start": 1, "groups": [{"torsion": [2]}]}
    }"#;

    #[test]
    fn parses_cw_model() {
        let m = ModelFile::from_json(TORUS).unwrap().build().unwrap();
        assert_eq!(m.gauge().group(1), CyclicSum::from_u64s(&[2]));
        assert!(m.gauge().group(0).is_trivial());
        assert_eq!(m.cells(1), 2);
    }

    #[test]
    fn rejects_unknown_keys() {
        let bad = TORUS.replace("\"name\": \"t\"", "\"name\": \"t\", \"colour\": 1");
        assert!(matches!(ModelFile::from_json(&bad), Err(Error::Schema(_))));
        let bad = TORUS.replace("\"rank\": 2", "\"rank\": 2, \"tors\": []");
        assert!(matches!(ModelFile::from_json(&bad), Err(Error::Schema(_))));
    }

    #[test]
    fn parses_simplicial_with_bare_vertices() {
        let text = r#"{
            "name": "edge",
            "geometry": {"kind": "simplicial", "vertices": ["a", "b"], "simplices": {"1": [[0, 1]]}},
            "gauge": {"kind": "cw", "groups": [{"torsion": [2]}]}
        }"#;
        let m = ModelFile::from_json(text).unwrap().build().unwrap();
        assert_eq!(m.geometry().labels(1), &["[a,b]".to_string()]);
        let text2 = text.replace("{\"1\"", "{\"0\": [0, 1], \"1\"");
        assert_eq!(ModelFile::from_json(&text2).unwrap().build().unwrap(), m);
    }

    #[test]
    fn model_errors_surface() {
        let open = r#"{
            "name": "open",
            "geometry": {"kind": "simplicial", "vertices": [0, 1, 2], "simplices": {"1": [[0, 1]], "2": [[0, 1, 2]]}},
            "gauge": {"kind": "cw", "groups": [{"torsion": [2]}]}
        }"#;
        assert!(matches!(
            ModelFile::from_json(open).unwrap().build(),
            Err(Error::NotClosed(_))
        ));
        let not_complex = r#"{
            "name": "bad",
            "geometry": {"kind": "cw", "groups": [{"rank": 1}, {"rank": 1}, {"rank": 1}],
                         "boundaries": [{"from": 1, "matrix": [[1]]}, {"from": 2, "matrix": [[1]]}]},
            "gauge": {"kind": "cw", "groups": [{"torsion": [2]}]}
        }"#;
        assert!(matches!(
            ModelFile::from_json(not_complex).unwrap().build(),
            Err(Error::NotAComplex(_))
        ));
    }

    #[test]
    fn roundtrip() {
        let f = ModelFile::from_json(TORUS).unwrap();
        assert_eq!(ModelFile::from_json(&f.to_json()).unwrap(), f);
    }
}
