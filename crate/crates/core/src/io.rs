//! JSON file formats. Every vertex, variable and facet label is 1-based.
//!
//! ```json
//! {"n": 8, "edges": [[1,5],[1,6]]}
//! {"ground_n": 26, "facets": [[9,11,14,17], [1,2]]}
//! {"ring_n": 8, "gens": [[1,5],[1,6]]}
//! ```
//!
//! A shelling order is either a list of 0-based positions into the `facets`
//! array of the complex file, or a list of facets.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::decomp::shelling::ShellingCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::SqFreeIdeal;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.ground_size(),
            edges: g.edges().iter().map(|e| [e.0 + 1, e.1 + 1]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    /// Rejects reversed pairs as well as loops and duplicates.
    pub fn to_graph(&self) -> Result<Graph> {
        if let Some(&[a, b]) = self.edges.iter().find(|[a, b]| a > b) {
            return Err(Error::Parse(format!("edge [{a},{b}] is reversed")));
        }
        let g = Graph::from_labeled_edges(self.n, self.edges.iter().map(|&[a, b]| (a, b)))?;
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub ground_n: usize,
    pub facets: Vec<VertexSet>,
}

impl ComplexJson {
    pub fn from_complex(delta: &SimplicialComplex) -> Self {
        ComplexJson {
            ground_n: delta.ground_size(),
            facets: delta.facets().to_vec(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.ground_n, self.facets.iter().copied())
    }

    /// Resolves an order file against the facets as written in this file.
    pub fn resolve_order(&self, order: &OrderJson) -> Result<ShellingCertificate> {
        match order {
            OrderJson::Positions(p) => p
                .iter()
                .map(|&i| {
                    self.facets.get(i).copied().ok_or_else(|| {
                        Error::NotAPermutation(format!("position {i} out of range"))
                    })
                })
                .collect::<Result<Vec<_>>>()
                .map(ShellingCertificate),
            OrderJson::Facets(f) => Ok(ShellingCertificate(f.clone())),
        }
    }

    /// Positions of an order's facets in this file, for output.
    pub fn positions(&self, order: &ShellingCertificate) -> Option<Vec<usize>> {
        order
            .0
            .iter()
            .map(|f| self.facets.iter().position(|g| g == f))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderJson {
    Positions(Vec<usize>),
    Facets(Vec<VertexSet>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub ring_n: usize,
    pub gens: Vec<VertexSet>,
}

impl IdealJson {
    pub fn from_ideal(i: &SqFreeIdeal) -> Self {
        IdealJson {
            ring_n: i.ring_size(),
            gens: i.gens().to_vec(),
        }
    }

    pub fn to_ideal(&self) -> Result<SqFreeIdeal> {
        SqFreeIdeal::new(self.ring_n, self.gens.iter().copied())
    }
}

pub fn from_json_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    read_json::<GraphJson>(path)?.to_graph()
}

pub fn read_complex(path: &Path) -> Result<(ComplexJson, SimplicialComplex)> {
    let file: ComplexJson = read_json(path)?;
    let delta = file.to_complex()?;
    Ok((file, delta))
}

pub fn read_ideal(path: &Path) -> Result<SqFreeIdeal> {
    read_json::<IdealJson>(path)?.to_ideal()
}

/// Pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn graph_round_trip() {
        let g = fixtures::small_graph();
        let json = serde_json::to_string(&GraphJson::from_graph(&g)).unwrap();
        assert!(json.starts_with(r#"{"n":8,"edges":[[1,5],[1,6]"#));
        let back: GraphJson = from_json_str(&json).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn graph_rejects_bad_edges() {
        for bad in [
            r#"{"n":3,"edges":[[2,1]]}"#,
            r#"{"n":3,"edges":[[1,1]]}"#,
            r#"{"n":3,"edges":[[1,2],[1,2]]}"#,
            r#"{"n":3,"edges":[[1,4]]}"#,
            r#"{"n":3,"edges":[[0,1]]}"#,
            r#"{"n":3,"edge":[]}"#,
        ] {
            let r = from_json_str::<GraphJson>(bad).and_then(|g| g.to_graph());
            assert!(r.is_err(), "{bad}");
        }
    }

    #[test]
    fn complex_and_orders() {
        let file: ComplexJson = from_json_str(r#"{"ground_n":4,"facets":[[3,4],[1,2],[2,3]]}"#).unwrap();
        let delta = file.to_complex().unwrap();
        assert_eq!(delta.facets().len(), 3);
        let by_pos = file.resolve_order(&from_json_str("[1,2,0]").unwrap()).unwrap();
        let by_facet = file
            .resolve_order(&from_json_str("[[1,2],[2,3],[3,4]]").unwrap())
            .unwrap();
        assert_eq!(by_pos, by_facet);
        assert_eq!(file.positions(&by_pos), Some(vec![1, 2, 0]));
        assert!(file.resolve_order(&OrderJson::Positions(vec![5])).is_err());
    }

    #[test]
    fn ideal_round_trip() {
        let i = SqFreeIdeal::edge_ideal(&fixtures::small_graph());
        let json = serde_json::to_string(&IdealJson::from_ideal(&i)).unwrap();
        let back: IdealJson = from_json_str(&json).unwrap();
        assert_eq!(back.to_ideal().unwrap(), i);
    }
}
