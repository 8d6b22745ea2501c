//! JSON documents for graphs and generator sets.
//!
//! Labels are written left to right as `u_1 ... u_n`; the packed integer
//! form never appears in files. Graph documents list vertices in ascending
//! integer order so that output is byte-stable.

use serde::{Deserialize, Serialize};

use crate::daisy::GeneratorSet;
use crate::error::Result;
use crate::graph::CubeSubgraph;
use crate::label::VertexLabel;

/// `{"n": ..., "vertices": [...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: u32,
    pub vertices: Vec<String>,
}

/// `{"n": ..., "generators": [...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub n: u32,
    pub generators: Vec<String>,
}

impl From<&CubeSubgraph> for GraphDoc {
    fn from(g: &CubeSubgraph) -> Self {
        GraphDoc {
            n: g.dim(),
            vertices: g.label_strings(),
        }
    }
}

impl GraphDoc {
    /// Validates labels and rejects duplicates. Input order is not required to be sorted.
    pub fn to_graph(&self) -> Result<CubeSubgraph> {
        let labels = self
            .vertices
            .iter()
            .map(|s| VertexLabel::parse_with_dim(s, self.n))
            .collect::<Result<Vec<_>>>()?;
        CubeSubgraph::from_labels(self.n, labels)
    }
}

impl GeneratorDoc {
    pub fn to_generators(&self) -> Result<GeneratorSet> {
        let labels = self
            .generators
            .iter()
            .map(|s| VertexLabel::parse_with_dim(s, self.n))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(self.n, labels)
    }
}

pub fn graph_to_json(g: &CubeSubgraph) -> String {
    serde_json::to_string(&GraphDoc::from(g)).expect("graph documents always serialize")
}

pub fn graph_from_json(text: &str) -> Result<CubeSubgraph> {
    serde_json::from_str::<GraphDoc>(text)?.to_graph()
}

pub fn generators_from_json(text: &str) -> Result<GeneratorSet> {
    serde_json::from_str::<GeneratorDoc>(text)?.to_generators()
}

pub fn generators_to_json(gens: &GeneratorSet) -> String {
    let doc = GeneratorDoc {
        n: gens.dim(),
        generators: gens.generators().iter().map(|g| g.to_string()).collect(),
    };
    serde_json::to_string(&doc).expect("generator documents always serialize")
}
