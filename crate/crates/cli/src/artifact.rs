//! JSON descriptor of a reduction gadget. The graph itself is rebuilt from
//! the instance, so the file stays small; vertex and edge counts guard
//! against a mismatched rebuild.

use std::path::Path;

use graphburn::partition::ThreePartitionInstance;
use graphburn::reduction::{construct_ig, construct_px, IGArtifact, PGArtifact};
use graphburn::Graph;
use serde::{Deserialize, Serialize};

use crate::commands::read_file;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Interval,
    Permutation,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Artifact {
    pub kind: GadgetKind,
    pub instance: ThreePartitionInstance,
    pub vertices: usize,
    pub edges: usize,
}

pub enum Gadget {
    Interval(Box<IGArtifact>),
    Permutation(Box<PGArtifact>),
}

impl Gadget {
    pub fn graph(&self) -> &Graph {
        match self {
            Gadget::Interval(a) => &a.graph,
            Gadget::Permutation(a) => &a.graph,
        }
    }
}

impl Artifact {
    pub fn describe(kind: GadgetKind, instance: &ThreePartitionInstance, graph: &Graph) -> Self {
        Artifact {
            kind,
            instance: instance.clone(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("artifact serializes");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read_file(path)?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
    }

    pub fn rebuild(&self) -> Result<Gadget, CliError> {
        let gadget = match self.kind {
            GadgetKind::Interval => Gadget::Interval(Box::new(construct_ig(&self.instance))),
            GadgetKind::Permutation => Gadget::Permutation(Box::new(construct_px(&self.instance))),
        };
        let g = gadget.graph();
        if g.vertex_count() != self.vertices || g.edge_count() != self.edges {
            return Err(CliError::Malformed(format!(
                "artifact announces {} vertices and {} edges, rebuild has {} and {}",
                self.vertices,
                self.edges,
                g.vertex_count(),
                g.edge_count()
            )));
        }
        Ok(gadget)
    }
}
