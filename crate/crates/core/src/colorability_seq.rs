//! A sequence of graphs whose colorability encodes membership in the range of
//! an injection: `G_i` keeps growing a clique until `i` shows up in `g`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{FiniteGraph, InjectionStream};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueParams {
    pub g: Vec<u64>,
    pub i: u64,
    pub n: u64,
}

#[derive(Debug, Clone)]
pub struct CliqueGadget {
    params: CliqueParams,
    graph: FiniteGraph,
}

/// Vertices `v_0 .. v_{n-1}` with `(v_j, v_k)` for `j < k` whenever no
/// revealed `g(m)` with `m <= k` equals `i`.
pub fn build_clique_gadget(g: &InjectionStream, i: u64, n: u64) -> CliqueGadget {
    let hit = g.preimage(i, g.len()).map_or(n, |m| (m as u64).min(n));
    let edges = (0..hit).flat_map(|k| (0..k).map(move |j| (j, k)));
    let graph = FiniteGraph::new(0..n, edges).expect("clique edges are valid");
    CliqueGadget { params: CliqueParams { g: g.values().to_vec(), i, n }, graph }
}

impl CliqueGadget {
    pub fn from_params(p: &CliqueParams) -> Result<Self> {
        Ok(build_clique_gadget(&InjectionStream::new(p.g.clone())?, p.i, p.n))
    }

    pub fn params(&self) -> &CliqueParams {
        &self.params
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ColorabilityVerdict {
    /// `i` was hit: the clique is frozen and the graph is colorable with
    /// `chromatic_bound` colors.
    Stopped { clique_size: u64, chromatic_bound: u64 },
    /// No hit yet: the whole window is a clique.
    Growing { clique_size: u64 },
}

impl ColorabilityVerdict {
    pub fn is_stopped(&self) -> bool {
        matches!(self, ColorabilityVerdict::Stopped { .. })
    }

    pub fn clique_size(&self) -> u64 {
        match *self {
            ColorabilityVerdict::Stopped { clique_size, .. } | ColorabilityVerdict::Growing { clique_size } => {
                clique_size
            }
        }
    }
}

/// Reads the verdict off the gadget's own copy of `g`: a graph that is a
/// complete window looks the same whether or not a hit lies past the window.
pub fn decide_colorability_window(gadget: &CliqueGadget) -> ColorabilityVerdict {
    let CliqueParams { g, i, n } = &gadget.params;
    let size = |hit: u64| if *n == 0 { 0 } else { hit.min(*n).max(1) };
    match g.iter().position(|v| v == i) {
        Some(m) => {
            let clique_size = size(m as u64);
            ColorabilityVerdict::Stopped { clique_size, chromatic_bound: clique_size }
        }
        None => ColorabilityVerdict::Growing { clique_size: size(*n) },
    }
}
