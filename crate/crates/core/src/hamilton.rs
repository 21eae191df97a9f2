//! Hamilton paths: a gadget encoding range membership in the shape of its
//! unique Hamilton path, a reduction from trees to graphs, and corpus
//! deciders.
//!
//! # Tree reduction
//!
//! [`harel_reduce`] works on a tree truncated at depth `d`; a branch means a
//! member of length `d`. Let `Q` be the preorder listing of the tree's nodes,
//! preceded by a head vertex `η`, with every depth-`d` node `λ` replaced by
//! three consecutive entries `λa, λb, λc`. The graph is the path along `Q`
//! plus a hub `z` joined to `λa` and `λb` for every depth-`d` node `λ`.
//!
//! Hamilton paths, taken up to reversal, correspond one to one with branches:
//!
//! * Inserting `z` between `λa` and `λb` gives a Hamilton path for each `λ`.
//! * Conversely, removing `z` from a Hamilton path leaves at most two pieces,
//!   each a run of consecutive entries of `Q`, since `Q` only has its own path
//!   edges. If `z` were an end, the other piece would be all of `Q` entered at
//!   a neighbor of `z`; the ends of `Q` are `η` and the last entry, never
//!   `λa` or `λb`. So `z` is interior and joins the inner ends of the two
//!   runs, which are consecutive in `Q`; the only consecutive pairs both
//!   adjacent to `z` are `(λa, λb)`.
//! * Without depth-`d` nodes `z` is isolated and there is no Hamilton path.
//!
//! The branch of a trace is read off the two neighbors of `z`.
//! Ids: `z = 0`, `η = 1`, and entry `p` of the expanded preorder is `p + 2`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, GraphStream, InjectionStream, NatSet, Tree, Vertex};
use crate::oracles::{hamilton_paths, PathKind, PathTrace};

// ---------------------------------------------------------------------------
// range gadget

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonParams {
    pub f: Vec<u64>,
    pub n: u64,
    pub window: u64,
}

#[derive(Debug, Clone)]
pub struct HamiltonRangeGadget {
    params: HamiltonParams,
    graph: FiniteGraph,
}

/// Vertices `v_0 .. v_{V-1}` (ids `0..V`): edge `(v_0, v_1)`, and for each
/// `j + 2 < V` either `(v_0, v_{j+2})` when `f(j) = n` is revealed or
/// `(v_{j+1}, v_{j+2})` otherwise.
pub fn build_hamilton_range_gadget(f: &InjectionStream, n: u64, window: u64) -> Result<HamiltonRangeGadget> {
    if window < 2 {
        return Err(Error::InvalidParameter(format!("window must be at least 2, got {window}")));
    }
    let mut edges = vec![(0, 1)];
    for j in 0..window - 2 {
        if f.get(j as usize) == Some(n) {
            edges.push((0, j + 2));
        } else {
            edges.push((j + 1, j + 2));
        }
    }
    let graph = FiniteGraph::new(0..window, edges)?;
    Ok(HamiltonRangeGadget { params: HamiltonParams { f: f.values().to_vec(), n, window }, graph })
}

impl HamiltonRangeGadget {
    pub fn from_params(p: &HamiltonParams) -> Result<Self> {
        build_hamilton_range_gadget(&InjectionStream::new(p.f.clone())?, p.n, p.window)
    }

    pub fn params(&self) -> &HamiltonParams {
        &self.params
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    /// Whether some `f(j) = n` is revealed with `v_{j+2}` inside the window.
    pub fn attached(&self) -> bool {
        let p = &self.params;
        p.f.iter().enumerate().any(|(j, &y)| y == p.n && (j as u64) + 2 < p.window)
    }
}

/// True iff `v_0` is not an end of the trace.
pub fn decode_hamilton_range(gadget: &HamiltonRangeGadget, trace: &PathTrace) -> Result<bool> {
    PathTrace::new(trace.vertices.clone(), PathKind::Hamilton).validate(gadget.graph())?;
    Ok(trace.first() != Some(0) && trace.last() != Some(0))
}

// ---------------------------------------------------------------------------
// tree reduction

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionLabel {
    Hub,
    Head,
    Node(Vec<u64>),
    /// A depth-`d` node, entry 0, 1 or 2 of its triple.
    Leaf(Vec<u64>, u8),
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    tree: Tree,
    graph: FiniteGraph,
    stream: GraphStream,
    labels: BTreeMap<Vertex, ReductionLabel>,
}

pub const HUB: Vertex = 0;

pub fn harel_reduce(tree: &Tree) -> Result<ReductionOutput> {
    if tree.is_empty() {
        return Err(Error::InvalidParameter("tree is empty".into()));
    }
    let depth = tree.truncation_depth();
    let mut labels = BTreeMap::from([(HUB, ReductionLabel::Hub), (1, ReductionLabel::Head)]);
    let mut order = vec![1];
    let mut stack = vec![Vec::<u64>::new()];
    let mut next_id: Vertex = 2;
    let mut hub_edges = Vec::new();
    while let Some(node) = stack.pop() {
        if node.len() == depth {
            for part in 0..3u8 {
                labels.insert(next_id, ReductionLabel::Leaf(node.clone(), part));
                if part < 2 {
                    hub_edges.push((HUB, next_id));
                }
                order.push(next_id);
                next_id += 1;
            }
        } else {
            labels.insert(next_id, ReductionLabel::Node(node.clone()));
            order.push(next_id);
            next_id += 1;
            let children: Vec<Vec<u64>> = tree.children(&node).cloned().collect();
            stack.extend(children.into_iter().rev());
        }
    }
    let edges = order.windows(2).map(|w| (w[0], w[1])).chain(hub_edges);
    let graph = FiniteGraph::new(labels.keys().copied(), edges)?;
    let stream = GraphStream::bounded_from_graph(&graph);
    Ok(ReductionOutput { tree: tree.clone(), graph, stream, labels })
}

impl ReductionOutput {
    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn stream(&self) -> &GraphStream {
        &self.stream
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, ReductionLabel> {
        &self.labels
    }

    pub fn label_strings(&self) -> BTreeMap<Vertex, String> {
        let show = |s: &[u64]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".");
        self.labels
            .iter()
            .map(|(&v, l)| {
                let text = match l {
                    ReductionLabel::Hub => "z".to_string(),
                    ReductionLabel::Head => "head".to_string(),
                    ReductionLabel::Node(s) => format!("<{}>", show(s)),
                    ReductionLabel::Leaf(s, p) => format!("<{}>{}", show(s), ['a', 'b', 'c'][*p as usize]),
                };
                (v, text)
            })
            .collect()
    }
}

/// The branch whose triple surrounds the hub in `trace`.
pub fn extract_tree_path(out: &ReductionOutput, trace: &PathTrace) -> Result<Vec<u64>> {
    PathTrace::new(trace.vertices.clone(), PathKind::Hamilton).validate(out.graph())?;
    let invalid = |reason: &str| Error::InvalidTrace { kind: "hamilton".into(), reason: reason.into() };
    let at = trace.vertices.iter().position(|&v| v == HUB).ok_or_else(|| invalid("misses the hub"))?;
    let sides: Vec<Vertex> = [at.checked_sub(1), Some(at + 1)]
        .into_iter()
        .flatten()
        .filter_map(|i| trace.vertices.get(i).copied())
        .collect();
    let branches: BTreeSet<&Vec<u64>> = sides
        .iter()
        .filter_map(|v| match &out.labels[v] {
            ReductionLabel::Leaf(s, _) => Some(s),
            _ => None,
        })
        .collect();
    match (sides.len(), branches.len()) {
        (2, 1) => Ok(branches.into_iter().next().unwrap().clone()),
        _ => Err(invalid("hub does not sit inside a single leaf triple")),
    }
}

// ---------------------------------------------------------------------------
// corpus deciders

/// Indices whose graph has a Hamilton path.
pub fn decide_hamilton_corpus(graphs: &[FiniteGraph]) -> NatSet {
    let members = graphs.iter().enumerate().filter(|(_, g)| !hamilton_paths(g, Some(1)).is_empty());
    NatSet::new(members.map(|(i, _)| i as u64), graphs.len() as u64).expect("indices lie in the window")
}

/// Indices whose graph has a Hamilton path, given that none has two.
pub fn decide_unique_hamilton_corpus(graphs: &[FiniteGraph]) -> Result<NatSet> {
    let mut members = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let paths = hamilton_paths(g, Some(2));
        match paths.as_slice() {
            [] => {}
            [_] => members.push(index as u64),
            [a, b, ..] => {
                return Err(Error::MultipleHamiltonPaths {
                    index,
                    first: a.vertices.clone(),
                    second: b.vertices.clone(),
                })
            }
        }
    }
    NatSet::new(members, graphs.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{count_deep_paths, tree_has_deep_path};

    fn inj(v: &[u64]) -> InjectionStream {
        InjectionStream::new(v.to_vec()).unwrap()
    }

    #[test]
    fn range_gadget_shapes() {
        let g = build_hamilton_range_gadget(&inj(&[3]), 3, 6).unwrap();
        assert_eq!(g.graph().edge_set(), [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5)].into());
        assert!(g.attached());
        let free = build_hamilton_range_gadget(&inj(&[3]), 1, 6).unwrap();
        assert_eq!(free.graph(), &FiniteGraph::path(6));
        let short = build_hamilton_range_gadget(&inj(&[3]), 0, 4).unwrap();
        assert_eq!(short.graph(), &FiniteGraph::path(4));
        assert!(build_hamilton_range_gadget(&inj(&[]), 0, 1).is_err());
    }

    #[test]
    fn range_gadget_decode() {
        let g = build_hamilton_range_gadget(&inj(&[3]), 3, 6).unwrap();
        let paths = hamilton_paths(g.graph(), None);
        assert_eq!(paths.len(), 1);
        assert!(decode_hamilton_range(&g, &paths[0]).unwrap());

        let free = build_hamilton_range_gadget(&inj(&[3]), 2, 6).unwrap();
        let paths = hamilton_paths(free.graph(), None);
        assert_eq!(paths.len(), 1);
        assert!(!decode_hamilton_range(&free, &paths[0]).unwrap());
        let bogus = PathTrace::new(vec![0, 1, 2], PathKind::Hamilton);
        assert!(decode_hamilton_range(&free, &bogus).is_err());
    }

    #[test]
    fn reduction_single_branch() {
        let t = Tree::from_branches([vec![0, 2, 1]], 3).unwrap();
        let out = harel_reduce(&t).unwrap();
        let paths = hamilton_paths(out.graph(), None);
        assert_eq!(paths.len(), 1);
        assert_eq!(extract_tree_path(&out, &paths[0]).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn reduction_without_branches() {
        let root = Tree::new([vec![]], 2).unwrap();
        let out = harel_reduce(&root).unwrap();
        assert!(hamilton_paths(out.graph(), None).is_empty());
        let stub = Tree::from_branches([vec![1]], 3).unwrap();
        assert!(hamilton_paths(harel_reduce(&stub).unwrap().graph(), None).is_empty());
    }

    #[test]
    fn reduction_two_branches() {
        let t = Tree::from_branches([vec![0, 0, 0], vec![1, 0, 2], vec![1, 1]], 3).unwrap();
        assert_eq!(count_deep_paths(&t, 3, None).unwrap(), 2);
        let out = harel_reduce(&t).unwrap();
        let paths = hamilton_paths(out.graph(), None);
        assert_eq!(paths.len(), 2);
        let found: BTreeSet<Vec<u64>> = paths.iter().map(|p| extract_tree_path(&out, p).unwrap()).collect();
        assert_eq!(found, [vec![0, 0, 0], vec![1, 0, 2]].into());
    }

    #[test]
    fn reduction_depth_zero() {
        let t = Tree::new([vec![]], 0).unwrap();
        assert!(tree_has_deep_path(&t, 0).unwrap());
        let out = harel_reduce(&t).unwrap();
        assert_eq!(hamilton_paths(out.graph(), None).len(), 1);
    }

    #[test]
    fn deciders() {
        let z = decide_unique_hamilton_corpus(&[FiniteGraph::path(4), FiniteGraph::edgeless(3)]).unwrap();
        assert_eq!(z.members(), &BTreeSet::from([0]));
        let gadgets: Vec<FiniteGraph> =
            (0..5).map(|n| build_hamilton_range_gadget(&inj(&[3, 1]), n, 7).unwrap().graph().clone()).collect();
        assert_eq!(decide_unique_hamilton_corpus(&gadgets).unwrap().len(), 5);
        assert!(matches!(
            decide_unique_hamilton_corpus(&[FiniteGraph::path(2), FiniteGraph::complete(3)]),
            Err(Error::MultipleHamiltonPaths { index: 1, .. })
        ));

        let z = decide_hamilton_corpus(&[FiniteGraph::complete(3), FiniteGraph::edgeless(2), FiniteGraph::path(3)]);
        assert_eq!(z.members(), &BTreeSet::from([0, 2]));
        assert!(decide_hamilton_corpus(&[]).is_empty());
    }
}
