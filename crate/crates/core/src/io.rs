//! File formats: JSON graphs with optional bound, labels and gadget
//! parameters; JSON-lines streams; injections, trees, colorings and traces;
//! DOT export.
//!
//! A stream file holds one event per line, `{"vertex":n}` or
//! `{"edge":[u,v]}`, optionally preceded by a `{"bound":{"v":h,...}}` line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colorability_seq::CliqueParams;
use crate::error::{Error, Result};
use crate::euler::EulerParams;
use crate::graph::{BoundFn, Event, FiniteGraph, GraphStream, InjectionStream, Tree, Vertex};
use crate::hamilton::HamiltonParams;
use crate::oracles::{Coloring, PathKind, PathTrace};
use crate::separation::{BlockParams, FlipParams};

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// Parameters of the construction a graph file came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GadgetMeta {
    Flip(FlipParams),
    Blocks(BlockParams),
    EulerRange(EulerParams),
    EulerSeq { f: Vec<u64>, i: u64, n: u64 },
    HamiltonRange(HamiltonParams),
    CliqueSeq(CliqueParams),
    Reduction { nodes: Vec<Vec<u64>>, depth: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundFn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<Vertex, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gadget: Option<GadgetMeta>,
}

impl GraphFile {
    pub fn from_graph(g: &FiniteGraph) -> Self {
        Self { vertices: g.vertices().collect(), edges: g.edges().collect(), ..Self::default() }
    }

    pub fn with_bound(mut self, bound: BoundFn) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_gadget(mut self, meta: GadgetMeta) -> Self {
        self.gadget = Some(meta);
        self
    }

    pub fn graph(&self) -> Result<FiniteGraph> {
        let g = FiniteGraph::new(self.vertices.iter().copied(), self.edges.iter().copied())?;
        if let Some(h) = &self.bound {
            h.check_graph(&g)?;
        }
        Ok(g)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_err)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files serialize")
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum StreamLine {
    Vertex { vertex: Vertex },
    Edge { edge: (Vertex, Vertex) },
    Bound { bound: BoundFn },
}

pub fn parse_stream(text: &str) -> Result<GraphStream> {
    let mut events = Vec::new();
    let mut bound = None;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |e: &dyn std::fmt::Display| Error::Parse(format!("line {}: {e}", n + 1));
        let value: serde_json::Value = serde_json::from_str(line).map_err(|e| err(&e))?;
        let field = |key: &str| value.get(key).cloned();
        if let Some(v) = field("vertex") {
            events.push(Event::Vertex(serde_json::from_value(v).map_err(|e| err(&e))?));
        } else if let Some(e) = field("edge") {
            let (u, v): (Vertex, Vertex) = serde_json::from_value(e).map_err(|e| err(&e))?;
            events.push(Event::Edge(u, v));
        } else if let Some(h) = field("bound") {
            let h: BoundFn = serde_json::from_value(h).map_err(|e| err(&e))?;
            if bound.replace(h).is_some() {
                return Err(err(&"second bound line"));
            }
        } else {
            return Err(err(&"expected a vertex, edge or bound line"));
        }
    }
    GraphStream::new(events, bound)
}

pub fn stream_to_jsonl(stream: &GraphStream) -> String {
    let mut out = String::new();
    if let Some(h) = stream.bound() {
        out.push_str(&serde_json::to_string(&StreamLine::Bound { bound: h.clone() }).unwrap());
        out.push('\n');
    }
    for ev in stream.events() {
        let line = match *ev {
            Event::Vertex(vertex) => StreamLine::Vertex { vertex },
            Event::Edge(u, v) => StreamLine::Edge { edge: (u, v) },
        };
        out.push_str(&serde_json::to_string(&line).unwrap());
        out.push('\n');
    }
    out
}

#[derive(Deserialize)]
#[serde(untagged)]
enum InjectionFile {
    Wrapped { values: Vec<u64> },
    Bare(Vec<u64>),
}

pub fn parse_injection(text: &str) -> Result<InjectionStream> {
    let values = match serde_json::from_str(text).map_err(parse_err)? {
        InjectionFile::Wrapped { values } | InjectionFile::Bare(values) => values,
    };
    InjectionStream::new(values)
}

pub fn injection_to_json(f: &InjectionStream) -> String {
    serde_json::to_string(f).unwrap()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TreeFile {
    Wrapped { nodes: Vec<Vec<u64>>, depth: usize },
    Bare(Vec<Vec<u64>>),
}

/// A bare list is closed under prefixes and truncated at its longest entry.
pub fn parse_tree(text: &str) -> Result<Tree> {
    match serde_json::from_str(text).map_err(parse_err)? {
        TreeFile::Wrapped { nodes, depth } => Tree::from_branches(nodes, depth),
        TreeFile::Bare(nodes) => {
            let depth = nodes.iter().map(Vec::len).max().unwrap_or(0);
            Tree::from_branches(nodes, depth)
        }
    }
}

pub fn tree_to_json(t: &Tree) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        nodes: Vec<&'a Vec<u64>>,
        depth: usize,
    }
    serde_json::to_string(&Out { nodes: t.nodes().iter().collect(), depth: t.truncation_depth() }).unwrap()
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    serde_json::from_str(text).map_err(parse_err)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TraceFile {
    Full(PathTrace),
    Bare(Vec<Vertex>),
}

/// A bare list of vertices is read as a trace of kind `kind`.
pub fn parse_trace(text: &str, kind: PathKind) -> Result<PathTrace> {
    Ok(match serde_json::from_str(text).map_err(parse_err)? {
        TraceFile::Full(t) => t,
        TraceFile::Bare(v) => PathTrace::new(v, kind),
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT, vertices and edges in id order.
pub fn to_dot(g: &FiniteGraph, labels: Option<&BTreeMap<Vertex, String>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels.and_then(|l| l.get(&v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", dot_escape(label)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
