//! Core value types: finite graphs, monotone graph streams with bounds,
//! enumerated injections, trees of sequences and windowed sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u64;

/// Cantor pairing of two naturals.
pub fn pair(a: u64, b: u64) -> u64 {
    (a + b) * (a + b + 1) / 2 + b
}

/// Inverse of [`pair`].
pub fn unpair(z: u64) -> (u64, u64) {
    let w = (((8 * z + 1) as f64).sqrt() as u64 - 1) / 2;
    // float rounding can be off by one for large z
    let mut w = w;
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    let b = z - w * (w + 1) / 2;
    (w - b, b)
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on natural-number vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl FiniteGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj.contains_key(&u) || !adj.contains_key(&v) {
                return Err(Error::DanglingEdge(u, v));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Self { adj })
    }

    /// Graph whose vertex set is exactly the endpoints of `edges`.
    pub fn from_edges<E>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        Self::new(vertices, edges)
    }

    pub fn path(n: u64) -> Self {
        Self::new(0..n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: u64) -> Self {
        assert!(n >= 3);
        Self::new(0..n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: u64) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(0..n, edges).unwrap()
    }

    pub fn edgeless(n: u64) -> Self {
        Self::new(0..n, []).unwrap()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|ns| ns.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Subgraph induced by `keep` (vertices absent from the graph are ignored).
    pub fn induced<'a, I>(&self, keep: I) -> FiniteGraph
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let keep: BTreeSet<Vertex> = keep.into_iter().copied().filter(|v| self.contains(*v)).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                let ns = self.adj[&v].iter().copied().filter(|w| keep.contains(w)).collect();
                (v, ns)
            })
            .collect();
        FiniteGraph { adj }
    }

    /// `self - other`: the same vertices with the edges of `other` removed.
    pub fn delete_subgraph(&self, other: &FiniteGraph) -> Result<FiniteGraph> {
        let mut out = self.clone();
        for (u, v) in other.edges() {
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            out.adj.get_mut(&u).unwrap().remove(&v);
            out.adj.get_mut(&v).unwrap().remove(&u);
        }
        Ok(out)
    }

    /// Same vertices, with the listed edges removed. Edges not present are ignored.
    pub fn without_edges<'a, I>(&self, edges: I) -> FiniteGraph
    where
        I: IntoIterator<Item = &'a (Vertex, Vertex)>,
    {
        let mut out = self.clone();
        for &(u, v) in edges {
            if let Some(ns) = out.adj.get_mut(&u) {
                ns.remove(&v);
            }
            if let Some(ns) = out.adj.get_mut(&v) {
                ns.remove(&u);
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &root in self.adj.keys() {
            if seen.contains(&root) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([root]);
            seen.insert(root);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[&v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabel onto `0..n` preserving id order. Returns the new graph and the
    /// table mapping new ids back to old ids.
    pub fn compact(&self) -> (FiniteGraph, Vec<Vertex>) {
        let order: Vec<Vertex> = self.adj.keys().copied().collect();
        let index: BTreeMap<Vertex, Vertex> = order.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
        let g = FiniteGraph::new(0..order.len() as Vertex, self.edges().map(|(u, v)| (index[&u], index[&v]))).unwrap();
        (g, order)
    }

    /// Apply an injective relabeling.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> FiniteGraph {
        FiniteGraph::new(self.vertices().map(&map), self.edges().map(|(u, v)| (map(u), map(v))))
            .expect("relabeling of a valid graph")
    }

    /// The bound `h(v) = max(v, max neighbor of v)`, the least bound under
    /// which this finite graph is its own closure.
    pub fn tight_bound(&self) -> BoundFn {
        BoundFn::from_iter(self.adj.iter().map(|(&v, ns)| (v, ns.iter().next_back().copied().unwrap_or(v).max(v))))
    }
}

/// Bounding function `h`: every neighbor `y` of `x` satisfies `y <= h(x)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundFn(BTreeMap<Vertex, u64>);

impl BoundFn {
    pub fn new(map: BTreeMap<Vertex, u64>) -> Self {
        Self(map)
    }

    pub fn get(&self, v: Vertex) -> Option<u64> {
        self.0.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        self.0.iter().map(|(&v, &h)| (v, h))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Check both directions of every edge: `h(x) >= y` and `h(y) >= x`.
    pub fn check_graph(&self, g: &FiniteGraph) -> Result<()> {
        for (x, y) in g.edges() {
            self.check_edge(x, y)?;
        }
        Ok(())
    }

    pub fn check_edge(&self, x: Vertex, y: Vertex) -> Result<()> {
        for (a, b) in [(x, y), (y, x)] {
            let ha = self.get(a).ok_or(Error::BoundMissing(a))?;
            if ha < b {
                return Err(Error::BoundViolation { x: a, y: b, hx: ha });
            }
        }
        Ok(())
    }
}

impl FromIterator<(Vertex, u64)> for BoundFn {
    fn from_iter<T: IntoIterator<Item = (Vertex, u64)>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

/// A finite event list standing for a prefix of an infinite graph.
///
/// When a bound is present, every edge event must touch the most recently
/// revealed vertex: the edges of a vertex arrive in the burst right after it.
/// Together with the symmetric bound check this makes "settled" sound: a
/// settled vertex never gains a neighbor later in the stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStream {
    events: Vec<Event>,
    bound: Option<BoundFn>,
    reveal_index: BTreeMap<Vertex, usize>,
    // t from which the vertex's edge burst is known to be complete
    ready_at: BTreeMap<Vertex, usize>,
}

impl GraphStream {
    pub fn new(events: Vec<Event>, bound: Option<BoundFn>) -> Result<Self> {
        let mut reveal_index = BTreeMap::new();
        let mut edges = BTreeSet::new();
        let mut latest: Option<Vertex> = None;
        for (index, ev) in events.iter().enumerate() {
            match *ev {
                Event::Vertex(v) => {
                    if reveal_index.insert(v, index).is_some() {
                        return Err(Error::BadEvent { index, reason: format!("vertex {v} revealed twice") });
                    }
                    if let Some(h) = &bound {
                        h.get(v).ok_or(Error::BoundMissing(v))?;
                    }
                    latest = Some(v);
                }
                Event::Edge(u, v) => {
                    if u == v {
                        return Err(Error::SelfLoop(u));
                    }
                    for w in [u, v] {
                        if !reveal_index.contains_key(&w) {
                            return Err(Error::BadEvent {
                                index,
                                reason: format!("edge ({u}, {v}) before vertex {w} is revealed"),
                            });
                        }
                    }
                    if !edges.insert(norm(u, v)) {
                        return Err(Error::BadEvent { index, reason: format!("edge ({u}, {v}) revealed twice") });
                    }
                    if let Some(h) = &bound {
                        h.check_edge(u, v)?;
                        if latest != Some(u) && latest != Some(v) {
                            return Err(Error::BadEvent {
                                index,
                                reason: format!(
                                    "late edge ({u}, {v}): edges must follow the reveal of their later endpoint"
                                ),
                            });
                        }
                    }
                }
            }
        }
        let len = events.len();
        let vertex_events: Vec<usize> =
            events.iter().enumerate().filter(|(_, e)| matches!(e, Event::Vertex(_))).map(|(i, _)| i).collect();
        let ready_at = reveal_index
            .iter()
            .map(|(&v, &r)| {
                let next = vertex_events.iter().find(|&&i| i > r).map_or(len, |&i| i + 1);
                (v, next)
            })
            .collect();
        Ok(Self { events, bound, reveal_index, ready_at })
    }

    /// Vertices in id order, each followed by its edges to smaller ids.
    pub fn from_graph(g: &FiniteGraph, bound: Option<BoundFn>) -> Result<Self> {
        let mut events = Vec::new();
        for v in g.vertices() {
            events.push(Event::Vertex(v));
            for u in g.neighbors(v).filter(|&u| u < v) {
                events.push(Event::Edge(v, u));
            }
        }
        Self::new(events, bound)
    }

    /// [`Self::from_graph`] with the graph's tight bound.
    pub fn bounded_from_graph(g: &FiniteGraph) -> Self {
        Self::from_graph(g, Some(g.tight_bound())).expect("tight bound is valid")
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn bound(&self) -> Option<&BoundFn> {
        self.bound.as_ref()
    }

    /// Event index at which `v` was revealed.
    pub fn reveal_index(&self, v: Vertex) -> Option<usize> {
        self.reveal_index.get(&v).copied()
    }

    pub fn revealed(&self, t: usize) -> Result<FiniteGraph> {
        if t > self.len() {
            return Err(Error::StreamIndex { t, len: self.len() });
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for ev in &self.events[..t] {
            match *ev {
                Event::Vertex(v) => vertices.push(v),
                Event::Edge(u, v) => edges.push((u, v)),
            }
        }
        FiniteGraph::new(vertices, edges)
    }

    pub fn full(&self) -> FiniteGraph {
        self.revealed(self.len()).unwrap()
    }

    /// Least `t` at which `v` is settled, if it ever is within this stream.
    ///
    /// `v` is settled at `t` when every id `w <= h(v)` (and `v` itself) is
    /// revealed with its edge burst complete. A burst is complete once a later
    /// vertex event has been processed, or at the end of the stream.
    pub fn settle_stage(&self, v: Vertex) -> Result<Option<usize>> {
        let h = self.bound.as_ref().ok_or(Error::Unbounded)?;
        let Some(&own) = self.ready_at.get(&v) else {
            return Ok(None);
        };
        let hv = h.get(v).ok_or(Error::BoundMissing(v))?;
        let mut stage = own;
        for w in 0..=hv {
            match self.ready_at.get(&w) {
                Some(&r) => stage = stage.max(r),
                None => return Ok(None),
            }
        }
        Ok(Some(stage))
    }

    /// All finite settle stages, keyed by vertex.
    pub fn settle_stages(&self) -> Result<BTreeMap<Vertex, usize>> {
        let mut out = BTreeMap::new();
        for &v in self.reveal_index.keys() {
            if let Some(s) = self.settle_stage(v)? {
                out.insert(v, s);
            }
        }
        Ok(out)
    }

    pub fn settled_vertices(&self, t: usize) -> Result<BTreeSet<Vertex>> {
        if self.bound.is_none() {
            return Err(Error::Unbounded);
        }
        if t > self.len() {
            return Err(Error::StreamIndex { t, len: self.len() });
        }
        Ok(self.settle_stages()?.into_iter().filter(|&(_, s)| s <= t).map(|(v, _)| v).collect())
    }
}

/// Tracks which revealed vertices are settled while events arrive one at a
/// time, agreeing with [`GraphStream::settle_stage`].
#[derive(Debug, Clone)]
pub struct Settler {
    bound: BoundFn,
    t: usize,
    latest: Option<Vertex>,
    ready: BTreeSet<Vertex>,
    // every id below this is ready
    ready_prefix: Vertex,
    pending: BTreeSet<Vertex>,
    settled: BTreeSet<Vertex>,
    graph: BTreeMap<Vertex, BTreeSet<Vertex>>,
    finished: bool,
}

impl Settler {
    pub fn new(bound: BoundFn) -> Self {
        Self {
            bound,
            t: 0,
            latest: None,
            ready: BTreeSet::new(),
            ready_prefix: 0,
            pending: BTreeSet::new(),
            settled: BTreeSet::new(),
            graph: BTreeMap::new(),
            finished: false,
        }
    }

    /// Returns vertices newly settled by this event, by id.
    pub fn push(&mut self, ev: Event) -> Result<Vec<Vertex>> {
        if self.finished {
            return Err(Error::InvalidParameter("event after end of stream".into()));
        }
        self.t += 1;
        match ev {
            Event::Vertex(v) => {
                self.bound.get(v).ok_or(Error::BoundMissing(v))?;
                if let Some(u) = self.latest.replace(v) {
                    self.mark_ready(u);
                }
                self.graph.entry(v).or_default();
                self.pending.insert(v);
                Ok(self.collect())
            }
            Event::Edge(u, v) => {
                self.bound.check_edge(u, v)?;
                self.graph.entry(u).or_default().insert(v);
                self.graph.entry(v).or_default().insert(u);
                Ok(Vec::new())
            }
        }
    }

    /// Ends the stream, closing the last burst.
    pub fn finish(&mut self) -> Vec<Vertex> {
        if self.finished {
            return Vec::new();
        }
        self.finished = true;
        if let Some(u) = self.latest {
            self.mark_ready(u);
        }
        self.collect()
    }

    /// Number of events processed.
    pub fn stage(&self) -> usize {
        self.t
    }

    pub fn is_finished(&self) -> bool {
        self.finished
    }

    pub fn is_settled(&self, v: Vertex) -> bool {
        self.settled.contains(&v)
    }

    pub fn settled(&self) -> &BTreeSet<Vertex> {
        &self.settled
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.graph.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.keys().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.get(&v).map_or(0, |n| n.len())
    }

    /// Everything revealed so far.
    pub fn known(&self) -> FiniteGraph {
        self.induced(&self.graph.keys().copied().collect())
    }

    fn mark_ready(&mut self, v: Vertex) {
        self.ready.insert(v);
        while self.ready.contains(&self.ready_prefix) {
            self.ready_prefix += 1;
        }
    }

    fn collect(&mut self) -> Vec<Vertex> {
        let now: Vec<Vertex> = self
            .pending
            .iter()
            .copied()
            .filter(|v| self.ready.contains(v) && self.bound.get(*v).is_some_and(|h| h < self.ready_prefix))
            .collect();
        for v in &now {
            self.pending.remove(v);
            self.settled.insert(*v);
        }
        now
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.get(&v).into_iter().flatten().copied()
    }

    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> FiniteGraph {
        let edges = keep
            .iter()
            .flat_map(|&v| self.neighbors(v).filter(move |&w| v < w && keep.contains(&w)).map(move |w| (v, w)));
        FiniteGraph::new(keep.iter().copied(), edges).expect("induced subgraph of a valid stream")
    }
}

/// An enumerated injection: `values[i]` is `f(i)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectionStream {
    values: Vec<u64>,
}

impl InjectionStream {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
        for (i, &v) in values.iter().enumerate() {
            if let Some(&first) = seen.get(&v) {
                return Err(Error::NotInjective { value: v, first, second: i });
            }
            seen.insert(v, i);
        }
        Ok(Self { values })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.values.get(i).copied()
    }

    /// The first `steps` values.
    pub fn prefix(&self, steps: usize) -> &[u64] {
        &self.values[..steps.min(self.values.len())]
    }

    /// Argument at which `value` is hit among the first `steps` values.
    pub fn preimage(&self, value: u64, steps: usize) -> Option<usize> {
        self.prefix(steps).iter().position(|&v| v == value)
    }

    pub fn range(&self, steps: usize) -> BTreeSet<u64> {
        self.prefix(steps).iter().copied().collect()
    }
}

/// Two injections with disjoint ranges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointInjections {
    f: InjectionStream,
    g: InjectionStream,
}

impl DisjointInjections {
    pub fn new(f: InjectionStream, g: InjectionStream) -> Result<Self> {
        for (f_arg, &value) in f.values().iter().enumerate() {
            if let Some(g_arg) = g.values().iter().position(|&w| w == value) {
                return Err(Error::RangesOverlap { value, f_arg, g_arg });
            }
        }
        Ok(Self { f, g })
    }

    pub fn from_values(f: Vec<u64>, g: Vec<u64>) -> Result<Self> {
        Self::new(InjectionStream::new(f)?, InjectionStream::new(g)?)
    }

    pub fn f(&self) -> &InjectionStream {
        &self.f
    }

    pub fn g(&self) -> &InjectionStream {
        &self.g
    }
}

/// A prefix-closed set of finite sequences, truncated at a depth beyond which
/// membership is unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    nodes: BTreeSet<Vec<u64>>,
    truncation_depth: usize,
}

impl Tree {
    pub fn new<I>(nodes: I, truncation_depth: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let nodes: BTreeSet<Vec<u64>> = nodes.into_iter().collect();
        for node in &nodes {
            if node.len() > truncation_depth {
                return Err(Error::BeyondTruncation { depth: node.len(), truncation: truncation_depth });
            }
            if let Some((_, parent)) = node.split_last() {
                if !nodes.contains(parent) {
                    return Err(Error::NotPrefixClosed(node.clone()));
                }
            }
        }
        Ok(Self { nodes, truncation_depth })
    }

    /// Prefix closure of the given branches.
    pub fn from_branches<I>(branches: I, truncation_depth: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let mut nodes = BTreeSet::new();
        for b in branches {
            for len in 0..=b.len() {
                nodes.insert(b[..len].to_vec());
            }
        }
        Self::new(nodes, truncation_depth)
    }

    /// Every 0-1 sequence of length at most `depth`.
    pub fn full_binary(depth: usize) -> Self {
        let mut nodes = BTreeSet::new();
        for len in 0..=depth {
            for bits in 0u64..(1 << len) {
                nodes.insert((0..len).map(|i| (bits >> (len - 1 - i)) & 1).collect());
            }
        }
        Self { nodes, truncation_depth: depth }
    }

    pub fn nodes(&self) -> &BTreeSet<Vec<u64>> {
        &self.nodes
    }

    pub fn truncation_depth(&self) -> usize {
        self.truncation_depth
    }

    pub fn contains(&self, seq: &[u64]) -> bool {
        self.nodes.contains(seq)
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Children of `seq`, in order.
    pub fn children<'a>(&'a self, seq: &'a [u64]) -> impl Iterator<Item = &'a Vec<u64>> + 'a {
        self.nodes.iter().filter(move |n| n.len() == seq.len() + 1 && n.starts_with(seq))
    }

    pub fn nodes_at_depth(&self, depth: usize) -> Result<Vec<Vec<u64>>> {
        if depth > self.truncation_depth {
            return Err(Error::BeyondTruncation { depth, truncation: self.truncation_depth });
        }
        Ok(self.nodes.iter().filter(|n| n.len() == depth).cloned().collect())
    }
}

/// A finite set of naturals asserted only below `window`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatSet {
    members: BTreeSet<u64>,
    window: u64,
}

impl NatSet {
    pub fn new<I: IntoIterator<Item = u64>>(members: I, window: u64) -> Result<Self> {
        let members: BTreeSet<u64> = members.into_iter().collect();
        if let Some(&member) = members.iter().find(|&&m| m >= window) {
            return Err(Error::OutsideWindow { member, window });
        }
        Ok(Self { members, window })
    }

    pub fn members(&self) -> &BTreeSet<u64> {
        &self.members
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    pub fn contains(&self, n: u64) -> bool {
        self.members.contains(&n)
    }

    /// Complement relative to the window.
    pub fn complement(&self) -> NatSet {
        NatSet { members: (0..self.window).filter(|n| !self.members.contains(n)).collect(), window: self.window }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
