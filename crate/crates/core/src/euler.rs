//! Euler paths: pre-Eulerian evidence on stream prefixes, an online Euler
//! path builder for bounded streams, the least-code extension procedure, and
//! two gadgets that encode ranges of injections in Euler paths.
//!
//! # Online construction
//!
//! [`OnlineEuler`] commits to exactly the path that Fleury's rule produces on
//! the final graph: start at the least odd vertex (or the least vertex with
//! an edge when there are none), and from the current vertex take the least
//! unused edge that is not a bridge of the unused edges, or the last edge if
//! only one is left. Each of these choices is made only once it is certain
//! for every extension of the prefix:
//!
//! * The start is certain once a settled odd vertex `v` exists with every id
//!   below `v` settled (they are then all even), or at the end of the stream.
//! * The current vertex must be settled, so its unused edges are final.
//! * An edge that is not a bridge of the known unused edges is not a bridge of
//!   the final ones either, since edges are only ever added.
//! * An edge whose removal cuts off a component made of settled vertices is a
//!   bridge for good: that component can never grow.
//!
//! If some edge at the current vertex is still undecided, the builder waits.
//! The output is therefore a function of the final graph, independent of how
//! the stream is chunked, and on a finite stream whose vertices all settle it
//! is a complete Euler path whenever one exists.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BoundFn, Event, FiniteGraph, GraphStream, InjectionStream, NatSet, Settler, Vertex};
use crate::oracles::{has_euler_path, has_spanning_euler_path, odd_vertices, PathKind, PathTrace};

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PreEulerVerdict {
    /// `clause` numbers the violated condition: 1 connected, 2 at most one
    /// odd vertex, 3 an infinite-degree vertex when no vertex is odd, 4 one
    /// infinite component after removing finitely many edges.
    Violated {
        clause: u8,
        evidence: Vec<Vertex>,
        reason: String,
    },
    ConsistentSoFar,
}

impl PreEulerVerdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, PreEulerVerdict::Violated { .. })
    }
}

/// Evidence against pre-Eulerian-ness that no extension can remove.
///
/// A truncated stream legitimately has two odd vertices (the cut end of an
/// infinite path), so only three or more settled odd vertices count. Two
/// components with edges, one of them made of settled vertices, can never
/// merge. Clause 3 cannot be refuted by a finite prefix; clause 4 evidence is
/// a closed component, which is already reported under clause 1.
pub fn check_evidence(g: &FiniteGraph, settled: &BTreeSet<Vertex>) -> PreEulerVerdict {
    let odd: Vec<Vertex> = settled.iter().copied().filter(|&v| g.degree(v) % 2 == 1).collect();
    if odd.len() > 2 {
        return PreEulerVerdict::Violated {
            clause: 2,
            reason: format!("{} settled vertices of odd degree", odd.len()),
            evidence: odd,
        };
    }
    let parts: Vec<BTreeSet<Vertex>> =
        g.components().into_iter().filter(|c| c.iter().any(|&v| g.degree(v) > 0)).collect();
    if parts.len() > 1 {
        if let Some(closed) = parts.iter().find(|c| c.iter().all(|v| settled.contains(v))) {
            return PreEulerVerdict::Violated {
                clause: 1,
                reason: format!("closed component {:?} beside {} other component(s)", closed, parts.len() - 1),
                evidence: closed.iter().copied().collect(),
            };
        }
    }
    PreEulerVerdict::ConsistentSoFar
}

/// [`check_evidence`] on the first `t` events.
pub fn pre_eulerian_check(stream: &GraphStream, t: usize) -> Result<PreEulerVerdict> {
    Ok(check_evidence(&stream.revealed(t)?, &stream.settled_vertices(t)?))
}

// ---------------------------------------------------------------------------
// online construction

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerStep {
    pub from: Vertex,
    pub to: Vertex,
    pub stage: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerRun {
    pub start: Option<Vertex>,
    pub start_stage: Option<usize>,
    pub steps: Vec<EulerStep>,
}

impl EulerRun {
    pub fn trace(&self) -> PathTrace {
        let vertices = self.start.into_iter().chain(self.steps.iter().map(|s| s.to)).collect();
        PathTrace::new(vertices, PathKind::Euler)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.steps.iter().map(|s| norm(s.from, s.to)).collect()
    }

    /// What had been emitted after `t` events.
    pub fn at_stage(&self, t: usize) -> EulerRun {
        if self.start_stage.is_none_or(|s| s > t) {
            return EulerRun::default();
        }
        EulerRun {
            start: self.start,
            start_stage: self.start_stage,
            steps: self.steps.iter().copied().filter(|s| s.stage <= t).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OnlineEuler {
    settler: Settler,
    used: BTreeSet<(Vertex, Vertex)>,
    run: EulerRun,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    NonBridge,
    Bridge,
    Unknown,
}

impl OnlineEuler {
    pub fn new(bound: BoundFn) -> Self {
        Self { settler: Settler::new(bound), used: BTreeSet::new(), run: EulerRun::default() }
    }

    pub fn run_so_far(&self) -> &EulerRun {
        &self.run
    }

    fn unused(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.settler.neighbors(v).filter(move |&w| !self.used.contains(&norm(v, w)))
    }

    fn decide_start(&self) -> Option<Vertex> {
        let settled = self.settler.settled();
        if self.settler.is_finished() {
            let mut all: Vec<Vertex> = self.settler.vertices().collect();
            all.sort_unstable();
            return all
                .iter()
                .copied()
                .find(|&v| self.settler.degree(v) % 2 == 1)
                .or_else(|| all.iter().copied().find(|&v| self.settler.degree(v) > 0));
        }
        let v = settled.iter().copied().find(|&v| self.settler.degree(v) % 2 == 1)?;
        (0..v).all(|w| settled.contains(&w)).then_some(v)
    }

    /// Whether removing `(x, y)` from the unused edges disconnects them, as
    /// far as the prefix can tell.
    fn status(&self, x: Vertex, y: Vertex) -> Status {
        let e = norm(x, y);
        let mut seen = BTreeSet::from([y]);
        let mut stack = vec![y];
        while let Some(v) = stack.pop() {
            for w in self.unused(v) {
                if norm(v, w) == e {
                    continue;
                }
                if w == x {
                    return Status::NonBridge;
                }
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.iter().all(|&v| self.settler.is_settled(v)) {
            return Status::Bridge;
        }
        // the side of x may be the closed one
        let mut seen_x = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for w in self.unused(v) {
                if norm(v, w) != e && seen_x.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen_x.iter().all(|&v| self.settler.is_settled(v)) {
            Status::Bridge
        } else {
            Status::Unknown
        }
    }

    fn next_edge(&self, x: Vertex) -> Result<Option<Vertex>> {
        if !self.settler.is_settled(x) {
            return Ok(None);
        }
        let options: Vec<Vertex> = self.unused(x).collect();
        if options.len() <= 1 {
            return Ok(options.first().copied());
        }
        for &y in &options {
            match self.status(x, y) {
                Status::NonBridge => return Ok(Some(y)),
                Status::Bridge => continue,
                Status::Unknown => return Ok(None),
            }
        }
        Err(Error::PromiseViolation(format!("every unused edge at vertex {x} is a bridge")))
    }

    fn check_promise(&self) -> Result<()> {
        match check_evidence(&self.settler.known(), self.settler.settled()) {
            PreEulerVerdict::Violated { reason, .. } => Err(Error::PromiseViolation(reason)),
            PreEulerVerdict::ConsistentSoFar => Ok(()),
        }
    }

    fn advance(&mut self) -> Result<Vec<EulerStep>> {
        self.check_promise()?;
        let stage = self.settler.stage();
        if self.run.start.is_none() {
            let Some(s) = self.decide_start() else {
                return Ok(Vec::new());
            };
            self.run.start = Some(s);
            self.run.start_stage = Some(stage);
        }
        let mut out = Vec::new();
        let mut x = self.run.steps.last().map_or(self.run.start.unwrap(), |s| s.to);
        while let Some(y) = self.next_edge(x)? {
            self.used.insert(norm(x, y));
            let step = EulerStep { from: x, to: y, stage };
            self.run.steps.push(step);
            out.push(step);
            x = y;
        }
        if self.settler.is_finished() {
            let known = self.settler.known();
            if self.used.len() != known.edge_count() {
                return Err(Error::PromiseViolation(format!(
                    "stream ended with {} of {} edges on the path",
                    self.used.len(),
                    known.edge_count()
                )));
            }
        }
        Ok(out)
    }

    pub fn feed(&mut self, events: &[Event]) -> Result<Vec<EulerStep>> {
        for &ev in events {
            self.settler.push(ev)?;
        }
        self.advance()
    }

    pub fn finish(&mut self) -> Result<Vec<EulerStep>> {
        self.settler.finish();
        self.advance()
    }
}

/// Runs [`OnlineEuler`] over `stream` in chunks of `chunk` events.
pub fn bean_euler_chunked(stream: &GraphStream, chunk: usize) -> Result<EulerRun> {
    let mut b = OnlineEuler::new(stream.bound().cloned().ok_or(Error::Unbounded)?);
    for part in stream.events().chunks(chunk.max(1)) {
        b.feed(part)?;
    }
    b.finish()?;
    Ok(b.run)
}

pub fn bean_euler(stream: &GraphStream) -> Result<EulerRun> {
    bean_euler_chunked(stream, 1)
}

/// Streams a finite graph with ids compacted to `0..n` (so every vertex
/// settles), runs [`bean_euler_chunked`], and maps the result back.
pub fn bean_euler_graph(g: &FiniteGraph, chunk: usize) -> Result<EulerRun> {
    let (compact, ids) = g.compact();
    let run = bean_euler_chunked(&GraphStream::bounded_from_graph(&compact), chunk)?;
    let back = |v: Vertex| ids[v as usize];
    Ok(EulerRun {
        start: run.start.map(back),
        start_stage: run.start_stage,
        steps: run.steps.iter().map(|s| EulerStep { from: back(s.from), to: back(s.to), stage: s.stage }).collect(),
    })
}

// ---------------------------------------------------------------------------
// least-code extension

/// Whether the edges left over admit an Euler path starting at `x`.
fn continuable(rest: &BTreeMap<Vertex, BTreeSet<Vertex>>, x: Vertex) -> bool {
    let live: Vec<Vertex> = rest.iter().filter(|(_, n)| !n.is_empty()).map(|(&v, _)| v).collect();
    if live.is_empty() {
        return true;
    }
    let mut seen = BTreeSet::from([live[0]]);
    let mut stack = vec![live[0]];
    while let Some(v) = stack.pop() {
        for &w in &rest[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != live.len() {
        return false;
    }
    let odd: Vec<Vertex> = live.iter().copied().filter(|v| rest[v].len() % 2 == 1).collect();
    match odd.len() {
        0 => seen.contains(&x),
        2 => odd.contains(&x),
        _ => false,
    }
}

/// Trails of exactly `len` edges from `x`, in lexicographic order, that use
/// `target`; returns the first after which the rest stays continuable.
fn extend(
    rest: &mut BTreeMap<Vertex, BTreeSet<Vertex>>,
    x: Vertex,
    len: usize,
    target: (Vertex, Vertex),
    hit: bool,
    trail: &mut Vec<Vertex>,
) -> bool {
    if len == 0 {
        return hit && continuable(rest, x);
    }
    let options: Vec<Vertex> = rest[&x].iter().copied().collect();
    for y in options {
        rest.get_mut(&x).unwrap().remove(&y);
        rest.get_mut(&y).unwrap().remove(&x);
        trail.push(y);
        if extend(rest, y, len - 1, target, hit || norm(x, y) == target, trail) {
            return true;
        }
        trail.pop();
        rest.get_mut(&x).unwrap().insert(y);
        rest.get_mut(&y).unwrap().insert(x);
    }
    false
}

/// Builds an Euler path from `start` by covering the edges in order: for each
/// edge not yet on the path, append the shortest (then lexicographically
/// least) trail that covers it and leaves a remainder still traversable from
/// the new end.
pub fn leastcode_euler(g: &FiniteGraph, start: Vertex) -> Result<PathTrace> {
    if !g.contains(start) {
        return Err(Error::UnknownVertex(start));
    }
    let odd = odd_vertices(g);
    let ok =
        has_euler_path(g) && (g.edge_count() == 0 || (g.degree(start) > 0 && (odd.is_empty() || odd.contains(&start))));
    if !ok {
        return Err(Error::NoEulerPathFrom(start));
    }
    let mut rest: BTreeMap<Vertex, BTreeSet<Vertex>> = g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
    let mut path = vec![start];
    for e in g.edges() {
        if !rest[&e.0].contains(&e.1) {
            continue;
        }
        let x = *path.last().unwrap();
        let total: usize = rest.values().map(|n| n.len()).sum::<usize>() / 2;
        let mut trail = Vec::new();
        let found = (1..=total).any(|len| extend(&mut rest, x, len, e, false, &mut trail));
        if !found {
            return Err(Error::NoEulerPathFrom(start));
        }
        path.extend(trail);
    }
    Ok(PathTrace::new(path, PathKind::Euler))
}

// ---------------------------------------------------------------------------
// range gadget

/// Vertices `a_n = 3n` (`n < N`), `b_i = 3i + 1` and `c_i = 3i + 2` (`i < t`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerParams {
    pub f: Vec<u64>,
    pub steps: usize,
    pub window: u64,
}

#[derive(Debug, Clone)]
pub struct EulerGadget {
    params: EulerParams,
    graph: FiniteGraph,
}

pub fn a_id(n: u64) -> Vertex {
    3 * n
}

pub fn b_id(i: usize) -> Vertex {
    3 * i as Vertex + 1
}

pub fn c_id(i: usize) -> Vertex {
    3 * i as Vertex + 2
}

/// Spine `a_0 .. a_{N-1}`; each revealed `f(i) = n` hangs the triangle
/// `a_n, b_i, c_i` off the spine. Values must be below `N - 1`.
pub fn build_euler_gadget(f: &InjectionStream, steps: usize, window: u64) -> Result<EulerGadget> {
    let values = f.prefix(steps).to_vec();
    let limit = window.saturating_sub(1);
    if let Some(&v) = values.iter().find(|&&v| v >= limit) {
        return Err(Error::OutsideWindow { member: v, window: limit });
    }
    let mut vertices: Vec<Vertex> = (0..window).map(a_id).collect();
    let mut edges: Vec<(Vertex, Vertex)> = (0..limit).map(|n| (a_id(n), a_id(n + 1))).collect();
    for (i, &n) in values.iter().enumerate() {
        vertices.extend([b_id(i), c_id(i)]);
        edges.extend([(b_id(i), c_id(i)), (a_id(n), b_id(i)), (c_id(i), a_id(n))]);
    }
    let graph = FiniteGraph::new(vertices, edges)?;
    let steps = values.len();
    Ok(EulerGadget { params: EulerParams { f: values, steps, window }, graph })
}

impl EulerGadget {
    pub fn from_params(p: &EulerParams) -> Result<Self> {
        build_euler_gadget(&InjectionStream::new(p.f.clone())?, p.steps, p.window)
    }

    pub fn params(&self) -> &EulerParams {
        &self.params
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn window(&self) -> u64 {
        self.params.window
    }

    pub fn labels(&self) -> BTreeMap<Vertex, String> {
        let mut out: BTreeMap<Vertex, String> = (0..self.window()).map(|n| (a_id(n), format!("a{n}"))).collect();
        for i in 0..self.params.steps {
            out.insert(b_id(i), format!("b{i}"));
            out.insert(c_id(i), format!("c{i}"));
        }
        out
    }
}

/// `{n < N - 1 : the first a_n on the trace is not followed by a_{n+1}}`.
pub fn decode_euler(gadget: &EulerGadget, trace: &PathTrace) -> Result<NatSet> {
    let as_euler = PathTrace::new(trace.vertices.clone(), PathKind::Euler);
    as_euler.validate(gadget.graph())?;
    if gadget.graph().edge_count() > 0 && trace.first() != Some(a_id(0)) {
        return Err(Error::InvalidTrace { kind: "euler".into(), reason: "does not start at a0".into() });
    }
    let limit = gadget.window().saturating_sub(1);
    let mut members = BTreeSet::new();
    for n in 0..limit {
        let first = trace.vertices.iter().position(|&v| v == a_id(n));
        let next = first.and_then(|i| trace.vertices.get(i + 1)).copied();
        if next != Some(a_id(n + 1)) {
            members.insert(n);
        }
    }
    NatSet::new(members, limit)
}

// ---------------------------------------------------------------------------
// sequence gadget

/// Path `v_0 .. v_n` (ids `0..=n`) minus the edges `(v_m, v_{m+1})` with a
/// revealed `f(m) = i`.
pub fn build_euler_seq_gadget(f: &InjectionStream, i: u64, n: u64) -> FiniteGraph {
    let edges = (0..n).filter(|&m| f.get(m as usize) != Some(i)).map(|m| (m, m + 1));
    FiniteGraph::new(0..=n, edges).expect("path edges are valid")
}

/// Gadgets for `i = 0 .. window`, each on `n + 1` vertices.
pub fn euler_seq_gadgets(f: &InjectionStream, window: u64, n: u64) -> Vec<FiniteGraph> {
    (0..window).map(|i| build_euler_seq_gadget(f, i, n)).collect()
}

/// `Z = {i : G_i has an Euler path}` over the given gadgets.
///
/// An isolated `v_0` must count against membership, so Euler paths here have
/// to reach every vertex.
pub fn decide_euler_seq(gadgets: &[FiniteGraph]) -> NatSet {
    let members = gadgets.iter().enumerate().filter(|(_, g)| has_spanning_euler_path(g)).map(|(i, _)| i as u64);
    NatSet::new(members, gadgets.len() as u64).expect("members lie in the window")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{enumerate_euler_paths, euler_path};

    fn inj(v: &[u64]) -> InjectionStream {
        InjectionStream::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pre_eulerian_cases() {
        let k4 = GraphStream::bounded_from_graph(&FiniteGraph::complete(4));
        assert!(matches!(pre_eulerian_check(&k4, k4.len()).unwrap(), PreEulerVerdict::Violated { clause: 2, .. }));

        let g = FiniteGraph::path(6);
        let h = (0..6).map(|v| (v, (v + 1).min(5))).collect();
        let ray = GraphStream::from_graph(&g, Some(h)).unwrap();
        for t in 0..ray.len() {
            assert_eq!(pre_eulerian_check(&ray, t).unwrap(), PreEulerVerdict::ConsistentSoFar);
        }

        let two = FiniteGraph::new(0..6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let s = GraphStream::bounded_from_graph(&two);
        assert!(matches!(pre_eulerian_check(&s, s.len()).unwrap(), PreEulerVerdict::Violated { clause: 1, .. }));
    }

    #[test]
    fn online_euler_on_path_and_gadget() {
        let s = GraphStream::bounded_from_graph(&FiniteGraph::path(3));
        assert_eq!(bean_euler(&s).unwrap().edges(), vec![(0, 1), (1, 2)]);

        let gadget = build_euler_gadget(&inj(&[1]), 1, 4).unwrap();
        for chunk in [1, 3, 100] {
            let run = bean_euler_graph(gadget.graph(), chunk).unwrap();
            let trace = run.trace();
            trace.validate(gadget.graph()).unwrap();
            assert_eq!(trace.vertices, vec![0, 3, 1, 2, 3, 6, 9]);
        }
    }

    #[test]
    fn online_euler_commits_before_the_end() {
        let g = FiniteGraph::path(8);
        let h = (0..8).map(|v| (v, (v + 1).min(7))).collect();
        let s = GraphStream::from_graph(&g, Some(h)).unwrap();
        let run = bean_euler(&s).unwrap();
        assert_eq!(run.start, Some(0));
        assert!(run.steps[0].stage < s.len());
        for t in 0..=s.len() {
            let early = run.at_stage(t);
            assert_eq!(early.steps, run.steps[..early.steps.len()].to_vec());
        }
    }

    #[test]
    fn online_euler_rejects_broken_promise() {
        // a star with three leaves plus a pendant: four odd vertices
        let g = FiniteGraph::new(0..4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(bean_euler(&GraphStream::bounded_from_graph(&g)), Err(Error::PromiseViolation(_))));
    }

    #[test]
    fn leastcode_small_cases() {
        assert_eq!(leastcode_euler(&FiniteGraph::path(3), 0).unwrap().vertices, vec![0, 1, 2]);
        assert_eq!(leastcode_euler(&FiniteGraph::cycle(3), 0).unwrap().vertices, vec![0, 1, 2, 0]);
        assert!(leastcode_euler(&FiniteGraph::path(3), 1).is_err());
        let gadget = build_euler_gadget(&inj(&[1, 3]), 2, 5).unwrap();
        let t = leastcode_euler(gadget.graph(), 0).unwrap();
        t.validate(gadget.graph()).unwrap();
        assert_eq!(leastcode_euler(gadget.graph(), 0).unwrap(), t);
    }

    #[test]
    fn gadget_shapes() {
        let g = build_euler_gadget(&inj(&[1]), 1, 4).unwrap();
        assert_eq!(g.graph().vertex_count(), 6);
        assert_eq!(g.graph().edge_set(), [(0, 3), (3, 6), (6, 9), (1, 2), (1, 3), (2, 3)].into());
        let bare = build_euler_gadget(&inj(&[1]), 0, 4).unwrap();
        assert_eq!(bare.graph().vertex_count(), 4);
        let two = build_euler_gadget(&inj(&[1, 3]), 2, 5).unwrap();
        assert_eq!(two.graph().degree(a_id(1)), 4);
        assert_eq!(two.graph().degree(a_id(3)), 4);
        assert!(build_euler_gadget(&inj(&[3]), 1, 4).is_err());
    }

    #[test]
    fn decode_cases() {
        let g = build_euler_gadget(&inj(&[1]), 1, 4).unwrap();
        let trace = PathTrace::new(vec![0, 3, 1, 2, 3, 6, 9], PathKind::Euler);
        assert_eq!(decode_euler(&g, &trace).unwrap().members(), &BTreeSet::from([1]));

        let bare = build_euler_gadget(&inj(&[]), 0, 4).unwrap();
        let spine = PathTrace::new(vec![0, 3, 6, 9], PathKind::Euler);
        assert!(decode_euler(&bare, &spine).unwrap().is_empty());
        let backwards = PathTrace::new(vec![9, 6, 3, 0], PathKind::Euler);
        assert!(decode_euler(&bare, &backwards).is_err());

        let two = build_euler_gadget(&inj(&[1, 3]), 2, 5).unwrap();
        let paths = enumerate_euler_paths(two.graph(), 0, None);
        assert_eq!(paths.len(), 4);
        for p in &paths {
            assert_eq!(decode_euler(&two, p).unwrap().members(), &BTreeSet::from([1, 3]));
        }
        assert_eq!(euler_path(two.graph()).map(|p| decode_euler(&two, &p).is_ok()), Some(true));
    }

    #[test]
    fn sequence_gadget() {
        let g = build_euler_seq_gadget(&inj(&[2]), 2, 4);
        assert_eq!(g.edge_set(), [(1, 2), (2, 3), (3, 4)].into());
        assert_eq!(build_euler_seq_gadget(&inj(&[2]), 1, 4), FiniteGraph::path(5));
        assert_eq!(build_euler_seq_gadget(&inj(&[0]), 0, 3).degree(0), 0);

        let z = decide_euler_seq(&euler_seq_gadgets(&inj(&[2]), 4, 4));
        assert_eq!(z.members(), &BTreeSet::from([0, 1, 3]));
        assert_eq!(z.complement().members(), &BTreeSet::from([2]));
        assert_eq!(decide_euler_seq(&euler_seq_gadgets(&inj(&[]), 5, 5)).len(), 5);
        let z = decide_euler_seq(&euler_seq_gadgets(&inj(&[0, 1]), 3, 3));
        assert_eq!(z.complement().members(), &BTreeSet::from([0, 1]));
    }
}
