//! Exhaustive reference algorithms on finite graphs and trees.
//!
//! Every search here is deterministic: vertices are visited in id order and
//! colors or neighbors are tried in ascending order, so results can be frozen
//! into tests.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, Tree, Vertex};

/// Assignment of colors `0..palette_size` to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: BTreeMap<Vertex, usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn new(colors: BTreeMap<Vertex, usize>, palette_size: usize) -> Self {
        Self { colors, palette_size }
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    pub fn color(&self, v: Vertex) -> Result<usize> {
        self.get(v).ok_or(Error::Uncolored(v))
    }

    pub fn max_color(&self) -> Option<usize> {
        self.colors.values().copied().max()
    }

    /// Total on `g`, inside the palette, and no monochromatic edge.
    pub fn check(&self, g: &FiniteGraph) -> Result<()> {
        for v in g.vertices() {
            let c = self.color(v)?;
            if c >= self.palette_size {
                return Err(Error::ColorOutOfPalette { vertex: v, color: c, palette: self.palette_size });
            }
        }
        match g.edges().find(|&(u, v)| self.colors[&u] == self.colors[&v]) {
            Some((u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &FiniteGraph) -> bool {
        self.check(g).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Vertex,
    Euler,
    Hamilton,
}

impl std::fmt::Display for PathKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PathKind::Vertex => "vertex",
            PathKind::Euler => "euler",
            PathKind::Hamilton => "hamilton",
        })
    }
}

/// A finite walk given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathTrace {
    pub vertices: Vec<Vertex>,
    pub kind: PathKind,
}

impl PathTrace {
    pub fn new(vertices: Vec<Vertex>, kind: PathKind) -> Self {
        Self { vertices, kind }
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// Consecutive vertex pairs as normalized edges.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidTrace { kind: self.kind.to_string(), reason: reason.into() }
    }

    pub fn validate(&self, g: &FiniteGraph) -> Result<()> {
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(self.invalid(format!("({}, {}) is not an edge", w[0], w[1])));
            }
        }
        if let Some(&v) = self.vertices.iter().find(|v| !g.contains(**v)) {
            return Err(self.invalid(format!("vertex {v} is not in the graph")));
        }
        match self.kind {
            PathKind::Vertex => Ok(()),
            PathKind::Euler => {
                let mut used = BTreeSet::new();
                for e in self.steps() {
                    if !used.insert(e) {
                        return Err(self.invalid(format!("edge {e:?} used twice")));
                    }
                }
                if used.len() != g.edge_count() {
                    return Err(self.invalid(format!("covers {} of {} edges", used.len(), g.edge_count())));
                }
                Ok(())
            }
            PathKind::Hamilton => {
                let distinct: BTreeSet<_> = self.vertices.iter().collect();
                if distinct.len() != self.vertices.len() {
                    return Err(self.invalid("a vertex repeats"));
                }
                if distinct.len() != g.vertex_count() {
                    return Err(self.invalid(format!("visits {} of {} vertices", distinct.len(), g.vertex_count())));
                }
                Ok(())
            }
        }
    }

    /// Orientation with the smaller endpoint first.
    pub fn canonical(mut self) -> Self {
        if let (Some(a), Some(b)) = (self.first(), self.last()) {
            if b < a {
                self.vertices.reverse();
            }
        }
        self
    }
}

// ---------------------------------------------------------------------------
// coloring search

struct ColorSearch {
    order: Vec<Vertex>,
    // neighbors of position i with larger positions
    later: Vec<Vec<usize>>,
    earlier: Vec<Vec<usize>>,
    k: usize,
    // forbid[i][c]: number of colored neighbors of i holding color c
    forbid: Vec<Vec<u32>>,
    assign: Vec<usize>,
}

impl ColorSearch {
    fn new(g: &FiniteGraph, k: usize) -> Self {
        let order: Vec<Vertex> = g.vertices().collect();
        let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = order.len();
        let mut later = vec![Vec::new(); n];
        let mut earlier = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            let (a, b) = (pos[&u], pos[&v]);
            let (a, b) = (a.min(b), a.max(b));
            later[a].push(b);
            earlier[b].push(a);
        }
        Self { order, later, earlier, k, forbid: vec![vec![0; k]; n], assign: vec![usize::MAX; n] }
    }

    fn place(&mut self, i: usize, c: usize) -> bool {
        self.assign[i] = c;
        let mut ok = true;
        for idx in 0..self.later[i].len() {
            let j = self.later[i][idx];
            self.forbid[j][c] += 1;
            if self.forbid[j][c] == 1 && self.forbid[j].iter().all(|&x| x > 0) {
                ok = false;
            }
        }
        ok
    }

    fn unplace(&mut self, i: usize) {
        let c = self.assign[i];
        for idx in 0..self.later[i].len() {
            let j = self.later[i][idx];
            self.forbid[j][c] -= 1;
        }
        self.assign[i] = usize::MAX;
    }

    fn coloring(&self) -> Coloring {
        Coloring::new(self.order.iter().zip(&self.assign).map(|(&v, &c)| (v, c)).collect(), self.k)
    }

    /// Depth-first enumeration; `visit` returns false to stop.
    fn run<F, O>(&mut self, i: usize, order_colors: &mut O, visit: &mut F) -> bool
    where
        F: FnMut(&Coloring) -> bool,
        O: FnMut(usize) -> Vec<usize>,
    {
        if i == self.order.len() {
            return visit(&self.coloring());
        }
        for c in order_colors(self.k) {
            if self.forbid[i][c] > 0 {
                continue;
            }
            debug_assert!(self.earlier[i].iter().all(|&j| self.assign[j] != c));
            let feasible = self.place(i, c);
            let go_on = !feasible || self.run(i + 1, order_colors, visit);
            self.unplace(i);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// A proper `k`-coloring if one exists: the lexicographically least one.
pub fn is_k_colorable(g: &FiniteGraph, k: usize) -> Option<Coloring> {
    if k == 0 {
        return g.is_empty().then(|| Coloring::new(BTreeMap::new(), 0));
    }
    let mut found = None;
    let mut search = ColorSearch::new(g, k);
    search.run(0, &mut |k| (0..k).collect(), &mut |c| {
        found = Some(c.clone());
        false
    });
    found
}

/// All proper `k`-colorings in lexicographic order (vertices by id), up to `cap`.
pub fn enumerate_colorings(g: &FiniteGraph, k: usize, cap: Option<usize>) -> Vec<Coloring> {
    let mut out = Vec::new();
    if cap == Some(0) || k == 0 {
        return out;
    }
    let mut search = ColorSearch::new(g, k);
    search.run(0, &mut |k| (0..k).collect(), &mut |c| {
        out.push(c.clone());
        cap.is_none_or(|cap| out.len() < cap)
    });
    out
}

/// A proper `k`-coloring found by backtracking with a random color order at
/// every vertex. Not uniform over colorings.
pub fn random_coloring<R: Rng>(g: &FiniteGraph, k: usize, rng: &mut R) -> Option<Coloring> {
    if k == 0 {
        return g.is_empty().then(|| Coloring::new(BTreeMap::new(), 0));
    }
    let mut found = None;
    let mut search = ColorSearch::new(g, k);
    search.run(
        0,
        &mut |k| {
            let mut cs: Vec<usize> = (0..k).collect();
            cs.shuffle(rng);
            cs
        },
        &mut |c| {
            found = Some(c.clone());
            false
        },
    );
    found
}

// ---------------------------------------------------------------------------
// Euler paths

pub fn odd_vertices(g: &FiniteGraph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) % 2 == 1).collect()
}

/// Euler's condition, ignoring isolated vertices.
pub fn has_euler_path(g: &FiniteGraph) -> bool {
    let nonisolated: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    if nonisolated.is_empty() {
        return true;
    }
    let core = g.induced(&nonisolated);
    core.is_connected() && odd_vertices(g).len() <= 2
}

/// Euler path that also keeps every vertex: the whole graph is connected.
pub fn has_spanning_euler_path(g: &FiniteGraph) -> bool {
    g.is_connected() && has_euler_path(g)
}

/// The start an oracle Euler path uses: least odd vertex, otherwise the least
/// vertex with an edge.
pub fn euler_start(g: &FiniteGraph) -> Option<Vertex> {
    odd_vertices(g).first().copied().or_else(|| g.vertices().find(|&v| g.degree(v) > 0))
}

/// An Euler path if one exists (isolated vertices ignored), by Hierholzer's
/// algorithm from [`euler_start`], always taking the least unused edge.
pub fn euler_path(g: &FiniteGraph) -> Option<PathTrace> {
    if !has_euler_path(g) {
        return None;
    }
    let Some(start) = euler_start(g) else {
        let single = g.vertices().next().into_iter().collect();
        return Some(PathTrace::new(single, PathKind::Euler));
    };
    euler_path_from(g, start).ok()
}

/// Hierholzer from a given start. Fails if no Euler path starts there.
pub fn euler_path_from(g: &FiniteGraph, start: Vertex) -> Result<PathTrace> {
    if !has_euler_path(g) || !g.contains(start) {
        return Err(Error::NoEulerPathFrom(start));
    }
    let odd = odd_vertices(g);
    if g.edge_count() > 0 && (g.degree(start) == 0 || (!odd.is_empty() && !odd.contains(&start))) {
        return Err(Error::NoEulerPathFrom(start));
    }
    let mut remaining: BTreeMap<Vertex, BTreeSet<Vertex>> =
        g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(&v) = stack.last() {
        let next = remaining[&v].iter().next().copied();
        match next {
            Some(w) => {
                remaining.get_mut(&v).unwrap().remove(&w);
                remaining.get_mut(&w).unwrap().remove(&v);
                stack.push(w);
            }
            None => out.push(stack.pop().unwrap()),
        }
    }
    out.reverse();
    Ok(PathTrace::new(out, PathKind::Euler))
}

/// Every Euler path starting at `start`, lexicographic by vertex sequence.
pub fn enumerate_euler_paths(g: &FiniteGraph, start: Vertex, cap: Option<usize>) -> Vec<PathTrace> {
    fn go(
        v: Vertex,
        remaining: &mut BTreeMap<Vertex, BTreeSet<Vertex>>,
        left: usize,
        path: &mut Vec<Vertex>,
        out: &mut Vec<PathTrace>,
        cap: Option<usize>,
    ) -> bool {
        if left == 0 {
            out.push(PathTrace::new(path.clone(), PathKind::Euler));
            return cap.is_none_or(|c| out.len() < c);
        }
        let options: Vec<Vertex> = remaining[&v].iter().copied().collect();
        for w in options {
            remaining.get_mut(&v).unwrap().remove(&w);
            remaining.get_mut(&w).unwrap().remove(&v);
            path.push(w);
            let go_on = go(w, remaining, left - 1, path, out, cap);
            path.pop();
            remaining.get_mut(&v).unwrap().insert(w);
            remaining.get_mut(&w).unwrap().insert(v);
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if !g.contains(start) || cap == Some(0) {
        return out;
    }
    let mut remaining = g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
    go(start, &mut remaining, g.edge_count(), &mut vec![start], &mut out, cap);
    out
}

// ---------------------------------------------------------------------------
// Hamilton paths

struct HamSearch<'a> {
    adj: &'a [Vec<usize>],
    visited: Vec<bool>,
    path: Vec<usize>,
}

impl HamSearch<'_> {
    /// Unvisited vertices stay reachable from the path end, and at most one of
    /// them is a forced dead end.
    fn viable(&self) -> bool {
        let n = self.adj.len();
        let end = *self.path.last().unwrap();
        let left = n - self.path.len();
        if left == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![end];
        seen[end] = true;
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != left {
            return false;
        }
        let dead_ends = (0..n)
            .filter(|&v| !self.visited[v])
            .filter(|&v| {
                let free = self.adj[v].iter().filter(|&&w| !self.visited[w] || w == end).count();
                free <= 1
            })
            .count();
        dead_ends <= 1
    }

    fn go(&mut self, out: &mut Vec<Vec<usize>>, cap: Option<usize>) -> bool {
        let n = self.adj.len();
        if self.path.len() == n {
            if self.path.first() < self.path.last() || n == 1 {
                out.push(self.path.clone());
                return cap.is_none_or(|c| out.len() < c);
            }
            return true;
        }
        if !self.viable() {
            return true;
        }
        let end = *self.path.last().unwrap();
        for idx in 0..self.adj[end].len() {
            let w = self.adj[end][idx];
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            let go_on = self.go(out, cap);
            self.path.pop();
            self.visited[w] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// All Hamilton paths up to reversal, each oriented with its smaller endpoint
/// first, in lexicographic order, truncated at `cap`. The empty graph has none.
pub fn hamilton_paths(g: &FiniteGraph, cap: Option<usize>) -> Vec<PathTrace> {
    let ids: Vec<Vertex> = g.vertices().collect();
    let n = ids.len();
    if n == 0 || cap == Some(0) {
        return Vec::new();
    }
    let pos: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = ids.iter().map(|&v| g.neighbors(v).map(|w| pos[&w]).collect()).collect();
    let mut out = Vec::new();
    for s in 0..n {
        let mut search = HamSearch { adj: &adj, visited: vec![false; n], path: vec![s] };
        search.visited[s] = true;
        if !search.go(&mut out, cap) {
            break;
        }
    }
    out.into_iter().map(|p| PathTrace::new(p.into_iter().map(|i| ids[i]).collect(), PathKind::Hamilton)).collect()
}

// ---------------------------------------------------------------------------
// trees

/// Whether `t` has a member of length `depth`.
pub fn tree_has_deep_path(t: &Tree, depth: usize) -> Result<bool> {
    Ok(count_deep_paths(t, depth, Some(1))? > 0)
}

/// Number of members of length `depth` (distinct branches reaching that depth), capped.
pub fn count_deep_paths(t: &Tree, depth: usize, cap: Option<usize>) -> Result<usize> {
    let n = t.nodes_at_depth(depth)?.len();
    Ok(cap.map_or(n, |c| n.min(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tree;

    fn block_k2() -> FiniteGraph {
        // v_ij -> 2i + j; edges for i != r and j != s
        FiniteGraph::new(0..4, [(0, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_colorability() {
        let tri = FiniteGraph::complete(3);
        assert!(is_k_colorable(&tri, 2).is_none());
        let c = is_k_colorable(&tri, 3).unwrap();
        assert!(c.is_proper(&tri));
    }

    #[test]
    fn block_k3_is_three_colorable_by_column() {
        let mut edges = Vec::new();
        for a in 0..9u64 {
            for b in a + 1..9 {
                if a / 3 != b / 3 && a % 3 != b % 3 {
                    edges.push((a, b));
                }
            }
        }
        let block = FiniteGraph::new(0..9, edges).unwrap();
        assert!(is_k_colorable(&block, 3).is_some());
        let by_column = Coloring::new((0..9).map(|v| (v, (v % 3) as usize)).collect(), 3);
        assert!(by_column.is_proper(&block));
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(enumerate_colorings(&FiniteGraph::edgeless(1), 2, None).len(), 2);
        let edge = FiniteGraph::path(2);
        let all = enumerate_colorings(&edge, 2, None);
        let seqs: Vec<Vec<usize>> = all.iter().map(|c| c.colors.values().copied().collect()).collect();
        assert_eq!(seqs, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(enumerate_colorings(&block_k2(), 2, None).len(), 4);
        assert_eq!(enumerate_colorings(&block_k2(), 2, Some(3)).len(), 3);
    }

    fn brute_force_count(g: &FiniteGraph, k: usize) -> usize {
        let vs: Vec<Vertex> = g.vertices().collect();
        let n = vs.len() as u32;
        (0..k.pow(n))
            .filter(|&code| {
                let color = |v: Vertex| {
                    let i = vs.iter().position(|&x| x == v).unwrap() as u32;
                    (code / k.pow(i)) % k
                };
                g.edges().all(|(a, b)| color(a) != color(b))
            })
            .count()
    }

    #[test]
    fn chromatic_polynomial_cross_check() {
        for n in 2..7u64 {
            for k in 1..4usize {
                // path: k (k-1)^(n-1); cycle: (k-1)^n + (-1)^n (k-1)
                let p = k * (k - 1).pow(n as u32 - 1);
                assert_eq!(enumerate_colorings(&FiniteGraph::path(n), k, None).len(), p);
                if n >= 3 {
                    let km1 = k as i64 - 1;
                    let c = km1.pow(n as u32) + if n % 2 == 0 { km1 } else { -km1 };
                    assert_eq!(enumerate_colorings(&FiniteGraph::cycle(n), k, None).len() as i64, c);
                }
            }
        }
        let petal = FiniteGraph::new(0..5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(enumerate_colorings(&petal, 3, None).len(), brute_force_count(&petal, 3));
    }

    #[test]
    fn euler_cases() {
        assert!(euler_path(&FiniteGraph::complete(4)).is_none());
        assert_eq!(euler_path(&FiniteGraph::path(3)).unwrap().vertices, vec![0, 1, 2]);
        let tri = euler_path(&FiniteGraph::cycle(3)).unwrap();
        assert_eq!(tri.vertices, vec![0, 1, 2, 0]);
        // isolated vertices are ignored
        let g = FiniteGraph::new(0..4, [(1, 2), (2, 3)]).unwrap();
        assert!(euler_path(&g).is_some());
        assert!(!has_spanning_euler_path(&g));
    }

    #[test]
    fn euler_enumeration_on_loop_gadget() {
        // a0=0, b0=1, c0=2, a1=3, a2=4, a3=5
        let g = FiniteGraph::new(0..6, [(0, 3), (3, 4), (4, 5), (1, 2), (3, 1), (2, 3)]).unwrap();
        let paths = enumerate_euler_paths(&g, 0, None);
        let seqs: Vec<Vec<u64>> = paths.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(seqs, vec![vec![0, 3, 1, 2, 3, 4, 5], vec![0, 3, 2, 1, 3, 4, 5]]);
        let h = euler_path(&g).unwrap();
        h.validate(&g).unwrap();
        assert_eq!(h.vertices, seqs[0]);
    }

    #[test]
    fn hamilton_cases() {
        let p = hamilton_paths(&FiniteGraph::path(4), None);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].vertices, vec![0, 1, 2, 3]);
        let k3 = hamilton_paths(&FiniteGraph::complete(3), None);
        assert_eq!(k3.len(), 3);
        for t in &k3 {
            t.validate(&FiniteGraph::complete(3)).unwrap();
        }
        // 3!/2 orderings of K4 would be 12
        assert_eq!(hamilton_paths(&FiniteGraph::complete(4), None).len(), 12);
        assert!(hamilton_paths(&FiniteGraph::edgeless(2), None).is_empty());
        assert_eq!(hamilton_paths(&FiniteGraph::edgeless(1), None).len(), 1);
    }

    #[test]
    fn hamilton_range_truncation_has_unique_path() {
        // f(0) = 3, n = 3, six vertices
        let g = FiniteGraph::new(0..6, [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let paths = hamilton_paths(&g, None);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices, vec![1, 0, 2, 3, 4, 5]);
    }

    #[test]
    fn trace_validation() {
        let g = FiniteGraph::path(3);
        assert!(PathTrace::new(vec![0, 2], PathKind::Vertex).validate(&g).is_err());
        assert!(PathTrace::new(vec![0, 1], PathKind::Euler).validate(&g).is_err());
        assert!(PathTrace::new(vec![0, 1, 0], PathKind::Euler).validate(&g).is_err());
        assert!(PathTrace::new(vec![0, 1, 2], PathKind::Hamilton).validate(&g).is_ok());
    }

    #[test]
    fn deep_paths() {
        let root = Tree::new([vec![]], 1).unwrap();
        assert!(!tree_has_deep_path(&root, 1).unwrap());
        let branch = Tree::from_branches([vec![2, 0, 1]], 3).unwrap();
        assert!(tree_has_deep_path(&branch, 3).unwrap());
        assert_eq!(count_deep_paths(&branch, 3, None).unwrap(), 1);
        let full = Tree::full_binary(3);
        assert_eq!(count_deep_paths(&full, 3, None).unwrap(), 8);
        assert_eq!(count_deep_paths(&full, 3, Some(5)).unwrap(), 5);
        assert!(tree_has_deep_path(&full, 4).is_err());
    }
}
