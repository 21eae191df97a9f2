//! Gadgets whose colorings encode a set separating the ranges of two
//! disjoint injections `f` and `g`.
//!
//! The flip gadget is a complete `k`-partite spine with one `k`-clique per
//! value; `f`-values attach with a twist that still allows aligned colors,
//! `g`-values with a twist that forbids them. Any `(2k-1)`-coloring then
//! carries a separating set, recovered by [`find_j`] and [`decode_with_j`].
//!
//! The block gadget is bounded. A block is a `k × k` grid in which every
//! proper `(2k-2)`-coloring has a colorful row or a colorful column, never
//! both, and a link between two blocks swaps row and column. Values are tied
//! into a spine of blocks through paths of odd (`f`) or even (`g`) link count.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair, BoundFn, DisjointInjections, FiniteGraph, NatSet, Vertex};
use crate::oracles::Coloring;

// ---------------------------------------------------------------------------
// flip gadget

pub const DEFAULT_GUARD: usize = 2;

/// Parameters that determine a flip gadget completely.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipParams {
    pub k: usize,
    pub f: Vec<u64>,
    pub g: Vec<u64>,
    pub steps: usize,
    pub spine: usize,
    /// Values `0..window` get a clique.
    pub window: u64,
}

#[derive(Debug, Clone)]
pub struct FlipGadget {
    params: FlipParams,
    fg: DisjointInjections,
    graph: FiniteGraph,
}

/// Id of spine vertex `b^p_m`.
pub fn spine_id(m: usize, p: usize) -> Vertex {
    pair(0, pair(m as u64, p as u64))
}

/// Id of value vertex `n^p`.
pub fn value_id(n: u64, p: usize) -> Vertex {
    pair(1, pair(n, p as u64))
}

/// Builds the flip gadget on the first `steps` values of `f` and `g`.
///
/// `window` defaults to one past the largest revealed value.
pub fn build_flip_gadget(
    k: usize,
    fg: &DisjointInjections,
    steps: usize,
    spine: usize,
    window: Option<u64>,
) -> Result<FlipGadget> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("flip gadget needs k >= 2, got {k}")));
    }
    if spine < steps {
        return Err(Error::InvalidParameter(format!("spine length {spine} is shorter than {steps} steps")));
    }
    let f = fg.f().prefix(steps).to_vec();
    let g = fg.g().prefix(steps).to_vec();
    let top = f.iter().chain(&g).map(|&v| v + 1).max().unwrap_or(0);
    let window = window.unwrap_or(top);
    if let Some(&v) = f.iter().chain(&g).find(|&&v| v >= window) {
        return Err(Error::OutsideWindow { member: v, window });
    }

    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for m in 0..spine {
        for p in 0..k {
            vertices.push(spine_id(m, p));
            for m2 in 0..spine {
                for p2 in p + 1..k {
                    edges.push((spine_id(m, p), spine_id(m2, p2)));
                }
            }
        }
    }
    for n in 0..window {
        for p in 0..k {
            vertices.push(value_id(n, p));
            for p2 in p + 1..k {
                edges.push((value_id(n, p), value_id(n, p2)));
            }
        }
    }
    for (i, &n) in f.iter().enumerate() {
        for m in i..spine {
            for p in 0..k {
                for p2 in (0..k).filter(|&p2| p2 != p) {
                    edges.push((spine_id(m, p), value_id(n, p2)));
                }
            }
        }
    }
    for (i, &n) in g.iter().enumerate() {
        for m in i..spine {
            for p in 0..k {
                for p2 in (0..k).filter(|&p2| p != (p2 + 1) % k) {
                    edges.push((spine_id(m, p), value_id(n, p2)));
                }
            }
        }
    }
    let graph = FiniteGraph::new(vertices, edges)?;
    let fg = DisjointInjections::from_values(f.clone(), g.clone())?;
    Ok(FlipGadget { params: FlipParams { k, f, g, steps, spine, window }, fg, graph })
}

impl FlipGadget {
    pub fn from_params(p: &FlipParams) -> Result<Self> {
        let fg = DisjointInjections::from_values(p.f.clone(), p.g.clone())?;
        build_flip_gadget(p.k, &fg, p.steps, p.spine, Some(p.window))
    }

    pub fn params(&self) -> &FlipParams {
        &self.params
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn spine_len(&self) -> usize {
        self.params.spine
    }

    pub fn window(&self) -> u64 {
        self.params.window
    }

    /// Revealed `f` values with their arguments.
    pub fn f_values(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.fg.f().values().iter().copied().enumerate()
    }

    pub fn g_values(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.fg.g().values().iter().copied().enumerate()
    }

    pub fn labels(&self) -> BTreeMap<Vertex, String> {
        let k = self.k();
        let mut out = BTreeMap::new();
        for m in 0..self.spine_len() {
            for p in 0..k {
                out.insert(spine_id(m, p), format!("b{p}_{m}"));
            }
        }
        for n in 0..self.window() {
            for p in 0..k {
                out.insert(value_id(n, p), format!("{n}^{p}"));
            }
        }
        out
    }

    /// `∃p χ(y^p) = χ(b^p_j)`.
    fn aligned(&self, chi: &Coloring, y: u64, j: usize) -> Result<bool> {
        for p in 0..self.k() {
            if chi.color(value_id(y, p))? == chi.color(spine_id(j, p))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn check_coloring(&self, chi: &Coloring) -> Result<()> {
        let limit = 2 * self.k() - 1;
        if chi.palette_size > limit {
            return Err(Error::InvalidParameter(format!("palette of {} exceeds 2k - 1 = {limit}", chi.palette_size)));
        }
        chi.check(&self.graph)
    }
}

/// `{y < window : ∃p χ(y^p) = χ(b^p_0)}`.
pub fn decode_simple(gadget: &FlipGadget, chi: &Coloring) -> Result<NatSet> {
    decode_with_j(gadget, chi, 0)
}

/// Least `j <= min(j_max, spine - 1)` at which every revealed `f`-value with
/// argument `>= j` is aligned with column `j` and no such `g`-value is.
pub fn find_j(gadget: &FlipGadget, chi: &Coloring, j_max: usize) -> Result<usize> {
    gadget.check_coloring(chi)?;
    let last = j_max.min(gadget.spine_len().saturating_sub(1));
    let mut witnesses = Vec::new();
    for j in 0..=last {
        let mut bad = Vec::new();
        for (i, y) in gadget.f_values().filter(|&(i, _)| i >= j) {
            if !gadget.aligned(chi, y, j)? {
                bad.push(format!("f({i})={y}"));
            }
        }
        for (i, y) in gadget.g_values().filter(|&(i, _)| i >= j) {
            if gadget.aligned(chi, y, j)? {
                bad.push(format!("g({i})={y}"));
            }
        }
        if bad.is_empty() {
            return Ok(j);
        }
        witnesses.push(format!("j={j}: {}", bad.join(", ")));
    }
    Err(Error::NoSeparatingIndex { j_max: last, witnesses: witnesses.join("; ") })
}

/// `{f(n) : n < j} ∪ {y : y ∉ g[0..j], ∃p χ(y^p) = χ(b^p_j)}`, inside the window.
pub fn decode_with_j(gadget: &FlipGadget, chi: &Coloring, j: usize) -> Result<NatSet> {
    gadget.check_coloring(chi)?;
    if j >= gadget.spine_len() {
        return Err(Error::InvalidParameter(format!("j = {j} is past the spine of {}", gadget.spine_len())));
    }
    let early_f: BTreeSet<u64> = gadget.f_values().filter(|&(i, _)| i < j).map(|(_, y)| y).collect();
    let early_g: BTreeSet<u64> = gadget.g_values().filter(|&(i, _)| i < j).map(|(_, y)| y).collect();
    let mut members = early_f;
    for y in 0..gadget.window() {
        if !early_g.contains(&y) && gadget.aligned(chi, y, j)? {
            members.insert(y);
        }
    }
    NatSet::new(members, gadget.window())
}

// ---------------------------------------------------------------------------
// blocks

/// A `k × k` grid `v_ij` with ids `offset + i*k + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub k: usize,
    pub offset: Vertex,
}

pub fn build_block(k: usize, offset: Vertex) -> Block {
    Block { k, offset }
}

impl Block {
    pub fn id(&self, i: usize, j: usize) -> Vertex {
        self.offset + (i * self.k + j) as Vertex
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.k * self.k).map(|x| self.offset + x as Vertex)
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let k = self.k;
        (0..k).flat_map(move |i| (0..k).map(move |j| (i, j)))
    }

    /// `(v_ij, v_rs)` for `i != r` and `j != s`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (i, j) in self.cells() {
            for (r, s) in self.cells() {
                if i != r && j != s && self.id(i, j) < self.id(r, s) {
                    out.push((self.id(i, j), self.id(r, s)));
                }
            }
        }
        out
    }

    pub fn graph(&self) -> FiniteGraph {
        FiniteGraph::new(self.vertices(), self.edges()).expect("block edges are internal")
    }

    fn distinct<I: Iterator<Item = Vertex>>(&self, chi: &Coloring, cells: I) -> bool {
        let mut seen = BTreeSet::new();
        cells.map(|v| chi.get(v)).all(|c| c.is_some_and(|c| seen.insert(c)))
    }

    pub fn colorful_row(&self, chi: &Coloring) -> Option<usize> {
        (0..self.k).find(|&i| self.distinct(chi, (0..self.k).map(|j| self.id(i, j))))
    }

    pub fn colorful_column(&self, chi: &Coloring) -> Option<usize> {
        (0..self.k).find(|&j| self.distinct(chi, (0..self.k).map(|i| self.id(i, j))))
    }
}

/// Transpose link: `(v_ij, v'_rs)` for `i != s` and `j != r`.
pub fn link_blocks(a: &Block, b: &Block) -> Result<Vec<(Vertex, Vertex)>> {
    if a.k != b.k {
        return Err(Error::InvalidParameter(format!("cannot link blocks of size {} and {}", a.k, b.k)));
    }
    let mut out = Vec::new();
    for (i, j) in a.cells() {
        for (r, s) in b.cells() {
            if i != s && j != r {
                out.push((a.id(i, j), b.id(r, s)));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BlockName {
    Spine(usize),
    Row(u64, usize),
}

impl std::fmt::Display for BlockName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockName::Spine(j) => write!(f, "B_{j}"),
            BlockName::Row(i, j) => write!(f, "B_{i},{j}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Row,
    Column,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockParams {
    pub k: usize,
    pub f: Vec<u64>,
    pub g: Vec<u64>,
    pub steps: usize,
    /// Row chains `0..rows`; defaults to one past the largest revealed value.
    pub rows: u64,
}

/// Blocks are numbered breadth-first along links starting from `B_0`, then
/// the unattached row chains from `B_i0`; a block with number `b` owns ids
/// `b*k² .. (b+1)*k²`.
#[derive(Debug, Clone)]
pub struct BlockGadget {
    params: BlockParams,
    columns: usize,
    blocks: BTreeMap<BlockName, Block>,
    links: Vec<(BlockName, BlockName)>,
    graph: FiniteGraph,
    bound: BoundFn,
}

pub fn build_block_gadget(k: usize, fg: &DisjointInjections, steps: usize, rows: Option<u64>) -> Result<BlockGadget> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("block gadget needs k >= 3, got {k}")));
    }
    let f = fg.f().prefix(steps).to_vec();
    let g = fg.g().prefix(steps).to_vec();
    let top = f.iter().chain(&g).map(|&v| v + 1).max().unwrap_or(0);
    let rows = rows.unwrap_or(top);
    if let Some(&v) = f.iter().chain(&g).find(|&&v| v >= rows) {
        return Err(Error::OutsideWindow { member: v, window: rows });
    }
    let columns = 2 * steps + 2;

    let mut links = Vec::new();
    for j in 0..columns - 1 {
        links.push((BlockName::Spine(j), BlockName::Spine(j + 1)));
    }
    for i in 0..rows {
        for j in 0..columns - 1 {
            links.push((BlockName::Row(i, j), BlockName::Row(i, j + 1)));
        }
    }
    for (m, &n) in f.iter().enumerate() {
        links.push((BlockName::Row(n, 2 * m), BlockName::Spine(2 * m)));
    }
    for (m, &n) in g.iter().enumerate() {
        links.push((BlockName::Row(n, 2 * m), BlockName::Spine(2 * m + 1)));
    }

    let mut adjacent: BTreeMap<BlockName, BTreeSet<BlockName>> = BTreeMap::new();
    for &(a, b) in &links {
        adjacent.entry(a).or_default().insert(b);
        adjacent.entry(b).or_default().insert(a);
    }
    let roots = std::iter::once(BlockName::Spine(0)).chain((0..rows).map(|i| BlockName::Row(i, 0)));
    let mut order: Vec<BlockName> = Vec::new();
    let mut seen = BTreeSet::new();
    for root in roots {
        if !seen.insert(root) {
            continue;
        }
        let mut queue = VecDeque::from([root]);
        while let Some(b) = queue.pop_front() {
            order.push(b);
            for &c in adjacent.get(&b).into_iter().flatten() {
                if seen.insert(c) {
                    queue.push_back(c);
                }
            }
        }
    }
    let size = (k * k) as Vertex;
    let blocks: BTreeMap<BlockName, Block> =
        order.iter().enumerate().map(|(b, &name)| (name, build_block(k, b as Vertex * size))).collect();

    let mut edges = Vec::new();
    for block in blocks.values() {
        edges.extend(block.edges());
    }
    for (a, b) in &links {
        edges.extend(link_blocks(&blocks[a], &blocks[b])?);
    }
    let graph = FiniteGraph::new(blocks.values().flat_map(|b| b.vertices().collect::<Vec<_>>()), edges)?;

    // Candidate partners: chain neighbors, the spine pair a row block at an
    // even column may link to, and the revealed partner of a spine block.
    let mut bound = BTreeMap::new();
    for (&name, block) in &blocks {
        let mut reach = vec![name];
        match name {
            BlockName::Spine(j) => {
                reach.extend(j.checked_sub(1).map(BlockName::Spine));
                reach.push(BlockName::Spine(j + 1));
                reach.extend(adjacent[&name].iter().filter(|b| matches!(b, BlockName::Row(..))));
            }
            BlockName::Row(i, j) => {
                reach.extend(j.checked_sub(1).map(|j| BlockName::Row(i, j)));
                reach.push(BlockName::Row(i, j + 1));
                if j % 2 == 0 {
                    reach.extend([BlockName::Spine(j), BlockName::Spine(j + 1)]);
                }
            }
        }
        let h = reach.iter().filter_map(|b| blocks.get(b)).map(|b| b.offset + size - 1).max().unwrap();
        for v in block.vertices() {
            bound.insert(v, h);
        }
    }
    let bound = BoundFn::new(bound);
    bound.check_graph(&graph)?;
    Ok(BlockGadget { params: BlockParams { k, f, g, steps, rows }, columns, blocks, links, graph, bound })
}

impl BlockGadget {
    pub fn from_params(p: &BlockParams) -> Result<Self> {
        let fg = DisjointInjections::from_values(p.f.clone(), p.g.clone())?;
        build_block_gadget(p.k, &fg, p.steps, Some(p.rows))
    }

    pub fn params(&self) -> &BlockParams {
        &self.params
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn bound(&self) -> &BoundFn {
        &self.bound
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> u64 {
        self.params.rows
    }

    pub fn block(&self, name: BlockName) -> Option<&Block> {
        self.blocks.get(&name)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (BlockName, &Block)> {
        self.blocks.iter().map(|(n, b)| (*n, b))
    }

    pub fn links(&self) -> &[(BlockName, BlockName)] {
        &self.links
    }

    pub fn labels(&self) -> BTreeMap<Vertex, String> {
        let mut out = BTreeMap::new();
        for (name, block) in &self.blocks {
            for i in 0..block.k {
                for j in 0..block.k {
                    out.insert(block.id(i, j), format!("{name}:v{i}{j}"));
                }
            }
        }
        out
    }

    fn orientation(&self, name: BlockName, chi: &Coloring) -> Result<Orientation> {
        let block = &self.blocks[&name];
        match (block.colorful_row(chi), block.colorful_column(chi)) {
            (Some(_), None) => Ok(Orientation::Row),
            (None, Some(_)) => Ok(Orientation::Column),
            (None, None) => {
                Err(Error::BlockShape { block: name.to_string(), reason: "no colorful row or column".into() })
            }
            (Some(_), Some(_)) => Err(Error::BlockShape {
                block: name.to_string(),
                reason: "both a colorful row and a colorful column".into(),
            }),
        }
    }
}

/// `S = {n : B_n0 has a colorful column}` together with the orientation of
/// `B_0`. With a row at `B_0`, `S` contains the revealed range of `f`; with a
/// column, the roles of `f` and `g` swap.
pub fn decode_blocks(gadget: &BlockGadget, chi: &Coloring) -> Result<(NatSet, Orientation)> {
    let limit = 2 * gadget.params.k - 2;
    if chi.palette_size > limit {
        return Err(Error::InvalidParameter(format!("palette of {} exceeds 2k - 2 = {limit}", chi.palette_size)));
    }
    chi.check(&gadget.graph)?;
    for &name in gadget.blocks.keys() {
        gadget.orientation(name, chi)?;
    }
    let mut members = BTreeSet::new();
    for n in 0..gadget.rows() {
        if gadget.orientation(BlockName::Row(n, 0), chi)? == Orientation::Column {
            members.insert(n);
        }
    }
    Ok((NatSet::new(members, gadget.rows())?, gadget.orientation(BlockName::Spine(0), chi)?))
}
