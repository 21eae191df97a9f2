//! Online coloring of bounded graph streams.
//!
//! An online colorer sees the stream a chunk of events at a time and may only
//! commit colors; a commitment is never revised. Vertices are committed only
//! once settled (see [`GraphStream::settle_stage`]), so their neighborhoods
//! are frozen at commit time.
//!
//! # The `2k - 1` construction
//!
//! [`SeamColorer`] colors a bounded graph whose finite subgraphs are all
//! `k`-colorable with colors `0..=2k-2`.
//!
//! Rings. Let `A_{-1}` be empty and `A_{n+1} = A_n ∪ N(A_n) ∪ {m}` where `m`
//! is the least vertex id outside `A_n`. Put `D_n = A_n \ A_{n-1}`. Since
//! `N(A_n) ⊆ A_{n+1}`, every edge joins two vertices of the same ring or of
//! consecutive rings. `D_{n+1}` is determined as soon as all of `A_n` is
//! settled and `m` is revealed, and it never changes afterwards.
//!
//! Seams. For `j >= 0` let `χ_j` be a `k`-coloring (values `0..k`) of
//! `G[D_{3j} ∪ D_{3j+1}]`. The separator `S_j` is the set of seam vertices
//! with `χ_j != 0`; a separator vertex `v` gets color `k - 1 + χ_j(v)`, which
//! lies in `k..=2k-2`.
//!
//! Pieces. `P_{-1} = {v ∈ D_0 : χ_0(v) = 0}` and for `j >= 0`
//! `P_j = {v ∈ D_{3j+1} : χ_j(v) = 0} ∪ D_{3j+2} ∪ {v ∈ D_{3j+3} : χ_{j+1}(v) = 0}`.
//! Each piece is a finite subgraph, so it has a `k`-coloring with colors
//! `0..k`, which is what it gets.
//!
//! Why this is proper:
//!
//! * Every vertex lies in exactly one separator or piece.
//! * Inside a separator, `χ_j` is proper. Inside a piece, its own coloring is proper.
//! * Pieces and separators use disjoint palettes.
//! * Two separators `S_j`, `S_{j'}` with `j < j'` sit in rings at least two
//!   apart, so no edge joins them.
//! * `P_j` and `P_{j+1}` only meet across rings `3j+3` and `3j+4`, where both
//!   sides have `χ_{j+1} = 0`; `χ_{j+1}` is proper there, so no edge joins them.
//!   Pieces further apart are separated by at least two rings.
//!
//! Step `j` commits `S_j` and then `P_{j-1}`, each sorted by id. It is
//! released once rings `3j` and `3j+1` are known and settled, which also
//! settles everything `P_{j-1}` needs. Every batch is a function of the final
//! graph alone, so the sequence of commitments does not depend on how the
//! stream is chunked. At the end of the stream, once every revealed vertex is
//! in some settled ring, missing rings are empty and all remaining steps run.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BoundFn, Event, GraphStream, Settler, Vertex};
use crate::oracles::is_k_colorable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Commit {
    pub vertex: Vertex,
    pub color: usize,
    pub stage: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CommitLog {
    pub commits: Vec<Commit>,
}

impl CommitLog {
    pub fn new(commits: Vec<Commit>) -> Self {
        Self { commits }
    }

    pub fn len(&self) -> usize {
        self.commits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.commits.is_empty()
    }

    pub fn colors(&self) -> BTreeMap<Vertex, usize> {
        self.commits.iter().map(|c| (c.vertex, c.color)).collect()
    }

    pub fn max_color(&self) -> Option<usize> {
        self.commits.iter().map(|c| c.color).max()
    }

    /// The commitments without their stages.
    pub fn sequence(&self) -> Vec<(Vertex, usize)> {
        self.commits.iter().map(|c| (c.vertex, c.color)).collect()
    }

    /// Commitments made by stage `t`.
    pub fn up_to(&self, t: usize) -> impl Iterator<Item = &Commit> {
        self.commits.iter().filter(move |c| c.stage <= t)
    }
}

pub trait OnlineColorer {
    /// Processes the next events and returns the commitments made.
    fn feed(&mut self, events: &[Event]) -> Result<Vec<Commit>>;
    /// Signals the end of the stream; the last edge burst is now complete.
    fn finish(&mut self) -> Result<Vec<Commit>>;
}

/// Feeds `stream` in chunks of `chunk` events (at least one).
pub fn run<C: OnlineColorer>(colorer: &mut C, stream: &GraphStream, chunk: usize) -> Result<CommitLog> {
    let mut log = Vec::new();
    for part in stream.events().chunks(chunk.max(1)) {
        log.extend(colorer.feed(part)?);
    }
    log.extend(colorer.finish()?);
    Ok(CommitLog::new(log))
}

fn require_bound(stream: &GraphStream) -> Result<BoundFn> {
    stream.bound().cloned().ok_or(Error::Unbounded)
}

/// First fit in settlement order, ties by id.
#[derive(Debug, Clone)]
pub struct GreedyColorer {
    settler: Settler,
    colors: BTreeMap<Vertex, usize>,
}

impl GreedyColorer {
    pub fn new(bound: BoundFn) -> Self {
        Self { settler: Settler::new(bound), colors: BTreeMap::new() }
    }

    fn commit(&mut self, batch: Vec<Vertex>) -> Vec<Commit> {
        let stage = self.settler.stage();
        batch
            .into_iter()
            .map(|v| {
                let used: BTreeSet<usize> =
                    self.settler.neighbors(v).filter_map(|w| self.colors.get(&w).copied()).collect();
                let color = (0..).find(|c| !used.contains(c)).unwrap();
                self.colors.insert(v, color);
                Commit { vertex: v, color, stage }
            })
            .collect()
    }
}

impl OnlineColorer for GreedyColorer {
    fn feed(&mut self, events: &[Event]) -> Result<Vec<Commit>> {
        let mut batch = Vec::new();
        for &ev in events {
            batch.extend(self.settler.push(ev)?);
        }
        Ok(self.commit(batch))
    }

    fn finish(&mut self) -> Result<Vec<Commit>> {
        let batch = self.settler.finish();
        Ok(self.commit(batch))
    }
}

pub fn greedy_color(stream: &GraphStream) -> Result<CommitLog> {
    run(&mut GreedyColorer::new(require_bound(stream)?), stream, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PromiseMode {
    /// Before each step, check that the rings it touches induce a
    /// `k`-colorable graph.
    #[default]
    Checked,
    /// Trust the promise. A piece or seam that cannot be colored still
    /// raises [`Error::PromiseViolation`].
    Trusted,
}

/// The ring, seam and piece construction from the module docs.
#[derive(Debug, Clone)]
pub struct SeamColorer {
    k: usize,
    mode: PromiseMode,
    settler: Settler,
    rings: Vec<BTreeSet<Vertex>>,
    covered: BTreeSet<Vertex>,
    complete: bool,
    seams: Vec<BTreeMap<Vertex, usize>>,
    next_step: usize,
}

impl SeamColorer {
    pub fn new(bound: BoundFn, k: usize, mode: PromiseMode) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        Ok(Self {
            k,
            mode,
            settler: Settler::new(bound),
            rings: Vec::new(),
            covered: BTreeSet::new(),
            complete: false,
            seams: Vec::new(),
            next_step: 0,
        })
    }

    fn ring(&self, n: usize) -> BTreeSet<Vertex> {
        self.rings.get(n).cloned().unwrap_or_default()
    }

    fn ring_settled(&self, n: usize) -> bool {
        self.rings.get(n).is_some_and(|r| r.iter().all(|v| self.settler.is_settled(*v)))
    }

    fn extend_rings(&mut self) {
        while !self.complete {
            if !self.covered.iter().all(|v| self.settler.is_settled(*v)) {
                return;
            }
            let least_free = (0..).find(|m| !self.covered.contains(m)).unwrap();
            let next = if self.settler.contains(least_free) {
                Some(least_free)
            } else if self.settler.is_finished() {
                self.settler.vertices().find(|v| !self.covered.contains(v))
            } else {
                return;
            };
            let Some(m) = next else {
                self.complete = true;
                return;
            };
            let mut ring: BTreeSet<Vertex> = self
                .covered
                .iter()
                .flat_map(|&v| self.settler.neighbors(v))
                .filter(|w| !self.covered.contains(w))
                .collect();
            ring.insert(m);
            self.covered.extend(ring.iter().copied());
            self.rings.push(ring);
        }
    }

    fn step_ready(&self, j: usize) -> bool {
        if self.complete {
            let last = self.rings.len().saturating_sub(1);
            return j <= last.div_ceil(3) && !self.rings.is_empty();
        }
        self.ring_settled(3 * j) && self.ring_settled(3 * j + 1)
    }

    fn k_coloring(&self, part: &BTreeSet<Vertex>, what: &str) -> Result<BTreeMap<Vertex, usize>> {
        let g = self.settler.induced(part);
        is_k_colorable(&g, self.k)
            .map(|c| c.colors)
            .ok_or_else(|| Error::PromiseViolation(format!("{what} is not {}-colorable", self.k)))
    }

    fn run_step(&mut self, j: usize) -> Result<Vec<Commit>> {
        if self.mode == PromiseMode::Checked {
            let lo = (3 * j).saturating_sub(2);
            let window: BTreeSet<Vertex> = (lo..=3 * j + 1).flat_map(|n| self.ring(n)).collect();
            self.k_coloring(&window, &format!("rings {lo}..={}", 3 * j + 1))?;
        }
        let seam: BTreeSet<Vertex> = self.ring(3 * j).union(&self.ring(3 * j + 1)).copied().collect();
        let chi = self.k_coloring(&seam, &format!("seam {j}"))?;
        self.seams.push(chi);
        let chi = &self.seams[j];

        let stage = self.settler.stage();
        let mut out: Vec<Commit> = chi
            .iter()
            .filter(|&(_, &c)| c != 0)
            .map(|(&v, &c)| Commit { vertex: v, color: self.k - 1 + c, stage })
            .collect();

        let piece: BTreeSet<Vertex> = if j == 0 {
            self.ring(0).into_iter().filter(|v| chi[v] == 0).collect()
        } else {
            let prev = &self.seams[j - 1];
            self.ring(3 * j - 2)
                .into_iter()
                .filter(|v| prev[v] == 0)
                .chain(self.ring(3 * j - 1))
                .chain(self.ring(3 * j).into_iter().filter(|v| chi[v] == 0))
                .collect()
        };
        let colors = self.k_coloring(&piece, &format!("piece {}", j as i64 - 1))?;
        out.extend(colors.into_iter().map(|(v, c)| Commit { vertex: v, color: c, stage }));
        Ok(out)
    }

    fn release(&mut self) -> Result<Vec<Commit>> {
        self.extend_rings();
        let mut out = Vec::new();
        while self.step_ready(self.next_step) {
            out.extend(self.run_step(self.next_step)?);
            self.next_step += 1;
        }
        Ok(out)
    }
}

impl OnlineColorer for SeamColorer {
    fn feed(&mut self, events: &[Event]) -> Result<Vec<Commit>> {
        for &ev in events {
            self.settler.push(ev)?;
        }
        self.release()
    }

    fn finish(&mut self) -> Result<Vec<Commit>> {
        self.settler.finish();
        self.release()
    }
}

pub fn schmerl_color(stream: &GraphStream, k: usize, mode: PromiseMode) -> Result<CommitLog> {
    run(&mut SeamColorer::new(require_bound(stream)?, k, mode)?, stream, 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "witness", rename_all = "snake_case")]
pub enum Witness {
    Monochromatic { edge: (Vertex, Vertex), color: usize },
    OutOfPalette { vertex: Vertex, color: usize },
    DuplicateCommit { vertex: Vertex, first: usize, second: usize },
    UnknownVertex { vertex: Vertex },
    EarlyCommit { vertex: Vertex, stage: usize, settled_at: Option<usize> },
    ReplayMismatch { chunk: usize, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }
}

/// Checks a log against the stream: one commitment per vertex, every color in
/// the palette, no commitment before the vertex settles, and no
/// monochromatic edge between committed vertices.
pub fn verify_online(log: &CommitLog, stream: &GraphStream, palette: usize) -> Verdict {
    let mut colors = BTreeMap::new();
    for (i, c) in log.commits.iter().enumerate() {
        if let Some((first, _)) = colors.insert(c.vertex, (i, c.color)) {
            return Verdict::Fail(Witness::DuplicateCommit { vertex: c.vertex, first, second: i });
        }
        if c.color >= palette {
            return Verdict::Fail(Witness::OutOfPalette { vertex: c.vertex, color: c.color });
        }
        if stream.reveal_index(c.vertex).is_none() {
            return Verdict::Fail(Witness::UnknownVertex { vertex: c.vertex });
        }
        let settled_at = stream.settle_stage(c.vertex).ok().flatten();
        if settled_at.is_none_or(|s| c.stage < s) {
            return Verdict::Fail(Witness::EarlyCommit { vertex: c.vertex, stage: c.stage, settled_at });
        }
    }
    for (u, v) in stream.full().edges() {
        if let (Some(&(_, a)), Some(&(_, b))) = (colors.get(&u), colors.get(&v)) {
            if a == b {
                return Verdict::Fail(Witness::Monochromatic { edge: (u, v), color: a });
            }
        }
    }
    Verdict::Pass
}

/// Re-runs a fresh colorer at each chunk size and compares the commitment
/// sequence with `log`. Also checks that the commitments made by each stage
/// of the event-by-event run form a prefix of the final sequence.
pub fn check_replay<C, F>(log: &CommitLog, stream: &GraphStream, chunks: &[usize], mut make: F) -> Result<Verdict>
where
    C: OnlineColorer,
    F: FnMut() -> Result<C>,
{
    let reference = log.sequence();
    let mut stages = log.commits.iter().map(|c| c.stage);
    if let Some(mut prev) = stages.next() {
        for (i, s) in stages.enumerate() {
            if s < prev {
                return Ok(Verdict::Fail(Witness::ReplayMismatch { chunk: 1, position: i + 1 }));
            }
            prev = s;
        }
    }
    for &chunk in chunks {
        let other = run(&mut make()?, stream, chunk)?.sequence();
        if other != reference {
            let position = reference.iter().zip(&other).take_while(|(a, b)| a == b).count();
            return Ok(Verdict::Fail(Witness::ReplayMismatch { chunk, position }));
        }
    }
    Ok(Verdict::Pass)
}
