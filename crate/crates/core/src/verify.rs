//! Seeded verification suites. Each suite checks one family of claims against
//! the exhaustive oracles and returns a [`RunReport`]; all randomness comes
//! from one [`ChaCha8Rng`] seeded by [`SuiteParams::seed`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::colorability_seq::{build_clique_gadget, decide_colorability_window, ColorabilityVerdict};
use crate::error::{Error, Result};
use crate::euler::{a_id, bean_euler_graph, build_euler_gadget, decide_euler_seq, decode_euler, euler_seq_gadgets};
use crate::graph::{DisjointInjections, FiniteGraph, GraphStream, InjectionStream, Tree, Vertex};
use crate::hamilton::{
    build_hamilton_range_gadget, decide_hamilton_corpus, decode_hamilton_range, extract_tree_path, harel_reduce,
};
use crate::online_coloring::{
    check_replay, greedy_color, schmerl_color, verify_online, GreedyColorer, PromiseMode, SeamColorer,
};
use crate::oracles::{
    count_deep_paths, enumerate_colorings, enumerate_euler_paths, hamilton_paths, is_k_colorable, random_coloring,
    tree_has_deep_path, Coloring,
};
use crate::separation::{
    build_block, build_block_gadget, build_flip_gadget, decode_blocks, decode_with_j, find_j, link_blocks, Orientation,
    DEFAULT_GUARD,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BlockLemma,
    LinkFlip,
    FlipGadget,
    BlockGadget,
    EulerRange,
    EulerSeq,
    HamiltonRange,
    Reduction,
    OnlineColoring,
    CliqueSeq,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::BlockLemma,
        Suite::LinkFlip,
        Suite::FlipGadget,
        Suite::BlockGadget,
        Suite::EulerRange,
        Suite::EulerSeq,
        Suite::HamiltonRange,
        Suite::Reduction,
        Suite::OnlineColoring,
        Suite::CliqueSeq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BlockLemma => "block-lemma",
            Suite::LinkFlip => "link-flip",
            Suite::FlipGadget => "flip-gadget",
            Suite::BlockGadget => "block-gadget",
            Suite::EulerRange => "euler-range",
            Suite::EulerSeq => "euler-seq",
            Suite::HamiltonRange => "hamilton-range",
            Suite::Reduction => "reduction",
            Suite::OnlineColoring => "online-coloring",
            Suite::CliqueSeq => "clique-seq",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Unset fields take the suite's default.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub k: Option<usize>,
    pub trials: Option<usize>,
    pub window: Option<u64>,
    pub steps: Option<usize>,
    pub cap: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self { k: None, trials: None, window: None, steps: None, cap: None, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub item: String,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub suite: String,
    pub parameters: SuiteParams,
    pub passed: bool,
    /// Number of individual checks that ran.
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl RunReport {
    /// The report without its timing, for comparing runs.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

const MAX_RECORDED: usize = 20;

struct Tally {
    checked: usize,
    failures: Vec<Failure>,
    failed: usize,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, failures: Vec::new(), failed: 0, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, item: impl FnOnce() -> String, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(Failure { item: item(), witness: witness() });
            }
        }
    }

    fn error(&mut self, item: impl FnOnce() -> String, e: &Error) {
        self.check(false, item, || json!({ "error": e.to_string() }));
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<RunReport> {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut tally = Tally::new();
    match suite {
        Suite::BlockLemma => block_lemma(params, &mut tally)?,
        Suite::LinkFlip => link_flip(params, &mut rng, &mut tally)?,
        Suite::FlipGadget => flip_gadget(params, &mut rng, &mut tally)?,
        Suite::BlockGadget => block_gadget(params, &mut rng, &mut tally)?,
        Suite::EulerRange => euler_range(params, &mut rng, &mut tally)?,
        Suite::EulerSeq => euler_seq(params, &mut rng, &mut tally)?,
        Suite::HamiltonRange => hamilton_range(params, &mut rng, &mut tally)?,
        Suite::Reduction => reduction(params, &mut rng, &mut tally)?,
        Suite::OnlineColoring => online_coloring(params, &mut rng, &mut tally)?,
        Suite::CliqueSeq => clique_seq(params, &mut rng, &mut tally)?,
    }
    if tally.failed > tally.failures.len() {
        tally.notes.push(format!("{} failures, first {} recorded", tally.failed, tally.failures.len()));
    }
    Ok(RunReport {
        command: format!("verify {suite}"),
        suite: suite.name().to_string(),
        parameters: params.clone(),
        passed: tally.failed == 0,
        checked: tally.checked,
        failures: tally.failures,
        notes: tally.notes,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// generators

/// Disjoint injections of equal length `steps`, values below `values`.
pub fn random_injections<R: Rng>(rng: &mut R, steps: usize, values: u64) -> Result<DisjointInjections> {
    if 2 * steps as u64 > values {
        return Err(Error::InvalidParameter(format!("{steps} steps need at least {} values", 2 * steps)));
    }
    let mut pool: Vec<u64> = (0..values).collect();
    pool.shuffle(rng);
    DisjointInjections::from_values(pool[..steps].to_vec(), pool[steps..2 * steps].to_vec())
}

pub fn random_injection<R: Rng>(rng: &mut R, steps: usize, values: u64) -> Result<InjectionStream> {
    if steps as u64 > values {
        return Err(Error::InvalidParameter(format!("{steps} steps need at least {steps} values")));
    }
    let mut pool: Vec<u64> = (0..values).collect();
    pool.shuffle(rng);
    InjectionStream::new(pool[..steps].to_vec())
}

/// A tree truncated at `depth` where every node below the truncation has up to
/// `branching` children, each present with probability `keep`.
pub fn random_tree<R: Rng>(rng: &mut R, depth: usize, branching: u64, keep: f64) -> Tree {
    let mut nodes = vec![Vec::new()];
    let mut frontier = vec![Vec::<u64>::new()];
    while let Some(node) = frontier.pop() {
        if node.len() == depth {
            continue;
        }
        for c in 0..branching {
            if rng.gen_bool(keep) {
                let mut child = node.clone();
                child.push(c);
                nodes.push(child.clone());
                frontier.push(child);
            }
        }
    }
    Tree::new(nodes, depth).expect("generated trees are prefix-closed")
}

/// A graph on `0..n` with a planted `k`-coloring and edges only between ids
/// at most `width` apart, streamed in id order with `h(v) = min(v + width, n - 1)`.
pub fn random_banded_stream<R: Rng>(rng: &mut R, n: u64, k: usize, width: u64, density: f64) -> GraphStream {
    let planted: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for u in v.saturating_sub(width)..v {
            if planted[u as usize] != planted[v as usize] && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let g = FiniteGraph::new(0..n, edges).expect("banded edges are valid");
    let h = (0..n).map(|v| (v, (v + width).min(n.saturating_sub(1)))).collect();
    GraphStream::from_graph(&g, Some(h)).expect("band width bounds every edge")
}

// ---------------------------------------------------------------------------
// suites

fn ks(params: &SuiteParams, default: &[usize]) -> Vec<usize> {
    params.k.map_or_else(|| default.to_vec(), |k| vec![k])
}

/// Every assignment of `palette` colors to `vertices`, as mixed-radix counting.
fn all_assignments(vertices: &[Vertex], palette: usize) -> impl Iterator<Item = Coloring> + '_ {
    let total = palette.pow(vertices.len() as u32);
    (0..total).map(move |mut code| {
        let mut colors = BTreeMap::new();
        for &v in vertices {
            colors.insert(v, code % palette);
            code /= palette;
        }
        Coloring::new(colors, palette)
    })
}

fn block_lemma(params: &SuiteParams, tally: &mut Tally) -> Result<()> {
    for k in ks(params, &[2, 3]) {
        if k < 2 {
            return Err(Error::InvalidParameter("block suite needs k >= 2".into()));
        }
        let block = build_block(k, 0);
        let g = block.graph();
        let vertices: Vec<Vertex> = g.vertices().collect();
        let mut proper = 0;
        for chi in all_assignments(&vertices, 2 * k - 2).filter(|c| c.is_proper(&g)) {
            proper += 1;
            let row = block.colorful_row(&chi).is_some();
            let col = block.colorful_column(&chi).is_some();
            tally.check(
                row != col,
                || format!("k={k}"),
                || json!({ "coloring": chi.colors, "row": row, "column": col }),
            );
        }
        let oracle = enumerate_colorings(&g, 2 * k - 2, None).len();
        tally.check(oracle == proper, || format!("k={k} count"), || json!({ "assignments": proper, "oracle": oracle }));
        tally.notes.push(format!("k={k}: {proper} proper {}-colorings examined", 2 * k - 2));
    }
    Ok(())
}

fn link_flip(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    for k in ks(params, &[2, 3]) {
        if k < 2 {
            return Err(Error::InvalidParameter("link-flip suite needs k >= 2".into()));
        }
        let a = build_block(k, 0);
        let b = build_block(k, (k * k) as Vertex);
        let mut edges = a.edges();
        edges.extend(b.edges());
        edges.extend(link_blocks(&a, &b)?);
        let g = FiniteGraph::new(0..(2 * k * k) as Vertex, edges)?;
        let palette = 2 * k - 2;
        let check = |chi: &Coloring, tally: &mut Tally| {
            let row = a.colorful_row(chi).is_some();
            let col = b.colorful_column(chi).is_some();
            tally.check(row == col, || format!("k={k}"), || json!({ "coloring": chi.colors }));
        };
        if k == 2 {
            let vertices: Vec<Vertex> = g.vertices().collect();
            let mut proper = 0;
            for chi in all_assignments(&vertices, palette).filter(|c| c.is_proper(&g)) {
                proper += 1;
                check(&chi, tally);
            }
            tally.notes.push(format!("k=2: {proper} proper colorings of 256 assignments"));
        } else {
            let trials = params.trials.unwrap_or(100_000);
            for _ in 0..trials {
                match random_coloring(&g, palette, rng) {
                    Some(chi) => check(&chi, tally),
                    None => tally.check(false, || format!("k={k}"), || json!({ "error": "no proper coloring" })),
                }
            }
            tally.notes.push(format!("k={k}: {trials} random proper colorings"));
        }
    }
    Ok(())
}

fn separates(s: &crate::graph::NatSet, inside: &[u64], outside: &[u64]) -> bool {
    inside.iter().all(|&y| s.contains(y)) && !outside.iter().any(|&y| s.contains(y))
}

fn flip_gadget(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(50);
    let max_steps = params.steps.unwrap_or(6);
    let values = params.window.unwrap_or(12);
    let cap = params.cap.unwrap_or(200);
    for trial in 0..trials {
        let steps = rng.gen_range(0..=max_steps);
        let fg = random_injections(rng, steps, values)?;
        let (f, g) = (fg.f().values().to_vec(), fg.g().values().to_vec());
        for k in ks(params, &[2, 3]) {
            let item = || format!("trial {trial} k={k} f={f:?} g={g:?}");
            let spine = steps + DEFAULT_GUARD;
            for s in 0..=steps {
                let prefix = build_flip_gadget(k, &fg, s, spine, Some(values))?;
                let ok = is_k_colorable(prefix.graph(), k).is_some();
                tally.check(ok, || format!("{} prefix {s}", item()), || json!({ "steps": s }));
            }
            let gadget = build_flip_gadget(k, &fg, steps, spine, Some(values))?;
            for chi in enumerate_colorings(gadget.graph(), 2 * k - 1, Some(cap)) {
                let j = match find_j(&gadget, &chi, spine) {
                    Ok(j) => j,
                    Err(e) => {
                        // a boundary effect must vanish with a longer spine
                        let wider = build_flip_gadget(k, &fg, steps, spine + 2, Some(values))?;
                        let retry = enumerate_colorings(wider.graph(), 2 * k - 1, Some(cap))
                            .iter()
                            .all(|c| find_j(&wider, c, spine + 2).is_ok());
                        tally.notes.push(format!("{}: find_j failed ({e}); guard+2 retry passed: {retry}", item()));
                        tally.check(retry, item, || json!({ "coloring": chi.colors }));
                        continue;
                    }
                };
                match decode_with_j(&gadget, &chi, j) {
                    Ok(s) => tally.check(
                        separates(&s, &f, &g),
                        item,
                        || json!({ "j": j, "set": s.members(), "coloring": chi.colors }),
                    ),
                    Err(e) => tally.error(item, &e),
                }
            }
        }
    }
    Ok(())
}

fn block_gadget(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(30);
    let max_steps = params.steps.unwrap_or(4);
    let values = params.window.unwrap_or(8);
    let cap = params.cap.unwrap_or(100);
    let k = params.k.unwrap_or(3);
    for trial in 0..trials {
        let steps = rng.gen_range(0..=max_steps);
        let fg = random_injections(rng, steps, values)?;
        let (f, g) = (fg.f().values().to_vec(), fg.g().values().to_vec());
        let item = || format!("trial {trial} f={f:?} g={g:?}");
        let gadget = build_block_gadget(k, &fg, steps, None)?;
        for (x, y) in gadget.graph().edges() {
            let ok = gadget.bound().get(x).is_some_and(|h| h >= y) && gadget.bound().get(y).is_some_and(|h| h >= x);
            tally.check(ok, item, || json!({ "edge": [x, y] }));
        }
        let rows = gadget.rows();
        for s in 0..=steps {
            let prefix = build_block_gadget(k, &fg, s, Some(rows))?;
            let ok = is_k_colorable(prefix.graph(), k).is_some();
            tally.check(ok, || format!("{} prefix {s}", item()), || json!({ "steps": s }));
        }
        for chi in enumerate_colorings(gadget.graph(), 2 * k - 2, Some(cap)) {
            match decode_blocks(&gadget, &chi) {
                Ok((s, orientation)) => {
                    let ok = match orientation {
                        Orientation::Row => separates(&s, &f, &g),
                        Orientation::Column => separates(&s, &g, &f),
                    };
                    tally.check(ok, item, || json!({ "set": s.members(), "orientation": orientation }));
                }
                Err(e) => tally.error(item, &e),
            }
        }
    }
    Ok(())
}

fn euler_range(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(30);
    let max_steps = params.steps.unwrap_or(8);
    for trial in 0..trials {
        let window = params.window.unwrap_or_else(|| rng.gen_range(10..=14));
        let steps = rng.gen_range(0..=max_steps.min(window.saturating_sub(1) as usize));
        let f = random_injection(rng, steps, window.saturating_sub(1))?;
        let item = || format!("trial {trial} f={:?}", f.values());
        let gadget = build_euler_gadget(&f, steps, window)?;
        let expected: BTreeSet<u64> = f.range(steps);
        let paths = enumerate_euler_paths(gadget.graph(), a_id(0), None);
        tally.check(!paths.is_empty(), item, || json!({ "error": "no Euler path from a0" }));
        for p in &paths {
            match decode_euler(&gadget, p) {
                Ok(s) => {
                    tally.check(s.members() == &expected, item, || json!({ "trace": p.vertices, "set": s.members() }))
                }
                Err(e) => tally.error(item, &e),
            }
        }
        let fine = bean_euler_graph(gadget.graph(), 1);
        let coarse = bean_euler_graph(gadget.graph(), 7);
        match (fine, coarse) {
            (Ok(a), Ok(b)) => {
                let trace = a.trace();
                let valid = trace.validate(gadget.graph());
                tally.check(valid.is_ok(), item, || json!({ "trace": trace.vertices }));
                tally.check(
                    a.trace() == b.trace(),
                    item,
                    || json!({ "fine": a.trace().vertices, "coarse": b.trace().vertices }),
                );
            }
            (Err(e), _) | (_, Err(e)) => tally.error(item, &e),
        }
    }
    Ok(())
}

fn euler_seq(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(30);
    let window = params.window.unwrap_or(10);
    for trial in 0..trials {
        let steps = rng.gen_range(0..=window as usize);
        let f = random_injection(rng, steps, 2 * window)?;
        let z = decide_euler_seq(&euler_seq_gadgets(&f, window, window));
        let expected: BTreeSet<u64> = f.range(steps).into_iter().filter(|&y| y < window).collect();
        tally.check(
            z.complement().members() == &expected,
            || format!("trial {trial} f={:?}", f.values()),
            || json!({ "z": z.members(), "expected_complement": expected }),
        );
    }
    Ok(())
}

fn hamilton_range(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(30);
    let window = params.window.unwrap_or(14);
    let targets = 10u64;
    for trial in 0..trials {
        let steps = rng.gen_range(0..=window as usize);
        let f = random_injection(rng, steps, steps as u64 + targets)?;
        for n in 0..targets {
            let item = || format!("trial {trial} f={:?} n={n}", f.values());
            let gadget = build_hamilton_range_gadget(&f, n, window)?;
            let paths = hamilton_paths(gadget.graph(), Some(2));
            if paths.len() != 1 {
                tally.check(false, item, || json!({ "paths": paths.iter().map(|p| &p.vertices).collect::<Vec<_>>() }));
                continue;
            }
            let member = f.values().iter().enumerate().any(|(j, &y)| y == n && (j as u64) + 2 < window);
            match decode_hamilton_range(&gadget, &paths[0]) {
                Ok(d) => tally.check(d == member, item, || json!({ "trace": paths[0].vertices, "decoded": d })),
                Err(e) => tally.error(item, &e),
            }
        }
    }
    Ok(())
}

/// Fixed trees with no, one, and several deep branches, then random ones.
pub fn tree_corpus<R: Rng>(rng: &mut R, size: usize, max_depth: usize, branching: u64) -> Vec<Tree> {
    let mut corpus = vec![
        Tree::new([vec![]], max_depth).expect("root alone is a tree"),
        Tree::from_branches([vec![1; max_depth]], max_depth).expect("a branch is a tree"),
        Tree::from_branches([vec![0; max_depth], vec![branching - 1; max_depth], vec![0, 1]], max_depth)
            .expect("branches form a tree"),
    ];
    while corpus.len() < size {
        let depth = rng.gen_range(1..=max_depth);
        let keep = rng.gen_range(0.3..0.7);
        corpus.push(random_tree(rng, depth, branching, keep));
    }
    corpus.truncate(size);
    corpus
}

fn reduction(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(30);
    let depth = params.window.map_or(4, |w| w as usize);
    let corpus = tree_corpus(rng, trials, depth, 3);
    let reduced: Vec<_> = corpus.iter().map(harel_reduce).collect::<Result<_>>()?;
    let graphs: Vec<FiniteGraph> = reduced.iter().map(|r| r.graph().clone()).collect();
    let z = decide_hamilton_corpus(&graphs);
    let mut shapes = [0usize; 3];
    for (i, (t, out)) in corpus.iter().zip(&reduced).enumerate() {
        let d = t.truncation_depth();
        let item = || format!("tree {i} depth {d} with {} nodes", t.nodes().len());
        let deep = tree_has_deep_path(t, d)?;
        tally.check(z.contains(i as u64) == deep, item, || json!({ "tree": t.nodes(), "has_branch": deep }));
        let branches = count_deep_paths(t, d, None)?;
        shapes[branches.min(2)] += 1;
        let paths = hamilton_paths(out.graph(), Some(branches + 1));
        tally.check(paths.len() == branches, item, || json!({ "branches": branches, "paths": paths.len() }));
        let mut seen = BTreeSet::new();
        for p in &paths {
            match extract_tree_path(out, p) {
                Ok(b) => {
                    let ok = b.len() == d && t.contains(&b) && seen.insert(b.clone());
                    tally.check(ok, item, || json!({ "trace": p.vertices, "branch": b }));
                }
                Err(e) => tally.error(item, &e),
            }
        }
    }
    tally.notes.push(format!(
        "corpus: {} trees without a branch, {} with one, {} with several",
        shapes[0], shapes[1], shapes[2]
    ));
    Ok(())
}

fn online_coloring(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(30);
    let max_n = params.window.unwrap_or(60);
    for trial in 0..trials {
        let k = params.k.unwrap_or(2 + trial % 2);
        let n = rng.gen_range(1..=max_n);
        let width = rng.gen_range(1..=5);
        let density = rng.gen_range(0.3..0.9);
        let stream = random_banded_stream(rng, n, k, width, density);
        let item = || format!("trial {trial} k={k} n={n} width={width}");
        let bound = stream.bound().cloned().expect("banded streams are bounded");
        match schmerl_color(&stream, k, PromiseMode::Checked) {
            Ok(log) => {
                tally.check(log.len() == n as usize, item, || json!({ "committed": log.len() }));
                let verdict = verify_online(&log, &stream, 2 * k - 1);
                tally.check(verdict.is_pass(), item, || json!(verdict));
                let replay =
                    check_replay(&log, &stream, &[3, 17], || SeamColorer::new(bound.clone(), k, PromiseMode::Trusted))?;
                tally.check(replay.is_pass(), item, || json!(replay));
            }
            Err(e) => tally.error(item, &e),
        }
        match greedy_color(&stream) {
            Ok(log) => {
                let verdict = verify_online(&log, &stream, n as usize + 1);
                tally.check(verdict.is_pass() && log.len() == n as usize, item, || json!(verdict));
                let replay = check_replay(&log, &stream, &[4], || Ok(GreedyColorer::new(bound.clone())))?;
                tally.check(replay.is_pass(), item, || json!(replay));
            }
            Err(e) => tally.error(item, &e),
        }
    }
    Ok(())
}

fn clique_seq(params: &SuiteParams, rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let trials = params.trials.unwrap_or(50);
    let window = params.window.unwrap_or(12);
    for trial in 0..trials {
        let steps = rng.gen_range(0..=window as usize);
        let g = random_injection(rng, steps, 2 * window)?;
        let i = rng.gen_range(0..window);
        let item = || format!("trial {trial} g={:?} i={i}", g.values());
        let gadget = build_clique_gadget(&g, i, window);
        let verdict = decide_colorability_window(&gadget);
        let hit = g.values().contains(&i);
        tally.check(verdict.is_stopped() == hit, item, || json!(verdict));
        let size = verdict.clique_size() as usize;
        // upper bound from the oracle, lower bound from an explicit clique
        let clique = (0..size as u64).all(|b| (0..b).all(|a| gadget.graph().has_edge(a, b)));
        let exact = clique && is_k_colorable(gadget.graph(), size).is_some();
        tally.check(exact, item, || json!({ "verdict": verdict, "edges": gadget.graph().edge_count() }));
        if let ColorabilityVerdict::Growing { .. } = verdict {
            let complete = gadget.graph() == &FiniteGraph::complete(window);
            tally.check(complete, item, || json!({ "edges": gadget.graph().edge_count() }));
        }
    }
    Ok(())
}
