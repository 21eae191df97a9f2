use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use recgraph::colorability_seq::{decide_colorability_window, CliqueGadget, CliqueParams};
use recgraph::euler::{
    bean_euler_chunked, bean_euler_graph, build_euler_gadget, build_euler_seq_gadget, decode_euler, leastcode_euler,
    pre_eulerian_check, EulerGadget,
};
use recgraph::hamilton::{
    build_hamilton_range_gadget, decide_hamilton_corpus, decide_unique_hamilton_corpus, decode_hamilton_range,
    harel_reduce, HamiltonRangeGadget,
};
use recgraph::io::{
    parse_coloring, parse_injection, parse_stream, parse_trace, parse_tree, stream_to_jsonl, to_dot, GadgetMeta,
    GraphFile,
};
use recgraph::online_coloring::{run, GreedyColorer, PromiseMode, SeamColorer};
use recgraph::oracles::{
    enumerate_colorings, enumerate_euler_paths, euler_path, euler_start, hamilton_paths, is_k_colorable, odd_vertices,
    PathKind,
};
use recgraph::separation::{
    build_block_gadget, build_flip_gadget, decode_blocks, decode_simple, decode_with_j, find_j, BlockGadget,
    FlipGadget, DEFAULT_GUARD,
};
use recgraph::verify::{run_suite, Suite, SuiteParams, DEFAULT_SEED};
use recgraph::{DisjointInjections, FiniteGraph, GraphStream, Vertex};

#[derive(Parser)]
#[command(name = "recgraph", version, about = "Streamed graphs, online algorithms and coding gadgets")]
struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Trial count for randomized suites.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive checks on a finite graph.
    Oracle {
        #[arg(value_enum)]
        what: OracleKind,
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// List every solution instead of one.
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Online coloring of a bounded stream.
    Color {
        #[command(subcommand)]
        what: ColorCommand,
    },
    /// Build a gadget graph.
    Gadget {
        #[command(subcommand)]
        what: GadgetCommand,
    },
    /// Read a set back out of a gadget solution.
    Decode {
        #[command(subcommand)]
        what: DecodeCommand,
    },
    /// Euler paths on streams and graphs.
    Euler {
        #[arg(value_enum)]
        what: EulerKind,
        /// A stream (.jsonl) or a graph file (.json); `online` compacts the ids of a graph file.
        input: PathBuf,
        /// Stage for `check`; defaults to the whole stream.
        #[arg(long)]
        stage: Option<usize>,
        /// Events per feed call for `online`.
        #[arg(long, default_value_t = 1)]
        chunk: usize,
        /// Start vertex for `leastcode`.
        #[arg(long)]
        start: Option<Vertex>,
    },
    /// Reduce a tree to a Hamilton-path stream.
    Reduce {
        #[arg(value_enum)]
        what: ReduceKind,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Windowed deciders over gadget corpora.
    Decide {
        #[arg(value_enum)]
        what: DecideKind,
        /// A corpus directory, or a graph file for `colorability`.
        input: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        window: Option<u64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Export a graph file.
    Export {
        #[arg(value_enum)]
        what: ExportKind,
        graph: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Color,
    Euler,
    Hamilton,
}

#[derive(Subcommand)]
enum ColorCommand {
    Online {
        #[arg(long, value_enum, default_value_t = Algo::Seams)]
        algo: Algo,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Skip the k-colorability check of each window.
        #[arg(long)]
        trusted: bool,
        #[arg(long, default_value_t = 1)]
        chunk: usize,
        stream: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Greedy,
    /// The (2k-1)-color seam construction.
    #[value(name = "schmerl")]
    Seams,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    f: PathBuf,
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    steps: usize,
}

#[derive(Subcommand)]
enum GadgetCommand {
    Flip {
        #[command(flatten)]
        pair: PairArgs,
        /// Spine length; defaults to steps plus a guard of 2.
        #[arg(long)]
        spine: Option<usize>,
        #[arg(long)]
        window: Option<u64>,
    },
    Blocks {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        rows: Option<u64>,
    },
    EulerRange {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        window: u64,
    },
    EulerSeq {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        n: u64,
    },
    HamiltonRange {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        window: u64,
    },
    CliqueSeq {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum DecodeCommand {
    Flip {
        #[arg(long)]
        gadget: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Read colors directly instead of searching for j (k = 2 only).
        #[arg(long)]
        simple: bool,
    },
    Blocks {
        #[arg(long)]
        gadget: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    EulerRange {
        #[arg(long)]
        gadget: PathBuf,
        #[arg(long)]
        trace: PathBuf,
    },
    HamiltonRange {
        #[arg(long)]
        gadget: PathBuf,
        #[arg(long)]
        trace: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EulerKind {
    Check,
    Online,
    Leastcode,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecideKind {
    Hamilton,
    UniqueHamilton,
    Colorability,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Dot,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph_file(path: &Path) -> Result<GraphFile> {
    GraphFile::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Streams are JSON lines, anything else is a graph file.
fn read_stream(path: &Path) -> Result<GraphStream> {
    let text = read(path)?;
    if let Ok(file) = GraphFile::parse(&text) {
        return Ok(GraphStream::from_graph(&file.graph()?, file.bound.clone())?);
    }
    parse_stream(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_pair(p: &PairArgs) -> Result<DisjointInjections> {
    let f = parse_injection(&read(&p.f)?)?;
    let g = parse_injection(&read(&p.g)?)?;
    Ok(DisjointInjections::new(f, g)?)
}

/// The gadget parameters of a file written by `gadget`, or a bare metadata object.
fn read_meta(path: &Path) -> Result<GadgetMeta> {
    let text = read(path)?;
    if let Ok(file) = GraphFile::parse(&text) {
        return file.gadget.ok_or_else(|| anyhow!("{} has no gadget metadata", path.display()));
    }
    serde_json::from_str(&text).with_context(|| format!("parsing gadget metadata in {}", path.display()))
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(cli: &Cli, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(cli, &text)
}

fn emit_graph(cli: &Cli, file: &GraphFile) -> Result<()> {
    match cli.format {
        Format::Json => {
            let mut text = file.to_json();
            text.push('\n');
            emit(cli, &text)
        }
        Format::Dot => emit(cli, &to_dot(&file.graph()?, file.labels.as_ref())),
    }
}

fn oracle(what: OracleKind, g: &FiniteGraph, k: usize, enumerate: bool, cap: Option<usize>) -> Value {
    match what {
        OracleKind::Color if enumerate => {
            let all = enumerate_colorings(g, k, cap);
            json!({ "k": k, "count": all.len(), "colorings": all })
        }
        OracleKind::Color => {
            let found = is_k_colorable(g, k);
            json!({ "k": k, "colorable": found.is_some(), "coloring": found })
        }
        OracleKind::Euler => {
            let mut report = json!({ "odd_vertices": odd_vertices(g), "path": euler_path(g) });
            if enumerate {
                let paths = euler_start(g).map(|s| enumerate_euler_paths(g, s, cap)).unwrap_or_default();
                report["count"] = json!(paths.len());
                report["paths"] = json!(paths);
            }
            report
        }
        OracleKind::Hamilton => {
            let paths = hamilton_paths(g, if enumerate { cap } else { Some(1) });
            if enumerate {
                json!({ "count": paths.len(), "paths": paths })
            } else {
                json!({ "exists": !paths.is_empty(), "path": paths.first() })
            }
        }
    }
}

fn gadget(cli: &Cli, what: &GadgetCommand) -> Result<()> {
    let file = match what {
        GadgetCommand::Flip { pair, spine, window } => {
            let fg = read_pair(pair)?;
            let spine = spine.unwrap_or(pair.steps + DEFAULT_GUARD);
            let gadget = build_flip_gadget(pair.k, &fg, pair.steps, spine, *window)?;
            GraphFile::from_graph(gadget.graph())
                .with_labels(gadget.labels())
                .with_gadget(GadgetMeta::Flip(gadget.params().clone()))
        }
        GadgetCommand::Blocks { pair, rows } => {
            let fg = read_pair(pair)?;
            let gadget = build_block_gadget(pair.k, &fg, pair.steps, *rows)?;
            GraphFile::from_graph(gadget.graph())
                .with_bound(gadget.bound().clone())
                .with_labels(gadget.labels())
                .with_gadget(GadgetMeta::Blocks(gadget.params().clone()))
        }
        GadgetCommand::EulerRange { f, steps, window } => {
            let gadget = build_euler_gadget(&parse_injection(&read(f)?)?, *steps, *window)?;
            GraphFile::from_graph(gadget.graph())
                .with_bound(gadget.graph().tight_bound())
                .with_labels(gadget.labels())
                .with_gadget(GadgetMeta::EulerRange(gadget.params().clone()))
        }
        GadgetCommand::EulerSeq { f, i, n } => {
            let f = parse_injection(&read(f)?)?;
            let g = build_euler_seq_gadget(&f, *i, *n);
            GraphFile::from_graph(&g).with_gadget(GadgetMeta::EulerSeq { f: f.values().to_vec(), i: *i, n: *n })
        }
        GadgetCommand::HamiltonRange { f, n, window } => {
            let gadget = build_hamilton_range_gadget(&parse_injection(&read(f)?)?, *n, *window)?;
            GraphFile::from_graph(gadget.graph()).with_gadget(GadgetMeta::HamiltonRange(gadget.params().clone()))
        }
        GadgetCommand::CliqueSeq { g, i, n } => {
            let params = CliqueParams { g: parse_injection(&read(g)?)?.values().to_vec(), i: *i, n: *n };
            let gadget = CliqueGadget::from_params(&params)?;
            GraphFile::from_graph(gadget.graph()).with_gadget(GadgetMeta::CliqueSeq(params))
        }
    };
    emit_graph(cli, &file)
}

fn decode(what: &DecodeCommand) -> Result<Value> {
    Ok(match what {
        DecodeCommand::Flip { gadget, coloring, simple } => {
            let GadgetMeta::Flip(params) = read_meta(gadget)? else { bail!("not a flip gadget") };
            let gadget = FlipGadget::from_params(&params)?;
            let chi = parse_coloring(&read(coloring)?)?;
            if *simple {
                json!({ "set": decode_simple(&gadget, &chi)? })
            } else {
                let j = find_j(&gadget, &chi, gadget.spine_len())?;
                json!({ "j": j, "set": decode_with_j(&gadget, &chi, j)? })
            }
        }
        DecodeCommand::Blocks { gadget, coloring } => {
            let GadgetMeta::Blocks(params) = read_meta(gadget)? else { bail!("not a block gadget") };
            let gadget = BlockGadget::from_params(&params)?;
            let (set, orientation) = decode_blocks(&gadget, &parse_coloring(&read(coloring)?)?)?;
            json!({ "set": set, "orientation": orientation })
        }
        DecodeCommand::EulerRange { gadget, trace } => {
            let GadgetMeta::EulerRange(params) = read_meta(gadget)? else { bail!("not an euler-range gadget") };
            let gadget = EulerGadget::from_params(&params)?;
            let trace = parse_trace(&read(trace)?, PathKind::Euler)?;
            json!({ "set": decode_euler(&gadget, &trace)? })
        }
        DecodeCommand::HamiltonRange { gadget, trace } => {
            let GadgetMeta::HamiltonRange(params) = read_meta(gadget)? else { bail!("not a hamilton-range gadget") };
            let gadget = HamiltonRangeGadget::from_params(&params)?;
            let trace = parse_trace(&read(trace)?, PathKind::Hamilton)?;
            json!({ "n": params.n, "in_range": decode_hamilton_range(&gadget, &trace)? })
        }
    })
}

fn euler(what: EulerKind, input: &Path, stage: Option<usize>, chunk: usize, start: Option<Vertex>) -> Result<Value> {
    let stream = read_stream(input)?;
    Ok(match what {
        EulerKind::Check => json!(pre_eulerian_check(&stream, stage.unwrap_or(stream.len()))?),
        EulerKind::Online => {
            // a finite graph file is streamed with compacted ids so every vertex settles
            let run = match GraphFile::parse(&read(input)?) {
                Ok(file) => bean_euler_graph(&file.graph()?, chunk)?,
                Err(_) => bean_euler_chunked(&stream, chunk)?,
            };
            json!({ "run": run, "trace": run.trace() })
        }
        EulerKind::Leastcode => {
            let g = stream.full();
            let start = match start.or_else(|| euler_start(&g)) {
                Some(s) => s,
                None => bail!("graph has no Euler path"),
            };
            json!(leastcode_euler(&g, start)?)
        }
    })
}

/// Graph files (`.json`) and streams (`.jsonl`) in a directory, by file name.
fn read_corpus(dir: &Path) -> Result<Vec<(String, FiniteGraph)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("json" | "jsonl")));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((name, read_stream(p)?.full()))
        })
        .collect()
}

fn decide(what: DecideKind, input: &Path) -> Result<Value> {
    if let DecideKind::Colorability = what {
        let GadgetMeta::CliqueSeq(params) = read_meta(input)? else { bail!("not a clique-seq gadget") };
        return Ok(json!(decide_colorability_window(&CliqueGadget::from_params(&params)?)));
    }
    let corpus = read_corpus(input)?;
    let names: Vec<&String> = corpus.iter().map(|(n, _)| n).collect();
    let graphs: Vec<FiniteGraph> = corpus.iter().map(|(_, g)| g.clone()).collect();
    let set = match what {
        DecideKind::Hamilton => decide_hamilton_corpus(&graphs),
        _ => decide_unique_hamilton_corpus(&graphs)?,
    };
    let chosen: Vec<&String> = set.members().iter().map(|&i| names[i as usize]).collect();
    Ok(json!({ "set": set, "files": names, "members": chosen }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Oracle { what, graph, k, enumerate, cap } => {
            let g = read_graph_file(graph)?.graph()?;
            emit_json(cli, &oracle(*what, &g, *k, *enumerate, *cap))?;
        }
        Command::Color { what: ColorCommand::Online { algo, k, trusted, chunk, stream } } => {
            let stream = read_stream(stream)?;
            let bound = stream.bound().cloned().ok_or_else(|| anyhow!("online coloring needs a bounded stream"))?;
            let log = match algo {
                Algo::Greedy => run(&mut GreedyColorer::new(bound), &stream, *chunk)?,
                Algo::Seams => {
                    let mode = if *trusted { PromiseMode::Trusted } else { PromiseMode::Checked };
                    run(&mut SeamColorer::new(bound, *k, mode)?, &stream, *chunk)?
                }
            };
            let mut text = String::new();
            for commit in log.up_to(usize::MAX) {
                text.push_str(&serde_json::to_string(commit)?);
                text.push('\n');
            }
            emit(cli, &text)?;
        }
        Command::Gadget { what } => gadget(cli, what)?,
        Command::Decode { what } => emit_json(cli, &decode(what)?)?,
        Command::Euler { what, input, stage, chunk, start } => {
            emit_json(cli, &euler(*what, input, *stage, *chunk, *start)?)?
        }
        Command::Reduce { what: ReduceKind::Tree, tree } => {
            let out = harel_reduce(&parse_tree(&read(tree)?)?)?;
            match cli.format {
                Format::Json => emit(cli, &stream_to_jsonl(out.stream()))?,
                Format::Dot => emit(cli, &to_dot(out.graph(), Some(&out.label_strings())))?,
            }
        }
        Command::Decide { what, input } => emit_json(cli, &decide(*what, input)?)?,
        Command::Verify { suite, k, window, steps, cap } => {
            let suite: Suite = suite.parse()?;
            let params =
                SuiteParams { k: *k, trials: cli.trials, window: *window, steps: *steps, cap: *cap, seed: cli.seed };
            let report = run_suite(suite, &params)?;
            emit_json(cli, &report)?;
            if !report.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Export { what: ExportKind::Dot, graph } => {
            let file = read_graph_file(graph)?;
            emit(cli, &to_dot(&file.graph()?, file.labels.as_ref()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
