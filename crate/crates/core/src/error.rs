use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) references a vertex that is not in the graph")]
    DanglingEdge(Vertex, Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),

    #[error("event index {t} out of range (stream has {len} events)")]
    StreamIndex { t: usize, len: usize },
    #[error("event {index}: {reason}")]
    BadEvent { index: usize, reason: String },
    #[error("bound violated by edge ({x}, {y}): h({x}) = {hx} < {y}")]
    BoundViolation { x: Vertex, y: Vertex, hx: u64 },
    #[error("no bound function covers vertex {0}")]
    BoundMissing(Vertex),
    #[error("the stream carries no bound function")]
    Unbounded,

    #[error("injection repeats value {value} at arguments {first} and {second}")]
    NotInjective { value: u64, first: usize, second: usize },
    #[error("ranges are not disjoint: f({f_arg}) = g({g_arg}) = {value}")]
    RangesOverlap { value: u64, f_arg: usize, g_arg: usize },

    #[error("tree is not prefix-closed: {0:?} is missing its parent")]
    NotPrefixClosed(Vec<u64>),
    #[error("depth {depth} exceeds truncation depth {truncation}")]
    BeyondTruncation { depth: usize, truncation: usize },
    #[error("{member} is outside the window [0, {window})")]
    OutsideWindow { member: u64, window: u64 },

    #[error("coloring is improper: edge ({0}, {1}) is monochromatic")]
    ImproperColoring(Vertex, Vertex),
    #[error("coloring leaves vertex {0} uncolored")]
    Uncolored(Vertex),
    #[error("color {color} at vertex {vertex} is outside the palette of {palette}")]
    ColorOutOfPalette { vertex: Vertex, color: usize, palette: usize },
    #[error("trace is not a valid {kind} path: {reason}")]
    InvalidTrace { kind: String, reason: String },

    #[error("promise violated: {0}")]
    PromiseViolation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no index j <= {j_max} satisfies the separation conditions: {witnesses}")]
    NoSeparatingIndex { j_max: usize, witnesses: String },
    #[error("block {block} has {reason}")]
    BlockShape { block: String, reason: String },
    #[error("graph {index} has two distinct Hamilton paths: {first:?} and {second:?}")]
    MultipleHamiltonPaths { index: usize, first: Vec<Vertex>, second: Vec<Vertex> },
    #[error("no Euler path starts at vertex {0}")]
    NoEulerPathFrom(Vertex),

    #[error("parse error: {0}")]
    Parse(String),
}
