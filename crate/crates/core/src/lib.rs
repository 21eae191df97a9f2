//! Recursive graph theory at desk scale.
//!
//! Finite graphs and monotone graph streams stand in for infinite computable
//! graphs. On top of them sit online algorithms for bounded streams (coloring
//! with `2k - 1` colors, Euler paths), exhaustive oracles, and the gadget
//! constructions whose colorings and paths encode separating sets and ranges
//! of injections.
//!
//! Every claim about an infinite object is asserted only inside an explicit
//! window: a number of enumeration steps, a spine length, a truncation depth.

pub mod colorability_seq;
pub mod error;
pub mod euler;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod online_coloring;
pub mod oracles;
pub mod separation;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BoundFn, DisjointInjections, Event, FiniteGraph, GraphStream, InjectionStream, NatSet, Tree, Vertex};
pub use oracles::{Coloring, PathKind, PathTrace};
