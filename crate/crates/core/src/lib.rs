//! Model checking for low rank MSO and related graph logics, with the
//! combinatorial engines behind it: cutrank over F2 and Q, definable flips,
//! suffix and seed enumeration of low-rank sets, and capture separations.

pub mod cli;
pub mod error;
pub mod eval;
pub mod flip;
pub mod generators;
pub mod graph;
pub mod hflip;
pub mod io;
pub mod logic;
pub mod lowrank;
pub mod rank;
pub mod scc;
pub mod separation;
pub mod vc;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{ColoredGraph, Digraph};
pub use vset::VertexSet;
