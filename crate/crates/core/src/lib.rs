#![no_std]
//! Vertex-weighted marked-graph bracket polynomials.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front end and the randomized verification harness live in the
//! companion `mgbracket-cli` crate.

extern crate alloc;

pub mod bracket;
pub mod gf2;
pub mod graph;
pub mod knot;
pub mod reduce;
pub mod ring;

pub use bracket::{bracket, BracketError, BracketValue, Counters, Engine, Evaluator};
pub use gf2::BitMatrix;
pub use graph::{compose, GraphError, MarkedWeightedGraph, Side, VertexRecord};
pub use knot::{EulerCodeDiagram, JonesValue, KnotError};
pub use reduce::{ReduceError, SubsetType, WeightTriple};
pub use ring::{LaurentPoly, Monomial, RingError, VarSym};
