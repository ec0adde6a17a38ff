//! Oriented graph colouring toolkit.
//!
//! The crate is organised around five concerns:
//!
//! * [`graph`]: undirected and oriented graphs, generators, orientations, file formats.
//! * [`oclique`]: pair-diameter, oclique recognition, the quadratic-size extremal
//!   oclique family and a Moore-bound cross-check.
//! * [`chromatic`]: oriented and harmonious colouring checkers and solvers.
//! * [`bounds`]: lower/upper bound formulas for the oriented chromatic number.
//! * [`experiment`]: the seeded hypercube-orientation search harness.
//!
//! Vertices are always `0..n`; file formats are 1-based and converted at the I/O boundary.

pub mod bounds;
pub mod chromatic;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod oclique;
pub mod rng;

pub use bounds::{bounds_report, BoundsReport, TSolution};
pub use chromatic::{Budget, Colouring, SearchResult, SearchStats};
pub use error::{Error, Result};
pub use graph::{EdgeOrder, OrientedGraph, UndirectedGraph};
pub use oclique::{pair_diameter, DiameterReport};
