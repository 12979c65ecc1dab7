//! Exact computation of the interval-spectrum statistics of proper edge
//! colorings.
//!
//! For a proper edge `t`-coloring (adjacent edges differ, all `t` colors
//! used) the *spectrum* of a vertex is the set of colors at it, and `f` counts
//! the vertices whose spectrum is a run of consecutive integers. This crate
//! computes `mu1(G, t)` / `mu2(G, t)`, the minimum and maximum of `f` over all
//! proper `t`-colorings, together with their min/max over `t`
//! (`mu11`, `mu12`, `mu21`, `mu22`), the chromatic index, and
//! interval-colorability, and checks the known relations between them.
//!
//! ```
//! use edgemu::{families::FamilySpec, solver::{mu_all, SolverConfig}};
//!
//! let c4 = "cycle:4".parse::<FamilySpec>().unwrap().generate();
//! let result = mu_all(&c4, &SolverConfig::default()).unwrap();
//! let s = result.summary.unwrap();
//! assert_eq!((s.mu11, s.mu12, s.mu21, s.mu22), (1, 4, 3, 4));
//! ```

pub mod coloring;
mod error;
pub mod families;
pub mod graph;
pub mod parse;
pub mod solver;
pub mod verifier;

pub use coloring::EdgeColoring;
pub use error::{Error, Result};
pub use graph::{validate, Graph, GraphError, ValidationReport};
pub use parse::{parse_edge_list, parse_graph6, to_graph6, LabeledGraph, ParseError};
