//! Exact computation of the nine fundamental domination numbers
//! `γ_{U,W}(G)`, `U, W ∈ {V, E, V∪E}`, together with line and total graph
//! constructions, graph families, and checks of the relations between the
//! nine numbers.
//!
//! ```
//! use domkit::generators::complete;
//! use domkit::graph::ElementDomain::{E, V};
//! use domkit::solver::{domination_number, DominationInstance, DEFAULT_BUDGET};
//!
//! let k6 = complete(6).unwrap();
//! let r = domination_number(&DominationInstance::new(&k6, E, E), DEFAULT_BUDGET).unwrap();
//! assert_eq!(r.value, 3);
//! ```

pub mod bits;
pub mod generators;
pub mod graph;
pub mod io;
pub mod laws;
pub mod solver;
pub mod timer;
pub mod transforms;

pub use graph::{Element, ElementDomain, Graph, GraphError};
pub use solver::{DominationInstance, SolveError, SolveResult, DEFAULT_BUDGET};

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "DOMKIT_BUDGET";
