//! Locating-dominating sets: kernels with solution lifting, generators for
//! hardness constructions, and an exact solver used as the reference oracle.

pub mod cli;
pub mod error;
pub mod graph;
pub mod kernel;
pub mod lds;
pub mod modulators;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::Graph;
pub use lds::{is_locating_dominating, lds_number, solve_exact, CodeSet, Instance, Verdict, Violation};
