//! Kernelization with solution lifting.
//!
//! Every driver returns the reduced instance, a [`KernelTrace`] recording the
//! applied rules in original vertex ids, and a [`SizeReport`] with explicit
//! bound checks. [`lift_solution`] turns a solution of the kernel back into a
//! verified solution of the original graph.

pub mod cluster;
pub mod maxleaf;
mod report;
mod trace;

pub use report::{BoundCheck, SizeReport};
pub use trace::{lift_solution, KernelTrace, Parameter, RuleRecord};
