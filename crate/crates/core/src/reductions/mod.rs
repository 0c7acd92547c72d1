//! Generators for hardness constructions together with certificate maps in
//! both directions, and brute-force oracles for the source problems.
//!
//! * [`build_clique_reduction`] turns a Clique instance `(H, k)` into a graph
//!   with a clique cover of `O(k²)` cliques.
//! * [`build_or_composition_vc`] and [`build_or_composition_clique`] combine
//!   many 3-uniform hypergraph bicoloring instances into one instance whose
//!   vertex cover (resp. distance to clique) is small.

mod clique;
mod composition;
mod hypergraph;
mod layout;

pub use clique::{
    build_clique_reduction, canonical_solution_from_clique, canonical_solution_with_order, clique_cover,
    extract_clique_from_solution, solve_clique_exact, CliqueInstance,
};
pub use composition::{
    audit_observations, build_or_composition, build_or_composition_clique, build_or_composition_vc,
    composition_cover_witnesses, extract_bicoloring, solution_from_bicoloring, AuditEntry, AuditReport, CoverWitness,
    Variant,
};
pub use hypergraph::{is_proper_bicoloring, solve_bicoloring_exact, Color, HypergraphInstance};
pub use layout::{Construction, GadgetLayout};
