//! Encodes a Clique instance as a locating-dominating set instance, then
//! decodes a clique from a solution.

use locdom::graph::cycle;
use locdom::reductions::{
    build_clique_reduction, canonical_solution_from_clique, extract_clique_from_solution, solve_clique_exact,
    CliqueInstance,
};
use locdom::is_locating_dominating;

fn main() -> locdom::Result<()> {
    let mut h = cycle(5);
    h.add_edge(0, 2);
    let k = 3;
    let (g, d, layout) = build_clique_reduction(&CliqueInstance::new(h.clone(), k)?)?;
    println!("H: n={} m={} k={k} -> G: n={} m={} budget={d}", h.n(), h.m(), g.n(), g.m());

    let clique = solve_clique_exact(&h, k).expect("H has a triangle");
    let s = canonical_solution_from_clique(&layout, &clique)?;
    assert!(s.len() <= d && is_locating_dominating(&g, &s)?.is_valid());
    println!("clique {clique:?} -> solution of size {}", s.len());
    println!("decoded back: {:?}", extract_clique_from_solution(&layout, &s)?);
    Ok(())
}
