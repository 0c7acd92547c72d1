//! Shortens long subdivision paths while keeping the optimum recoverable.

use locdom::graph::{spider, theta};
use locdom::kernel::lift_solution;
use locdom::kernel::maxleaf::{host_decomposition, kernelize_maxleaf};
use locdom::{is_locating_dominating, lds_number, solve_exact, Graph, Instance};

fn run(name: &str, g: &Graph) -> locdom::Result<()> {
    let decomp = host_decomposition(g, None)?;
    let opt = lds_number(g)?;
    let (kernel, trace, report) = kernelize_maxleaf(&Instance::new(g.clone(), opt), None)?;
    println!(
        "{name}: n={} longest path={} lds={opt} -> kernel n={} budget={} ml={:?}",
        g.n(),
        decomp.longest_path(),
        kernel.graph.n(),
        kernel.budget,
        report.max_leaf
    );
    let s = solve_exact(&kernel.graph, Some(kernel.budget))?.expect("kernel is a YES instance");
    let lifted = lift_solution(&trace, &s)?;
    assert!(lifted.len() <= opt && is_locating_dominating(g, &lifted)?.is_valid());
    Ok(())
}

fn main() -> locdom::Result<()> {
    run("theta(30, 24, 3)", &theta(&[30, 24, 3]))?;
    run("spider(40, 25, 2)", &spider(&[40, 25, 2]))?;
    Ok(())
}
