//! Kernelizes a graph that is a clique after deleting a few vertices.

use locdom::graph::random::{near_clique, rng};
use locdom::kernel::cluster::kernelize_clique;
use locdom::kernel::lift_solution;
use locdom::modulators::clique_modulator_2approx;
use locdom::{lds_number, solve_exact, Instance};

fn main() -> locdom::Result<()> {
    let g = near_clique(&mut rng(3), 14, 2, 0.4);
    let u = clique_modulator_2approx(&g);
    let opt = lds_number(&g)?;
    println!("input: n={} m={} modulator size {} lds={opt}", g.n(), g.m(), u.len());

    for d in [opt - 1, opt] {
        let (kernel, trace, report) = kernelize_clique(&Instance::new(g.clone(), d), Some(&u))?;
        let answer = solve_exact(&kernel.graph, Some(kernel.budget))?;
        println!(
            "d={d}: kernel n={} budget={} bounds hold={} answer={}",
            kernel.graph.n(),
            kernel.budget,
            report.all_hold(),
            if answer.is_some() { "YES" } else { "NO" }
        );
        if let Some(s) = answer {
            println!("  lifted: {:?}", lift_solution(&trace, &s)?.vertices());
        }
    }
    Ok(())
}
