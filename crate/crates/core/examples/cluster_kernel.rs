//! Kernelizes a graph close to a cluster graph, solves the kernel and lifts
//! the solution back.

use locdom::graph::random::pattern_copies;
use locdom::kernel::cluster::kernelize_cluster;
use locdom::kernel::lift_solution;
use locdom::modulators::{Modulator, ModulatorKind};
use locdom::{is_locating_dominating, lds_number, solve_exact, Instance};

fn main() -> locdom::Result<()> {
    let g = pattern_copies(2, &[vec![0], vec![1], vec![0, 1]], 14);
    let u = Modulator::new(&g, ModulatorKind::Cluster, [42, 43])?;
    let opt = lds_number(&g)?;
    println!("input: n={} m={} modulator={:?} lds={opt}", g.n(), g.m(), u.vertices());

    let (kernel, trace, report) = kernelize_cluster(&Instance::new(g.clone(), opt), Some(&u))?;
    println!("kernel: n={} budget={} rules applied={}", kernel.graph.n(), kernel.budget, trace.records.len());
    for c in &report.checks {
        println!("  {:<45} {:>6} <= {:<6} {}", c.name, c.value, c.bound, if c.holds { "ok" } else { "violated" });
    }

    let small = solve_exact(&kernel.graph, Some(kernel.budget))?.expect("budget is the optimum");
    let lifted = lift_solution(&trace, &small)?;
    println!("lifted: {:?}", lifted.vertices());
    assert!(lifted.len() <= opt);
    assert!(is_locating_dominating(&g, &lifted)?.is_valid());
    Ok(())
}
