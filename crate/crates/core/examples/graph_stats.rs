//! Structural parameters of a few graphs: modulators, twins and max leaf.

use locdom::graph::random::{gnp, rng};
use locdom::graph::{complete, subdivide, twin_classes};
use locdom::kernel::maxleaf::{host_decomposition, max_leaf_via_host};
use locdom::modulators::{
    clique_modulator_2approx, cluster_modulator_3approx, minimum_modulator_size, ModulatorKind,
};
use locdom::Graph;

fn describe(name: &str, g: &Graph) -> locdom::Result<()> {
    let twins = twin_classes(g, None);
    println!("{name}: n={} m={}", g.n(), g.m());
    println!(
        "  cluster modulator {} (min {}), clique modulator {} (min {})",
        cluster_modulator_3approx(g).len(),
        minimum_modulator_size(g, ModulatorKind::Cluster),
        clique_modulator_2approx(g).len(),
        minimum_modulator_size(g, ModulatorKind::Clique),
    );
    println!("  twin classes by size: {:?}", twins.histogram());
    if g.is_connected() && g.n() > 1 {
        let decomp = host_decomposition(g, None)?;
        println!("  subdivision paths {} (longest {}), max leaf {}", decomp.paths.len(), decomp.longest_path(), max_leaf_via_host(g, &decomp)?);
    }
    Ok(())
}

fn main() -> locdom::Result<()> {
    describe("gnp(9, 0.3)", &gnp(&mut rng(1), 9, 0.3))?;
    describe("K4 subdivided twice", &subdivide(&complete(4), 2))?;
    Ok(())
}
