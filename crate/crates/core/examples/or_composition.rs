//! Combines several 2-coloring instances of 3-uniform hypergraphs into one
//! graph and audits a solution against the gadget invariants.

use locdom::reductions::{
    audit_observations, build_or_composition, composition_cover_witnesses, extract_bicoloring, solution_from_bicoloring,
    solve_bicoloring_exact, HypergraphInstance, Variant,
};

fn main() -> locdom::Result<()> {
    let instances = vec![
        HypergraphInstance::fano(),
        HypergraphInstance::new(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])?,
    ];
    let yes = instances
        .iter()
        .enumerate()
        .find_map(|(i, h)| solve_bicoloring_exact(h).ok().flatten().map(|c| (i, c)))
        .expect("one instance is 2-colorable");

    for variant in [Variant::Vc, Variant::Clique] {
        let (g, d, layout) = build_or_composition(&instances, variant)?;
        let cover = composition_cover_witnesses(&layout)?;
        println!("{variant}: n={} m={} budget={d} cover size={}", g.n(), g.m(), cover.vertices().len());

        let s = solution_from_bicoloring(&layout, yes.0, &yes.1)?;
        let audit = audit_observations(&layout, &s)?;
        println!("  instance {} -> solution of size {}, audit passes: {}", yes.0, s.len(), audit.all_pass());
        let (i, coloring) = extract_bicoloring(&layout, &s)?;
        println!("  extracted instance {i}: {coloring:?}");
    }
    Ok(())
}
