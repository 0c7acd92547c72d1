//! Computes a minimum locating-dominating set and checks it.

use locdom::graph::{cycle, path, star};
use locdom::{is_locating_dominating, lds_number, solve_exact, CodeSet};

fn main() -> locdom::Result<()> {
    for (name, g) in [("P7", path(7)), ("C8", cycle(8)), ("K1,4", star(4))] {
        let d = solve_exact(&g, None)?.expect("no limit given");
        println!("{name}: n={} lds={} solution={:?}", g.n(), d.len(), d.vertices());
        assert!(is_locating_dominating(&g, &d)?.is_valid());
        assert_eq!(lds_number(&g)?, d.len());
    }

    let g = path(4);
    let bad = CodeSet::from_iter([0, 3]);
    println!("P4 with {{0, 3}}: {:?}", is_locating_dominating(&g, &bad)?);
    println!("P4 within budget 1: {:?}", solve_exact(&g, Some(1))?);
    Ok(())
}
