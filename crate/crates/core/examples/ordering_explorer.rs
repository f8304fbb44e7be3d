// Exhaustive search for orderings the constructive routines do not cover.

use std::error::Error;

use cyclic_matroids::verify::OrderingMode;
use cyclic_matroids::{cyclic_base_ordering, explore_cyclic_ordering, Graph, Matroid};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // K4 has 6 edges and rank 3, so gcd(6, 3) = 3 and the constructive route does not apply
    let k4 = Matroid::graphic(Graph::complete(4))?;
    if let Err(e) = cyclic_base_ordering(&k4) {
        println!("constructive: {e}");
    }
    match explore_cyclic_ordering(&k4, 3, OrderingMode::Base)? {
        Some(order) => println!("search found {order}"),
        None => println!("search: K4 has no cyclic base ordering"),
    }

    // the paw is too dense on its triangle, in any ordering
    let paw = Matroid::graphic(Graph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)])?)?;
    let found = explore_cyclic_ordering(&paw, 3, OrderingMode::Base)?;
    println!(
        "paw: {}",
        found.map_or("none".to_string(), |o| o.to_string())
    );
    let found = explore_cyclic_ordering(&paw, 2, OrderingMode::Independent)?;
    println!(
        "paw, windows of 2 independent: {}",
        found.map_or("none".to_string(), |o| o.to_string())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
