// Cyclic orderings whose consecutive windows are bases or independent sets.

use std::error::Error;

use cyclic_matroids::verify::{verify_cyclic_ordering, OrderingMode};
use cyclic_matroids::{
    cyclic_base_ordering, cyclic_independent_ordering, exchange_linear_sequence, Graph, Matroid,
    Subset,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // K4 minus an edge: 5 edges of rank 3, and no triangle denser than 5/3
    let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)])?;
    let m = Matroid::graphic(g)?;
    let order = cyclic_base_ordering(&m)?;
    println!("K4 minus an edge: {order}");
    verify_cyclic_ordering(&m, order.elements(), 3, OrderingMode::Base)
        .map_err(|e| e.to_string())?;

    let u = Matroid::uniform(2, 5)?;
    let order = cyclic_base_ordering(&u)?;
    println!("U(2,5): {order}");
    verify_cyclic_ordering(&u, order.elements(), 2, OrderingMode::Base)
        .map_err(|e| e.to_string())?;

    let cycle = Matroid::graphic(Graph::cycle(5))?;
    let order = cyclic_independent_ordering(&cycle, 3)?;
    println!("C5, windows of 3 independent: {order}");
    verify_cyclic_ordering(&cycle, order.elements(), 3, OrderingMode::Independent)
        .map_err(|e| e.to_string())?;

    // two disjoint spanning paths of K4 and a sequence walking from one to the other
    let k4 = Matroid::graphic(Graph::complete(4))?;
    let first = Subset::from_ids([0, 3, 5]);
    let second = Subset::from_ids([1, 2, 4]);
    let sequence = exchange_linear_sequence(&k4, first, second)?;
    println!("exchange sequence: {sequence:?}");
    for window in sequence.windows(3) {
        assert!(k4.is_base(window.iter().copied().collect()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
