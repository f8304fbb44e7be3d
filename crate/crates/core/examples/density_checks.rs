// Density, strength and the feasibility checks, with violation witnesses.

use std::error::Error;

use cyclic_matroids::rational::format_rational;
use cyclic_matroids::verify::verify_violation;
use cyclic_matroids::{
    check_dual, check_uniformly_dense, check_weighted, max_density, strength, Graph, Matroid,
    Rational, WeightedInstance,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a triangle with a pendant edge: the triangle is denser than the whole graph
    let paw = Matroid::graphic(Graph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)])?)?;

    let gamma = max_density(&paw)?;
    println!(
        "max density {} on {{{}}}",
        format_rational(&gamma.gamma),
        gamma.witness
    );
    let s = strength(&paw)?;
    println!(
        "strength {} via {{{}}}",
        format_rational(&s.strength),
        s.witness
    );

    match check_uniformly_dense(&paw) {
        Ok(()) => println!("uniformly dense"),
        Err(e) => println!("not uniformly dense: {e}"),
    }

    // weights 2, 2, 2, 1 on a 3-gon: the triangle needs 6 <= 3 * 2
    let inst = WeightedInstance::new(paw.clone(), vec![2, 2, 2, 1], 3)?;
    check_weighted(&inst)?;
    println!("weights 2 2 2 1 fit on a 3-gon");

    // on a 2-gon the triangle carries 6 > 2 * 2
    let tight = WeightedInstance::new(paw.clone(), vec![2, 2, 2, 1], 2)?;
    let violation = check_weighted(&tight)
        .unwrap_err()
        .violation()
        .cloned()
        .ok_or("expected a violation")?;
    println!("2-gon: {violation}");
    let weights: Vec<Rational> = [2, 2, 2, 1]
        .iter()
        .map(|&x| Rational::from_integer(x))
        .collect();
    verify_violation(&paw, &violation, &weights, Rational::from_integer(2))
        .map_err(|e| e.to_string())?;
    println!("violation rechecked independently");

    match check_dual(&inst) {
        Ok(()) => println!("dual condition holds on the 3-gon"),
        Err(e) => println!("dual condition fails: {e}"),
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
