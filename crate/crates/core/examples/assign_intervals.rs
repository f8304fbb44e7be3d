// Place elements on intervals of a gon so every point sees an independent set.

use std::error::Error;

use cyclic_matroids::verify::{brute_force_assign, verify_gon_mapping, WindowMode};
use cyclic_matroids::{
    assign_intervals, assign_intervals_with, EngineConfig, Graph, Matroid, WeightedInstance,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k4 = Matroid::graphic(Graph::complete(4))?;
    let weights = vec![2, 1, 2, 2, 1, 2];
    let gon = 4;
    let inst = WeightedInstance::new(k4.clone(), weights.clone(), gon)?;

    let mapping = assign_intervals(&inst)?;
    println!("positions on the {gon}-gon: {:?}", mapping.positions());
    for x in 1..=gon {
        println!("  point {x}: {{{}}}", mapping.window(x)?);
    }
    verify_gon_mapping(&k4, &weights, gon, &mapping, WindowMode::Independent)
        .map_err(|e| e.to_string())?;

    let config = EngineConfig {
        trace: true,
        ..EngineConfig::default()
    };
    let traced = assign_intervals_with(&inst, &config)?;
    println!(
        "{} pushes, potential never decreased: {}",
        traced.trace.events.len(),
        traced.trace.potential_monotone()
    );
    for line in traced.trace.lines().iter().take(5) {
        println!("  {line}");
    }

    let found = brute_force_assign(&k4, &weights, gon)?;
    println!("exhaustive search agrees: {}", found.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
