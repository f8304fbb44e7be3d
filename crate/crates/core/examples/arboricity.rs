// Circular, integral and fractional arboricity of a graph.

use std::error::Error;

use cyclic_matroids::rational::format_rational;
use cyclic_matroids::verify::{verify_circle_mapping, verify_cover, verify_fractional};
use cyclic_matroids::{
    circular_arboricity, fractional_weights, graph_acyclic_windows, integral_arboricity_cover,
    Graph, Matroid, Rational,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let graph = Graph::new(
        5,
        vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 3)],
    )?;
    let m = Matroid::graphic(graph.clone())?;

    let (d, circle) = circular_arboricity(&m)?;
    println!("circular arboricity {}", format_rational(&d));
    for (e, p) in circle.positions.iter().enumerate() {
        println!("  edge {e} starts at {}", format_rational(p));
    }
    verify_circle_mapping(&m, &circle).map_err(|e| e.to_string())?;

    let cover = integral_arboricity_cover(&m)?;
    println!("covered by {} forests", cover.bases.len());
    for b in &cover.bases {
        println!("  {{{b}}}");
    }
    verify_cover(&m, &cover.bases).map_err(|e| e.to_string())?;

    let frac = fractional_weights(&m)?;
    println!(
        "fractional cover of total {}",
        format_rational(&frac.total())
    );
    for (b, x) in frac.to_vec() {
        println!("  {} : {{{b}}}", format_rational(&x));
    }
    verify_fractional(&m, &frac.to_vec(), d).map_err(|e| e.to_string())?;

    // any larger circle also works
    let wider = graph_acyclic_windows(&graph, Rational::new(5, 2))?;
    verify_circle_mapping(&m, &wider).map_err(|e| e.to_string())?;
    println!("circle of length 5/2 also works");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
