// Positions on a circle where every unit window spans the matroid.

use std::error::Error;

use cyclic_matroids::rational::format_rational;
use cyclic_matroids::verify::verify_circle_mapping;
use cyclic_matroids::{
    graph_connected_windows, spanning_windows, strength, Graph, Matroid, Rational,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k4 = Graph::complete(4);
    let m = Matroid::graphic(k4.clone())?;

    let s = strength(&m)?;
    println!("strength {}", format_rational(&s.strength));

    let circle = spanning_windows(&m, s.strength)?;
    for (e, p) in circle.positions.iter().enumerate() {
        println!("  edge {e} at {}", format_rational(p));
    }
    verify_circle_mapping(&m, &circle).map_err(|e| e.to_string())?;

    // every unit window of a circle of length 3/2 keeps K4 connected
    let smaller = graph_connected_windows(&k4, Rational::new(3, 2))?;
    verify_circle_mapping(&m, &smaller).map_err(|e| e.to_string())?;
    println!("circle of length 3/2: every window is connected");

    match spanning_windows(&m, Rational::new(5, 2)) {
        Ok(_) => println!("5/2 unexpectedly fits"),
        Err(e) => println!("5/2 is too long: {e}"),
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
