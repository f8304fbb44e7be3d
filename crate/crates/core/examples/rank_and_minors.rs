// Build a few matroids and look at ranks, closures, duals and minors.

use std::error::Error;

use cyclic_matroids::verify::check_rank_axioms;
use cyclic_matroids::{Field, Graph, LinearMatrix, Matroid, Subset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k4 = Matroid::graphic(Graph::complete(4))?;
    println!("K4: {} edges, rank {}", k4.len(), k4.full_rank());

    // edges 0, 1, 3 form the triangle on vertices 0, 1, 2
    let triangle = Subset::from_ids([0, 1, 3]);
    println!(
        "rank of the triangle {{{triangle}}} = {}",
        k4.rank(triangle)
    );
    println!(
        "closure of {{0 1}} = {{{}}}",
        k4.closure(Subset::from_ids([0, 1]))
    );

    let dual = k4.dual();
    println!("dual rank = {}", dual.full_rank());
    assert_eq!(dual.full_rank(), k4.len() - k4.full_rank());

    let minor = k4.minor(Subset::singleton(0), Subset::singleton(5))?;
    println!(
        "K4 / 0 \\ 5: {} elements, rank {}",
        minor.len(),
        minor.full_rank()
    );

    let t = k4.truncate(2)?;
    println!(
        "truncation to rank 2: every triangle is now spanning = {}",
        t.rank(triangle) == 2
    );

    // the Fano plane over GF(2)
    let fano = Matroid::linear(LinearMatrix::new(
        Field::Prime(2),
        vec![
            vec![1, 0, 0, 1, 1, 0, 1],
            vec![0, 1, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 1],
        ],
    )?)?;
    println!(
        "Fano: rank {}, {} flats",
        fano.full_rank(),
        fano.flats()?.len()
    );
    check_rank_axioms(&fano).map_err(|e| e.to_string())?;

    let u = Matroid::uniform(2, 4)?;
    println!(
        "U(2,4) is self-dual: {}",
        (0..16u64).all(|b| {
            let a = Subset::from_bits(b);
            u.rank(a) == u.dual().rank(a)
        })
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
