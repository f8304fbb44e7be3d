//! Brute-force reference values over every subset, sharing nothing with the
//! flat-based routines in the library.

use cyclic_matroids::{Matroid, Rational, Subset};

fn all_subsets(m: &Matroid) -> impl Iterator<Item = Subset> {
    (0..1u64 << m.len()).map(Subset::from_bits)
}

/// max |A|/r(A) over non-empty A (M loopless).
pub fn gamma(m: &Matroid) -> Rational {
    all_subsets(m)
        .filter(|a| !a.is_empty())
        .map(|a| Rational::new(a.len() as i64, m.rank(a) as i64))
        .max()
        .unwrap()
}

/// min |A|/(r(E) − r(E∖A)) over A that drop the rank.
pub fn strength(m: &Matroid) -> Rational {
    let full = m.full_rank();
    all_subsets(m)
        .filter_map(|a| {
            let drop = full - m.rank(m.ground_mask() - a);
            (drop > 0).then(|| Rational::new(a.len() as i64, drop as i64))
        })
        .min()
        .unwrap()
}

pub fn weight(w: &[usize], a: Subset) -> usize {
    a.iter().map(|e| w[e]).sum()
}

/// ω(A) ≤ D·r(A) for every A.
pub fn weighted_ok(m: &Matroid, w: &[usize], gon: usize) -> bool {
    all_subsets(m).all(|a| weight(w, a) <= gon * m.rank(a))
}

/// ω(A) ≥ D·(r(E) − r(E∖A)) for every A.
pub fn dual_ok(m: &Matroid, w: &[usize], gon: usize) -> bool {
    let full = m.full_rank();
    all_subsets(m).all(|a| weight(w, a) >= gon * (full - m.rank(m.ground_mask() - a)))
}

/// |A|/r(A) ≤ |E|/r(E) for every non-empty A.
pub fn uniformly_dense(m: &Matroid) -> bool {
    gamma(m) == Rational::new(m.len() as i64, m.full_rank() as i64)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
