//! Integral, fractional and circular arboricity with certificates, and circle
//! placements whose unit windows all span.

use std::collections::BTreeMap;

use crate::density::{check_rational, check_strength, max_density, WeightedInstance};
use crate::error::Error;
use crate::matroid::{Graph, Matroid};
use crate::push::assign_intervals;
use crate::rational::{format_rational, Rational};
use crate::subset::Subset;
use crate::verify::{verify_circle_mapping, verify_cover, verify_fractional, WindowMode};

/// A placement of the elements on a circle of circumference `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleMapping {
    pub d: Rational,
    /// `ψ(e) ∈ [0, d)`.
    pub positions: Vec<Rational>,
    pub mode: WindowMode,
}

impl CircleMapping {
    /// Elements in the unit window `[x, x+1)`.
    pub fn window(&self, x: Rational) -> Subset {
        let one = Rational::from_integer(1);
        let mut set = Subset::empty();
        for (e, &p) in self.positions.iter().enumerate() {
            let mut offset = (p - x) % self.d;
            if offset < Rational::from_integer(0) {
                offset += self.d;
            }
            if offset < one {
                set.insert(e);
            }
        }
        set
    }
}

/// Bases whose union is the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCover {
    pub bases: Vec<Subset>,
}

/// Non-negative weights on bases covering every element at least once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionalWeights {
    pub weights: BTreeMap<Subset, Rational>,
}

impl FractionalWeights {
    pub fn total(&self) -> Rational {
        self.weights.values().copied().sum()
    }

    pub fn coverage(&self, e: usize) -> Rational {
        self.weights
            .iter()
            .filter(|(b, _)| b.contains(e))
            .map(|(_, x)| *x)
            .sum()
    }

    pub fn to_vec(&self) -> Vec<(Subset, Rational)> {
        self.weights.iter().map(|(b, x)| (*b, *x)).collect()
    }
}

/// Placement on a circle of circumference `d` with every unit window
/// independent, or the violation of `|A| ≤ d·r(A)`.
pub fn independent_windows(m: &Matroid, d: Rational) -> Result<CircleMapping, Error> {
    m.ensure_loopless()?;
    if d <= Rational::from_integer(0) {
        return Err(Error::InvalidArgument(format!(
            "circumference {} must be positive",
            format_rational(&d)
        )));
    }
    check_rational(m, &vec![Rational::from_integer(1); m.len()], d)?;
    let (p, q) = (*d.numer() as usize, *d.denom() as usize);
    let mapping = assign_intervals(&WeightedInstance::uniform(m.clone(), q, p)?)?;
    let circle = CircleMapping {
        d,
        positions: scale_positions(mapping.positions(), q),
        mode: WindowMode::Independent,
    };
    if let Err(fail) = verify_circle_mapping(m, &circle) {
        return Err(Error::EngineDefect(format!(
            "circle mapping rejected: {fail}"
        )));
    }
    Ok(circle)
}

/// `ψ(e) = (φ(e) − 1)/Q`.
fn scale_positions(gon_positions: &[usize], q: usize) -> Vec<Rational> {
    gon_positions
        .iter()
        .map(|&p| Rational::new(p as i64 - 1, q as i64))
        .collect()
}

/// The least circumference `d = γ(M)` admitting independent unit windows, with
/// a placement attaining it.
pub fn circular_arboricity(m: &Matroid) -> Result<(Rational, CircleMapping), Error> {
    let gamma = max_density(m)?.gamma;
    Ok((gamma, independent_windows(m, gamma)?))
}

/// `⌈γ(M)⌉` bases covering E: the unit slices `[i−1, i)` of the optimal circle
/// placement, each extended greedily to a base.
pub fn integral_arboricity_cover(m: &Matroid) -> Result<BaseCover, Error> {
    let (gamma, circle) = circular_arboricity(m)?;
    let k = gamma.ceil().to_integer();
    let mut bases = Vec::with_capacity(k as usize);
    for i in 1..=k {
        let (lo, hi) = (Rational::from_integer(i - 1), Rational::from_integer(i));
        let slice: Subset = (0..m.len())
            .filter(|&e| circle.positions[e] >= lo && circle.positions[e] < hi)
            .collect();
        if !m.is_independent(slice) {
            return Err(Error::EngineDefect(format!(
                "slice {{{slice}}} is dependent"
            )));
        }
        bases.push(m.extend_to_base(slice));
    }
    if let Err(fail) = verify_cover(m, &bases) {
        return Err(Error::EngineDefect(format!("cover rejected: {fail}")));
    }
    Ok(BaseCover { bases })
}

/// Weights on bases summing to exactly `γ(M)` with every element covered at
/// least once.
///
/// Elements are sorted by position (ties by id). The base extending the window
/// that starts at `ψ(e_i)` gets the gap `ψ(e_i) − ψ(e_{i−1})` before it: every
/// window starting inside that gap is contained in the one starting at `ψ(e_i)`.
pub fn fractional_weights(m: &Matroid) -> Result<FractionalWeights, Error> {
    let (gamma, circle) = circular_arboricity(m)?;
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by_key(|&e| (circle.positions[e], e));
    let mut out = FractionalWeights::default();
    for (i, &e) in order.iter().enumerate() {
        let here = circle.positions[e];
        let gap = match i {
            0 => here + circle.d - circle.positions[order[order.len() - 1]],
            _ => here - circle.positions[order[i - 1]],
        };
        if gap == Rational::from_integer(0) {
            continue;
        }
        let base = m.extend_to_base(circle.window(here));
        *out.weights
            .entry(base)
            .or_insert_with(|| Rational::from_integer(0)) += gap;
    }
    if let Err(fail) = verify_fractional(m, &out.to_vec(), gamma) {
        return Err(Error::EngineDefect(format!(
            "fractional weights rejected: {fail}"
        )));
    }
    Ok(out)
}

/// Placement on a circle of circumference `d` with every unit window spanning,
/// or the violation of `d ≤ |A|/(r(E) − r(E∖A))`.
///
/// Solves the independent-window problem on the dual with weight `P − Q` on a
/// `P`-gon and takes complementary intervals.
pub fn spanning_windows(m: &Matroid, d: Rational) -> Result<CircleMapping, Error> {
    m.ensure_loopless()?;
    if m.full_rank() == 0 {
        return Err(Error::RankZero);
    }
    let one = Rational::from_integer(1);
    if d <= Rational::from_integer(0) {
        return Err(Error::InvalidArgument(format!(
            "circumference {} must be positive",
            format_rational(&d)
        )));
    }
    check_strength(m, d)?;
    let circle = if d <= one {
        // every unit window is the whole circle
        CircleMapping {
            d,
            positions: vec![Rational::from_integer(0); m.len()],
            mode: WindowMode::Spanning,
        }
    } else {
        let (p, q) = (*d.numer() as usize, *d.denom() as usize);
        let co_weight = p - q;
        let dual = WeightedInstance::uniform(m.dual(), co_weight, p)?;
        let co = assign_intervals(&dual)?;
        let shifted: Vec<usize> = co
            .positions()
            .iter()
            .map(|&x| (x - 1 + co_weight) % p + 1)
            .collect();
        CircleMapping {
            d,
            positions: scale_positions(&shifted, q),
            mode: WindowMode::Spanning,
        }
    };
    if let Err(fail) = verify_circle_mapping(m, &circle) {
        return Err(Error::EngineDefect(format!(
            "circle mapping rejected: {fail}"
        )));
    }
    Ok(circle)
}

/// Edge placement on a circle of circumference `d` with every unit window a
/// forest.
pub fn graph_acyclic_windows(g: &Graph, d: Rational) -> Result<CircleMapping, Error> {
    independent_windows(&Matroid::graphic(g.clone())?, d)
}

/// Edge placement on a circle of circumference `d` with every unit window a
/// connected spanning subgraph.
pub fn graph_connected_windows(g: &Graph, d: Rational) -> Result<CircleMapping, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    spanning_windows(&Matroid::graphic(g.clone())?, d)
}
