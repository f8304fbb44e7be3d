//! Exact density bounds and feasibility checks over subsets of the ground set.
//!
//! Every check here is exhaustive. The search runs over flats only: for the
//! maximisations involved, replacing `A` by `cl(A)` keeps the rank and can only
//! add (non-negative) weight, and for the "rank drop" conditions the
//! complement of a flat is the cheapest set with a given drop. Ties between
//! equally extreme sets go to the numerically smallest bitmask.

use std::fmt;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::rational::{format_rational, int, Rational};
use crate::subset::Subset;

/// A matroid with integer weights and a gon size `D`.
#[derive(Clone, Debug)]
pub struct WeightedInstance {
    pub matroid: Matroid,
    pub weights: Vec<usize>,
    pub gon: usize,
}

impl WeightedInstance {
    pub fn new(matroid: Matroid, weights: Vec<usize>, gon: usize) -> Result<Self, Error> {
        if weights.len() != matroid.len() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} elements",
                weights.len(),
                matroid.len()
            )));
        }
        if gon == 0 {
            return Err(Error::InvalidArgument("gon size must be positive".into()));
        }
        Ok(WeightedInstance {
            matroid,
            weights,
            gon,
        })
    }

    /// Every element gets weight `w`.
    pub fn uniform(matroid: Matroid, w: usize, gon: usize) -> Result<Self, Error> {
        let m = matroid.len();
        WeightedInstance::new(matroid, vec![w; m], gon)
    }

    /// ω(A).
    pub fn weight(&self, set: Subset) -> usize {
        set.iter().map(|e| self.weights[e]).sum()
    }
}

/// Which inequality a [`Violation`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// ω(A) ≤ D·r(A)
    Weighted,
    /// |A|/r(A) ≤ |E|/r(E)
    UniformlyDense,
    /// ω(A) ≤ d·r(A)
    Rational,
    /// ω(A) ≥ D·(r(E) − r(E∖A))
    Dual,
    /// d ≤ |A|/(r(E) − r(E∖A))
    Strength,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Weighted => "weighted",
            Condition::UniformlyDense => "uniformly-dense",
            Condition::Rational => "rational",
            Condition::Dual => "dual",
            Condition::Strength => "strength",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            Condition::Weighted,
            Condition::UniformlyDense,
            Condition::Rational,
            Condition::Dual,
            Condition::Strength,
        ]
        .into_iter()
        .find(|c| c.name() == name)
    }

    /// The relation that should have held between `lhs` and `rhs`.
    pub fn relation(self) -> &'static str {
        match self {
            Condition::Weighted | Condition::UniformlyDense | Condition::Rational => "<=",
            Condition::Dual => ">=",
            Condition::Strength => "<=",
        }
    }

    /// Whether `lhs` and `rhs` actually break the relation.
    pub fn is_broken(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self.relation() {
            "<=" => lhs > rhs,
            _ => lhs < rhs,
        }
    }
}

/// Certificate that a condition fails: the witness set and both sides of the
/// inequality evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Subset,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition={} witness={{{}}} lhs={} rhs={} (expected lhs {} rhs)",
            self.condition.name(),
            self.witness,
            format_rational(&self.lhs),
            format_rational(&self.rhs),
            self.condition.relation()
        )
    }
}

/// γ(M) together with a set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub gamma: Rational,
    pub witness: Subset,
}

/// Strength of M together with a set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthReport {
    pub strength: Rational,
    pub witness: Subset,
}

/// γ(M) = max |A|/r(A) over non-empty A.
pub fn max_density(m: &Matroid) -> Result<DensityReport, Error> {
    if m.is_empty() {
        return Err(Error::EmptyGroundSet);
    }
    m.ensure_loopless()?;
    let mut best: Option<DensityReport> = None;
    for flat in m.flats()? {
        if flat.is_empty() {
            continue;
        }
        let density = Rational::new(flat.len() as i64, m.rank(flat) as i64);
        if best.as_ref().is_none_or(|b| density > b.gamma) {
            best = Some(DensityReport {
                gamma: density,
                witness: flat,
            });
        }
    }
    Ok(best.expect("a loopless non-empty matroid has a non-empty flat"))
}

/// ω(A) ≤ D·r(A) for all A. A violation carries a set maximising ω(A) − D·r(A).
pub fn check_weighted(inst: &WeightedInstance) -> Result<(), Error> {
    let m = &inst.matroid;
    let d = inst.gon as i64;
    let mut worst: Option<(i64, Subset)> = None;
    for flat in m.flats()? {
        let excess = inst.weight(flat) as i64 - d * m.rank(flat) as i64;
        if excess > 0 && worst.is_none_or(|(w, _)| excess > w) {
            worst = Some((excess, flat));
        }
    }
    match worst {
        None => Ok(()),
        Some((_, witness)) => Err(Error::Infeasible(Violation {
            condition: Condition::Weighted,
            witness,
            lhs: int(inst.weight(witness)),
            rhs: int(inst.gon * m.rank(witness)),
        })),
    }
}

/// |A|/r(A) ≤ |E|/r(E) for all non-empty A, i.e. γ(M) = |E|/r(E).
pub fn check_uniformly_dense(m: &Matroid) -> Result<(), Error> {
    let report = max_density(m)?;
    let whole = Rational::new(m.len() as i64, m.full_rank() as i64);
    if report.gamma == whole {
        Ok(())
    } else {
        Err(Error::Infeasible(Violation {
            condition: Condition::UniformlyDense,
            witness: report.witness,
            lhs: report.gamma,
            rhs: whole,
        }))
    }
}

pub fn is_uniformly_dense(m: &Matroid) -> Result<bool, Error> {
    match check_uniformly_dense(m) {
        Ok(()) => Ok(true),
        Err(Error::Infeasible(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// ω(A) ≤ d·r(A) for all non-empty A, with rational weights.
pub fn check_rational(m: &Matroid, weights: &[Rational], d: Rational) -> Result<(), Error> {
    if weights.len() != m.len() {
        return Err(Error::InvalidArgument(format!(
            "{} weights for {} elements",
            weights.len(),
            m.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| **w < Rational::from_integer(0)) {
        return Err(Error::InvalidArgument(format!(
            "negative weight {}",
            format_rational(w)
        )));
    }
    let weight = |s: Subset| s.iter().map(|e| weights[e]).sum::<Rational>();
    let mut worst: Option<(Rational, Subset)> = None;
    for flat in m.flats()? {
        let excess = weight(flat) - d * int(m.rank(flat));
        if excess > Rational::from_integer(0) && worst.is_none_or(|(w, _)| excess > w) {
            worst = Some((excess, flat));
        }
    }
    match worst {
        None => Ok(()),
        Some((_, witness)) => Err(Error::Infeasible(Violation {
            condition: Condition::Rational,
            witness,
            lhs: weight(witness),
            rhs: d * int(m.rank(witness)),
        })),
    }
}

/// ω(A) ≥ D·(r(E) − r(E∖A)) for all A. A violation carries a set maximising
/// D·(r(E) − r(E∖A)) − ω(A); such sets are complements of flats.
pub fn check_dual(inst: &WeightedInstance) -> Result<(), Error> {
    let m = &inst.matroid;
    let ground = m.ground_mask();
    let full = m.full_rank();
    let d = inst.gon as i64;
    let mut worst: Option<(i64, Subset)> = None;
    for flat in m.flats()? {
        let a = ground - flat;
        let deficit = d * (full - m.rank(flat)) as i64 - inst.weight(a) as i64;
        let better = match worst {
            None => true,
            Some((w, s)) => deficit > w || (deficit == w && a < s),
        };
        if deficit > 0 && better {
            worst = Some((deficit, a));
        }
    }
    match worst {
        None => Ok(()),
        Some((_, witness)) => Err(Error::Infeasible(Violation {
            condition: Condition::Dual,
            witness,
            lhs: int(inst.weight(witness)),
            rhs: int(inst.gon * (full - m.rank(ground - witness))),
        })),
    }
}

/// min |A|/(r(E) − r(E∖A)) over A with r(E∖A) < r(E): the largest circle
/// circumference admitting spanning unit windows.
pub fn strength(m: &Matroid) -> Result<StrengthReport, Error> {
    m.ensure_loopless()?;
    let full = m.full_rank();
    if full == 0 {
        return Err(Error::RankZero);
    }
    let ground = m.ground_mask();
    let mut best: Option<StrengthReport> = None;
    for flat in m.flats()? {
        let drop = full - m.rank(flat);
        if drop == 0 {
            continue;
        }
        let a = ground - flat;
        let value = Rational::new(a.len() as i64, drop as i64);
        let better = match &best {
            None => true,
            Some(b) => value < b.strength || (value == b.strength && a < b.witness),
        };
        if better {
            best = Some(StrengthReport {
                strength: value,
                witness: a,
            });
        }
    }
    Ok(best.expect("the empty flat's complement drops the rank when r(E) > 0"))
}

/// Violation of the strength bound for a requested circumference `d`.
pub fn check_strength(m: &Matroid, d: Rational) -> Result<StrengthReport, Error> {
    let report = strength(m)?;
    if d > report.strength {
        let drop = m.full_rank() - m.rank(m.ground_mask() - report.witness);
        return Err(Error::Infeasible(Violation {
            condition: Condition::Strength,
            witness: report.witness,
            lhs: d,
            rhs: Rational::new(report.witness.len() as i64, drop as i64),
        }));
    }
    Ok(report)
}
