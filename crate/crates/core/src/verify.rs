//! Independent validators and brute-force oracles.
//!
//! Nothing in here reuses the producers' window arithmetic: gon windows are
//! rebuilt by walking each interval point by point, circle windows by modular
//! distance, so a bug in a producer cannot certify its own output.

use std::fmt;

use crate::arboricity::CircleMapping;
use crate::density::{Condition, Violation};
use crate::error::Error;
use crate::matroid::Matroid;
use crate::push::GonMapping;
use crate::rational::{format_rational, Rational};
use crate::subset::Subset;

/// Largest search space `D^m` accepted by [`brute_force_assign`].
pub const BRUTE_FORCE_ASSIGN_LIMIT: u64 = 10_000_000;
/// Largest ground set accepted by [`brute_force_min_cover`].
pub const BRUTE_FORCE_COVER_LIMIT: usize = 8;
/// Largest ground set for the exhaustive axiom checks.
pub const AXIOM_CHECK_LIMIT: usize = 16;

/// What every window must be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowMode {
    Independent,
    Spanning,
}

impl WindowMode {
    pub fn name(self) -> &'static str {
        match self {
            WindowMode::Independent => "independent",
            WindowMode::Spanning => "spanning",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "independent" => Some(WindowMode::Independent),
            "spanning" => Some(WindowMode::Spanning),
            _ => None,
        }
    }

    fn accepts(self, m: &Matroid, window: Subset) -> bool {
        match self {
            WindowMode::Independent => m.is_independent(window),
            WindowMode::Spanning => m.rank(window) == m.full_rank(),
        }
    }
}

/// What every window of a cyclic ordering must be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingMode {
    Base,
    Independent,
}

impl OrderingMode {
    pub fn name(self) -> &'static str {
        match self {
            OrderingMode::Base => "base",
            OrderingMode::Independent => "independent",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "base" => Some(OrderingMode::Base),
            "independent" => Some(OrderingMode::Independent),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    /// The certificate does not even have the right shape.
    Malformed(String),
    /// The window at point `x` is not independent / spanning.
    Point {
        x: Rational,
        window: Subset,
        mode: WindowMode,
    },
    /// The cyclic window starting at index `start` fails.
    Window {
        start: usize,
        window: Subset,
    },
    NotBase(Subset),
    Uncovered(usize),
    /// An element's fractional coverage is below one.
    Undercovered {
        element: usize,
        coverage: Rational,
    },
    Total {
        expected: Rational,
        actual: Rational,
    },
    Axiom(String),
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Malformed(msg) => write!(f, "malformed certificate: {msg}"),
            VerifyFailure::Point { x, window, mode } => write!(
                f,
                "window at point {} = {{{window}}} is not {}",
                format_rational(x),
                mode.name()
            ),
            VerifyFailure::Window { start, window } => {
                write!(
                    f,
                    "cyclic window starting at index {start} = {{{window}}} fails"
                )
            }
            VerifyFailure::NotBase(b) => write!(f, "{{{b}}} is not a base"),
            VerifyFailure::Uncovered(e) => write!(f, "element {e} is not covered"),
            VerifyFailure::Undercovered { element, coverage } => write!(
                f,
                "element {element} has coverage {} < 1",
                format_rational(coverage)
            ),
            VerifyFailure::Total { expected, actual } => write!(
                f,
                "total weight {} differs from {}",
                format_rational(actual),
                format_rational(expected)
            ),
            VerifyFailure::Axiom(msg) => write!(f, "axiom violated: {msg}"),
        }
    }
}

/// Checks all `D` windows of a gon mapping.
pub fn verify_gon_mapping(
    m: &Matroid,
    weights: &[usize],
    gon: usize,
    mapping: &GonMapping,
    mode: WindowMode,
) -> Result<(), VerifyFailure> {
    let n = m.len();
    if mapping.len() != n || weights.len() != n {
        return Err(VerifyFailure::Malformed(format!(
            "mapping has {} elements, weights {}, matroid {n}",
            mapping.len(),
            weights.len()
        )));
    }
    if mapping.gon() != gon || mapping.weights() != weights {
        return Err(VerifyFailure::Malformed(
            "mapping was built for a different gon or weight vector".into(),
        ));
    }
    let mut buckets = vec![Subset::empty(); gon];
    for e in 0..n {
        let start = mapping.position(e);
        if start == 0 || start > gon {
            return Err(VerifyFailure::Malformed(format!(
                "position {start} of {e} off the gon"
            )));
        }
        let mut point = start - 1;
        for _ in 0..weights[e].min(gon) {
            buckets[point].insert(e);
            point = if point + 1 == gon { 0 } else { point + 1 };
        }
    }
    for (i, &window) in buckets.iter().enumerate() {
        if !mode.accepts(m, window) {
            return Err(VerifyFailure::Point {
                x: Rational::from_integer(i as i64 + 1),
                window,
                mode,
            });
        }
    }
    Ok(())
}

/// Elements of a circle mapping inside the unit window `[x, x+1)`.
fn circle_window(positions: &[Rational], d: Rational, x: Rational) -> Subset {
    let one = Rational::from_integer(1);
    positions
        .iter()
        .enumerate()
        .filter(|(_, &p)| modulo(p - x, d) < one)
        .map(|(e, _)| e)
        .collect()
}

fn modulo(x: Rational, d: Rational) -> Rational {
    let r = x % d;
    if r < Rational::from_integer(0) {
        r + d
    } else {
        r
    }
}

/// Points `x` at which a circle mapping's windows must be checked. Membership of
/// `e` in `[x, x+1)` holds exactly for `x ∈ (ψ(e) − 1, ψ(e)]`, so window contents
/// are constant on each `(c_k, c_{k+1}]` between consecutive critical points.
pub fn critical_points(positions: &[Rational], d: Rational) -> Vec<Rational> {
    let one = Rational::from_integer(1);
    let mut points: Vec<Rational> = positions
        .iter()
        .flat_map(|&p| [modulo(p, d), modulo(p - one, d)])
        .collect();
    points.sort_unstable();
    points.dedup();
    points
}

/// Checks every cyclic unit window `[x, x+1)` of a circle mapping.
pub fn verify_circle_mapping(m: &Matroid, mapping: &CircleMapping) -> Result<(), VerifyFailure> {
    let d = mapping.d;
    let zero = Rational::from_integer(0);
    if d <= zero {
        return Err(VerifyFailure::Malformed(
            "circumference must be positive".into(),
        ));
    }
    if mapping.positions.len() != m.len() {
        return Err(VerifyFailure::Malformed(format!(
            "{} positions for {} elements",
            mapping.positions.len(),
            m.len()
        )));
    }
    if let Some((e, p)) = mapping
        .positions
        .iter()
        .enumerate()
        .find(|(_, &p)| p < zero || p >= d)
    {
        return Err(VerifyFailure::Malformed(format!(
            "position {} of element {e} outside [0, {})",
            format_rational(p),
            format_rational(&d)
        )));
    }
    for x in critical_points(&mapping.positions, d) {
        let window = circle_window(&mapping.positions, d, x);
        if !mapping.mode.accepts(m, window) {
            return Err(VerifyFailure::Point {
                x,
                window,
                mode: mapping.mode,
            });
        }
    }
    Ok(())
}

/// Same check on the grid `{ k·step }` instead of the critical points.
pub fn verify_circle_mapping_on_grid(
    m: &Matroid,
    mapping: &CircleMapping,
    step: Rational,
) -> Result<(), VerifyFailure> {
    let mut x = Rational::from_integer(0);
    while x < mapping.d {
        let window = circle_window(&mapping.positions, mapping.d, x);
        if !mapping.mode.accepts(m, window) {
            return Err(VerifyFailure::Point {
                x,
                window,
                mode: mapping.mode,
            });
        }
        x += step;
    }
    Ok(())
}

/// Checks all `m` cyclic windows of length `w`.
pub fn verify_cyclic_ordering(
    m: &Matroid,
    ordering: &[usize],
    w: usize,
    mode: OrderingMode,
) -> Result<(), VerifyFailure> {
    let n = m.len();
    let mut seen = vec![false; n];
    for &e in ordering {
        if e >= n || std::mem::replace(&mut seen[e], true) {
            return Err(VerifyFailure::Malformed(
                "ordering is not a permutation".into(),
            ));
        }
    }
    if ordering.len() != n {
        return Err(VerifyFailure::Malformed(
            "ordering is not a permutation".into(),
        ));
    }
    if w == 0 || w > n {
        return Err(VerifyFailure::Malformed(format!(
            "window length {w} outside 1..={n}"
        )));
    }
    let full = m.full_rank();
    for start in 0..n {
        let window: Subset = (0..w).map(|k| ordering[(start + k) % n]).collect();
        let ok = match mode {
            OrderingMode::Base => window.len() == full && m.rank(window) == full,
            OrderingMode::Independent => m.rank(window) == window.len(),
        };
        if !ok {
            return Err(VerifyFailure::Window { start, window });
        }
    }
    Ok(())
}

/// Every `w` consecutive elements of a (non-cyclic) sequence form a base.
pub fn verify_linear_windows(
    m: &Matroid,
    sequence: &[usize],
    w: usize,
) -> Result<(), VerifyFailure> {
    if sequence.iter().any(|&e| e >= m.len()) {
        return Err(VerifyFailure::Malformed("element out of range".into()));
    }
    if w == 0 || w > sequence.len() {
        return Err(VerifyFailure::Malformed(format!(
            "window length {w} does not fit"
        )));
    }
    let full = m.full_rank();
    for start in 0..=sequence.len() - w {
        let window: Subset = sequence[start..start + w].iter().copied().collect();
        if window.len() != full || m.rank(window) != full {
            return Err(VerifyFailure::Window { start, window });
        }
    }
    Ok(())
}

/// Recomputes both sides of a claimed violation and checks that the
/// inequality really fails. `weights` is ω (unused by the uniformly-dense and
/// strength conditions); `bound` is `D` or `d` (unused by uniformly-dense).
pub fn verify_violation(
    m: &Matroid,
    v: &Violation,
    weights: &[Rational],
    bound: Rational,
) -> Result<(), VerifyFailure> {
    let a = v.witness;
    if !a.is_subset(m.ground_mask()) {
        return Err(VerifyFailure::Malformed(
            "witness outside the ground set".into(),
        ));
    }
    let needs_weights = matches!(
        v.condition,
        Condition::Weighted | Condition::Rational | Condition::Dual
    );
    if needs_weights && weights.len() != m.len() {
        return Err(VerifyFailure::Malformed(
            "weights do not fit the matroid".into(),
        ));
    }
    let int = |n: usize| Rational::from_integer(n as i64);
    let omega: Rational = a
        .iter()
        .map(|e| weights.get(e).copied().unwrap_or_default())
        .sum();
    let full = m.full_rank();
    let drop = full - m.rank(m.ground_mask() - a);
    let (lhs, rhs) = match v.condition {
        Condition::Weighted | Condition::Rational => (omega, bound * int(m.rank(a))),
        Condition::Dual => (omega, bound * int(drop)),
        Condition::UniformlyDense => {
            if m.rank(a) == 0 || full == 0 {
                return Err(VerifyFailure::Malformed("witness has rank zero".into()));
            }
            (
                Rational::new(a.len() as i64, m.rank(a) as i64),
                Rational::new(m.len() as i64, full as i64),
            )
        }
        Condition::Strength => {
            if drop == 0 {
                return Err(VerifyFailure::Malformed(
                    "witness does not drop the rank".into(),
                ));
            }
            (bound, Rational::new(a.len() as i64, drop as i64))
        }
    };
    if lhs != v.lhs || rhs != v.rhs {
        return Err(VerifyFailure::Malformed(format!(
            "recomputed lhs={} rhs={} differ from the claim",
            format_rational(&lhs),
            format_rational(&rhs)
        )));
    }
    if !v.condition.is_broken(&lhs, &rhs) {
        return Err(VerifyFailure::Malformed(
            "the claimed inequality holds on the witness".into(),
        ));
    }
    Ok(())
}

/// Each member is a base and together they cover E.
pub fn verify_cover(m: &Matroid, cover: &[Subset]) -> Result<(), VerifyFailure> {
    let full = m.full_rank();
    let mut union = Subset::empty();
    for &b in cover {
        if !b.is_subset(m.ground_mask()) || b.len() != full || m.rank(b) != full {
            return Err(VerifyFailure::NotBase(b));
        }
        union = union | b;
    }
    match (m.ground_mask() - union).first() {
        Some(e) => Err(VerifyFailure::Uncovered(e)),
        None => Ok(()),
    }
}

/// Bases with non-negative weights, coverage at least one per element, and
/// total exactly `target`.
pub fn verify_fractional(
    m: &Matroid,
    weights: &[(Subset, Rational)],
    target: Rational,
) -> Result<(), VerifyFailure> {
    let zero = Rational::from_integer(0);
    let full = m.full_rank();
    for (b, x) in weights {
        if !b.is_subset(m.ground_mask()) || b.len() != full || m.rank(*b) != full {
            return Err(VerifyFailure::NotBase(*b));
        }
        if *x < zero {
            return Err(VerifyFailure::Malformed(format!(
                "negative weight {}",
                format_rational(x)
            )));
        }
    }
    for e in 0..m.len() {
        let coverage: Rational = weights
            .iter()
            .filter(|(b, _)| b.contains(e))
            .map(|(_, x)| *x)
            .sum();
        if coverage < Rational::from_integer(1) {
            return Err(VerifyFailure::Undercovered {
                element: e,
                coverage,
            });
        }
    }
    let total: Rational = weights.iter().map(|(_, x)| *x).sum();
    if total != target {
        return Err(VerifyFailure::Total {
            expected: target,
            actual: total,
        });
    }
    Ok(())
}

/// Lexicographically first `φ ∈ [D]^E` (element 0 most significant) whose
/// windows are all independent.
pub fn brute_force_assign(
    m: &Matroid,
    weights: &[usize],
    gon: usize,
) -> Result<Option<GonMapping>, Error> {
    brute_force_check_size(m, weights, gon)?;
    Ok(search_assign(m, weights, gon, None))
}

/// [`brute_force_assign`] split over `jobs` threads by the position of element 0;
/// the answer is the same.
pub fn brute_force_assign_parallel(
    m: &Matroid,
    weights: &[usize],
    gon: usize,
    jobs: usize,
) -> Result<Option<GonMapping>, Error> {
    brute_force_check_size(m, weights, gon)?;
    if m.is_empty() || jobs <= 1 {
        return Ok(search_assign(m, weights, gon, None));
    }
    let firsts: Vec<usize> = (1..=gon).collect();
    let mut results: Vec<Option<GonMapping>> = vec![None; gon];
    for chunk in firsts.chunks(gon.div_ceil(jobs)) {
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&p| scope.spawn(move || (p, search_assign(m, weights, gon, Some(p)))))
                .collect();
            for h in handles {
                let (p, found) = h.join().expect("brute-force worker panicked");
                results[p - 1] = found;
            }
        });
    }
    Ok(results.into_iter().flatten().next())
}

fn brute_force_check_size(m: &Matroid, weights: &[usize], gon: usize) -> Result<(), Error> {
    if weights.len() != m.len() || gon == 0 {
        return Err(Error::InvalidArgument(
            "weights or gon size do not fit the matroid".into(),
        ));
    }
    let space = (gon as u64).checked_pow(m.len() as u32);
    match space {
        Some(s) if s <= BRUTE_FORCE_ASSIGN_LIMIT => Ok(()),
        _ => Err(Error::TooLarge {
            what: "brute-force assignment (D^m)",
            size: space.map_or(usize::MAX, |s| s as usize),
            limit: BRUTE_FORCE_ASSIGN_LIMIT as usize,
        }),
    }
}

fn search_assign(
    m: &Matroid,
    weights: &[usize],
    gon: usize,
    first: Option<usize>,
) -> Option<GonMapping> {
    let n = m.len();
    let mut positions = vec![1; n];
    if let (Some(p), true) = (first, n > 0) {
        positions[0] = p;
    }
    let lowest_free = usize::from(first.is_some());
    loop {
        let mapping = GonMapping::new(gon, positions.clone(), weights.to_vec()).ok()?;
        if verify_gon_mapping(m, weights, gon, &mapping, WindowMode::Independent).is_ok() {
            return Some(mapping);
        }
        // odometer, last element fastest
        let mut i = n;
        loop {
            if i == lowest_free {
                return None;
            }
            i -= 1;
            if positions[i] < gon {
                positions[i] += 1;
                break;
            }
            positions[i] = 1;
        }
    }
}

/// Fewest independent sets whose union is E.
pub fn brute_force_min_cover(m: &Matroid) -> Result<usize, Error> {
    let n = m.len();
    if n > BRUTE_FORCE_COVER_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force cover",
            size: n,
            limit: BRUTE_FORCE_COVER_LIMIT,
        });
    }
    m.ensure_loopless()?;
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size)
        .map(|s| m.is_independent(Subset::from_bits(s as u64)))
        .collect();
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let set = Subset::from_bits(s as u64);
        let low = set.first().expect("non-empty");
        let rest = set.without(low);
        for t in rest.subsets() {
            let part = t.with(low);
            if independent[part.bits() as usize] {
                let prev = best[(set - part).bits() as usize];
                best[s] = best[s].min(prev + 1);
            }
        }
    }
    Ok(best[size - 1])
}

/// Normalisation, `r(A) ≤ |A|`, monotonicity and submodularity over every
/// subset (pairwise for `m ≤ 10`, via the equivalent local exchange form above).
pub fn check_rank_axioms(m: &Matroid) -> Result<(), VerifyFailure> {
    let n = m.len();
    if n > AXIOM_CHECK_LIMIT {
        return Err(VerifyFailure::Malformed(format!(
            "{n} elements exceed the axiom-check limit"
        )));
    }
    let size = 1usize << n;
    let rank: Vec<usize> = (0..size)
        .map(|s| m.rank(Subset::from_bits(s as u64)))
        .collect();
    let fail = |msg: String| Err(VerifyFailure::Axiom(msg));
    if rank[0] != 0 {
        return fail("r(∅) ≠ 0".into());
    }
    for s in 0..size {
        let set = Subset::from_bits(s as u64);
        if rank[s] > set.len() {
            return fail(format!("r({{{set}}}) > |A|"));
        }
        for e in m.ground_mask() - set {
            let up = rank[set.with(e).bits() as usize];
            if up < rank[s] || up > rank[s] + 1 {
                return fail(format!(
                    "adding {e} to {{{set}}} changes the rank by more than one or lowers it"
                ));
            }
            if n > 10 {
                for f in (m.ground_mask() - set).iter().filter(|&f| f > e) {
                    let both = rank[set.with(e).with(f).bits() as usize];
                    let other = rank[set.with(f).bits() as usize];
                    if up + other < both + rank[s] {
                        return fail(format!(
                            "local submodularity fails at {{{set}}} with {e}, {f}"
                        ));
                    }
                }
            }
        }
    }
    if n <= 10 {
        for a in 0..size {
            for b in a..size {
                if rank[a | b] + rank[a & b] > rank[a] + rank[b] {
                    return fail(format!(
                        "submodularity fails for {{{}}} and {{{}}}",
                        Subset::from_bits(a as u64),
                        Subset::from_bits(b as u64)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Closure is extensive, monotone and idempotent on every subset.
pub fn check_closure_axioms(m: &Matroid) -> Result<(), VerifyFailure> {
    let n = m.len();
    if n > AXIOM_CHECK_LIMIT {
        return Err(VerifyFailure::Malformed(format!(
            "{n} elements exceed the axiom-check limit"
        )));
    }
    let closures: Vec<Subset> = m.ground_mask().subsets().map(|a| m.closure(a)).collect();
    for a in m.ground_mask().subsets() {
        let cl = closures[a.bits() as usize];
        if !a.is_subset(cl) {
            return Err(VerifyFailure::Axiom(format!(
                "cl({{{a}}}) does not contain A"
            )));
        }
        if closures[cl.bits() as usize] != cl {
            return Err(VerifyFailure::Axiom(format!(
                "cl is not idempotent on {{{a}}}"
            )));
        }
        for e in m.ground_mask() - a {
            if !cl.is_subset(closures[a.with(e).bits() as usize]) {
                return Err(VerifyFailure::Axiom(format!(
                    "cl is not monotone at {{{a}}} + {e}"
                )));
            }
        }
    }
    Ok(())
}
