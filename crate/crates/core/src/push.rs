//! Cyclic interval assignment on the D-gon by deterministic pushes.
//!
//! Each element `e` of weight `ω(e)` occupies the cyclic interval
//! `[φ(e), φ(e) + ω(e))` of the gon `1..=D`, and the window at `x` is the set
//! of elements whose interval covers `x`. Starting from `φ ≡ 1`, the engine
//! repeatedly pushes the first pushable element (one lying on a circuit of the
//! window at its own start point) one step forward and moves it to the back of
//! the priority ordering. Pushes never shrink the span of any window, so either
//! every window becomes independent or the (mapping, ordering) state repeats.
//!
//! On a repeat, the elements pushed during the period form a closed set `E^U`
//! and the rest, `E^B`, sit still with positions that are already valid modulo
//! `E^U`. The engine keeps those positions and recurses on the restriction to
//! `E^U`. Zero-weight elements are deleted and full-weight elements (`ω = D`)
//! contracted before the loop starts.
//!
//! All of this is checked while it runs: the period's span invariance, the
//! closedness of `E^U`, independence of the frozen part in `M / E^U`, and the
//! validity of every combined mapping. A failed check is reported as
//! [`Error::EngineDefect`].

use std::collections::HashMap;
use std::fmt;

use crate::density::{check_weighted, WeightedInstance};
use crate::error::Error;
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::verify::{verify_gon_mapping, WindowMode};

/// Default bound on distinct states visited by one push loop.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// A map `φ: E → {1..D}` together with the element weights it is read against.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GonMapping {
    gon: usize,
    positions: Vec<usize>,
    weights: Vec<usize>,
}

impl GonMapping {
    pub fn new(gon: usize, positions: Vec<usize>, weights: Vec<usize>) -> Result<Self, Error> {
        if gon == 0 {
            return Err(Error::InvalidArgument("gon size must be positive".into()));
        }
        if positions.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "{} positions for {} weights",
                positions.len(),
                weights.len()
            )));
        }
        if let Some(e) = positions.iter().position(|&p| p == 0 || p > gon) {
            return Err(Error::InvalidArgument(format!(
                "position {} of element {e} outside 1..={gon}",
                positions[e]
            )));
        }
        Ok(GonMapping {
            gon,
            positions,
            weights,
        })
    }

    /// Every element at position 1.
    pub fn constant(gon: usize, weights: Vec<usize>) -> Self {
        GonMapping {
            gon,
            positions: vec![1; weights.len()],
            weights,
        }
    }

    pub fn gon(&self) -> usize {
        self.gon
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, e: usize) -> usize {
        self.positions[e]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn weight(&self, e: usize) -> usize {
        self.weights[e]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Whether `x ∈ J(e) = [φ(e), φ(e) + ω(e))` on the gon.
    pub fn covers(&self, e: usize, x: usize) -> bool {
        let offset = (x + self.gon - self.positions[e]) % self.gon;
        offset < self.weights[e]
    }

    /// E_φ(x).
    pub fn window(&self, x: usize) -> Result<Subset, Error> {
        if x == 0 || x > self.gon {
            return Err(Error::InvalidArgument(format!(
                "point {x} outside 1..={}",
                self.gon
            )));
        }
        Ok(self.window_at(x))
    }

    fn window_at(&self, x: usize) -> Subset {
        (0..self.len()).filter(|&e| self.covers(e, x)).collect()
    }

    /// The gon points in J(e), starting at φ(e).
    pub fn interval(&self, e: usize) -> Vec<usize> {
        let len = self.weights[e].min(self.gon);
        (0..len).map(|k| self.step(self.positions[e], k)).collect()
    }

    /// Σ_x |E_φ(x)|, which always equals ω(E) when every ω(e) ≤ D.
    pub fn incidence_count(&self) -> usize {
        (1..=self.gon).map(|x| self.window_at(x).len()).sum()
    }

    /// Σ_x r(E_φ(x)), the quantity pushes never decrease.
    pub fn potential(&self, m: &Matroid) -> usize {
        (1..=self.gon).map(|x| m.rank(self.window_at(x))).sum()
    }

    /// `p + k` on the gon.
    fn step(&self, p: usize, k: usize) -> usize {
        (p - 1 + k) % self.gon + 1
    }
}

/// Whether `e` lies on a circuit of the window at its own start point.
pub fn pushable(m: &Matroid, mapping: &GonMapping, e: usize) -> bool {
    if mapping.weight(e) == 0 {
        return false;
    }
    let w = mapping.window_at(mapping.position(e));
    m.rank(w.without(e)) == m.rank(w)
}

/// A mapping plus the priority ordering that decides which element is pushed next.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PushState {
    mapping: GonMapping,
    ordering: Vec<usize>,
}

/// What one push did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PushStep {
    pub element: usize,
    pub from: usize,
    pub to: usize,
    /// The push strictly enlarged the span of the window it entered.
    pub strict: bool,
}

impl PushState {
    /// Ordering starts as `0, 1, .., m-1`.
    pub fn new(mapping: GonMapping) -> Self {
        let ordering = (0..mapping.len()).collect();
        PushState { mapping, ordering }
    }

    pub fn with_ordering(mapping: GonMapping, ordering: Vec<usize>) -> Result<Self, Error> {
        let mut sorted = ordering.clone();
        sorted.sort_unstable();
        if sorted != (0..mapping.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(
                "ordering is not a permutation of the ground set".into(),
            ));
        }
        Ok(PushState { mapping, ordering })
    }

    pub fn mapping(&self) -> &GonMapping {
        &self.mapping
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn into_mapping(self) -> GonMapping {
        self.mapping
    }

    /// Moves `e` one step forward (D wraps to 1) and to the back of the ordering.
    pub fn push(&mut self, m: &Matroid, e: usize) -> Result<PushStep, Error> {
        if !pushable(m, &self.mapping, e) {
            return Err(Error::NotPushable(e));
        }
        let map = &self.mapping;
        let from = map.position(e);
        let to = map.step(from, 1);
        let entered = map.step(from, map.weight(e));
        let left_window = map.window_at(from);
        let entered_window = map.window_at(entered);
        let gon = map.gon;
        let full_cover = map.weight(e) >= gon;

        self.mapping.positions[e] = to;
        let idx = self
            .ordering
            .iter()
            .position(|&f| f == e)
            .expect("ordering is a permutation");
        self.ordering.remove(idx);
        self.ordering.push(e);

        let strict = if full_cover {
            false
        } else {
            if m.rank(left_window.without(e)) != m.rank(left_window) {
                return Err(Error::EngineDefect(format!(
                    "push of {e} shrank the span of the window at {from}"
                )));
            }
            m.rank(entered_window.with(e)) > m.rank(entered_window)
        };
        Ok(PushStep {
            element: e,
            from,
            to,
            strict,
        })
    }

    /// Hashable snapshot: positions followed by the ordering.
    fn key(&self) -> Vec<u32> {
        self.mapping
            .positions
            .iter()
            .chain(self.ordering.iter())
            .map(|&v| v as u32)
            .collect()
    }
}

/// The first element of the ordering that is pushable, if any.
pub fn first_pushable(m: &Matroid, state: &PushState) -> Option<usize> {
    state
        .ordering
        .iter()
        .copied()
        .find(|&e| pushable(m, &state.mapping, e))
}

/// Split found on a period of the push loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// E^U: elements pushed during the period.
    pub unbounded: Subset,
    /// E^B: elements that never moved during the period.
    pub bounded: Subset,
    /// Positions of the bounded elements, `(element, position)`.
    pub frozen: Vec<(usize, usize)>,
}

/// Result of running the push loop from some state.
#[derive(Clone, Debug)]
pub enum LoopOutcome {
    /// Every window is independent.
    Valid(GonMapping),
    /// The state at `cycle_start` recurred after pushing `segment` in order.
    Period {
        cycle_start: PushState,
        segment: Vec<usize>,
    },
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Abort a push loop after this many distinct states.
    pub state_cap: usize,
    /// Record every push and period in a [`PushTrace`].
    pub trace: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            state_cap: DEFAULT_STATE_CAP,
            trace: false,
        }
    }
}

/// One recorded push, with element ids of the top-level instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushEvent {
    /// Which push loop (sub-problem) this push belongs to.
    pub run: usize,
    pub step: usize,
    pub element: usize,
    pub from: usize,
    pub to: usize,
    pub strict: bool,
    /// Σ_x r(E_φ(x)) of the sub-problem after the push.
    pub potential: usize,
}

impl fmt::Display for PushEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step {}: push {} from {} to {} [{}]",
            self.step,
            self.element,
            self.from,
            self.to,
            if self.strict { "strict" } else { "neutral" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodSummary {
    pub run: usize,
    /// Step at which the repeated state first occurred.
    pub start: usize,
    pub length: usize,
    pub unbounded: Subset,
    pub bounded: Subset,
}

impl fmt::Display for PeriodSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "period: run {} repeats from step {} with T = {}; unbounded {{{}}}, bounded {{{}}}",
            self.run, self.start, self.length, self.unbounded, self.bounded
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PushTrace {
    /// Potential of each run before its first push, indexed by run.
    pub initial_potentials: Vec<usize>,
    pub events: Vec<PushEvent>,
    pub periods: Vec<PeriodSummary>,
}

impl PushTrace {
    /// Trace lines in emission order: pushes, then period summaries as they occur.
    pub fn lines(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let mut periods = self.periods.iter().peekable();
        for ev in &self.events {
            while let Some(p) = periods.peek() {
                if p.run < ev.run {
                    lines.push(p.to_string());
                    periods.next();
                } else {
                    break;
                }
            }
            lines.push(ev.to_string());
        }
        lines.extend(periods.map(ToString::to_string));
        lines
    }

    /// Whether the recorded potential never decreased within any run.
    pub fn potential_monotone(&self) -> bool {
        let mut last: HashMap<usize, usize> = self
            .initial_potentials
            .iter()
            .copied()
            .enumerate()
            .collect();
        for ev in &self.events {
            let prev = last.insert(ev.run, ev.potential);
            if prev.is_some_and(|p| p > ev.potential) {
                return false;
            }
        }
        true
    }
}

/// A mapping together with the trace of how it was found.
#[derive(Clone, Debug)]
pub struct Assignment {
    pub mapping: GonMapping,
    pub trace: PushTrace,
}

/// Runs the deterministic push loop from `state` until every window is
/// independent or a state repeats.
pub fn run_push_loop(
    m: &Matroid,
    state: PushState,
    config: &EngineConfig,
) -> Result<LoopOutcome, Error> {
    run_loop(m, state, config, &mut |_, _| {})
}

fn run_loop(
    m: &Matroid,
    mut state: PushState,
    config: &EngineConfig,
    on_push: &mut dyn FnMut(&PushStep, &PushState),
) -> Result<LoopOutcome, Error> {
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut pushed: Vec<usize> = Vec::new();
    loop {
        let Some(e) = first_pushable(m, &state) else {
            return Ok(LoopOutcome::Valid(state.mapping));
        };
        let key = state.key();
        if let Some(&start) = seen.get(&key) {
            return Ok(LoopOutcome::Period {
                cycle_start: state,
                segment: pushed.split_off(start),
            });
        }
        seen.insert(key, pushed.len());
        if seen.len() > config.state_cap {
            return Err(Error::StateCapExceeded(config.state_cap));
        }
        let step = state.push(m, e)?;
        pushed.push(e);
        on_push(&step, &state);
    }
}

/// Splits the ground set along a detected period and checks the structure the
/// recursion relies on:
/// - both parts are non-empty;
/// - every window keeps the same span throughout the period;
/// - no bounded element lies on a circuit of any window;
/// - `cl(E^U) = E^U`;
/// - each window's bounded part is independent in `M / E^U`.
pub fn decompose_on_cycle(
    m: &Matroid,
    cycle_start: &PushState,
    segment: &[usize],
) -> Result<Decomposition, Error> {
    let defect = |msg: String| Err(Error::EngineDefect(msg));
    let unbounded: Subset = segment.iter().copied().collect();
    let bounded = m.ground_mask() - unbounded;
    if unbounded.is_empty() {
        return defect("period without pushes".into());
    }
    if bounded.is_empty() {
        return defect("every element is pushed during the period".into());
    }

    let map = cycle_start.mapping();
    let gon = map.gon();
    let spans: Vec<Subset> = (1..=gon).map(|x| m.closure(map.window_at(x))).collect();
    let mut replay = cycle_start.clone();
    for &e in segment {
        replay.push(m, e)?;
        for x in 1..=gon {
            if m.closure(replay.mapping.window_at(x)) != spans[x - 1] {
                return defect(format!(
                    "span of the window at {x} changed during the period"
                ));
            }
        }
    }
    if &replay != cycle_start {
        return defect("replaying the period does not return to its start".into());
    }
    if let Some(e) = bounded
        .iter()
        .find(|&e| replay.mapping.position(e) != map.position(e))
    {
        return defect(format!("bounded element {e} moved during the period"));
    }

    if m.closure(unbounded) != unbounded {
        return defect(format!("unbounded set {{{unbounded}}} is not closed"));
    }
    let unbounded_rank = m.rank(unbounded);
    for x in 1..=gon {
        let w = map.window_at(x);
        let frozen_part = w & bounded;
        for e in frozen_part {
            if m.rank(w.without(e)) == m.rank(w) {
                return defect(format!(
                    "bounded element {e} lies on a circuit of the window at {x}"
                ));
            }
        }
        if m.rank(frozen_part | unbounded) - unbounded_rank != frozen_part.len() {
            return defect(format!(
                "bounded part of the window at {x} is dependent modulo the unbounded set"
            ));
        }
    }
    Ok(Decomposition {
        unbounded,
        bounded,
        frozen: bounded.iter().map(|e| (e, map.position(e))).collect(),
    })
}

/// A mapping `φ` whose every window is independent, or the violation of
/// `ω(A) ≤ D·r(A)` showing none exists.
pub fn assign_intervals(inst: &WeightedInstance) -> Result<GonMapping, Error> {
    assign_intervals_with(inst, &EngineConfig::default()).map(|a| a.mapping)
}

pub fn assign_intervals_with(
    inst: &WeightedInstance,
    config: &EngineConfig,
) -> Result<Assignment, Error> {
    check_weighted(inst)?;
    let mut engine = Engine {
        config,
        trace: PushTrace::default(),
    };
    let ids: Vec<usize> = (0..inst.matroid.len()).collect();
    let positions = engine.solve(&inst.matroid, &inst.weights, inst.gon, &ids)?;
    let mapping = GonMapping::new(inst.gon, positions, inst.weights.clone())?;
    if let Err(fail) = verify_gon_mapping(
        &inst.matroid,
        &inst.weights,
        inst.gon,
        &mapping,
        WindowMode::Independent,
    ) {
        return Err(Error::EngineDefect(format!(
            "final mapping rejected: {fail}"
        )));
    }
    Ok(Assignment {
        mapping,
        trace: engine.trace,
    })
}

struct Engine<'a> {
    config: &'a EngineConfig,
    trace: PushTrace,
}

impl Engine<'_> {
    /// Positions for `m` (whose element `i` is `ids[i]` at top level).
    /// Assumes `ω(A) ≤ D·r(A)` holds for `m`.
    fn solve(
        &mut self,
        m: &Matroid,
        weights: &[usize],
        gon: usize,
        ids: &[usize],
    ) -> Result<Vec<usize>, Error> {
        let n = m.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let zero: Subset = (0..n).filter(|&e| weights[e] == 0).collect();
        if !zero.is_empty() {
            return self.solve_minor(m, weights, gon, ids, Subset::empty(), zero);
        }
        let full: Subset = (0..n).filter(|&e| weights[e] >= gon).collect();
        if !full.is_empty() {
            if let Some(e) = full.iter().find(|&e| weights[e] > gon) {
                return Err(Error::EngineDefect(format!(
                    "element {e} outweighs the gon"
                )));
            }
            if !m.is_independent(full) {
                return Err(Error::EngineDefect(
                    "full-weight elements are dependent".into(),
                ));
            }
            return self.solve_minor(m, weights, gon, ids, full, Subset::empty());
        }

        let run = self.trace.initial_potentials.len();
        let tracing = self.config.trace;
        let start = PushState::new(GonMapping::constant(gon, weights.to_vec()));
        if tracing {
            self.trace
                .initial_potentials
                .push(start.mapping.potential(m));
        }
        let mut step_no = 0;
        let events = &mut self.trace.events;
        let outcome = run_loop(m, start, self.config, &mut |step, state| {
            step_no += 1;
            if tracing {
                events.push(PushEvent {
                    run,
                    step: step_no,
                    element: ids[step.element],
                    from: step.from,
                    to: step.to,
                    strict: step.strict,
                    potential: state.mapping.potential(m),
                });
            }
        })?;
        if !tracing {
            // keep run numbering consistent whether or not events are recorded
            self.trace.initial_potentials.push(0);
        }

        let (cycle_start, segment) = match outcome {
            LoopOutcome::Valid(mapping) => return Ok(mapping.positions),
            LoopOutcome::Period {
                cycle_start,
                segment,
            } => (cycle_start, segment),
        };
        let split = decompose_on_cycle(m, &cycle_start, &segment)?;
        if tracing {
            let lift = |s: Subset| s.iter().map(|e| ids[e]).collect::<Subset>();
            self.trace.periods.push(PeriodSummary {
                run,
                start: step_no - segment.len(),
                length: segment.len(),
                unbounded: lift(split.unbounded),
                bounded: lift(split.bounded),
            });
        }

        let sub = m.restrict(split.unbounded)?;
        let kept = split.unbounded.to_vec();
        let sub_weights: Vec<usize> = kept.iter().map(|&e| weights[e]).collect();
        let sub_ids: Vec<usize> = kept.iter().map(|&e| ids[e]).collect();
        let sub_positions = self.solve(&sub, &sub_weights, gon, &sub_ids)?;

        let mut positions = cycle_start.mapping.positions.clone();
        for (i, &e) in kept.iter().enumerate() {
            positions[e] = sub_positions[i];
        }
        self.check_level(m, weights, gon, positions)
    }

    /// Solve on `m / contract \ delete` and give the removed elements position 1.
    fn solve_minor(
        &mut self,
        m: &Matroid,
        weights: &[usize],
        gon: usize,
        ids: &[usize],
        contract: Subset,
        delete: Subset,
    ) -> Result<Vec<usize>, Error> {
        let sub = m.minor(contract, delete)?;
        if !contract.is_empty() {
            if let Some(e) = sub.loops().first() {
                return Err(Error::EngineDefect(format!(
                    "contracting full-weight elements created loop {e}"
                )));
            }
        }
        let kept = m.minor_ids(contract, delete);
        let sub_weights: Vec<usize> = kept.iter().map(|&e| weights[e]).collect();
        let sub_ids: Vec<usize> = kept.iter().map(|&e| ids[e]).collect();
        let sub_positions = self.solve(&sub, &sub_weights, gon, &sub_ids)?;
        let mut positions = vec![1; m.len()];
        for (i, &e) in kept.iter().enumerate() {
            positions[e] = sub_positions[i];
        }
        self.check_level(m, weights, gon, positions)
    }

    fn check_level(
        &self,
        m: &Matroid,
        weights: &[usize],
        gon: usize,
        positions: Vec<usize>,
    ) -> Result<Vec<usize>, Error> {
        let mapping = GonMapping::new(gon, positions, weights.to_vec())?;
        for x in 1..=gon {
            let w = mapping.window_at(x);
            if !m.is_independent(w) {
                return Err(Error::EngineDefect(format!(
                    "combined mapping has dependent window {{{w}}} at {x}"
                )));
            }
        }
        Ok(mapping.positions)
    }
}
