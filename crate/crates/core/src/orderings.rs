//! Cyclic orderings in which every run of consecutive elements is a base (or
//! independent), built from interval assignments on an `m`-gon.

use std::fmt;

use num::integer::gcd;

use crate::density::{check_weighted, WeightedInstance};
use crate::error::Error;
use crate::matroid::Matroid;
use crate::push::assign_intervals;
use crate::subset::Subset;
use crate::verify::{verify_cyclic_ordering, OrderingMode};

/// Largest ground set the exhaustive explorer accepts.
pub const EXPLORE_LIMIT: usize = 10;

/// A permutation of the ground set, read cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicOrdering(Vec<usize>);

impl CyclicOrdering {
    pub fn new(elements: Vec<usize>) -> Result<Self, Error> {
        let mut seen = vec![false; elements.len()];
        for &e in &elements {
            if e >= elements.len() || std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidArgument(format!(
                    "ordering {elements:?} is not a permutation"
                )));
            }
        }
        Ok(CyclicOrdering(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `w` elements starting at index `start`, wrapping around.
    pub fn window(&self, start: usize, w: usize) -> Subset {
        (0..w).map(|k| self.0[(start + k) % self.0.len()]).collect()
    }
}

impl fmt::Display for CyclicOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// An ordering whose `r` consecutive elements always form a base, for
/// `gcd(m, r) = 1`. Fails with a violation of `r·|A| ≤ m·r(A)` when M is not
/// uniformly dense.
pub fn cyclic_base_ordering(m: &Matroid) -> Result<CyclicOrdering, Error> {
    if m.is_empty() {
        return Err(Error::EmptyGroundSet);
    }
    m.ensure_loopless()?;
    let n = m.len();
    let r = m.full_rank();
    let g = gcd(n, r);
    if g != 1 {
        return Err(Error::NotApplicable(format!(
            "gcd(m, r) = gcd({n}, {r}) = {g}"
        )));
    }
    let inst = WeightedInstance::uniform(m.clone(), r, n)?;
    check_weighted(&inst)?;
    let mapping = assign_intervals(&inst)?;
    let mut ordering = vec![usize::MAX; n];
    for e in 0..n {
        let slot = &mut ordering[mapping.position(e) - 1];
        if *slot != usize::MAX {
            return Err(Error::EngineDefect(format!(
                "elements {} and {e} share position {}",
                *slot,
                mapping.position(e)
            )));
        }
        *slot = e;
    }
    let ordering = CyclicOrdering(ordering);
    if let Err(fail) = verify_cyclic_ordering(m, ordering.elements(), r, OrderingMode::Base) {
        return Err(Error::EngineDefect(format!("ordering rejected: {fail}")));
    }
    Ok(ordering)
}

/// An ordering whose `w` consecutive elements are always independent, for
/// `gcd(w, m) = 1` and `w ≤ r(E)`, via the rank-`w` truncation.
pub fn cyclic_independent_ordering(m: &Matroid, w: usize) -> Result<CyclicOrdering, Error> {
    if m.is_empty() {
        return Err(Error::EmptyGroundSet);
    }
    m.ensure_loopless()?;
    let n = m.len();
    if w == 0 || w > m.full_rank() {
        return Err(Error::InvalidArgument(format!(
            "window {w} outside 1..={}",
            m.full_rank()
        )));
    }
    let g = gcd(n, w);
    if g != 1 {
        return Err(Error::NotApplicable(format!(
            "gcd(w, m) = gcd({w}, {n}) = {g}"
        )));
    }
    let ordering = cyclic_base_ordering(&m.truncate(w)?)?;
    if let Err(fail) = verify_cyclic_ordering(m, ordering.elements(), w, OrderingMode::Independent)
    {
        return Err(Error::EngineDefect(format!("ordering rejected: {fail}")));
    }
    Ok(ordering)
}

/// For disjoint bases `B`, `B'`: a sequence `b_1..b_r, b'_1..b'_r` in which every
/// `r` consecutive elements form a base. `B'` is taken in ascending order and each
/// `b_i` is the smallest element of `B` that can be exchanged for `b'_i`.
pub fn exchange_linear_sequence(m: &Matroid, b: Subset, b2: Subset) -> Result<Vec<usize>, Error> {
    m.check_subset(b)?;
    m.check_subset(b2)?;
    for set in [b, b2] {
        if !m.is_base(set) {
            return Err(Error::InvalidArgument(format!("{{{set}}} is not a base")));
        }
    }
    if !b.is_disjoint(b2) {
        return Err(Error::InvalidArgument(format!(
            "bases share {{{}}}",
            b.intersection(b2)
        )));
    }
    let mut current = b;
    let mut first = Vec::with_capacity(b.len());
    for incoming in b2 {
        let out = (current & b)
            .iter()
            .find(|&x| m.is_base(current.without(x).with(incoming)))
            .ok_or_else(|| {
                Error::EngineDefect(format!("no element of {{{b}}} exchanges with {incoming}"))
            })?;
        first.push(out);
        current = current.without(out).with(incoming);
    }
    let sequence: Vec<usize> = first.into_iter().chain(b2.iter()).collect();
    let r = b.len();
    for start in 0..=r {
        let window: Subset = sequence[start..start + r].iter().copied().collect();
        if !m.is_base(window) {
            return Err(Error::EngineDefect(format!(
                "window {{{window}}} is not a base"
            )));
        }
    }
    Ok(sequence)
}

/// Exhaustive search for a cyclic ordering with every `w` consecutive elements a
/// base (`Base`) or independent (`Independent`). Element 0 is fixed first, both
/// directions are searched, and the lexicographically first hit is returned.
pub fn explore_cyclic_ordering(
    m: &Matroid,
    w: usize,
    mode: OrderingMode,
) -> Result<Option<CyclicOrdering>, Error> {
    let n = m.len();
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > EXPLORE_LIMIT {
        return Err(Error::TooLarge {
            what: "cyclic ordering search",
            size: n,
            limit: EXPLORE_LIMIT,
        });
    }
    if w == 0 || w > n {
        return Err(Error::InvalidArgument(format!(
            "window {w} outside 1..={n}"
        )));
    }
    let mut search = Explorer {
        m,
        w,
        mode,
        full: m.full_rank(),
        prefix: vec![0],
        used: Subset::singleton(0),
    };
    if search.extend() {
        Ok(Some(CyclicOrdering(search.prefix)))
    } else {
        Ok(None)
    }
}

struct Explorer<'a> {
    m: &'a Matroid,
    w: usize,
    mode: OrderingMode,
    full: usize,
    prefix: Vec<usize>,
    used: Subset,
}

impl Explorer<'_> {
    fn acceptable(&self, window: Subset, complete: bool) -> bool {
        let rank = self.m.rank(window);
        if rank != window.len() {
            return false;
        }
        !complete || self.mode == OrderingMode::Independent || rank == self.full
    }

    /// The window ending at the last element of the prefix (shorter near the start).
    fn tail_ok(&self) -> bool {
        let len = self.prefix.len();
        let take = len.min(self.w);
        let window: Subset = self.prefix[len - take..].iter().copied().collect();
        self.acceptable(window, take == self.w)
    }

    fn wrap_ok(&self) -> bool {
        let n = self.prefix.len();
        (n - self.w + 1..n).all(|start| {
            let window: Subset = (0..self.w).map(|k| self.prefix[(start + k) % n]).collect();
            self.acceptable(window, true)
        })
    }

    fn extend(&mut self) -> bool {
        if !self.tail_ok() {
            return false;
        }
        if self.prefix.len() == self.m.len() {
            return self.wrap_ok();
        }
        for e in self.m.ground_mask() - self.used {
            self.prefix.push(e);
            self.used.insert(e);
            if self.extend() {
                return true;
            }
            self.prefix.pop();
            self.used.remove(e);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::Condition;
    use crate::matroid::Graph;

    fn c3() -> Matroid {
        Matroid::graphic(Graph::cycle(3)).unwrap()
    }

    fn k4() -> Matroid {
        Matroid::graphic(Graph::complete(4)).unwrap()
    }

    fn paw() -> Matroid {
        Matroid::graphic(Graph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()).unwrap()
    }

    #[test]
    fn base_ordering_of_triangle() {
        let ord = cyclic_base_ordering(&c3()).unwrap();
        assert_eq!(ord.len(), 3);
        for start in 0..3 {
            assert!(c3().is_base(ord.window(start, 2)));
        }
    }

    #[test]
    fn base_ordering_of_uniform() {
        let m = Matroid::uniform(2, 5).unwrap();
        let ord = cyclic_base_ordering(&m).unwrap();
        assert_eq!(
            verify_cyclic_ordering(&m, ord.elements(), 2, OrderingMode::Base),
            Ok(())
        );
    }

    #[test]
    fn paw_is_not_uniformly_dense() {
        match cyclic_base_ordering(&paw()) {
            Err(Error::Infeasible(v)) => {
                assert_eq!(v.condition, Condition::Weighted);
                assert_eq!(v.witness, Subset::from_ids([0, 1, 2]));
                assert_eq!(
                    (v.lhs, v.rhs),
                    (crate::rational::int(9), crate::rational::int(8))
                );
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gcd_rule() {
        assert!(matches!(
            cyclic_base_ordering(&k4()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            cyclic_independent_ordering(&k4(), 2),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn independent_orderings() {
        let ord = cyclic_independent_ordering(&c3(), 2).unwrap();
        assert_eq!(
            verify_cyclic_ordering(&c3(), ord.elements(), 2, OrderingMode::Independent),
            Ok(())
        );
        let u34 = Matroid::uniform(3, 4).unwrap();
        let ord = cyclic_independent_ordering(&u34, 3).unwrap();
        assert_eq!(ord.len(), 4);
        assert!(cyclic_independent_ordering(&u34, 4).is_err());
    }

    #[test]
    fn exchange_sequences() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let seq =
            exchange_linear_sequence(&u24, Subset::from_ids([0, 1]), Subset::from_ids([2, 3]))
                .unwrap();
        assert_eq!(seq, vec![0, 1, 2, 3]);

        // K4: star at vertex 0 = {01,02,03}; path 1-2-3 plus... {12,13,23} is a triangle,
        // so use the trees {0,1,5} (01,02,23) and {2,3,4} (03,12,13)
        let k = k4();
        let seq =
            exchange_linear_sequence(&k, Subset::from_ids([0, 1, 5]), Subset::from_ids([2, 3, 4]))
                .unwrap();
        assert_eq!(seq.len(), 6);
        for start in 0..=3 {
            assert!(k.is_base(seq[start..start + 3].iter().copied().collect()));
        }

        assert!(
            exchange_linear_sequence(&u24, Subset::from_ids([0, 1]), Subset::from_ids([1, 2]))
                .is_err()
        );
        assert!(
            exchange_linear_sequence(&u24, Subset::from_ids([0]), Subset::from_ids([2, 3]))
                .is_err()
        );
    }

    #[test]
    fn explorer() {
        let ord = explore_cyclic_ordering(&k4(), 3, OrderingMode::Base)
            .unwrap()
            .unwrap();
        assert_eq!(
            verify_cyclic_ordering(&k4(), ord.elements(), 3, OrderingMode::Base),
            Ok(())
        );
        assert_eq!(ord.elements()[0], 0);
        assert_eq!(
            explore_cyclic_ordering(&paw(), 3, OrderingMode::Base).unwrap(),
            None
        );
        let single = Matroid::uniform(1, 1).unwrap();
        assert_eq!(
            explore_cyclic_ordering(&single, 1, OrderingMode::Base)
                .unwrap()
                .unwrap()
                .elements(),
            &[0]
        );
        let big = Matroid::uniform(2, 11).unwrap();
        assert!(matches!(
            explore_cyclic_ordering(&big, 2, OrderingMode::Base),
            Err(Error::TooLarge { .. })
        ));
    }
}
