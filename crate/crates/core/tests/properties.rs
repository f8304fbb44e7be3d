mod common;

use common::oracles;
use cyclic_matroids::arboricity::CircleMapping;
use cyclic_matroids::density::{check_uniformly_dense, Condition};
use cyclic_matroids::push::{pushable, run_push_loop, EngineConfig, LoopOutcome, PushState};
use cyclic_matroids::verify::{
    brute_force_assign, brute_force_assign_parallel, verify_circle_mapping,
    verify_circle_mapping_on_grid, verify_cyclic_ordering, OrderingMode, WindowMode,
};
use cyclic_matroids::{
    assign_intervals, assign_intervals_with, check_dual, check_rational, check_weighted,
    cyclic_base_ordering, cyclic_independent_ordering, fractional_weights, max_density,
    spanning_windows, strength, Error, Field, GonMapping, Graph, LinearMatrix, Matroid, Rational,
    Subset, WeightedInstance,
};
use proptest::prelude::*;

fn graph_matroid() -> impl Strategy<Value = Matroid> {
    (2usize..=5)
        .prop_flat_map(|n| {
            let edge = (0..n, 0..n).prop_filter("no self-loops", |(u, v)| u != v);
            (Just(n), prop::collection::vec(edge, 1..=7))
        })
        .prop_map(|(n, edges)| Matroid::graphic(Graph::new(n, edges).unwrap()).unwrap())
}

fn linear_matroid() -> impl Strategy<Value = Matroid> {
    (prop_oneof![Just(2u32), Just(3u32)], 1usize..=3, 1usize..=7)
        .prop_flat_map(|(p, rows, cols)| {
            let column = prop::collection::vec(0..p as i64, rows)
                .prop_filter("no zero columns", |c| c.iter().any(|&x| x != 0));
            (Just(p), prop::collection::vec(column, cols))
        })
        .prop_map(|(p, columns)| {
            let rows = (0..columns[0].len())
                .map(|i| columns.iter().map(|c| c[i]).collect())
                .collect();
            Matroid::linear(LinearMatrix::new(Field::Prime(p), rows).unwrap()).unwrap()
        })
}

fn uniform_matroid() -> impl Strategy<Value = Matroid> {
    (1usize..=7)
        .prop_flat_map(|m| (1..=m, Just(m)))
        .prop_map(|(r, m)| Matroid::uniform(r, m).unwrap())
}

/// Small loopless matroids of every kind, including duals of the loopless-dual ones.
fn matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![graph_matroid(), linear_matroid(), uniform_matroid()]
}

fn weighted() -> impl Strategy<Value = (Matroid, Vec<usize>, usize)> {
    (matroid(), 1usize..=5).prop_flat_map(|(m, gon)| {
        let n = m.len();
        (Just(m), prop::collection::vec(0..=gon, n), Just(gon))
    })
}

fn all_subsets(m: &Matroid) -> impl Iterator<Item = Subset> {
    (0..1u64 << m.len()).map(Subset::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_rank_formula(m in matroid()) {
        let dual = m.dual();
        let full = m.full_rank();
        for a in all_subsets(&m) {
            prop_assert_eq!(dual.rank(a), a.len() + m.rank(m.ground_mask() - a) - full);
            prop_assert_eq!(dual.dual().rank(a), m.rank(a));
        }
    }

    #[test]
    fn minor_and_truncation_ranks(m in matroid(), c in any::<u64>(), d in any::<u64>(), w in 1usize..=3) {
        let ground = m.ground_mask();
        let contract = Subset::from_bits(c) & ground;
        let delete = (Subset::from_bits(d) & ground) - contract;
        let minor = m.minor(contract, delete).unwrap();
        let ids = m.minor_ids(contract, delete);
        for a in all_subsets(&minor) {
            let lifted: Subset = a.iter().map(|i| ids[i]).collect();
            prop_assert_eq!(minor.rank(a), m.rank(lifted | contract) - m.rank(contract));
        }
        if w <= m.full_rank() {
            let t = m.truncate(w).unwrap();
            for a in all_subsets(&m) {
                prop_assert_eq!(t.rank(a), m.rank(a).min(w));
            }
        }
    }

    #[test]
    fn closure_is_the_rank_preserving_extension(m in matroid()) {
        for a in all_subsets(&m) {
            let expected: Subset = (0..m.len()).filter(|&e| m.rank(a.with(e)) == m.rank(a)).collect();
            prop_assert_eq!(m.closure(a), expected);
        }
        for f in m.flats().unwrap() {
            prop_assert!(m.is_closed(f));
        }
        let flats = m.flats().unwrap();
        prop_assert_eq!(flats.len(), all_subsets(&m).filter(|&a| m.is_closed(a)).count());
    }

    #[test]
    fn flat_enumeration_matches_all_subsets((m, w, gon) in weighted()) {
        prop_assert_eq!(max_density(&m).unwrap().gamma, oracles::gamma(&m));
        prop_assert_eq!(strength(&m).unwrap().strength, oracles::strength(&m));
        let inst = WeightedInstance::new(m.clone(), w.clone(), gon).unwrap();
        prop_assert_eq!(check_weighted(&inst).is_ok(), oracles::weighted_ok(&m, &w, gon));
        prop_assert_eq!(check_dual(&inst).is_ok(), oracles::dual_ok(&m, &w, gon));
        let rw: Vec<Rational> = w.iter().map(|&x| Rational::from_integer(x as i64)).collect();
        prop_assert_eq!(check_rational(&m, &rw, Rational::from_integer(gon as i64)).is_ok(), oracles::weighted_ok(&m, &w, gon));
    }

    #[test]
    fn violations_witness_the_worst_set((m, w, gon) in weighted()) {
        let inst = WeightedInstance::new(m.clone(), w.clone(), gon).unwrap();
        if let Err(Error::Infeasible(v)) = check_weighted(&inst) {
            prop_assert_eq!(v.condition, Condition::Weighted);
            let excess = |a: Subset| oracles::weight(&w, a) as i64 - (gon * m.rank(a)) as i64;
            let worst = all_subsets(&m).map(excess).max().unwrap();
            prop_assert_eq!(excess(v.witness), worst);
            prop_assert!(m.is_closed(v.witness));
        }
    }

    #[test]
    fn engine_output_and_trace((m, w, gon) in weighted()) {
        let inst = WeightedInstance::new(m.clone(), w.clone(), gon).unwrap();
        let config = EngineConfig { trace: true, ..EngineConfig::default() };
        match assign_intervals_with(&inst, &config) {
            Ok(a) => {
                prop_assert!(oracles::weighted_ok(&m, &w, gon));
                let phi = &a.mapping;
                // every point of the gon sees an independent set
                for x in 1..=gon {
                    prop_assert!(m.is_independent(phi.window(x).unwrap()));
                }
                let total: usize = (1..=gon).map(|x| phi.window(x).unwrap().len()).sum();
                prop_assert_eq!(total, w.iter().map(|&x| x.min(gon)).sum::<usize>());
                prop_assert!(a.trace.potential_monotone());
                // deterministic
                prop_assert_eq!(assign_intervals(&inst).unwrap(), a.mapping.clone());
            }
            Err(Error::Infeasible(_)) => prop_assert!(!oracles::weighted_ok(&m, &w, gon)),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn pushes_only_move_pushable_elements((m, w, gon) in weighted(), seed in prop::collection::vec(1usize..=5, 7)) {
        let positions: Vec<usize> = (0..m.len()).map(|e| (seed[e] - 1) % gon + 1).collect();
        let mut state = PushState::new(GonMapping::new(gon, positions, w).unwrap());
        for _ in 0..30 {
            let candidates: Vec<usize> = (0..m.len()).filter(|&e| pushable(&m, state.mapping(), e)).collect();
            for e in 0..m.len() {
                if !candidates.contains(&e) {
                    let mut copy = state.clone();
                    prop_assert_eq!(copy.push(&m, e).unwrap_err(), Error::NotPushable(e));
                }
            }
            let Some(&e) = candidates.first() else { break };
            let before = state.mapping().potential(&m);
            let step = state.push(&m, e).unwrap();
            let after = state.mapping().potential(&m);
            prop_assert!(after >= before);
            prop_assert_eq!(step.strict, after > before);
            prop_assert_eq!(*state.ordering().last().unwrap(), e);
        }
    }

    #[test]
    fn periods_expose_a_violating_set((m, w, gon) in weighted()) {
        let inst = WeightedInstance::new(m.clone(), w.clone(), gon).unwrap();
        prop_assume!(check_weighted(&inst).is_err());
        let start = PushState::new(GonMapping::constant(gon, w.clone()));
        match run_push_loop(&m, start, &EngineConfig::default()).unwrap() {
            LoopOutcome::Period { segment, .. } => {
                let unbounded: Subset = segment.iter().copied().collect();
                prop_assert!(oracles::weight(&w, unbounded) > gon * m.rank(unbounded));
            }
            LoopOutcome::Valid(_) => prop_assert!(false, "infeasible instance produced a valid mapping"),
        }
    }

    #[test]
    fn critical_points_match_a_fine_grid(
        m in matroid(),
        q in 1i64..=4,
        p_extra in 0i64..=8,
        raw in prop::collection::vec(0i64..64, 7),
        spanning in any::<bool>(),
    ) {
        let p = q + p_extra;
        let d = Rational::new(p, q);
        // positions on the 1/(2q) grid inside [0, d)
        let slots = 2 * p;
        let positions: Vec<Rational> = (0..m.len()).map(|e| Rational::new(raw[e] % slots, 2 * q)).collect();
        let mode = if spanning { WindowMode::Spanning } else { WindowMode::Independent };
        let circle = CircleMapping { d, positions, mode };
        let step = Rational::new(1, 4 * q);
        prop_assert_eq!(
            verify_circle_mapping(&m, &circle).is_ok(),
            verify_circle_mapping_on_grid(&m, &circle, step).is_ok()
        );
    }

    #[test]
    fn fractional_support_and_spanning_duality(m in matroid()) {
        let fw = fractional_weights(&m).unwrap();
        prop_assert!(fw.weights.len() <= m.len());
        prop_assert_eq!(fw.total(), oracles::gamma(&m));
        let s = strength(&m).unwrap().strength;
        let circle = spanning_windows(&m, s).unwrap();
        let dual = m.dual();
        for x in cyclic_matroids::verify::critical_points(&circle.positions, circle.d) {
            prop_assert!(dual.is_independent(m.ground_mask() - circle.window(x)));
        }
    }

    #[test]
    fn base_orderings_fill_every_window_with_r_elements(m in matroid()) {
        let (n, r) = (m.len(), m.full_rank());
        prop_assume!(oracles::gcd(n, r) == 1 && check_uniformly_dense(&m).is_ok());
        let inst = WeightedInstance::uniform(m.clone(), r, n).unwrap();
        let phi = assign_intervals(&inst).unwrap();
        for x in 1..=n {
            prop_assert_eq!(phi.window(x).unwrap().len(), r);
        }
        let ord = cyclic_base_ordering(&m).unwrap();
        prop_assert!(verify_cyclic_ordering(&m, ord.elements(), r, OrderingMode::Base).is_ok());
    }

    #[test]
    fn independent_orderings_when_gcd_allows(m in matroid(), w in 1usize..=4) {
        prop_assume!(w <= m.full_rank() && oracles::gcd(w, m.len()) == 1);
        match cyclic_independent_ordering(&m, w) {
            Ok(ord) => prop_assert!(verify_cyclic_ordering(&m, ord.elements(), w, OrderingMode::Independent).is_ok()),
            Err(Error::Infeasible(v)) => prop_assert!(w * v.witness.len() > m.len() * m.rank(v.witness)),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn engine_agrees_with_exhaustive_search((m, w, gon) in weighted()) {
        prop_assume!((gon as u64).pow(m.len() as u32) <= 20_000);
        let inst = WeightedInstance::new(m.clone(), w.clone(), gon).unwrap();
        let oracle = brute_force_assign(&m, &w, gon).unwrap();
        prop_assert_eq!(oracle.is_some(), assign_intervals(&inst).is_ok());
        prop_assert_eq!(oracle, brute_force_assign_parallel(&m, &w, gon, 3).unwrap());
    }
}
