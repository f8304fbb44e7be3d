//! Interval assignments on cyclic structures for matroids.
//!
//! The central routine, [`assign_intervals`], places each element of a matroid
//! on an interval of a `D`-gon so that every point of the gon is covered by an
//! independent set, whenever the weighted density bound `ω(A) ≤ D·r(A)` allows
//! it. Cyclic base orderings, circular and fractional arboricity, and spanning
//! window schedules are built on top of it, and every certificate is checked by
//! the separate [`verify`] module.

pub mod arboricity;
pub mod cli;
pub mod density;
pub mod error;
pub mod format;
pub mod matroid;
pub mod orderings;
pub mod push;
pub mod rational;
pub mod subset;
pub mod verify;

pub use arboricity::{
    circular_arboricity, fractional_weights, graph_acyclic_windows, graph_connected_windows,
    independent_windows, integral_arboricity_cover, spanning_windows, BaseCover, CircleMapping,
    FractionalWeights,
};
pub use density::{
    check_dual, check_rational, check_strength, check_uniformly_dense, check_weighted, max_density,
    strength, Condition, Violation, WeightedInstance,
};
pub use error::Error;
pub use matroid::{Field, Graph, LinearMatrix, Matroid, MatroidSpec};
pub use orderings::{
    cyclic_base_ordering, cyclic_independent_ordering, exchange_linear_sequence,
    explore_cyclic_ordering, CyclicOrdering,
};
pub use push::{assign_intervals, assign_intervals_with, EngineConfig, GonMapping};
pub use rational::Rational;
pub use subset::Subset;
