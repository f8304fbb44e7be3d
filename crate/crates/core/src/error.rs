use thiserror::Error;

use crate::density::Violation;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is out of range for a ground set of {size} elements")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("element {0} is a loop")]
    Loop(usize),

    #[error("empty base list")]
    NoBases,

    #[error("bases do not all have the same size")]
    UnequalBases,

    #[error("exchange axiom fails: removing {element} from {{{base}}} admits no replacement from {{{other}}}")]
    ExchangeAxiom {
        base: Subset,
        other: Subset,
        element: usize,
    },

    #[error("contracted and deleted sets overlap in {{{0}}}")]
    OverlappingMinor(Subset),

    #[error("truncation rank {w} outside 1..={rank}")]
    TruncationRange { w: usize, rank: usize },

    #[error("empty ground set")]
    EmptyGroundSet,

    #[error("matroid has rank zero")]
    RankZero,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("infeasible: {0}")]
    Infeasible(Violation),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("element {0} is not pushable")]
    NotPushable(usize),

    #[error("push loop visited more than {0} states without terminating")]
    StateCapExceeded(usize),

    /// An internal invariant failed. This is a bug, never an answer.
    #[error("engine defect: {0}")]
    EngineDefect(String),
}

impl Error {
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Error::Infeasible(v) => Some(v),
            _ => None,
        }
    }
}
