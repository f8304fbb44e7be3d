//! Matroids given by rank oracles, their standard constructions, and the
//! closure / circuit / minor / dual / truncation operators.
//!
//! Subsets are [`Subset`] bitmasks, so a ground set holds at most 64 elements.
//! Exhaustive routines elsewhere in the crate are meant for ground sets of a
//! couple of dozen elements at most.

mod graph;
mod linear;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

pub use graph::Graph;
pub use linear::{Field, LinearMatrix};

use crate::error::Error;
use crate::subset::{Subset, MAX_ELEMENTS};

/// Largest ground set for which explicit base lists are axiom-checked.
pub const BASES_VALIDATION_LIMIT: usize = 12;

/// Largest ground set on which flats (and everything built on them) are enumerated.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// One element of a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub id: usize,
    pub label: Option<String>,
}

/// The ground set `E = {0, .., m-1}` with optional display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<Option<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet {
            labels: vec![None; size],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> Option<&str> {
        self.labels.get(id).and_then(|l| l.as_deref())
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.labels.iter().enumerate().map(|(id, label)| Element {
            id,
            label: label.clone(),
        })
    }

    fn pick(&self, ids: &[usize]) -> GroundSet {
        GroundSet {
            labels: ids.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }
}

/// A block of a partition matroid: `size` consecutive elements, of which at most
/// `cap` may be chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub cap: usize,
    pub size: usize,
}

/// Input to [`Matroid::construct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidSpec {
    Uniform { rank: usize, size: usize },
    Graphic(Graph),
    Linear(LinearMatrix),
    Partition(Vec<Block>),
    ExplicitBases { size: usize, bases: Vec<Subset> },
}

#[derive(Clone, Debug)]
pub enum Kind {
    Uniform {
        rank: usize,
    },
    Graphic(Graph),
    Linear(LinearMatrix),
    Partition(Vec<(Subset, usize)>),
    ExplicitBases(Vec<Subset>),
    Dual {
        of: Arc<Matroid>,
        full_rank: usize,
    },
    Minor {
        of: Arc<Matroid>,
        contract: Subset,
        kept: Vec<usize>,
        contract_rank: usize,
    },
    Truncation {
        of: Arc<Matroid>,
        rank: usize,
    },
}

/// A finite matroid. Immutable once built; rank queries are pure.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground: GroundSet,
    kind: Kind,
}

impl Matroid {
    pub fn construct(spec: MatroidSpec) -> Result<Self, Error> {
        match spec {
            MatroidSpec::Uniform { rank, size } => Matroid::uniform(rank, size),
            MatroidSpec::Graphic(g) => Matroid::graphic(g),
            MatroidSpec::Linear(m) => Matroid::linear(m),
            MatroidSpec::Partition(blocks) => Matroid::partition(&blocks),
            MatroidSpec::ExplicitBases { size, bases } => Matroid::from_bases(size, bases),
        }
    }

    /// U_{rank,size}.
    pub fn uniform(rank: usize, size: usize) -> Result<Self, Error> {
        check_size(size)?;
        if rank > size {
            return Err(Error::InvalidArgument(format!(
                "uniform rank {rank} exceeds ground set size {size}"
            )));
        }
        if rank == 0 && size > 0 {
            return Err(Error::Loop(0));
        }
        Ok(Matroid::raw(size, Kind::Uniform { rank }))
    }

    /// Cycle matroid of a graph.
    pub fn graphic(graph: Graph) -> Result<Self, Error> {
        check_size(graph.edge_count())?;
        // Graph::new already refused self-loops, so the result is loopless.
        Ok(Matroid::raw(graph.edge_count(), Kind::Graphic(graph)))
    }

    /// Column matroid of a matrix.
    pub fn linear(matrix: LinearMatrix) -> Result<Self, Error> {
        check_size(matrix.cols())?;
        if let Some(c) = (0..matrix.cols()).find(|&c| matrix.is_zero_column(c)) {
            return Err(Error::Loop(c));
        }
        Ok(Matroid::raw(matrix.cols(), Kind::Linear(matrix)))
    }

    /// Partition matroid; blocks take consecutive element ids in order.
    pub fn partition(blocks: &[Block]) -> Result<Self, Error> {
        let size: usize = blocks.iter().map(|b| b.size).sum();
        check_size(size)?;
        let mut next = 0;
        let mut parts = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.cap == 0 && b.size > 0 {
                return Err(Error::Loop(next));
            }
            parts.push((Subset::from_ids(next..next + b.size), b.cap));
            next += b.size;
        }
        Ok(Matroid::raw(size, Kind::Partition(parts)))
    }

    /// Matroid given by its list of bases. For `size <= 12` the exchange axiom is
    /// checked exhaustively; larger inputs are trusted.
    pub fn from_bases(size: usize, bases: Vec<Subset>) -> Result<Self, Error> {
        check_size(size)?;
        let bases: Vec<Subset> = bases
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let Some(&first) = bases.first() else {
            return Err(Error::NoBases);
        };
        let ground = Subset::full(size);
        if let Some(b) = bases.iter().find(|b| !b.is_subset(ground)) {
            return Err(Error::InvalidArgument(format!(
                "base {{{b}}} is not a subset of the {size}-element ground set"
            )));
        }
        if bases.iter().any(|b| b.len() != first.len()) {
            return Err(Error::UnequalBases);
        }
        let covered = bases.iter().fold(Subset::empty(), |acc, &b| acc | b);
        if let Some(e) = (ground - covered).first() {
            return Err(Error::Loop(e));
        }
        if size <= BASES_VALIDATION_LIMIT {
            let set: HashSet<Subset> = bases.iter().copied().collect();
            for &b1 in &bases {
                for &b2 in &bases {
                    for x in b1 - b2 {
                        let ok = (b2 - b1)
                            .iter()
                            .any(|y| set.contains(&b1.without(x).with(y)));
                        if !ok {
                            return Err(Error::ExchangeAxiom {
                                base: b1,
                                other: b2,
                                element: x,
                            });
                        }
                    }
                }
            }
        }
        Ok(Matroid::raw(size, Kind::ExplicitBases(bases)))
    }

    fn raw(size: usize, kind: Kind) -> Self {
        Matroid {
            ground: GroundSet::new(size),
            kind,
        }
    }

    /// Attach display labels to the elements (must match the ground set size).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} elements",
                labels.len(),
                self.len()
            )));
        }
        self.ground.labels = labels.into_iter().map(Some).collect();
        Ok(self)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Kind::Uniform { .. } => "uniform",
            Kind::Graphic(_) => "graphic",
            Kind::Linear(_) => "linear",
            Kind::Partition(_) => "partition",
            Kind::ExplicitBases(_) => "explicit-bases",
            Kind::Dual { .. } => "dual-of",
            Kind::Minor { .. } => "minor-of",
            Kind::Truncation { .. } => "truncation-of",
        }
    }

    /// m = |E|.
    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn ground_mask(&self) -> Subset {
        Subset::full(self.len())
    }

    /// r(A).
    ///
    /// # Panics
    /// If `set` names an element outside the ground set; see [`Matroid::try_rank`].
    pub fn rank(&self, set: Subset) -> usize {
        match self.try_rank(set) {
            Ok(r) => r,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_rank(&self, set: Subset) -> Result<usize, Error> {
        self.check_subset(set)?;
        Ok(self.rank_of(set))
    }

    /// r(E).
    pub fn full_rank(&self) -> usize {
        self.rank_of(self.ground_mask())
    }

    fn rank_of(&self, set: Subset) -> usize {
        match &self.kind {
            Kind::Uniform { rank } => set.len().min(*rank),
            Kind::Graphic(g) => g.forest_rank(set),
            Kind::Linear(m) => m.column_rank(set),
            Kind::Partition(parts) => parts.iter().map(|&(b, cap)| (set & b).len().min(cap)).sum(),
            Kind::ExplicitBases(bases) => bases.iter().map(|&b| (set & b).len()).max().unwrap_or(0),
            Kind::Dual { of, full_rank } => {
                set.len() + of.rank_of(of.ground_mask() - set) - full_rank
            }
            Kind::Minor {
                of,
                contract,
                kept,
                contract_rank,
            } => {
                let lifted: Subset = set.iter().map(|e| kept[e]).collect();
                of.rank_of(lifted | *contract) - contract_rank
            }
            Kind::Truncation { of, rank } => of.rank_of(set).min(*rank),
        }
    }

    pub fn check_subset(&self, set: Subset) -> Result<(), Error> {
        match (set - self.ground_mask()).first() {
            Some(element) => Err(Error::ElementOutOfRange {
                element,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn check_element(&self, e: usize) -> Result<(), Error> {
        if e < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: e,
                size: self.len(),
            })
        }
    }

    pub fn is_independent(&self, set: Subset) -> bool {
        self.rank(set) == set.len()
    }

    pub fn is_base(&self, set: Subset) -> bool {
        set.len() == self.full_rank() && self.is_independent(set)
    }

    /// Elements of rank zero.
    pub fn loops(&self) -> Subset {
        (0..self.len())
            .filter(|&e| self.rank_of(Subset::singleton(e)) == 0)
            .collect()
    }

    pub fn ensure_loopless(&self) -> Result<(), Error> {
        match self.loops().first() {
            Some(e) => Err(Error::Loop(e)),
            None => Ok(()),
        }
    }

    /// cl(A) = { e : r(A + e) = r(A) }.
    pub fn closure(&self, set: Subset) -> Subset {
        let r = self.rank(set);
        (self.ground_mask() - set)
            .iter()
            .filter(|&e| self.rank_of(set.with(e)) == r)
            .fold(set, Subset::with)
    }

    pub fn is_closed(&self, set: Subset) -> bool {
        self.closure(set) == set
    }

    /// A circuit of `set` through `e`, or `None` when `e` lies on no circuit of
    /// `set` (equivalently `e ∉ cl(set - e)`).
    ///
    /// Found by greedy deletion in ascending id order: any `f ≠ e` whose removal
    /// keeps `e` spanned by the rest is dropped.
    pub fn circuit_through(&self, e: usize, set: Subset) -> Result<Option<Subset>, Error> {
        self.check_subset(set)?;
        if !set.contains(e) {
            return Err(Error::InvalidArgument(format!(
                "element {e} is not in {{{set}}}"
            )));
        }
        let spans = |s: Subset| self.rank_of(s) == self.rank_of(s.without(e));
        if !spans(set) {
            return Ok(None);
        }
        let mut current = set;
        for f in set.without(e) {
            let trial = current.without(f);
            if spans(trial) {
                current = trial;
            }
        }
        Ok(Some(current))
    }

    /// M*, with r*(A) = |A| + r(E - A) - r(E). Loops of the dual (coloops of `self`)
    /// are allowed here; loopless-only operations reject them.
    pub fn dual(&self) -> Matroid {
        Matroid {
            ground: self.ground.clone(),
            kind: Kind::Dual {
                of: Arc::new(self.clone()),
                full_rank: self.full_rank(),
            },
        }
    }

    /// M / contract \ delete. Surviving elements are renumbered `0..` in
    /// ascending order of their old ids; see [`Matroid::minor_ids`].
    pub fn minor(&self, contract: Subset, delete: Subset) -> Result<Matroid, Error> {
        self.check_subset(contract)?;
        self.check_subset(delete)?;
        if !contract.is_disjoint(delete) {
            return Err(Error::OverlappingMinor(contract & delete));
        }
        let kept = self.minor_ids(contract, delete);
        Ok(Matroid {
            ground: self.ground.pick(&kept),
            kind: Kind::Minor {
                of: Arc::new(self.clone()),
                contract,
                kept,
                contract_rank: self.rank_of(contract),
            },
        })
    }

    /// Old ids of the elements surviving `minor(contract, delete)`, indexed by new id.
    pub fn minor_ids(&self, contract: Subset, delete: Subset) -> Vec<usize> {
        (self.ground_mask() - contract - delete).to_vec()
    }

    /// M | keep.
    pub fn restrict(&self, keep: Subset) -> Result<Matroid, Error> {
        self.minor(Subset::empty(), self.ground_mask() - keep)
    }

    pub fn delete(&self, set: Subset) -> Result<Matroid, Error> {
        self.minor(Subset::empty(), set)
    }

    pub fn contract(&self, set: Subset) -> Result<Matroid, Error> {
        self.minor(set, Subset::empty())
    }

    /// Truncation to rank `w`: independent sets of size at most `w`.
    pub fn truncate(&self, w: usize) -> Result<Matroid, Error> {
        let rank = self.full_rank();
        if w == 0 || w > rank {
            return Err(Error::TruncationRange { w, rank });
        }
        Ok(Matroid {
            ground: self.ground.clone(),
            kind: Kind::Truncation {
                of: Arc::new(self.clone()),
                rank: w,
            },
        })
    }

    /// Greedy extension of an independent set to a base, trying elements in
    /// ascending id order.
    pub fn extend_to_base(&self, independent: Subset) -> Subset {
        debug_assert!(self.is_independent(independent));
        let target = self.full_rank();
        let mut base = independent;
        for e in self.ground_mask() - independent {
            if base.len() == target {
                break;
            }
            if self.rank_of(base.with(e)) == base.len() + 1 {
                base.insert(e);
            }
        }
        base
    }

    /// All flats (closed sets), sorted by bitmask. Generated from cl(∅) by
    /// repeatedly closing `F + e`, so the cost is proportional to the number of
    /// flats rather than 2^m.
    pub fn flats(&self) -> Result<Vec<Subset>, Error> {
        if self.len() > EXHAUSTIVE_LIMIT {
            return Err(Error::TooLarge {
                what: "flat enumeration",
                size: self.len(),
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let bottom = self.closure(Subset::empty());
        let mut seen = HashSet::from([bottom]);
        let mut queue = VecDeque::from([bottom]);
        while let Some(flat) = queue.pop_front() {
            let mut absorbed = flat;
            for e in self.ground_mask() - flat {
                if absorbed.contains(e) {
                    continue;
                }
                let next = self.closure(flat.with(e));
                // every element of `next - flat` yields the same cover
                absorbed = absorbed | next;
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let mut flats: Vec<Subset> = seen.into_iter().collect();
        flats.sort_unstable();
        Ok(flats)
    }
}

fn check_size(size: usize) -> Result<(), Error> {
    if size > MAX_ELEMENTS {
        Err(Error::TooLarge {
            what: "ground set",
            size,
            limit: MAX_ELEMENTS,
        })
    } else {
        Ok(())
    }
}
