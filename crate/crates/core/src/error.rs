use alloc::string::String;

use crate::mask::SubsetMask;

/// Everything that can go wrong while building or interrogating spaces,
/// families and lattices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("open sets must include the empty set and the whole space")]
    MissingEmptyOrFull,
    #[error("open sets not closed under union: {a:?} ∪ {b:?} is missing")]
    NotClosedUnderUnion { a: SubsetMask, b: SubsetMask },
    #[error("open sets not closed under intersection: {a:?} ∩ {b:?} is missing")]
    NotClosedUnderIntersection { a: SubsetMask, b: SubsetMask },
    #[error("preorder is not reflexive at point {0}")]
    NotReflexive(usize),
    #[error("preorder is not transitive: {0} ≤ {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(usize, usize, usize),
    #[error("matrix has {rows} rows, expected {expected} (and as many columns)")]
    DimensionMismatch { rows: usize, expected: usize },
    #[error("subset {0:?} does not fit the space")]
    MaskOutOfRange(SubsetMask),
    #[error("point {0} is out of range")]
    PointOutOfRange(usize),
    #[error("map table has length {len}, expected {expected}")]
    MapLength { len: usize, expected: usize },
    #[error("space has {points} points; limit is {limit}")]
    SpaceTooLarge { points: usize, limit: usize },
    #[error("search space for {what} has {size} candidates; limit is {limit}")]
    SearchSpaceTooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("operands live over different spaces")]
    SpaceMismatch,
    #[error("a directed family must be nonempty")]
    EmptyFamily,
    #[error("family is not directed: no member contains {a:?} ∪ {b:?}")]
    NotDirected { a: SubsetMask, b: SubsetMask },
    #[error("no bound exists for the requested subset")]
    NoBound,
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("lattice map is not an order-isomorphism")]
    NotAnIsomorphism,
    #[error("no point of the target has the closure class that point {0} maps to")]
    NoPointWitness(usize),
    #[error("several target points share the closure class that point {0} maps to")]
    AmbiguousWitness(usize),
    #[error("space is not zero-dimensional")]
    NotZeroDimensional,
    #[error("could not extract a point map: {0}")]
    ExtractionFailed(&'static str),
    #[error("subspace must be nonempty")]
    EmptySubset,
    #[error("value does not fit a 128-bit integer")]
    Overflow,
    #[error("enumeration would use more than {limit} bytes")]
    MemoryBudget { limit: u64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
