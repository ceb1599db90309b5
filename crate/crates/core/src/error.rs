use thiserror::Error;

/// Element ids in error payloads are the external ids of the universe.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty universe")]
    EmptyUniverse,
    #[error("unknown element id {0}")]
    UnknownId(u64),
    #[error("duplicate element id {0}")]
    DuplicateId(u64),
    #[error("relation is not a partial order: {reason} ({a}, {b})")]
    NotAPartialOrder { reason: &'static str, a: u64, b: u64 },
    #[error("inverse map is not an involution at {0}")]
    NotInvolution(u64),
    #[error("involution is not order-reversing on ({a}, {b})")]
    InvolutionNotOrderReversing { a: u64, b: u64 },
    #[error("join({a}, {b}) = {got} is not the supremum")]
    JoinNotSupremum { a: u64, b: u64, got: u64 },
    #[error("meet({a}, {b}) = {got} is not the infimum")]
    MeetNotInfimum { a: u64, b: u64, got: u64 },
    #[error("De Morgan's law fails on ({a}, {b})")]
    DeMorganFails { a: u64, b: u64 },
    #[error("incomplete {table} table: missing ({a}, {b})")]
    IncompleteTable { table: &'static str, a: u64, b: u64 },
    #[error("conflicting {table} table entries for ({a}, {b})")]
    ConflictingTable { table: &'static str, a: u64, b: u64 },
    #[error("member set is not closed under the involution: {0}")]
    MembersNotClosed(u64),
    #[error("the universe has no join/meet operations")]
    NoLattice,

    #[error("ground set has {size} elements, above the cap of {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },
    #[error("({a}, {b}) does not cover the ground set")]
    NotASeparation { a: String, b: String },
    #[error("join/meet closure exceeds {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("order function is not invariant under the involution at {0}")]
    OrderNotSymmetric(u64),
    #[error("k must be at least 1")]
    InvalidK,

    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("alpha does not commute with the involutions on edge {u}->{v}")]
    AlphaNotInvolutive { u: u32, v: u32 },
    #[error("alpha({u}->{v}) = {sep} lies outside the separation system")]
    AlphaImageOutsideS { u: u32, v: u32, sep: u64 },
    #[error("node {0} is not a leaf")]
    NotALeaf(u32),
    #[error("root label {0} is trivial or degenerate")]
    RootLabelTrivial(u64),
    #[error("{target} has no orientation above {r}")]
    TargetNotAboveR { target: u64, r: u64 },
    #[error("shifted label {0} lies outside the separation system")]
    ShiftLeftS(u64),

    #[error("family member {0:?} is not a star")]
    FNotStars(Vec<u64>),
    #[error("family does not force the trivial separation {0}")]
    FNotStandard(u64),
    #[error("separability fails at the pair {r} <= {r_prime}")]
    NotFSeparable { r: u64, r_prime: u64 },
    #[error("no family member projects onto the star at node {0}")]
    NoMatchingStar(u32),
    #[error("{0} separations to enumerate exceeds the cap of {1}")]
    TooLarge(usize, usize),
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
