use thiserror::Error;

use crate::subset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={ground}")]
    VertexOutOfRange { vertex: usize, ground: usize },

    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::subset::MAX_GROUND)]
    GroundTooLarge(usize),

    #[error("base vertex set of size {0} exceeds the Bier-sphere maximum of {max}", max = crate::subset::MAX_GROUND / 2)]
    BaseTooLarge(usize),

    #[error("{0} is not a face")]
    NotAFace(VertexSet),

    #[error("dual is void: the complex is the full power set of its ground set")]
    DualIsVoid,

    #[error("ground sizes differ ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },

    #[error("Alexander dual of L is not contained in K (missing face {0})")]
    DualNotContained(VertexSet),

    #[error("skeleton dimension {r} out of range -1..={max} for m = {m}")]
    SkeletonRange { m: usize, r: isize, max: isize },

    #[error("h-vector rank {r} is smaller than dim + 1 = {needed}")]
    HVectorRank { r: usize, needed: usize },

    #[error("ground set of size {ground} exceeds the brute-force cap {cap} ({calls} homology computations)")]
    CapExceeded {
        ground: usize,
        cap: usize,
        calls: u128,
    },

    #[error("subset {0} has odd cardinality")]
    OddSubset(VertexSet),

    #[error("characteristic matrix needs m >= 2 (got {0})")]
    MatrixTooSmall(usize),

    #[error("{subset} is not a cohomology generator: {reason}")]
    NotAGenerator { subset: VertexSet, reason: String },

    #[error("columns of face {0} are not linearly independent mod 2")]
    NotCharacteristic(VertexSet),

    #[error("torsion coefficient {0} does not fit in 64 bits")]
    TorsionTooLarge(String),

    #[error("input: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
