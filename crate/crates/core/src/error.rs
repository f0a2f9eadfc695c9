use thiserror::Error;

use crate::coxeter::{Family, GroupId};
use crate::window::LatticeKind;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for family {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("cannot parse group identifier {0:?}")]
    ParseGroup(String),

    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("vector has {found} coefficients, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("eigenvalue {eigenvalue} does not match exponent {exponent} (expected {expected})")]
    ExponentMismatch {
        exponent: i64,
        eigenvalue: f64,
        expected: f64,
    },

    #[error("Coxeter diagram of {0} is not bipartite")]
    Bipartition(GroupId),

    #[error("Coxeter element does not rotate plane {plane} by the expected angle (residual {residual:e})")]
    RotationMismatch { plane: usize, residual: f64 },

    #[error("point budget exceeded: {required} points requested, budget is {budget}")]
    BudgetExceeded { budget: u64, required: u64 },

    #[error("no Voronoi cell data for {group} {kind} lattice")]
    Unsupported { group: GroupId, kind: LatticeKind },

    #[error("window is empty (all Voronoi vertices project to the origin)")]
    EmptyWindow,

    #[error("frame axis {axis} out of range for rank {rank}")]
    AxisOutOfRange { axis: usize, rank: usize },

    #[error("frame axis {0} appears in both the parallel plane and the window")]
    AxisOverlap(usize),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
