use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("space dimension must be positive")]
    ZeroDimension,
    #[error("dimension {dim} exceeds the supported cap of {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("vertex set is not symmetric: vertex #{index} has no negation in the list")]
    AsymmetricVertexSet { index: usize },
    #[error("vertex set does not span the ambient space (rank {rank} < dim {dim})")]
    VerticesDoNotSpan { rank: usize, dim: usize },
    #[error("vertex #{index} lies in the interior of the induced unit ball (norm {norm})")]
    InteriorVertex { index: usize, norm: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a polyhedral space")]
    NotPolyhedral,
    #[error("epsilon {eps} out of range (0, 1)")]
    EpsOutOfRange { eps: f64 },
    #[error("vector is not on the unit sphere (norm {norm})")]
    NotUnitVector { norm: f64 },
    #[error("matrix is not idempotent (defect {defect:.3e})")]
    NotIdempotent { defect: f64 },
    #[error("space has no direct-sum structure")]
    NotSum,
    #[error("projection does not classify as an M-projection")]
    NotMProjection,
    #[error("projection does not classify as an L-projection")]
    NotLProjection,
    #[error("subspace was not detected as an M-ideal")]
    NotMIdeal,
    #[error("subspace is full-dimensional; its annihilator is trivial")]
    FullDimensionalSubspace,
    #[error("subspace rank {rank} is degenerate for this operation (dim {dim})")]
    DegenerateRank { rank: usize, dim: usize },
    #[error("iso_scale {iso_scale} outside the admissible band |s - 1| <= {band}")]
    IsoScaleOutOfBand { iso_scale: f64, band: f64 },
    #[error("witness invariant `{which}` violated by {amount:.3e}")]
    WitnessInvariant { which: &'static str, amount: f64 },
    #[error("witness search failed; best hull distance {best_distance:?}")]
    WitnessSearchFailed { best_distance: Option<f64> },
    #[error("iterative solver failed to converge within {iterations} iterations")]
    ConvergenceFailure { iterations: usize },
    #[error("linear program infeasible (phase-1 residual {residual:.3e})")]
    LpInfeasible { residual: f64 },
    #[error("linear program unbounded")]
    LpUnbounded,
    #[error("unsupported operation: {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
