use thiserror::Error;

/// Errors from constructing or manipulating disk isometries.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum MobiusError {
    /// The normal-form pole is too close to the unit circle for the
    /// fixed-point quadratics to stay well conditioned.
    #[error("near-boundary degeneracy: |a| = {modulus} exceeds 1 - 1e-12")]
    NearDegeneratePole { modulus: f64 },

    /// A matrix fails its determinant normalization beyond tolerance.
    #[error("invalid matrix: determinant defect {defect}")]
    InvalidMatrix { defect: f64 },

    /// Hyperbolic distance is only defined for interior points.
    #[error("point on or outside the unit circle has no finite hyperbolic distance")]
    BoundaryPoint,

    /// The identity fixes everything; there is no finite fixed-point list.
    #[error("all points fixed: the identity has no distinguished fixed points")]
    AllPointsFixed,

    /// Malformed element input (axis endpoints coinciding, bad JSON, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
