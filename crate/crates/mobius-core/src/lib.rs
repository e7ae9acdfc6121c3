//! Algebra of unit-disk isometries.
//!
//! The group of orientation-preserving isometries of the hyperbolic plane is
//! handled in three coordinate systems that convert into each other:
//!
//! - [`DiskAutomorphism`] — the (θ, a) normal form z ↦ e^{iθ}(z − a)/(1 − conj(a)z);
//! - [`Su11Matrix`] — the disk-model matrix [[α, β], [conj β, conj α]] with
//!   |α|² − |β|² = 1, identified projectively (±M are the same element);
//! - [`Sl2RMatrix`] — the half-plane matrix of determinant 1, related to
//!   SU(1,1) by conjugation with the Cayley map z ↦ (z − i)/(z + i).
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across worker threads.

mod class;
mod disk;
mod error;
pub mod json;
mod matrix;
mod metric;

pub use class::{Classification, IsometryClass, EPS_CLASS};
pub use disk::{axis_generator, DiskAutomorphism, POLE_LIMIT};
pub use error::MobiusError;
pub use json::{parse_element, ElementInput};
pub use matrix::{Sl2RMatrix, Su11Matrix, DET_TOLERANCE};
pub use metric::{element_distance, hyperbolic_distance, su11_distance};

pub use num_complex::Complex64;
