//! Elliptic/parabolic/hyperbolic trichotomy with fixed-point data.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::disk::DiskAutomorphism;
use crate::error::MobiusError;
use crate::metric::element_distance;

/// Default tolerance band on |trace| − 2 for the trichotomy. Scale-free:
/// representatives are determinant-normalized.
pub const EPS_CLASS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IsometryClass {
    Identity,
    /// Rotation about an interior point; the angle is measured so that the
    /// derivative at the center is e^{iθ}, giving θ ∈ (0, 2π).
    Elliptic { center: Complex64, angle: f64 },
    /// Single boundary fixed point; `direction` is the sign of the
    /// translation parameter of the sign-canonical representative.
    Parabolic { fixed_point: Complex64, direction: i8 },
    Hyperbolic {
        attracting: Complex64,
        repelling: Complex64,
        translation_length: f64,
    },
}

impl IsometryClass {
    pub fn tag(&self) -> &'static str {
        match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Elliptic { .. } => "elliptic",
            IsometryClass::Parabolic { .. } => "parabolic",
            IsometryClass::Hyperbolic { .. } => "hyperbolic",
        }
    }
}

/// A classification decision plus a flag marking decisions taken close to
/// the parabolic band, where the trichotomy is numerically delicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub class: IsometryClass,
    pub near_boundary: bool,
}

impl DiskAutomorphism {
    /// Classify with the given tolerance band `eps` on |trace| − 2.
    /// The identity is detected first in the element metric.
    pub fn classify(&self, eps: f64) -> Classification {
        let mut m = self.to_su11();
        if m.alpha.re < 0.0 {
            m = m.negated();
        }
        let trace = 2.0 * m.alpha.re;
        let near_boundary = (trace - 2.0).abs() <= 2.0 * eps;

        if element_distance(self, &DiskAutomorphism::identity()) < eps {
            return Classification { class: IsometryClass::Identity, near_boundary };
        }

        let class = if (trace - 2.0).abs() <= eps {
            let u = m.alpha.im;
            let xi = Complex64::i() * m.beta / u;
            let xi = xi / xi.norm();
            IsometryClass::Parabolic { fixed_point: xi, direction: if u >= 0.0 { 1 } else { -1 } }
        } else if trace < 2.0 {
            let (center, angle) = if m.beta.norm() < 1e-15 {
                (Complex64::new(0.0, 0.0), (2.0 * m.alpha.arg()).rem_euclid(2.0 * PI))
            } else {
                let im = m.alpha.im;
                let d = (im * im - m.beta.norm_sqr()).sqrt();
                let center = Complex64::i() * (im - im.signum() * d) / m.beta.conj();
                let deriv_root = m.beta.conj() * center + m.alpha.conj();
                let angle = (-2.0 * deriv_root.arg()).rem_euclid(2.0 * PI);
                (center, angle)
            };
            IsometryClass::Elliptic { center, angle }
        } else {
            let d = (m.alpha.re * m.alpha.re - 1.0).sqrt();
            let z1 = (Complex64::new(0.0, m.alpha.im) + d) / m.beta.conj();
            let z2 = (Complex64::new(0.0, m.alpha.im) - d) / m.beta.conj();
            let z1 = z1 / z1.norm();
            let z2 = z2 / z2.norm();
            // The attracting fixed point is the one where |g'| < 1,
            // i.e. where |conj(β)z + conj(α)| > 1.
            let (attracting, repelling) =
                if (m.beta.conj() * z1 + m.alpha.conj()).norm() >= 1.0 { (z1, z2) } else { (z2, z1) };
            IsometryClass::Hyperbolic {
                attracting,
                repelling,
                translation_length: 2.0 * (trace / 2.0).acosh(),
            }
        };
        Classification { class, near_boundary }
    }

    /// Fixed points in the closed disk: the interior center for elliptic
    /// (its exterior inversion partner is discarded), the boundary double
    /// root for parabolic, both boundary roots (attracting first) for
    /// hyperbolic. The identity is an error: every point is fixed.
    pub fn fixed_points(&self) -> Result<Vec<Complex64>, MobiusError> {
        match self.classify(EPS_CLASS).class {
            IsometryClass::Identity => Err(MobiusError::AllPointsFixed),
            IsometryClass::Elliptic { center, .. } => Ok(vec![center]),
            IsometryClass::Parabolic { fixed_point, .. } => Ok(vec![fixed_point]),
            IsometryClass::Hyperbolic { attracting, repelling, .. } => {
                Ok(vec![attracting, repelling])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn half_turn_is_elliptic_with_trace_zero() {
        let g = DiskAutomorphism::rotation(PI);
        assert!((g.to_su11().trace()).abs() < 1e-15);
        match g.classify(EPS_CLASS).class {
            IsometryClass::Elliptic { center, angle } => {
                assert!(center.norm() < 1e-12);
                assert!((angle - PI).abs() < 1e-12);
            }
            other => panic!("expected elliptic, got {other:?}"),
        }
    }

    #[test]
    fn translation_toward_one_is_hyperbolic_of_length_ln3() {
        // θ = 0, a = -0.5 sends 0 to 0.5; length is 2·artanh(0.5) = ln 3.
        let g = DiskAutomorphism::new(0.0, c(-0.5, 0.0)).unwrap();
        match g.classify(EPS_CLASS).class {
            IsometryClass::Hyperbolic { attracting, repelling, translation_length } => {
                assert!((attracting - c(1.0, 0.0)).norm() < 1e-12);
                assert!((repelling - c(-1.0, 0.0)).norm() < 1e-12);
                assert!((translation_length - 3f64.ln()).abs() < 1e-12);
            }
            other => panic!("expected hyperbolic, got {other:?}"),
        }
    }

    #[test]
    fn cayley_image_of_unit_translation_is_parabolic_fixing_one() {
        // z ↦ z + 1 on the half-plane.
        let g = crate::matrix::Sl2RMatrix::new(1.0, 1.0, 0.0, 1.0).unwrap().to_disk().unwrap();
        match g.classify(EPS_CLASS).class {
            IsometryClass::Parabolic { fixed_point, .. } => {
                assert!((fixed_point - c(1.0, 0.0)).norm() < 1e-12);
            }
            other => panic!("expected parabolic, got {other:?}"),
        }
        // Double root: the fixed-point quadratic has vanishing discriminant.
        let m = g.to_su11();
        let disc = m.alpha.re * m.alpha.re - 1.0;
        assert!(disc.abs() < 1e-9);
    }

    #[test]
    fn fixed_points_match_class() {
        let rot = DiskAutomorphism::rotation(1.0);
        assert_eq!(rot.fixed_points().unwrap(), vec![c(0.0, 0.0)]);

        let hyp = DiskAutomorphism::new(0.0, c(-0.5, 0.0)).unwrap();
        let fps = hyp.fixed_points().unwrap();
        assert!((fps[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!((fps[1] - c(-1.0, 0.0)).norm() < 1e-12);
        for fp in fps {
            assert!((hyp.apply(fp) - fp).norm() < 1e-9);
        }

        assert!(matches!(
            DiskAutomorphism::identity().fixed_points(),
            Err(MobiusError::AllPointsFixed)
        ));
    }

    #[test]
    fn elliptic_angle_follows_derivative_convention() {
        for angle in [0.4, 1.9, PI, 4.2, 6.0] {
            let g = DiskAutomorphism::rotation_about(c(0.3, -0.2), angle).unwrap();
            match g.classify(EPS_CLASS).class {
                IsometryClass::Elliptic { center, angle: got } => {
                    assert!((center - c(0.3, -0.2)).norm() < 1e-10);
                    assert!((got - angle).abs() < 1e-10, "angle {angle}: got {got}");
                }
                other => panic!("expected elliptic, got {other:?}"),
            }
        }
    }
}
