//! Hyperbolic metric on the disk and the sign-quotient element metric on
//! the isometry group.

use num_complex::Complex64;

use crate::disk::DiskAutomorphism;
use crate::error::MobiusError;
use crate::matrix::Su11Matrix;

/// Hyperbolic distance 2·artanh |(z − w)/(1 − conj(w)·z)| between interior
/// points. Boundary or exterior input is an error.
pub fn hyperbolic_distance(z: Complex64, w: Complex64) -> Result<f64, MobiusError> {
    if z.norm() >= 1.0 || w.norm() >= 1.0 {
        return Err(MobiusError::BoundaryPoint);
    }
    let q = (z - w) / (Complex64::new(1.0, 0.0) - w.conj() * z);
    Ok(2.0 * q.norm().atanh())
}

/// Distance between embedded matrix representatives, minimized over the
/// projective sign: min over ± of ‖(α_g, β_g) ∓ (α_h, β_h)‖ in ℂ². This is a
/// genuine metric on the isometry group and the one every windowed sample
/// and Hausdorff computation uses.
pub fn su11_distance(g: &Su11Matrix, h: &Su11Matrix) -> f64 {
    let plus = (g.alpha - h.alpha).norm_sqr() + (g.beta - h.beta).norm_sqr();
    let minus = (g.alpha + h.alpha).norm_sqr() + (g.beta + h.beta).norm_sqr();
    plus.min(minus).sqrt()
}

/// [`su11_distance`] on normal forms.
pub fn element_distance(g: &DiskAutomorphism, h: &DiskAutomorphism) -> f64 {
    su11_distance(&g.to_su11(), &h.to_su11())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn distance_to_self_is_zero() {
        assert_eq!(hyperbolic_distance(c(0.3, -0.4), c(0.3, -0.4)).unwrap(), 0.0);
    }

    #[test]
    fn distance_origin_to_half_is_ln3() {
        let d = hyperbolic_distance(c(0.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((d - 3f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn boundary_input_is_an_error() {
        assert!(hyperbolic_distance(c(1.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn element_distance_identity_to_half_turn() {
        // Representatives (1, 0) and (i, 0): both signs give √2.
        let d = element_distance(&DiskAutomorphism::identity(), &DiskAutomorphism::rotation(std::f64::consts::PI));
        assert!((d - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn sign_flip_is_invisible() {
        let g = DiskAutomorphism::new(1.0, c(0.2, 0.3)).unwrap().to_su11();
        assert_eq!(su11_distance(&g, &g.negated()), 0.0);
    }
}
