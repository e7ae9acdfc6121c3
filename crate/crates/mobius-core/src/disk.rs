//! The (θ, a) normal form for orientation-preserving isometries of the
//! open unit disk: z ↦ e^{iθ}(z − a)/(1 − conj(a)·z).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::MobiusError;
use crate::matrix::{Sl2RMatrix, Su11Matrix};

/// Poles at least this close to the unit circle are rejected as
/// near-degenerate; the fixed-point quadratics lose conditioning past it.
pub const POLE_LIMIT: f64 = 1.0 - 1e-12;

/// A disk automorphism in normal form: rotation angle θ ∈ [0, 2π) and pole
/// a with |a| < 1, acting by z ↦ e^{iθ}(z − a)/(1 − conj(a)·z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskAutomorphism {
    theta: f64,
    a: Complex64,
}

impl DiskAutomorphism {
    pub fn new(theta: f64, a: Complex64) -> Result<Self, MobiusError> {
        if !theta.is_finite() || !a.re.is_finite() || !a.im.is_finite() {
            return Err(MobiusError::InvalidInput("non-finite normal form".into()));
        }
        let r = a.norm();
        if r >= POLE_LIMIT {
            return Err(MobiusError::NearDegeneratePole { modulus: r });
        }
        Ok(Self { theta: theta.rem_euclid(2.0 * PI), a })
    }

    pub fn identity() -> Self {
        Self { theta: 0.0, a: Complex64::new(0.0, 0.0) }
    }

    /// Euclidean rotation about the origin.
    pub fn rotation(theta: f64) -> Self {
        Self { theta: theta.rem_euclid(2.0 * PI), a: Complex64::new(0.0, 0.0) }
    }

    /// Rotation by `angle` about an interior `center`.
    pub fn rotation_about(center: Complex64, angle: f64) -> Result<Self, MobiusError> {
        let r2 = center.norm_sqr();
        if r2 >= POLE_LIMIT * POLE_LIMIT {
            return Err(MobiusError::NearDegeneratePole { modulus: r2.sqrt() });
        }
        let s = 1.0 - r2;
        let half = Complex64::from_polar(1.0, angle / 2.0);
        let alpha = (half - r2 * half.conj()) / s;
        let beta = -Complex64::i() * 2.0 * center * (angle / 2.0).sin() / s;
        Su11Matrix { alpha, beta }.renormalized().to_disk()
    }

    /// Hyperbolic isometry with the given boundary fixed points and
    /// translation length ℓ > 0, translating toward `attracting`.
    pub fn hyperbolic_with_axis(
        attracting: Complex64,
        repelling: Complex64,
        length: f64,
    ) -> Result<Self, MobiusError> {
        let (x, b) = axis_generator(attracting, repelling)?;
        if !(length > 0.0) {
            return Err(MobiusError::InvalidInput(format!(
                "translation length must be positive, got {length}"
            )));
        }
        let t = length / 2.0;
        let alpha = Complex64::new(t.cosh(), x * t.sinh());
        let beta = b * t.sinh();
        Su11Matrix { alpha, beta }.renormalized().to_disk()
    }

    /// Parabolic isometry fixing the boundary point `fixed` with translation
    /// parameter u: the SU(1,1) pair (1 + iu, −iu·ξ). Parameter 0 gives the
    /// identity; u and −u generate the same cyclic group.
    pub fn parabolic_fixing(fixed: Complex64, u: f64) -> Result<Self, MobiusError> {
        let norm = fixed.norm();
        if norm < 1e-12 {
            return Err(MobiusError::InvalidInput("parabolic fixed point at 0".into()));
        }
        let xi = fixed / norm;
        let alpha = Complex64::new(1.0, u);
        let beta = -Complex64::i() * u * xi;
        Su11Matrix { alpha, beta }.to_disk()
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// The normal-form pole a (the preimage of 0).
    pub fn pole(&self) -> Complex64 {
        self.a
    }

    /// Möbius action on the closed disk. Interior maps to interior, boundary
    /// to boundary; there is no pole for |a| < 1.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        let phase = Complex64::from_polar(1.0, self.theta);
        phase * (z - self.a) / (Complex64::new(1.0, 0.0) - self.a.conj() * z)
    }

    pub fn to_su11(&self) -> Su11Matrix {
        let s = (1.0 - self.a.norm_sqr()).sqrt();
        let half = Complex64::from_polar(1.0, self.theta / 2.0);
        Su11Matrix { alpha: half / s, beta: -half * self.a / s }
    }

    pub fn to_sl2r(&self) -> Sl2RMatrix {
        self.to_su11().to_sl2r()
    }

    /// Group law g∘h (apply h first). Errors only when the composition is
    /// near-degenerate in normal form.
    pub fn compose(&self, other: &Self) -> Result<Self, MobiusError> {
        self.to_su11().mul(&other.to_su11()).to_disk()
    }

    /// Exact closed-form inverse; never degenerates.
    pub fn inverse(&self) -> Self {
        let theta = (-self.theta).rem_euclid(2.0 * PI);
        let a = -Complex64::from_polar(1.0, self.theta) * self.a;
        Self { theta, a }
    }

    /// n-th power (negative allowed), via square-and-multiply on the matrix
    /// representative with per-step renormalization.
    pub fn power(&self, n: i64) -> Result<Self, MobiusError> {
        self.to_su11().power(n).to_disk()
    }
}

/// The normalized axis generator for a hyperbolic one-parameter group with
/// the given ordered boundary endpoints: the su(1,1) element
/// A = [[ix, b], [conj b, −ix]] with |b|² − x² = 1 whose +1 eigenvector is
/// the first endpoint. exp(tA) = cosh(t)·I + sinh(t)·A translates toward the
/// first endpoint for t > 0 and has translation length 2t.
pub fn axis_generator(
    toward: Complex64,
    away: Complex64,
) -> Result<(f64, Complex64), MobiusError> {
    let p = unitize(toward)?;
    let q = unitize(away)?;
    let gap = (p - q).norm();
    if gap < 1e-9 {
        return Err(MobiusError::InvalidInput(
            "axis endpoints coincide; no hyperbolic axis".into(),
        ));
    }
    let b_conj = 2.0 / (p - q);
    let x = ((p + q) / (Complex64::i() * (p - q))).re;
    let b = b_conj.conj();
    // |b|² − x² = 1 holds exactly in real arithmetic; renormalize the
    // floating-point residue.
    let norm = (b.norm_sqr() - x * x).sqrt();
    Ok((x / norm, b / norm))
}

fn unitize(z: Complex64) -> Result<Complex64, MobiusError> {
    let n = z.norm();
    if n < 1e-12 {
        return Err(MobiusError::InvalidInput("boundary point at 0".into()));
    }
    Ok(z / n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_acts_trivially() {
        let z = c(0.3, 0.1);
        assert!((DiskAutomorphism::identity().apply(z) - z).norm() < 1e-15);
    }

    #[test]
    fn rotation_at_origin_is_euclidean() {
        let g = DiskAutomorphism::rotation(PI / 2.0);
        let w = g.apply(c(0.5, 0.0));
        assert!((w - c(0.0, 0.5)).norm() < 1e-15);
    }

    #[test]
    fn pole_maps_to_zero() {
        let g = DiskAutomorphism::new(0.0, c(0.5, 0.0)).unwrap();
        assert!(g.apply(c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn near_boundary_pole_rejected() {
        assert!(matches!(
            DiskAutomorphism::new(0.0, c(1.0 - 1e-13, 0.0)),
            Err(MobiusError::NearDegeneratePole { .. })
        ));
    }

    #[test]
    fn su11_round_trip_reproduces_normal_form() {
        let g = DiskAutomorphism::new(4.2, c(-0.3, 0.55)).unwrap();
        let back = g.to_su11().to_disk().unwrap();
        assert!((g.theta() - back.theta()).abs() < 1e-12);
        assert!((g.pole() - back.pole()).norm() < 1e-12);
    }

    #[test]
    fn to_su11_matches_normalized_translation_matrix() {
        // z ↦ (z + 0.5)/(1 + 0.5z), i.e. θ = 0, a = -0.5; the normalized
        // matrix [[1, 0.5], [0.5, 1]]/sqrt(0.75).
        let g = DiskAutomorphism::new(0.0, c(-0.5, 0.0)).unwrap();
        let m = g.to_su11();
        let k = 0.75f64.sqrt();
        assert!((m.alpha - c(1.0 / k, 0.0)).norm() < 1e-14);
        assert!((m.beta - c(0.5 / k, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = DiskAutomorphism::new(2.7, c(0.4, -0.2)).unwrap();
        let e = g.compose(&g.inverse()).unwrap();
        assert!(e.theta().min(2.0 * PI - e.theta()) < 1e-12);
        assert!(e.pole().norm() < 1e-12);
    }

    #[test]
    fn rotation_about_center_fixes_center() {
        let center = c(0.2, 0.6);
        let g = DiskAutomorphism::rotation_about(center, 1.3).unwrap();
        assert!((g.apply(center) - center).norm() < 1e-13);
    }

    #[test]
    fn hyperbolic_axis_endpoints_are_fixed() {
        let p = c(1.0, 0.0);
        let q = c(-1.0, 0.0);
        let g = DiskAutomorphism::hyperbolic_with_axis(p, q, 3f64.ln()).unwrap();
        assert!((g.apply(p) - p).norm() < 1e-12);
        assert!((g.apply(q) - q).norm() < 1e-12);
        // 0 moves toward the attracting endpoint by tanh(ℓ/2) = 0.5.
        assert!((g.apply(c(0.0, 0.0)) - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn parabolic_fixes_only_its_boundary_point() {
        let xi = c(0.0, 1.0);
        let g = DiskAutomorphism::parabolic_fixing(xi, 0.8).unwrap();
        assert!((g.apply(xi) - xi).norm() < 1e-12);
        assert!((g.to_su11().trace().abs() - 2.0).abs() < 1e-12);
    }
}
