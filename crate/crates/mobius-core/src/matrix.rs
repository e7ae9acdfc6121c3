//! Matrix representations: SU(1,1) for the disk model, SL(2,R) for the
//! upper half-plane, and the Cayley conjugation between them.

use num_complex::Complex64;

use crate::disk::DiskAutomorphism;
use crate::error::MobiusError;

/// Tolerance accepted on the unit pseudo-determinant of matrix inputs.
pub const DET_TOLERANCE: f64 = 1e-9;

/// The matrix [[α, β], [conj β, conj α]] with |α|² − |β|² = 1, acting on the
/// disk by z ↦ (αz + β)/(conj(β)z + conj(α)). The pair (α, β) and its
/// negative denote the same isometry; no global sign is ever canonicalized,
/// all metrics minimize over the two signs instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su11Matrix {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl Su11Matrix {
    /// Build from entries, rejecting pseudo-determinant defects beyond
    /// [`DET_TOLERANCE`] and renormalizing the accepted ones exactly.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self, MobiusError> {
        let pd = alpha.norm_sqr() - beta.norm_sqr();
        if !(pd - 1.0).abs().is_finite() || (pd - 1.0).abs() > DET_TOLERANCE {
            return Err(MobiusError::InvalidMatrix { defect: pd - 1.0 });
        }
        Ok(Self { alpha, beta }.renormalized())
    }

    pub fn identity() -> Self {
        Self { alpha: Complex64::new(1.0, 0.0), beta: Complex64::new(0.0, 0.0) }
    }

    /// |α|² − |β|²; equals 1 for a valid representative.
    pub fn pseudo_det(&self) -> f64 {
        self.alpha.norm_sqr() - self.beta.norm_sqr()
    }

    /// Rescale so the pseudo-determinant is exactly 1 again. Cheap, and done
    /// after every product so long op chains do not drift.
    pub fn renormalized(&self) -> Self {
        let pd = self.pseudo_det();
        let k = 1.0 / pd.sqrt();
        Self { alpha: self.alpha * k, beta: self.beta * k }
    }

    /// Group law: matrix product, renormalized.
    pub fn mul(&self, rhs: &Self) -> Self {
        let alpha = self.alpha * rhs.alpha + self.beta * rhs.beta.conj();
        let beta = self.alpha * rhs.beta + self.beta * rhs.alpha.conj();
        Self { alpha, beta }.renormalized()
    }

    pub fn inverse(&self) -> Self {
        Self { alpha: self.alpha.conj(), beta: -self.beta }
    }

    pub fn negated(&self) -> Self {
        Self { alpha: -self.alpha, beta: -self.beta }
    }

    /// Möbius action on the closed disk.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.alpha * z + self.beta) / (self.beta.conj() * z + self.alpha.conj())
    }

    /// Trace of this representative (the projective invariant is |trace|).
    pub fn trace(&self) -> f64 {
        2.0 * self.alpha.re
    }

    /// n-th power by square-and-multiply, renormalizing at every step.
    pub fn power(&self, n: i64) -> Self {
        if n == 0 {
            return Self::identity();
        }
        let mut base = if n < 0 { self.inverse() } else { *self };
        let mut exp = n.unsigned_abs();
        let mut acc = Self::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Extract the (θ, a) normal form.
    pub fn to_disk(&self) -> Result<DiskAutomorphism, MobiusError> {
        let m = self.renormalized();
        let theta = (2.0 * m.alpha.arg()).rem_euclid(2.0 * std::f64::consts::PI);
        let a = -m.beta / m.alpha;
        DiskAutomorphism::new(theta, a)
    }

    /// Conjugate by the Cayley map to the half-plane picture.
    pub fn to_sl2r(&self) -> Sl2RMatrix {
        let a = self.alpha;
        let b = self.beta;
        Sl2RMatrix {
            p: a.re + b.re,
            q: a.im - b.im,
            r: -a.im - b.im,
            s: a.re - b.re,
        }
    }
}

/// A real matrix [[p, q], [r, s]] of determinant 1 acting on the upper
/// half-plane; ±M are identified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2RMatrix {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
}

impl Sl2RMatrix {
    pub fn new(p: f64, q: f64, r: f64, s: f64) -> Result<Self, MobiusError> {
        let det = p * s - q * r;
        if !(det - 1.0).abs().is_finite() || (det - 1.0).abs() > DET_TOLERANCE {
            return Err(MobiusError::InvalidMatrix { defect: det - 1.0 });
        }
        let k = 1.0 / det.sqrt();
        Ok(Self { p: p * k, q: q * k, r: r * k, s: s * k })
    }

    pub fn identity() -> Self {
        Self { p: 1.0, q: 0.0, r: 0.0, s: 1.0 }
    }

    pub fn det(&self) -> f64 {
        self.p * self.s - self.q * self.r
    }

    pub fn trace(&self) -> f64 {
        self.p + self.s
    }

    /// Action on the upper half-plane.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.p * z + self.q) / (self.r * z + self.s)
    }

    /// Conjugate by the Cayley map z ↦ (z − i)/(z + i) into the disk picture.
    pub fn to_su11(&self) -> Su11Matrix {
        let alpha = Complex64::new(0.5 * (self.p + self.s), 0.5 * (self.q - self.r));
        let beta = Complex64::new(0.5 * (self.p - self.s), -0.5 * (self.q + self.r));
        Su11Matrix { alpha, beta }.renormalized()
    }

    pub fn to_disk(&self) -> Result<DiskAutomorphism, MobiusError> {
        self.to_su11().to_disk()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_round_trip_is_identity() {
        let m = Su11Matrix::new(Complex64::new(1.2, 0.3), Complex64::new(0.5, 0.5291502622129181))
            .unwrap();
        let back = m.to_sl2r().to_su11();
        assert!((m.alpha - back.alpha).norm() < 1e-12);
        assert!((m.beta - back.beta).norm() < 1e-12);
    }

    #[test]
    fn sl2r_determinant_checked() {
        assert!(Sl2RMatrix::new(2.0, 0.0, 0.0, 1.0).is_err());
        assert!(Sl2RMatrix::new(2.0, 0.0, 0.0, 0.5).is_ok());
    }

    #[test]
    fn power_matches_repeated_multiplication() {
        let g = Su11Matrix::new(Complex64::new(1.1, 0.2), Complex64::new(0.4, 0.3)).unwrap();
        let mut acc = Su11Matrix::identity();
        for _ in 0..17 {
            acc = acc.mul(&g);
        }
        let pow = g.power(17);
        let scale = 1.0 + acc.alpha.norm();
        assert!((acc.alpha - pow.alpha).norm() < 1e-9 * scale);
        assert!((acc.beta - pow.beta).norm() < 1e-9 * scale);
    }
}
