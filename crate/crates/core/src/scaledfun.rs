//! The scalar functions behind the cone projection.
//!
//! For a fixed query `(y, s)` and `alpha > 0`:
//!
//! * `phi(alpha)   = alpha^2 d_C(y/alpha)^2 = d_{alpha C}(y)^2`
//! * `phi'(alpha)  = -2 alpha <P_C(y/alpha), y/alpha - P_C(y/alpha)>`
//! * `Psi(alpha)   = phi(alpha) + (alpha - s)^2`, with
//!   `Psi(0) = d_{rec C}(y)^2 + s^2` (lower semicontinuous extension)
//! * `Psi'(alpha)  = 2 (alpha - s) + phi'(alpha)`
//!
//! `Psi` is strictly convex on `[0, inf)`; its minimizer gives the
//! projection. Every evaluation at `alpha > 0` costs one call to `P_C`.

use crate::error::{Error, Result};
use crate::sets::SetDescriptor;
use crate::vector::Vector;

/// `(set, y, s)` bound together for repeated evaluation of `phi` and `Psi`.
#[derive(Debug, Clone)]
pub struct PsiEvaluator<'a> {
    set: &'a SetDescriptor,
    y: Vector,
    s: f64,
}

/// Values computed from a single projection of `y / alpha`.
#[derive(Debug, Clone)]
struct Scaled {
    /// `P_C(y / alpha)`
    proj: Vector,
    /// `y / alpha - P_C(y / alpha)`
    residual: Vector,
}

impl<'a> PsiEvaluator<'a> {
    pub fn new(set: &'a SetDescriptor, y: Vector, s: f64) -> Result<Self> {
        set.check_dim(&y)?;
        if !s.is_finite() {
            return Err(Error::InvalidParameter(format!("height must be finite, got {s}")));
        }
        Ok(Self { set, y, s })
    }

    pub fn set(&self) -> &SetDescriptor {
        self.set
    }

    pub fn y(&self) -> &Vector {
        &self.y
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    fn scaled(&self, alpha: f64) -> Result<Scaled> {
        if !(alpha > 0.0) {
            return Err(Error::NonPositiveAlpha(alpha));
        }
        let x = self.y.scale(1.0 / alpha);
        let proj = self.set.project(&x)?;
        let residual = x.sub(&proj);
        Ok(Scaled { proj, residual })
    }

    /// `P_C(y / alpha)`.
    pub fn scaled_projection(&self, alpha: f64) -> Result<Vector> {
        Ok(self.scaled(alpha)?.proj)
    }

    pub fn phi(&self, alpha: f64) -> Result<f64> {
        let sc = self.scaled(alpha)?;
        Ok(alpha * alpha * sc.residual.norm_squared())
    }

    pub fn phi_prime(&self, alpha: f64) -> Result<f64> {
        let sc = self.scaled(alpha)?;
        // firm nonexpansiveness with P_C(0) = 0 makes the inner product
        // nonnegative; clamp away rounding noise of the wrong sign
        Ok((-2.0 * alpha * sc.proj.dot(&sc.residual)).min(0.0))
    }

    /// `Psi(alpha)` for `alpha >= 0`.
    pub fn psi(&self, alpha: f64) -> Result<f64> {
        if alpha < 0.0 || alpha.is_nan() {
            return Err(Error::NegativeAlpha(alpha));
        }
        if alpha == 0.0 {
            let dist = self.set.recession_distance(&self.y)?;
            return Ok(dist * dist + self.s * self.s);
        }
        Ok(self.phi(alpha)? + (alpha - self.s).powi(2))
    }

    pub fn psi_prime(&self, alpha: f64) -> Result<f64> {
        Ok(2.0 * (alpha - self.s) + self.phi_prime(alpha)?)
    }
}

/// Right derivative `Psi'_+(0) = -2 s - 2 <z, y> - 2 gamma |y|` for the ball
/// `B(z, gamma)`; `alpha* = 0` exactly when this is nonnegative.
pub fn psi_prime_plus_zero_ball(z: &Vector, gamma: f64, y: &Vector, s: f64) -> Result<f64> {
    let norm = z.norm();
    if norm > gamma {
        return Err(Error::CenterOutsideRadius {
            norm,
            radius: gamma,
        });
    }
    if z.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            found: y.dim(),
        });
    }
    Ok(-2.0 * s - 2.0 * z.dot(y) - 2.0 * gamma * y.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::from_slice(c).unwrap()
    }

    fn unit_ball() -> SetDescriptor {
        SetDescriptor::centered_ball(2, 1.0).unwrap()
    }

    #[test]
    fn phi_examples() {
        let ball = unit_ball();
        let ev = PsiEvaluator::new(&ball, v(&[3.0, 4.0]), 0.0).unwrap();
        assert!((ev.phi(1.0).unwrap() - 16.0).abs() < 1e-12);
        assert_eq!(ev.phi(5.0).unwrap(), 0.0);
        let origin = PsiEvaluator::new(&ball, Vector::zeros(2), 0.0).unwrap();
        assert_eq!(origin.phi(1.0).unwrap(), 0.0);
        assert_eq!(ev.phi(0.0), Err(Error::NonPositiveAlpha(0.0)));
        assert_eq!(ev.phi_prime(-1.0), Err(Error::NonPositiveAlpha(-1.0)));
    }

    #[test]
    fn phi_prime_examples() {
        let ball = unit_ball();
        let ev = PsiEvaluator::new(&ball, v(&[3.0, 4.0]), 0.0).unwrap();
        let d = ev.phi_prime(1.0).unwrap();
        assert!((d + 8.0).abs() < 1e-12);
        let h = 1e-6;
        let fd = (ev.phi(1.0 + h).unwrap() - ev.phi(1.0 - h).unwrap()) / (2.0 * h);
        assert!((fd - d).abs() / d.abs() < 1e-6);

        let origin = PsiEvaluator::new(&ball, Vector::zeros(2), 0.0).unwrap();
        assert_eq!(origin.phi_prime(0.7).unwrap(), 0.0);

        let pen = SetDescriptor::ball_pen(v(&[0.0, 1.0])).unwrap();
        let ev = PsiEvaluator::new(&pen, v(&[3.0, -4.0]), 0.0).unwrap();
        let d = ev.phi_prime(1.0).unwrap();
        assert!((d + 8.0).abs() < 1e-12, "{d}");
        let fd = (ev.phi(1.0 + h).unwrap() - ev.phi(1.0 - h).unwrap()) / (2.0 * h);
        assert!((fd - d).abs() / d.abs() < 1e-6);
    }

    #[test]
    fn psi_examples() {
        let shifted = SetDescriptor::euclidean_ball(v(&[1.0, 0.0]), 1.0).unwrap();
        let ev = PsiEvaluator::new(&shifted, v(&[1.0, 2.0]), 1.0).unwrap();
        assert!((ev.psi(1.0).unwrap() - 1.0).abs() < 1e-12);

        let ball = unit_ball();
        let ev = PsiEvaluator::new(&ball, Vector::zeros(2), 0.0).unwrap();
        assert_eq!(ev.psi(0.0).unwrap(), 0.0);

        let pen = SetDescriptor::ball_pen(v(&[0.0, 1.0])).unwrap();
        let ev = PsiEvaluator::new(&pen, v(&[0.0, -2.0]), -3.0).unwrap();
        assert_eq!(ev.psi(0.0).unwrap(), 13.0);
        assert_eq!(ev.psi(-1.0), Err(Error::NegativeAlpha(-1.0)));

        let hyp = SetDescriptor::Hyperbolic;
        let ev = PsiEvaluator::new(&hyp, v(&[1.0, 0.0]), 0.0).unwrap();
        assert_eq!(ev.psi(0.0), Err(Error::CapabilityMissing("hyperbolic")));
    }

    #[test]
    fn psi_prime_trivial_case() {
        let ball = unit_ball();
        let ev = PsiEvaluator::new(&ball, Vector::zeros(2), 0.0).unwrap();
        assert_eq!(ev.psi_prime(1.0).unwrap(), 2.0);
    }

    #[test]
    fn ball_right_derivative_at_zero() {
        let d = psi_prime_plus_zero_ball(&v(&[1.0, 0.0]), 1.0, &v(&[1.0, 2.0]), 1.0).unwrap();
        assert!((d - (-4.0 - 2.0 * 5f64.sqrt())).abs() < 1e-12);
        assert!((d + 8.472).abs() < 1e-3);
        assert_eq!(
            psi_prime_plus_zero_ball(&Vector::zeros(2), 1.0, &Vector::zeros(2), -1.0).unwrap(),
            2.0
        );
        assert_eq!(
            psi_prime_plus_zero_ball(&Vector::zeros(2), 2.0, &v(&[3.0, 4.0]), -20.0).unwrap(),
            20.0
        );
        assert!(matches!(
            psi_prime_plus_zero_ball(&v(&[2.0, 0.0]), 1.0, &v(&[1.0, 2.0]), 1.0),
            Err(Error::CenterOutsideRadius { .. })
        ));
    }
}
