//! Polar sets, polar cones and the polar of the homogenization cone.
//!
//! With `sigma_C` the support function of `C`:
//!
//! * polar set `C° = {y : sigma_C(y) <= 1}`
//! * polar cone `C^- = {y : sigma_C(y) <= 0}`
//! * `K^- = cone(C° x {-1})  ⊎  (C^- x {0})`, equivalently `cl cone(C° x {-1})`.
//!
//! The membership oracles here need nothing beyond `sigma_C`. The catalog
//! in [`closed_form_polar`] gives independent descriptions of `C°` for every
//! set variant.

use crate::error::Result;
use crate::homproj::ConePoint;
use crate::sets::{SetDescriptor, MEMBERSHIP_TOL};
use crate::vector::Vector;

pub const DEFAULT_TOL: f64 = MEMBERSHIP_TOL;

/// `y in C°`, i.e. `sigma_C(y) <= 1 + tol`.
pub fn polar_membership(set: &SetDescriptor, y: &Vector, tol: f64) -> Result<bool> {
    Ok(tolerant_support(set, y, tol)? <= 1.0 + tol)
}

/// `y in C^-`, i.e. `sigma_C(y) <= tol`.
pub fn polar_cone_membership(set: &SetDescriptor, y: &Vector, tol: f64) -> Result<bool> {
    Ok(tolerant_support(set, y, tol)? <= tol)
}

/// `sigma_C(y)`, or `sigma_C` at the nearest point of the barrier cone when
/// `y` lies outside it by at most `tol (1 + |y|)`.
fn tolerant_support(set: &SetDescriptor, y: &Vector, tol: f64) -> Result<f64> {
    let sigma = set.support_function(y)?;
    if sigma.is_finite() || tol <= 0.0 {
        return Ok(sigma);
    }
    match barrier_retract(set, y) {
        Some(r) if r.distance(y) <= tol * (1.0 + y.norm()) => set.support_function(&r),
        _ => Ok(sigma),
    }
}

/// Projection onto the barrier cone `dom sigma_C` for the unbounded sets.
fn barrier_retract(set: &SetDescriptor, y: &Vector) -> Option<Vector> {
    // a few ulps past the boundary so rounding cannot leave the result outside
    let margin = 4.0 * f64::EPSILON * (1.0 + y.norm());
    let halfspace = |d: &Vector| y.axpy(-(y.dot(d).max(0.0) + margin), d);
    match set {
        SetDescriptor::BallPen { direction } => Some(halfspace(direction)),
        SetDescriptor::BallPlusHalfAxisStrip => Some(halfspace(&Vector::raw(vec![0.0, 1.0]))),
        SetDescriptor::Hyperbolic => {
            let (u, v) = (y[0], y[1]);
            if u >= v.abs() {
                Some(y.clone())
            } else if u <= -v.abs() {
                Some(Vector::zeros(2))
            } else {
                let t = 0.5 * (u + v.abs());
                Some(Vector::raw(vec![t, t * v.signum()]))
            }
        }
        _ => None,
    }
}

/// `(y, s) in K^-` for `K = cl cone(C x {1})`.
///
/// Points with `s < 0` are tested through `y/|s| in C°`, points with
/// `|s| <= tol` through `y in C^-`; `s > tol` is never in `K^-`.
pub fn homogenization_polar_membership(set: &SetDescriptor, p: &ConePoint, tol: f64) -> Result<bool> {
    set.check_dim(&p.y)?;
    if p.s > tol {
        return Ok(false);
    }
    if p.s < 0.0 && polar_membership(set, &p.y.scale(1.0 / p.s.abs()), tol)? {
        return Ok(true);
    }
    if p.s.abs() <= tol {
        return polar_cone_membership(set, &p.y, tol);
    }
    Ok(false)
}

/// Closed-form polar descriptions that are not themselves catalog sets.
#[derive(Debug, Clone, PartialEq)]
pub enum PolarPredicate {
    /// `gamma |y| <= 1 - <z, y>`: polar of the ball `B(z, gamma)`.
    ShiftedBall { center: Vector, radius: f64 },
    /// `|P_E y|^2 <= 1 + 2 <d, y>` with `E = {d}^perp`: polar of `B(0, 1) - d`.
    ShiftedUnitBall { d: Vector },
    /// `sum_i w_i |y_i| <= 1`: polar of a box with halfwidths `w`.
    WeightedL1 { weights: Vector },
    /// Every `y_i <= 1`: polar of the standard simplex.
    CoordinatesAtMostOne,
    /// `|y| <= 1` and `<y, d> <= 0`: polar of `B(0, 1) + R_+ d`.
    DiscInPolarHalfspace { direction: Vector },
    /// `|y2| <= y1` and (`y1 <= 1` or `1 + y2^2 <= 2 y1`): polar of the
    /// hyperbolic set.
    Hyperbolic,
}

impl PolarPredicate {
    pub fn contains(&self, y: &Vector, tol: f64) -> bool {
        match self {
            Self::ShiftedBall { center, radius } => radius * y.norm() <= 1.0 - center.dot(y) + tol,
            Self::ShiftedUnitBall { d } => {
                let along = d.dot(y);
                let across = y.axpy(-along, d).norm_squared();
                across <= 1.0 + 2.0 * along + tol
            }
            Self::WeightedL1 { weights } => {
                y.coords()
                    .iter()
                    .zip(weights.coords())
                    .map(|(yi, wi)| wi * yi.abs())
                    .sum::<f64>()
                    <= 1.0 + tol
            }
            Self::CoordinatesAtMostOne => y.coords().iter().all(|&yi| yi <= 1.0 + tol),
            Self::DiscInPolarHalfspace { direction } => {
                y.norm() <= 1.0 + tol && y.dot(direction) <= tol
            }
            Self::Hyperbolic => {
                let (u, v) = (y[0], y[1].abs());
                v <= u + tol && (u <= 1.0 + tol || 1.0 + v * v <= 2.0 * u + tol)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    /// `C°` is itself a catalog set.
    Set(SetDescriptor),
    Predicate(PolarPredicate),
}

/// A set together with a closed-form description of its polar.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarDescription {
    pub source: SetDescriptor,
    pub closed_form: ClosedForm,
}

impl PolarDescription {
    pub fn contains(&self, y: &Vector, tol: f64) -> Result<bool> {
        self.source.check_dim(y)?;
        match &self.closed_form {
            ClosedForm::Set(set) => set.contains(y, tol),
            ClosedForm::Predicate(pred) => Ok(pred.contains(y, tol)),
        }
    }
}

/// The known closed form of `C°`.
pub fn closed_form_polar(set: &SetDescriptor) -> Result<PolarDescription> {
    let closed_form = match set {
        SetDescriptor::EuclideanBall { center, radius } => {
            if center.is_zero() {
                ClosedForm::Set(SetDescriptor::centered_ball(center.dim(), 1.0 / radius)?)
            } else if *radius == 1.0 && (center.norm() - 1.0).abs() <= 1e-12 {
                ClosedForm::Predicate(PolarPredicate::ShiftedUnitBall { d: center.scale(-1.0) })
            } else {
                ClosedForm::Predicate(PolarPredicate::ShiftedBall {
                    center: center.clone(),
                    radius: *radius,
                })
            }
        }
        SetDescriptor::Box { halfwidths } => {
            let first = halfwidths[0];
            if first > 0.0 && halfwidths.coords().iter().all(|&b| b == first) {
                SetDescriptor::l1_ball(1.0 / first)?
                    .with_dim(halfwidths.dim())
                    .map(ClosedForm::Set)?
            } else {
                ClosedForm::Predicate(PolarPredicate::WeightedL1 {
                    weights: halfwidths.clone(),
                })
            }
        }
        SetDescriptor::L1Ball { dim, radius } => ClosedForm::Set(SetDescriptor::PBall {
            dim: *dim,
            p: f64::INFINITY,
            radius: 1.0 / radius,
        }),
        SetDescriptor::PBall { dim, p, radius } => {
            let q = if *p == 1.0 {
                f64::INFINITY
            } else if p.is_infinite() {
                1.0
            } else {
                p / (p - 1.0)
            };
            ClosedForm::Set(SetDescriptor::PBall {
                dim: *dim,
                p: q,
                radius: 1.0 / radius,
            })
        }
        SetDescriptor::Ellipsoid(e) => ClosedForm::Set(SetDescriptor::ellipsoid(e.inverse_rows())?),
        SetDescriptor::Simplex { .. } => ClosedForm::Predicate(PolarPredicate::CoordinatesAtMostOne),
        SetDescriptor::ShiftedUnitBall { d } => {
            ClosedForm::Predicate(PolarPredicate::ShiftedUnitBall { d: d.clone() })
        }
        SetDescriptor::BallPen { direction } => {
            ClosedForm::Predicate(PolarPredicate::DiscInPolarHalfspace {
                direction: direction.clone(),
            })
        }
        SetDescriptor::BallPlusHalfAxisStrip => {
            ClosedForm::Predicate(PolarPredicate::DiscInPolarHalfspace {
                direction: Vector::from_slice(&[0.0, 1.0])?,
            })
        }
        SetDescriptor::Hyperbolic => ClosedForm::Predicate(PolarPredicate::Hyperbolic),
    };
    Ok(PolarDescription {
        source: set.clone(),
        closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::from_slice(c).unwrap()
    }

    #[test]
    fn barrier_boundary_is_tolerant() {
        let pen = SetDescriptor::ball_pen(v(&[0.0, 1.0])).unwrap();
        let y = v(&[0.5, 1e-14]);
        assert!(polar_membership(&pen, &y, DEFAULT_TOL).unwrap());
        assert!(!polar_membership(&pen, &y, 0.0).unwrap());
        assert!(!polar_membership(&pen, &v(&[0.5, 1e-3]), DEFAULT_TOL).unwrap());
        let hyp = SetDescriptor::Hyperbolic;
        assert!(polar_membership(&hyp, &v(&[0.5, 0.5 + 1e-12]), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn polar_set_examples() {
        let l1 = SetDescriptor::l1_ball(1.0).unwrap();
        assert!(polar_membership(&l1, &v(&[1.0, 1.0]), DEFAULT_TOL).unwrap());

        let simplex = SetDescriptor::simplex(4).unwrap();
        assert!(polar_membership(&simplex, &v(&[1.0; 4]), DEFAULT_TOL).unwrap());
        assert!(!polar_membership(&simplex, &v(&[0.0, 1.5, 0.0, 0.0]), DEFAULT_TOL).unwrap());

        let hyp = SetDescriptor::Hyperbolic;
        assert!(polar_membership(&hyp, &v(&[1.0, 0.0]), DEFAULT_TOL).unwrap());
        assert!(PolarPredicate::Hyperbolic.contains(&v(&[1.0, 0.0]), DEFAULT_TOL));
    }

    #[test]
    fn polar_cone_examples() {
        let ball = SetDescriptor::centered_ball(2, 1.0).unwrap();
        assert!(!polar_cone_membership(&ball, &v(&[0.0, -1e-3]), DEFAULT_TOL).unwrap());
        assert!(polar_cone_membership(&ball, &Vector::zeros(2), DEFAULT_TOL).unwrap());

        let pen = SetDescriptor::ball_pen(v(&[0.0, 1.0])).unwrap();
        assert!(!polar_cone_membership(&pen, &v(&[0.0, -1.0]), DEFAULT_TOL).unwrap());
        assert!(polar_cone_membership(&pen, &Vector::zeros(2), DEFAULT_TOL).unwrap());

        let square = SetDescriptor::unit_box(2, 1.0).unwrap();
        assert!(!polar_cone_membership(&square, &v(&[-1.0, 0.0]), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn homogenization_polar_examples() {
        let pen = SetDescriptor::ball_pen(v(&[0.0, 1.0])).unwrap();
        let p = ConePoint::new(v(&[0.0, -1.0]), -1.0).unwrap();
        assert!(homogenization_polar_membership(&pen, &p, DEFAULT_TOL).unwrap());
        assert!(homogenization_polar_membership(&pen, &ConePoint::apex(2), DEFAULT_TOL).unwrap());
        let up = ConePoint::new(v(&[0.0, -5.0]), 0.1).unwrap();
        assert!(!homogenization_polar_membership(&pen, &up, DEFAULT_TOL).unwrap());
        let ball = SetDescriptor::centered_ball(3, 2.0).unwrap();
        let p = ConePoint::new(v(&[0.0, 0.0, 0.0]), 1.0).unwrap();
        assert!(!homogenization_polar_membership(&ball, &p, DEFAULT_TOL).unwrap());
        let wrong = ConePoint::new(v(&[0.0, 0.0]), -1.0).unwrap();
        assert!(homogenization_polar_membership(&ball, &wrong, DEFAULT_TOL).is_err());
    }

    #[test]
    fn closed_form_catalog() {
        let ball = SetDescriptor::centered_ball(2, 2.0).unwrap();
        assert_eq!(
            closed_form_polar(&ball).unwrap().closed_form,
            ClosedForm::Set(SetDescriptor::centered_ball(2, 0.5).unwrap())
        );
        let square = SetDescriptor::unit_box(3, 1.0).unwrap();
        let polar = closed_form_polar(&square).unwrap();
        assert!(polar.contains(&v(&[0.5, -0.25, 0.25]), 0.0).unwrap());
        assert!(!polar.contains(&v(&[0.5, -0.5, 0.25]), 0.0).unwrap());

        let d = v(&[0.6, 0.8]);
        let shifted = SetDescriptor::shifted_unit_ball(d.clone()).unwrap();
        assert_eq!(
            closed_form_polar(&shifted).unwrap().closed_form,
            ClosedForm::Predicate(PolarPredicate::ShiftedUnitBall { d })
        );

        // the shifted disc (x1 - 1)^2 + x2^2 <= 1 has polar y1 <= (1 - y2^2)/2
        let disc = SetDescriptor::euclidean_ball(v(&[1.0, 0.0]), 1.0).unwrap();
        let polar = closed_form_polar(&disc).unwrap();
        for y in [[0.3, 0.5], [-2.0, 1.5], [0.49, 0.1], [0.0, 1.01]] {
            let expect = y[0] <= (1.0 - y[1] * y[1]) / 2.0;
            assert_eq!(polar.contains(&v(&y), 0.0).unwrap(), expect, "{y:?}");
        }
    }

    #[test]
    fn hyperbolic_polar_contains_the_triangle_part() {
        // sigma(0.5, 0.4) = 0.5 - 0.3 = 0.2, inside although 1 + y2^2 > 2 y1
        let y = v(&[0.5, 0.4]);
        assert!(polar_membership(&SetDescriptor::Hyperbolic, &y, 0.0).unwrap());
        assert!(PolarPredicate::Hyperbolic.contains(&y, 0.0));
    }
}
