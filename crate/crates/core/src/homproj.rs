//! Projection onto the homogenization cone `K = cl cone(C x {1})`.
//!
//! The projection is `(alpha* P_C(y/alpha*), alpha*)` when the minimizer
//! `alpha*` of `Psi` is positive and `(P_{rec C}(y), 0)` otherwise.
//! `alpha*` is found by a bracketing bisection on `Psi'`; centered balls and
//! ball-pen sets have closed forms that bypass it.

use crate::error::{Error, Result};
use crate::scaledfun::PsiEvaluator;
use crate::sets::{ray_distance, SetDescriptor};
use crate::vector::Vector;

/// `|Psi'| below this counts as a zero of the derivative.
pub const DERIVATIVE_ZERO_TOL: f64 = 1e-12;

/// Once the lower bracket end drops below this with `Psi' > 0` still
/// holding, the minimizer is declared to be `0`.
pub const ALPHA_ZERO: f64 = 1e-12;

/// A point `(y, s)` of `X x R`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConePoint {
    pub y: Vector,
    pub s: f64,
}

impl ConePoint {
    pub fn new(y: Vector, s: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::InvalidParameter(format!("height must be finite, got {s}")));
        }
        Ok(Self { y, s })
    }

    pub fn apex(dim: usize) -> Self {
        Self {
            y: Vector::zeros(dim),
            s: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.y.dim()
    }

    pub fn dot(&self, other: &ConePoint) -> f64 {
        self.y.dot(&other.y) + self.s * other.s
    }

    pub fn norm(&self) -> f64 {
        self.y.norm().hypot(self.s)
    }

    pub fn sub(&self, other: &ConePoint) -> ConePoint {
        ConePoint {
            y: self.y.sub(&other.y),
            s: self.s - other.s,
        }
    }

    pub fn add(&self, other: &ConePoint) -> ConePoint {
        ConePoint {
            y: self.y.add(&other.y),
            s: self.s + other.s,
        }
    }

    pub fn scale(&self, factor: f64) -> ConePoint {
        ConePoint {
            y: self.y.scale(factor),
            s: self.s * factor,
        }
    }

    pub fn distance(&self, other: &ConePoint) -> f64 {
        self.sub(other).norm()
    }

    /// Coordinates `(y_1, ..., y_n, s)`.
    pub fn to_vec(&self) -> Vec<f64> {
        let mut out = self.y.coords().to_vec();
        out.push(self.s);
        out
    }
}

/// Which piece of the projection formula produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The query already lies in `K` and is returned unchanged.
    AlreadyInK,
    /// `alpha* = 0`: the projection is `(P_{rec C}(y), 0)`.
    Recession,
    /// `alpha* > 0`: the projection is `(alpha* P_C(y/alpha*), alpha*)`.
    ConeInterior,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::AlreadyInK => "already_in_k",
            Branch::Recession => "recession",
            Branch::ConeInterior => "cone_interior",
        }
    }
}

/// One pass of the bracketing loop. `mid` is present only on bisection rows.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub n: usize,
    pub alpha: f64,
    pub mid: Option<f64>,
    pub beta: f64,
    pub dpsi_alpha: f64,
    pub dpsi_mid: Option<f64>,
    pub dpsi_beta: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BisectionTrace {
    pub rows: Vec<TraceRow>,
}

impl BisectionTrace {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionResult {
    pub alpha_star: f64,
    pub point: ConePoint,
    pub branch: Branch,
    pub iterations: usize,
    pub trace: Option<BisectionTrace>,
}

/// Starting bracket, tolerance and dispatch switches for [`project_homogenization`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionOptions {
    pub alpha0: f64,
    pub beta0: f64,
    pub eps: f64,
    pub max_iter: usize,
    /// Run the bisection even when a closed form exists.
    pub force_iterative: bool,
    /// Keep the per-iteration trace in the result.
    pub keep_trace: bool,
}

impl Default for ProjectionOptions {
    fn default() -> Self {
        Self {
            alpha0: 1.0,
            beta0: 2.0,
            eps: 1e-6,
            max_iter: 200,
            force_iterative: false,
            keep_trace: false,
        }
    }
}

/// Minimize `Psi` by bracketing its derivative.
///
/// Each pass evaluates `Psi'` at both bracket ends:
///
/// * `Psi'(alpha) < 0 < Psi'(beta)`: bisect, stopping with `alpha` once
///   `beta - alpha < eps`;
/// * `Psi'(alpha) > 0`: shift the bracket to `[alpha/2, alpha]`;
/// * `Psi'(beta) < 0`: shift the bracket to `[beta, 2 beta]`.
///
/// A derivative with magnitude below [`DERIVATIVE_ZERO_TOL`] ends the search
/// at that point. If `Psi'(alpha) > 0` persists until `alpha < ALPHA_ZERO`
/// the minimizer is `0`.
pub fn find_alpha_star(
    ev: &PsiEvaluator<'_>,
    alpha0: f64,
    beta0: f64,
    eps: f64,
    max_iter: usize,
) -> Result<(f64, BisectionTrace)> {
    if !(alpha0 > 0.0 && beta0 > alpha0 && beta0.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < alpha0 < beta0, got alpha0 = {alpha0}, beta0 = {beta0}"
        )));
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let mut trace = BisectionTrace::default();
    let (mut alpha, mut beta) = (alpha0, beta0);

    for n in 1..=max_iter {
        let dpsi_alpha = ev.psi_prime(alpha)?;
        let dpsi_beta = ev.psi_prime(beta)?;
        let mut row = TraceRow {
            n,
            alpha,
            mid: None,
            beta,
            dpsi_alpha,
            dpsi_mid: None,
            dpsi_beta,
        };

        if dpsi_alpha.abs() < DERIVATIVE_ZERO_TOL {
            trace.rows.push(row);
            return Ok((alpha, trace));
        }
        if dpsi_beta.abs() < DERIVATIVE_ZERO_TOL {
            trace.rows.push(row);
            return Ok((beta, trace));
        }

        if dpsi_alpha < 0.0 && dpsi_beta > 0.0 {
            let mid = 0.5 * (alpha + beta);
            let dpsi_mid = ev.psi_prime(mid)?;
            row.mid = Some(mid);
            row.dpsi_mid = Some(dpsi_mid);
            trace.rows.push(row);
            if beta - alpha < eps {
                return Ok((alpha, trace));
            }
            if dpsi_mid.abs() < DERIVATIVE_ZERO_TOL {
                return Ok((mid, trace));
            }
            if dpsi_mid < 0.0 {
                alpha = mid;
            } else {
                beta = mid;
            }
        } else if dpsi_alpha > 0.0 {
            trace.rows.push(row);
            if alpha < ALPHA_ZERO {
                // the zero branch needs P_{rec C}
                ev.set().project_recession(ev.y())?;
                return Ok((0.0, trace));
            }
            beta = alpha;
            alpha *= 0.5;
        } else {
            trace.rows.push(row);
            alpha = beta;
            beta *= 2.0;
        }
    }
    Err(Error::MaxIterationsExceeded(max_iter))
}

/// Project `p` onto `K = cl cone(set x {1})`.
///
/// Centered balls and ball-pen sets use their closed forms unless
/// `opts.force_iterative` is set; everything else runs [`find_alpha_star`].
pub fn project_homogenization(
    set: &SetDescriptor,
    p: &ConePoint,
    opts: &ProjectionOptions,
) -> Result<ProjectionResult> {
    set.check_dim(&p.y)?;

    if let Some(done) = already_in_k(set, p)? {
        return Ok(done);
    }

    if !opts.force_iterative {
        match set {
            SetDescriptor::EuclideanBall { center, radius } if center.is_zero() => {
                return Ok(project_ice_cream(*radius, p));
            }
            SetDescriptor::BallPen { direction } => return Ok(project_ball_pen(direction, p)),
            _ => {}
        }
    }

    let ev = PsiEvaluator::new(set, p.y.clone(), p.s)?;
    let (alpha_star, trace) = find_alpha_star(&ev, opts.alpha0, opts.beta0, opts.eps, opts.max_iter)?;
    let iterations = trace.len();
    let (point, branch) = if alpha_star == 0.0 {
        (
            ConePoint {
                y: set.project_recession(&p.y)?,
                s: 0.0,
            },
            Branch::Recession,
        )
    } else {
        (
            ConePoint {
                y: ev.scaled_projection(alpha_star)?.scale(alpha_star),
                s: alpha_star,
            },
            Branch::ConeInterior,
        )
    };
    Ok(ProjectionResult {
        alpha_star,
        point,
        branch,
        iterations,
        trace: opts.keep_trace.then_some(trace),
    })
}

fn unchanged(p: &ConePoint, alpha_star: f64) -> ProjectionResult {
    ProjectionResult {
        alpha_star,
        point: p.clone(),
        branch: Branch::AlreadyInK,
        iterations: 0,
        trace: None,
    }
}

/// Detect `p in K` before any iteration: `s > 0` with `y/s in C`, or `s = 0`
/// with `y in rec C`.
fn already_in_k(set: &SetDescriptor, p: &ConePoint) -> Result<Option<ProjectionResult>> {
    if p.s > 0.0 {
        let x = p.y.scale(1.0 / p.s);
        let gap = x.distance(&set.project(&x)?);
        if gap <= 1e-15 * x.norm().max(1.0) {
            return Ok(Some(unchanged(p, p.s)));
        }
    } else if p.s == 0.0 {
        if p.y.is_zero() {
            return Ok(Some(unchanged(p, 0.0)));
        }
        if let Some(cone) = set.recession_cone() {
            if cone.distance(&p.y) <= 1e-15 * p.y.norm() {
                return Ok(Some(unchanged(p, 0.0)));
            }
        }
    }
    Ok(None)
}

/// Closed-form projection onto the ice cream cone
/// `{(y, s) : |y| <= gamma s}` generated by `B(0, gamma)`.
pub fn project_ice_cream(gamma: f64, p: &ConePoint) -> ProjectionResult {
    let norm = p.y.norm();
    let s = p.s;
    if norm <= gamma * s || (norm == 0.0 && s == 0.0) {
        return unchanged(p, s);
    }
    if gamma * norm <= -s {
        return ProjectionResult {
            alpha_star: 0.0,
            point: ConePoint::apex(p.dim()),
            branch: Branch::Recession,
            iterations: 0,
            trace: None,
        };
    }
    let alpha_star = (s + gamma * norm) / (1.0 + gamma * gamma);
    ProjectionResult {
        alpha_star,
        point: ConePoint {
            y: p.y.scale(alpha_star * gamma / norm),
            s: alpha_star,
        },
        branch: Branch::ConeInterior,
        iterations: 0,
        trace: None,
    }
}

/// Closed-form projection onto the homogenization of the ball-pen set
/// `B(0, 1) + R_+ d`, split on `delta = d_R(y)` against `-s` and `s`.
pub fn project_ball_pen(direction: &Vector, p: &ConePoint) -> ProjectionResult {
    let delta = ray_distance(direction, &p.y);
    let s = p.s;
    if delta <= -s {
        if s == 0.0 {
            // delta = 0: y is on the ray
            return unchanged(p, 0.0);
        }
        return ProjectionResult {
            alpha_star: 0.0,
            point: ConePoint {
                y: direction.scale(p.y.dot(direction).max(0.0)),
                s: 0.0,
            },
            branch: Branch::Recession,
            iterations: 0,
            trace: None,
        };
    }
    if delta <= s {
        // y/s lies in C, so s P_C(y/s) = y
        return unchanged(p, s);
    }
    let alpha_star = 0.5 * (s + delta);
    let x = p.y.scale(1.0 / alpha_star);
    let on_ray = direction.scale(x.dot(direction).max(0.0));
    let offset = x.sub(&on_ray);
    let dist = offset.norm();
    let proj = if dist <= 1.0 {
        x
    } else {
        on_ray.axpy(1.0 / dist, &offset)
    };
    ProjectionResult {
        alpha_star,
        point: ConePoint {
            y: proj.scale(alpha_star),
            s: alpha_star,
        },
        branch: Branch::ConeInterior,
        iterations: 0,
        trace: None,
    }
}

/// Coefficients of the quartic `xi0 + xi1 a + xi2 a^2 + xi3 a^3 + xi4 a^4`
/// satisfied by `alpha*` for the ball `B(z, gamma)` when `|y - alpha z| > alpha gamma`.
///
/// Squaring during the derivation can add spurious roots, so this is used
/// only to check candidate minimizers, never to produce them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticCoefficients {
    pub xi: [f64; 5],
}

impl QuarticCoefficients {
    pub fn residual(&self, alpha: f64) -> f64 {
        self.xi.iter().rev().fold(0.0, |acc, c| acc * alpha + c)
    }
}

pub fn quartic_coefficients(z: &Vector, gamma: f64, y: &Vector, s: f64) -> Result<QuarticCoefficients> {
    let zn2 = z.norm_squared();
    let zn = zn2.sqrt();
    if zn > gamma {
        return Err(Error::CenterOutsideRadius {
            norm: zn,
            radius: gamma,
        });
    }
    if z.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            found: y.dim(),
        });
    }
    let g2 = gamma * gamma;
    let yn2 = y.norm_squared();
    let zy = z.dot(y);
    let t = s + zy;
    let k = g2 + zn2 + 1.0;

    let xi0 = t * t * yn2 - g2 * yn2 * yn2;
    let xi1 = -2.0 * t * k * yn2 - 2.0 * zy * t * t + 6.0 * g2 * yn2 * zy;
    let xi2 = -4.0 * g2 * yn2 * zn2 - 9.0 * g2 * zy * zy + k * k * yn2 + t * t * zn2 + 4.0 * k * t * zy;
    let xi3 = 12.0 * g2 * zy * zn2 - 2.0 * k * t * zn2 - 2.0 * k * k * zy;
    let xi4 = zn2 * (1.0 + (gamma + zn).powi(2)) * (1.0 + (gamma - zn).powi(2));
    Ok(QuarticCoefficients {
        xi: [xi0, xi1, xi2, xi3, xi4],
    })
}
