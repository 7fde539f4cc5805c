//! Catalog of closed convex sets containing the origin.
//!
//! Each [`SetDescriptor`] variant knows how to test membership, evaluate its
//! support function and describe its recession cone. Most variants can also
//! project; the remaining ones exist for polar and support-function work.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::Vector;

/// Default absolute tolerance for membership tests.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Tolerance used when checking that user-supplied directions are unit vectors.
const UNIT_TOL: f64 = 1e-9;

/// The set `{x : <x, Q x> <= 1}` for symmetric positive-definite `Q`.
///
/// The eigendecomposition is computed once at construction; projection,
/// support function and polar all go through it.
#[derive(Debug, Clone)]
pub struct Ellipsoid {
    q: DMatrix<f64>,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<f64>,
}

impl Ellipsoid {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter(
                "ellipsoid matrix must be square and non-empty".into(),
            ));
        }
        if rows.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "ellipsoid matrix has non-finite entries".into(),
            ));
        }
        let q = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
        let scale = q.amax().max(1.0);
        for i in 0..n {
            for j in 0..i {
                if (q[(i, j)] - q[(j, i)]).abs() > 1e-12 * scale {
                    return Err(Error::InvalidParameter(
                        "ellipsoid matrix must be symmetric".into(),
                    ));
                }
            }
        }
        let sym = (&q + q.transpose()) * 0.5;
        let eig = SymmetricEigen::new(sym.clone());
        if eig.eigenvalues.iter().any(|&l| l <= 0.0) {
            return Err(Error::InvalidParameter(
                "ellipsoid matrix must be positive definite".into(),
            ));
        }
        Ok(Self {
            q: sym,
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.q.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.q
    }

    /// The rows of `Q^{-1}`.
    pub fn inverse_rows(&self) -> Vec<Vec<f64>> {
        let inv_diag = DMatrix::from_diagonal(&self.eigenvalues.map(|l| 1.0 / l));
        let inv = &self.eigenvectors * inv_diag * self.eigenvectors.transpose();
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| 0.5 * (inv[(i, j)] + inv[(j, i)])).collect())
            .collect()
    }

    fn rows(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.q[(i, j)]).collect())
            .collect()
    }

    fn quad_form(&self, x: &Vector) -> f64 {
        let v = DVector::from_column_slice(x.coords());
        v.dot(&(&self.q * &v))
    }

    fn inverse_quad_form(&self, y: &Vector) -> f64 {
        let w = self.eigenvectors.transpose() * DVector::from_column_slice(y.coords());
        w.iter()
            .zip(self.eigenvalues.iter())
            .map(|(wi, li)| wi * wi / li)
            .sum()
    }

    fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.min()
    }

    /// Nearest point via the multiplier equation
    /// `sum_i l_i w_i^2 / (1 + mu l_i)^2 = 1` in the eigenbasis.
    fn project(&self, x: &Vector) -> Vector {
        if self.quad_form(x) <= 1.0 {
            return x.clone();
        }
        let w = self.eigenvectors.transpose() * DVector::from_column_slice(x.coords());
        let lam = &self.eigenvalues;
        let residual = |mu: f64| -> (f64, f64) {
            let mut f = -1.0;
            let mut df = 0.0;
            for (wi, li) in w.iter().zip(lam.iter()) {
                let denom = 1.0 + mu * li;
                f += li * wi * wi / (denom * denom);
                df -= 2.0 * li * li * wi * wi / (denom * denom * denom);
            }
            (f, df)
        };
        // f is convex and decreasing in mu, so Newton from 0 increases
        // monotonically towards the root without overshooting.
        let mut mu = 0.0;
        for _ in 0..200 {
            let (f, df) = residual(mu);
            if f <= 0.0 || df == 0.0 {
                break;
            }
            let step = f / df;
            let next = mu - step;
            if next - mu <= 1e-16 * next.max(1.0) {
                mu = next;
                break;
            }
            mu = next;
        }
        let c_eig = DVector::from_iterator(
            w.len(),
            w.iter().zip(lam.iter()).map(|(wi, li)| wi / (1.0 + mu * li)),
        );
        let c = &self.eigenvectors * c_eig;
        let mut out = Vector::raw(c.iter().copied().collect());
        let level = self.quad_form(&out);
        if level > 1.0 {
            out = out.scale(1.0 / level.sqrt());
        }
        out
    }
}

impl PartialEq for Ellipsoid {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

/// A nonempty closed convex cone, used for recession cones.
///
/// Only rays, `{0}` and the whole space are needed by the catalog; further
/// cones (e.g. the wedge `x1 <= -|x2|` of the hyperbolic set) would be new
/// variants here.
#[derive(Debug, Clone, PartialEq)]
pub enum ConeDescriptor {
    /// `R_+ d` with `|d| = 1`.
    Ray(Vector),
    Zero,
    FullSpace,
}

impl ConeDescriptor {
    pub fn ray(direction: Vector) -> Result<Self> {
        Ok(Self::Ray(unit_direction(direction, "ray direction")?))
    }

    pub fn project(&self, x: &Vector) -> Vector {
        match self {
            Self::Ray(d) => d.scale(x.dot(d).max(0.0)),
            Self::Zero => Vector::zeros(x.dim()),
            Self::FullSpace => x.clone(),
        }
    }

    pub fn distance(&self, x: &Vector) -> f64 {
        x.distance(&self.project(x))
    }

    pub fn contains(&self, x: &Vector, tol: f64) -> bool {
        self.distance(x) <= tol
    }
}

/// A closed convex set `C` with `0 in C`.
#[derive(Debug, Clone, PartialEq)]
pub enum SetDescriptor {
    /// `{x : |x - center| <= radius}` with `|center| <= radius`.
    EuclideanBall { center: Vector, radius: f64 },
    /// `{x : |x_i| <= halfwidths_i}`.
    Box { halfwidths: Vector },
    /// `{x : |x|_1 <= radius}`; dimension-free unless pinned.
    L1Ball { dim: Option<usize>, radius: f64 },
    /// `{x : |x|_p <= radius}` for `1 <= p <= inf`; dimension-free unless pinned.
    PBall {
        dim: Option<usize>,
        p: f64,
        radius: f64,
    },
    Ellipsoid(Ellipsoid),
    /// `{x : x_i >= 0, sum x_i <= 1}`.
    Simplex { dim: usize },
    /// `B(0, 1) - d` with `|d| = 1`.
    ShiftedUnitBall { d: Vector },
    /// `B(0, 1) + R_+ d` with `|d| = 1`.
    BallPen { direction: Vector },
    /// The planar set `x^2 + y^2 <= 1 or (|x| <= 1 and y >= 0)`, stored as
    /// the unit disc plus the ray `R_+ (0, 1)`.
    BallPlusHalfAxisStrip,
    /// The planar set `x1 <= 1 - sqrt(1 + x2^2)`.
    Hyperbolic,
}

fn unit_direction(d: Vector, what: &str) -> Result<Vector> {
    let n = d.norm();
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::InvalidParameter(format!(
            "{what} must have unit norm, got {n}"
        )));
    }
    Ok(d.scale(1.0 / n))
}

fn positive(value: f64, what: &str) -> Result<f64> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "{what} must be positive and finite, got {value}"
        )));
    }
    Ok(value)
}

fn up_axis() -> Vector {
    Vector::raw(vec![0.0, 1.0])
}

impl SetDescriptor {
    pub fn euclidean_ball(center: Vector, radius: f64) -> Result<Self> {
        let radius = positive(radius, "radius")?;
        let norm = center.norm();
        if norm > radius * (1.0 + 1e-12) {
            return Err(Error::CenterOutsideRadius { norm, radius });
        }
        Ok(Self::EuclideanBall { center, radius })
    }

    pub fn centered_ball(dim: usize, radius: f64) -> Result<Self> {
        Self::euclidean_ball(Vector::zeros(dim), radius)
    }

    pub fn unit_box(dim: usize, halfwidth: f64) -> Result<Self> {
        Self::box_set(Vector::raw(vec![halfwidth; dim]))
    }

    pub fn box_set(halfwidths: Vector) -> Result<Self> {
        if halfwidths.coords().iter().any(|&b| b < 0.0) {
            return Err(Error::InvalidParameter(
                "box halfwidths must be nonnegative".into(),
            ));
        }
        Ok(Self::Box { halfwidths })
    }

    pub fn l1_ball(radius: f64) -> Result<Self> {
        Ok(Self::L1Ball {
            dim: None,
            radius: positive(radius, "radius")?,
        })
    }

    pub fn p_ball(p: f64, radius: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidParameter(format!(
                "p-ball exponent must be at least 1, got {p}"
            )));
        }
        Ok(Self::PBall {
            dim: None,
            p,
            radius: positive(radius, "radius")?,
        })
    }

    pub fn ellipsoid(rows: Vec<Vec<f64>>) -> Result<Self> {
        Ok(Self::Ellipsoid(Ellipsoid::new(rows)?))
    }

    pub fn simplex(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("simplex dimension must be positive".into()));
        }
        Ok(Self::Simplex { dim })
    }

    pub fn shifted_unit_ball(d: Vector) -> Result<Self> {
        Ok(Self::ShiftedUnitBall {
            d: unit_direction(d, "shift")?,
        })
    }

    pub fn ball_pen(direction: Vector) -> Result<Self> {
        Ok(Self::BallPen {
            direction: unit_direction(direction, "ball-pen direction")?,
        })
    }

    /// Pin the dimension of a dimension-free variant.
    pub fn with_dim(self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        match self {
            Self::L1Ball { radius, .. } => Ok(Self::L1Ball {
                dim: Some(n),
                radius,
            }),
            Self::PBall { p, radius, .. } => Ok(Self::PBall {
                dim: Some(n),
                p,
                radius,
            }),
            other => match other.dim() {
                Some(d) if d == n => Ok(other),
                Some(d) => Err(Error::DimensionMismatch {
                    expected: d,
                    found: n,
                }),
                None => Ok(other),
            },
        }
    }

    /// A short name used in error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::EuclideanBall { .. } => "euclidean_ball",
            Self::Box { .. } => "box",
            Self::L1Ball { .. } => "l1_ball",
            Self::PBall { .. } => "p_ball",
            Self::Ellipsoid(_) => "ellipsoid",
            Self::Simplex { .. } => "simplex",
            Self::ShiftedUnitBall { .. } => "shifted_unit_ball",
            Self::BallPen { .. } => "ball_pen",
            Self::BallPlusHalfAxisStrip => "ball_plus_strip",
            Self::Hyperbolic => "hyperbolic",
        }
    }

    /// Ambient dimension, or `None` for the dimension-free norm balls.
    pub fn dim(&self) -> Option<usize> {
        match self {
            Self::EuclideanBall { center, .. } => Some(center.dim()),
            Self::Box { halfwidths } => Some(halfwidths.dim()),
            Self::L1Ball { dim, .. } | Self::PBall { dim, .. } => *dim,
            Self::Ellipsoid(e) => Some(e.dim()),
            Self::Simplex { dim } => Some(*dim),
            Self::ShiftedUnitBall { d } => Some(d.dim()),
            Self::BallPen { direction } => Some(direction.dim()),
            Self::BallPlusHalfAxisStrip | Self::Hyperbolic => Some(2),
        }
    }

    pub fn check_dim(&self, x: &Vector) -> Result<()> {
        match self.dim() {
            Some(expected) if expected != x.dim() => Err(Error::DimensionMismatch {
                expected,
                found: x.dim(),
            }),
            _ => Ok(()),
        }
    }

    /// Whether [`SetDescriptor::project`] is available for this variant.
    pub fn is_projectable(&self) -> bool {
        match self {
            Self::PBall { p, .. } => *p == 1.0 || *p == 2.0 || p.is_infinite(),
            Self::ShiftedUnitBall { .. } | Self::BallPlusHalfAxisStrip | Self::Hyperbolic => {
                false
            }
            _ => true,
        }
    }

    /// Whether the set is bounded (equivalently, its recession cone is `{0}`).
    pub fn is_bounded(&self) -> bool {
        !matches!(
            self,
            Self::BallPen { .. } | Self::BallPlusHalfAxisStrip | Self::Hyperbolic
        )
    }

    /// Radius of a centered Euclidean ball containing the set, for bounded sets.
    pub fn bounding_radius(&self, dim: usize) -> Option<f64> {
        let n = dim as f64;
        match self {
            Self::EuclideanBall { center, radius } => Some(center.norm() + radius),
            Self::Box { halfwidths } => Some(halfwidths.norm()),
            Self::L1Ball { radius, .. } => Some(*radius),
            Self::PBall { p, radius, .. } => {
                let exponent = if p.is_infinite() { 0.5 } else { (0.5 - 1.0 / p).max(0.0) };
                Some(radius * n.powf(exponent))
            }
            Self::Ellipsoid(e) => Some(1.0 / e.min_eigenvalue().sqrt()),
            Self::Simplex { .. } => Some(1.0),
            Self::ShiftedUnitBall { .. } => Some(2.0),
            Self::BallPen { .. } | Self::BallPlusHalfAxisStrip | Self::Hyperbolic => None,
        }
    }

    /// Membership from the defining inequalities, with absolute slack `tol`.
    pub fn contains(&self, x: &Vector, tol: f64) -> Result<bool> {
        self.check_dim(x)?;
        Ok(match self {
            Self::EuclideanBall { center, radius } => x.distance(center) <= radius + tol,
            Self::Box { halfwidths } => x
                .coords()
                .iter()
                .zip(halfwidths.coords())
                .all(|(xi, bi)| xi.abs() <= bi + tol),
            Self::L1Ball { radius, .. } => x.norm1() <= radius + tol,
            Self::PBall { p, radius, .. } => x.norm_p(*p) <= radius + tol,
            Self::Ellipsoid(e) => e.quad_form(x) <= 1.0 + tol,
            Self::Simplex { .. } => {
                x.coords().iter().all(|&xi| xi >= -tol)
                    && x.coords().iter().sum::<f64>() <= 1.0 + tol
            }
            Self::ShiftedUnitBall { d } => x.add(d).norm() <= 1.0 + tol,
            Self::BallPen { direction } => ray_distance(direction, x) <= 1.0 + tol,
            Self::BallPlusHalfAxisStrip => {
                x.norm() <= 1.0 + tol || (x[0].abs() <= 1.0 + tol && x[1] >= -tol)
            }
            Self::Hyperbolic => x[0] <= 1.0 - (1.0 + x[1] * x[1]).sqrt() + tol,
        })
    }

    /// The nearest point of the set to `x`.
    pub fn project(&self, x: &Vector) -> Result<Vector> {
        self.check_dim(x)?;
        match self {
            Self::EuclideanBall { center, radius } => Ok(project_ball(center, *radius, x)),
            Self::Box { halfwidths } => Ok(Vector::raw(
                x.coords()
                    .iter()
                    .zip(halfwidths.coords())
                    .map(|(xi, bi)| xi.clamp(-bi, *bi))
                    .collect(),
            )),
            Self::L1Ball { radius, .. } => Ok(project_l1_ball(x, *radius)),
            Self::PBall { p, radius, .. } => {
                if *p == 1.0 {
                    Ok(project_l1_ball(x, *radius))
                } else if *p == 2.0 {
                    Ok(project_ball(&Vector::zeros(x.dim()), *radius, x))
                } else if p.is_infinite() {
                    Ok(x.map(|c| c.clamp(-radius, *radius)))
                } else {
                    Err(Error::UnsupportedProjection("p_ball with p outside {1, 2, inf}"))
                }
            }
            Self::Ellipsoid(e) => Ok(e.project(x)),
            Self::Simplex { .. } => Ok(project_simplex(x)),
            Self::BallPen { direction } => {
                let on_ray = direction.scale(x.dot(direction).max(0.0));
                let offset = x.sub(&on_ray);
                let dist = offset.norm();
                if dist <= 1.0 {
                    Ok(x.clone())
                } else {
                    Ok(on_ray.axpy(1.0 / dist, &offset))
                }
            }
            Self::ShiftedUnitBall { .. } | Self::BallPlusHalfAxisStrip | Self::Hyperbolic => {
                Err(Error::UnsupportedProjection(self.kind()))
            }
        }
    }

    /// `sigma_C(y) = sup_{c in C} <c, y>`, possibly `+inf`.
    pub fn support_function(&self, y: &Vector) -> Result<f64> {
        self.check_dim(y)?;
        Ok(match self {
            Self::EuclideanBall { center, radius } => center.dot(y) + radius * y.norm(),
            Self::Box { halfwidths } => y
                .coords()
                .iter()
                .zip(halfwidths.coords())
                .map(|(yi, bi)| bi * yi.abs())
                .sum(),
            Self::L1Ball { radius, .. } => radius * y.norm_inf(),
            Self::PBall { p, radius, .. } => radius * y.norm_p(conjugate_exponent(*p)),
            Self::Ellipsoid(e) => e.inverse_quad_form(y).max(0.0).sqrt(),
            Self::Simplex { .. } => y.coords().iter().fold(0.0, |m, &v| m.max(v)),
            Self::ShiftedUnitBall { d } => (y.norm() - d.dot(y)).max(0.0),
            Self::BallPen { direction } => {
                if y.dot(direction) <= 0.0 {
                    y.norm()
                } else {
                    f64::INFINITY
                }
            }
            Self::BallPlusHalfAxisStrip => {
                if y[1] <= 0.0 {
                    y.norm()
                } else {
                    f64::INFINITY
                }
            }
            Self::Hyperbolic => {
                let (u, v) = (y[0], y[1].abs());
                if u < v {
                    f64::INFINITY
                } else {
                    u - ((u - v) * (u + v)).sqrt()
                }
            }
        })
    }

    /// The recession cone, when the catalog can describe it.
    pub fn recession_cone(&self) -> Option<ConeDescriptor> {
        match self {
            Self::BallPen { direction } => Some(ConeDescriptor::Ray(direction.clone())),
            Self::BallPlusHalfAxisStrip => Some(ConeDescriptor::Ray(up_axis())),
            Self::Hyperbolic => None,
            _ => Some(ConeDescriptor::Zero),
        }
    }

    /// `P_{rec C}(x)`.
    pub fn project_recession(&self, x: &Vector) -> Result<Vector> {
        self.check_dim(x)?;
        self.recession_cone()
            .map(|cone| cone.project(x))
            .ok_or(Error::CapabilityMissing(self.kind()))
    }

    /// `d_{rec C}(y)`.
    pub fn recession_distance(&self, y: &Vector) -> Result<f64> {
        self.check_dim(y)?;
        match self {
            Self::BallPen { direction } => Ok(ray_distance(direction, y)),
            Self::BallPlusHalfAxisStrip => Ok(y[0].hypot(y[1].min(0.0))),
            _ => Ok(y.distance(&self.project_recession(y)?)),
        }
    }
}

/// Distance from `x` to the ray `R_+ d`.
pub(crate) fn ray_distance(d: &Vector, x: &Vector) -> f64 {
    let t = x.dot(d);
    if t <= 0.0 {
        x.norm()
    } else {
        x.axpy(-t, d).norm()
    }
}

fn conjugate_exponent(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

fn project_ball(center: &Vector, radius: f64, x: &Vector) -> Vector {
    let offset = x.sub(center);
    let dist = offset.norm();
    center.axpy(radius / dist.max(radius), &offset)
}

/// Threshold `theta` such that `sum_i max(v_i - theta, 0) = total` for
/// nonnegative `v` with `sum v > total`.
fn simplex_threshold(v: &[f64], total: f64) -> f64 {
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (j, &u) in sorted.iter().enumerate() {
        cumsum += u;
        let candidate = (cumsum - total) / (j + 1) as f64;
        if u - candidate > 0.0 {
            theta = candidate;
        }
    }
    theta
}

fn project_simplex(x: &Vector) -> Vector {
    let clipped = x.map(|c| c.max(0.0));
    if clipped.coords().iter().sum::<f64>() <= 1.0 {
        return clipped;
    }
    let theta = simplex_threshold(x.coords(), 1.0);
    x.map(|c| (c - theta).max(0.0))
}

fn project_l1_ball(x: &Vector, radius: f64) -> Vector {
    if x.norm1() <= radius {
        return x.clone();
    }
    let abs: Vec<f64> = x.coords().iter().map(|c| c.abs()).collect();
    let theta = simplex_threshold(&abs, radius);
    x.map(|c| c.signum() * (c.abs() - theta).max(0.0))
}

/// JSON description of a set, as accepted by the command-line tool.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SetSpec {
    EuclideanBall {
        center: Vec<f64>,
        radius: f64,
    },
    BallPen {
        direction: Vec<f64>,
    },
    Box {
        halfwidths: Vec<f64>,
    },
    Simplex {
        dim: usize,
    },
    L1Ball {
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    PBall {
        p: Exponent,
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
    },
    Ellipsoid {
        q: Vec<Vec<f64>>,
    },
    ShiftedUnitBall {
        d: Vec<f64>,
    },
    BallPlusStrip,
    Hyperbolic,
}

/// A p-norm exponent; JSON has no infinity literal so `"inf"` is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    Finite(f64),
    Named(InfinityName),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InfinityName {
    #[serde(rename = "inf")]
    Inf,
}

impl Exponent {
    pub fn value(self) -> f64 {
        match self {
            Self::Finite(p) => p,
            Self::Named(InfinityName::Inf) => f64::INFINITY,
        }
    }
}

impl SetSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }
}

impl TryFrom<SetSpec> for SetDescriptor {
    type Error = Error;

    fn try_from(spec: SetSpec) -> Result<Self> {
        let pin = |set: SetDescriptor, dim: Option<usize>| match dim {
            Some(n) => set.with_dim(n),
            None => Ok(set),
        };
        match spec {
            SetSpec::EuclideanBall { center, radius } => {
                SetDescriptor::euclidean_ball(Vector::new(center)?, radius)
            }
            SetSpec::BallPen { direction } => SetDescriptor::ball_pen(Vector::new(direction)?),
            SetSpec::Box { halfwidths } => SetDescriptor::box_set(Vector::new(halfwidths)?),
            SetSpec::Simplex { dim } => SetDescriptor::simplex(dim),
            SetSpec::L1Ball { radius, dim } => pin(SetDescriptor::l1_ball(radius)?, dim),
            SetSpec::PBall { p, radius, dim } => pin(SetDescriptor::p_ball(p.value(), radius)?, dim),
            SetSpec::Ellipsoid { q } => SetDescriptor::ellipsoid(q),
            SetSpec::ShiftedUnitBall { d } => SetDescriptor::shifted_unit_ball(Vector::new(d)?),
            SetSpec::BallPlusStrip => Ok(SetDescriptor::BallPlusHalfAxisStrip),
            SetSpec::Hyperbolic => Ok(SetDescriptor::Hyperbolic),
        }
    }
}

impl From<&SetDescriptor> for SetSpec {
    fn from(set: &SetDescriptor) -> Self {
        match set {
            SetDescriptor::EuclideanBall { center, radius } => SetSpec::EuclideanBall {
                center: center.coords().to_vec(),
                radius: *radius,
            },
            SetDescriptor::Box { halfwidths } => SetSpec::Box {
                halfwidths: halfwidths.coords().to_vec(),
            },
            SetDescriptor::L1Ball { dim, radius } => SetSpec::L1Ball {
                radius: *radius,
                dim: *dim,
            },
            SetDescriptor::PBall { dim, p, radius } => SetSpec::PBall {
                p: if p.is_infinite() {
                    Exponent::Named(InfinityName::Inf)
                } else {
                    Exponent::Finite(*p)
                },
                radius: *radius,
                dim: *dim,
            },
            SetDescriptor::Ellipsoid(e) => SetSpec::Ellipsoid { q: e.rows() },
            SetDescriptor::Simplex { dim } => SetSpec::Simplex { dim: *dim },
            SetDescriptor::ShiftedUnitBall { d } => SetSpec::ShiftedUnitBall {
                d: d.coords().to_vec(),
            },
            SetDescriptor::BallPen { direction } => SetSpec::BallPen {
                direction: direction.coords().to_vec(),
            },
            SetDescriptor::BallPlusHalfAxisStrip => SetSpec::BallPlusStrip,
            SetDescriptor::Hyperbolic => SetSpec::Hyperbolic,
        }
    }
}
