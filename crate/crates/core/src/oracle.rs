//! Brute-force verifiers used to cross-check the analytic routes.
//!
//! Nothing here calls the bracketing solver or a closed-form support
//! function: the alpha oracle minimizes `Psi` by grid search and
//! golden-section refinement, and the support oracle samples the set through
//! its membership test alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::scaledfun::PsiEvaluator;
use crate::sets::SetDescriptor;
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub grid_points: usize,
    pub alpha_max: f64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_points: 100_000,
            alpha_max: 1e3,
            samples: 200_000,
            seed: 0x5eed_c0de,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_points < 100 {
            return Err(Error::InvalidParameter(format!(
                "grid_points must be at least 100, got {}",
                self.grid_points
            )));
        }
        if !(self.alpha_max > 0.0 && self.alpha_max.is_finite()) {
            return Err(Error::InvalidParameter("alpha_max must be positive".into()));
        }
        Ok(())
    }

    /// A generator keyed by `seed` and a stream index, so independent
    /// consumers draw reproducible, non-overlapping sequences.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Minimize `f` on `[lo, hi]` by golden-section search down to width `tol`.
pub fn golden_section_minimize(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Grid minimizer of `Psi` on `[0, alpha_max]`, refined by golden section to
/// width `1e-8`.
pub fn brute_force_alpha_star(ev: &PsiEvaluator<'_>, cfg: &OracleConfig) -> Result<f64> {
    cfg.validate()?;
    let n = cfg.grid_points;
    let h = cfg.alpha_max / (n - 1) as f64;
    let mut best = (0usize, ev.psi(0.0)?);
    for i in 1..n {
        let value = ev.psi(i as f64 * h)?;
        if value < best.1 {
            best = (i, value);
        }
    }
    let (k, psi_grid) = best;
    let lo = k.saturating_sub(1) as f64 * h;
    let hi = ((k + 1).min(n - 1)) as f64 * h;
    // the refinement stays inside (0, hi]; Psi(0) is compared separately
    let objective = |a: f64| {
        if a <= 0.0 {
            f64::INFINITY
        } else {
            ev.psi(a).unwrap_or(f64::INFINITY)
        }
    };
    let refined = golden_section_minimize(objective, lo, hi, 1e-8);
    let psi_refined = objective(refined);
    let psi_zero = ev.psi(0.0)?;
    if k <= 1 && psi_zero <= psi_refined && psi_zero <= psi_grid {
        return Ok(0.0);
    }
    Ok(refined)
}

/// Outcome of [`sampled_support`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampledSupport {
    Finite(f64),
    /// The sampled maximum kept growing with the truncation radius.
    UnboundedDirection,
}

/// Monte-Carlo lower bound on `sup_{c in C} <c, y>` for a set given only by
/// membership, assumed convex and containing the origin.
///
/// Directions are drawn uniformly on the sphere and each is followed to the
/// boundary by bisection on `contains`, truncated at `radius`.
pub fn sampled_max_by_membership(
    contains: impl Fn(&Vector) -> bool,
    y: &Vector,
    radius: f64,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> f64 {
    let dim = y.dim();
    let mut best: f64 = 0.0;
    for _ in 0..samples {
        let mut u: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = u.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        u.iter_mut().for_each(|c| *c /= norm);
        let u = Vector::raw(u);
        let slope = u.dot(y);
        if slope <= 0.0 {
            continue;
        }
        let reach = if contains(&u.scale(radius)) {
            radius
        } else {
            let (mut lo, mut hi) = (0.0, radius);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if contains(&u.scale(mid)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo
        };
        best = best.max(reach * slope);
    }
    best
}

/// Sampled `sigma_C(y)`, never above the true value.
pub fn sampled_support(set: &SetDescriptor, y: &Vector, cfg: &OracleConfig) -> Result<SampledSupport> {
    set.check_dim(y)?;
    if y.is_zero() {
        return Ok(SampledSupport::Finite(0.0));
    }
    let contains = |x: &Vector| set.contains(x, 0.0).unwrap_or(false);
    let mut rng = cfg.rng(0);
    match set.bounding_radius(y.dim()) {
        Some(radius) => Ok(SampledSupport::Finite(sampled_max_by_membership(
            contains,
            y,
            radius * (1.0 + 1e-9),
            cfg.samples,
            &mut rng,
        ))),
        None => {
            const NEAR: f64 = 1e2;
            const FAR: f64 = 1e4;
            let near = sampled_max_by_membership(contains, y, NEAR, cfg.samples / 2, &mut rng);
            let far = sampled_max_by_membership(contains, y, FAR, cfg.samples / 2, &mut rng);
            if far - near > 1e-3 * (FAR - NEAR) * y.norm() {
                Ok(SampledSupport::UnboundedDirection)
            } else {
                Ok(SampledSupport::Finite(near.max(far)))
            }
        }
    }
}
