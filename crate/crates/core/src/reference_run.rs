//! The reference bisection run: disc `B((1, 0), 1)`, query `(y, s) = ((1, 2), 1)`,
//! starting bracket `[3, 5]` and tolerance `1e-6`.
//!
//! [`REFERENCE_ROWS`] holds the expected trace of this run, rounded
//! (`alpha`, `mid`, `beta` to 8 significant digits, derivative columns to 3).

use crate::error::Result;
use crate::homproj::{find_alpha_star, BisectionTrace, ConePoint, ProjectionOptions};
use crate::scaledfun::PsiEvaluator;
use crate::sets::SetDescriptor;
use crate::vector::Vector;

pub const ALPHA0: f64 = 3.0;
pub const BETA0: f64 = 5.0;
pub const EPS: f64 = 1e-6;

/// `(n, alpha, mid, beta, dpsi_alpha, dpsi_mid, dpsi_beta)`.
pub type ReferenceRow = (usize, f64, Option<f64>, f64, f64, Option<f64>, f64);

pub const REFERENCE_ROWS: [ReferenceRow; 23] = [
    (1, 3.0000000, None, 5.0000000, 4.10e0, None, 8.11e0),
    (2, 1.5000000, None, 3.0000000, 1.49e-1, None, 4.10e0),
    (3, 0.75000000, Some(1.1250000), 1.5000000, -3.35e0, Some(-1.310e0), 1.49e-1),
    (4, 1.1250000, Some(1.3125000), 1.5000000, -1.310e0, Some(-5.79e-1), 1.49e-1),
    (5, 1.3125000, Some(1.4062500), 1.5000000, -5.79e-1, Some(-2.04e-1), 1.49e-1),
    (6, 1.4062500, Some(1.4531250), 1.5000000, -2.04e-1, Some(-2.48e-2), 1.49e-1),
    (7, 1.4531250, Some(1.4765625), 1.5000000, -2.48e-2, Some(6.29e-2), 1.49e-1),
    (8, 1.4531250, Some(1.4648438), 1.4765625, -2.48e-2, Some(1.92e-2), 6.29e-2),
    (9, 1.4531250, Some(1.4589844), 1.4648438, -2.48e-2, Some(-2.76e-3), 1.92e-2),
    (10, 1.4589844, Some(1.4619141), 1.4648438, -2.76e-3, Some(8.23e-3), 1.92e-2),
    (11, 1.4589844, Some(1.4604492), 1.4619141, -2.76e-3, Some(2.74e-3), 8.23e-3),
    (12, 1.4589844, Some(1.4597168), 1.4604492, -2.76e-3, Some(-1.06e-5), 2.74e-3),
    (13, 1.4597168, Some(1.4600830), 1.4604492, -1.06e-5, Some(1.36e-3), 2.74e-3),
    (14, 1.4597168, Some(1.4598999), 1.4600830, -1.06e-5, Some(6.77e-4), 1.36e-3),
    (15, 1.4597168, Some(1.4598083), 1.4598999, -1.06e-5, Some(3.33e-4), 6.77e-4),
    (16, 1.4597168, Some(1.4597626), 1.4598083, -1.06e-5, Some(1.61e-4), 3.33e-4),
    (17, 1.4597168, Some(1.4597397), 1.4597626, -1.06e-5, Some(7.53e-5), 1.61e-4),
    (18, 1.4597168, Some(1.4597282), 1.4597397, -1.06e-5, Some(3.24e-5), 7.53e-5),
    (19, 1.4597168, Some(1.4597225), 1.4597282, -1.06e-5, Some(1.09e-5), 3.24e-5),
    (20, 1.4597168, Some(1.4597197), 1.4597225, -1.06e-5, Some(1.65e-7), 1.09e-5),
    (21, 1.4597168, Some(1.4597182), 1.4597197, -1.06e-5, Some(-5.20e-6), 1.65e-7),
    (22, 1.4597182, Some(1.4597189), 1.4597197, -5.20e-6, Some(-2.52e-6), 1.65e-7),
    (23, 1.4597189, Some(1.4597193), 1.4597197, -2.52e-6, Some(-1.18e-6), 1.65e-7),
];

pub fn reference_set() -> SetDescriptor {
    SetDescriptor::euclidean_ball(Vector::raw(vec![1.0, 0.0]), 1.0).expect("valid disc")
}

pub fn reference_point() -> ConePoint {
    ConePoint {
        y: Vector::raw(vec![1.0, 2.0]),
        s: 1.0,
    }
}

pub fn reference_options() -> ProjectionOptions {
    ProjectionOptions {
        alpha0: ALPHA0,
        beta0: BETA0,
        eps: EPS,
        force_iterative: true,
        keep_trace: true,
        ..Default::default()
    }
}

/// Run the bisection on the reference instance.
pub fn run() -> Result<(f64, BisectionTrace)> {
    let set = reference_set();
    let p = reference_point();
    let ev = PsiEvaluator::new(&set, p.y, p.s)?;
    find_alpha_star(&ev, ALPHA0, BETA0, EPS, 200)
}

/// Half a unit in the last of `digits` significant places of `printed`.
pub fn half_ulp(printed: f64, digits: i32) -> f64 {
    if printed == 0.0 {
        return 0.0;
    }
    let exponent = printed.abs().log10().floor() as i32;
    0.5 * 10f64.powi(exponent - digits + 1)
}

/// Whether `value` rounds to `printed` at `digits` significant digits.
pub fn agrees(value: f64, printed: f64, digits: i32) -> bool {
    (value - printed).abs() <= half_ulp(printed, digits) * (1.0 + 1e-9)
}

/// A cell of a computed trace that disagrees with [`REFERENCE_ROWS`].
#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub n: usize,
    pub column: &'static str,
    pub computed: Option<f64>,
    pub printed: Option<f64>,
}

/// Compare a trace with the reference rows: bracket columns at 8
/// significant digits, derivative columns at 3.
pub fn compare(trace: &BisectionTrace) -> Vec<Deviation> {
    let mut out = Vec::new();
    if trace.len() != REFERENCE_ROWS.len() {
        out.push(Deviation {
            n: trace.len(),
            column: "rows",
            computed: Some(trace.len() as f64),
            printed: Some(REFERENCE_ROWS.len() as f64),
        });
    }
    let mut check = |n, column, computed: Option<f64>, printed: Option<f64>, digits| {
        let ok = match (computed, printed) {
            (Some(c), Some(p)) => agrees(c, p, digits),
            (None, None) => true,
            _ => false,
        };
        if !ok {
            out.push(Deviation {
                n,
                column,
                computed,
                printed,
            });
        }
    };
    for (row, reference) in trace.rows.iter().zip(REFERENCE_ROWS.iter()) {
        let &(n, alpha, mid, beta, da, dm, db) = reference;
        check(n, "alpha", Some(row.alpha), Some(alpha), 8);
        check(n, "mid", row.mid, mid, 8);
        check(n, "beta", Some(row.beta), Some(beta), 8);
        check(n, "dpsi_alpha", Some(row.dpsi_alpha), Some(da), 3);
        check(n, "dpsi_mid", row.dpsi_mid, dm, 3);
        check(n, "dpsi_beta", Some(row.dpsi_beta), Some(db), 3);
    }
    out
}
