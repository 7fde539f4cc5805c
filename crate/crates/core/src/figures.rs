//! Plot-ready point clouds of `K = cl cone(C x {1})` and its polar cone for
//! the planar example sets.
//!
//! Cone rows are `rho (c, 1)` for boundary points `c` of `C`; polar rows are
//! `rho (c°, -1)` for boundary points `c°` of `C°`, using
//! `K^- = cl cone(C° x {-1})`. Unbounded boundaries are truncated at
//! `|t| <= TRUNCATION`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;

use crate::error::{Error, Result};
use crate::homproj::project_homogenization;
use crate::reference_run;

const TRUNCATION: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureName {
    /// Cross-polytope and its polar box.
    Fig41,
    /// Hyperbolic set.
    Fig31,
    /// Unit disc plus vertical half-strip.
    Fig22,
    /// Shifted disc with the reference query and its projection.
    Fig2a,
}

impl FigureName {
    pub const ALL: [FigureName; 4] = [Self::Fig41, Self::Fig31, Self::Fig22, Self::Fig2a];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Fig41 => "fig41",
            Self::Fig31 => "fig31",
            Self::Fig22 => "fig22",
            Self::Fig2a => "fig2a",
        }
    }
}

impl std::str::FromStr for FigureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown figure {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub label: &'static str,
    pub point: [f64; 3],
}

/// A boundary piece parametrized over `t in [0, 1]`.
type Piece = Box<dyn Fn(f64) -> [f64; 2]>;

fn segment(a: [f64; 2], b: [f64; 2]) -> Piece {
    Box::new(move |t| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])])
}

fn arc(center: [f64; 2], radius: f64, from: f64, to: f64) -> Piece {
    Box::new(move |t| {
        let theta = from + t * (to - from);
        [center[0] + radius * theta.cos(), center[1] + radius * theta.sin()]
    })
}

/// Lower half of the unit circle, with `x2 <= 0` exactly.
fn lower_half_circle() -> Vec<Piece> {
    [(PI, 1.5 * PI), (1.5 * PI, 2.0 * PI)]
        .into_iter()
        .map(|(from, to)| -> Piece {
            Box::new(move |t| {
                let theta = from + t * (to - from);
                [theta.cos(), theta.sin().min(0.0)]
            })
        })
        .collect()
}

fn circle(center: [f64; 2], radius: f64) -> Vec<Piece> {
    (0..4)
        .map(|k| arc(center, radius, k as f64 * FRAC_PI_2, (k + 1) as f64 * FRAC_PI_2))
        .collect()
}

fn polygon(vertices: &[[f64; 2]]) -> Vec<Piece> {
    (0..vertices.len())
        .map(|i| segment(vertices[i], vertices[(i + 1) % vertices.len()]))
        .collect()
}

fn curve(f: impl Fn(f64) -> [f64; 2] + 'static, lo: f64, hi: f64) -> Piece {
    Box::new(move |t| f(lo + t * (hi - lo)))
}

/// Boundary of `C` and of `C°`.
fn boundaries(name: FigureName) -> (Vec<Piece>, Vec<Piece>) {
    match name {
        FigureName::Fig41 => (
            polygon(&[[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]),
            polygon(&[[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]),
        ),
        FigureName::Fig31 => (
            vec![curve(|t| [1.0 - (1.0 + t * t).sqrt(), t], -TRUNCATION, TRUNCATION)],
            vec![
                segment([0.0, 0.0], [1.0, 1.0]),
                segment([0.0, 0.0], [1.0, -1.0]),
                curve(|t| [(1.0 + t * t) / 2.0, t], 1.0, TRUNCATION),
                curve(|t| [(1.0 + t * t) / 2.0, t], -1.0, -TRUNCATION),
            ],
        ),
        FigureName::Fig22 => (
            {
                let mut pieces = lower_half_circle();
                pieces.push(segment([1.0, 0.0], [1.0, TRUNCATION]));
                pieces.push(segment([-1.0, 0.0], [-1.0, TRUNCATION]));
                pieces
            },
            {
                let mut pieces = lower_half_circle();
                pieces.push(segment([-1.0, 0.0], [1.0, 0.0]));
                pieces
            },
        ),
        FigureName::Fig2a => (
            circle([1.0, 0.0], 1.0),
            vec![curve(|t| [(1.0 - t * t) / 2.0, t], -TRUNCATION, TRUNCATION)],
        ),
    }
}

/// Generate the labeled rows of a figure; `density` controls both the
/// number of samples per boundary piece and the number of scalings `rho`.
pub fn figure_rows(name: FigureName, density: usize) -> Result<Vec<FigureRow>> {
    if density == 0 {
        return Err(Error::InvalidParameter("density must be positive".into()));
    }
    let (cone, polar) = boundaries(name);
    let mut rows = vec![FigureRow {
        label: "apex",
        point: [0.0, 0.0, 0.0],
    }];
    let rhos: Vec<f64> = (1..=density).map(|j| j as f64 / density as f64).collect();
    let mut emit = |label: &'static str, pieces: &[Piece], height: f64| {
        for piece in pieces {
            for i in 0..=density {
                let c = piece(i as f64 / density as f64);
                for &rho in &rhos {
                    rows.push(FigureRow {
                        label,
                        point: [rho * c[0], rho * c[1], rho * height],
                    });
                }
            }
        }
    };
    emit("cone", &cone, 1.0);
    emit("polar", &polar, -1.0);

    if name == FigureName::Fig2a {
        let set = reference_run::reference_set();
        let query = reference_run::reference_point();
        let opts = reference_run::reference_options();
        let result = project_homogenization(&set, &query, &opts)?;
        let q = query.to_vec();
        let p = result.point.to_vec();
        rows.push(FigureRow {
            label: "query",
            point: [q[0], q[1], q[2]],
        });
        rows.push(FigureRow {
            label: "projection",
            point: [p[0], p[1], p[2]],
        });
    }
    Ok(rows)
}

/// Write rows as CSV with header `label,x1,x2,x3`.
pub fn write_csv<W: Write>(rows: &[FigureRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidParameter(format!("write failed: {e}"));
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(["label", "x1", "x2", "x3"]).map_err(io)?;
    for row in rows {
        let [a, b, c] = row.point;
        writer
            .write_record([row.label.to_string(), a.to_string(), b.to_string(), c.to_string()])
            .map_err(io)?;
    }
    writer.flush().map_err(|e| Error::InvalidParameter(format!("write failed: {e}")))?;
    Ok(())
}
