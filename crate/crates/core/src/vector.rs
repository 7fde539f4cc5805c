//! Dense vectors in R^n.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A point of R^n with finite coordinates.
///
/// Construction through [`Vector::new`] rejects empty input and NaN/Inf
/// entries. Arithmetic helpers do not re-check finiteness.
#[derive(Clone, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() || coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteVector);
        }
        Ok(Self { coords })
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self> {
        Self::new(coords.to_vec())
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional vector");
        Self {
            coords: vec![0.0; dim],
        }
    }

    /// Unchecked constructor for internal arithmetic results.
    pub(crate) fn raw(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        // hypot-style scaling keeps huge/tiny inputs from overflowing
        let scale = self.norm_inf();
        if scale == 0.0 {
            return 0.0;
        }
        let sum: f64 = self.coords.iter().map(|c| (c / scale).powi(2)).sum();
        scale * sum.sqrt()
    }

    pub fn norm_squared(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn norm1(&self) -> f64 {
        self.coords.iter().map(|c| c.abs()).sum()
    }

    pub fn norm_inf(&self) -> f64 {
        self.coords.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// The p-norm for `1 <= p <= inf`.
    pub fn norm_p(&self, p: f64) -> f64 {
        if p == 1.0 {
            self.norm1()
        } else if p == 2.0 {
            self.norm()
        } else if p.is_infinite() {
            self.norm_inf()
        } else {
            let scale = self.norm_inf();
            if scale == 0.0 {
                return 0.0;
            }
            let sum: f64 = self.coords.iter().map(|c| (c.abs() / scale).powf(p)).sum();
            scale * sum.powf(1.0 / p)
        }
    }

    pub fn scale(&self, factor: f64) -> Vector {
        Vector::raw(self.coords.iter().map(|c| c * factor).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `self + factor * other`
    pub fn axpy(&self, factor: f64, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Vector {
        Vector::raw(self.coords.iter().map(|&c| f(c)).collect())
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Vector::new(coords)
    }
}
