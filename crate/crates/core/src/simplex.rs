//! Points of the standard simplex and of products of two simplexes.
//!
//! A [`Distribution`] is validated once at construction: every entry must be
//! non-negative (up to [`NEGATIVE_TOLERANCE`]) and the entries must sum to one
//! (up to [`NORMALIZATION_TOLERANCE`]). Distributions are never silently
//! projected back onto the simplex; the remaining rounding drift of a state is
//! exposed through [`Distribution::normalization_drift`].

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Entries below `-NEGATIVE_TOLERANCE` are rejected.
pub const NEGATIVE_TOLERANCE: f64 = 1e-12;
/// Maximum allowed `|sum - 1|` at construction.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// A probability vector, i.e. a point of `S^{n-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            if value < -NEGATIVE_TOLERANCE {
                return Err(Error::NegativeEntry { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { probs })
    }

    /// Wraps a vector that is known to be on the simplex up to rounding,
    /// e.g. the image of a valid state under a stochastic operator.
    pub(crate) fn from_vec_unchecked(probs: Vec<f64>) -> Self {
        debug_assert!(!probs.is_empty());
        Self { probs }
    }

    /// The vertex `e_index` of `S^{dim-1}`.
    pub fn vertex(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: index + 1,
            });
        }
        let mut probs = vec![0.0; dim];
        probs[index] = 1.0;
        Ok(Self { probs })
    }

    pub fn uniform(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDistribution);
        }
        Ok(Self {
            probs: vec![1.0 / dim as f64; dim],
        })
    }

    /// Uniformly distributed point of the simplex (flat Dirichlet).
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDistribution);
        }
        // -ln(U) with U in (0, 1] is Exp(1); normalized exponentials are Dirichlet(1, ..., 1).
        let raw: Vec<f64> = (0..dim)
            .map(|_| -(1.0 - rng.random::<f64>()).ln())
            .collect();
        let total: f64 = raw.iter().sum();
        let mut probs: Vec<f64> = raw.iter().map(|v| v / total).collect();
        // Push the rounding residue into the largest entry so the sum is 1 to the last ulp or so.
        let residue = 1.0 - probs.iter().sum::<f64>();
        let imax = probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        probs[imax] += residue;
        Ok(Self { probs })
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.probs
    }

    /// `|sum - 1|`.
    pub fn normalization_drift(&self) -> f64 {
        (self.probs.iter().sum::<f64>() - 1.0).abs()
    }

    pub fn max_distance(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(max_abs_diff(&self.probs, &other.probs))
    }
}

impl TryFrom<Vec<f64>> for Distribution {
    type Error = Error;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<Distribution> for Vec<f64> {
    fn from(d: Distribution) -> Self {
        d.probs
    }
}

impl std::ops::Index<usize> for Distribution {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.probs[index]
    }
}

/// Validates `values` as a point of the simplex.
pub fn make_distribution(values: &[f64]) -> Result<Distribution> {
    Distribution::new(values.to_vec())
}

/// A state `(x, y)` of a bisexual population: female and male type frequencies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PopulationState {
    pub female: Distribution,
    pub male: Distribution,
}

impl PopulationState {
    pub fn new(female: Distribution, male: Distribution) -> Self {
        Self { female, male }
    }

    pub fn from_parts(x: &[f64], y: &[f64]) -> Result<Self> {
        Ok(Self {
            female: make_distribution(x)?,
            male: make_distribution(y)?,
        })
    }

    /// Splits a flat coordinate vector `(x_1..x_n, y_1..y_nu)` after `n` entries.
    pub fn from_coords(coords: &[f64], n: usize) -> Result<Self> {
        if n == 0 || n >= coords.len() {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: coords.len(),
            });
        }
        Self::from_parts(&coords[..n], &coords[n..])
    }

    pub(crate) fn from_vecs_unchecked(x: Vec<f64>, y: Vec<f64>) -> Self {
        Self {
            female: Distribution::from_vec_unchecked(x),
            male: Distribution::from_vec_unchecked(y),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, nu: usize, rng: &mut R) -> Result<Self> {
        Ok(Self {
            female: Distribution::random(n, rng)?,
            male: Distribution::random(nu, rng)?,
        })
    }

    pub fn x(&self) -> &[f64] {
        self.female.as_slice()
    }

    pub fn y(&self) -> &[f64] {
        self.male.as_slice()
    }

    /// `(n, nu)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.female.dim(), self.male.dim())
    }

    /// Flat coordinates `(x_1..x_n, y_1..y_nu)`.
    pub fn coords(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.female.dim() + self.male.dim());
        v.extend_from_slice(self.x());
        v.extend_from_slice(self.y());
        v
    }

    pub fn normalization_drift(&self) -> f64 {
        self.female
            .normalization_drift()
            .max(self.male.normalization_drift())
    }
}

/// Max-norm distance over all `n + nu` coordinates.
pub fn state_distance(s1: &PopulationState, s2: &PopulationState) -> Result<f64> {
    let df = s1.female.max_distance(&s2.female)?;
    let dm = s1.male.max_distance(&s2.male)?;
    Ok(nan_max(df, dm))
}

/// `max` that propagates NaN instead of ignoring it.
pub(crate) fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Max-norm of `a - b`; NaN if any difference is NaN.
pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, nan_max)
}

/// Numerical tolerances shared by iteration and classification routines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Absolute tolerance for residuals, membership tests and unit-circle checks.
    pub abs_eps: f64,
    /// Successive-state distance at which an iteration is declared converged.
    pub iter_eps: f64,
    pub max_iters: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: 1e-9,
            iter_eps: 1e-12,
            max_iters: 1_000_000,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, iter_eps: f64, max_iters: usize) -> Result<Self> {
        let tol = Self {
            abs_eps,
            iter_eps,
            max_iters,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_eps.is_finite() && self.abs_eps > 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "abs_eps must be > 0, got {}",
                self.abs_eps
            )));
        }
        if !(self.iter_eps.is_finite() && self.iter_eps > 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "iter_eps must be > 0, got {}",
                self.iter_eps
            )));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidTolerance("max_iters must be > 0".into()));
        }
        Ok(())
    }
}
