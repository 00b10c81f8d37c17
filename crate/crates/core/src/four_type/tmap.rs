//! The one-dimensional map on the line `x + y = 1` when `a + c = 1`:
//!
//! ```text
//! T(x) = (2a - 1) x² + ((1 - a)(2 - c0) - a a0) x + a a0
//! ```
//!
//! `T` maps `[0, 1]` into itself and has exactly one fixed point there, `t1`
//! (or `t3 = a0 / (a0 + c0)` when `a = 1/2`), which attracts every orbit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::four_type::{FourTypeParams, CRITICAL_TOLERANCE};
use crate::two_type::check_open_unit;

/// Bisection stops once the bracket is this narrow.
const BISECTION_WIDTH: f64 = 1e-10;
/// Roots closer than this to a fixed point are not reported as periodic.
const FIXED_EXCLUSION: f64 = 1e-8;
/// Tolerance for treating a start point as the fixed point.
const FIXED_START_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TMapParams {
    pub a: f64,
    pub a0: f64,
    pub c0: f64,
}

impl TMapParams {
    pub fn new(a: f64, a0: f64, c0: f64) -> Result<Self> {
        check_open_unit("a", a)?;
        check_open_unit("a0", a0)?;
        check_open_unit("c0", c0)?;
        Ok(Self { a, a0, c0 })
    }

    /// The map of the first block of `p`, which must satisfy `a + c = 1`.
    pub fn from_four_type(p: &FourTypeParams) -> Result<Self> {
        if !p.w1().is_critical() {
            return Err(Error::InvalidParameter {
                name: "a + c",
                value: p.a + p.c,
                range: "{1}",
            });
        }
        Self::new(p.a, p.a0, p.c0)
    }

    /// Coefficients `(A, B, C)` of `T(x) = A x² + B x + C`.
    pub fn coefficients(&self) -> (f64, f64, f64) {
        let TMapParams { a, a0, c0 } = *self;
        (2.0 * a - 1.0, (1.0 - a) * (2.0 - c0) - a * a0, a * a0)
    }

    /// `K = 1 + a a0 - (1 - a)(2 - c0)`.
    pub fn k(&self) -> f64 {
        1.0 + self.a * self.a0 - (1.0 - self.a) * (2.0 - self.c0)
    }

    /// `D = K² - 4 a a0 (2a - 1)`.
    pub fn discriminant(&self) -> f64 {
        let k = self.k();
        k * k - 4.0 * self.a * self.a0 * (2.0 * self.a - 1.0)
    }

    pub fn is_affine(&self) -> bool {
        (2.0 * self.a - 1.0).abs() <= CRITICAL_TOLERANCE
    }
}

pub fn t_step(tp: &TMapParams, x: f64) -> f64 {
    let (qa, qb, qc) = tp.coefficients();
    (qa * x + qb) * x + qc
}

/// `T'(x)`.
pub fn t_derivative(tp: &TMapParams, x: f64) -> f64 {
    let (qa, qb, _) = tp.coefficients();
    2.0 * qa * x + qb
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TFixedLabel {
    T1,
    T3,
}

impl TFixedLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            TFixedLabel::T1 => "t1",
            TFixedLabel::T3 => "t3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedPointsT {
    /// The fixed point in `[0, 1]`.
    pub t_star: f64,
    pub label: TFixedLabel,
    /// The other root of `T(x) = x`, outside `[0, 1]`; absent when `T` is affine.
    pub spurious: Option<f64>,
}

/// Fixed points of `T`.
///
/// `t1 = (K - √D) / (2(2a - 1))` is evaluated as `2 a a0 / (K + √D)`, which
/// has no cancellation and tends to `t3` as `a → 1/2`.
pub fn fixed_points_t(tp: &TMapParams) -> FixedPointsT {
    let aa0 = tp.a * tp.a0;
    if tp.is_affine() {
        return FixedPointsT {
            t_star: tp.a0 / (tp.a0 + tp.c0),
            label: TFixedLabel::T3,
            spurious: None,
        };
    }
    let t1 = 2.0 * aa0 / (tp.k() + tp.discriminant().max(0.0).sqrt());
    FixedPointsT {
        t_star: t1,
        label: TFixedLabel::T1,
        // Product of the roots is a a0 / (2a - 1).
        spurious: Some(aa0 / ((2.0 * tp.a - 1.0) * t1)),
    }
}

/// `T'` at the fixed point from the closed forms `1 - √D` and `(2 - a0 - c0) / 2`.
pub fn t_derivative_at_fixed(tp: &TMapParams) -> f64 {
    if tp.is_affine() {
        0.5 * (2.0 - tp.a0 - tp.c0)
    } else {
        1.0 - tp.discriminant().max(0.0).sqrt()
    }
}

/// Limit of the `T`-orbit of `x0`: the unique fixed point in `[0, 1]`.
pub fn predict_limit_t(tp: &TMapParams, x0: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x0) {
        return Err(Error::InvalidParameter {
            name: "x0",
            value: x0,
            range: "[0, 1]",
        });
    }
    let t = fixed_points_t(tp).t_star;
    if (x0 - t).abs() <= FIXED_START_TOLERANCE {
        return Err(Error::IsFixedPoint);
    }
    Ok(t)
}

/// Points of period `p` of `T` in `[0, 1]` other than its fixed point.
pub fn scan_periodic_points(tp: &TMapParams, p: usize, grid: usize) -> Vec<f64> {
    let fixed = [fixed_points_t(tp).t_star];
    scan_periodic_points_of(|x| t_step(tp, x), p, grid, &fixed)
}

/// Roots of `f^p(x) - x` in `[0, 1]` located by sign changes on a uniform
/// grid of `grid` cells and refined by bisection, excluding any root within
/// `1e-8` of a point in `fixed`. `f^p` is evaluated by composition.
pub fn scan_periodic_points_of<F: Fn(f64) -> f64>(
    f: F,
    p: usize,
    grid: usize,
    fixed: &[f64],
) -> Vec<f64> {
    let h = |x: f64| (0..p).fold(x, |acc, _| f(acc)) - x;
    let grid = grid.max(1);
    let node = |i: usize| i as f64 / grid as f64;
    let mut roots = Vec::new();
    let mut prev_x = 0.0;
    let mut prev_h = h(prev_x);
    if prev_h == 0.0 {
        roots.push(prev_x);
    }
    for i in 1..=grid {
        let x = node(i);
        let hx = h(x);
        if hx == 0.0 {
            roots.push(x);
        } else if prev_h != 0.0 && prev_h.signum() != hx.signum() {
            let (mut lo, mut hi, mut h_lo) = (prev_x, x, prev_h);
            while hi - lo > BISECTION_WIDTH {
                let mid = 0.5 * (lo + hi);
                let h_mid = h(mid);
                if h_mid == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if h_mid.signum() == h_lo.signum() {
                    lo = mid;
                    h_lo = h_mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_h = hx;
    }
    roots.retain(|r| fixed.iter().all(|t| (r - t).abs() > FIXED_EXCLUSION));
    roots
}
