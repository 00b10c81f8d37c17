//! Four female and four male types.
//!
//! The operator on `S³ × S³` keeps the pair sums `x_1 + x_2`, `x_3 + x_4`,
//! `y_1 + y_2`, `y_3 + y_4` fixed, so every orbit lives in a slice
//! `I_{a0,c0}` where `x_1 + x_2 = a0` and `y_1 + y_2 = c0`. On a slice the
//! dynamics splits into two independent planar maps: `W1` in
//! `(x, y) = (x_1, y_1)` and `W2` in `(u, v) = (x_3, y_3)`. `W2` is `W1` with
//! `(a, c, a0, c0)` replaced by `(b, d, 1 - a0, 1 - c0)`, and is only ever
//! evaluated that way here.

pub mod tmap;

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::construction::{BisexualOperator, HeredityTensors};
use crate::dynamics::{classify_fixed_point_2d, FixedPointClass, Phase};
use crate::error::{Error, Result};
use crate::simplex::{max_abs_diff, PopulationState, Tolerance};
use crate::two_type::check_open_unit;

pub use tmap::{
    fixed_points_t, predict_limit_t, scan_periodic_points, scan_periodic_points_of, t_derivative,
    t_derivative_at_fixed, t_step, FixedPointsT, TFixedLabel, TMapParams,
};

/// `|a + c - 1|` at or below this is treated as exactly critical.
pub const CRITICAL_TOLERANCE: f64 = 1e-9;
/// Distance from the critical line below which predictions log a slow-convergence warning.
pub const SLOW_CONVERGENCE_BAND: f64 = 1e-3;
/// Tolerance for slice membership and fixed-point detection.
pub const SLICE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourTypeParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub a0: f64,
    pub c0: f64,
}

impl FourTypeParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64, a0: f64, c0: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d), ("a0", a0), ("c0", c0)] {
            check_open_unit(name, v)?;
        }
        Ok(Self { a, b, c, d, a0, c0 })
    }

    /// Same rates, slice taken from `s`.
    pub fn on_slice_of(&self, s: &PopulationState) -> Result<Self> {
        let (a0, c0) = slice_of(s)?;
        Self::new(self.a, self.b, self.c, self.d, a0, c0)
    }

    /// Parameters of `W1`.
    pub fn w1(&self) -> PlanarParams {
        PlanarParams {
            a: self.a,
            c: self.c,
            a0: self.a0,
            c0: self.c0,
        }
    }

    /// Parameters of `W2`: the substitution `a → b`, `c → d`, `a0 → 1 - a0`, `c0 → 1 - c0`.
    pub fn w2(&self) -> PlanarParams {
        PlanarParams {
            a: self.b,
            c: self.d,
            a0: 1.0 - self.a0,
            c0: 1.0 - self.c0,
        }
    }
}

/// `(a0, c0) = (x_1 + x_2, y_1 + y_2)`.
pub fn slice_of(s: &PopulationState) -> Result<(f64, f64)> {
    check_dims4(s)?;
    Ok((s.x()[0] + s.x()[1], s.y()[0] + s.y()[1]))
}

fn check_dims4(s: &PopulationState) -> Result<()> {
    let (n, nu) = s.dims();
    if n != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: n,
        });
    }
    if nu != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: nu,
        });
    }
    Ok(())
}

/// `(a, c, a0, c0)` of one planar block.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarParams {
    pub a: f64,
    pub c: f64,
    pub a0: f64,
    pub c0: f64,
}

impl PlanarParams {
    /// `a + c - 1`.
    pub fn criticality(&self) -> f64 {
        self.a + self.c - 1.0
    }

    pub fn is_critical(&self) -> bool {
        self.criticality().abs() <= CRITICAL_TOLERANCE
    }

    pub fn step(&self, x: f64, y: f64) -> (f64, f64) {
        let PlanarParams { a, c, a0, c0 } = *self;
        (
            x - (1.0 - a) * x * (c0 - y) + a * (a0 - x) * y,
            y - (1.0 - c) * (a0 - x) * y + c * x * (c0 - y),
        )
    }

    pub fn jacobian(&self, x: f64, y: f64) -> Matrix2<f64> {
        let PlanarParams { a, c, a0, c0 } = *self;
        Matrix2::new(
            1.0 - (1.0 - a) * c0 + (1.0 - 2.0 * a) * y,
            a * a0 + (1.0 - 2.0 * a) * x,
            c * c0 + (1.0 - 2.0 * c) * y,
            1.0 - (1.0 - c) * a0 + (1.0 - 2.0 * c) * x,
        )
    }

    pub fn in_box(&self, x: f64, y: f64) -> bool {
        let t = SLICE_TOLERANCE;
        (-t..=self.a0 + t).contains(&x) && (-t..=self.c0 + t).contains(&y)
    }

    pub fn fixed_points(&self) -> FixedSet {
        if self.is_critical() {
            FixedSet::Curve(FixedCurve { params: *self })
        } else {
            FixedSet::Isolated([[0.0, 0.0], [self.a0, self.c0]])
        }
    }

    pub fn is_fixed(&self, x: f64, y: f64) -> bool {
        let (xn, yn) = self.step(x, y);
        (xn - x).abs().max((yn - y).abs()) <= SLICE_TOLERANCE
    }

    /// Limit of the orbit of `(x0, y0)`: `(0, 0)` if `a + c < 1`, `(a0, c0)` if `a + c > 1`.
    pub fn predict_limit(&self, x0: f64, y0: f64) -> Result<[f64; 2]> {
        if self.is_critical() {
            return Err(Error::OnCriticalLine("a + c = 1"));
        }
        if self.is_fixed(x0, y0) {
            return Err(Error::IsFixedPoint);
        }
        if self.criticality().abs() < SLOW_CONVERGENCE_BAND {
            log::warn!(
                "a + c - 1 = {:e}: orbits converge slowly this close to the critical line",
                self.criticality()
            );
        }
        Ok(if self.criticality() < 0.0 {
            [0.0, 0.0]
        } else {
            [self.a0, self.c0]
        })
    }

    /// The restriction to the invariant line `x + y = s` of a critical block.
    pub fn section(&self, s: f64) -> Result<SectionMap> {
        if !self.is_critical() {
            return Err(Error::InvalidParameter {
                name: "a + c",
                value: self.a + self.c,
                range: "{1}",
            });
        }
        if !(0.0..=self.a0 + self.c0).contains(&s) {
            return Err(Error::InvalidParameter {
                name: "s",
                value: s,
                range: "[0, a0 + c0]",
            });
        }
        Ok(SectionMap {
            params: *self,
            s,
            lo: (s - self.c0).max(0.0),
            hi: s.min(self.a0),
        })
    }
}

/// Fixed points of a planar block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedSet {
    Isolated([[f64; 2]; 2]),
    Curve(FixedCurve),
}

impl FixedSet {
    /// The isolated points, or `samples` evenly spaced points along the curve.
    pub fn points(&self, samples: usize) -> Vec<[f64; 2]> {
        match self {
            FixedSet::Isolated(p) => p.to_vec(),
            FixedSet::Curve(curve) => curve.samples(samples),
        }
    }
}

/// `y = c c0 x / (a a0 + (c - a) x)` for `x ∈ [0, a0]`, joining `(0, 0)` and `(a0, c0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedCurve {
    params: PlanarParams,
}

impl FixedCurve {
    pub fn y_at(&self, x: f64) -> f64 {
        let PlanarParams { a, c, a0, c0 } = self.params;
        c * c0 * x / (a * a0 + (c - a) * x)
    }

    pub fn samples(&self, count: usize) -> Vec<[f64; 2]> {
        let a0 = self.params.a0;
        match count {
            0 => Vec::new(),
            1 => vec![[0.5 * a0, self.y_at(0.5 * a0)]],
            _ => (0..count)
                .map(|i| {
                    let x = a0 * i as f64 / (count - 1) as f64;
                    [x, self.y_at(x)]
                })
                .collect(),
        }
    }

    /// `|y - y(x)|`.
    pub fn residual(&self, x: f64, y: f64) -> f64 {
        (y - self.y_at(x)).abs()
    }
}

/// A critical block restricted to `x + y = s`, with the segment inside the box
/// rescaled to `t ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionMap {
    params: PlanarParams,
    s: f64,
    lo: f64,
    hi: f64,
}

impl SectionMap {
    pub fn level(&self) -> f64 {
        self.s
    }

    pub fn to_xy(&self, t: f64) -> (f64, f64) {
        let x = self.lo + t * (self.hi - self.lo);
        (x, self.s - x)
    }

    pub fn from_x(&self, x: f64) -> f64 {
        if self.hi > self.lo {
            (x - self.lo) / (self.hi - self.lo)
        } else {
            0.0
        }
    }

    pub fn step(&self, t: f64) -> f64 {
        let (x, y) = self.to_xy(t);
        self.from_x(self.params.step(x, y).0)
    }
}

pub fn w1_step(p: &FourTypeParams, x: f64, y: f64) -> (f64, f64) {
    p.w1().step(x, y)
}

pub fn w2_step(p: &FourTypeParams, u: f64, v: f64) -> (f64, f64) {
    p.w2().step(u, v)
}

pub fn jacobian_w1(p: &FourTypeParams, x: f64, y: f64) -> Matrix2<f64> {
    p.w1().jacobian(x, y)
}

pub fn fixed_points_w1(p: &FourTypeParams) -> FixedSet {
    p.w1().fixed_points()
}

/// Classification of the fixed points of `W1`; on the critical line, of
/// `curve_samples` points along the curve.
pub fn classify_w1_fixed_points(
    p: &FourTypeParams,
    curve_samples: usize,
    tol: &Tolerance,
) -> Vec<([f64; 2], FixedPointClass)> {
    classify_block(&p.w1(), curve_samples, tol)
}

pub fn classify_block(
    pp: &PlanarParams,
    curve_samples: usize,
    tol: &Tolerance,
) -> Vec<([f64; 2], FixedPointClass)> {
    pp.fixed_points()
        .points(curve_samples)
        .into_iter()
        .map(|pt| (pt, classify_fixed_point_2d(&pp.jacobian(pt[0], pt[1]), tol)))
        .collect()
}

/// Coordinates `(x, y, u, v) = (x_1, y_1, x_3, y_3)` on a slice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SliceState {
    pub x: f64,
    pub y: f64,
    pub u: f64,
    pub v: f64,
}

impl SliceState {
    pub fn new(p: &FourTypeParams, x: f64, y: f64, u: f64, v: f64) -> Result<Self> {
        let bounds = [
            ("x", x, p.a0),
            ("y", y, p.c0),
            ("u", u, 1.0 - p.a0),
            ("v", v, 1.0 - p.c0),
        ];
        for (name, value, hi) in bounds {
            if !(value.is_finite() && (0.0..=hi).contains(&value)) {
                return Err(Error::NotOnSlice(format!("{name} = {value} outside [0, {hi}]")));
            }
        }
        Ok(Self { x, y, u, v })
    }

    /// Reads `(x_1, y_1, x_3, y_3)` from a state on the slice of `p`.
    pub fn from_population(p: &FourTypeParams, s: &PopulationState) -> Result<Self> {
        let (a0, c0) = slice_of(s)?;
        if (a0 - p.a0).abs() > SLICE_TOLERANCE || (c0 - p.c0).abs() > SLICE_TOLERANCE {
            return Err(Error::NotOnSlice(format!(
                "pair sums ({a0}, {c0}) differ from ({}, {})",
                p.a0, p.c0
            )));
        }
        Ok(Self {
            x: s.x()[0],
            y: s.y()[0],
            u: s.x()[2],
            v: s.y()[2],
        })
    }

    pub fn lift(&self, p: &FourTypeParams) -> PopulationState {
        PopulationState::from_vecs_unchecked(
            vec![self.x, p.a0 - self.x, self.u, 1.0 - p.a0 - self.u],
            vec![self.y, p.c0 - self.y, self.v, 1.0 - p.c0 - self.v],
        )
    }
}

impl Phase for SliceState {
    fn distance(&self, other: &Self) -> f64 {
        max_abs_diff(
            &[self.x, self.y, self.u, self.v],
            &[other.x, other.y, other.u, other.v],
        )
    }
}

/// The four-coordinate map on a slice, written out in full.
pub fn w0_step(p: &FourTypeParams, s: &SliceState) -> SliceState {
    let FourTypeParams { a, b, c, d, a0, c0 } = *p;
    let SliceState { x, y, u, v } = *s;
    SliceState {
        x: x - (1.0 - a) * x * (c0 - y) + a * (a0 - x) * y,
        u: u - (1.0 - b) * u * ((1.0 - c0) - v) + b * ((1.0 - a0) - u) * v,
        y: y - (1.0 - c) * (a0 - x) * y + c * x * (c0 - y),
        v: v - (1.0 - d) * ((1.0 - a0) - u) * v + d * u * ((1.0 - c0) - v),
    }
}

/// One step of the operator on `S³ × S³`.
pub fn v4_step(p: &FourTypeParams, s: &PopulationState) -> Result<PopulationState> {
    check_dims4(s)?;
    let FourTypeParams { a, b, c, d, .. } = *p;
    let (x, y) = (s.x(), s.y());
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    let (y1, y2, y3, y4) = (y[0], y[1], y[2], y[3]);
    Ok(PopulationState::from_vecs_unchecked(
        vec![
            x1 - (1.0 - a) * x1 * y2 + a * x2 * y1,
            x2 - a * x2 * y1 + (1.0 - a) * x1 * y2,
            x3 - (1.0 - b) * x3 * y4 + b * x4 * y3,
            x4 - b * x4 * y3 + (1.0 - b) * x3 * y4,
        ],
        vec![
            y1 - (1.0 - c) * x2 * y1 + c * x1 * y2,
            y2 - c * x1 * y2 + (1.0 - c) * x2 * y1,
            y3 - (1.0 - d) * x4 * y3 + d * x3 * y4,
            y4 - d * x3 * y4 + (1.0 - d) * x4 * y3,
        ],
    ))
}

/// Heredity tensors of the operator on `S³ × S³`.
pub fn heredity_tensors_v4(p: &FourTypeParams) -> HeredityTensors {
    let e = |j: usize| {
        let mut row = vec![0.0; 4];
        row[j] = 1.0;
        row
    };
    let pair = |lo: usize, w: f64| {
        let mut row = vec![0.0; 4];
        row[lo] = w;
        row[lo + 1] = 1.0 - w;
        row
    };
    let mut pf = vec![vec![Vec::new(); 4]; 4];
    let mut pm = vec![vec![Vec::new(); 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            pf[i][k] = e(i);
            pm[i][k] = e(k);
        }
    }
    // Mixing pairs: (x_1, y_2), (x_2, y_1) within the first block and
    // (x_3, y_4), (x_4, y_3) within the second.
    pf[0][1] = pair(0, p.a);
    pf[1][0] = pair(0, p.a);
    pf[2][3] = pair(2, p.b);
    pf[3][2] = pair(2, p.b);
    pm[0][1] = pair(0, p.c);
    pm[1][0] = pair(0, p.c);
    pm[2][3] = pair(2, p.d);
    pm[3][2] = pair(2, p.d);
    HeredityTensors::from_nested(&pf, &pm).expect("rows are stochastic for rates in (0, 1)")
}

pub fn lift_to_v4(p: &FourTypeParams) -> BisexualOperator {
    BisexualOperator::new(heredity_tensors_v4(p))
}

/// Limit of the orbit of `s0` (which must lie on the slice of `p`).
///
/// Each block goes to its own limit; a block that starts at one of its fixed
/// points stays there. Both blocks must be off the critical line.
pub fn predict_limit_v4(p: &FourTypeParams, s0: &PopulationState) -> Result<PopulationState> {
    let s = SliceState::from_population(p, s0)?;
    let (w1, w2) = (p.w1(), p.w2());
    if w1.is_critical() {
        return Err(Error::OnCriticalLine("a + c = 1"));
    }
    if w2.is_critical() {
        return Err(Error::OnCriticalLine("b + d = 1"));
    }
    let first = w1.predict_limit(s.x, s.y);
    let second = w2.predict_limit(s.u, s.v);
    let (xy, uv) = match (first, second) {
        (Err(Error::IsFixedPoint), Err(Error::IsFixedPoint)) => return Err(Error::IsFixedPoint),
        (Err(Error::IsFixedPoint), Ok(uv)) => ([s.x, s.y], uv),
        (Ok(xy), Err(Error::IsFixedPoint)) => (xy, [s.u, s.v]),
        (Ok(xy), Ok(uv)) => (xy, uv),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    Ok(SliceState {
        x: xy[0],
        y: xy[1],
        u: uv[0],
        v: uv[1],
    }
    .lift(p))
}

/// Which vertex-type limit the signs of `a + c - 1` and `b + d - 1` select, as
/// a label `"row1"`..`"row4"`; `None` on a critical line.
pub fn regime(p: &FourTypeParams) -> Option<&'static str> {
    let (w1, w2) = (p.w1(), p.w2());
    if w1.is_critical() || w2.is_critical() {
        return None;
    }
    Some(match (w1.criticality() < 0.0, w2.criticality() < 0.0) {
        (true, true) => "row1",
        (true, false) => "row2",
        (false, true) => "row3",
        (false, false) => "row4",
    })
}
