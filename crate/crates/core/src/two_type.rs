//! Two female and two male types.
//!
//! On `S¹ × S¹` the operator is
//!
//! ```text
//! x'_1 = x_1 + a x_2 y_1,    y'_1 = y_1 (x_1 + b x_2)
//! ```
//!
//! and with `x = x_1`, `y = y_1` it reduces to the map `W` of the unit square:
//! `x' = x + a(1 - x)y`, `y' = y(x + b(1 - x))`. Orbits keep
//! `c = x/a + y/(1 - b)` fixed, `x` never decreases and `y` never increases.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::construction::{BisexualOperator, HeredityTensors};
use crate::dynamics::Phase;
use crate::error::{Error, Result};
use crate::simplex::{max_abs_diff, PopulationState};

/// Absolute tolerance for membership in the fixed sets.
pub const FIXED_SET_TOLERANCE: f64 = 1e-9;

pub(crate) fn check_open_unit(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            range: "(0, 1)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoTypeParams {
    a: f64,
    b: f64,
}

impl TwoTypeParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        check_open_unit("a", a)?;
        check_open_unit("b", b)?;
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// A point `(x, y)` of the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedState2 {
    pub x: f64,
    pub y: f64,
}

impl ReducedState2 {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        for (index, v) in [x, y].into_iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { index, value: v });
            }
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParameter {
                    name: if index == 0 { "x" } else { "y" },
                    value: v,
                    range: "[0, 1]",
                });
            }
        }
        Ok(Self { x, y })
    }

    /// `(x, 1 - x; y, 1 - y)`.
    pub fn lift(&self) -> PopulationState {
        PopulationState::from_vecs_unchecked(vec![self.x, 1.0 - self.x], vec![self.y, 1.0 - self.y])
    }

    /// `(x_1, y_1)` of a state on `S¹ × S¹`.
    pub fn project(s: &PopulationState) -> Result<Self> {
        if s.dims() != (2, 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: if s.x().len() != 2 { s.x().len() } else { s.y().len() },
            });
        }
        Ok(Self {
            x: s.x()[0],
            y: s.y()[0],
        })
    }
}

impl Phase for ReducedState2 {
    fn distance(&self, other: &Self) -> f64 {
        max_abs_diff(&[self.x, self.y], &[other.x, other.y])
    }
}

/// One step of `W`.
///
/// Written as `x' = x + a g`, `y' = y - (1 - b) g` with `g = (1 - x) y`, and
/// `y` is moved by the increment `x` actually received after rounding. Near
/// `x = 1` the increment of `x` rounds to zero long before that of `y`, which
/// would otherwise leak `x/a + y/(1 - b)` by an ulp per step.
pub fn w_step(p: &TwoTypeParams, s: &ReducedState2) -> ReducedState2 {
    let (x, y) = (s.x, s.y);
    let xn = x + p.a * ((1.0 - x) * y);
    let dx = xn - x;
    ReducedState2 {
        x: xn,
        y: y - (1.0 - p.b) * (dx / p.a),
    }
}

pub fn jacobian_w(p: &TwoTypeParams, s: &ReducedState2) -> Matrix2<f64> {
    let (x, y) = (s.x, s.y);
    Matrix2::new(
        1.0 - p.a * y,
        p.a * (1.0 - x),
        y * (1.0 - p.b),
        x * (1.0 - p.b) + p.b,
    )
}

/// Heredity tensors of the full operator on `S¹ × S¹`.
pub fn heredity_tensors(p: &TwoTypeParams) -> HeredityTensors {
    let (a, b) = (p.a, p.b);
    let pf = vec![
        vec![vec![1.0, 0.0], vec![1.0, 0.0]],
        vec![vec![a, 1.0 - a], vec![0.0, 1.0]],
    ];
    let pm = vec![
        vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        vec![vec![b, 1.0 - b], vec![0.0, 1.0]],
    ];
    HeredityTensors::from_nested(&pf, &pm).expect("rows are stochastic for a, b in (0, 1)")
}

pub fn lift_to_v(p: &TwoTypeParams) -> BisexualOperator {
    BisexualOperator::new(heredity_tensors(p))
}

/// `c = x/a + y/(1 - b)`, constant along orbits of `W`.
pub fn invariant_line_c(p: &TwoTypeParams, s: &ReducedState2) -> f64 {
    s.x / p.a + s.y / (1.0 - p.b)
}

/// `Z₁ = {y = 0, 0 <= x < 1}` and `Z₂ = {x = 1}`, the fixed points of `W`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedSetsW {
    pub tolerance: f64,
}

impl Default for FixedSetsW {
    fn default() -> Self {
        Self {
            tolerance: FIXED_SET_TOLERANCE,
        }
    }
}

impl FixedSetsW {
    pub fn z1(t: f64) -> ReducedState2 {
        ReducedState2 { x: t, y: 0.0 }
    }

    pub fn z2(t: f64) -> ReducedState2 {
        ReducedState2 { x: 1.0, y: t }
    }

    pub fn in_z1(&self, s: &ReducedState2) -> bool {
        s.y.abs() <= self.tolerance && s.x >= -self.tolerance && s.x < 1.0 - self.tolerance
    }

    pub fn in_z2(&self, s: &ReducedState2) -> bool {
        (s.x - 1.0).abs() <= self.tolerance && s.y >= -self.tolerance && s.y <= 1.0 + self.tolerance
    }

    pub fn contains(&self, s: &ReducedState2) -> bool {
        self.in_z1(s) || self.in_z2(s)
    }

    /// Max-norm distance from `s` to `Z₁ ∪ Z₂` (closure of `Z₁`).
    pub fn distance(&self, s: &ReducedState2) -> f64 {
        let d1 = s.y.abs().max((s.x.clamp(0.0, 1.0) - s.x).abs());
        let d2 = (s.x - 1.0).abs().max((s.y.clamp(0.0, 1.0) - s.y).abs());
        d1.min(d2)
    }
}

pub fn fixed_sets_w(_p: &TwoTypeParams) -> FixedSetsW {
    FixedSetsW::default()
}

/// Limit of the `W`-orbit of `s0`: `(ac, 0)` if `ac < 1`, otherwise
/// `(1, (ac - 1)(1 - b)/a)`, where `c` is the invariant of `s0`.
pub fn predict_limit_w(p: &TwoTypeParams, s0: &ReducedState2) -> Result<ReducedState2> {
    if FixedSetsW::default().contains(s0) {
        return Err(Error::IsFixedPoint);
    }
    let ac = p.a * invariant_line_c(p, s0);
    if ac < 1.0 {
        Ok(ReducedState2 { x: ac, y: 0.0 })
    } else {
        Ok(ReducedState2 {
            x: 1.0,
            y: (ac - 1.0) * (1.0 - p.b) / p.a,
        })
    }
}

/// [`predict_limit_w`] on `S¹ × S¹`.
pub fn predict_limit_v(p: &TwoTypeParams, s0: &PopulationState) -> Result<PopulationState> {
    let reduced = ReducedState2::project(s0)?;
    Ok(predict_limit_w(p, &reduced)?.lift())
}
