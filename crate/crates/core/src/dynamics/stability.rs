//! Jacobians and fixed-point types.
//!
//! Planar fixed points are typed through the characteristic polynomial
//! `F(λ) = λ² + Bλ + C` of the Jacobian, using the signs of `F(1)`, `F(-1)`
//! and `C - 1` to locate the roots relative to the unit circle without
//! computing them.

use nalgebra::{DMatrix, Matrix2};
use serde::Serialize;

use crate::construction::BisexualOperator;
use crate::error::Result;
use crate::simplex::{PopulationState, Tolerance};

/// Analytic Jacobian of the unrestricted coordinate map of `op` at `s`.
///
/// Rows are `(x'_1..x'_n, y'_1..y'_nu)`, columns `(x_1..x_n, y_1..y_nu)`.
pub fn jacobian(op: &BisexualOperator, s: &PopulationState) -> Result<DMatrix<f64>> {
    op.check_dims(s)?;
    Ok(jacobian_raw(op, s.x(), s.y()))
}

/// [`jacobian`] at arbitrary coordinates.
pub fn jacobian_raw(op: &BisexualOperator, x: &[f64], y: &[f64]) -> DMatrix<f64> {
    let (n, nu) = (op.n(), op.nu());
    let t = op.tensors();
    let mut jac = DMatrix::zeros(n + nu, n + nu);
    for i in 0..n {
        for k in 0..nu {
            let (pf, pm) = (t.pf_row(i, k), t.pm_row(i, k));
            for j in 0..n {
                // x'_j = Σ pf[i][k][j] x_i y_k
                jac[(j, i)] += pf[j] * y[k];
                jac[(j, n + k)] += pf[j] * x[i];
            }
            for l in 0..nu {
                jac[(n + l, i)] += pm[l] * y[k];
                jac[(n + l, n + k)] += pm[l] * x[i];
            }
        }
    }
    jac
}

/// Coefficients of `F(λ) = λ² + Bλ + C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadraticCharacteristic {
    pub b: f64,
    pub c: f64,
}

/// Roots of a real quadratic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Roots {
    Real(f64, f64),
    /// `re ± i·im`
    Complex { re: f64, im: f64 },
}

impl QuadraticCharacteristic {
    pub fn new(b: f64, c: f64) -> Self {
        Self { b, c }
    }

    /// Characteristic polynomial of a 2×2 matrix: `B = -trace`, `C = det`.
    pub fn of_matrix(m: &Matrix2<f64>) -> Self {
        Self {
            b: -m.trace(),
            c: m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        }
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        lambda * lambda + self.b * lambda + self.c
    }

    pub fn roots(&self) -> Roots {
        let disc = self.b * self.b - 4.0 * self.c;
        if disc >= 0.0 {
            let sq = disc.sqrt();
            // Citardauq form avoids cancellation in the smaller root.
            let q = -0.5 * (self.b + self.b.signum() * sq);
            if q == 0.0 {
                Roots::Real(0.0, 0.0)
            } else {
                Roots::Real(q, self.c / q)
            }
        } else {
            Roots::Complex {
                re: -0.5 * self.b,
                im: 0.5 * (-disc).sqrt(),
            }
        }
    }

    /// `(|λ_1|, |λ_2|)` with `|λ_1| >= |λ_2|`.
    pub fn moduli(&self) -> (f64, f64) {
        match self.roots() {
            Roots::Real(r1, r2) => {
                let (m1, m2) = (r1.abs(), r2.abs());
                (m1.max(m2), m1.min(m2))
            }
            Roots::Complex { .. } => {
                let m = self.c.abs().sqrt();
                (m, m)
            }
        }
    }
}

/// Where the roots of `F` lie relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootLocation {
    BothInside,
    BothOutside,
    /// One root inside, one outside.
    Split,
    /// A root on the unit circle other than `λ = 1`.
    OnCircle,
    /// `λ = 1` is a root; `other` locates the remaining root.
    RootAtOne { other: CirclePosition },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CirclePosition {
    Inside,
    On,
    Outside,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign(v: f64, band: f64) -> Sign {
    if v.abs() <= band {
        Sign::Zero
    } else if v > 0.0 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Root location from the signs of `F(1)`, `F(-1)` and `C - 1`, with exact comparisons.
pub fn classify_quadratic(qc: &QuadraticCharacteristic) -> RootLocation {
    classify_quadratic_with_band(qc, 0.0)
}

/// As [`classify_quadratic`], treating values within `band` of zero as zero.
pub fn classify_quadratic_with_band(qc: &QuadraticCharacteristic, band: f64) -> RootLocation {
    let f_plus = qc.eval(1.0);
    let f_minus = qc.eval(-1.0);
    match sign(f_plus, band) {
        Sign::Pos => match sign(f_minus, band) {
            Sign::Pos => match sign(qc.c - 1.0, band) {
                Sign::Neg => RootLocation::BothInside,
                Sign::Pos => RootLocation::BothOutside,
                // Complex pair on the circle.
                Sign::Zero => RootLocation::OnCircle,
            },
            // λ = -1 is a root.
            Sign::Zero => RootLocation::OnCircle,
            Sign::Neg => RootLocation::Split,
        },
        Sign::Zero => {
            // With λ = 1 a root, the other one equals C.
            let other = match sign(qc.c.abs() - 1.0, band) {
                Sign::Neg => CirclePosition::Inside,
                Sign::Zero => CirclePosition::On,
                Sign::Pos => CirclePosition::Outside,
            };
            RootLocation::RootAtOne { other }
        }
        // One root in (1, ∞); F(-1) places the other.
        Sign::Neg => match sign(f_minus, band) {
            Sign::Neg => RootLocation::BothOutside,
            Sign::Zero => RootLocation::OnCircle,
            Sign::Pos => RootLocation::Split,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointKind {
    Attracting,
    Repelling,
    Saddle,
    NonHyperbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedPointClass {
    pub kind: FixedPointKind,
    /// Eigenvalue moduli, larger first.
    pub eigen_moduli: (f64, f64),
}

/// Type of a planar fixed point from its Jacobian.
///
/// Any eigenvalue modulus within `tol.abs_eps` of one makes the point
/// non-hyperbolic; the moduli are reported either way so callers can tell a
/// line of fixed points with a contracting transverse direction from a
/// degenerate point.
pub fn classify_fixed_point_2d(jac: &Matrix2<f64>, tol: &Tolerance) -> FixedPointClass {
    let qc = QuadraticCharacteristic::of_matrix(jac);
    let eigen_moduli = qc.moduli();
    let near_one = |m: f64| (m - 1.0).abs() <= tol.abs_eps;
    let kind = if near_one(eigen_moduli.0) || near_one(eigen_moduli.1) {
        FixedPointKind::NonHyperbolic
    } else {
        match classify_quadratic(&qc) {
            RootLocation::BothInside => FixedPointKind::Attracting,
            RootLocation::BothOutside => FixedPointKind::Repelling,
            RootLocation::Split => FixedPointKind::Saddle,
            RootLocation::OnCircle | RootLocation::RootAtOne { .. } => {
                FixedPointKind::NonHyperbolic
            }
        }
    };
    FixedPointClass { kind, eigen_moduli }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qc(b: f64, c: f64) -> QuadraticCharacteristic {
        QuadraticCharacteristic::new(b, c)
    }

    #[test]
    fn sign_rule_examples() {
        // Roots 0.4 and 0.1.
        assert_eq!(classify_quadratic(&qc(-0.5, 0.04)), RootLocation::BothInside);
        // Roots 1 and 2.
        assert_eq!(
            classify_quadratic(&qc(-3.0, 2.0)),
            RootLocation::RootAtOne {
                other: CirclePosition::Outside
            }
        );
        // Roots 0.5 and 2.
        assert_eq!(classify_quadratic(&qc(-2.5, 1.0)), RootLocation::Split);
    }

    #[test]
    fn boundary_cases() {
        // ±i
        assert_eq!(classify_quadratic(&qc(0.0, 1.0)), RootLocation::OnCircle);
        // Double root -1.
        assert_eq!(classify_quadratic(&qc(2.0, 1.0)), RootLocation::OnCircle);
        // Roots -1 and 0.5.
        assert_eq!(classify_quadratic(&qc(0.5, -0.5)), RootLocation::OnCircle);
        // Roots 1 and 0.5; 1 and -1; double root 1.
        assert_eq!(
            classify_quadratic(&qc(-1.5, 0.5)),
            RootLocation::RootAtOne {
                other: CirclePosition::Inside
            }
        );
        assert_eq!(
            classify_quadratic(&qc(0.0, -1.0)),
            RootLocation::RootAtOne {
                other: CirclePosition::On
            }
        );
        assert_eq!(
            classify_quadratic(&qc(-2.0, 1.0)),
            RootLocation::RootAtOne {
                other: CirclePosition::On
            }
        );
        // Roots 3 and -1; 3 and -2; 3 and 0.5.
        assert_eq!(classify_quadratic(&qc(-2.0, -3.0)), RootLocation::OnCircle);
        assert_eq!(classify_quadratic(&qc(-1.0, -6.0)), RootLocation::BothOutside);
        assert_eq!(classify_quadratic(&qc(-3.5, 1.5)), RootLocation::Split);
        // Complex pair of modulus 2.
        assert_eq!(classify_quadratic(&qc(0.0, 4.0)), RootLocation::BothOutside);
    }

    #[test]
    fn roots_are_accurate() {
        match qc(-1e8, 1.0).roots() {
            Roots::Real(r1, r2) => {
                assert!((r1 - 1e8).abs() / 1e8 < 1e-15);
                assert!((r2 - 1e-8).abs() / 1e-8 < 1e-12);
            }
            _ => panic!("expected real roots"),
        }
        assert_eq!(qc(0.0, 0.0).roots(), Roots::Real(0.0, 0.0));
        assert_eq!(qc(0.0, 0.25).moduli(), (0.5, 0.5));
    }

    #[test]
    fn classify_diagonal_matrices() {
        let tol = Tolerance::default();
        let cls = |a: f64, d: f64| classify_fixed_point_2d(&Matrix2::new(a, 0.0, 0.0, d), &tol);
        assert_eq!(cls(0.5, -0.3).kind, FixedPointKind::Attracting);
        assert_eq!(cls(1.5, -3.0).kind, FixedPointKind::Repelling);
        assert_eq!(cls(1.5, 0.2).kind, FixedPointKind::Saddle);
        assert_eq!(cls(1.0, 0.2).kind, FixedPointKind::NonHyperbolic);
        assert_eq!(cls(1.0 + 1e-10, 0.2).kind, FixedPointKind::NonHyperbolic);
        assert_eq!(cls(0.2, -1.0).kind, FixedPointKind::NonHyperbolic);
        let (m1, m2) = cls(1.5, 0.2).eigen_moduli;
        assert!((m1 - 1.5).abs() < 1e-12 && (m2 - 0.2).abs() < 1e-12);
    }

    #[test]
    fn rotation_is_non_hyperbolic() {
        let (s, c) = 0.3f64.sin_cos();
        let m = Matrix2::new(c, -s, s, c);
        let cls = classify_fixed_point_2d(&m, &Tolerance::default());
        assert_eq!(cls.kind, FixedPointKind::NonHyperbolic);
    }

    #[test]
    fn identity_operator_jacobian() {
        let op = BisexualOperator::identity(3, 2);
        let s = PopulationState::from_parts(&[0.2, 0.3, 0.5], &[0.6, 0.4]).unwrap();
        let jac = jacobian(&op, &s).unwrap();
        // On the simplex the identity operator's unrestricted map is
        // x'_i = x_i Σ_k y_k, whose Jacobian restricted to tangent directions is I.
        // The full Jacobian has the x-block equal to (Σ y) I and an x ⊗ 1 coupling.
        for i in 0..3 {
            assert!((jac[(i, i)] - 1.0).abs() < 1e-15);
            for k in 0..2 {
                assert!((jac[(i, 3 + k)] - s.x()[i]).abs() < 1e-15);
            }
        }
    }
}
