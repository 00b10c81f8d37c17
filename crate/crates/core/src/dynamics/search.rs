//! Numerical search for fixed points of planar maps.

use nalgebra::{Matrix2, Vector2};
use serde::Serialize;

use crate::simplex::Tolerance;

const MAX_REFINE_STEPS: usize = 500;
const FD_STEP: f64 = 1e-7;

/// Axis-aligned rectangle `[x_min, x_max] × [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Self {
            x_min,
            x_max,
            y_min,
            y_max,
        }
    }

    pub fn unit() -> Self {
        Self::new(0.0, 1.0, 0.0, 1.0)
    }

    pub fn clamp(&self, p: [f64; 2]) -> [f64; 2] {
        [
            p[0].clamp(self.x_min, self.x_max),
            p[1].clamp(self.y_min, self.y_max),
        ]
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        (self.x_min..=self.x_max).contains(&p[0]) && (self.y_min..=self.y_max).contains(&p[1])
    }

    /// `grid × grid` lattice including the corners, row-major in `x`.
    pub fn lattice(&self, grid: usize) -> Vec<[f64; 2]> {
        let coord = |lo: f64, hi: f64, i: usize| {
            if grid <= 1 {
                0.5 * (lo + hi)
            } else {
                lo + (hi - lo) * i as f64 / (grid - 1) as f64
            }
        };
        (0..grid)
            .flat_map(|i| {
                (0..grid).map(move |j| [coord(self.x_min, self.x_max, i), coord(self.y_min, self.y_max, j)])
            })
            .collect()
    }
}

fn residual<F: Fn(&[f64; 2]) -> [f64; 2]>(map: &F, p: [f64; 2]) -> Vector2<f64> {
    let q = map(&p);
    Vector2::new(q[0] - p[0], q[1] - p[1])
}

fn residual_jacobian<F: Fn(&[f64; 2]) -> [f64; 2]>(map: &F, p: [f64; 2]) -> Matrix2<f64> {
    let mut jac = Matrix2::zeros();
    for col in 0..2 {
        let (mut lo, mut hi) = (p, p);
        lo[col] -= FD_STEP;
        hi[col] += FD_STEP;
        let d = (residual(map, hi) - residual(map, lo)) / (2.0 * FD_STEP);
        jac.set_column(col, &d);
    }
    jac
}

fn max_norm(v: &Vector2<f64>) -> f64 {
    v[0].abs().max(v[1].abs())
}

/// Projected Levenberg–Marquardt descent on `|map(p) - p|²` from `seed`.
/// Returns the final point and its max-norm residual.
pub fn refine_fixed_point<F>(map: &F, seed: [f64; 2], domain: &Rect, target: f64) -> ([f64; 2], f64)
where
    F: Fn(&[f64; 2]) -> [f64; 2],
{
    let mut p = domain.clamp(seed);
    let mut g = residual(map, p);
    let mut lambda = 1e-3;
    for _ in 0..MAX_REFINE_STEPS {
        if max_norm(&g) <= target || !g.iter().all(|v| v.is_finite()) {
            break;
        }
        let jac = residual_jacobian(map, p);
        let jtj = jac.transpose() * jac;
        let jtg = jac.transpose() * g;
        let mut improved = false;
        while lambda < 1e12 {
            let damped = jtj + Matrix2::from_diagonal(&jtj.diagonal().map(|d| lambda * d.max(1e-12)));
            let Some(delta) = damped.lu().solve(&(-jtg)) else {
                lambda *= 10.0;
                continue;
            };
            let candidate = domain.clamp([p[0] + delta[0], p[1] + delta[1]]);
            let g_new = residual(map, candidate);
            if g_new.norm_squared() < g.norm_squared() {
                p = candidate;
                g = g_new;
                lambda = (lambda * 0.1).max(1e-15);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (p, max_norm(&g))
}

/// Fixed points of a planar map in `domain`, found by refining every node of
/// a `grid × grid` lattice.
///
/// Points with max-norm residual above `tol.abs_eps` are discarded; points
/// within `10 · tol.abs_eps` of an earlier one are merged. A continuum of
/// fixed points comes back as a cloud of points on it. Output is sorted
/// lexicographically.
pub fn find_fixed_points_grid<F>(map: F, domain: &Rect, grid: usize, tol: &Tolerance) -> Vec<[f64; 2]>
where
    F: Fn(&[f64; 2]) -> [f64; 2],
{
    let merge = 10.0 * tol.abs_eps;
    let mut found: Vec<[f64; 2]> = Vec::new();
    for seed in domain.lattice(grid.max(2)) {
        let (p, res) = refine_fixed_point(&map, seed, domain, 1e-3 * tol.abs_eps);
        if res > tol.abs_eps {
            continue;
        }
        let duplicate = found
            .iter()
            .any(|q| (q[0] - p[0]).abs().max((q[1] - p[1]).abs()) <= merge);
        if !duplicate {
            found.push(p);
        }
    }
    found.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    found
}
