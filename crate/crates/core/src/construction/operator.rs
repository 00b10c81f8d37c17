use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construction::heredity::{build_heredity, HeredityTensors, WeightPair};
use crate::construction::space::ConfigurationSpace;
use crate::error::{Error, Result};
use crate::simplex::{state_distance, PopulationState, Tolerance};

/// Seed for the random probe states used by [`is_identity`].
const IDENTITY_PROBE_SEED: u64 = 0x005e_ed1d;

/// The evolution operator `V` of a bisexual population:
///
/// ```text
/// x'_j = Σ_{i,k} p^f_{ik,j} x_i y_k,    y'_l = Σ_{i,k} p^m_{ik,l} x_i y_k
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BisexualOperator {
    tensors: HeredityTensors,
}

impl BisexualOperator {
    pub fn new(tensors: HeredityTensors) -> Self {
        Self { tensors }
    }

    pub fn identity(n: usize, nu: usize) -> Self {
        Self::new(HeredityTensors::identity(n, nu))
    }

    pub fn n(&self) -> usize {
        self.tensors.n()
    }

    pub fn nu(&self) -> usize {
        self.tensors.nu()
    }

    pub fn tensors(&self) -> &HeredityTensors {
        &self.tensors
    }

    /// Image of `s`.
    ///
    /// Evaluated in homogeneous form, `x' = Σ p^f x_i y_k / Σ x_i y_k`, which
    /// is the same map on the simplex. Without the division the total mass
    /// obeys `|x'| = |x| |y|`, so rounding errors in the sums feed on each
    /// other and grow geometrically over long orbits.
    pub fn apply(&self, s: &PopulationState) -> Result<PopulationState> {
        self.check_dims(s)?;
        let (mut x, mut y) = self.apply_raw(s.x(), s.y());
        let mass: f64 = s.x().iter().sum::<f64>() * s.y().iter().sum::<f64>();
        if mass > 0.0 {
            x.iter_mut().for_each(|v| *v /= mass);
            y.iter_mut().for_each(|v| *v /= mass);
        }
        Ok(PopulationState::from_vecs_unchecked(x, y))
    }

    /// Evaluates the quadratic map on arbitrary coordinates, without any
    /// simplex checks. Used for finite differences off the simplex.
    pub fn apply_raw(&self, x: &[f64], y: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let (n, nu) = (self.n(), self.nu());
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(y.len(), nu);
        let mut xn = vec![0.0; n];
        let mut yn = vec![0.0; nu];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            for (k, &yk) in y.iter().enumerate() {
                let w = xi * yk;
                if w == 0.0 {
                    continue;
                }
                for (out, p) in xn.iter_mut().zip(self.tensors.pf_row(i, k)) {
                    *out += p * w;
                }
                for (out, p) in yn.iter_mut().zip(self.tensors.pm_row(i, k)) {
                    *out += p * w;
                }
            }
        }
        (xn, yn)
    }

    pub(crate) fn check_dims(&self, s: &PopulationState) -> Result<()> {
        let (n, nu) = s.dims();
        if n != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: n,
            });
        }
        if nu != self.nu() {
            return Err(Error::DimensionMismatch {
                expected: self.nu(),
                found: nu,
            });
        }
        Ok(())
    }
}

/// The operator on `S^{|F|-1} × S^{|M|-1}` built from a configuration space and weights.
pub fn build_operator(cs: &ConfigurationSpace, w: &WeightPair) -> Result<BisexualOperator> {
    Ok(BisexualOperator::new(build_heredity(cs, w)?))
}

/// Whether `op` is the identity: every heredity row is the indicator of the
/// mother's (resp. father's) own type, and `trials` random states are left in
/// place to within `tol.abs_eps`.
pub fn is_identity(op: &BisexualOperator, trials: usize, tol: &Tolerance) -> bool {
    let t = op.tensors();
    for i in 0..op.n() {
        for k in 0..op.nu() {
            let f_ok = t
                .pf_row(i, k)
                .iter()
                .enumerate()
                .all(|(j, &p)| (p - if j == i { 1.0 } else { 0.0 }).abs() <= tol.abs_eps);
            let m_ok = t
                .pm_row(i, k)
                .iter()
                .enumerate()
                .all(|(l, &p)| (p - if l == k { 1.0 } else { 0.0 }).abs() <= tol.abs_eps);
            if !(f_ok && m_ok) {
                return false;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(IDENTITY_PROBE_SEED);
    (0..trials.max(1)).all(|_| {
        let s = PopulationState::random(op.n(), op.nu(), &mut rng).expect("positive dims");
        let image = op.apply(&s).expect("dims match");
        state_distance(&s, &image).expect("dims match") <= tol.abs_eps
    })
}
