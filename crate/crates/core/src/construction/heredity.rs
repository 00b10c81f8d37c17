use serde::{Deserialize, Serialize};

use crate::construction::space::{compatible_sets, ConfigurationSpace};
use crate::error::{Error, Result};

/// Rows of a heredity tensor must sum to one within this tolerance.
pub const STOCHASTIC_TOLERANCE: f64 = 1e-12;

/// Unnormalized positive weights on the female and male cells.
///
/// Weights are stored in type order (see [`ConfigurationSpace::females`]).
/// Only ratios of weights enter the heredity coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightPair {
    female: Vec<f64>,
    male: Vec<f64>,
}

impl WeightPair {
    pub fn new(cs: &ConfigurationSpace, female: Vec<f64>, male: Vec<f64>) -> Result<Self> {
        if female.len() != cs.n() {
            return Err(Error::DimensionMismatch {
                expected: cs.n(),
                found: female.len(),
            });
        }
        if male.len() != cs.nu() {
            return Err(Error::DimensionMismatch {
                expected: cs.nu(),
                found: male.len(),
            });
        }
        for (pos, &w) in female.iter().enumerate() {
            check_weight(cs.females()[pos], w)?;
        }
        for (pos, &w) in male.iter().enumerate() {
            check_weight(cs.males()[pos], w)?;
        }
        Ok(Self { female, male })
    }

    pub fn uniform(cs: &ConfigurationSpace) -> Self {
        Self {
            female: vec![1.0; cs.n()],
            male: vec![1.0; cs.nu()],
        }
    }

    /// Weights looked up per cell index.
    pub fn from_fn(
        cs: &ConfigurationSpace,
        mut weight: impl FnMut(usize) -> Option<f64>,
    ) -> Result<Self> {
        let mut lookup = |cells: &[usize]| -> Result<Vec<f64>> {
            cells
                .iter()
                .map(|&c| weight(c).ok_or(Error::MissingWeight { cell: c }))
                .collect()
        };
        let female = lookup(cs.females())?;
        let male = lookup(cs.males())?;
        Self::new(cs, female, male)
    }

    pub fn female(&self) -> &[f64] {
        &self.female
    }

    pub fn male(&self) -> &[f64] {
        &self.male
    }

    /// Multiplies every female weight by `lambda`.
    pub fn scale_female(&self, lambda: f64) -> Self {
        Self {
            female: self.female.iter().map(|w| w * lambda).collect(),
            male: self.male.clone(),
        }
    }
}

fn check_weight(cell: usize, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidWeight { cell, value })
    }
}

/// Heredity coefficients `p^f_{ik,j}` and `p^m_{ik,l}`.
///
/// `i` indexes female types, `k` male types; `pf` rows are distributions over
/// female types, `pm` rows over male types.
#[derive(Debug, Clone, PartialEq)]
pub struct HeredityTensors {
    n: usize,
    nu: usize,
    // Row-major: pf[(i * nu + k) * n + j], pm[(i * nu + k) * nu + l].
    pf: Vec<f64>,
    pm: Vec<f64>,
}

impl HeredityTensors {
    /// Flat constructor; validates non-negativity and row sums.
    pub fn new(n: usize, nu: usize, pf: Vec<f64>, pm: Vec<f64>) -> Result<Self> {
        if n == 0 || nu == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if pf.len() != n * nu * n {
            return Err(Error::DimensionMismatch {
                expected: n * nu * n,
                found: pf.len(),
            });
        }
        if pm.len() != n * nu * nu {
            return Err(Error::DimensionMismatch {
                expected: n * nu * nu,
                found: pm.len(),
            });
        }
        let t = Self { n, nu, pf, pm };
        t.validate()?;
        Ok(t)
    }

    /// Builds from nested arrays indexed `[i][k][j]`.
    pub fn from_nested(pf: &[Vec<Vec<f64>>], pm: &[Vec<Vec<f64>>]) -> Result<Self> {
        let n = pf.len();
        let nu = pf.first().map_or(0, |r| r.len());
        let mut flat_f = Vec::with_capacity(n * nu * n);
        let mut flat_m = Vec::with_capacity(n * nu * nu);
        if pm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: pm.len(),
            });
        }
        for i in 0..n {
            if pf[i].len() != nu || pm[i].len() != nu {
                return Err(Error::DimensionMismatch {
                    expected: nu,
                    found: pf[i].len().min(pm[i].len()),
                });
            }
            for k in 0..nu {
                if pf[i][k].len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: pf[i][k].len(),
                    });
                }
                if pm[i][k].len() != nu {
                    return Err(Error::DimensionMismatch {
                        expected: nu,
                        found: pm[i][k].len(),
                    });
                }
                flat_f.extend_from_slice(&pf[i][k]);
                flat_m.extend_from_slice(&pm[i][k]);
            }
        }
        Self::new(n, nu, flat_f, flat_m)
    }

    /// Tensors of the identity operator: `p^f_{ik,j} = δ_ij`, `p^m_{ik,l} = δ_kl`.
    pub fn identity(n: usize, nu: usize) -> Self {
        let mut pf = vec![0.0; n * nu * n];
        let mut pm = vec![0.0; n * nu * nu];
        for i in 0..n {
            for k in 0..nu {
                pf[(i * nu + k) * n + i] = 1.0;
                pm[(i * nu + k) * nu + k] = 1.0;
            }
        }
        Self { n, nu, pf, pm }
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.n {
            for k in 0..self.nu {
                check_row("female", i, k, self.pf_row(i, k))?;
                check_row("male", i, k, self.pm_row(i, k))?;
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn pf(&self, i: usize, k: usize, j: usize) -> f64 {
        self.pf[(i * self.nu + k) * self.n + j]
    }

    pub fn pm(&self, i: usize, k: usize, l: usize) -> f64 {
        self.pm[(i * self.nu + k) * self.nu + l]
    }

    /// Distribution of the daughter's type for parents `(i, k)`.
    pub fn pf_row(&self, i: usize, k: usize) -> &[f64] {
        let start = (i * self.nu + k) * self.n;
        &self.pf[start..start + self.n]
    }

    pub fn pm_row(&self, i: usize, k: usize) -> &[f64] {
        let start = (i * self.nu + k) * self.nu;
        &self.pm[start..start + self.nu]
    }

    pub fn pf_nested(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.n)
            .map(|i| (0..self.nu).map(|k| self.pf_row(i, k).to_vec()).collect())
            .collect()
    }

    pub fn pm_nested(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.n)
            .map(|i| (0..self.nu).map(|k| self.pm_row(i, k).to_vec()).collect())
            .collect()
    }

    /// Largest `|row sum - 1|` over both tensors.
    pub fn max_row_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for k in 0..self.nu {
                worst = worst.max((self.pf_row(i, k).iter().sum::<f64>() - 1.0).abs());
                worst = worst.max((self.pm_row(i, k).iter().sum::<f64>() - 1.0).abs());
            }
        }
        worst
    }
}

fn check_row(side: &'static str, i: usize, k: usize, row: &[f64]) -> Result<()> {
    let sum: f64 = row.iter().sum();
    let bad_entry = row.iter().any(|&p| !p.is_finite() || p < 0.0);
    if bad_entry || (sum - 1.0).abs() > STOCHASTIC_TOLERANCE {
        return Err(Error::NotStochastic { side, i, k, sum });
    }
    Ok(())
}

impl Serialize for HeredityTensors {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        OperatorDoc {
            n: self.n,
            nu: self.nu,
            pf: self.pf_nested(),
            pm: self.pm_nested(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HeredityTensors {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = OperatorDoc::deserialize(deserializer)?;
        let t = Self::from_nested(&doc.pf, &doc.pm).map_err(serde::de::Error::custom)?;
        if t.n != doc.n || t.nu != doc.nu {
            return Err(serde::de::Error::custom(format!(
                "declared dimensions (n={}, nu={}) do not match tensors (n={}, nu={})",
                doc.n, doc.nu, t.n, t.nu
            )));
        }
        Ok(t)
    }
}

/// Wire form `{ "n", "nu", "pf", "pm" }`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorDoc {
    n: usize,
    nu: usize,
    pf: Vec<Vec<Vec<f64>>>,
    pm: Vec<Vec<Vec<f64>>>,
}

/// Heredity coefficients from compatible sets and weights:
/// `p^f_{ik,j} = μ^f(σ_j) / μ^f(Ω^f(σ_i, σ_k))` for `σ_j ∈ Ω^f`, zero otherwise.
pub fn build_heredity(cs: &ConfigurationSpace, w: &WeightPair) -> Result<HeredityTensors> {
    let (n, nu) = (cs.n(), cs.nu());
    let mut pf = vec![0.0; n * nu * n];
    let mut pm = vec![0.0; n * nu * nu];
    for (i, &mother) in cs.females().iter().enumerate() {
        for (k, &father) in cs.males().iter().enumerate() {
            let (omega_f, omega_m) = compatible_sets(cs, mother, father)?;
            if omega_f.is_empty() || omega_m.is_empty() {
                return Err(Error::EmptyCompatibleSet {
                    female: mother,
                    male: father,
                });
            }
            let f_types: Vec<usize> = omega_f
                .iter()
                .map(|&c| cs.female_type(c).expect("Ω^f ⊂ F"))
                .collect();
            let m_types: Vec<usize> = omega_m
                .iter()
                .map(|&c| cs.male_type(c).expect("Ω^m ⊂ M"))
                .collect();
            let total_f: f64 = f_types.iter().map(|&j| w.female[j]).sum();
            let total_m: f64 = m_types.iter().map(|&l| w.male[l]).sum();
            let base_f = (i * nu + k) * n;
            for &j in &f_types {
                pf[base_f + j] = w.female[j] / total_f;
            }
            let base_m = (i * nu + k) * nu;
            for &l in &m_types {
                pm[base_m + l] = w.male[l] / total_m;
            }
        }
    }
    HeredityTensors::new(n, nu, pf, pm)
}
