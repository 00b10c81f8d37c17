//! JSON documents read and written by the command-line tool.
//!
//! A construction document names cells by their 1-based position in the
//! lexicographic enumeration (vertex 1 most significant, alleles `1..=|Φ|`):
//!
//! ```json
//! { "vertices": 3, "edges": [[1, 2]], "alleles": 2,
//!   "females": [1, 3, 6, 8],
//!   "female_weights": { "1": 3, "3": 7, "6": 7, "8": 3 },
//!   "male_weights": { "2": 3, "4": 7, "5": 7, "7": 3 } }
//! ```
//!
//! Omitted weight maps mean uniform weights. Operator documents are the
//! serialized [`BisexualOperator`]: `{ "n", "nu", "pf", "pm" }`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::construction::{build_operator, BisexualOperator, ConfigurationSpace, Graph, WeightPair};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionDoc {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    pub alleles: usize,
    /// 1-based cell indices.
    pub females: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub female_weights: Option<BTreeMap<String, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub male_weights: Option<BTreeMap<String, f64>>,
}

/// A constructed operator together with its configuration space.
#[derive(Debug, Clone)]
pub struct Constructed {
    pub space: ConfigurationSpace,
    pub weights: WeightPair,
    pub operator: BisexualOperator,
}

fn parse_weights(map: &BTreeMap<String, f64>, cells: usize) -> Result<BTreeMap<usize, f64>> {
    let mut out = BTreeMap::new();
    for (key, &value) in map {
        let idx: usize = key.trim().parse().map_err(|_| {
            Error::InvalidPartition(format!("weight key {key:?} is not a cell index"))
        })?;
        if idx == 0 || idx > cells {
            return Err(Error::InvalidPartition(format!(
                "weight key {idx} out of range 1..={cells}"
            )));
        }
        out.insert(idx - 1, value);
    }
    Ok(out)
}

impl ConstructionDoc {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn build(&self) -> Result<Constructed> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = Graph::new(self.vertices, &edges)?;
        let females = self
            .females
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPartition("cell indices are 1-based; got 0".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let space = ConfigurationSpace::new(graph, self.alleles, &females)?;
        let cells = space.cells().len();
        let weights = match (&self.female_weights, &self.male_weights) {
            (None, None) => WeightPair::uniform(&space),
            (fw, mw) => {
                let fw = fw.as_ref().map(|m| parse_weights(m, cells)).transpose()?;
                let mw = mw.as_ref().map(|m| parse_weights(m, cells)).transpose()?;
                for (map, side, allowed) in [
                    (&fw, "female", space.females()),
                    (&mw, "male", space.males()),
                ] {
                    if let Some(map) = map {
                        if let Some(&bad) = map.keys().find(|c| !allowed.contains(c)) {
                            return Err(Error::IndexOutOfPartition {
                                index: bad + 1,
                                side,
                            });
                        }
                    }
                }
                WeightPair::from_fn(&space, |cell| {
                    let map = if space.female_type(cell).is_some() { &fw } else { &mw };
                    match map {
                        Some(m) => m.get(&cell).copied(),
                        None => Some(1.0),
                    }
                })
                .map_err(|e| match e {
                    Error::MissingWeight { cell } => Error::MissingWeight { cell: cell + 1 },
                    Error::InvalidWeight { cell, value } => Error::InvalidWeight {
                        cell: cell + 1,
                        value,
                    },
                    other => other,
                })?
            }
        };
        let operator = build_operator(&space, &weights)?;
        Ok(Constructed {
            space,
            weights,
            operator,
        })
    }

    /// The three-vertex graph with one edge `{1, 2}` and two alleles, with
    /// females the cells whose first and third alleles agree. Female weights
    /// `(a, 1 - a)` on the first pair of female cells and `(b, 1 - b)` on the
    /// second, and likewise `(c, 1 - c)`, `(d, 1 - d)` for males, reproduce
    /// the four-type operator with rates `a, b, c, d`.
    pub fn four_type_example(a: f64, b: f64, c: f64, d: f64) -> Self {
        let map = |pairs: [(usize, f64); 4]| {
            Some(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
        };
        Self {
            vertices: 3,
            edges: vec![[1, 2]],
            alleles: 2,
            females: vec![1, 3, 6, 8],
            female_weights: map([(1, a), (3, 1.0 - a), (6, b), (8, 1.0 - b)]),
            male_weights: map([(2, c), (4, 1.0 - c), (5, d), (7, 1.0 - d)]),
        }
    }

    /// Two vertices, no edges, two alleles, females the cells with first
    /// allele 1. Weights `(w1, w2)` on females and `(m1, m2)` on males.
    pub fn two_type_example(female: [f64; 2], male: [f64; 2]) -> Self {
        let map = |cells: [usize; 2], w: [f64; 2]| {
            Some(
                cells
                    .iter()
                    .zip(w)
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
            )
        };
        Self {
            vertices: 2,
            edges: Vec::new(),
            alleles: 2,
            females: vec![1, 2],
            female_weights: map([1, 2], female),
            male_weights: map([3, 4], male),
        }
    }
}

pub fn operator_from_json(text: &str) -> serde_json::Result<BisexualOperator> {
    serde_json::from_str(text)
}

pub fn operator_to_json(op: &BisexualOperator) -> String {
    serde_json::to_string_pretty(op).expect("operators always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::four_type::{lift_to_v4, FourTypeParams};
    use crate::simplex::{state_distance, PopulationState};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn four_type_document_matches_closed_form() {
        let doc = ConstructionDoc::four_type_example(0.3, 0.7, 0.2, 0.9);
        let built = doc.build().unwrap();
        assert_eq!((built.operator.n(), built.operator.nu()), (4, 4));
        let p = FourTypeParams::new(0.3, 0.7, 0.2, 0.9, 0.5, 0.5).unwrap();
        let closed = lift_to_v4(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let s = PopulationState::random(4, 4, &mut rng).unwrap();
            let d = state_distance(
                &built.operator.apply(&s).unwrap(),
                &closed.apply(&s).unwrap(),
            )
            .unwrap();
            assert!(d < 1e-14);
        }
    }

    #[test]
    fn json_round_trip() {
        let doc = ConstructionDoc::four_type_example(0.3, 0.7, 0.2, 0.9);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(ConstructionDoc::from_json(&text).unwrap(), doc);

        let op = doc.build().unwrap().operator;
        let back = operator_from_json(&operator_to_json(&op)).unwrap();
        assert_eq!(back, op);
    }

    #[test]
    fn uniform_when_weights_omitted() {
        let doc = ConstructionDoc::from_json(
            r#"{"vertices": 2, "edges": [], "alleles": 2, "females": [1, 2]}"#,
        )
        .unwrap();
        let built = doc.build().unwrap();
        assert_eq!(built.weights.female(), &[1.0, 1.0]);
    }

    #[test]
    fn schema_errors() {
        let err = ConstructionDoc::from_json(r#"{"vertices": 2, "alleles": 2, "females": [1], "extra": 1}"#)
            .unwrap_err();
        assert!(err.to_string().contains("extra"));
        assert!(ConstructionDoc::from_json(r#"{"vertices": 2}"#).is_err());

        let mut doc = ConstructionDoc::four_type_example(0.3, 0.7, 0.2, 0.9);
        doc.female_weights.as_mut().unwrap().insert("2".into(), 1.0);
        assert_eq!(
            doc.build().unwrap_err(),
            Error::IndexOutOfPartition {
                index: 2,
                side: "female"
            }
        );

        let mut doc = ConstructionDoc::four_type_example(0.3, 0.7, 0.2, 0.9);
        doc.male_weights.as_mut().unwrap().remove("7");
        assert_eq!(doc.build().unwrap_err(), Error::MissingWeight { cell: 7 });

        let mut doc = ConstructionDoc::four_type_example(0.3, 0.7, 0.2, 0.9);
        doc.females = vec![0];
        assert!(doc.build().is_err());
    }
}
