//! Heredity tensors and operators built from a graph, an allele set, a
//! female/male split of the cells and positive weights.

pub mod graph;
pub mod heredity;
pub mod operator;
pub mod space;

pub use graph::{all_graphs, connected_components, Graph};
pub use heredity::{build_heredity, HeredityTensors, WeightPair};
pub use operator::{build_operator, is_identity, BisexualOperator};
pub use space::{compatible_sets, enumerate_cells, Cell, ConfigurationSpace};
