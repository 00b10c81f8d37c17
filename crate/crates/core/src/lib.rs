//! Quadratic stochastic operators of bisexual populations.
//!
//! Operators are built from a graph, a finite allele set, a split of the
//! allele configurations into female and male types, and positive weights
//! ([`construction`]). Orbits, Jacobians and fixed-point types are handled
//! generically in [`dynamics`]; [`two_type`] and [`four_type`] hold the
//! closed-form models with two and four types of each sex.

pub mod commands;
pub mod construction;
pub mod dynamics;
pub mod error;
pub mod four_type;
pub mod io;
pub mod simplex;
pub mod two_type;

pub use error::{Error, Result};
pub use simplex::{make_distribution, state_distance, Distribution, PopulationState, Tolerance};
