//! Orbits, convergence, Jacobians and fixed-point types for bisexual
//! operators and for the low-dimensional maps derived from them.

pub mod search;
pub mod stability;
pub mod trajectory;

pub use search::{find_fixed_points_grid, refine_fixed_point, Rect};
pub use stability::{
    classify_fixed_point_2d, classify_quadratic, classify_quadratic_with_band, jacobian,
    jacobian_raw, CirclePosition, FixedPointClass, FixedPointKind, QuadraticCharacteristic,
    RootLocation, Roots,
};
pub use trajectory::{
    conserved_quantity_drift, iterate, iterate_map, orbit_drift, Phase, Trajectory,
    MAX_STORED_STATES,
};
