//! On `a + c = 1` the first block preserves `x + y`; on the line `x + y = 1`
//! it reduces to a quadratic map of `[0, 1]` with a single attracting fixed point.

use qsobp::dynamics::iterate_map;
use qsobp::four_type::{
    fixed_points_t, predict_limit_t, t_derivative_at_fixed, t_step, TMapParams,
};
use qsobp::Tolerance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    for (a, a0, c0) in [(0.3, 0.4, 0.5), (0.5, 0.4, 0.6), (0.85, 0.2, 0.9)] {
        let tp = TMapParams::new(a, a0, c0)?;
        let fixed = fixed_points_t(&tp);
        println!(
            "a = {a}, a0 = {a0}, c0 = {c0}: {} = {:.10}, T' = {:.4}, other root {:?}",
            fixed.label.as_str(),
            fixed.t_star,
            t_derivative_at_fixed(&tp),
            fixed.spurious,
        );
        for x0 in [0.0, 0.5, 1.0] {
            let traj = iterate_map(|x| t_step(&tp, *x), x0, &tol);
            println!(
                "  x0 = {x0}: limit {:.10} after {} steps (predicted {:.10})",
                traj.limit.unwrap_or(f64::NAN),
                traj.steps_taken,
                predict_limit_t(&tp, x0)?,
            );
        }
    }
    Ok(())
}
