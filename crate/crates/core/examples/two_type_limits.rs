//! Orbits of the two-type map and their predicted limits.

use qsobp::dynamics::{conserved_quantity_drift, iterate_map};
use qsobp::two_type::{invariant_line_c, predict_limit_w, w_step, ReducedState2, TwoTypeParams};
use qsobp::Tolerance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let cases = [(0.4, 0.6, 0.3, 0.4), (0.8, 0.3, 0.5, 0.6), (0.2, 0.9, 0.1, 0.05)];
    println!("{:>5} {:>5} {:>9} {:>7} {:>24} {:>24} {:>9}", "a", "b", "ac", "steps", "iterated", "predicted", "drift");
    for (a, b, x, y) in cases {
        let p = TwoTypeParams::new(a, b)?;
        let s0 = ReducedState2::new(x, y)?;
        let traj = iterate_map(|s| w_step(&p, s), s0, &tol);
        let limit = traj.limit.ok_or("no convergence")?;
        let predicted = predict_limit_w(&p, &s0)?;
        let drift = conserved_quantity_drift(&traj, |s| invariant_line_c(&p, s));
        println!(
            "{a:>5} {b:>5} {:>9.5} {:>7} {:>24} {:>24} {drift:>9.1e}",
            a * invariant_line_c(&p, &s0),
            traj.steps_taken,
            format!("({:.6}, {:.6})", limit.x, limit.y),
            format!("({:.6}, {:.6})", predicted.x, predicted.y),
        );
    }
    Ok(())
}
