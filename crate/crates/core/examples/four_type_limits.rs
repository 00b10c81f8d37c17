//! The four sign regimes of `(a + c - 1, b + d - 1)` and the limit each selects.

use qsobp::dynamics::iterate;
use qsobp::four_type::{lift_to_v4, predict_limit_v4, regime, FourTypeParams};
use qsobp::{state_distance, PopulationState, Tolerance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s0 = PopulationState::from_parts(&[0.1, 0.3, 0.2, 0.4], &[0.25, 0.25, 0.3, 0.2])?;
    let tol = Tolerance::default();
    for (a, c) in [(0.3, 0.3), (0.7, 0.7)] {
        for (b, d) in [(0.2, 0.4), (0.8, 0.6)] {
            let p = FourTypeParams::new(a, b, c, d, 0.5, 0.5)?.on_slice_of(&s0)?;
            let traj = iterate(&lift_to_v4(&p), s0.clone(), &tol)?;
            let limit = traj.limit.ok_or("no convergence")?;
            let predicted = predict_limit_v4(&p, &s0)?;
            let round = |v: Vec<f64>| v.iter().map(|x| format!("{x:.3}")).collect::<Vec<_>>().join(" ");
            println!(
                "{} a+c={:.1} b+d={:.1}: {} (error {:.1e}, {} steps)",
                regime(&p).unwrap_or("critical"),
                a + c,
                b + d,
                round(limit.coords()),
                state_distance(&limit, &predicted)?,
                traj.steps_taken,
            );
        }
    }
    Ok(())
}
