//! Writes orbits of the planar block as CSV (`regime,orbit,step,x,y`) for
//! plotting, one batch per side of the critical line and one on it.

use std::io::Write;

use qsobp::four_type::PlanarParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (a0, c0) = (0.5, 0.7);
    let starts = [(0.05, 0.65), (0.45, 0.05), (0.25, 0.35), (0.48, 0.6), (0.02, 0.1)];
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "regime,orbit,step,x,y")?;
    for (label, a, c) in [("below", 0.3, 0.4), ("above", 0.7, 0.6), ("critical", 0.4, 0.6)] {
        let pp = PlanarParams { a, c, a0, c0 };
        for (k, &(x0, y0)) in starts.iter().enumerate() {
            let (mut x, mut y) = (x0, y0);
            for step in 0..=60 {
                writeln!(out, "{label},{k},{step},{x:.6},{y:.6}")?;
                (x, y) = pp.step(x, y);
            }
        }
    }
    Ok(())
}
