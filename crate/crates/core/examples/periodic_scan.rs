//! Brute-force search for periodic points: none for the critical-line map,
//! the familiar 2-cycle for the logistic map at r = 4.

use qsobp::four_type::{scan_periodic_points, scan_periodic_points_of, TMapParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut total = 0;
    for i in 1..10 {
        for j in 1..10 {
            let tp = TMapParams::new(i as f64 / 10.0, j as f64 / 10.0, 0.5)?;
            for p in 2..=4 {
                total += scan_periodic_points(&tp, p, 2000).len();
            }
        }
    }
    println!("periodic points of period 2..4 over 81 parameter sets: {total}");

    let logistic = |x: f64| 4.0 * x * (1.0 - x);
    for p in 2..=3 {
        let pts = scan_periodic_points_of(logistic, p, 5000, &[0.0, 0.75]);
        println!("logistic map, period {p}: {} points {:?}", pts.len(), pts);
    }
    Ok(())
}
