//! Fixed points of the planar block located by grid search and typed from
//! their Jacobians, on both sides of the critical line and on it.

use qsobp::dynamics::{classify_fixed_point_2d, find_fixed_points_grid, Rect};
use qsobp::four_type::{classify_w1_fixed_points, FourTypeParams};
use qsobp::Tolerance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    for (a, c) in [(0.3, 0.4), (0.7, 0.6), (0.4, 0.6)] {
        let p = FourTypeParams::new(a, 0.5, c, 0.5, 0.4, 0.6)?;
        let pp = p.w1();
        println!("a = {a}, c = {c}:");
        if pp.is_critical() {
            for (pt, cls) in classify_w1_fixed_points(&p, 5, &tol) {
                println!(
                    "  curve point ({:.3}, {:.3}) {:?}, moduli ({:.3}, {:.3})",
                    pt[0], pt[1], cls.kind, cls.eigen_moduli.0, cls.eigen_moduli.1
                );
            }
            continue;
        }
        let domain = Rect::new(0.0, pp.a0, 0.0, pp.c0);
        let found = find_fixed_points_grid(
            |&[x, y]: &[f64; 2]| {
                let (xn, yn) = pp.step(x, y);
                [xn, yn]
            },
            &domain,
            12,
            &tol,
        );
        for pt in found {
            let cls = classify_fixed_point_2d(&pp.jacobian(pt[0], pt[1]), &tol);
            println!("  ({:.6}, {:.6}) {:?}, moduli ({:.3}, {:.3})", pt[0], pt[1], cls.kind, cls.eigen_moduli.0, cls.eigen_moduli.1);
        }
    }
    Ok(())
}
