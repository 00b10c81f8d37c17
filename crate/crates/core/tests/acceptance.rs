//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use qsobp::construction::{
    all_graphs, build_operator, is_identity, BisexualOperator, ConfigurationSpace,
    HeredityTensors, WeightPair,
};
use qsobp::dynamics::{
    classify_quadratic, iterate, iterate_map, jacobian, orbit_drift,
    FixedPointKind, QuadraticCharacteristic, RootLocation,
};
use qsobp::four_type::{
    classify_w1_fixed_points, fixed_points_t, lift_to_v4, scan_periodic_points,
    scan_periodic_points_of, t_derivative, t_step, FourTypeParams, TMapParams,
};
use qsobp::io::ConstructionDoc;
use qsobp::two_type::{lift_to_v, w_step, ReducedState2, TwoTypeParams};
use qsobp::{PopulationState, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, |m, d| if d.is_nan() || m.is_nan() { f64::NAN } else { m.max(d) })
}

fn within(d: f64, tol: f64) -> bool {
    d.is_finite() && d <= tol
}

// Two-type limits.

fn two_type_oracle(a: f64, b: f64, x0: f64, y0: f64) -> [f64; 2] {
    let ac = a * (x0 / a + y0 / (1.0 - b));
    if ac < 1.0 {
        [ac, 0.0]
    } else {
        [1.0, (ac - 1.0) * (1.0 - b) / a]
    }
}

fn two_type_limits() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1);
    let tol = Tolerance::default();
    let (mut worst, mut failures) = (0.0f64, 0);
    for _ in 0..1000 {
        let a = rng.random_range(0.05..0.95);
        let b = rng.random_range(0.05..0.95);
        let x0 = rng.random_range(0.01..0.99);
        let y0 = rng.random_range(0.01..0.99);
        let expected = two_type_oracle(a, b, x0, y0);
        let p = TwoTypeParams::new(a, b).unwrap();

        let reduced = iterate_map(|s| w_step(&p, s), ReducedState2::new(x0, y0).unwrap(), &tol);
        let d_w = reduced
            .limit
            .map_or(f64::INFINITY, |l| max_diff(&[l.x, l.y], &expected));

        let s0 = PopulationState::from_parts(&[x0, 1.0 - x0], &[y0, 1.0 - y0]).unwrap();
        let full = iterate(&lift_to_v(&p), s0, &tol).unwrap();
        let d_v = full.limit.map_or(f64::INFINITY, |l| {
            let want = [expected[0], 1.0 - expected[0], expected[1], 1.0 - expected[1]];
            max_diff(&l.coords(), &want)
        });

        let d = d_w.max(d_v);
        worst = worst.max(d);
        if !within(d, 1e-6) {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        failures == 0 && elapsed <= Duration::from_secs(60),
        format!("1000 draws, {failures} mismatches, worst {worst:.2e}, {elapsed:.1?}"),
    )
}

// Conservation of x/a + y/(1 - b).

fn invariant_line() -> Outcome {
    let mut rng = rng(2);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let a = rng.random_range(0.05..0.95);
        let b = rng.random_range(0.05..0.95);
        let p = TwoTypeParams::new(a, b).unwrap();
        let s0 = ReducedState2::new(rng.random_range(0.01..0.99), rng.random_range(0.01..0.99)).unwrap();
        let drift = orbit_drift(|s| w_step(&p, s), s0, 1_000_000, |s| s.x / a + s.y / (1.0 - b));
        worst = worst.max(drift);
    }
    Outcome::new(worst <= 1e-12, format!("20 orbits x 1e6 steps, worst drift {worst:.2e}"))
}

// Four-type limits in all four sign regimes.

fn four_type_oracle(first_above: bool, second_above: bool, a0: f64, c0: f64) -> [f64; 8] {
    let (x12, y12) = if first_above { ([a0, 0.0], [c0, 0.0]) } else { ([0.0, a0], [0.0, c0]) };
    let (x34, y34) = if second_above {
        ([1.0 - a0, 0.0], [1.0 - c0, 0.0])
    } else {
        ([0.0, 1.0 - a0], [0.0, 1.0 - c0])
    };
    [x12[0], x12[1], x34[0], x34[1], y12[0], y12[1], y34[0], y34[1]]
}

fn rates_with_sign(rng: &mut ChaCha8Rng, above: bool) -> (f64, f64) {
    loop {
        let p = rng.random_range(0.05..0.95);
        let q = rng.random_range(0.05..0.95);
        let s = p + q - 1.0;
        if (above && s > 0.05) || (!above && s < -0.05) {
            return (p, q);
        }
    }
}

fn split(rng: &mut ChaCha8Rng, total: f64) -> [f64; 2] {
    let first = total * rng.random_range(0.01..0.99);
    [first, total - first]
}

fn four_type_limits() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(3);
    let tol = Tolerance::default();
    let (mut worst, mut failures) = (0.0f64, 0);
    for (first_above, second_above) in [(false, false), (false, true), (true, false), (true, true)] {
        for _ in 0..250 {
            let (a, c) = rates_with_sign(&mut rng, first_above);
            let (b, d) = rates_with_sign(&mut rng, second_above);
            let a0 = rng.random_range(0.05..0.95);
            let c0 = rng.random_range(0.05..0.95);
            let p = FourTypeParams::new(a, b, c, d, a0, c0).unwrap();
            let (x12, x34) = (split(&mut rng, a0), split(&mut rng, 1.0 - a0));
            let (y12, y34) = (split(&mut rng, c0), split(&mut rng, 1.0 - c0));
            let s0 = PopulationState::from_parts(
                &[x12[0], x12[1], x34[0], x34[1]],
                &[y12[0], y12[1], y34[0], y34[1]],
            )
            .unwrap();
            let traj = iterate(&lift_to_v4(&p), s0, &tol).unwrap();
            let want = four_type_oracle(first_above, second_above, a0, c0);
            let d = traj.limit.map_or(f64::INFINITY, |l| max_diff(&l.coords(), &want));
            worst = worst.max(d);
            if !within(d, 1e-6) {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        failures == 0 && elapsed <= Duration::from_secs(120),
        format!("4 x 250 draws, {failures} mismatches, worst {worst:.2e}, {elapsed:.1?}"),
    )
}

// Fixed-point types of the first planar block.

fn w1_types() -> Outcome {
    let mut rng = rng(4);
    let tol = Tolerance::default();
    let (a0, c0) = (0.4, 0.6);
    let (mut table_ok, mut empirical_ok, mut points) = (0, 0, 0);
    for i in 0..20 {
        for j in 0..20 {
            let a = 0.05 + 0.045 * i as f64;
            let c = 0.0725 + 0.045 * j as f64;
            assert!((a + c - 1.0).abs() > 0.02);
            let p = FourTypeParams::new(a, 0.5, c, 0.5, a0, c0).unwrap();
            let pp = p.w1();
            let below = a + c < 1.0;
            let classes = classify_w1_fixed_points(&p, 0, &tol);
            let expected = |pt: [f64; 2]| {
                let at_origin = pt == [0.0, 0.0];
                if at_origin == below {
                    FixedPointKind::Attracting
                } else {
                    FixedPointKind::Saddle
                }
            };
            let has_both = classes.len() == 2
                && classes.iter().any(|(pt, _)| *pt == [0.0, 0.0])
                && classes.iter().any(|(pt, _)| *pt == [a0, c0]);
            if has_both && classes.iter().all(|(pt, cls)| cls.kind == expected(*pt)) {
                table_ok += 1;
            }

            let step = |s: &[f64; 2]| {
                let (x, y) = pp.step(s[0], s[1]);
                [x, y]
            };
            let mut ok = true;
            for (pt, cls) in &classes {
                points += 1;
                // Perturbations point into the box [0, a0] x [0, c0].
                let inward = if *pt == [0.0, 0.0] { 1.0 } else { -1.0 };
                let start = |rng: &mut ChaCha8Rng| {
                    let mut e = [1e-3, 1e-3 * rng.random_range(0.2..1.0)];
                    if rng.random::<bool>() {
                        e.swap(0, 1);
                    }
                    [pt[0] + inward * e[0], pt[1] + inward * e[1]]
                };
                match cls.kind {
                    FixedPointKind::Attracting => {
                        let traj = iterate_map(step, start(&mut rng), &tol);
                        ok &= traj.limit.is_some_and(|l| max_diff(&l, pt) <= 1e-6);
                    }
                    FixedPointKind::Saddle => {
                        for _ in 0..3 {
                            let mut s = start(&mut rng);
                            let mut escaped = false;
                            for _ in 0..1_000_000 {
                                s = step(&s);
                                if max_diff(&s, pt) > 1e-2 {
                                    escaped = true;
                                    break;
                                }
                            }
                            ok &= escaped;
                        }
                    }
                    _ => ok = false,
                }
            }
            if ok {
                empirical_ok += 1;
            }
        }
    }
    Outcome::new(
        table_ok == 400 && empirical_ok == 400,
        format!("table {table_ok}/400, empirical {empirical_ok}/400 ({points} points)"),
    )
}

// Connectivity and the identity operator.

fn connectivity_identity() -> Outcome {
    let mut rng = rng(5);
    let tol = Tolerance::default();
    let (mut graphs, mut mismatches) = (0, 0);
    for vertices in 1..=4 {
        for g in all_graphs(vertices) {
            graphs += 1;
            let connected = g.is_connected();
            // Females: first vertex carries allele 1.
            let cs = ConfigurationSpace::with_female_rule(g, 2, |c| c.alleles()[0] == 1).unwrap();
            for _ in 0..10 {
                let female = (0..cs.n()).map(|_| rng.random_range(0.1..10.0)).collect();
                let male = (0..cs.nu()).map(|_| rng.random_range(0.1..10.0)).collect();
                let w = WeightPair::new(&cs, female, male).unwrap();
                let op = build_operator(&cs, &w).unwrap();
                if is_identity(&op, 10, &tol) != connected {
                    mismatches += 1;
                }
            }
        }
    }
    Outcome::new(
        mismatches == 0,
        format!("{graphs} graphs x 10 weightings, {mismatches} mismatches"),
    )
}

// Constructed operators against the closed forms.

fn closed_two_type(a: f64, b: f64, s: &PopulationState) -> Vec<f64> {
    let (x, y) = (s.x(), s.y());
    let (x1, x2, y1, y2) = (x[0], x[1], y[0], y[1]);
    vec![
        x1 * y1 + x1 * y2 + a * x2 * y1,
        (1.0 - a) * x2 * y1 + x2 * y2,
        x1 * y1 + b * x2 * y1,
        x1 * y2 + x2 * y2 + (1.0 - b) * x2 * y1,
    ]
}

fn closed_four_type(a: f64, b: f64, c: f64, d: f64, s: &PopulationState) -> Vec<f64> {
    let (x, y) = (s.x(), s.y());
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    let (y1, y2, y3, y4) = (y[0], y[1], y[2], y[3]);
    vec![
        x1 - (1.0 - a) * x1 * y2 + a * x2 * y1,
        x2 - a * x2 * y1 + (1.0 - a) * x1 * y2,
        x3 - (1.0 - b) * x3 * y4 + b * x4 * y3,
        x4 - b * x4 * y3 + (1.0 - b) * x3 * y4,
        y1 - (1.0 - c) * x2 * y1 + c * x1 * y2,
        y2 - c * x1 * y2 + (1.0 - c) * x2 * y1,
        y3 - (1.0 - d) * x4 * y3 + d * x3 * y4,
        y4 - d * x3 * y4 + (1.0 - d) * x4 * y3,
    ]
}

fn construction_matches_closed_form() -> Outcome {
    let mut rng = rng(6);
    let w = |rng: &mut ChaCha8Rng| rng.random_range(0.1..10.0);

    let female = [w(&mut rng), w(&mut rng)];
    let male = [w(&mut rng), w(&mut rng)];
    let (a, b) = (female[0] / (female[0] + female[1]), male[0] / (male[0] + male[1]));
    let op2 = ConstructionDoc::two_type_example(female, male).build().unwrap().operator;
    let mut worst2 = 0.0f64;
    for _ in 0..100 {
        let s = PopulationState::random(2, 2, &mut rng).unwrap();
        worst2 = worst2.max(max_diff(&op2.apply(&s).unwrap().coords(), &closed_two_type(a, b, &s)));
    }

    // Female cells 1, 3, 6, 8 and male cells 2, 4, 5, 7 in pairs.
    let fw: Vec<f64> = (0..4).map(|_| w(&mut rng)).collect();
    let mw: Vec<f64> = (0..4).map(|_| w(&mut rng)).collect();
    let mut doc = ConstructionDoc::four_type_example(0.5, 0.5, 0.5, 0.5);
    doc.female_weights = Some(
        [1, 3, 6, 8].iter().zip(&fw).map(|(k, v)| (k.to_string(), *v)).collect(),
    );
    doc.male_weights = Some(
        [2, 4, 5, 7].iter().zip(&mw).map(|(k, v)| (k.to_string(), *v)).collect(),
    );
    let (a, b) = (fw[0] / (fw[0] + fw[1]), fw[2] / (fw[2] + fw[3]));
    let (c, d) = (mw[0] / (mw[0] + mw[1]), mw[2] / (mw[2] + mw[3]));
    let op4 = doc.build().unwrap().operator;
    let mut worst4 = 0.0f64;
    for _ in 0..100 {
        let s = PopulationState::random(4, 4, &mut rng).unwrap();
        worst4 = worst4.max(max_diff(
            &op4.apply(&s).unwrap().coords(),
            &closed_four_type(a, b, c, d, &s),
        ));
    }

    let (ok2, ok4) = (within(worst2, 1e-12), within(worst4, 1e-12));
    Outcome::new(
        ok2 && ok4,
        format!(
            "two vertices, no edge: worst {worst2:.2e} ({}); three vertices, one edge: worst {worst4:.2e} ({})",
            if ok2 { "ok" } else { "mismatch" },
            if ok4 { "ok" } else { "mismatch" },
        ),
    )
}

// The map on the critical line.

fn bisect_fixed_point(tp: &TMapParams) -> f64 {
    let g = |x: f64| t_step(tp, x) - x;
    let (mut lo, mut hi) = (0.0, 1.0);
    // g(0) = a a0 > 0 and g(1) = -c0 (1 - a) < 0.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn formula_fixed_point(a: f64, a0: f64, c0: f64) -> f64 {
    if a == 0.5 {
        return a0 / (a0 + c0);
    }
    let k = 1.0 + a * a0 - (1.0 - a) * (2.0 - c0);
    let disc = k * k - 4.0 * a * a0 * (2.0 * a - 1.0);
    (k - disc.sqrt()) / (2.0 * (2.0 * a - 1.0))
}

fn critical_line_map() -> Outcome {
    let mut failures = Vec::new();
    let (mut worst_fixed, mut worst_slope, mut periodic) = (0.0f64, 0.0f64, 0);
    let grid: Vec<f64> = (0..10).map(|i| (i as f64 + 0.5) / 10.0).collect();
    for &a in grid.iter().chain([0.5].iter()) {
        for &a0 in &grid {
            for &c0 in &grid {
                let tp = TMapParams::new(a, a0, c0).unwrap();
                let t_star = fixed_points_t(&tp).t_star;
                let root = bisect_fixed_point(&tp);
                let formula = formula_fixed_point(a, a0, c0);
                worst_fixed = worst_fixed.max((t_star - root).abs()).max((t_star - formula).abs());
                worst_slope = worst_slope.max(t_derivative(&tp, root).abs());
                for p in 2..=4 {
                    periodic += scan_periodic_points(&tp, p, 1000).len();
                }
            }
        }
    }
    if !within(worst_fixed, 1e-10) {
        failures.push("fixed point");
    }
    if worst_slope >= 1.0 {
        failures.push("slope");
    }
    if periodic != 0 {
        failures.push("periodic points");
    }

    let mut rng = rng(7);
    let tol = Tolerance::default();
    let mut worst_limit = 0.0f64;
    for _ in 0..1000 {
        let tp = TMapParams::new(
            rng.random_range(0.01..0.99),
            rng.random_range(0.01..0.99),
            rng.random_range(0.01..0.99),
        )
        .unwrap();
        let x0 = rng.random_range(0.0..=1.0);
        let traj = iterate_map(|x| t_step(&tp, *x), x0, &tol);
        let target = bisect_fixed_point(&tp);
        worst_limit = worst_limit.max(traj.limit.map_or(f64::INFINITY, |l| (l - target).abs()));
    }
    if !within(worst_limit, 1e-6) {
        failures.push("limits");
    }

    let logistic = |x: f64| 4.0 * x * (1.0 - x);
    let cycle = scan_periodic_points_of(logistic, 2, 1000, &[0.0, 0.75]);
    let want = [(5.0 - 5f64.sqrt()) / 8.0, (5.0 + 5f64.sqrt()) / 8.0];
    let logistic_ok = cycle.len() == 2 && max_diff(&cycle, &want) <= 1e-9;
    if !logistic_ok {
        failures.push("logistic 2-cycle");
    }

    Outcome::new(
        failures.is_empty(),
        format!(
            "fixed point err {worst_fixed:.2e}, max |T'| {worst_slope:.3}, {periodic} periodic points, \
             limit err {worst_limit:.2e}, logistic cycle {cycle:?}{}",
            if failures.is_empty() { String::new() } else { format!("; failed: {}", failures.join(", ")) }
        ),
    )
}

// Jacobian against finite differences.

fn random_operator(rng: &mut ChaCha8Rng, n: usize, nu: usize) -> BisexualOperator {
    let mut row = |len: usize| -> Vec<f64> {
        let raw: Vec<f64> = (0..len).map(|_| rng.random_range(0.0..1.0)).collect();
        let total: f64 = raw.iter().sum();
        raw.iter().map(|v| v / total).collect()
    };
    let mut pf = Vec::new();
    let mut pm = Vec::new();
    for _ in 0..n * nu {
        pf.extend(row(n));
        pm.extend(row(nu));
    }
    BisexualOperator::new(HeredityTensors::new(n, nu, pf, pm).unwrap())
}

fn jacobian_vs_differences() -> Outcome {
    let mut rng = rng(8);
    let h = 1e-6;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let n = rng.random_range(1..=4);
        let nu = rng.random_range(1..=4);
        let op = random_operator(&mut rng, n, nu);
        let s = PopulationState::random(n, nu, &mut rng).unwrap();
        let jac = jacobian(&op, &s).unwrap();
        let coords = s.coords();
        let eval = |z: &[f64]| {
            let (x, y) = op.apply_raw(&z[..n], &z[n..]);
            [x, y].concat()
        };
        for col in 0..n + nu {
            let mut plus = coords.clone();
            let mut minus = coords.clone();
            plus[col] += h;
            minus[col] -= h;
            let (fp, fm) = (eval(&plus), eval(&minus));
            for row in 0..n + nu {
                let fd = (fp[row] - fm[row]) / (2.0 * h);
                worst = worst.max((fd - jac[(row, col)]).abs());
            }
        }
    }
    Outcome::new(worst <= 1e-6, format!("50 operators, worst entry error {worst:.2e}"))
}

// Root location from signs against explicit roots.

fn root_moduli(b: f64, c: f64) -> [f64; 2] {
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        [((-b + sq) / 2.0).abs(), ((-b - sq) / 2.0).abs()]
    } else {
        let m = c.sqrt();
        [m, m]
    }
}

fn root_location() -> Outcome {
    let mut rng = rng(9);
    let band = 1e-9;
    let (mut compared, mut excluded, mut disagreements) = (0, 0, 0);
    for _ in 0..10_000 {
        let b = rng.random_range(-4.0..=4.0);
        let c = rng.random_range(-4.0..=4.0);
        let qc = QuadraticCharacteristic::new(b, c);
        let moduli = root_moduli(b, c);
        let near_boundary = moduli.iter().any(|m| (m - 1.0).abs() <= band)
            || qc.eval(1.0).abs() <= band
            || qc.eval(-1.0).abs() <= band
            || (c - 1.0).abs() <= band;
        if near_boundary {
            excluded += 1;
            continue;
        }
        compared += 1;
        let inside = moduli.iter().filter(|&&m| m < 1.0).count();
        let expected = match inside {
            2 => RootLocation::BothInside,
            1 => RootLocation::Split,
            _ => RootLocation::BothOutside,
        };
        if classify_quadratic(&qc) != expected {
            disagreements += 1;
        }
    }
    Outcome::new(
        disagreements == 0,
        format!("{compared} compared, {excluded} in boundary band, {disagreements} disagreements"),
    )
}

// Command-line pipeline determinism.

fn run_pipeline(dir: &std::path::Path) -> Result<Vec<u8>, String> {
    let exe = env!("CARGO_BIN_EXE_qsobp");
    let doc = ConstructionDoc::four_type_example(0.3, 0.7, 0.3, 0.7);
    let construction = dir.join("construction.json");
    std::fs::write(&construction, serde_json::to_string(&doc).unwrap()).map_err(|e| e.to_string())?;
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let steps: [Vec<String>; 3] = [
        vec!["construct".into(), "--construction".into(), path("construction.json"), "--output".into(), path("operator.json")],
        vec![
            "iterate".into(), "--operator".into(), path("operator.json"),
            "--state".into(), "0.1,0.2,0.3,0.4,0.2,0.3,0.1,0.4".into(),
            "--output".into(), path("trajectory.csv"), "--summary".into(), path("summary.json"),
        ],
        vec![
            "verify".into(), "--model".into(), "four-type".into(),
            "--b".into(), "0.7".into(), "--d".into(), "0.7".into(),
            "--a0".into(), "0.3".into(), "--c0".into(), "0.5".into(),
            "--grid".into(), "4".into(), "--output".into(), path("verify.json"),
        ],
    ];
    for args in &steps {
        let out = Command::new(exe).args(args).output().map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("{} exited {}: {}", args[0], out.status, String::from_utf8_lossy(&out.stderr)));
        }
    }
    let mut bytes = Vec::new();
    for name in ["operator.json", "trajectory.csv", "summary.json", "verify.json"] {
        bytes.extend(std::fs::read(dir.join(name)).map_err(|e| format!("{name}: {e}"))?);
    }
    Ok(bytes)
}

fn cli_determinism() -> Outcome {
    let runs: Vec<Result<Vec<u8>, String>> = (0..2)
        .map(|_| {
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            run_pipeline(dir.path())
        })
        .collect();
    match (&runs[0], &runs[1]) {
        (Ok(first), Ok(second)) => Outcome::new(
            first == second,
            format!("{} bytes per run, identical: {}", first.len(), first == second),
        ),
        (Err(e), _) | (_, Err(e)) => Outcome::new(false, e.clone()),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("two-type limits", two_type_limits),
        ("invariant line conservation", invariant_line),
        ("four-type limits", four_type_limits),
        ("fixed-point types of the planar block", w1_types),
        ("connectivity and identity", connectivity_identity),
        ("construction vs closed form", construction_matches_closed_form),
        ("critical-line map", critical_line_map),
        ("jacobian vs finite differences", jacobian_vs_differences),
        ("root location from signs", root_location),
        ("cli pipeline determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if outcome.pass { "PASS" } else { "FAIL" },
            name,
            outcome.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
