use proptest::prelude::*;

use qsobp::construction::{BisexualOperator, HeredityTensors};
use qsobp::dynamics::{classify_quadratic, QuadraticCharacteristic, RootLocation};
use qsobp::four_type::{lift_to_v4, t_step, v4_step, FourTypeParams, TMapParams};
use qsobp::two_type::{invariant_line_c, w_step, ReducedState2, TwoTypeParams};
use qsobp::{state_distance, PopulationState};

fn rate() -> impl Strategy<Value = f64> {
    0.01f64..0.99
}

fn distribution(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.001f64..1.0, dim).prop_map(|raw| {
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|v| v / total).collect()
    })
}

fn operator_and_state() -> impl Strategy<Value = (BisexualOperator, PopulationState)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, nu)| {
        (
            prop::collection::vec(distribution(n), n * nu),
            prop::collection::vec(distribution(nu), n * nu),
            distribution(n),
            distribution(nu),
        )
            .prop_map(move |(pf, pm, x, y)| {
                let t = HeredityTensors::new(n, nu, pf.concat(), pm.concat()).unwrap();
                (BisexualOperator::new(t), PopulationState::from_parts(&x, &y).unwrap())
            })
    })
}

proptest! {
    #[test]
    fn operators_map_the_simplex_to_itself((op, s) in operator_and_state()) {
        let image = op.apply(&s).unwrap();
        prop_assert!(image.normalization_drift() <= 1e-12);
        prop_assert!(image.coords().iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn w_keeps_the_square_and_its_invariant(a in rate(), b in rate(), x in 0.0f64..=1.0, y in 0.0f64..=1.0) {
        let p = TwoTypeParams::new(a, b).unwrap();
        let s = ReducedState2::new(x, y).unwrap();
        let next = w_step(&p, &s);
        prop_assert!(next.x >= s.x && next.x <= 1.0);
        prop_assert!(next.y <= s.y && next.y >= -1e-16);
        let drift = (invariant_line_c(&p, &next) - invariant_line_c(&p, &s)).abs();
        prop_assert!(drift <= 1e-12 * invariant_line_c(&p, &s).max(1.0));
    }

    #[test]
    fn four_type_closed_form_matches_tensors(
        a in rate(), b in rate(), c in rate(), d in rate(),
        x in distribution(4), y in distribution(4),
    ) {
        let p = FourTypeParams::new(a, b, c, d, 0.5, 0.5).unwrap();
        let s = PopulationState::from_parts(&x, &y).unwrap();
        let closed = v4_step(&p, &s).unwrap();
        let tensor = lift_to_v4(&p).apply(&s).unwrap();
        prop_assert!(state_distance(&closed, &tensor).unwrap() <= 1e-14);
        prop_assert!((closed.x()[0] + closed.x()[1] - x[0] - x[1]).abs() <= 1e-15);
        prop_assert!((closed.y()[2] + closed.y()[3] - y[2] - y[3]).abs() <= 1e-15);
    }

    #[test]
    fn critical_line_map_stays_in_the_unit_interval(a in rate(), a0 in rate(), c0 in rate(), x in 0.0f64..=1.0) {
        let tp = TMapParams::new(a, a0, c0).unwrap();
        let t = t_step(&tp, x);
        prop_assert!((-1e-15..=1.0 + 1e-15).contains(&t));
    }

    #[test]
    fn root_location_matches_moduli(b in -4.0f64..4.0, c in -4.0f64..4.0) {
        let qc = QuadraticCharacteristic::new(b, c);
        let (big, small) = qc.moduli();
        prop_assume!((big - 1.0).abs() > 1e-6 && (small - 1.0).abs() > 1e-6);
        let expected = if big < 1.0 {
            RootLocation::BothInside
        } else if small > 1.0 {
            RootLocation::BothOutside
        } else {
            RootLocation::Split
        };
        prop_assert_eq!(classify_quadratic(&qc), expected);
    }
}
