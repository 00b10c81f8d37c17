//! Builds the operator of the three-vertex, one-edge graph from cell weights
//! and checks it against the four-type closed form.

use qsobp::construction::{compatible_sets, is_identity};
use qsobp::four_type::{lift_to_v4, FourTypeParams};
use qsobp::io::{operator_to_json, ConstructionDoc};
use qsobp::{state_distance, PopulationState, Tolerance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (a, b, c, d) = (0.3, 0.7, 0.2, 0.9);
    let built = ConstructionDoc::four_type_example(a, b, c, d).build()?;
    let space = &built.space;

    println!("cells:");
    for (i, cell) in space.cells().iter().enumerate() {
        let side = if space.female_type(i).is_some() { "female" } else { "male" };
        println!("  {:>2} {cell} {side}", i + 1);
    }
    println!("components: {:?}", space.components());

    let (f, m) = compatible_sets(space, space.females()[0], space.males()[1])?;
    println!(
        "offspring of cells {} and {}: females {:?}, males {:?}",
        space.females()[0] + 1,
        space.males()[1] + 1,
        f.iter().map(|i| i + 1).collect::<Vec<_>>(),
        m.iter().map(|i| i + 1).collect::<Vec<_>>(),
    );

    let closed = lift_to_v4(&FourTypeParams::new(a, b, c, d, 0.5, 0.5)?);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let s = PopulationState::random(4, 4, &mut rng)?;
        worst = worst.max(state_distance(&built.operator.apply(&s)?, &closed.apply(&s)?)?);
    }
    println!("max deviation from closed form over 100 states: {worst:.1e}");
    println!("identity: {}", is_identity(&built.operator, 10, &Tolerance::default()));
    let t = built.operator.tensors();
    println!("p^f for mother 1, father 2: {:?}", t.pf_row(0, 1));
    println!("operator document: {} bytes", operator_to_json(&built.operator).len());
    Ok(())
}
