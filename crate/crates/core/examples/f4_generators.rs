//! Apply one generator from each family and check that it preserves the
//! Jordan product, the cross product and the invariants.

use albert::generators::{check_f4_membership, g2_map_to_e1, DeltaA, Generator, RotO3, SpThree};
use albert::jordan::Invariants;
use albert::octonion::Algebra;
use albert::random::Sampler;

fn main() -> albert::Result<()> {
    let mut rng = Sampler::new(2024);
    let c = Algebra::Compact;
    let family: Vec<Generator> = vec![
        DeltaA::new(rng.unit_octonion(c))?.into(),
        RotO3::new(rng.orthogonal3())?.into(),
        SpThree::new(rng.symplectic3())?.into(),
        g2_map_to_e1(&rng.imaginary_unit())?.into(),
    ];
    let x = rng.jordan(c);
    let before = Invariants::of(&x);
    println!("input invariants {:?}", before.as_array());
    for g in &family {
        let y = g.apply(&x)?;
        let drift = Invariants::of(&y)
            .as_array()
            .iter()
            .zip(before.as_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let report = check_f4_membership(g, 100, 9)?;
        println!(
            "{:>8}: invariant drift {drift:.2e}, ∘ defect {:.2e}, × defect {:.2e}",
            g.kind(),
            report.jordan_deviation,
            report.cross_deviation
        );
    }
    Ok(())
}
