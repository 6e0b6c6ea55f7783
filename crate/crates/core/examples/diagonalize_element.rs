//! Diagonalize a random element and print each intermediate stage.

use albert::diagonalize::{diagonalize_with_stages, Tolerances};
use albert::jordan::{det, sigma};
use albert::octonion::Algebra;
use albert::random::Sampler;

fn main() -> albert::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let x = Sampler::new(seed).jordan(Algebra::Compact);
    let (transcript, stages) = diagonalize_with_stages(&x, &Tolerances::default())?;

    let names = ["x1 real", "x1 cleared", "x2 real", "x3 complex", "diagonal"];
    for (name, stage) in names.iter().zip(&stages) {
        let [x1, x2, x3] = stage.off().map(|o| o.euclidean_norm());
        println!("{name:>10}: |x1| {x1:.3e}  |x2| {x2:.3e}  |x3| {x3:.3e}");
    }
    for g in transcript.steps.iter() {
        println!("step {:>8} identity={}", g.kind(), g.is_identity());
    }
    println!("diagonal      {:?}", transcript.diagonal);
    println!("residual      {:.3e}", transcript.off_diag_residual);
    println!("rel. drift    {:.3e}", transcript.relative_drift().max());
    println!("tr, sigma, det of input: {}, {}, {}", x.trace(), sigma(&x), det(&x));
    Ok(())
}
