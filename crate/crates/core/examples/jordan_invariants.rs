//! Build an element of the exceptional Jordan algebra and print its invariants.

use albert::jordan::{det, freudenthal_cross, inner_product, jordan_product, sigma, Invariants, JordanElement};
use albert::octonion::{Algebra, Octonion};
use albert::random::Sampler;

fn main() -> albert::Result<()> {
    let c = Algebra::Compact;
    let x = JordanElement::new(
        [1.0, 2.0, -0.5],
        [Octonion::basis(3, c), Octonion::one(c).scale(0.5), Octonion::basis(6, c)],
    )?;
    println!("tr X      = {}", x.trace());
    println!("(X, X)    = {}", inner_product(&x, &x)?);
    println!("sigma(X)  = {}", sigma(&x));
    println!("det X     = {}", det(&x));

    let xx = jordan_product(&x, &x)?;
    let cross = freudenthal_cross(&x, &x)?;
    println!("X∘X diag  = {:?}", xx.diag());
    println!("X×X diag  = {:?}", cross.diag());

    let y = Sampler::new(1).jordan(c);
    println!("random element: {:?}", Invariants::of(&y));
    println!("{}", serde_json::to_string_pretty(&y).unwrap());
    Ok(())
}
