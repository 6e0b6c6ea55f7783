//! The split Albert algebra has elements that no automorphism can diagonalize.

use albert::jordan::{det, freudenthal_cross, inner_product, sigma};
use albert::split::{counterexample_x0, diagonalizability_obstruction};

fn main() -> albert::Result<()> {
    let x0 = counterexample_x0();
    println!("X0 = {}", serde_json::to_string(&x0).unwrap());
    println!("(X0, X0) = {}", inner_product(&x0, &x0)?);
    println!("tr X0 = {}, sigma = {}, det = {}", x0.trace(), sigma(&x0), det(&x0));
    println!("X0 × X0 diag = {:?}", freudenthal_cross(&x0, &x0)?.diag());
    let verdict = diagonalizability_obstruction(&x0)?;
    println!("verdict: {:?}", verdict.verdict);
    Ok(())
}
