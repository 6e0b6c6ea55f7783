//! Construct a G2 automorphism taking a random imaginary unit to e1.

use albert::generators::g2_map_to_e1;
use albert::octonion::{Algebra, Octonion};
use albert::random::Sampler;

fn main() -> albert::Result<()> {
    let u = Sampler::new(7).imaginary_unit();
    println!("u         = {:?}", u.c);
    let g = g2_map_to_e1(&u)?;
    println!("alpha(u)  = {:?}", g.map(&u).c);
    println!("defect    = {:.2e}", g.automorphism_deviation());
    println!("frame (rows of L):");
    for row in g.matrix() {
        println!("  {}", row.map(|v| format!("{v:+.4}")).join(" "));
    }

    let e5 = Octonion::basis(5, Algebra::Compact);
    let g = g2_map_to_e1(&e5)?;
    println!("alpha(e5) = {:?}", g.map(&e5).c);
    Ok(())
}
