//! Print the basis multiplication tables of the compact and split octonions.

use albert::octonion::{basis_table, Algebra, Octonion};

fn main() {
    for algebra in [Algebra::Compact, Algebra::Split] {
        println!("{} octonions (e4^2 = {})", algebra.as_str(), algebra.mu());
        let table = basis_table(algebra);
        print!("     ");
        for j in 0..8 {
            print!("{:>5}", format!("e{j}"));
        }
        println!();
        for (i, row) in table.iter().enumerate() {
            print!("{:>5}", format!("e{i}"));
            for p in row {
                let sign = if p.sign < 0 { "-" } else { "" };
                print!("{:>5}", format!("{sign}e{}", p.index));
            }
            println!();
        }
        println!();
    }

    let c = Algebra::Compact;
    let (e1, e2, e4) = (Octonion::basis(1, c), Octonion::basis(2, c), Octonion::basis(4, c));
    println!("(e1 e4) e2 = {:?}", ((e1 * e4) * e2).c);
    println!("e1 (e4 e2) = {:?}", (e1 * (e4 * e2)).c);
}
