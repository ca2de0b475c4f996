//! The involution `Λ` negates the crank, which makes the crank distribution
//! symmetric for every weight above 1.
//!
//! cargo run --example involution -- 8

use crankmex::bijection::lambda_involution;
use crankmex::stats::crank;
use crankmex::verify::{crank_table, partitions};

fn main() -> Result<(), crankmex::Error> {
    let n: u32 = std::env::args()
        .nth(1)
        .map_or(8, |s| s.parse().expect("weight"));
    for lam in partitions(n)? {
        let mu = lambda_involution(&lam)?;
        println!(
            "{:<20} crank {:>3}  <->  {:<20} crank {:>3}",
            format!("{lam:?}"),
            crank(&lam),
            format!("{mu:?}"),
            crank(&mu)
        );
    }

    let table = crank_table(n)?;
    println!("\ncrank distribution of weight {n}:");
    for (m, c) in table.row(n) {
        println!("  C({m:>3}, {n}) = {c}");
    }
    println!("asymmetry: {:?}", table.asymmetry());
    Ok(())
}
