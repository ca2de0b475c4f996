//! `Γ_j` moves a partition with no arm of length `j` and a part `j` to a
//! partition with crank at most `-j`, keeping `d_j` fixed.
//!
//! cargo run --example crank_frobenius -- 12

use crankmex::bijection::{gamma, gamma_inv};
use crankmex::stats::{crank, d_j, has_part, in_f_j};
use crankmex::verify::partitions;

fn main() -> Result<(), crankmex::Error> {
    let n: u32 = std::env::args()
        .nth(1)
        .map_or(12, |s| s.parse().expect("weight"));
    for j in 0..=3 {
        let mut shown = 0;
        let mut total = 0;
        for lam in partitions(n)? {
            if lam.weight() < 2 || !in_f_j(j, &lam) || !has_part(j, &lam) {
                continue;
            }
            let mu = gamma(j, &lam)?;
            assert_eq!(gamma_inv(j, &mu)?, lam);
            total += 1;
            if shown < 3 {
                println!(
                    "j={j}: {lam:?} (d_j = {}) -> {mu:?} crank {}",
                    d_j(j, &lam),
                    crank(&mu)
                );
                shown += 1;
            }
        }
        let target = partitions(n)?.filter(|p| crank(p) <= -(j as i64)).count();
        println!("j={j}: {total} inputs, {target} partitions of {n} with crank <= -{j}\n");
    }
    Ok(())
}
