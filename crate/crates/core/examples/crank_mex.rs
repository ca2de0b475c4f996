//! `Λ ∘ Γ_j ∘ Φ_j`: partitions in `M_j` with a part `j` matched with
//! partitions of crank at least `j`. Prints the full table for one weight.
//!
//! cargo run --example crank_mex -- 9 0

use crankmex::bijection::{crank_mex_images, crank_mex_inv};
use crankmex::cli::table_rows;
use crankmex::stats::crank;
use crankmex::verify::partitions;

fn main() -> Result<(), crankmex::Error> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(9, |s| s.parse().expect("weight"));
    let j: u32 = args.next().map_or(0, |s| s.parse().expect("j"));

    let rows = table_rows(n, j)?;
    for lam in &rows {
        let im = crank_mex_images(j, lam)?;
        println!(
            "{lam:?} -> {:?} -> {:?} -> {:?} (crank {})",
            im.phi,
            im.gamma,
            im.lambda,
            crank(&im.lambda)
        );
        assert_eq!(crank_mex_inv(j, &im.lambda)?, *lam);
    }
    let target = partitions(n)?.filter(|p| crank(p) >= j as i64).count();
    println!(
        "{} partitions on each side (crank >= {j}: {target})",
        rows.len()
    );
    Ok(())
}
