//! Crank, j-mex and the generalized Durfee counts `d_j` of one partition.
//!
//! cargo run --example statistics -- 5,3,2,2

use crankmex::decompose::{durfee_decompose, mex_decompose};
use crankmex::stats::{crank, d_j, eta, has_part, in_f_j, in_m_j, mex_j, omega};
use crankmex::Partition;

fn main() -> Result<(), crankmex::Error> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "11,8,7,7,5,5,4,3,2,2".into());
    let lam: Partition = text.parse()?;

    println!("lambda    = {lam:?}, weight {}", lam.weight());
    println!(
        "omega     = {}, eta = {}, crank = {}",
        omega(&lam),
        eta(&lam),
        crank(&lam)
    );
    println!("conjugate = {:?}", lam.conjugate());
    let durfee = durfee_decompose(&lam);
    println!(
        "durfee    = t {} mu {:?} nu {:?}",
        durfee.t, durfee.mu, durfee.nu
    );

    println!("\n j  mex_j  d_j  in M_j  in F_j  has j  staircase");
    for j in 0..=6 {
        let dec = mex_decompose(j, &lam);
        println!(
            "{j:>2}  {:>5}  {:>3}  {:>6}  {:>6}  {:>5}  Delta_{{{j},{}}} + ({})",
            mex_j(j, &lam),
            d_j(j, &lam),
            in_m_j(j, &lam),
            in_f_j(j, &lam),
            has_part(j, &lam),
            dec.k,
            dec.rest
        );
    }
    Ok(())
}
