//! Iterating the step maps: `Φ_j` sends `M_j` to `F_j` one step at a time,
//! and `Ψ_j` walks the same path backwards.
//!
//! cargo run --example phi_trace -- 1 11,8,7,7,5,5,4,3,2,2

use crankmex::bijection::{phi_map, psi_map};
use crankmex::stats::in_m_j;
use crankmex::Partition;

fn main() -> Result<(), crankmex::Error> {
    let mut args = std::env::args().skip(1);
    let j: u32 = args
        .next()
        .map_or(1, |s| s.parse().expect("j must be a non-negative integer"));
    let lam: Partition = args
        .next()
        .unwrap_or_else(|| "11,8,7,7,5,5,4,3,2,2".into())
        .parse()?;

    if !in_m_j(j, &lam) {
        println!("({lam}) is not in M_{j}; try another j");
        return Ok(());
    }
    let (nu, trace) = phi_map(j, &lam)?;
    println!("start {}", trace.input);
    for step in &trace.steps {
        println!(
            "  case {:<3}  d = {:<2}  -> {}",
            step.case, step.d, step.after
        );
    }
    println!("Phi_{j}({lam:?}) = {nu:?} in {} steps", trace.len());

    let (back, back_trace) = psi_map(j, &nu)?;
    println!("Psi_{j}({nu:?}) = {back:?} in {} steps", back_trace.len());
    assert_eq!(back, lam);
    Ok(())
}
