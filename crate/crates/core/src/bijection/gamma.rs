//! `Γ_j : (F_j ∩ P̄_j) \ {∅, (1)} → {crank ≤ -j} \ {∅, (1)}` and its inverse.
//!
//! Both directions keep `d_j` fixed. For `j = 0` the part `0` is fictitious,
//! so no part is deleted or inserted.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{crank, d_j, has_part, in_f_j, omega};

fn check_weight(map: &'static str, lam: &Partition) -> Result<()> {
    if lam.weight() <= 1 {
        return Err(Error::domain(
            map,
            format!("weight of ({lam}) must exceed 1"),
        ));
    }
    Ok(())
}

/// Subtract 1 from the `d_j` largest parts, delete one part `j` and append
/// `d_j + j` ones.
pub fn gamma(j: u32, lam: &Partition) -> Result<Partition> {
    check_weight("gamma", lam)?;
    if !in_f_j(j, lam) {
        return Err(Error::domain("gamma", format!("({lam}) is not in F_{j}")));
    }
    if !has_part(j, lam) {
        return Err(Error::domain("gamma", format!("({lam}) has no part {j}")));
    }
    let d = d_j(j, lam);
    let mut parts = lam.parts().to_vec();
    for p in &mut parts[..d] {
        *p -= 1;
    }
    if j >= 1 {
        let idx = parts.iter().rposition(|&p| p == j).expect("part j present");
        parts.remove(idx);
    }
    parts.extend(std::iter::repeat_n(1, d + j as usize));
    Ok(Partition::from_multiset(parts))
}

/// Delete `d_j + j` ones, add 1 to the `d_j` largest parts and insert a part `j`.
pub fn gamma_inv(j: u32, mu: &Partition) -> Result<Partition> {
    check_weight("gamma_inv", mu)?;
    let c = crank(mu);
    if c > -(j as i64) {
        return Err(Error::domain(
            "gamma_inv",
            format!("crank of ({mu}) is {c}, need at most -{j}"),
        ));
    }
    let d = d_j(j, mu);
    let ones = d + j as usize;
    if omega(mu) < ones || mu.len() < 2 * d + j as usize {
        return Err(Error::internal(
            "gamma_inv",
            format!("({mu}) has crank {c} but too few ones for d_{j} = {d}"),
        ));
    }
    let mut parts = mu.parts().to_vec();
    for p in &mut parts[..d] {
        *p += 1;
    }
    parts.truncate(parts.len() - ones);
    if j >= 1 {
        parts.push(j);
    }
    Ok(Partition::from_multiset(parts))
}
