//! `Λ ∘ Γ_j ∘ Φ_j : (M_j ∩ P̄_j) → {crank ≥ j}` on weights at least 2, and its inverse.

use super::gamma::{gamma, gamma_inv};
use super::involution::lambda_involution;
use super::iterate::{phi_map, psi_map};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{crank, has_part};

/// Intermediate images of the composed map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrankMexImages {
    pub phi: Partition,
    pub gamma: Partition,
    pub lambda: Partition,
}

pub fn crank_mex_images(j: u32, lam: &Partition) -> Result<CrankMexImages> {
    if lam.weight() <= 1 {
        return Err(Error::domain(
            "crank_mex",
            format!("weight of ({lam}) must exceed 1"),
        ));
    }
    if !has_part(j, lam) {
        return Err(Error::domain(
            "crank_mex",
            format!("({lam}) has no part {j}"),
        ));
    }
    let (phi, _) = phi_map(j, lam)?;
    let gamma = gamma(j, &phi)?;
    let lambda = lambda_involution(&gamma)?;
    Ok(CrankMexImages { phi, gamma, lambda })
}

pub fn crank_mex_map(j: u32, lam: &Partition) -> Result<Partition> {
    crank_mex_images(j, lam).map(|im| im.lambda)
}

/// `Ψ_j ∘ Γ_j⁻¹ ∘ Λ`.
pub fn crank_mex_inv(j: u32, mu: &Partition) -> Result<Partition> {
    if mu.weight() <= 1 {
        return Err(Error::domain(
            "crank_mex_inv",
            format!("weight of ({mu}) must exceed 1"),
        ));
    }
    let c = crank(mu);
    if c < j as i64 {
        return Err(Error::domain(
            "crank_mex_inv",
            format!("crank of ({mu}) is {c}, need at least {j}"),
        ));
    }
    let flipped = lambda_involution(mu)?;
    let frob = gamma_inv(j, &flipped)?;
    psi_map(j, &frob).map(|(lam, _)| lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn worked_images() {
        let lam = partition![11, 8, 7, 7, 5, 5, 4, 3, 2, 2];
        let rows = [
            (0, partition![12, 9, 7, 6, 5, 5, 4, 2, 1, 1, 1, 1]),
            (3, partition![13, 10, 8, 8, 5, 4, 3, 1, 1, 1]),
            (5, partition![12, 10, 8, 7, 6, 5, 5, 1]),
        ];
        for (j, image) in rows {
            let got = crank_mex_map(j, &lam).unwrap();
            assert_eq!(got, image, "j={j}");
            assert!(crank(&got) >= j as i64);
            assert_eq!(crank_mex_inv(j, &got).unwrap(), lam);
        }
        assert_eq!(crank(&partition![12, 9, 7, 6, 5, 5, 4, 2, 1, 1, 1, 1]), 2);
    }

    #[test]
    fn last_row_of_weight_nine() {
        let lam = partition![2, 1, 1, 1, 1, 1, 1, 1];
        assert_eq!(crank_mex_map(0, &lam).unwrap(), partition![9]);
        assert_eq!(crank_mex_inv(0, &partition![9]).unwrap(), lam);
    }

    #[test]
    fn domain_errors() {
        let lam = partition![11, 8, 7, 7, 5, 5, 4, 3, 2, 2];
        assert!(crank_mex_map(1, &lam).is_err()); // no part 1
        assert!(crank_mex_map(2, &lam).is_err()); // not in M_2
        assert!(crank_mex_map(0, &partition![1]).is_err());
        assert!(crank_mex_inv(3, &partition![2, 1]).is_err());
    }
}
