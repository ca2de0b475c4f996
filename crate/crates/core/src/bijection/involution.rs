//! Crank-negating involution `Λ` on partitions of weight at least 2.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{eta, omega};

/// `ρ(λ) = max(ω(λ), λ_2 - 1)`.
pub fn rho(lam: &Partition) -> usize {
    let second = lam.parts().get(1).copied().unwrap_or(0) as usize;
    omega(lam).max(second.saturating_sub(1))
}

pub fn lambda_involution(lam: &Partition) -> Result<Partition> {
    if lam.weight() <= 1 {
        return Err(Error::domain(
            "lambda",
            format!("weight of ({lam}) must exceed 1"),
        ));
    }
    let w = omega(lam);
    let e = eta(lam);
    let parts = lam.parts();
    let out = if w == 0 {
        // drop the largest part, append that many ones
        let mut v = parts[1..].to_vec();
        v.extend(std::iter::repeat_n(1, parts[0] as usize));
        v
    } else if e == 0 {
        // trade the ones for a single part ω
        let mut v = vec![w as u32];
        v.extend_from_slice(&parts[..parts.len() - w]);
        v
    } else {
        let conj = lam.conjugate();
        let c = |i: usize| conj.parts().get(i - 1).copied().unwrap_or(0);
        let r = rho(lam);
        let mut v = Vec::with_capacity(r + e);
        v.push(c(2) + parts[0] - r as u32);
        v.extend((2..=w).map(|i| 1 + c(i)));
        v.extend((w + 1..=r).map(|i| c(i + 1)));
        v.extend(std::iter::repeat_n(1, e));
        v
    };
    Ok(Partition::from_multiset(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::stats::crank;

    #[test]
    fn worked_rows() {
        let rows = [
            (
                partition![12, 9, 8, 8, 4, 3, 2, 2, 1, 1, 1, 1, 1, 1],
                6,
                4,
                8,
                partition![12, 9, 7, 6, 5, 5, 4, 2, 1, 1, 1, 1],
            ),
            (
                partition![11, 8, 8, 5, 4, 4, 4, 2, 2, 1, 1, 1, 1, 1, 1],
                6,
                3,
                7,
                partition![13, 10, 8, 8, 5, 4, 3, 1, 1, 1],
            ),
            (
                partition![10, 7, 7, 7, 5, 4, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1],
                7,
                1,
                7,
                partition![12, 10, 8, 7, 6, 5, 5, 1],
            ),
        ];
        for (lam, w, e, r, image) in rows {
            assert_eq!((omega(&lam), eta(&lam), rho(&lam)), (w, e, r));
            let got = lambda_involution(&lam).unwrap();
            assert_eq!(got, image);
            assert_eq!(crank(&got), -crank(&lam));
            assert_eq!(lambda_involution(&got).unwrap(), lam);
        }
    }

    #[test]
    fn simple_cases() {
        assert_eq!(
            lambda_involution(&partition![2, 2]).unwrap(),
            partition![2, 1, 1]
        );
        assert_eq!(
            lambda_involution(&partition![2, 1, 1]).unwrap(),
            partition![2, 2]
        );
        assert_eq!(
            lambda_involution(&partition![1, 1, 1, 1]).unwrap(),
            partition![4]
        );
        assert_eq!(
            lambda_involution(&partition![8, 1]).unwrap(),
            partition![8, 1]
        );
        assert_eq!(
            lambda_involution(&partition![7, 1, 1]).unwrap(),
            partition![6, 2, 1]
        );
    }

    #[test]
    fn rejects_small() {
        assert!(lambda_involution(&partition![]).is_err());
        assert!(lambda_involution(&partition![1]).is_err());
    }
}
