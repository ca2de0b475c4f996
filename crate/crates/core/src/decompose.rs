//! Durfee and mex decompositions, and the staircase partitions `Δ_{j,k}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{d_j, mex_j};

/// Durfee decomposition `(t, μ, ν)`: `t` is the Durfee square size, `μ_i = λ_i - i`
/// are the arm lengths and `ν_i = λ*_i - i` the leg lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DurfeeTriple {
    pub t: usize,
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
}

impl DurfeeTriple {
    pub fn weight(&self) -> u64 {
        self.t as u64
            + self
                .mu
                .iter()
                .chain(&self.nu)
                .map(|&x| x as u64)
                .sum::<u64>()
    }

    fn check(&self) -> Result<()> {
        if self.mu.len() != self.t || self.nu.len() != self.t {
            return Err(Error::InvalidDurfee(format!(
                "t = {} but |mu| = {} and |nu| = {}",
                self.t,
                self.mu.len(),
                self.nu.len()
            )));
        }
        for (name, seq) in [("mu", &self.mu), ("nu", &self.nu)] {
            if let Some(i) = seq.windows(2).position(|w| w[0] <= w[1]) {
                return Err(Error::InvalidDurfee(format!(
                    "{name} is not strictly decreasing at index {i}"
                )));
            }
        }
        Ok(())
    }
}

pub fn durfee_decompose(lam: &Partition) -> DurfeeTriple {
    let t = d_j(0, lam);
    let conj = lam.conjugate();
    let mu = (1..=t).map(|i| lam.parts()[i - 1] - i as u32).collect();
    let nu = (1..=t).map(|i| conj.parts()[i - 1] - i as u32).collect();
    DurfeeTriple { t, mu, nu }
}

pub fn durfee_compose(triple: &DurfeeTriple) -> Result<Partition> {
    triple.check()?;
    let t = triple.t;
    if t == 0 {
        return Ok(Partition::empty());
    }
    let len = triple.nu[0] as usize + 1;
    let mut parts: Vec<u32> = (1..=t).map(|i| triple.mu[i - 1] + i as u32).collect();
    for i in t + 1..=len {
        let count = triple
            .nu
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v as usize + u + 1 >= i)
            .count();
        parts.push(count as u32);
    }
    Ok(Partition::from_sorted(parts))
}

/// The staircase `Δ_{j,k} = (j+k, …, j+1)`; empty when `k = 0`.
pub fn delta(j: u32, k: usize) -> Partition {
    Partition::from_sorted((1..=k as u32).rev().map(|i| j + i).collect())
}

/// `|Δ_{j,k}| = k(k+1)/2 + jk`.
pub fn delta_weight(j: u32, k: usize) -> u64 {
    let k = k as u64;
    k * (k + 1) / 2 + j as u64 * k
}

/// A partition with `mex_j = j + k + 1`, split as `Δ_{j,k}` plus a remainder
/// that has no part `j + k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MexDecomposition {
    pub j: u32,
    pub k: usize,
    pub rest: Partition,
}

pub fn mex_decompose(j: u32, lam: &Partition) -> MexDecomposition {
    let k = (mex_j(j, lam) - j - 1) as usize;
    MexDecomposition {
        j,
        k,
        rest: remove_parts(lam, &delta(j, k)),
    }
}

/// Inverse of [`mex_decompose`]. `rest` must not contain `j + k + 1`.
pub fn mex_compose(decomp: &MexDecomposition) -> Result<Partition> {
    let top = decomp.j + decomp.k as u32 + 1;
    if decomp.rest.contains_part(top) {
        return Err(Error::domain(
            "mex_compose",
            format!("remainder {:?} contains the part {top}", decomp.rest),
        ));
    }
    let mut parts = decomp.rest.parts().to_vec();
    parts.extend(delta(decomp.j, decomp.k).parts());
    Ok(Partition::from_multiset(parts))
}

/// Removes one copy of each part of `sub` from `lam`. `sub` must be a sub-multiset.
pub(crate) fn remove_parts(lam: &Partition, sub: &Partition) -> Partition {
    let mut parts = lam.parts().to_vec();
    for &p in sub.parts() {
        let idx = parts
            .iter()
            .position(|&q| q == p)
            .expect("part to remove is present");
        parts.remove(idx);
    }
    Partition::from_sorted(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn durfee_examples() {
        assert_eq!(
            durfee_decompose(&partition![]),
            DurfeeTriple {
                t: 0,
                mu: vec![],
                nu: vec![]
            }
        );
        let t = durfee_decompose(&partition![5, 3, 2, 2]);
        assert_eq!(
            t,
            DurfeeTriple {
                t: 2,
                mu: vec![4, 1],
                nu: vec![3, 2]
            }
        );
        assert_eq!(t.weight(), 12);
        assert_eq!(
            durfee_decompose(&partition![2, 2]),
            DurfeeTriple {
                t: 2,
                mu: vec![1, 0],
                nu: vec![1, 0]
            }
        );
    }

    #[test]
    fn durfee_compose_examples() {
        let c = |t, mu: &[u32], nu: &[u32]| {
            durfee_compose(&DurfeeTriple {
                t,
                mu: mu.to_vec(),
                nu: nu.to_vec(),
            })
        };
        assert_eq!(c(0, &[], &[]).unwrap(), partition![]);
        assert_eq!(c(2, &[4, 1], &[3, 2]).unwrap(), partition![5, 3, 2, 2]);
        assert_eq!(c(2, &[1, 0], &[1, 0]).unwrap(), partition![2, 2]);
        assert!(matches!(
            c(2, &[1, 1], &[1, 0]),
            Err(Error::InvalidDurfee(_))
        ));
        assert!(matches!(c(2, &[1], &[1, 0]), Err(Error::InvalidDurfee(_))));
    }

    #[test]
    fn staircases() {
        assert_eq!(delta(7, 0), partition![]);
        assert_eq!(delta(1, 4), partition![5, 4, 3, 2]);
        assert_eq!(delta(0, 3), partition![3, 2, 1]);
        assert_eq!(delta_weight(1, 4), 14);
        for j in 0..5 {
            for k in 0..6 {
                assert_eq!(delta(j, k).weight(), delta_weight(j, k));
            }
        }
    }

    #[test]
    fn mex_decompose_examples() {
        let lam = partition![11, 8, 7, 7, 5, 5, 4, 3, 2, 2];
        let d = mex_decompose(1, &lam);
        assert_eq!((d.k, &d.rest), (4, &partition![11, 8, 7, 7, 5, 2]));
        assert_eq!(mex_compose(&d).unwrap(), lam);
        let d = mex_decompose(5, &lam);
        assert_eq!((d.k, &d.rest), (0, &lam));
        let d = mex_decompose(3, &lam);
        assert_eq!((d.k, &d.rest), (2, &partition![11, 8, 7, 7, 5, 3, 2, 2]));
        let d = mex_decompose(6, &lam);
        assert_eq!((d.k, &d.rest), (2, &partition![11, 7, 5, 5, 4, 3, 2, 2]));
        let d = mex_decompose(4, &partition![]);
        assert_eq!((d.k, d.rest), (0, partition![]));
    }

    #[test]
    fn mex_compose_rejects_top_part() {
        let bad = MexDecomposition {
            j: 1,
            k: 1,
            rest: partition![3],
        };
        assert!(matches!(mex_compose(&bad), Err(Error::Domain { .. })));
    }
}
