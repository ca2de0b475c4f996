use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::enumerate::partitions;
use crate::error::Result;
use crate::stats::crank;

/// `C(m, n)`: the number of partitions of `n` with crank `m`, except for the
/// weight-1 row, which is `C(-1,1) = 1, C(0,1) = -1, C(1,1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrankTable {
    pub max_weight: u32,
    counts: BTreeMap<(i64, u32), i64>,
}

impl CrankTable {
    /// Zero for any `(m, n)` without a stored entry.
    pub fn get(&self, m: i64, n: u32) -> i64 {
        self.counts.get(&(m, n)).copied().unwrap_or(0)
    }

    pub fn row(&self, n: u32) -> Vec<(i64, i64)> {
        (-(n as i64)..=n as i64)
            .map(|m| (m, self.get(m, n)))
            .collect()
    }

    pub fn row_sum(&self, n: u32) -> i64 {
        self.row(n).iter().map(|&(_, c)| c).sum()
    }

    /// First `(m, n)` with `C(m, n) ≠ C(-m, n)`, if any.
    pub fn asymmetry(&self) -> Option<(i64, u32)> {
        (0..=self.max_weight).find_map(|n| {
            (1..=n as i64)
                .find(|&m| self.get(m, n) != self.get(-m, n))
                .map(|m| (m, n))
        })
    }
}

pub fn crank_table(max_n: u32) -> Result<CrankTable> {
    let mut counts = BTreeMap::new();
    for n in 0..=max_n {
        if n == 1 {
            counts.insert((-1, 1), 1);
            counts.insert((0, 1), -1);
            counts.insert((1, 1), 1);
            continue;
        }
        for lam in partitions(n)? {
            *counts.entry((crank(&lam), n)).or_insert(0) += 1;
        }
    }
    Ok(CrankTable {
        max_weight: max_n,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::series::euler_inverse_series;

    #[test]
    fn entries() {
        let t = crank_table(12).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(4, 4), 1);
        assert_eq!(t.get(-4, 4), 1);
        assert_eq!(t.get(1, 1), 1);
        assert_eq!(t.get(0, 1), -1);
        assert_eq!(t.get(-1, 1), 1);
        // cranks of the partitions of 4 are 4, 2, 0, -2, -4
        assert_eq!(
            t.row(4),
            vec![
                (-4, 1),
                (-3, 0),
                (-2, 1),
                (-1, 0),
                (0, 1),
                (1, 0),
                (2, 1),
                (3, 0),
                (4, 1)
            ]
        );
    }

    #[test]
    fn rows_sum_to_partition_numbers() {
        let t = crank_table(20).unwrap();
        let p = euler_inverse_series(20).unwrap();
        for n in 0..=20 {
            assert_eq!(t.row_sum(n), p.coeff(n as usize), "n={n}");
        }
        assert_eq!(t.asymmetry(), None);
    }
}
