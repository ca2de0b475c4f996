//! Exhaustive enumeration of the partitions of a fixed weight.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest weight [`partitions`] will enumerate. `p(60) = 966467`.
pub const ENUMERATION_LIMIT: u32 = 60;

/// All partitions of `n` in lexicographically decreasing order, starting at `(n)`.
pub fn partitions(n: u32) -> Result<Partitions> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::WeightLimit {
            weight: n as u64,
            max: ENUMERATION_LIMIT as u64,
        });
    }
    Ok(Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    })
}

pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let v = parts[i] - 1;
    // the trailing ones plus the unit taken from parts[i]
    let mut rest = (parts.len() - i) as u32;
    let mut out = parts[..i].to_vec();
    out.push(v);
    while rest >= v {
        out.push(v);
        rest -= v;
    }
    if rest > 0 {
        out.push(rest);
    }
    Some(out)
}

/// Number of partitions of `n` satisfying `pred`.
pub fn count_by_predicate(n: u32, pred: impl Fn(&Partition) -> bool) -> Result<u64> {
    Ok(partitions(n)?.filter(|p| pred(p)).count() as u64)
}
