//! The [`Partition`] value type and its text form.
//!
//! A partition is stored dense: repeated parts appear explicitly and the
//! parts are kept in non-increasing order, so equality is plain sequence
//! equality. The boundary values `λ_0 = ∞` and `λ_{ℓ+1} = 0` used by the
//! index-based statistics are never stored; [`Partition::part`] exposes them
//! virtually.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest weight accepted by [`Partition::validate`].
pub const MAX_WEIGHT: u64 = 1_000_000;

/// A part value extended with the `+∞` sentinel at index 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtPart {
    Finite(u32),
    Infinite,
}

impl PartialOrd for ExtPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtPart {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtPart::Infinite, ExtPart::Infinite) => Ordering::Equal,
            (ExtPart::Infinite, _) => Ordering::Greater,
            (_, ExtPart::Infinite) => Ordering::Less,
            (ExtPart::Finite(a), ExtPart::Finite(b)) => a.cmp(b),
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Checks that `raw` is non-increasing with positive entries.
    pub fn validate(raw: &[i64]) -> Result<Self> {
        let mut weight: u64 = 0;
        for (index, &value) in raw.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositivePart { index, value });
            }
            if index > 0 && raw[index - 1] < value {
                return Err(Error::NotNonIncreasing {
                    index: index - 1,
                    prev: raw[index - 1],
                    next: value,
                });
            }
            weight = weight.saturating_add(value as u64);
            if weight > MAX_WEIGHT {
                return Err(Error::WeightLimit {
                    weight,
                    max: MAX_WEIGHT,
                });
            }
        }
        Ok(Partition {
            parts: raw.iter().map(|&v| v as u32).collect(),
        })
    }

    /// Builds a partition from parts in any order. Zero entries are dropped.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Wraps parts that are already canonical. Panics in debug builds otherwise.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// One-based part access: index 0 is `+∞`, indices past the end are 0.
    pub fn part(&self, i: usize) -> ExtPart {
        if i == 0 {
            ExtPart::Infinite
        } else {
            ExtPart::Finite(self.parts.get(i - 1).copied().unwrap_or(0))
        }
    }

    /// `λ_i - i` for a one-based index `i ≥ 1`, using `λ_i = 0` past the end.
    pub(crate) fn hook_offset(&self, i: usize) -> i64 {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0) as i64 - i as i64
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn contains_part(&self, value: u32) -> bool {
        // parts are sorted descending
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    /// `λ*_i = #{u : λ_u ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition::from_sorted(cols)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the comma-separated text form; the empty string is `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let raw = s
            .split(',')
            .enumerate()
            .map(|(index, token)| {
                token.trim().parse::<i64>().map_err(|_| Error::Parse {
                    index,
                    token: token.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::validate(&raw)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        Partition::validate(&raw)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Shorthand for literal partitions in tests and examples. Panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::validate(&[$($p as i64),+]).expect("invalid partition literal")
    };
}
