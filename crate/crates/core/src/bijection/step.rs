//! Single step maps acting on pairs `(Δ_{j,s}, λ)`.
//!
//! The staircase is never materialized: a [`PairState`] stores `j`, the
//! half-length index `k` and a [`Parity`], so the staircase is `Δ_{j,2k}`
//! (even) or `Δ_{j,2k+1}` (odd). Write `s` for its length and `level = j + s`.
//!
//! `phi_step` acts on every pair except the terminal ones (`k = 0` and
//! `λ ∈ F_level`):
//!
//! 1. `λ ∉ F_level`, `d = d_level(λ)`: drop the part `λ_d = d + level`, add 1
//!    to the `d - 1` largest parts and insert `level + 1`.
//! 2. `k ≥ 1`, `λ ∈ F_level`, `d = d_level(λ)`: shorten the staircase by two,
//!    subtract 1 from the `d` largest parts and insert `d + level` and `level - 1`.
//!
//! `psi_step` acts on pairs whose `λ` has a part `level + 1`, with `d = d_{level+1}(λ)`:
//!
//! 1. `λ ∉ F_{level+1}`: lengthen the staircase by two, add 1 to the `d - 1`
//!    largest parts and drop `λ_d` and one copy of `level + 1`.
//! 2. `λ ∈ F_{level+1}`: drop one copy of `level + 1`, subtract 1 from the `d`
//!    largest parts and insert `d + level + 1`.
//!
//! Both steps preserve the sum of weights and the sum of lengths of the pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decompose::{delta, delta_weight};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{d_j, in_f_j};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairState {
    pub j: u32,
    pub k: usize,
    pub lam: Partition,
    pub parity: Parity,
}

impl PairState {
    pub fn new(j: u32, k: usize, lam: Partition, parity: Parity) -> Self {
        PairState { j, k, lam, parity }
    }

    pub fn even(j: u32, k: usize, lam: Partition) -> Self {
        Self::new(j, k, lam, Parity::Even)
    }

    pub fn odd(j: u32, k: usize, lam: Partition) -> Self {
        Self::new(j, k, lam, Parity::Odd)
    }

    pub fn staircase_len(&self) -> usize {
        2 * self.k + usize::from(self.parity == Parity::Odd)
    }

    /// `j + s` where `s` is the staircase length.
    pub fn level(&self) -> u32 {
        self.j + self.staircase_len() as u32
    }

    pub fn staircase(&self) -> Partition {
        delta(self.j, self.staircase_len())
    }

    pub fn pair_weight(&self) -> u64 {
        delta_weight(self.j, self.staircase_len()) + self.lam.weight()
    }

    pub fn pair_length(&self) -> usize {
        self.staircase_len() + self.lam.len()
    }

    /// Where `phi_step` is undefined and the forward iteration stops.
    pub fn is_phi_terminal(&self) -> bool {
        self.k == 0 && in_f_j(self.level(), &self.lam)
    }

    /// Where `psi_step` is undefined and the backward iteration stops.
    pub fn is_psi_terminal(&self) -> bool {
        !self.lam.contains_part(self.level() + 1)
    }
}

impl fmt::Display for PairState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(Delta_{{{},{}}}, ({}))",
            self.j,
            self.staircase_len(),
            self.lam
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Phi,
    Psi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepCase {
    Case1,
    Case2,
    /// The step left the pair unchanged.
    FixedStop,
}

impl fmt::Display for StepCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepCase::Case1 => "(1)",
            StepCase::Case2 => "(2)",
            StepCase::FixedStop => "fixed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub direction: Direction,
    pub case: StepCase,
    /// The `d` value that drove the step.
    pub d: usize,
    pub before: PairState,
    pub after: PairState,
}

pub fn phi_step(state: &PairState) -> Result<TraceStep> {
    let level = state.level();
    let lam = &state.lam;
    let d = d_j(level, lam);
    let (case, after) = if !in_f_j(level, lam) {
        let mut parts = lam.parts().to_vec();
        for p in &mut parts[..d - 1] {
            *p += 1;
        }
        parts.remove(d - 1);
        parts.push(level + 1);
        let lam = Partition::from_multiset(parts);
        (
            StepCase::Case1,
            PairState {
                lam,
                ..state.clone()
            },
        )
    } else if state.k >= 1 {
        let mut parts = lam.parts().to_vec();
        for p in &mut parts[..d] {
            *p -= 1;
        }
        parts.push(d as u32 + level);
        parts.push(level - 1);
        let lam = Partition::from_multiset(parts);
        (
            StepCase::Case2,
            PairState {
                k: state.k - 1,
                lam,
                ..state.clone()
            },
        )
    } else {
        return Err(Error::domain(
            "phi_step",
            format!("{state} is terminal (k = 0 and lambda in F_{level})"),
        ));
    };
    Ok(finish(Direction::Phi, case, d, state, after))
}

pub fn psi_step(state: &PairState) -> Result<TraceStep> {
    let top = state.level() + 1;
    let lam = &state.lam;
    if !lam.contains_part(top) {
        return Err(Error::domain(
            "psi_step",
            format!("{state} has no part {top}"),
        ));
    }
    let d = d_j(top, lam);
    let mut parts = lam.parts().to_vec();
    let (case, after) = if !in_f_j(top, lam) {
        for p in &mut parts[..d - 1] {
            *p += 1;
        }
        parts.remove(d - 1);
        remove_one(&mut parts, top);
        let lam = Partition::from_multiset(parts);
        (
            StepCase::Case1,
            PairState {
                k: state.k + 1,
                lam,
                ..state.clone()
            },
        )
    } else {
        remove_one(&mut parts, top);
        for p in &mut parts[..d] {
            *p -= 1;
        }
        parts.push(d as u32 + top);
        let lam = Partition::from_multiset(parts);
        (
            StepCase::Case2,
            PairState {
                lam,
                ..state.clone()
            },
        )
    };
    Ok(finish(Direction::Psi, case, d, state, after))
}

fn remove_one(parts: &mut Vec<u32>, value: u32) {
    // the last copy sits after the d largest parts, which all exceed `value`
    let idx = parts
        .iter()
        .rposition(|&p| p == value)
        .expect("part present");
    parts.remove(idx);
}

fn finish(
    direction: Direction,
    case: StepCase,
    d: usize,
    before: &PairState,
    after: PairState,
) -> TraceStep {
    let case = if after == *before {
        StepCase::FixedStop
    } else {
        case
    };
    TraceStep {
        direction,
        case,
        d,
        before: before.clone(),
        after,
    }
}
