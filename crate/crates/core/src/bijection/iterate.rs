//! Iterated maps `Φ_j`/`Ψ_j` (even staircases) and `Φ'_j`/`Ψ'_j` (odd staircases).
//!
//! `Φ_j` sends `M_j` to `F_j`: split off the staircase with [`mex_decompose`],
//! then apply [`phi_step`] until `k = 0` and `λ ∈ F_j`. `Ψ_j` runs [`psi_step`]
//! from `(Δ_{j,0}, ν)` until `λ` loses the part `level + 1`, then recombines.
//! The odd variants do the same with `Δ_{j,2k+1}` and land in
//! `{Δ_{j,1}} × F_{j+1}`, which [`join_fbar`] identifies with `F̄_j`.

use serde::{Deserialize, Serialize};

use super::step::{phi_step, psi_step, Direction, PairState, StepCase, TraceStep};
use crate::decompose::{mex_compose, mex_decompose, MexDecomposition};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{d_j, in_f_j, in_m_j};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionTrace {
    pub input: PairState,
    pub output: PairState,
    pub steps: Vec<TraceStep>,
}

impl BijectionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Flat per-step records with partitions in text form.
    pub fn records(&self) -> Vec<TraceRecord> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| TraceRecord {
                step_index: i + 1,
                direction: s.direction,
                case: s.case,
                k_before: s.before.k,
                k_after: s.after.k,
                d: s.d,
                lam_before: s.before.lam.to_string(),
                lam_after: s.after.lam.to_string(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step_index: usize,
    pub direction: Direction,
    pub case: StepCase,
    pub k_before: usize,
    pub k_after: usize,
    pub d: usize,
    pub lam_before: String,
    pub lam_after: String,
}

/// Step budget for one iteration run. Loose on purpose; hitting it is a bug.
pub fn iteration_cap(start: &PairState) -> usize {
    2 * start.pair_weight() as usize + 2 * start.k + 4
}

/// Applies `phi_step` until the state is terminal.
pub fn iterate_phi(map: &'static str, start: PairState) -> Result<BijectionTrace> {
    iterate(map, start, PairState::is_phi_terminal, phi_step)
}

/// Applies `psi_step` until the state is terminal.
pub fn iterate_psi(map: &'static str, start: PairState) -> Result<BijectionTrace> {
    iterate(map, start, PairState::is_psi_terminal, psi_step)
}

fn iterate(
    map: &'static str,
    start: PairState,
    done: fn(&PairState) -> bool,
    step: fn(&PairState) -> Result<TraceStep>,
) -> Result<BijectionTrace> {
    let cap = iteration_cap(&start);
    let mut steps = Vec::new();
    let mut state = start.clone();
    while !done(&state) {
        if steps.len() == cap {
            return Err(Error::internal(
                map,
                format!("exceeded {cap} steps starting from {start}"),
            ));
        }
        let s = step(&state)?;
        if s.case == StepCase::FixedStop {
            return Err(Error::internal(map, format!("reached fixed point {state}")));
        }
        state = s.after.clone();
        steps.push(s);
    }
    Ok(BijectionTrace {
        input: start,
        output: state,
        steps,
    })
}

/// `Φ_j : M_j → F_j`.
pub fn phi_map(j: u32, lam: &Partition) -> Result<(Partition, BijectionTrace)> {
    if !in_m_j(j, lam) {
        return Err(Error::domain("Phi", format!("({lam}) is not in M_{j}")));
    }
    let MexDecomposition { k, rest, .. } = mex_decompose(j, lam);
    let trace = iterate_phi("Phi", PairState::even(j, k / 2, rest))?;
    Ok((trace.output.lam.clone(), trace))
}

/// `Ψ_j : F_j → M_j`, the inverse of [`phi_map`].
pub fn psi_map(j: u32, nu: &Partition) -> Result<(Partition, BijectionTrace)> {
    if !in_f_j(j, nu) {
        return Err(Error::domain("Psi", format!("({nu}) is not in F_{j}")));
    }
    let trace = iterate_psi("Psi", PairState::even(j, 0, nu.clone()))?;
    let out = recombine(&trace.output)?;
    Ok((out, trace))
}

/// `Φ'_j : M̄_j → F_{j+1}`; the staircase `Δ_{j,1}` of the result is implicit.
pub fn phi_prime_map(j: u32, lam: &Partition) -> Result<(Partition, BijectionTrace)> {
    if in_m_j(j, lam) {
        return Err(Error::domain(
            "Phi'",
            format!("({lam}) is not in the complement of M_{j}"),
        ));
    }
    let MexDecomposition { k, rest, .. } = mex_decompose(j, lam);
    let trace = iterate_phi("Phi'", PairState::odd(j, k / 2, rest))?;
    Ok((trace.output.lam.clone(), trace))
}

/// `Ψ'_j : F_{j+1} → M̄_j`, the inverse of [`phi_prime_map`].
pub fn psi_prime_map(j: u32, nu: &Partition) -> Result<(Partition, BijectionTrace)> {
    if !in_f_j(j + 1, nu) {
        return Err(Error::domain(
            "Psi'",
            format!("({nu}) is not in F_{}", j + 1),
        ));
    }
    let trace = iterate_psi("Psi'", PairState::odd(j, 0, nu.clone()))?;
    let out = recombine(&trace.output)?;
    Ok((out, trace))
}

fn recombine(state: &PairState) -> Result<Partition> {
    mex_compose(&MexDecomposition {
        j: state.j,
        k: state.staircase_len(),
        rest: state.lam.clone(),
    })
}

/// `F̄_j → F_{j+1}`: with `d = d_j(λ)`, drop `λ_d = d + j` and add 1 to the
/// `d - 1` largest parts. The companion staircase is `Δ_{j,1} = (j+1)`.
pub fn split_fbar(j: u32, lam: &Partition) -> Result<Partition> {
    if in_f_j(j, lam) {
        return Err(Error::domain("split_fbar", format!("({lam}) is in F_{j}")));
    }
    let d = d_j(j, lam);
    let mut parts = lam.parts().to_vec();
    for p in &mut parts[..d - 1] {
        *p += 1;
    }
    parts.remove(d - 1);
    Ok(Partition::from_multiset(parts))
}

/// `F_{j+1} → F̄_j`, inverse of [`split_fbar`]: with `d = d_{j+1}(μ)`,
/// subtract 1 from the `d` largest parts and insert `d + j + 1`.
pub fn join_fbar(j: u32, mu: &Partition) -> Result<Partition> {
    if !in_f_j(j + 1, mu) {
        return Err(Error::domain(
            "join_fbar",
            format!("({mu}) is not in F_{}", j + 1),
        ));
    }
    let d = d_j(j + 1, mu);
    let mut parts = mu.parts().to_vec();
    for p in &mut parts[..d] {
        *p -= 1;
    }
    parts.push(d as u32 + j + 1);
    Ok(Partition::from_multiset(parts))
}

/// `M̄_j → F̄_j`: [`phi_prime_map`] followed by [`join_fbar`].
pub fn phi_bar(j: u32, lam: &Partition) -> Result<(Partition, BijectionTrace)> {
    let (mu, trace) = phi_prime_map(j, lam)?;
    Ok((join_fbar(j, &mu)?, trace))
}

/// `F̄_j → M̄_j`: [`split_fbar`] followed by [`psi_prime_map`].
pub fn psi_bar(j: u32, lam: &Partition) -> Result<(Partition, BijectionTrace)> {
    if in_f_j(j, lam) {
        return Err(Error::domain("Psi_bar", format!("({lam}) is in F_{j}")));
    }
    psi_prime_map(j, &split_fbar(j, lam)?)
}
