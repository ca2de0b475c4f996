//! Exhaustive state-space scans shared by the property and acceptance tests.

#![allow(dead_code)]

use crankmex::bijection::{phi_step, psi_step, PairState, Parity, StepCase};
use crankmex::decompose::{
    delta_weight, durfee_compose, durfee_decompose, mex_compose, mex_decompose,
};
use crankmex::stats::{crank, d_j, in_f_j};
use crankmex::verify::partitions;
use crankmex::Partition;

pub fn by_weight(max_weight: u32) -> Vec<Vec<Partition>> {
    (0..=max_weight)
        .map(|n| partitions(n).unwrap().collect())
        .collect()
}

/// Every pair `(Δ_{j,s}, λ)` of total weight at most `max_weight`, both parities.
pub fn pair_states(table: &[Vec<Partition>], max_weight: u64, max_j: u32) -> Vec<PairState> {
    let mut out = Vec::new();
    for j in 0..=max_j {
        for parity in [Parity::Even, Parity::Odd] {
            for k in 0.. {
                let s = 2 * k + usize::from(parity == Parity::Odd);
                let base = delta_weight(j, s);
                if base > max_weight {
                    break;
                }
                for lam in table
                    .iter()
                    .take((max_weight - base) as usize + 1)
                    .flatten()
                {
                    out.push(PairState::new(j, k, lam.clone(), parity));
                }
            }
        }
    }
    out
}

fn small_parts(lam: &Partition, j: u32) -> Vec<u32> {
    lam.parts().iter().copied().filter(|&p| p <= j).collect()
}

fn conserved(before: &PairState, after: &PairState) -> Result<(), String> {
    if before.pair_weight() != after.pair_weight() {
        return Err(format!("{before} -> {after}: pair weight changes"));
    }
    if before.pair_length() != after.pair_length() {
        return Err(format!("{before} -> {after}: pair length changes"));
    }
    if small_parts(&before.lam, before.j) != small_parts(&after.lam, after.j) {
        return Err(format!("{before} -> {after}: parts at most j change"));
    }
    Ok(())
}

/// Step inversion, conservation and the fixed-point characterization at one state.
pub fn check_state(s: &PairState) -> Result<(), String> {
    let level = s.level();
    let first = s.lam.parts().first().copied().unwrap_or(0);

    if !s.is_phi_terminal() {
        let t = phi_step(s).map_err(|e| e.to_string())?;
        let expect_fixed = first == level + 1;
        if (t.case == StepCase::FixedStop) != expect_fixed {
            return Err(format!(
                "{s}: phi_step case {} but lambda_1 = {first}",
                t.case
            ));
        }
        if t.case != StepCase::FixedStop {
            conserved(s, &t.after)?;
            let back = psi_step(&t.after).map_err(|e| e.to_string())?;
            if back.after != *s {
                return Err(format!("{s}: psi_step(phi_step) gives {}", back.after));
            }
        }
    }

    if !s.is_psi_terminal() {
        let t = psi_step(s).map_err(|e| e.to_string())?;
        let expect_fixed = d_j(level + 1, &s.lam) == 0;
        if (t.case == StepCase::FixedStop) != expect_fixed {
            return Err(format!("{s}: psi_step case {}", t.case));
        }
        if expect_fixed && first != level + 1 {
            return Err(format!("{s}: fixed by psi_step with lambda_1 = {first}"));
        }
        if t.case != StepCase::FixedStop {
            conserved(s, &t.after)?;
            let back = phi_step(&t.after).map_err(|e| e.to_string())?;
            if back.after != *s {
                return Err(format!("{s}: phi_step(psi_step) gives {}", back.after));
            }
        }
    }

    // a case-1 run lasts exactly #{i >= d : lambda_i = d + level} steps
    if !in_f_j(level, &s.lam) && first > level + 1 {
        let d = d_j(level, &s.lam);
        let u = s.lam.parts()[d - 1..]
            .iter()
            .filter(|&&p| p == d as u32 + level)
            .count();
        let mut state = s.clone();
        let mut steps = 0;
        while !in_f_j(level, &state.lam) {
            let t = phi_step(&state).map_err(|e| e.to_string())?;
            if t.case != StepCase::Case1 {
                return Err(format!("{s}: run interrupted by case {}", t.case));
            }
            state = t.after;
            steps += 1;
            if steps > u {
                break;
            }
        }
        if steps != u {
            return Err(format!("{s}: case-1 run of {steps} steps, expected {u}"));
        }
    }
    Ok(())
}

/// Per-partition invariants of the statistics and decompositions.
pub fn check_partition(lam: &Partition, max_j: u32) -> Result<(), String> {
    let n = lam.weight() as i64;
    let c = crank(lam);
    if c < -n || c > n {
        return Err(format!("({lam}): crank {c} out of range"));
    }
    let conj = lam.conjugate();
    if conj.conjugate() != *lam || conj.weight() != lam.weight() {
        return Err(format!("({lam}): conjugation is not an involution"));
    }
    let triple = durfee_decompose(lam);
    if triple.weight() != lam.weight() || durfee_compose(&triple).as_ref() != Ok(lam) {
        return Err(format!("({lam}): Durfee round trip fails"));
    }
    for j in 0..=max_j {
        let (a, b) = (d_j(j, lam), d_j(j + 1, lam));
        if a < b || a - b > 1 {
            return Err(format!("({lam}): d_{j} = {a}, d_{} = {b}", j + 1));
        }
        let dec = mex_decompose(j, lam);
        if dec.rest.contains_part(j + dec.k as u32 + 1) || mex_compose(&dec).as_ref() != Ok(lam) {
            return Err(format!("({lam}): mex round trip fails at j = {j}"));
        }
        if a <= triple.t && in_f_j(j, lam) == triple.mu.contains(&j) {
            return Err(format!("({lam}): F_{j} disagrees with the Durfee arms"));
        }
    }
    Ok(())
}
