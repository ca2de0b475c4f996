//! The bijections between `M_j`, `F_j` and crank classes.
//!
//! | map | from | to |
//! |-----|------|----|
//! | [`phi_map`] / [`psi_map`] | `M_j` | `F_j` |
//! | [`phi_bar`] / [`psi_bar`] | `M̄_j` | `F̄_j` |
//! | [`gamma`] / [`gamma_inv`] | `F_j ∩ P̄_j` | `crank ≤ -j` |
//! | [`lambda_involution`] | `crank = c` | `crank = -c` |
//! | [`crank_mex_map`] / [`crank_mex_inv`] | `M_j ∩ P̄_j` | `crank ≥ j` |
//!
//! Maps involving `Γ_j` or `Λ` require weight at least 2.

mod compose;
mod gamma;
mod involution;
mod iterate;
mod step;

pub use compose::{crank_mex_images, crank_mex_inv, crank_mex_map, CrankMexImages};
pub use gamma::{gamma, gamma_inv};
pub use involution::{lambda_involution, rho};
pub use iterate::{
    iterate_phi, iterate_psi, iteration_cap, join_fbar, phi_bar, phi_map, phi_prime_map, psi_bar,
    psi_map, psi_prime_map, split_fbar, BijectionTrace, TraceRecord,
};
pub use step::{phi_step, psi_step, Direction, PairState, Parity, StepCase, TraceStep};
