//! Exact integer-partition engine for the crank and `j`-mex statistics.
//!
//! The crate covers three layers:
//!
//! * [`partition`], [`stats`] and [`decompose`]: the [`Partition`] type, the
//!   statistics (crank, `mex_j`, `d_j`, membership in `M_j`/`F_j`/`P̄_j`) and
//!   the Durfee and mex decompositions.
//! * [`bijection`]: the step maps on staircase pairs, the iterated maps
//!   `Φ_j`/`Ψ_j` and their odd-staircase variants, `Γ_j`, the involution `Λ`,
//!   and the composed map from `M_j ∩ P̄_j` onto partitions of crank at least `j`.
//! * [`verify`]: exhaustive enumeration, truncated q-series oracles, the crank
//!   table and a suite that checks every counting identity with explicit
//!   bijective witnesses.
//!
//! [`cli`] backs the `crankmex` binary.
//!
//! ```
//! use crankmex::{bijection, partition, stats};
//!
//! let lam = partition![11, 8, 7, 7, 5, 5, 4, 3, 2, 2];
//! assert!(stats::in_m_j(0, &lam));
//! let image = bijection::crank_mex_map(0, &lam).unwrap();
//! assert_eq!(image.to_string(), "12,9,7,6,5,5,4,2,1,1,1,1");
//! assert_eq!(stats::crank(&image), 2);
//! ```

pub mod bijection;
pub mod cli;
pub mod decompose;
mod error;
pub mod partition;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
