//! Exhaustive enumeration, series oracles and the theorem suite.

pub mod crank_table;
pub mod enumerate;
pub mod series;
pub mod suite;

pub use crank_table::{crank_table, CrankTable};
pub use enumerate::{count_by_predicate, partitions, Partitions, ENUMERATION_LIMIT};
pub use series::{
    euler_inverse_series, fj_series_frobenius, jacobi_triple_product_holds, mj_series_oracle,
    partition_numbers_pentagonal, SeriesCoefficients,
};
pub use suite::{run_theorem_suite, CheckRecord, Counterexample, Status, VerificationReport};
