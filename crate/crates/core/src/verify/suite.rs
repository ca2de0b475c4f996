//! Exhaustive theorem suite.
//!
//! Every counting identity is checked twice: as an equality of counts and as
//! a perfect matching realized by an explicit bijection. A matching check maps
//! every element of the domain forward and every element of the codomain
//! backward, and verifies membership, weight, round trip and injectivity on
//! both sides.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::crank_table::{crank_table, CrankTable};
use super::enumerate::{partitions, ENUMERATION_LIMIT};
use super::series::{
    euler_inverse_series, fj_series_frobenius, jacobi_triple_product_holds, mj_series_oracle,
    partition_numbers_pentagonal, SeriesCoefficients,
};
use crate::bijection::{
    crank_mex_inv, crank_mex_map, gamma, gamma_inv, lambda_involution, phi_bar, phi_map, psi_bar,
    psi_map,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stats::{crank, d_j, has_part, in_f_j, in_m_j, mex_j, omega};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Outside the hypothesis of the identity (weight below 2).
    Skip,
    /// A map hit its iteration cap or an impossible state.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub partition: String,
    pub j: Option<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub n: u32,
    pub j: Option<u32>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_n: u32,
    pub max_j: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// True when nothing failed; skipped rows are fine.
    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0 && self.count(Status::Internal) == 0
    }

    pub fn has_internal(&self) -> bool {
        self.count(Status::Internal) > 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail | Status::Internal))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let _ = writeln!(
            out,
            "{:>3}  {:>3}  {:<name_w$}  {:<8}  detail",
            "n", "j", "check", "status"
        );
        for c in &self.checks {
            let j = c.j.map_or("-".to_string(), |j| j.to_string());
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skipped",
                Status::Internal => "INTERNAL",
            };
            let detail = match (&c.counterexample, &c.note) {
                (Some(cx), _) => format!("({}) {}", cx.partition, cx.detail),
                (None, Some(note)) => note.clone(),
                (None, None) => String::new(),
            };
            let line = format!(
                "{:>3}  {:>3}  {:<name_w$}  {:<8}  {}",
                c.n, j, c.name, status, detail
            );
            let _ = writeln!(out, "{}", line.trim_end());
        }
        let _ = writeln!(
            out,
            "{} checks for n <= {}, j <= {}: {} passed, {} skipped, {} failed, {} internal",
            self.checks.len(),
            self.max_n,
            self.max_j,
            self.count(Status::Pass),
            self.count(Status::Skip),
            self.count(Status::Fail),
            self.count(Status::Internal)
        );
        out
    }

    /// One JSON object per line, one line per check.
    pub fn write_records<W: io::Write>(&self, mut w: W) -> io::Result<()> {
        for c in &self.checks {
            serde_json::to_writer(&mut w, c)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }
}

struct Failure {
    partition: Partition,
    detail: String,
    internal: bool,
}

type Outcome = std::result::Result<(), Failure>;

fn fail(lam: &Partition, detail: impl Into<String>) -> Failure {
    Failure {
        partition: lam.clone(),
        detail: detail.into(),
        internal: false,
    }
}

fn ensure(cond: bool, lam: &Partition, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(fail(lam, detail()))
    }
}

fn lift<T>(lam: &Partition, r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure {
        partition: lam.clone(),
        internal: e.is_internal(),
        detail: e.to_string(),
    })
}

/// Checks that `forward` and `backward` are inverse bijections between
/// `domain` and `codomain`, both subsets of one weight class.
fn check_matching(
    all: &[Partition],
    in_domain: &dyn Fn(&Partition) -> bool,
    in_codomain: &dyn Fn(&Partition) -> bool,
    forward: &dyn Fn(&Partition) -> Result<Partition>,
    backward: &dyn Fn(&Partition) -> Result<Partition>,
) -> Outcome {
    for (pred, other, there, back) in [
        (in_domain, in_codomain, forward, backward),
        (in_codomain, in_domain, backward, forward),
    ] {
        let mut seen = HashSet::new();
        for lam in all.iter().filter(|p| pred(p)) {
            let image = lift(lam, there(lam))?;
            ensure(image.weight() == lam.weight(), lam, || {
                format!("image ({image}) changes the weight")
            })?;
            ensure(other(&image), lam, || {
                format!("image ({image}) is outside the target set")
            })?;
            let again = lift(&image, back(&image))?;
            ensure(again == *lam, lam, || {
                format!("round trip returns ({again})")
            })?;
            ensure(seen.insert(image.clone()), lam, || {
                format!("image ({image}) is hit twice")
            })?;
        }
    }
    Ok(())
}

fn check_count(
    all: &[Partition],
    left: &dyn Fn(&Partition) -> bool,
    right: &dyn Fn(&Partition) -> bool,
) -> Outcome {
    let a = all.iter().filter(|p| left(p)).count();
    let b = all.iter().filter(|p| right(p)).count();
    if a == b {
        return Ok(());
    }
    // point at an element of the larger side
    let witness = all
        .iter()
        .find(|p| {
            if a > b {
                left(p) && !right(p)
            } else {
                right(p) && !left(p)
            }
        })
        .cloned()
        .unwrap_or_default();
    Err(fail(&witness, format!("counts differ: {a} vs {b}")))
}

struct Context {
    by_weight: Vec<Vec<Partition>>,
    p_dp: SeriesCoefficients,
    p_pentagonal: Vec<i64>,
    mj: Vec<SeriesCoefficients>,
    fj: Vec<SeriesCoefficients>,
    table: CrankTable,
}

const WEIGHT_HYPOTHESIS: &str = "identity stated for weight >= 2";

fn record(name: &str, n: u32, j: Option<u32>, outcome: Option<Outcome>) -> CheckRecord {
    let (status, counterexample, note) = match outcome {
        None => (Status::Skip, None, Some(WEIGHT_HYPOTHESIS.to_string())),
        Some(Ok(())) => (Status::Pass, None, None),
        Some(Err(f)) => (
            if f.internal {
                Status::Internal
            } else {
                Status::Fail
            },
            Some(Counterexample {
                partition: f.partition.to_string(),
                j,
                detail: f.detail,
            }),
            None,
        ),
    };
    CheckRecord {
        name: name.to_string(),
        n,
        j,
        status,
        counterexample,
        note,
    }
}

fn cell_checks(ctx: &Context, n: u32, j: u32) -> Vec<CheckRecord> {
    let all = &ctx.by_weight[n as usize];
    let big = n >= 2;
    let nj = -(j as i64);
    let mut out = Vec::new();
    let mut push =
        |name: &str, outcome: Option<Outcome>| out.push(record(name, n, Some(j), outcome));

    let m = |p: &Partition| in_m_j(j, p);
    let f = |p: &Partition| in_f_j(j, p);
    let not_m = |p: &Partition| !in_m_j(j, p);
    let not_f = |p: &Partition| !in_f_j(j, p);
    let m_pbar = |p: &Partition| in_m_j(j, p) && has_part(j, p);
    let f_pbar = |p: &Partition| in_f_j(j, p) && has_part(j, p);
    let crank_le = |p: &Partition| crank(p) <= nj;
    let crank_ge = |p: &Partition| crank(p) >= j as i64;

    push("count.m_eq_f", Some(check_count(all, &m, &f)));
    push("count.mbar_eq_fbar", Some(check_count(all, &not_m, &not_f)));
    push(
        "count.f_pbar_eq_crank_le",
        big.then(|| check_count(all, &f_pbar, &crank_le)),
    );
    push(
        "count.m_pbar_eq_crank_ge",
        big.then(|| check_count(all, &m_pbar, &crank_ge)),
    );
    if j == 0 {
        let odd_mex = |p: &Partition| mex_j(0, p) % 2 == 1;
        let nonneg = |p: &Partition| crank(p) >= 0;
        push(
            "count.odd_mex_eq_crank_nonneg",
            big.then(|| check_count(all, &odd_mex, &nonneg)),
        );
    }

    push(
        "bijection.phi_psi",
        Some(check_matching(
            all,
            &m,
            &f,
            &|p| phi_map(j, p).map(|r| r.0),
            &|p| psi_map(j, p).map(|r| r.0),
        )),
    );
    push(
        "bijection.phi_bar_psi_bar",
        Some(check_matching(
            all,
            &not_m,
            &not_f,
            &|p| phi_bar(j, p).map(|r| r.0),
            &|p| psi_bar(j, p).map(|r| r.0),
        )),
    );
    push(
        "bijection.gamma",
        big.then(|| {
            check_matching(all, &f_pbar, &crank_le, &|p| gamma(j, p), &|p| {
                gamma_inv(j, p)
            })?;
            all.iter().filter(|p| f_pbar(p)).try_for_each(|p| {
                let mu = lift(p, gamma(j, p))?;
                ensure(d_j(j, &mu) == d_j(j, p), p, || {
                    format!("d_{j} changes under gamma ({mu})")
                })
            })
        }),
    );
    push(
        "bijection.crank_mex",
        big.then(|| {
            check_matching(all, &m_pbar, &crank_ge, &|p| crank_mex_map(j, p), &|p| {
                crank_mex_inv(j, p)
            })
        }),
    );

    push(
        "lemma.crank_le_iff_omega_ge",
        Some(all.iter().try_for_each(|p| {
            let lhs = crank(p) <= nj;
            let rhs = omega(p) >= d_j(j, p) + j as usize;
            ensure(lhs == rhs, p, || {
                format!(
                    "crank {} vs omega {} and d_{j} {}",
                    crank(p),
                    omega(p),
                    d_j(j, p)
                )
            })
        })),
    );

    let count_m = all.iter().filter(|p| m(p)).count() as i64;
    let count_f = all.iter().filter(|p| f(p)).count() as i64;
    let empty = Partition::empty();
    let mj = ctx.mj[j as usize].coeff(n as usize);
    let fj = ctx.fj[j as usize].coeff(n as usize);
    push(
        "series.m_j",
        Some(ensure(mj == count_m, &empty, || {
            format!("series {mj} vs enumeration {count_m}")
        })),
    );
    push(
        "series.f_j",
        Some(ensure(mj == count_f && fj == count_f, &empty, || {
            format!("series {mj}, Durfee product {fj} vs enumeration {count_f}")
        })),
    );
    out
}

fn weight_checks(ctx: &Context, n: u32) -> Vec<CheckRecord> {
    let all = &ctx.by_weight[n as usize];
    let empty = Partition::empty();
    let count = all.len() as i64;
    let dp = ctx.p_dp.coeff(n as usize);
    let pent = ctx.p_pentagonal[n as usize];
    let mut out = vec![record(
        "count.partition_number",
        n,
        None,
        Some(ensure(count == dp && count == pent, &empty, || {
            format!("enumeration {count}, product {dp}, pentagonal {pent}")
        })),
    )];
    out.push(record(
        "crank.symmetry",
        n,
        None,
        Some((1..=n as i64).try_for_each(|m| {
            let (a, b) = (ctx.table.get(m, n), ctx.table.get(-m, n));
            let witness = all
                .iter()
                .find(|p| crank(p) == m)
                .cloned()
                .unwrap_or_default();
            ensure(a == b, &witness, || {
                format!("C({m},{n}) = {a} but C({},{n}) = {b}", -m)
            })
        })),
    ));
    out.push(record(
        "bijection.lambda",
        n,
        None,
        (n >= 2).then(|| {
            let mut seen = HashSet::new();
            all.iter().try_for_each(|p| {
                let img = lift(p, lambda_involution(p))?;
                ensure(img.weight() == p.weight(), p, || {
                    format!("image ({img}) changes the weight")
                })?;
                ensure(crank(&img) == -crank(p), p, || {
                    format!("image ({img}) has crank {}", crank(&img))
                })?;
                let back = lift(&img, lambda_involution(&img))?;
                ensure(back == *p, p, || {
                    format!("not an involution: returns ({back})")
                })?;
                ensure(seen.insert(img.clone()), p, || {
                    format!("image ({img}) is hit twice")
                })
            })
        }),
    ));
    out
}

/// Runs every check for `0 ≤ n ≤ max_n` and `0 ≤ j ≤ max_j`.
///
/// Cells are evaluated in parallel; the report is ordered by `(n, j, name)`
/// with weight-level checks (no `j`) first.
pub fn run_theorem_suite(max_n: u32, max_j: u32) -> Result<VerificationReport> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::WeightLimit {
            weight: max_n as u64,
            max: ENUMERATION_LIMIT as u64,
        });
    }
    let order = max_n as usize;
    let by_weight = (0..=max_n)
        .into_par_iter()
        .map(|n| partitions(n).map(Iterator::collect))
        .collect::<Result<Vec<Vec<Partition>>>>()?;
    let ctx = Context {
        by_weight,
        p_dp: euler_inverse_series(order)?,
        p_pentagonal: partition_numbers_pentagonal(order)?,
        mj: (0..=max_j)
            .map(|j| mj_series_oracle(j, order))
            .collect::<Result<_>>()?,
        fj: (0..=max_j)
            .map(|j| fj_series_frobenius(j, order))
            .collect::<Result<_>>()?,
        table: crank_table(max_n)?,
    };

    let cells: Vec<(u32, Option<u32>)> = (0..=max_n)
        .flat_map(|n| std::iter::once((n, None)).chain((0..=max_j).map(move |j| (n, Some(j)))))
        .collect();
    let mut checks: Vec<CheckRecord> = cells
        .into_par_iter()
        .flat_map_iter(|(n, j)| match j {
            None => weight_checks(&ctx, n),
            Some(j) => cell_checks(&ctx, n, j),
        })
        .collect();

    checks.push(record(
        "series.jacobi_triple_product",
        max_n,
        None,
        Some(ensure(
            jacobi_triple_product_holds(order)?,
            &Partition::empty(),
            || "coefficients differ".to_string(),
        )),
    ));
    checks.sort_by(|a, b| (a.n, a.j, &a.name).cmp(&(b.n, b.j, &b.name)));
    Ok(VerificationReport {
        max_n,
        max_j,
        checks,
    })
}
