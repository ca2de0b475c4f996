//! Truncated power series with exact integer coefficients.
//!
//! Two independent routes give the generating function of `F_j`:
//!
//! * [`mj_series_oracle`]: `(1/(q;q)_∞) · Σ_{k≥0} (-1)^k q^{k(k+1)/2 + jk}`,
//!   which is also the generating function of `M_j`;
//! * [`fj_series_frobenius`]: the constant term in `x` of
//!   `Π_{a≥0, a≠j} (1 + x q^a) · Π_{b≥1} (1 + x^{-1} q^b)`, i.e. a direct
//!   count of Durfee coordinates `(μ, ν)` with `j ∉ μ`.
//!
//! All arithmetic is overflow-checked `i64`; coefficients stay well inside
//! range for the enumeration limit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesCoefficients {
    pub coeffs: Vec<i64>,
}

impl SeriesCoefficients {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs[n]
    }
}

fn add(a: i64, b: i64, order: usize) -> Result<i64> {
    a.checked_add(b).ok_or(Error::SeriesOverflow { order })
}

fn mul(a: i64, b: i64, order: usize) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::SeriesOverflow { order })
}

/// `1/(q;q)_∞ = Σ p(n) q^n`, by repeated multiplication with `1/(1 - q^k)`.
pub fn euler_inverse_series(order: usize) -> Result<SeriesCoefficients> {
    let mut coeffs = vec![0i64; order + 1];
    coeffs[0] = 1;
    for k in 1..=order {
        for n in k..=order {
            coeffs[n] = add(coeffs[n], coeffs[n - k], n)?;
        }
    }
    Ok(SeriesCoefficients { coeffs })
}

/// `p(0..=order)` from Euler's pentagonal number recurrence.
pub fn partition_numbers_pentagonal(order: usize) -> Result<Vec<i64>> {
    let mut p = vec![0i64; order + 1];
    p[0] = 1;
    for n in 1..=order {
        let mut acc = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1];
            if g2 <= n {
                term = add(term, p[n - g2], n)?;
            }
            acc = if k % 2 == 1 {
                add(acc, term, n)?
            } else {
                add(acc, -term, n)?
            };
        }
        p[n] = acc;
    }
    Ok(p)
}

/// `(1/(q;q)_∞) · Σ_{k≥0} (-1)^k q^{k(k+1)/2 + jk}` to `q^order`.
pub fn mj_series_oracle(j: u32, order: usize) -> Result<SeriesCoefficients> {
    let euler = euler_inverse_series(order)?;
    let mut coeffs = vec![0i64; order + 1];
    for k in 0usize.. {
        let shift = k * (k + 1) / 2 + j as usize * k;
        if shift > order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for (n, &e) in euler.coeffs[..=order - shift].iter().enumerate() {
            let n = n + shift;
            coeffs[n] = add(coeffs[n], mul(sign, e, n)?, n)?;
        }
    }
    Ok(SeriesCoefficients { coeffs })
}

/// Bivariate truncated series: Laurent in `x` over `[-span, span]`, power series in `q`.
struct Bivariate {
    span: usize,
    order: usize,
    rows: Vec<Vec<i64>>,
}

impl Bivariate {
    fn one(span: usize, order: usize) -> Self {
        let mut rows = vec![vec![0i64; order + 1]; 2 * span + 1];
        rows[span][0] = 1;
        Bivariate { span, order, rows }
    }

    fn get(&self, x: i64, q: usize) -> i64 {
        let idx = x + self.span as i64;
        if idx < 0 || idx as usize >= self.rows.len() || q > self.order {
            return 0;
        }
        self.rows[idx as usize][q]
    }

    /// Multiplies by `1 + c · x^dx · q^dq`.
    fn mul_binomial(&mut self, c: i64, dx: i64, dq: usize) -> Result<()> {
        if dq > self.order {
            return Ok(());
        }
        let width = self.rows.len() as i64;
        let src = self.rows.clone();
        for (xi, row) in src.iter().enumerate() {
            let target = xi as i64 + dx;
            if target < 0 || target >= width {
                if row.iter().any(|&v| v != 0) {
                    return Err(Error::SeriesOverflow { order: self.order });
                }
                continue;
            }
            for (q, &v) in row[..=self.order - dq].iter().enumerate() {
                if v != 0 {
                    let t = mul(c, v, q + dq)?;
                    let cell = &mut self.rows[target as usize][q + dq];
                    *cell = add(*cell, t, q + dq)?;
                }
            }
        }
        Ok(())
    }

    /// Multiplies by `(1 - q^k)`.
    fn mul_q_binomial(&mut self, k: usize) -> Result<()> {
        self.mul_binomial(-1, 0, k)
    }
}

/// Constant term in `x` of `Π_{a≥0, a≠j}(1 + x q^a) Π_{b≥1}(1 + x^{-1} q^b)`.
pub fn fj_series_frobenius(j: u32, order: usize) -> Result<SeriesCoefficients> {
    let span = order + 2;
    let mut f = Bivariate::one(span, order);
    for a in 0..=order {
        if a != j as usize {
            f.mul_binomial(1, 1, a)?;
        }
    }
    for b in 1..=order {
        f.mul_binomial(1, -1, b)?;
    }
    Ok(SeriesCoefficients {
        coeffs: (0..=order).map(|q| f.get(0, q)).collect(),
    })
}

/// Checks `(q;q)_∞ (-x;q)_∞ (-q/x;q)_∞ = Σ_{k∈ℤ} x^k q^{k(k-1)/2}` through `q^order`.
pub fn jacobi_triple_product_holds(order: usize) -> Result<bool> {
    let span = order + 2;
    let mut lhs = Bivariate::one(span, order);
    for a in 0..=order {
        lhs.mul_binomial(1, 1, a)?;
    }
    for b in 1..=order {
        lhs.mul_binomial(1, -1, b)?;
        lhs.mul_q_binomial(b)?;
    }
    for x in -(span as i64)..=span as i64 {
        for q in 0..=order {
            let expected = if x * (x - 1) / 2 == q as i64 { 1 } else { 0 };
            if lhs.get(x, q) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
