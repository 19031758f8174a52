//! The verification suite: wall-crossing sums against the closed series,
//! the DT/Eu sign relation, the rank-two decomposition and Ω(2, n).

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::invariants::{
    closed_dt2_series, dt1_series, dt_piece, is_integer_valued, omega2, quarter_m_two_chi,
    wallcross, InvariantKind,
};
use crate::scalar::{ratio, sign_pow};
use crate::ChiPoly;

pub const MAX_RANK: u32 = 3;
pub const MAX_LENGTH: u32 = 10;

/// Ω(2, n) for n = 0..=4 as printed in the literature, coefficients of χ⁰..χ⁴.
pub fn omega_table() -> Vec<ChiPoly> {
    let p = |c: &[(i64, i64)]| {
        ChiPoly::from_dense(&c.iter().map(|&(n, d)| ratio(n, d)).collect::<Vec<_>>())
    };
    vec![
        ChiPoly::zero(),
        ChiPoly::zero(),
        -ChiPoly::chi(),
        p(&[(0, 1), (-20, 6), (-15, 6), (-1, 6)]),
        p(&[(0, 1), (-102, 12), (-119, 12), (-30, 12), (-1, 12)]),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub enum CheckValue {
    Poly(ChiPoly),
    Bool(bool),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Poly(p) => write!(f, "{p}"),
            CheckValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub expected: CheckValue,
    pub actual: CheckValue,
    pub pass: bool,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn record(
        &mut self,
        name: &str,
        params: String,
        run: impl FnOnce() -> Result<(CheckValue, CheckValue)>,
    ) -> Result<()> {
        let start = Instant::now();
        let (expected, actual) = run()?;
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.to_string(),
            params,
            expected,
            actual,
            pass,
            elapsed: start.elapsed(),
        });
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            write!(
                f,
                "{tag} {:<22} {:<10} ({:.3}s)",
                c.name,
                c.params,
                c.elapsed.as_secs_f64()
            )?;
            if !c.pass {
                write!(f, "  expected {}  got {}", c.expected, c.actual)?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Checks the bounds `verify` enforces, before any work is done.
pub fn check_bounds(rmax: u32, nmax: u32, order: u32) -> Result<()> {
    if rmax == 0 || rmax > MAX_RANK {
        return Err(Error::ResourceBound(format!(
            "rmax must be in 1..={MAX_RANK}, got {rmax}"
        )));
    }
    if nmax > MAX_LENGTH {
        return Err(Error::ResourceBound(format!(
            "nmax must be at most {MAX_LENGTH}, got {nmax}"
        )));
    }
    if nmax > order {
        return Err(Error::Precondition(format!(
            "nmax {nmax} exceeds the series order {order}"
        )));
    }
    Ok(())
}

/// Runs every check up to rank `rmax` and length `nmax`, with closed series
/// truncated at `order`.
pub fn verify(rmax: u32, nmax: u32, order: u32) -> Result<VerificationReport> {
    check_bounds(rmax, nmax, order)?;
    let order = order as usize;
    let mut report = VerificationReport::default();

    let dt1 = dt1_series(order);
    for n in 0..=nmax {
        report.record("rank1-closed", format!("n={n}"), || {
            Ok((
                CheckValue::Poly(dt1.coeff(n as usize).clone()),
                CheckValue::Poly(wallcross(InvariantKind::Dt, 1, n)?),
            ))
        })?;
    }

    if rmax >= 2 {
        let dt2 = closed_dt2_series(order);
        for n in 0..=nmax {
            report.record("rank2-closed", format!("n={n}"), || {
                Ok((
                    CheckValue::Poly(dt2.coeff(n as usize).clone()),
                    CheckValue::Poly(wallcross(InvariantKind::Dt, 2, n)?),
                ))
            })?;
        }
    }

    for r in 1..=rmax {
        for n in 0..=nmax {
            report.record("dt-eu-sign", format!("r={r},n={n}"), || {
                let eu = wallcross(InvariantKind::Eu, r, n)?;
                let sign = sign_pow((r * n + r - 1) as usize);
                let expected = if sign > 0 { eu } else { -eu };
                Ok((
                    CheckValue::Poly(expected),
                    CheckValue::Poly(wallcross(InvariantKind::Dt, r, n)?),
                ))
            })?;
        }
    }

    if rmax >= 2 {
        let quarter = quarter_m_two_chi(order);
        for n in 0..=nmax {
            let pieces: Vec<ChiPoly> = (0..4).map(|i| dt_piece(i, n)).collect::<Result<_>>()?;
            report.record("piece0-closed", format!("n={n}"), || {
                Ok((
                    CheckValue::Poly(quarter.coeff(n as usize).clone()),
                    CheckValue::Poly(pieces[0].clone()),
                ))
            })?;
            for i in [2usize, 3] {
                report.record(&format!("piece{i}-vanishes"), format!("n={n}"), || {
                    Ok((
                        CheckValue::Poly(ChiPoly::zero()),
                        CheckValue::Poly(pieces[i].clone()),
                    ))
                })?;
            }
            report.record("pieces-sum", format!("n={n}"), || {
                let total = pieces.iter().cloned().fold(ChiPoly::zero(), |a, b| a + b);
                Ok((
                    CheckValue::Poly(wallcross(InvariantKind::Dt, 2, n)?),
                    CheckValue::Poly(total),
                ))
            })?;
        }
    }

    let table = omega_table();
    for n in 0..=nmax as usize {
        let omega = omega2(n);
        report.record("omega-integer", format!("n={n}"), || {
            Ok((
                CheckValue::Bool(true),
                CheckValue::Bool(is_integer_valued(&omega)),
            ))
        })?;
        if let Some(golden) = table.get(n) {
            report.record("omega-table", format!("n={n}"), || {
                Ok((
                    CheckValue::Poly(golden.clone()),
                    CheckValue::Poly(omega.clone()),
                ))
            })?;
        }
    }

    Ok(report)
}
