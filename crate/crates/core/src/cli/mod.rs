//! Command implementations behind the `dtwc` binary.
//!
//! Each command builds an [`OutputDocument`] (or a report) without touching
//! stdout, so the binary stays a thin argument parser.

pub mod cache;
pub mod document;

use std::fmt::Write as _;

use thiserror::Error;

use crate::comb::{enumerate_trees, s_coeff, tree_sum, u_coeff, u_pieces, Color, VertexConfig};
use crate::invariants::{
    closed_dt2_series, config_weight, dt1_series, is_integer_valued, omega2, wallcross,
    InvariantKind,
};
use crate::scalar::Scalar;
use crate::verify::{verify, VerificationReport};
use crate::{ChiPoly, Rational};

pub use cache::{Cache, CacheEntry, CacheKey, CACHE_ENV, FORMULA_VERSION};
pub use document::{Format, Meta, OutputDocument, Record};

pub const MAX_CLOSED_ORDER: usize = 16;
pub const MAX_WALLCROSS_ORDER: usize = 10;
pub const MAX_OMEGA_N: usize = 16;

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] crate::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(crate::Error::ResourceBound(_)) => EXIT_USAGE,
            CliError::Compute(crate::Error::Parse(_)) => EXIT_USAGE,
            _ => EXIT_RUNTIME,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Wallcross,
}

impl std::str::FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "closed" => Ok(Method::Closed),
            "wallcross" => Ok(Method::Wallcross),
            _ => Err(CliError::Usage(format!("unknown method {s:?}"))),
        }
    }
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Wallcross => "wallcross",
        }
    }
}

fn meta(command: &str, order: usize, method: Option<Method>, chi: Option<i64>) -> Meta {
    Meta {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: command.to_string(),
        order,
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        variable: "chi".to_string(),
        method: method.map(|m| m.name().to_string()),
        chi,
    }
}

fn specialize(p: &ChiPoly, chi: Option<i64>) -> ChiPoly {
    match chi {
        Some(k) => ChiPoly::constant(p.eval(&Rational::from_int(k))),
        None => p.clone(),
    }
}

/// Runs `f` on a rayon pool with `jobs` workers; `None` or 0 uses every core.
pub fn with_jobs<R: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> R + Send,
) -> Result<R, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs:?} worker threads: {e}")))?;
    Ok(pool.install(f))
}

/// DT(r, n) by wall-crossing, through the disk cache when one is configured.
pub fn wallcross_cached(
    kind: InvariantKind,
    r: u32,
    n: u32,
    cache: Option<&Cache>,
) -> Result<ChiPoly, CliError> {
    match cache {
        Some(c) => c.get_or_compute(&CacheKey::new(kind, r, n), || {
            wallcross(kind, r, n).map_err(CliError::from)
        }),
        None => Ok(wallcross(kind, r, n)?),
    }
}

/// Coefficients q⁰..q^order of DT(rank) by the requested method.
pub fn cmd_series(
    rank: u32,
    order: usize,
    method: Method,
    chi: Option<i64>,
    cache: Option<&Cache>,
) -> Result<OutputDocument, CliError> {
    if !(1..=2).contains(&rank) {
        return Err(CliError::Usage(format!(
            "series supports rank 1 or 2 (got {rank})"
        )));
    }
    let bound = match method {
        Method::Closed => MAX_CLOSED_ORDER,
        Method::Wallcross => MAX_WALLCROSS_ORDER,
    };
    if order > bound {
        return Err(crate::Error::ResourceBound(format!(
            "--order {order} exceeds {bound} for method {}",
            method.name()
        ))
        .into());
    }
    let values: Vec<ChiPoly> = match method {
        Method::Closed => {
            let s = if rank == 1 {
                dt1_series(order)
            } else {
                closed_dt2_series(order)
            };
            s.into_coeffs()
        }
        Method::Wallcross => (0..=order as u32)
            .map(|n| wallcross_cached(InvariantKind::Dt, rank, n, cache))
            .collect::<Result<_, _>>()?,
    };
    let payload = values
        .iter()
        .enumerate()
        .map(|(n, p)| Record::new(rank, n as u32, &specialize(p, chi)))
        .collect();
    Ok(OutputDocument {
        meta: meta("series", order, Some(method), chi),
        payload,
    })
}

/// Ω(2, n) for n = 0..=max_n, each with its integer-valuedness flag.
pub fn cmd_omega(max_n: usize, chi: Option<i64>) -> Result<OutputDocument, CliError> {
    if max_n > MAX_OMEGA_N {
        return Err(crate::Error::ResourceBound(format!(
            "--nmax {max_n} exceeds {MAX_OMEGA_N} for omega"
        ))
        .into());
    }
    let payload = (0..=max_n)
        .map(|n| {
            let p = omega2(n);
            let mut rec = Record::new(2, n as u32, &specialize(&p, chi));
            rec.integer_valued = Some(is_integer_valued(&p));
            rec
        })
        .collect();
    Ok(OutputDocument {
        meta: meta("omega", max_n, None, chi),
        payload,
    })
}

pub fn cmd_verify(
    rmax: u32,
    nmax: u32,
    order: Option<u32>,
) -> Result<VerificationReport, CliError> {
    Ok(verify(rmax, nmax, order.unwrap_or(nmax))?)
}

/// Human-readable s, u, tree data for one configuration such as `"B2,W1,W3"`.
pub fn cmd_coeff(config: &str) -> Result<String, CliError> {
    let c: VertexConfig = config.parse()?;
    let classes = c.classes();
    let mut out = String::new();
    let _ = writeln!(out, "config      {c}");
    let _ = writeln!(out, "class       (r,n) = ({},{})", c.rank(), c.length());
    let _ = writeln!(out, "s           {}", s_coeff(&classes));
    let _ = writeln!(out, "u           {}", u_coeff(&classes));
    let rank_one_pair = c.count(Color::Black) == 2
        && c.vertices()
            .iter()
            .all(|v| v.color == Color::White || v.weight == 1);
    if rank_one_pair {
        let [a, b, d] = u_pieces(&classes)?;
        let _ = writeln!(out, "u pieces    {a}, {b}, {d}");
    }
    let _ = writeln!(out, "trees       {}", enumerate_trees(&c).len());
    let _ = writeln!(out, "tree_sum    {}", tree_sum(&c));
    let _ = writeln!(out, "DT weight   {}", config_weight(&c, InvariantKind::Dt));
    let _ = writeln!(out, "Eu weight   {}", config_weight(&c, InvariantKind::Eu));
    Ok(out)
}

pub fn cmd_cache_clear(cache: Option<&Cache>) -> Result<String, CliError> {
    let Some(cache) = cache else {
        return Err(CliError::Usage(format!(
            "no cache directory configured (use --cache-dir or {CACHE_ENV})"
        )));
    };
    let removed = cache.clear()?;
    Ok(format!(
        "removed {removed} entries from {}",
        cache.dir().display()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_closed_rank_two() {
        let doc = cmd_series(2, 2, Method::Closed, None, None).unwrap();
        assert_eq!(doc.to_csv(), "n,poly\n0,1/4\n1,0\n2,-5/4*x\n");
    }

    #[test]
    fn series_bounds_and_rank() {
        let err = cmd_series(2, 20, Method::Wallcross, None, None).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
        let err = cmd_series(3, 2, Method::Closed, None, None).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
    }

    #[test]
    fn omega_specialized() {
        let doc = cmd_omega(3, Some(1)).unwrap();
        let vals: Vec<String> = doc
            .payload
            .iter()
            .map(|r| r.polynomial().unwrap().render("x"))
            .collect();
        assert_eq!(vals, vec!["0", "0", "-1", "-6"]);
        assert!(doc.payload.iter().all(|r| r.integer_valued == Some(true)));
    }

    #[test]
    fn coeff_report() {
        let text = cmd_coeff("B1,B1,W1").unwrap();
        assert!(text.contains("u           1/2"));
        assert!(text.contains("u pieces    1, -1/2, 0"));
        assert!(cmd_coeff("B1,Q").is_err());
    }
}
