//! The JSON/CSV/table output document.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{ChiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub order: usize,
    pub timestamp: String,
    /// Name of the polynomial variable; always `"chi"`, written `x` in polynomials.
    pub variable: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    /// Set when the payload was specialized at χ = this value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub rank: u32,
    pub n: u32,
    pub poly: BTreeMap<usize, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integer_valued: Option<bool>,
}

impl Record {
    pub fn new(rank: u32, n: u32, p: &ChiPoly) -> Self {
        Self {
            rank,
            n,
            poly: poly_to_map(p),
            integer_valued: None,
        }
    }

    pub fn polynomial(&self) -> Result<ChiPoly> {
        map_to_poly(&self.poly)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub meta: Meta,
    pub payload: Vec<Record>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// Canonical text of a rational: lowest terms, `/1` omitted.
pub fn render_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
            if d == num_bigint::BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn poly_to_map(p: &ChiPoly) -> BTreeMap<usize, String> {
    p.terms().map(|(d, c)| (d, render_rational(c))).collect()
}

pub fn map_to_poly(m: &BTreeMap<usize, String>) -> Result<ChiPoly> {
    let terms = m
        .iter()
        .map(|(d, s)| Ok((*d, parse_rational(s)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChiPoly::from_terms(terms))
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let with_flag = self.payload.iter().any(|r| r.integer_valued.is_some());
        let mut out = String::from("n,poly");
        if with_flag {
            out.push_str(",integer_valued");
        }
        out.push('\n');
        for r in &self.payload {
            let p = r.polynomial().expect("records hold valid rationals");
            let _ = write!(out, "{},{}", r.n, p.render("x"));
            if let Some(flag) = r.integer_valued {
                let _ = write!(out, ",{flag}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let label = match self.meta.command.as_str() {
            "omega" => "Ω(2,n)",
            _ => "value",
        };
        let mut out = String::new();
        if let Some(k) = self.meta.chi {
            let _ = writeln!(out, "# χ = {k}");
        }
        let _ = write!(out, "{:>4} {:>3}  {label}", "rank", "n");
        let with_flag = self.payload.iter().any(|r| r.integer_valued.is_some());
        if with_flag {
            out.push_str("  [integer-valued]");
        }
        out.push('\n');
        for r in &self.payload {
            let p = r.polynomial().expect("records hold valid rationals");
            let _ = write!(out, "{:>4} {:>3}  {}", r.rank, r.n, p.render("χ"));
            if let Some(flag) = r.integer_valued {
                let _ = write!(out, "  [{flag}]");
            }
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
        }
    }
}
