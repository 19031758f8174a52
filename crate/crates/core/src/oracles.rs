//! Brute-force reference counts.
//!
//! Nothing here touches the series engine or the tree code: the point is to
//! check those against independent enumeration.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};

pub const MAX_PLANE_PARTITION_SIZE: u32 = 12;

/// A plane partition stored row by row; each row is weakly decreasing and
/// bounded entrywise by the row above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || row.contains(&0) {
                return Err(Error::Precondition(
                    "rows must be nonempty with positive heights".into(),
                ));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Precondition(format!(
                    "row {i} is not weakly decreasing"
                )));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(a, b)| a > b) {
                    return Err(Error::Precondition(format!(
                        "row {i} exceeds the row above"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// Every plane partition of `n`, by backtracking.
pub fn plane_partitions(n: u32) -> Result<Vec<PlanePartition>> {
    if n > MAX_PLANE_PARTITION_SIZE {
        return Err(Error::ResourceBound(format!(
            "plane partition enumeration is capped at n = {MAX_PLANE_PARTITION_SIZE}"
        )));
    }
    let mut out = Vec::new();
    let mut rows = Vec::new();
    let top = vec![n; n as usize];
    add_rows(n, &top, &mut rows, &mut out);
    Ok(out)
}

fn add_rows(rest: u32, above: &[u32], rows: &mut Vec<Vec<u32>>, out: &mut Vec<PlanePartition>) {
    if rest == 0 {
        out.push(PlanePartition { rows: rows.clone() });
        return;
    }
    let mut row = Vec::new();
    fill_row(rest, above, &mut row, rows, out);
}

/// Extends the current row one cell at a time; a nonempty row may be closed
/// and the next row started.
fn fill_row(
    rest: u32,
    above: &[u32],
    row: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<PlanePartition>,
) {
    if !row.is_empty() {
        rows.push(row.clone());
        add_rows(rest, row, rows, out);
        rows.pop();
    }
    let col = row.len();
    if col >= above.len() {
        return;
    }
    let cap = above[col]
        .min(rest)
        .min(row.last().copied().unwrap_or(u32::MAX));
    for h in 1..=cap {
        row.push(h);
        fill_row(rest - h, above, row, rows, out);
        row.pop();
    }
}

pub fn plane_partition_count(n: u32) -> Result<BigInt> {
    Ok(BigInt::from(plane_partitions(n)?.len()))
}

/// σ₂(n) = Σ_{d | n} d², by trial division.
pub fn sigma2(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("sigma2 is defined for n ≥ 1".into()));
    }
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d) * d;
            let e = n / d;
            if e != d {
                total += BigInt::from(e) * e;
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Spanning trees of the complete bipartite graph K_{a,b}: a^{b−1} b^{a−1}.
pub fn bipartite_tree_count(a: u32, b: u32) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::Domain("both sides need at least one vertex".into()));
    }
    let left: BigInt = Pow::pow(BigInt::from(a), b - 1);
    let right: BigInt = Pow::pow(BigInt::from(b), a - 1);
    Ok(left * right)
}
