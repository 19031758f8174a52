//! Seed invariants, the wall-crossing sums, the closed rank-one and rank-two
//! series, and Ω(2, n).
//!
//! Every entry point comes in two flavours: a symbolic one returning
//! [`ChiPoly`], and an `_in` variant generic over the coefficient ring that
//! takes the element playing the role of χ. Passing `ChiPoly::chi()` recovers
//! the symbolic answer; passing a scalar runs the same pipeline with χ
//! already specialized.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::comb::{enumerate_configs, tree_sum, u_coeff, u_pieces, Color, KClass, VertexConfig};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{ratio, Coeff, Scalar};
use crate::series::{delta_product, macmahon, n_series, DeltaPredicate, PowerSeries};
use crate::{ChiPoly, Rational, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    /// Behrend-weighted counts.
    Dt,
    /// Naive Euler-characteristic counts.
    Eu,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::Dt => "DT",
            InvariantKind::Eu => "Eu",
        })
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dt" => Ok(InvariantKind::Dt),
            "eu" => Ok(InvariantKind::Eu),
            _ => Err(Error::Parse(format!("unknown invariant kind {s:?}"))),
        }
    }
}

/// Σ_{m | n} 1/m².
fn inverse_square_divisor_sum(n: u32) -> BigRational {
    (1..=n)
        .filter(|m| n.is_multiple_of(*m))
        .map(|m| ratio(1, (m as i64) * (m as i64)))
        .sum()
}

/// Boundary values: DT(r,0) = 1/r², DT(0,n) = −χ Σ_{m|n} 1/m²,
/// Eu(r,0) = (−1)^{r−1}/r², Eu(0,n) = χ Σ_{m|n} 1/m².
pub fn seed_in<C: Coeff>(kind: InvariantKind, k: KClass, chi: &C) -> Result<C> {
    let (r, n) = (k.rank(), k.length());
    let scalar = |q: BigRational| C::Scalar::from_rational(&q);
    match (r, n) {
        (r, 0) => {
            let mut v = ratio(1, (r as i64) * (r as i64));
            if kind == InvariantKind::Eu && r % 2 == 0 {
                v = -v;
            }
            Ok(C::from_scalar(scalar(v)))
        }
        (0, n) => {
            let mut d = inverse_square_divisor_sum(n);
            if kind == InvariantKind::Dt {
                d = -d;
            }
            Ok(chi.scale(&scalar(d)))
        }
        (r, n) => Err(Error::MixedClass { r, n }),
    }
}

pub fn dt_seed(k: KClass) -> Result<ChiPoly> {
    seed_in(InvariantKind::Dt, k, &ChiPoly::chi())
}

pub fn eu_seed(k: KClass) -> Result<ChiPoly> {
    seed_in(InvariantKind::Eu, k, &ChiPoly::chi())
}

/// Product of the seed invariants of the vertices of `c`.
pub fn config_weight_in<C: Coeff>(c: &VertexConfig, kind: InvariantKind, chi: &C) -> C {
    c.vertices().iter().fold(C::one(), |acc, v| {
        acc * seed_in(kind, v.class(), chi).expect("vertex classes are boundary classes")
    })
}

pub fn config_weight(c: &VertexConfig, kind: InvariantKind) -> ChiPoly {
    config_weight_in(c, kind, &ChiPoly::chi())
}

/// The rational factor multiplying the seed product of `c` in the
/// wall-crossing sum, given the u-coefficient to use.
fn scalar_factor(kind: InvariantKind, c: &VertexConfig, u: &BigRational) -> BigRational {
    if u.is_zero() {
        return BigRational::zero();
    }
    let trees = tree_sum(c);
    if trees.is_zero() {
        return BigRational::zero();
    }
    let edges = c.len() - 1;
    let mut f = u * BigRational::new(trees, BigInt::one() << edges);
    let negative = match kind {
        // (−1)^{rn} (−1/2)^{|V|−1}
        InvariantKind::Dt => (c.rank() as u64 * c.length() as u64 + edges as u64) % 2 == 1,
        // (+1/2)^{|V|−1}, no rank-length sign
        InvariantKind::Eu => false,
    };
    if negative {
        f = -f;
    }
    f
}

fn sum_contributions<C: Coeff>(
    configs: Vec<VertexConfig>,
    kind: InvariantKind,
    chi: &C,
    u_of: impl Fn(&VertexConfig) -> BigRational + Sync,
) -> C {
    let parts: Vec<C> = configs
        .par_iter()
        .map(|c| {
            let f = scalar_factor(kind, c, &u_of(c));
            if f.is_zero() {
                C::zero()
            } else {
                config_weight_in(c, kind, chi).scale(&C::Scalar::from_rational(&f))
            }
        })
        .collect();
    parts.into_iter().fold(C::zero(), |acc, p| acc + p)
}

/// DT(r, n) or Eu(r, n) by the wall-crossing sum over all configurations
/// with r(Λ) = r and n(Λ) = n.
///
/// Configurations are evaluated on the current rayon pool; the exact sum
/// does not depend on the schedule.
pub fn wallcross_in<C: Coeff>(kind: InvariantKind, r: u32, n: u32, chi: &C) -> Result<C> {
    let configs: Vec<VertexConfig> = enumerate_configs(r, n)?.collect();
    Ok(sum_contributions(configs, kind, chi, |c| {
        u_coeff(&c.classes())
    }))
}

pub fn wallcross(kind: InvariantKind, r: u32, n: u32) -> Result<ChiPoly> {
    wallcross_in(kind, r, n, &ChiPoly::chi())
}

/// M(−q)^χ.
pub fn dt1_series_in<C: Coeff>(order: usize, chi: &C) -> PowerSeries<C> {
    macmahon::<C>(order)
        .negate_q()
        .pow(chi)
        .expect("M(-q) has constant term 1")
}

pub fn dt1_series(order: usize) -> Series {
    dt1_series_in(order, &ChiPoly::chi())
}

/// The rank-two Δ-restricted product {M^χ · M^χ · N}_Δ.
fn rank_two_window_product<C: Coeff>(order: usize, chi: &C) -> PowerSeries<C> {
    let m_chi = macmahon::<C>(order).pow(chi).expect("unit series");
    let fs = [m_chi.clone(), m_chi, n_series::<C>(order)];
    delta_product(&fs, &DeltaPredicate::rank_two_window()).expect("three factors, arity three")
}

/// (1/4) M^{2χ} − (χ/2) {M^χ · M^χ · N}_Δ.
pub fn closed_dt2_series_in<C: Coeff>(order: usize, chi: &C) -> PowerSeries<C> {
    let quarter = C::Scalar::from_rational(&ratio(1, 4));
    let half = C::Scalar::from_rational(&ratio(1, 2));
    let two_chi = chi.scale(&C::Scalar::from_int(2));
    let main = macmahon::<C>(order)
        .pow(&two_chi)
        .expect("unit series")
        .scale_scalar(&quarter);
    let window = rank_two_window_product(order, chi).scale(&chi.scale(&half));
    main.sub(&window).expect("same order")
}

pub fn closed_dt2_series(order: usize) -> Series {
    closed_dt2_series_in(order, &ChiPoly::chi())
}

/// −(1/4) M^{2χ} + (χ/2) {M^χ · M^χ · N}_Δ.
pub fn closed_eu2_series_in<C: Coeff>(order: usize, chi: &C) -> PowerSeries<C> {
    closed_dt2_series_in(order, chi).neg()
}

pub fn closed_eu2_series(order: usize) -> Series {
    closed_eu2_series_in(order, &ChiPoly::chi())
}

/// (1/4) M^{2χ}: the closed form of the single-rank-vertex piece.
pub fn quarter_m_two_chi(order: usize) -> Series {
    macmahon::<ChiPoly>(order)
        .pow_chi(&ratio(2, 1))
        .expect("unit series")
        .scale_scalar(&ratio(1, 4))
}

/// One piece of the rank-two decomposition DT(2,n) = Σᵢ DT⁽ⁱ⁾(2,n).
///
/// Piece 0 restricts the wall-crossing sum to configurations with a single
/// rank vertex; pieces 1..=3 restrict to two rank vertices and replace u by
/// the matching component of [`u_pieces`].
pub fn dt_piece_in<C: Coeff>(piece: usize, n: u32, chi: &C) -> Result<C> {
    if piece > 3 {
        return Err(Error::Precondition(format!(
            "piece index {piece} is not in 0..=3"
        )));
    }
    let black_vertices = if piece == 0 { 1 } else { 2 };
    let configs: Vec<VertexConfig> = enumerate_configs(2, n)?
        .filter(|c| c.count(Color::Black) == black_vertices)
        .collect();
    Ok(sum_contributions(configs, InvariantKind::Dt, chi, |c| {
        let classes = c.classes();
        if piece == 0 {
            u_coeff(&classes)
        } else {
            let [p1, p2, p3] = u_pieces(&classes).expect("two rank-one vertices");
            [p1, p2, p3][piece - 1].clone()
        }
    }))
}

pub fn dt_piece(piece: usize, n: u32) -> Result<ChiPoly> {
    dt_piece_in(piece, n, &ChiPoly::chi())
}

/// Ω(2,n) = DT(2,n) for odd n, DT(2,n) − DT(1,n/2)/4 for even n, with
/// DT(2,n) read off the closed rank-two series.
pub fn omega2_in<C: Coeff>(n: usize, chi: &C) -> C {
    let dt2 = closed_dt2_series_in(n, chi).coeff(n).clone();
    if n % 2 == 1 {
        return dt2;
    }
    let dt1 = dt1_series_in(n / 2, chi).coeff(n / 2).clone();
    dt2 - dt1.scale(&C::Scalar::from_rational(&ratio(1, 4)))
}

pub fn omega2(n: usize) -> ChiPoly {
    omega2_in(n, &ChiPoly::chi())
}

/// Whether `p` takes integer values at every integer χ.
///
/// True exactly when every coordinate of `p` in the binomial basis C(χ, k)
/// is an integer; those coordinates are the forward differences Δᵏp(0).
pub fn is_integer_valued<T: Scalar>(p: &Poly<T>) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    let mut diffs: Vec<T> = (0..=deg).map(|k| p.eval(&T::from_int(k as i64))).collect();
    for _ in 0..=deg {
        if !diffs[0].is_integral() {
            return false;
        }
        diffs = diffs
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
    }
    true
}

/// Coordinates of `p` in the binomial basis, Δᵏp(0) for k = 0..=deg.
pub fn binomial_coordinates(p: &ChiPoly) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut diffs: Vec<Rational> = (0..=deg)
        .map(|k| p.eval(&Rational::from_int(k as i64)))
        .collect();
    let mut out = Vec::with_capacity(deg + 1);
    while let Some(first) = diffs.first() {
        out.push(first.clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}
