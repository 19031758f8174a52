//! Truncated power series in q.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of q⁰..q^N exactly.
//! Binary operations refuse operands of different orders; use
//! [`PowerSeries::truncate`] to bring them to a common order first.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Coeff, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> PowerSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c·q^k`, or zero when `k` exceeds the order.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^k; panics if `k` is past the truncation order.
    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Drops every coefficient above `order`. Never extends.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Precondition(format!(
                "cannot extend a series of order {} to {order}",
                self.order()
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let acc = std::mem::replace(&mut out.coeffs[i + j], C::zero());
                out.coeffs[i + j] = acc + a.clone() * b.clone();
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn scale_scalar(&self, s: &C::Scalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// q d/dq: the coefficient of q^n is multiplied by n.
    pub fn qdq(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a.scale(&int::<C>(n as i64)))
                .collect(),
        }
    }

    /// f(q) ↦ f(-q).
    pub fn negate_q(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| if n % 2 == 1 { -a.clone() } else { a.clone() })
                .collect(),
        }
    }

    /// Logarithm of a unit series with constant term exactly 1.
    ///
    /// With g = log f we have q g' f = q f', so
    /// n gₙ = n fₙ − Σ_{k=1}^{n−1} k gₖ f_{n−k}.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(
                "log needs a series with constant term 1".into(),
            ));
        }
        let n_max = self.order();
        let f = &self.coeffs;
        // k·g_k, kept to avoid dividing and re-multiplying
        let mut kg: Vec<C> = vec![C::zero(); n_max + 1];
        for n in 1..=n_max {
            let mut acc = f[n].scale(&int::<C>(n as i64));
            for k in 1..n {
                if kg[k].is_zero() || f[n - k].is_zero() {
                    continue;
                }
                acc = acc - kg[k].clone() * f[n - k].clone();
            }
            kg[n] = acc;
        }
        let coeffs = kg
            .into_iter()
            .enumerate()
            .map(|(n, a)| {
                if n == 0 {
                    C::zero()
                } else {
                    a.scale(&inv::<C>(n as i64))
                }
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Exponential of a series with zero constant term.
    ///
    /// With h = exp g: n hₙ = Σ_{k=1}^{n} k gₖ h_{n−k}.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let n_max = self.order();
        let kg: Vec<C> = self.qdq().coeffs;
        let mut h: Vec<C> = Vec::with_capacity(n_max + 1);
        h.push(C::one());
        for n in 1..=n_max {
            let mut acc = C::zero();
            for k in 1..=n {
                if kg[k].is_zero() || h[n - k].is_zero() {
                    continue;
                }
                acc = acc + kg[k].clone() * h[n - k].clone();
            }
            h.push(acc.scale(&inv::<C>(n as i64)));
        }
        Ok(Self { coeffs: h })
    }

    /// `f^e := exp(e · log f)` for a ring element `e`, e.g. `e = aχ`.
    pub fn pow(&self, exponent: &C) -> Result<Self> {
        self.log()?.scale(exponent).exp()
    }
}

impl<T: Scalar> PowerSeries<Poly<T>> {
    /// `f^{aχ}`; the q^n coefficient is a polynomial of degree at most n.
    pub fn pow_chi(&self, a: &T) -> Result<Self> {
        self.pow(&Poly::chi().scale(a))
    }

    /// Specializes χ to a value, coefficient by coefficient.
    pub fn eval_chi(&self, at: &T) -> PowerSeries<T> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|p| p.eval(at)).collect(),
        }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})q^{n}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

fn int<C: Coeff>(n: i64) -> C::Scalar {
    C::Scalar::from_int(n)
}

fn inv<C: Coeff>(n: i64) -> C::Scalar {
    C::Scalar::one() / C::Scalar::from_int(n)
}

/// The MacMahon function Π_{k≥1} (1 − q^k)^{−k} to order `order`.
///
/// Each factor 1/(1 − q^k) is applied k times as a running-sum pass, which
/// is multiplication by the geometric series 1 + q^k + q^{2k} + …
pub fn macmahon<C: Coeff>(order: usize) -> PowerSeries<C> {
    let mut coeffs = vec![C::zero(); order + 1];
    coeffs[0] = C::one();
    for k in 1..=order {
        for _ in 0..k {
            for n in k..=order {
                let prev = coeffs[n - k].clone();
                let cur = std::mem::replace(&mut coeffs[n], C::zero());
                coeffs[n] = cur + prev;
            }
        }
    }
    PowerSeries { coeffs }
}

/// N(q) = q d/dq log M(q). The q⁰ coefficient is 0; q^n carries Σ_{d|n} d².
pub fn n_series<C: Coeff>(order: usize) -> PowerSeries<C> {
    macmahon::<C>(order)
        .log()
        .expect("M(q) has constant term 1")
        .qdq()
}

type Membership = dyn Fn(&[usize]) -> bool + Send + Sync;

/// A subset Δ ⊂ ℤ^arity_{≥0} given by a pure membership test.
#[derive(Clone)]
pub struct DeltaPredicate {
    arity: usize,
    test: Arc<Membership>,
}

impl fmt::Debug for DeltaPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DeltaPredicate")
            .field("arity", &self.arity)
            .finish_non_exhaustive()
    }
}

impl DeltaPredicate {
    pub fn new(arity: usize, test: impl Fn(&[usize]) -> bool + Send + Sync + 'static) -> Self {
        Self {
            arity,
            test: Arc::new(test),
        }
    }

    /// Δ = ℤ^arity_{≥0}.
    pub fn always(arity: usize) -> Self {
        Self::new(arity, |_| true)
    }

    /// Δ = {(m₁, m₂, m₃) : −m₃ ≤ m₁ − m₂ < m₃}, the window of the rank-two formula.
    pub fn rank_two_window() -> Self {
        Self::new(3, |m| {
            let d = m[0] as i64 - m[1] as i64;
            let m3 = m[2] as i64;
            -m3 <= d && d < m3
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn contains(&self, m: &[usize]) -> bool {
        debug_assert_eq!(m.len(), self.arity);
        (self.test)(m)
    }
}

/// {f₁ ⋯ f_N}_Δ: the sum over exponent tuples in Δ with total ≤ order of
/// the product of the matching coefficients.
pub fn delta_product<C: Coeff>(
    fs: &[PowerSeries<C>],
    delta: &DeltaPredicate,
) -> Result<PowerSeries<C>> {
    if fs.len() != delta.arity() {
        return Err(Error::ArityMismatch {
            expected: delta.arity(),
            got: fs.len(),
        });
    }
    let Some(first) = fs.first() else {
        return Err(Error::Precondition(
            "delta_product needs at least one factor".into(),
        ));
    };
    let order = first.order();
    for f in &fs[1..] {
        first.check_order(f)?;
    }
    let mut out = PowerSeries::zero(order);
    let mut tuple = vec![0usize; fs.len()];
    delta_walk(
        fs,
        delta,
        order,
        0,
        0,
        &C::one(),
        &mut tuple,
        &mut out.coeffs,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn delta_walk<C: Coeff>(
    fs: &[PowerSeries<C>],
    delta: &DeltaPredicate,
    order: usize,
    slot: usize,
    used: usize,
    partial: &C,
    tuple: &mut [usize],
    out: &mut [C],
) {
    if slot == fs.len() {
        if delta.contains(tuple) {
            let acc = std::mem::replace(&mut out[used], C::zero());
            out[used] = acc + partial.clone();
        }
        return;
    }
    for m in 0..=order - used {
        let c = &fs[slot].coeffs[m];
        if c.is_zero() {
            continue;
        }
        tuple[slot] = m;
        let next = partial.clone() * c.clone();
        delta_walk(fs, delta, order, slot + 1, used + m, &next, tuple, out);
    }
}
