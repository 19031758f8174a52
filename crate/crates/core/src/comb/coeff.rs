//! The coefficient maps s_l and u_l on sequences of classes.

use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::class::{KClass, Slope};
use crate::error::{Error, Result};

/// s_l(v₁, …, v_l) ∈ {−1, 0, 1}.
///
/// At each cut i between v_i and v_{i+1} exactly one of
/// (a) μ(v_i) > μ(v_{i+1}) and μ(left) ≥ μ(right), or
/// (b) μ(v_i) ≤ μ(v_{i+1}) and μ(left) < μ(right)
/// must hold; otherwise the value is 0. The sign is (−1)^{#cuts of type (b)}.
pub fn s_coeff(vs: &[KClass]) -> i8 {
    assert!(!vs.is_empty(), "s_l needs at least one class");
    let total = sum(vs);
    let mut left: Option<KClass> = None;
    let mut b_cuts = 0usize;
    for i in 0..vs.len() - 1 {
        let l = match left {
            Some(acc) => acc + vs[i],
            None => vs[i],
        };
        left = Some(l);
        let right = difference(total, l);
        let step = vs[i].slope().cmp(&vs[i + 1].slope());
        let halves = l.slope().cmp(&right.slope());
        let case_a = step.is_gt() && halves.is_ge();
        let case_b = step.is_le() && halves.is_lt();
        debug_assert!(!(case_a && case_b));
        if case_b {
            b_cuts += 1;
        } else if !case_a {
            return 0;
        }
    }
    if b_cuts.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn sum(vs: &[KClass]) -> KClass {
    vs.iter()
        .copied()
        .reduce(|a, b| a + b)
        .expect("nonempty class list")
}

fn difference(total: KClass, part: KClass) -> KClass {
    KClass::new(total.rank() - part.rank(), total.length() - part.length())
        .expect("proper prefix leaves a nonzero suffix")
}

/// One surviving term of the (ψ, ξ) double sum defining u_l.
struct UTerm<'a> {
    /// Block sizes of ψ, in order.
    psi_blocks: &'a [usize],
    /// l'' = number of ξ-groups.
    groups: usize,
    value: BigRational,
}

/// Walks every (ψ, ξ) pair of non-decreasing surjections that passes the
/// slope conditions and hands each nonzero term to `visit`.
///
/// ψ blocks must have constant slope. All (ξ∘ψ)-group sums must share one
/// slope, which is then necessarily the slope of the total.
fn for_each_u_term(vs: &[KClass], visit: &mut dyn FnMut(UTerm<'_>)) {
    let mut psi = Vec::new();
    walk_psi(vs, 0, &mut psi, visit);
}

fn walk_psi(vs: &[KClass], start: usize, psi: &mut Vec<usize>, visit: &mut dyn FnMut(UTerm<'_>)) {
    if start == vs.len() {
        let mut blocks = Vec::with_capacity(psi.len());
        let mut denom = BigInt::one();
        let mut at = 0;
        for &size in psi.iter() {
            blocks.push(sum(&vs[at..at + size]));
            denom *= factorial(size);
            at += size;
        }
        let target = sum(vs).slope();
        let weight = BigRational::new(BigInt::one(), denom);
        let mut groups = Vec::new();
        walk_xi(
            &blocks,
            0,
            target,
            &mut groups,
            &mut |group_sizes: &[usize]| {
                let mut s_prod = 1i8;
                let mut at = 0;
                for &g in group_sizes {
                    s_prod *= s_coeff(&blocks[at..at + g]);
                    if s_prod == 0 {
                        return;
                    }
                    at += g;
                }
                let l2 = group_sizes.len();
                let sign = if (l2 + 1).is_multiple_of(2) { 1 } else { -1 } * s_prod as i64;
                let value = &weight * BigRational::new(BigInt::from(sign), BigInt::from(l2));
                visit(UTerm {
                    psi_blocks: psi,
                    groups: l2,
                    value,
                });
            },
        );
        return;
    }
    let slope = vs[start].slope();
    for end in start + 1..=vs.len() {
        if vs[end - 1].slope() != slope {
            break;
        }
        psi.push(end - start);
        walk_psi(vs, end, psi, visit);
        psi.pop();
    }
}

fn walk_xi(
    blocks: &[KClass],
    start: usize,
    target: Slope,
    groups: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if start == blocks.len() {
        visit(groups);
        return;
    }
    let mut acc: Option<KClass> = None;
    for end in start + 1..=blocks.len() {
        let s = match acc {
            Some(a) => a + blocks[end - 1],
            None => blocks[end - 1],
        };
        acc = Some(s);
        if s.slope() == target {
            groups.push(end - start);
            walk_xi(blocks, end, target, groups, visit);
            groups.pop();
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn u_cache() -> &'static DashMap<Vec<KClass>, BigRational> {
    static CACHE: OnceLock<DashMap<Vec<KClass>, BigRational>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

pub(crate) fn clear_u_cache() {
    u_cache().clear();
}

/// u_l(v₁, …, v_l), memoized on the class sequence.
pub fn u_coeff(vs: &[KClass]) -> BigRational {
    assert!(!vs.is_empty(), "u_l needs at least one class");
    if let Some(hit) = u_cache().get(vs) {
        return hit.clone();
    }
    let value = u_coeff_uncached(vs);
    u_cache().entry(vs.to_vec()).or_insert(value).clone()
}

fn u_coeff_uncached(vs: &[KClass]) -> BigRational {
    let mut total = BigRational::zero();
    for_each_u_term(vs, &mut |t| total += t.value);
    total
}

/// The split u = u⁽¹⁾ + u⁽²⁾ + u⁽³⁾ for sequences with exactly two rank-one
/// classes of positive rank.
///
/// u⁽¹⁾ collects terms with one ξ-group and the two rank classes in distinct
/// ψ-blocks, u⁽²⁾ one ξ-group with them ψ-merged, u⁽³⁾ two ξ-groups.
pub fn u_pieces(vs: &[KClass]) -> Result<[BigRational; 3]> {
    let ranked: Vec<usize> = (0..vs.len()).filter(|&i| vs[i].rank() > 0).collect();
    if ranked.len() != 2 || ranked.iter().any(|&i| vs[i].rank() != 1) {
        return Err(Error::Precondition(
            "u_pieces needs exactly two classes of rank one and no other ranked class".into(),
        ));
    }
    let mut pieces = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];
    for_each_u_term(vs, &mut |t| {
        let slot = match t.groups {
            1 => {
                if same_block(t.psi_blocks, ranked[0], ranked[1]) {
                    1
                } else {
                    0
                }
            }
            2 => 2,
            g => unreachable!("{g} equal-slope groups cannot occur with two ranked classes"),
        };
        pieces[slot] += t.value;
    });
    Ok(pieces)
}

fn same_block(blocks: &[usize], i: usize, j: usize) -> bool {
    let mut end = 0;
    for &size in blocks {
        let start = end;
        end += size;
        if (start..end).contains(&i) {
            return (start..end).contains(&j);
        }
    }
    false
}
