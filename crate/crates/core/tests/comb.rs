use std::collections::HashSet;

use dt_wallcross::comb::{
    compositions, enumerate_trees, s_coeff, tree_sum, tree_sum_enumerated, u_coeff, u_pieces,
    KClass, Vertex, VertexConfig,
};
use dt_wallcross::oracles::bipartite_tree_count;
use dt_wallcross::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

/// All weight vectors of `len` entries in 1..=max.
fn weight_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=max).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn class_strategy() -> impl Strategy<Value = KClass> {
    (0u32..=3, 0u32..=3)
        .prop_filter("nonzero", |(r, n)| r + n > 0)
        .prop_map(|(r, n)| KClass::new(r, n).unwrap())
}

fn config_strategy() -> impl Strategy<Value = VertexConfig> {
    prop::collection::vec((any::<bool>(), 1u32..=3), 1..=7).prop_map(|vs| {
        VertexConfig::new(
            vs.into_iter()
                .map(|(b, w)| {
                    if b {
                        Vertex::black(w)
                    } else {
                        Vertex::white(w)
                    }
                })
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn s_is_a_sign_or_zero(vs in prop::collection::vec(class_strategy(), 1..=6)) {
        prop_assert!([-1i8, 0, 1].contains(&s_coeff(&vs)));
    }

    #[test]
    fn kirchhoff_matches_enumeration(c in config_strategy()) {
        prop_assert_eq!(tree_sum(&c), tree_sum_enumerated(&c));
    }
}

/// Single rank vertex of weight 2 at position a among l vertices:
/// u = (−1)^{l−a} / ((a−1)! (l−a)!).
#[test]
fn single_rank_vertex_u_closed_form() {
    for l in 1..=7usize {
        for whites in weight_vectors(l - 1, 3) {
            for a in 1..=l {
                let mut vs = Vec::with_capacity(l);
                let mut w = whites.iter();
                for pos in 1..=l {
                    if pos == a {
                        vs.push(Vertex::black(2));
                    } else {
                        vs.push(Vertex::white(*w.next().unwrap()));
                    }
                }
                let c = VertexConfig::new(vs).unwrap();
                let sign = if (l - a) % 2 == 0 { 1 } else { -1 };
                let expected =
                    Rational::new(BigInt::from(sign), factorial(a - 1) * factorial(l - a));
                assert_eq!(u_coeff(&c.classes()), expected, "{c}");
            }
        }
    }
}

/// Brute force over all maps {0..l} → {0..l'} that are non-decreasing and onto.
fn surjection_block_sizes_brute(l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for target in 1..=l {
        let total = target.pow(l as u32);
        for code in 0..total {
            let mut f = Vec::with_capacity(l);
            let mut c = code;
            for _ in 0..l {
                f.push(c % target);
                c /= target;
            }
            let monotone = f.windows(2).all(|w| w[0] <= w[1]);
            let onto = (0..target).all(|v| f.contains(&v));
            if monotone && onto {
                out.push(
                    (0..target)
                        .map(|v| f.iter().filter(|&&x| x == v).count())
                        .collect(),
                );
            }
        }
    }
    out
}

fn signed_sum(blocks: &[Vec<usize>], l: usize) -> Rational {
    blocks
        .iter()
        .map(|b| {
            let sign = if (l - b.len()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let den = b.iter().fold(BigInt::from(1), |a, &s| a * factorial(s));
            Rational::new(BigInt::from(sign), den)
        })
        .sum()
}

#[test]
fn signed_surjection_sum_is_inverse_factorial() {
    for l in 1..=8usize {
        let brute = surjection_block_sizes_brute(l);
        let via_compositions: Vec<Vec<usize>> = compositions(l as u32)
            .into_iter()
            .map(|c| c.into_iter().map(|x| x as usize).collect())
            .collect();
        let a: HashSet<_> = brute.iter().cloned().collect();
        let b: HashSet<_> = via_compositions.iter().cloned().collect();
        assert_eq!(a, b);
        let expected = Rational::new(BigInt::from(1), factorial(l));
        assert_eq!(signed_sum(&brute, l), expected);
        assert_eq!(signed_sum(&via_compositions, l), expected);
    }
}

#[test]
fn u_pieces_partition_u() {
    for l in 2..=6usize {
        for whites in weight_vectors(l - 2, 2) {
            for a in 0..l {
                for b in a + 1..l {
                    let mut w = whites.iter();
                    let vs: Vec<Vertex> = (0..l)
                        .map(|p| {
                            if p == a || p == b {
                                Vertex::black(1)
                            } else {
                                Vertex::white(*w.next().unwrap())
                            }
                        })
                        .collect();
                    let c = VertexConfig::new(vs).unwrap();
                    let classes = c.classes();
                    let [p1, p2, p3] = u_pieces(&classes).unwrap();
                    assert_eq!(p1 + p2 + p3, u_coeff(&classes), "{c}");
                }
            }
        }
    }
}

#[test]
fn tree_counts_match_formula() {
    for a in 1..=3usize {
        for b in 1..=6usize {
            // alternate colors where possible, then append the rest
            let mut vs = Vec::new();
            for i in 0..a.max(b) {
                if i < a {
                    vs.push(Vertex::black(1));
                }
                if i < b {
                    vs.push(Vertex::white(1));
                }
            }
            let c = VertexConfig::new(vs).unwrap();
            let trees = enumerate_trees(&c);
            let unique: HashSet<_> = trees.iter().cloned().collect();
            assert_eq!(unique.len(), trees.len());
            assert_eq!(
                BigInt::from(trees.len()),
                bipartite_tree_count(a as u32, b as u32).unwrap(),
                "a={a} b={b}"
            );
        }
    }
}

/// Two equal-weight black vertices at positions a < b with b − a ≥ 3 kill the tree sum.
#[test]
fn distant_rank_vertices_have_no_trees_contribution() {
    let mut checked = 0;
    for l in 4..=8usize {
        for whites in weight_vectors(l - 2, 2) {
            for a in 0..l {
                for b in a + 3..l {
                    for (wa, wb) in [(1, 1), (2, 2)] {
                        let mut w = whites.iter();
                        let vs: Vec<Vertex> = (0..l)
                            .map(|p| {
                                if p == a {
                                    Vertex::black(wa)
                                } else if p == b {
                                    Vertex::black(wb)
                                } else {
                                    Vertex::white(*w.next().unwrap())
                                }
                            })
                            .collect();
                        let c = VertexConfig::new(vs).unwrap();
                        assert!(tree_sum(&c).is_zero(), "{c}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn unequal_black_weights_do_not_cancel() {
    for (c, t) in [
        ("B1,W1,W1,B2", -4),
        ("B2,W1,W1,B1", 4),
        ("B1,W1,W1,W1,B2", -6),
    ] {
        let c: VertexConfig = c.parse().unwrap();
        assert_eq!(tree_sum(&c), BigInt::from(t), "{c}");
        assert_eq!(tree_sum_enumerated(&c), tree_sum(&c));
    }
}

#[test]
fn adjacent_rank_vertices_can_contribute() {
    let c: VertexConfig = "W1,B1,W2,B1,W1".parse().unwrap();
    assert!(!tree_sum(&c).is_zero());
}

#[test]
fn leading_lengths_force_s_zero() {
    let c: VertexConfig = "W1,W1,B1,W1,B1".parse().unwrap();
    assert_eq!(s_coeff(&c.classes()), 0);
    let c: VertexConfig = "W1,B2,W1".parse().unwrap();
    assert_eq!(s_coeff(&c.classes()), -1);
}
