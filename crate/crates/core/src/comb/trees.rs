//! Spanning trees of the color-bipartite complete graph on a configuration.

use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::comb::config::{Color, Vertex, VertexConfig};

/// A spanning tree, as index pairs `(i, j)` with `i < j`, sorted.
///
/// Edges are oriented from the smaller to the larger position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeGraph {
    edges: Vec<(usize, usize)>,
}

impl TreeGraph {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges whose source (the smaller endpoint) is black.
    pub fn black_sourced(&self, c: &VertexConfig) -> usize {
        self.edges
            .iter()
            .filter(|(s, _)| c.vertices()[*s].color == Color::Black)
            .count()
    }
}

/// Every spanning tree of the complete bipartite graph between black and
/// white positions of `c`, in lexicographic order of edge lists.
///
/// A single vertex has exactly the empty tree; two or more vertices of one
/// color have none.
pub fn enumerate_trees(c: &VertexConfig) -> Vec<TreeGraph> {
    let vs = c.vertices();
    let l = vs.len();
    let candidates: Vec<(usize, usize)> = (0..l)
        .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
        .filter(|&(i, j)| vs[i].color != vs[j].color)
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(l.saturating_sub(1));
    let comp: Vec<usize> = (0..l).collect();
    grow(&candidates, 0, l - 1, &comp, &mut chosen, &mut out);
    out
}

/// Include/exclude search over candidate edges; `comp` labels connected
/// components of the partial forest.
fn grow(
    candidates: &[(usize, usize)],
    next: usize,
    needed: usize,
    comp: &[usize],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<TreeGraph>,
) {
    if chosen.len() == needed {
        out.push(TreeGraph {
            edges: chosen.clone(),
        });
        return;
    }
    if candidates.len() - next < needed - chosen.len() {
        return;
    }
    let (i, j) = candidates[next];
    if comp[i] != comp[j] {
        let (from, to) = (comp[j], comp[i]);
        let merged: Vec<usize> = comp
            .iter()
            .map(|&x| if x == from { to } else { x })
            .collect();
        chosen.push((i, j));
        grow(candidates, next + 1, needed, &merged, chosen, out);
        chosen.pop();
    }
    grow(candidates, next + 1, needed, comp, chosen, out);
}

/// Signed weight of a single tree: (−1)^{#black-sourced edges} Π v(s)v(t).
pub fn tree_weight(c: &VertexConfig, t: &TreeGraph) -> BigInt {
    let vs = c.vertices();
    let mut w = BigInt::one();
    for &(i, j) in t.edges() {
        w *= BigInt::from(vs[i].weight) * BigInt::from(vs[j].weight);
    }
    if t.black_sourced(c) % 2 == 1 {
        -w
    } else {
        w
    }
}

/// Σ over spanning trees of the signed edge-weight products, by explicit
/// enumeration. Exponential; used to cross-check [`tree_sum`].
pub fn tree_sum_enumerated(c: &VertexConfig) -> BigInt {
    enumerate_trees(c).iter().map(|t| tree_weight(c, t)).sum()
}

fn tree_cache() -> &'static DashMap<Vec<Vertex>, BigInt> {
    static CACHE: OnceLock<DashMap<Vec<Vertex>, BigInt>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

pub(crate) fn clear_tree_cache() {
    tree_cache().clear();
}

/// Σ_{trees} (−1)^{#black-sourced edges} Π_{edges} v(s)v(t).
///
/// The per-edge factor ±v(i)v(j) depends only on the edge, so the sum is the
/// weighted Kirchhoff determinant: any principal cofactor of the Laplacian
/// with those edge weights. Memoized on the vertex sequence.
pub fn tree_sum(c: &VertexConfig) -> BigInt {
    if let Some(hit) = tree_cache().get(c.vertices()) {
        return hit.clone();
    }
    let value = kirchhoff(c);
    tree_cache()
        .entry(c.vertices().to_vec())
        .or_insert(value)
        .clone()
}

fn kirchhoff(c: &VertexConfig) -> BigInt {
    let vs = c.vertices();
    let l = vs.len();
    let mut lap = vec![vec![BigInt::zero(); l]; l];
    for i in 0..l {
        for j in i + 1..l {
            if vs[i].color == vs[j].color {
                continue;
            }
            let mut w = BigInt::from(vs[i].weight) * BigInt::from(vs[j].weight);
            if vs[i].color == Color::Black {
                w = -w;
            }
            lap[i][j] -= &w;
            lap[j][i] -= &w;
            lap[i][i] += &w;
            lap[j][j] += &w;
        }
    }
    let minor: Vec<Vec<BigInt>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    bareiss_det(minor)
}

/// Fraction-free Gaussian elimination. The empty matrix has determinant 1.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        m[n - 1][n - 1].clone()
    };
    if sign < 0 {
        -det
    } else {
        det
    }
}
