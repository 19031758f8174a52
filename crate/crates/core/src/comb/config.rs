//! Bi-colored weighted ordered vertex configurations.

use std::fmt;
use std::str::FromStr;

use crate::comb::class::KClass;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    /// Rank vertex, class (w, 0).
    Black,
    /// Length vertex, class (0, w).
    White,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub color: Color,
    pub weight: u32,
}

impl Vertex {
    pub fn black(weight: u32) -> Self {
        Self {
            color: Color::Black,
            weight,
        }
    }

    pub fn white(weight: u32) -> Self {
        Self {
            color: Color::White,
            weight,
        }
    }

    pub fn class(self) -> KClass {
        let k = match self.color {
            Color::Black => KClass::new(self.weight, 0),
            Color::White => KClass::new(0, self.weight),
        };
        k.expect("vertex weights are positive")
    }
}

/// An ordered list of colored weighted vertices; list position is the total order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexConfig {
    vertices: Vec<Vertex>,
    rank: u32,
    length: u32,
}

impl VertexConfig {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition(
                "a configuration needs at least one vertex".into(),
            ));
        }
        if vertices.iter().any(|v| v.weight == 0) {
            return Err(Error::Precondition(
                "vertex weights must be positive".into(),
            ));
        }
        let weight_of = |c: Color| -> u32 {
            vertices
                .iter()
                .filter(|v| v.color == c)
                .map(|v| v.weight)
                .sum()
        };
        let rank = weight_of(Color::Black);
        let length = weight_of(Color::White);
        Ok(Self {
            vertices,
            rank,
            length,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// r(Λ): total black weight.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// n(Λ): total white weight.
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn count(&self, color: Color) -> usize {
        self.vertices.iter().filter(|v| v.color == color).count()
    }

    pub fn classes(&self) -> Vec<KClass> {
        self.vertices.iter().map(|v| v.class()).collect()
    }
}

impl fmt::Display for VertexConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let c = match v.color {
                Color::Black => 'B',
                Color::White => 'W',
            };
            write!(f, "{c}{}", v.weight)?;
        }
        Ok(())
    }
}

/// Parses strings such as `"B2,W1,W3"`.
impl FromStr for VertexConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let mut chars = tok.chars();
            let color = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('B') => Color::Black,
                Some('W') => Color::White,
                _ => {
                    return Err(Error::Parse(format!(
                        "bad vertex {tok:?}: expected B<w> or W<w>"
                    )))
                }
            };
            let weight: u32 = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight in {tok:?}")))?;
            vertices.push(Vertex { color, weight });
        }
        VertexConfig::new(vertices)
    }
}

/// Ordered compositions of `n` in lexicographic order. `n = 0` has the single
/// empty composition.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    compositions_into(n, &mut cur, &mut out);
    out
}

fn compositions_into(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for first in 1..=rest {
        cur.push(first);
        compositions_into(rest - first, cur, out);
        cur.pop();
    }
}

/// k-element subsets of 0..n in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn walk(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            walk(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every configuration with r(Λ) = r and n(Λ) = n, each once.
///
/// Order: black composition (lexicographic), then white composition, then
/// the positions of the black vertices (lexicographic).
pub fn enumerate_configs(r: u32, n: u32) -> Result<impl Iterator<Item = VertexConfig>> {
    if r == 0 && n == 0 {
        return Err(Error::ZeroClass);
    }
    let blacks = compositions(r);
    let whites = compositions(n);
    let mut out = Vec::new();
    for bc in &blacks {
        for wc in &whites {
            let total = bc.len() + wc.len();
            for pos in subsets(total, bc.len()) {
                let mut vertices = Vec::with_capacity(total);
                let (mut bi, mut wi) = (0, 0);
                for slot in 0..total {
                    if pos.binary_search(&slot).is_ok() {
                        vertices.push(Vertex::black(bc[bi]));
                        bi += 1;
                    } else {
                        vertices.push(Vertex::white(wc[wi]));
                        wi += 1;
                    }
                }
                out.push(VertexConfig::new(vertices).expect("nonempty with positive weights"));
            }
        }
    }
    Ok(out.into_iter())
}
