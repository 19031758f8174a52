use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// A class (r, n) with r, n ≥ 0, not both zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KClass {
    r: u32,
    n: u32,
}

impl KClass {
    pub fn new(r: u32, n: u32) -> Result<Self> {
        if r == 0 && n == 0 {
            return Err(Error::ZeroClass);
        }
        Ok(Self { r, n })
    }

    pub fn rank(self) -> u32 {
        self.r
    }

    pub fn length(self) -> u32 {
        self.n
    }

    pub fn slope(self) -> Slope {
        slope_of(self)
    }
}

impl Add for KClass {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            r: self.r + rhs.r,
            n: self.n + rhs.n,
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.n)
    }
}

/// μ(r, n) = n/r, with μ = ∞ when r = 0.
#[derive(Clone, Copy, Debug)]
pub enum Slope {
    Finite { num: u64, den: u64 },
    Infinite,
}

pub fn slope_of(k: KClass) -> Slope {
    if k.r == 0 {
        Slope::Infinite
    } else {
        Slope::Finite {
            num: k.n as u64,
            den: k.r as u64,
        }
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::Infinite, Slope::Infinite) => Ordering::Equal,
            (Slope::Infinite, _) => Ordering::Greater,
            (_, Slope::Infinite) => Ordering::Less,
            (Slope::Finite { num: a, den: b }, Slope::Finite { num: c, den: d }) => {
                (*a as u128 * *d as u128).cmp(&(*c as u128 * *b as u128))
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Slope {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Slope {}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Infinite => f.write_str("∞"),
            Slope::Finite { num, den } => {
                let g = num_integer::gcd(*num, *den);
                if *den / g == 1 {
                    write!(f, "{}", num / g)
                } else {
                    write!(f, "{}/{}", num / g, den / g)
                }
            }
        }
    }
}
