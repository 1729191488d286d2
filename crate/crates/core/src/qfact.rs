//! q-strings, special position, fusion and the q-factorization.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::reducibility::special_set;
use crate::weights::{DrinfeldPolynomial, KrFactor};

/// Centers `min, min+2, ..., max` at a single node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QString {
    pub node: usize,
    pub min: i64,
    pub max: i64,
}

impl QString {
    pub fn new(node: usize, min: i64, max: i64) -> Option<Self> {
        (max >= min && (max - min) % 2 == 0).then_some(Self { node, min, max })
    }

    pub fn len(&self) -> u32 {
        ((self.max - self.min) / 2 + 1) as u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_kr(self) -> KrFactor {
        KrFactor {
            node: self.node,
            center: (self.min + self.max) / 2,
            length: self.len(),
        }
    }
}

impl From<KrFactor> for QString {
    fn from(k: KrFactor) -> Self {
        Self {
            node: k.node,
            min: k.min_center(),
            max: k.max_center(),
        }
    }
}

impl fmt::Display for QString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[{}..{}]", self.node, self.min, self.max)
    }
}

/// Same node and `|a - b| ∈ R_i^{r,s}`: the union of the two q-strings is
/// a q-string strictly longer than both.
pub fn in_special_position(k1: &KrFactor, k2: &KrFactor) -> bool {
    k1.node == k2.node && special_set(k1.length, k2.length).contains((k1.center - k2.center).abs())
}

/// Result of fusing a special pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fusion {
    /// The union q-string; divisible by both inputs.
    pub big: KrFactor,
    /// The intersection q-string, absent when the strings are disjoint.
    pub small: Option<KrFactor>,
    pub pure: bool,
}

pub fn fuse(k1: &KrFactor, k2: &KrFactor) -> Result<Fusion> {
    if !in_special_position(k1, k2) {
        return Err(Error::NotSpecialPosition(*k1, *k2));
    }
    let (s1, s2) = (QString::from(*k1), QString::from(*k2));
    let big = QString {
        node: s1.node,
        min: s1.min.min(s2.min),
        max: s1.max.max(s2.max),
    }
    .to_kr();
    let small = QString::new(s1.node, s1.min.max(s2.min), s1.max.min(s2.max)).map(QString::to_kr);
    Ok(Fusion {
        big,
        small,
        pure: small.is_none(),
    })
}

/// The unique q-factorization of `p`, sorted by `(node, center, length)`.
///
/// Starts from the fundamental factors and fuses the first special pair
/// (in sorted order) until none remains.
pub fn q_factorization(p: &DrinfeldPolynomial) -> Vec<KrFactor> {
    let mut factors: Vec<KrFactor> = p.fundamentals().map(KrFactor::fundamental).collect();
    while let Some((x, y)) = first_special_pair(&factors) {
        let fusion = fuse(&factors[x], &factors[y]).expect("pair is special");
        factors.remove(y);
        factors.remove(x);
        factors.push(fusion.big);
        factors.extend(fusion.small);
        factors.sort();
    }
    factors
}

fn first_special_pair(factors: &[KrFactor]) -> Option<(usize, usize)> {
    (0..factors.len())
        .flat_map(|x| (x + 1..factors.len()).map(move |y| (x, y)))
        .find(|&(x, y)| in_special_position(&factors[x], &factors[y]))
}

/// Whether no two factors are in special position.
pub fn is_q_factorization(factors: &[KrFactor]) -> bool {
    first_special_pair(factors).is_none()
}
