//! Fundamental ℓ-weights, Kirillov-Reshetikhin factors and Drinfeld
//! polynomials, represented as multisets of `(node, center)` pairs.
//!
//! A center `a` stands for the root `q^a` of the factor `1 - q^a u`; all
//! criteria only ever look at integer differences of centers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinA;
use crate::error::{Error, Result};

/// The fundamental ℓ-weight `ω_{i,a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalWeight {
    #[serde(rename = "i")]
    pub node: usize,
    #[serde(rename = "a")]
    pub center: i64,
}

impl FundamentalWeight {
    pub const fn new(node: usize, center: i64) -> Self {
        Self { node, center }
    }
}

impl fmt::Display for FundamentalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{},{}]", self.node, self.center)
    }
}

/// The KR polynomial `ω_{i,a,r}`: `r` fundamentals at node `i` whose centers
/// run over `a-r+1, a-r+3, ..., a+r-1`.
///
/// Ordered lexicographically by `(node, center, length)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KrFactor {
    #[serde(rename = "i")]
    pub node: usize,
    #[serde(rename = "a")]
    pub center: i64,
    #[serde(rename = "r")]
    pub length: u32,
}

impl KrFactor {
    pub fn new(node: usize, center: i64, length: u32) -> Result<Self> {
        if length == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(Self { node, center, length })
    }

    pub const fn fundamental(w: FundamentalWeight) -> Self {
        Self {
            node: w.node,
            center: w.center,
            length: 1,
        }
    }

    pub fn is_fundamental(&self) -> bool {
        self.length == 1
    }

    pub fn min_center(&self) -> i64 {
        self.center - i64::from(self.length) + 1
    }

    pub fn max_center(&self) -> i64 {
        self.center + i64::from(self.length) - 1
    }

    /// Fundamental factors, in increasing center order.
    pub fn fundamentals(&self) -> impl Iterator<Item = FundamentalWeight> + '_ {
        let node = self.node;
        (self.min_center()..=self.max_center())
            .step_by(2)
            .map(move |c| FundamentalWeight::new(node, c))
    }

    /// The Drinfeld polynomial `ω_{i,a,r}` over `diagram`.
    pub fn expand(&self, diagram: DynkinA) -> Result<DrinfeldPolynomial> {
        DrinfeldPolynomial::new(diagram, self.fundamentals())
    }
}

impl fmt::Display for KrFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kr({},{},{})", self.node, self.center, self.length)
    }
}

/// An element of the monoid `P+`: a finite multiset of fundamental
/// ℓ-weights over a fixed diagram. The empty multiset is the identity `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DrinfeldPolynomial {
    diagram: DynkinA,
    factors: BTreeMap<FundamentalWeight, usize>,
}

impl DrinfeldPolynomial {
    pub fn one(diagram: DynkinA) -> Self {
        Self {
            diagram,
            factors: BTreeMap::new(),
        }
    }

    pub fn new(diagram: DynkinA, weights: impl IntoIterator<Item = FundamentalWeight>) -> Result<Self> {
        let mut p = Self::one(diagram);
        for w in weights {
            p.push(w, 1)?;
        }
        Ok(p)
    }

    /// Product of KR polynomials.
    pub fn from_kr(diagram: DynkinA, factors: impl IntoIterator<Item = KrFactor>) -> Result<Self> {
        let mut p = Self::one(diagram);
        for k in factors {
            if k.length == 0 {
                return Err(Error::ZeroLength);
            }
            for w in k.fundamentals() {
                p.push(w, 1)?;
            }
        }
        Ok(p)
    }

    /// Multiplies in `w^multiplicity`.
    pub fn push(&mut self, w: FundamentalWeight, multiplicity: usize) -> Result<()> {
        self.diagram.check_node(w.node)?;
        if multiplicity > 0 {
            *self.factors.entry(w).or_insert(0) += multiplicity;
        }
        Ok(())
    }

    pub fn diagram(&self) -> DynkinA {
        self.diagram
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total number of fundamental factors, counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.factors.values().sum()
    }

    pub fn multiplicity(&self, w: FundamentalWeight) -> usize {
        self.factors.get(&w).copied().unwrap_or(0)
    }

    /// Distinct factors with their multiplicities, in `(node, center)` order.
    pub fn factors(&self) -> impl Iterator<Item = (FundamentalWeight, usize)> + '_ {
        self.factors.iter().map(|(w, m)| (*w, *m))
    }

    /// All fundamental factors, repeated according to multiplicity.
    pub fn fundamentals(&self) -> impl Iterator<Item = FundamentalWeight> + '_ {
        self.factors.iter().flat_map(|(w, m)| std::iter::repeat_n(*w, *m))
    }

    pub fn times(&self, other: &Self) -> Result<Self> {
        self.same_diagram(other)?;
        let mut p = self.clone();
        for (w, m) in other.factors() {
            *p.factors.entry(w).or_insert(0) += m;
        }
        Ok(p)
    }

    /// One copy of each distinct fundamental factor.
    pub fn bar(&self) -> Self {
        Self {
            diagram: self.diagram,
            factors: self.factors.keys().map(|w| (*w, 1)).collect(),
        }
    }

    /// `ω_{i,a} ↦ ω_{i*, a - ȟ}`.
    pub fn dual(&self) -> Self {
        self.twist(-(self.diagram.dual_coxeter() as i64))
    }

    /// `ω_{i,a} ↦ ω_{i*, a + ȟ}`.
    pub fn codual(&self) -> Self {
        self.twist(self.diagram.dual_coxeter() as i64)
    }

    fn twist(&self, shift: i64) -> Self {
        let n = self.diagram.rank();
        Self {
            diagram: self.diagram,
            factors: self
                .factors
                .iter()
                .map(|(w, m)| (FundamentalWeight::new(n + 1 - w.node, w.center + shift), *m))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.diagram == other.diagram && self.factors.iter().all(|(w, m)| other.multiplicity(*w) >= *m)
    }

    /// `self / divisor`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        self.same_diagram(divisor)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible);
        }
        let mut p = self.clone();
        for (w, m) in divisor.factors() {
            let slot = p.factors.get_mut(&w).expect("checked by divides");
            *slot -= m;
            if *slot == 0 {
                p.factors.remove(&w);
            }
        }
        Ok(p)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.factors.keys().map(|w| w.node).collect()
    }

    /// The node `i` when the polynomial lies in `P_i^+`.
    pub fn monochromatic_node(&self) -> Option<usize> {
        let support = self.support();
        match support.len() {
            1 => support.first().copied(),
            _ => None,
        }
    }

    fn same_diagram(&self, other: &Self) -> Result<()> {
        if self.diagram != other.diagram {
            return Err(Error::DiagramMismatch(self.diagram.rank(), other.diagram.rank()));
        }
        Ok(())
    }
}

/// Serialized as the list of fundamental factors with repetition, in
/// `(node, center)` order.
impl Serialize for DrinfeldPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.fundamentals())
    }
}

/// Multiplies a sequence of polynomials over a common diagram.
pub fn product<'a>(
    diagram: DynkinA,
    polys: impl IntoIterator<Item = &'a DrinfeldPolynomial>,
) -> Result<DrinfeldPolynomial> {
    polys
        .into_iter()
        .try_fold(DrinfeldPolynomial::one(diagram), |acc, p| acc.times(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a3() -> DynkinA {
        DynkinA::new(3).unwrap()
    }

    fn w(i: usize, a: i64) -> FundamentalWeight {
        FundamentalWeight::new(i, a)
    }

    fn poly(ws: &[(usize, i64)]) -> DrinfeldPolynomial {
        DrinfeldPolynomial::new(a3(), ws.iter().map(|&(i, a)| w(i, a))).unwrap()
    }

    fn kr(i: usize, a: i64, r: u32) -> KrFactor {
        KrFactor::new(i, a, r).unwrap()
    }

    #[test]
    fn kr_expansion() {
        assert_eq!(kr(2, 1, 2).expand(a3()).unwrap(), poly(&[(2, 0), (2, 2)]));
        assert_eq!(kr(1, 5, 1).expand(a3()).unwrap(), poly(&[(1, 5)]));
        assert_eq!(kr(1, 0, 3).expand(a3()).unwrap(), poly(&[(1, -2), (1, 0), (1, 2)]));
        assert!(KrFactor::new(1, 0, 0).is_err());
        assert!(kr(4, 0, 1).expand(a3()).is_err());
    }

    #[test]
    fn bar_collapses_multiplicities() {
        assert_eq!(poly(&[(1, 0), (1, 0), (2, 3)]).bar(), poly(&[(1, 0), (2, 3)]));
        assert_eq!(DrinfeldPolynomial::one(a3()).bar(), DrinfeldPolynomial::one(a3()));
        let p = poly(&[(1, 3), (2, 0), (3, 3)]);
        assert_eq!(p.bar(), p);
    }

    #[test]
    fn duals() {
        assert_eq!(poly(&[(1, 3)]).dual(), poly(&[(3, -1)]));
        assert_eq!(poly(&[(1, 3)]).codual(), poly(&[(3, 7)]));
        assert!(DrinfeldPolynomial::one(a3()).dual().is_one());
    }

    #[test]
    fn division() {
        let p = poly(&[(1, 0), (1, 0), (2, 3)]);
        assert!(poly(&[(1, 0)]).divides(&p));
        assert_eq!(p.quotient(&poly(&[(1, 0), (2, 3)])).unwrap(), poly(&[(1, 0)]));
        let short = kr(1, 1, 2).expand(a3()).unwrap();
        let long = kr(1, 1, 3).expand(a3()).unwrap();
        assert!(!short.divides(&long));
        assert_eq!(long.quotient(&short), Err(Error::NotDivisible));
        let other = DrinfeldPolynomial::one(DynkinA::new(4).unwrap());
        assert!(matches!(p.quotient(&other), Err(Error::DiagramMismatch(3, 4))));
    }

    #[test]
    fn supports() {
        assert_eq!(poly(&[(1, 3), (2, 0), (3, 3)]).support(), BTreeSet::from([1, 2, 3]));
        assert_eq!(poly(&[(2, 0), (2, 6)]).support(), BTreeSet::from([2]));
        assert_eq!(poly(&[(2, 0), (2, 6)]).monochromatic_node(), Some(2));
        assert!(DrinfeldPolynomial::one(a3()).support().is_empty());
    }

    fn arb_poly() -> impl Strategy<Value = DrinfeldPolynomial> {
        prop::collection::vec((1usize..=3, -8i64..8), 0..8)
            .prop_map(|v| DrinfeldPolynomial::new(a3(), v.into_iter().map(|(i, a)| w(i, a))).unwrap())
    }

    proptest! {
        #[test]
        fn kr_shape(i in 1usize..=3, a in -20i64..20, r in 1u32..8) {
            let k = kr(i, a, r);
            let fs: Vec<_> = k.fundamentals().collect();
            prop_assert_eq!(fs.len(), r as usize);
            prop_assert!(fs.iter().all(|f| f.node == i));
            prop_assert_eq!(fs.first().unwrap().center, a - r as i64 + 1);
            prop_assert_eq!(fs.last().unwrap().center, a + r as i64 - 1);
            // (node, span) recovers the factor
            let lo = fs.first().unwrap().center;
            let hi = fs.last().unwrap().center;
            prop_assert_eq!(kr(i, (lo + hi) / 2, ((hi - lo) / 2 + 1) as u32), k);
        }

        #[test]
        fn bar_idempotent_and_divides(p in arb_poly()) {
            prop_assert_eq!(p.bar().bar(), p.bar());
            prop_assert!(p.bar().divides(&p));
        }

        #[test]
        fn duals_are_automorphisms(p in arb_poly(), q in arb_poly()) {
            let pq = p.times(&q).unwrap();
            prop_assert_eq!(pq.dual(), p.dual().times(&q.dual()).unwrap());
            prop_assert_eq!(pq.codual(), p.codual().times(&q.codual()).unwrap());
            prop_assert_eq!(p.dual().codual(), p.clone());
            prop_assert_eq!(p.codual().dual(), p);
        }

        #[test]
        fn quotient_inverts_product(p in arb_poly(), q in arb_poly()) {
            let pq = p.times(&q).unwrap();
            prop_assert!(q.divides(&pq));
            prop_assert_eq!(pq.quotient(&q).unwrap(), p);
        }
    }
}
