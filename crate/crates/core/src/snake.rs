//! Snakes, prime snakes, snake support and `(i,n)`-segments.

use serde::Serialize;

use crate::dynkin::DynkinA;
use crate::error::{Error, Result};
use crate::graph::PQGraph;
use crate::reducibility::{in_red_set, red_set};
use crate::weights::{DrinfeldPolynomial, FundamentalWeight};

/// `a2 - a1 ∈ d(i1,i2) + 2Z_{>0}`.
pub fn in_snake_position(first: FundamentalWeight, second: FundamentalWeight) -> bool {
    let step = second.center - first.center;
    let d = first.node.abs_diff(second.node) as i64;
    step > d && (step - d) % 2 == 0
}

/// `a2 - a1 ∈ R_{i1,i2}`.
pub fn in_prime_snake_position(first: FundamentalWeight, second: FundamentalWeight, diagram: DynkinA) -> bool {
    diagram.contains(first.node)
        && diagram.contains(second.node)
        && in_red_set(
            diagram.full(),
            first.node,
            second.node,
            1,
            1,
            second.center - first.center,
        )
}

pub fn is_snake(seq: &[FundamentalWeight]) -> bool {
    seq.windows(2).all(|w| in_snake_position(w[0], w[1]))
}

pub fn is_prime_snake(seq: &[FundamentalWeight], diagram: DynkinA) -> bool {
    seq.windows(2).all(|w| in_prime_snake_position(w[0], w[1], diagram))
}

/// A validated snake: consecutive entries in snake position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Snake {
    diagram: DynkinA,
    pairs: Vec<FundamentalWeight>,
}

impl Snake {
    pub fn new(diagram: DynkinA, pairs: Vec<FundamentalWeight>) -> Result<Self> {
        for w in &pairs {
            diagram.check_node(w.node)?;
        }
        if let Some(bad) = pairs.windows(2).find(|w| !in_snake_position(w[0], w[1])) {
            return Err(Error::UnexpectedShape(format!(
                "{} and {} are not in snake position",
                bad[0], bad[1]
            )));
        }
        Ok(Self { diagram, pairs })
    }

    pub fn pairs(&self) -> &[FundamentalWeight] {
        &self.pairs
    }

    pub fn is_prime(&self) -> bool {
        is_prime_snake(&self.pairs, self.diagram)
    }

    /// `ω_{i,a}`, the product of the entries.
    pub fn polynomial(&self) -> DrinfeldPolynomial {
        DrinfeldPolynomial::new(self.diagram, self.pairs.iter().copied()).expect("nodes validated")
    }
}

/// Fundamental factors with multiplicity sorted by center, or `None` if two
/// of them share a center (such a multiset never orders into a snake).
pub fn center_sorted(p: &DrinfeldPolynomial) -> Option<Vec<FundamentalWeight>> {
    let mut seq: Vec<_> = p.fundamentals().collect();
    seq.sort_by_key(|w| w.center);
    seq.windows(2).all(|w| w[0].center < w[1].center).then_some(seq)
}

/// Whether `p` itself is a prime snake polynomial.
pub fn is_prime_snake_polynomial(p: &DrinfeldPolynomial) -> bool {
    center_sorted(p).is_some_and(|seq| is_prime_snake(&seq, p.diagram()))
}

/// Whether `p` is a snake polynomial.
pub fn is_snake_polynomial(p: &DrinfeldPolynomial) -> bool {
    center_sorted(p).is_some_and(|seq| is_snake(&seq))
}

/// `bar(p)` is a prime snake polynomial.
pub fn has_snake_support(p: &DrinfeldPolynomial) -> bool {
    is_prime_snake_polynomial(&p.bar())
}

/// An `(i,n)`-segment `k` with base center `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub node: usize,
    pub offsets: Vec<i64>,
    pub base: i64,
}

impl Segment {
    pub fn new(diagram: DynkinA, node: usize, offsets: Vec<i64>, base: i64) -> Result<Self> {
        diagram.check_node(node)?;
        if !segment_check(node, &offsets, diagram)? {
            return Err(Error::UnexpectedShape(format!(
                "{offsets:?} is not a segment at node {node}"
            )));
        }
        Ok(Self { node, offsets, base })
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn polynomial(&self, diagram: DynkinA) -> Result<DrinfeldPolynomial> {
        segment_poly(diagram, self.node, &self.offsets, self.base)
    }
}

/// Every consecutive difference lies in `R_{i,i}`.
pub fn segment_check(node: usize, offsets: &[i64], diagram: DynkinA) -> Result<bool> {
    let steps = red_set(diagram.full(), node, node, 1, 1)?;
    Ok(offsets.windows(2).all(|w| steps.contains(w[1] - w[0])))
}

/// `ϖ_{i,k,a} = ∏_s ω_{i,a+k_s}`.
pub fn segment_poly(diagram: DynkinA, node: usize, offsets: &[i64], base: i64) -> Result<DrinfeldPolynomial> {
    DrinfeldPolynomial::new(diagram, offsets.iter().map(|k| FundamentalWeight::new(node, base + k)))
}

/// The four graph/combinatorial conditions characterizing prime
/// monochromatic polynomials, each evaluated on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub segment_form: bool,
    pub prime_snake: bool,
    pub fundamental_graph_totally_ordered: bool,
    pub q_graph_totally_ordered: bool,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        let v = self.segment_form;
        self.prime_snake == v && self.fundamental_graph_totally_ordered == v && self.q_graph_totally_ordered == v
    }
}

pub fn monochromatic_equivalence_report(p: &DrinfeldPolynomial) -> Result<EquivalenceReport> {
    let node = p.monochromatic_node().ok_or(Error::NotMonochromatic)?;
    let diagram = p.diagram();

    // (i): write p as ϖ_{i,k,a} with k increasing from 0
    let mut centers: Vec<i64> = p.fundamentals().map(|w| w.center).collect();
    centers.sort();
    let base = centers[0];
    let offsets: Vec<i64> = centers.iter().map(|c| c - base).collect();
    let segment_form = segment_check(node, &offsets, diagram)? && segment_poly(diagram, node, &offsets, base)? == *p;

    Ok(EquivalenceReport {
        segment_form,
        prime_snake: is_prime_snake_polynomial(p),
        fundamental_graph_totally_ordered: PQGraph::fundamental(p).is_totally_ordered(),
        q_graph_totally_ordered: PQGraph::q_factorization(p).is_totally_ordered(),
    })
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

    fn seq(v: &[(usize, i64)]) -> Vec<FundamentalWeight> {
        v.iter().map(|&(i, a)| w(i, a)).collect()
    }

    fn poly(v: &[(usize, i64)]) -> DrinfeldPolynomial {
        DrinfeldPolynomial::new(a3(), seq(v)).unwrap()
    }

    #[test]
    fn positions() {
        assert!(in_snake_position(w(2, 0), w(1, 3)));
        assert!(in_snake_position(w(2, 0), w(2, 6)));
        assert!(!in_snake_position(w(1, 3), w(3, 3)));
        assert!(in_prime_snake_position(w(2, 0), w(1, 3), a3()));
        assert!(!in_prime_snake_position(w(2, 0), w(2, 6), a3()));
        assert!(in_prime_snake_position(w(2, 0), w(2, 4), a3()));
    }

    #[test]
    fn snakes() {
        let s = seq(&[(1, 0), (2, 3), (3, 6)]);
        assert!(is_prime_snake(&s, a3()) && is_snake(&s));
        let s = seq(&[(2, 0), (2, 6)]);
        assert!(is_snake(&s) && !is_prime_snake(&s, a3()));
        let s = seq(&[(1, 5)]);
        assert!(is_snake(&s) && is_prime_snake(&s, a3()));
        assert!(Snake::new(a3(), seq(&[(1, 3), (3, 3)])).is_err());
        assert!(Snake::new(a3(), seq(&[(2, 0), (2, 6)])).is_ok_and(|s| !s.is_prime()));
    }

    #[test]
    fn snake_support() {
        assert!(has_snake_support(&poly(&[(1, 3), (1, 3), (2, 0)])));
        assert!(!has_snake_support(&poly(&[(1, 3), (2, 0), (3, 3)])));
        assert!(has_snake_support(&poly(&[(1, 5)])));
        assert!(!is_prime_snake_polynomial(&poly(&[(1, 3), (1, 3), (2, 0)])));
    }

    #[test]
    fn segments() {
        assert!(segment_check(2, &[0, 2, 6], a3()).unwrap());
        assert!(!segment_check(2, &[0, 3], a3()).unwrap());
        assert!(segment_check(2, &[0], a3()).unwrap());
        assert_eq!(segment_poly(a3(), 2, &[0, 2], 5).unwrap(), poly(&[(2, 5), (2, 7)]));
        assert_eq!(segment_poly(a3(), 1, &[0], 0).unwrap(), poly(&[(1, 0)]));
        assert_eq!(segment_poly(a3(), 2, &[0, 4], 0).unwrap(), poly(&[(2, 0), (2, 4)]));
        assert!(Segment::new(a3(), 2, vec![0, 3], 0).is_err());
        assert_eq!(
            Segment::new(a3(), 2, vec![0, 4], 1).unwrap().polynomial(a3()).unwrap(),
            poly(&[(2, 1), (2, 5)])
        );
    }

    #[test]
    fn equivalence_reports() {
        let all = |b| EquivalenceReport {
            segment_form: b,
            prime_snake: b,
            fundamental_graph_totally_ordered: b,
            q_graph_totally_ordered: b,
        };
        assert_eq!(
            monochromatic_equivalence_report(&poly(&[(2, 0), (2, 4)])).unwrap(),
            all(true)
        );
        assert_eq!(
            monochromatic_equivalence_report(&poly(&[(2, 0), (2, 6)])).unwrap(),
            all(false)
        );
        assert_eq!(
            monochromatic_equivalence_report(&poly(&[(1, 0), (1, 0), (1, 2)])).unwrap(),
            all(false)
        );
        assert_eq!(
            monochromatic_equivalence_report(&poly(&[(1, 0), (2, 3)])),
            Err(Error::NotMonochromatic)
        );
        assert_eq!(
            monochromatic_equivalence_report(&poly(&[])),
            Err(Error::NotMonochromatic)
        );
    }

    fn arb_seq(n: usize) -> impl Strategy<Value = Vec<FundamentalWeight>> {
        prop::collection::vec((1..=n, 1i64..8), 1..6).prop_map(|v| {
            let mut c = 0;
            v.into_iter()
                .map(|(i, step)| {
                    c += step;
                    w(i, c)
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn prime_position_implies_position(i in 1usize..=4, j in 1usize..=4, step in -3i64..14) {
            let d = DynkinA::new(4).unwrap();
            if in_prime_snake_position(w(i, 0), w(j, step), d) {
                prop_assert!(in_snake_position(w(i, 0), w(j, step)));
            }
        }

        #[test]
        fn deleting_an_entry_keeps_a_snake(s in arb_seq(4), k in 0usize..6) {
            if is_snake(&s) {
                let mut t = s.clone();
                t.remove(k % s.len());
                prop_assert!(is_snake(&t));
            }
        }

        #[test]
        fn segments_are_monochromatic_prime_snakes(i in 1usize..=3, steps in prop::collection::vec(1i64..9, 0..5)) {
            let mut offsets = vec![0];
            for s in steps {
                offsets.push(offsets.last().unwrap() + s);
            }
            let as_snake: Vec<_> = offsets.iter().map(|k| w(i, *k)).collect();
            prop_assert_eq!(segment_check(i, &offsets, a3()).unwrap(), is_prime_snake(&as_snake, a3()));
        }
    }
}
