//! Arithmetic on the Dynkin diagram of type `A_n` and its connected
//! subdiagrams. Nodes are numbered `1..=n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Dynkin diagram of type `A_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinA {
    rank: usize,
}

impl DynkinA {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn contains(&self, node: usize) -> bool {
        (1..=self.rank).contains(&node)
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if self.contains(node) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, rank: self.rank })
        }
    }

    /// The whole diagram as a subdiagram.
    pub fn full(&self) -> Subdiagram {
        Subdiagram { lo: 1, hi: self.rank }
    }

    pub fn subdiagram(&self, lo: usize, hi: usize) -> Result<Subdiagram> {
        if lo == 0 || lo > hi || hi > self.rank {
            return Err(Error::InvalidSubdiagram {
                lo,
                hi,
                rank: self.rank,
            });
        }
        Ok(Subdiagram { lo, hi })
    }

    /// Number of edges on the path between `i` and `j`.
    pub fn distance(&self, i: usize, j: usize) -> Result<usize> {
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(i.abs_diff(j))
    }

    /// Distance from `sub` to the boundary nodes `{1, n}`.
    pub fn boundary_distance(&self, sub: Subdiagram) -> Result<usize> {
        self.check_subdiagram(sub)?;
        Ok(self.full().inner_boundary_distance(sub))
    }

    /// `i*`, the image of `i` under the longest Weyl group element.
    pub fn dual_node(&self, node: usize) -> Result<usize> {
        self.full().dual_node(node)
    }

    pub fn dual_coxeter(&self) -> usize {
        self.rank + 1
    }

    pub fn check_subdiagram(&self, sub: Subdiagram) -> Result<()> {
        if sub.hi > self.rank {
            return Err(Error::InvalidSubdiagram {
                lo: sub.lo,
                hi: sub.hi,
                rank: self.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for DynkinA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.rank)
    }
}

/// A connected subdiagram `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subdiagram {
    lo: usize,
    hi: usize,
}

impl Subdiagram {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidSubdiagram { lo, hi, rank: hi });
        }
        Ok(Self { lo, hi })
    }

    /// The interval `[i, j]` spanned by two nodes, in either order.
    pub fn spanned(i: usize, j: usize) -> Result<Self> {
        Self::new(i.min(j), i.max(j))
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, node: usize) -> bool {
        (self.lo..=self.hi).contains(&node)
    }

    pub fn contains_sub(&self, other: Subdiagram) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if self.contains(node) {
            Ok(())
        } else {
            Err(Error::NodeOutsideSubdiagram {
                node,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }

    /// Reflection `w0^J`, the nontrivial automorphism of this subdiagram.
    pub fn dual_node(&self, node: usize) -> Result<usize> {
        self.check_node(node)?;
        Ok(self.lo + self.hi - node)
    }

    /// Dual Coxeter number of the type A diagram on this interval.
    pub fn dual_coxeter(&self) -> usize {
        self.len() + 1
    }

    /// Distance from `inner` to the boundary of `self`. Callers guarantee
    /// containment.
    pub(crate) fn inner_boundary_distance(&self, inner: Subdiagram) -> usize {
        debug_assert!(self.contains_sub(inner));
        (inner.lo - self.lo).min(self.hi - inner.hi)
    }

    /// Distance from `inner` to `{lo, hi}`.
    pub fn boundary_distance_of(&self, inner: Subdiagram) -> Result<usize> {
        if !self.contains_sub(inner) {
            let node = if self.contains(inner.lo) { inner.hi } else { inner.lo };
            return Err(Error::NodeOutsideSubdiagram {
                node,
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(self.inner_boundary_distance(inner))
    }
}

impl fmt::Display for Subdiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(n: usize) -> DynkinA {
        DynkinA::new(n).unwrap()
    }

    #[test]
    fn distances() {
        assert_eq!(a(3).distance(1, 3).unwrap(), 2);
        assert_eq!(a(3).distance(2, 2).unwrap(), 0);
        assert_eq!(a(5).distance(2, 5).unwrap(), 3);
        assert!(matches!(a(3).distance(0, 1), Err(Error::NodeOutOfRange { .. })));
        assert!(a(3).distance(1, 4).is_err());
    }

    #[test]
    fn boundary_distances() {
        let d = a(3);
        assert_eq!(d.boundary_distance(d.subdiagram(2, 2).unwrap()).unwrap(), 1);
        assert_eq!(d.boundary_distance(d.subdiagram(1, 2).unwrap()).unwrap(), 0);
        let d = a(5);
        assert_eq!(d.boundary_distance(d.subdiagram(3, 3).unwrap()).unwrap(), 2);
        assert!(a(2).boundary_distance(Subdiagram::new(1, 3).unwrap()).is_err());
        assert!(a(3).subdiagram(2, 1).is_err());
        assert!(a(3).subdiagram(0, 1).is_err());
    }

    #[test]
    fn duals_and_coxeter() {
        let j = Subdiagram::new(1, 3).unwrap();
        assert_eq!(j.dual_node(1).unwrap(), 3);
        assert_eq!(Subdiagram::new(2, 2).unwrap().dual_node(2).unwrap(), 2);
        assert_eq!(Subdiagram::new(1, 2).unwrap().dual_node(1).unwrap(), 2);
        assert!(Subdiagram::new(1, 2).unwrap().dual_node(3).is_err());
        assert_eq!(j.dual_coxeter(), 4);
        assert_eq!(Subdiagram::new(1, 1).unwrap().dual_coxeter(), 2);
        assert_eq!(Subdiagram::new(1, 2).unwrap().dual_coxeter(), 3);
        assert_eq!(a(3).dual_coxeter(), 4);
        assert_eq!(a(3).dual_node(1).unwrap(), 3);
    }

    proptest! {
        #[test]
        fn distance_is_additive_along_intervals(n in 1usize..12, x in 0usize..12, y in 0usize..12, z in 0usize..12) {
            let d = a(n);
            let mut v = [x % n + 1, y % n + 1, z % n + 1];
            v.sort();
            let [i, j, k] = v;
            prop_assert_eq!(d.distance(i, k).unwrap(), d.distance(i, j).unwrap() + d.distance(j, k).unwrap());
            prop_assert_eq!(d.distance(i, k).unwrap(), d.distance(k, i).unwrap());
        }

        #[test]
        fn dual_is_involution(lo in 1usize..10, len in 0usize..10, off in 0usize..10) {
            let j = Subdiagram::new(lo, lo + len).unwrap();
            let i = lo + off % (len + 1);
            prop_assert_eq!(j.dual_node(j.dual_node(i).unwrap()).unwrap(), i);
        }

        #[test]
        fn singleton_boundary_distance(n in 1usize..15, x in 0usize..15) {
            let d = a(n);
            let i = x % n + 1;
            let s = d.subdiagram(i, i).unwrap();
            prop_assert_eq!(d.boundary_distance(s).unwrap(), (i - 1).min(n - i));
        }
    }
}
