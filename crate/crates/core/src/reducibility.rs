//! Reducibility sets `R_{i,j}^{r,s}` and the special-position sets
//! `R_i^{r,s}`, together with the reducibility and orientation criteria for
//! pairs of KR factors.

use serde::Serialize;

use crate::dynkin::{DynkinA, Subdiagram};
use crate::error::{Error, Result};
use crate::weights::KrFactor;

/// A finite set of positive center differences, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RedSet(Vec<i64>);

impl RedSet {
    /// The set `{base - 2p : lo <= p < hi}`.
    fn from_range(base: i64, lo: i64, hi: i64) -> Self {
        let mut values: Vec<i64> = (lo..hi).map(|p| base - 2 * p).collect();
        values.reverse();
        Self(values)
    }

    pub fn contains(&self, m: i64) -> bool {
        self.0.binary_search(&m).is_ok()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &RedSet) -> bool {
        self.0.iter().all(|m| other.contains(*m))
    }
}

/// `R_i^{r,s} = {r+s-2p : 0 <= p < min(r,s)}`.
pub fn special_set(r: u32, s: u32) -> RedSet {
    let (r, s) = (i64::from(r), i64::from(s));
    RedSet::from_range(r + s, 0, r.min(s))
}

/// `R_{i,j,J}^{r,s} = {r+s+d(i,j)-2p : -d([i,j],∂J) <= p < min(r,s)}`.
pub fn red_set(sub: Subdiagram, i: usize, j: usize, r: u32, s: u32) -> Result<RedSet> {
    sub.check_node(i)?;
    sub.check_node(j)?;
    if r == 0 || s == 0 {
        return Err(Error::ZeroLength);
    }
    let slack = sub.inner_boundary_distance(Subdiagram::spanned(i, j)?) as i64;
    let (r, s) = (i64::from(r), i64::from(s));
    Ok(RedSet::from_range(r + s + i.abs_diff(j) as i64, -slack, r.min(s)))
}

/// Membership `m ∈ R_{i,j,J}^{r,s}` without materializing the set. Nodes
/// must lie in `sub`.
pub(crate) fn in_red_set(sub: Subdiagram, i: usize, j: usize, r: u32, s: u32, m: i64) -> bool {
    let slack = (i.min(j) - sub.lo()).min(sub.hi() - i.max(j)) as i64;
    let top = i64::from(r) + i64::from(s) + i.abs_diff(j) as i64 - m;
    if top % 2 != 0 {
        return false;
    }
    let p = top / 2;
    -slack <= p && p < i64::from(r.min(s))
}

/// Signed arrow rule: `a_1 - a_2 ∈ R_{i_1,i_2}^{r_1,r_2}` over the full
/// diagram.
pub(crate) fn arrow_between(diagram: DynkinA, from: &KrFactor, to: &KrFactor) -> bool {
    in_red_set(
        diagram.full(),
        from.node,
        to.node,
        from.length,
        to.length,
        from.center - to.center,
    )
}

/// Whether `V(k1) ⊗ V(k2)` is reducible: `|a - b| ∈ R_{i,j}^{r,s}`.
pub fn is_reducible_pair(k1: &KrFactor, k2: &KrFactor, diagram: DynkinA) -> Result<bool> {
    diagram.check_node(k1.node)?;
    diagram.check_node(k2.node)?;
    Ok(in_red_set(
        diagram.full(),
        k1.node,
        k2.node,
        k1.length,
        k2.length,
        (k1.center - k2.center).abs(),
    ))
}

/// For a reducible pair, whether `V(k1) ⊗ V(k2)` is highest-ℓ-weight,
/// i.e. whether the arrow points from `k1` to `k2`.
pub fn hlw_first(k1: &KrFactor, k2: &KrFactor, diagram: DynkinA) -> Result<bool> {
    if !is_reducible_pair(k1, k2, diagram)? {
        return Err(Error::IrreduciblePair(*k1, *k2));
    }
    Ok(k1.center > k2.center)
}
