//! Pseudo q-factorization graphs.
//!
//! Vertices carry KR labels and the arrow set is a function of the labels:
//! `(v, w)` is an arrow iff `a_v - a_w ∈ R_{i_v,i_w}^{r_v,r_w}`. Every
//! constructor and derivation recomputes arrows from labels, so two graphs
//! with the same label multiset are isomorphic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinA;
use crate::error::{Error, Result};
use crate::qfact::{fuse, q_factorization};
use crate::reducibility::arrow_between;
use crate::weights::{DrinfeldPolynomial, KrFactor};

/// Creation-ordered vertex identifier. Never reused within a graph's
/// lineage, so ids stay valid across fusions and restrictions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQGraph {
    diagram: DynkinA,
    vertices: BTreeMap<VertexId, KrFactor>,
    arrows: BTreeSet<(VertexId, VertexId)>,
    next_id: u32,
}

impl PQGraph {
    pub fn empty(diagram: DynkinA) -> Self {
        Self {
            diagram,
            vertices: BTreeMap::new(),
            arrows: BTreeSet::new(),
            next_id: 0,
        }
    }

    /// One vertex per label instance, ids assigned in input order.
    pub fn build(diagram: DynkinA, labels: impl IntoIterator<Item = KrFactor>) -> Result<Self> {
        let mut g = Self::empty(diagram);
        for k in labels {
            diagram.check_node(k.node)?;
            if k.length == 0 {
                return Err(Error::ZeroLength);
            }
            g.vertices.insert(VertexId(g.next_id), k);
            g.next_id += 1;
        }
        g.rebuild_arrows();
        Ok(g)
    }

    /// `G_f(π)`: one length-1 vertex per fundamental factor.
    pub fn fundamental(p: &DrinfeldPolynomial) -> Self {
        Self::build(p.diagram(), p.fundamentals().map(KrFactor::fundamental)).expect("nodes validated by polynomial")
    }

    /// `G(π)`: one vertex per q-factor.
    pub fn q_factorization(p: &DrinfeldPolynomial) -> Self {
        Self::build(p.diagram(), q_factorization(p)).expect("nodes validated by polynomial")
    }

    fn rebuild_arrows(&mut self) {
        self.arrows = self.expected_arrows();
    }

    fn expected_arrows(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut arrows = BTreeSet::new();
        for (v, kv) in &self.vertices {
            for (w, kw) in &self.vertices {
                if v != w && arrow_between(self.diagram, kv, kw) {
                    arrows.insert((*v, *w));
                }
            }
        }
        arrows
    }

    /// Recomputes arrows from labels and compares with the stored set; also
    /// checks every arrow descends in center.
    pub fn check_arrows(&self) -> Result<()> {
        if self.expected_arrows() != self.arrows {
            return Err(Error::Invariant("arrow set is not determined by labels".into()));
        }
        for (v, w) in &self.arrows {
            if self.vertices[v].center <= self.vertices[w].center {
                return Err(Error::Invariant(format!("arrow {v}->{w} does not descend in center")));
            }
        }
        Ok(())
    }

    pub fn diagram(&self) -> DynkinA {
        self.diagram
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, KrFactor)> + '_ {
        self.vertices.iter().map(|(v, k)| (*v, *k))
    }

    pub fn label(&self, v: VertexId) -> Result<KrFactor> {
        self.vertices.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn arrows(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arrows.iter().copied()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn has_arrow(&self, from: VertexId, to: VertexId) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// Sorted label multiset; the isomorphism invariant.
    pub fn label_multiset(&self) -> Vec<KrFactor> {
        let mut labels: Vec<_> = self.vertices.values().copied().collect();
        labels.sort();
        labels
    }

    /// `π_G`, the product of all labels.
    pub fn polynomial(&self) -> DrinfeldPolynomial {
        DrinfeldPolynomial::from_kr(self.diagram, self.vertices.values().copied()).expect("labels validated")
    }

    /// `π_H` for the subgraph induced on `subset`.
    pub fn polynomial_of(&self, subset: &BTreeSet<VertexId>) -> Result<DrinfeldPolynomial> {
        let labels = subset.iter().map(|v| self.label(*v)).collect::<Result<Vec<_>>>()?;
        DrinfeldPolynomial::from_kr(self.diagram, labels)
    }

    /// `G ⊗ H`: disjoint union with arrows recomputed. Vertices of `other`
    /// are renumbered after those of `self`.
    pub fn tensor(&self, other: &PQGraph) -> Result<Self> {
        if self.diagram != other.diagram {
            return Err(Error::DiagramMismatch(self.diagram.rank(), other.diagram.rank()));
        }
        let mut g = self.clone();
        for k in other.vertices.values() {
            g.vertices.insert(VertexId(g.next_id), *k);
            g.next_id += 1;
        }
        g.rebuild_arrows();
        Ok(g)
    }

    /// Vertex-induced subgraph. Ids are preserved.
    pub fn induced_subgraph(&self, subset: &BTreeSet<VertexId>) -> Result<Self> {
        let mut vertices = BTreeMap::new();
        for v in subset {
            vertices.insert(*v, self.label(*v)?);
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|(v, w)| subset.contains(v) && subset.contains(w))
            .copied()
            .collect();
        Ok(Self {
            diagram: self.diagram,
            vertices,
            arrows,
            next_id: self.next_id,
        })
    }

    /// Removes `subset` and returns the induced remainder.
    pub fn without(&self, subset: &BTreeSet<VertexId>) -> Result<Self> {
        if let Some(v) = subset.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let rest: BTreeSet<_> = self.vertex_ids().filter(|v| !subset.contains(v)).collect();
        self.induced_subgraph(&rest)
    }

    /// The strict partial order generated by arrows (tail above head).
    pub fn reachability_order(&self) -> Reachability {
        Reachability::new(self)
    }

    pub fn is_totally_ordered(&self) -> bool {
        let n = self.len();
        self.reachability_order().comparable_pairs() == n * n.saturating_sub(1) / 2
    }

    /// Weakly connected components, each sorted, listed by smallest id.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut neighbours: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.keys().map(|v| (*v, Vec::new())).collect();
        for (v, w) in &self.arrows {
            neighbours.get_mut(v).unwrap().push(*w);
            neighbours.get_mut(w).unwrap().push(*v);
        }
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for start in self.vertices.keys() {
            if !seen.insert(*start) {
                continue;
            }
            let mut component = BTreeSet::from([*start]);
            let mut stack = vec![*start];
            while let Some(v) = stack.pop() {
                for w in &neighbours[&v] {
                    if seen.insert(*w) {
                        component.insert(*w);
                        stack.push(*w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Label-preserving bijection exists; equivalent to equal label
    /// multisets because arrows are determined by labels.
    pub fn is_isomorphic(&self, other: &PQGraph) -> bool {
        self.diagram == other.diagram && self.label_multiset() == other.label_multiset()
    }

    /// Fuses two vertices in special position (`G' ≺ G`). A pure fusion
    /// removes `w` and relabels `v` with the product; otherwise `v` takes the
    /// union string and `w` the intersection.
    pub fn fuse_vertices(&self, v: VertexId, w: VertexId) -> Result<Self> {
        let (kv, kw) = (self.label(v)?, self.label(w)?);
        if v == w {
            return Err(Error::NotSpecialPosition(kv, kw));
        }
        let fusion = fuse(&kv, &kw)?;
        let mut g = self.clone();
        g.vertices.insert(v, fusion.big);
        match fusion.small {
            Some(small) => {
                g.vertices.insert(w, small);
            }
            None => {
                g.vertices.remove(&w);
            }
        }
        g.rebuild_arrows();
        Ok(g)
    }

    /// Graphviz rendering; vertices labelled `kr(i,a,r)#id`, listed by id.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for (v, k) in &self.vertices {
            let _ = writeln!(out, "  v{} [label=\"{}{}\"];", v.0, k, v);
        }
        for (v, w) in &self.arrows {
            let _ = writeln!(out, "  v{} -> v{};", v.0, w.0);
        }
        out.push_str("}\n");
        out
    }
}

/// Transitive closure of the arrow relation.
#[derive(Clone, Debug)]
pub struct Reachability {
    ids: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    // reach[x][y]: a nonempty directed path runs from x to y
    reach: Vec<Vec<bool>>,
}

impl Reachability {
    fn new(g: &PQGraph) -> Self {
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(x, v)| (*v, x)).collect();
        let n = ids.len();
        let mut succ = vec![Vec::new(); n];
        for (v, w) in g.arrows() {
            succ[index[&v]].push(index[&w]);
        }
        let mut reach = vec![vec![false; n]; n];
        for (x, row) in reach.iter_mut().enumerate() {
            let mut stack = succ[x].clone();
            while let Some(y) = stack.pop() {
                if !row[y] {
                    row[y] = true;
                    stack.extend(succ[y].iter().copied());
                }
            }
        }
        Self { ids, index, reach }
    }

    /// `lower < upper` in the induced order: a path runs from `upper` down
    /// to `lower`.
    pub fn less(&self, lower: VertexId, upper: VertexId) -> bool {
        match (self.index.get(&upper), self.index.get(&lower)) {
            (Some(&x), Some(&y)) => self.reach[x][y],
            _ => false,
        }
    }

    pub fn comparable(&self, v: VertexId, w: VertexId) -> bool {
        self.less(v, w) || self.less(w, v)
    }

    /// Pairs `(lower, upper)` in the order.
    pub fn relations(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (x, row) in self.reach.iter().enumerate() {
            for (y, r) in row.iter().enumerate() {
                if *r {
                    out.push((self.ids[y], self.ids[x]));
                }
            }
        }
        out.sort();
        out
    }

    pub fn comparable_pairs(&self) -> usize {
        self.reach.iter().map(|row| row.iter().filter(|r| **r).count()).sum()
    }
}
