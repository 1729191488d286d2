//! Multicuts, mtos-quochains and prime factorizations.
//!
//! An induced subgraph is totally ordered exactly when its vertices, sorted
//! by center, are joined consecutively by arrows, i.e. when it is the vertex
//! set of a directed path. Maximal totally ordered subgraphs (mtos) are
//! therefore the inclusion-maximal vertex sets of source-to-sink paths.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::dynkin::Subdiagram;
use crate::error::{Error, Result};
use crate::graph::{PQGraph, VertexId};
use crate::reducibility::in_red_set;
use crate::snake::{has_snake_support, is_prime_snake_polynomial};
use crate::weights::{product, DrinfeldPolynomial, KrFactor};

/// Default vertex bound for exhaustive quochain enumeration.
pub const DEFAULT_QUOCHAIN_BOUND: usize = 14;

const MAX_MASK_VERTICES: usize = 128;

/// Ordered partition of a graph's vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Multicut {
    pub parts: Vec<BTreeSet<VertexId>>,
}

impl Multicut {
    pub fn new(parts: Vec<BTreeSet<VertexId>>) -> Self {
        Self { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts are nonempty, disjoint and cover the vertices of `g`.
    pub fn validate(&self, g: &PQGraph) -> Result<()> {
        let mut seen = BTreeSet::new();
        for part in &self.parts {
            if part.is_empty() {
                return Err(Error::InvalidMulticut("empty part".into()));
            }
            for v in part {
                if !g.contains(*v) {
                    return Err(Error::InvalidMulticut(format!("vertex {v} is not in the graph")));
                }
                if !seen.insert(*v) {
                    return Err(Error::InvalidMulticut(format!("vertex {v} appears twice")));
                }
            }
        }
        if seen.len() != g.len() {
            return Err(Error::InvalidMulticut("parts do not cover the vertex set".into()));
        }
        Ok(())
    }

    /// `π` of each part.
    pub fn factors(&self, g: &PQGraph) -> Result<Vec<DrinfeldPolynomial>> {
        self.parts.iter().map(|part| g.polynomial_of(part)).collect()
    }

    /// Sorted list of the parts' sorted label multisets. Two multicuts of
    /// the same graph are isomorphic iff these agree.
    pub fn canonical_form(&self, g: &PQGraph) -> Result<Vec<Vec<KrFactor>>> {
        let mut form = self
            .parts
            .iter()
            .map(|part| {
                let mut labels = part.iter().map(|v| g.label(*v)).collect::<Result<Vec<_>>>()?;
                labels.sort();
                Ok(labels)
            })
            .collect::<Result<Vec<_>>>()?;
        form.sort();
        Ok(form)
    }
}

/// Bitmask view of a graph, for enumeration.
struct Dense {
    ids: Vec<VertexId>,
    succ: Vec<u128>,
    pred: Vec<u128>,
}

impl Dense {
    fn new(g: &PQGraph) -> Result<Self> {
        if g.len() > MAX_MASK_VERTICES {
            return Err(Error::BoundExceeded {
                size: g.len(),
                bound: MAX_MASK_VERTICES,
            });
        }
        let ids: Vec<VertexId> = g.vertex_ids().collect();
        let pos = |v: VertexId| ids.binary_search(&v).expect("vertex of g");
        let mut succ = vec![0u128; ids.len()];
        let mut pred = vec![0u128; ids.len()];
        for (v, w) in g.arrows() {
            succ[pos(v)] |= 1 << pos(w);
            pred[pos(w)] |= 1 << pos(v);
        }
        Ok(Self { ids, succ, pred })
    }

    fn all(&self) -> u128 {
        if self.ids.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.ids.len()) - 1
        }
    }

    fn to_set(&self, mask: u128) -> BTreeSet<VertexId> {
        bits(mask).map(|x| self.ids[x]).collect()
    }

    /// Maximal totally ordered subsets of the subgraph induced on `alive`.
    fn mtos(&self, alive: u128) -> Vec<u128> {
        let mut paths = HashSet::new();
        for x in bits(alive) {
            if self.pred[x] & alive == 0 {
                self.walk(x, 1 << x, alive, &mut paths);
            }
        }
        let mut by_size: Vec<u128> = paths.into_iter().collect();
        by_size.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut maximal: Vec<u128> = Vec::new();
        for m in by_size {
            if maximal.iter().all(|k| m & !k != 0) {
                maximal.push(m);
            }
        }
        maximal
    }

    fn walk(&self, x: usize, acc: u128, alive: u128, out: &mut HashSet<u128>) {
        let next = self.succ[x] & alive;
        if next == 0 {
            out.insert(acc);
            return;
        }
        for y in bits(next) {
            self.walk(y, acc | 1 << y, alive, out);
        }
    }
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let x = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            x
        })
    })
}

fn sorted_sets(mut sets: Vec<BTreeSet<VertexId>>) -> Vec<BTreeSet<VertexId>> {
    sets.sort_by(|a, b| a.iter().cmp(b.iter()));
    sets
}

/// All maximal totally ordered vertex subsets of `g`.
pub fn enumerate_mtos(g: &PQGraph) -> Result<Vec<BTreeSet<VertexId>>> {
    let dense = Dense::new(g)?;
    let sets = dense.mtos(dense.all()).into_iter().map(|m| dense.to_set(m)).collect();
    Ok(sorted_sets(sets))
}

/// Tie-break among mtos candidates: sorted label list, then id set.
fn greedy_key(g: &PQGraph, set: &BTreeSet<VertexId>) -> (Vec<KrFactor>, Vec<VertexId>) {
    let mut labels: Vec<KrFactor> = set.iter().map(|v| g.label(*v).expect("vertex of g")).collect();
    labels.sort();
    (labels, set.iter().copied().collect())
}

/// The greedy mtos-quochain: each part is the least mtos of the remainder.
pub fn mtos_quochain(g: &PQGraph) -> Result<Multicut> {
    let dense = Dense::new(g)?;
    let mut alive = dense.all();
    let mut parts = Vec::new();
    while alive != 0 {
        let best = dense
            .mtos(alive)
            .into_iter()
            .map(|m| dense.to_set(m))
            .min_by_key(|s| greedy_key(g, s))
            .expect("nonempty graph has an mtos");
        for v in &best {
            alive &= !(1 << dense.ids.binary_search(v).unwrap());
        }
        parts.push(best);
    }
    Ok(Multicut::new(parts))
}

/// Every quochain whose parts are mtos of their stage remainders.
pub fn all_mtos_quochains(g: &PQGraph, bound: usize) -> Result<Vec<Multicut>> {
    if g.len() > bound {
        return Err(Error::BoundExceeded { size: g.len(), bound });
    }
    let dense = Dense::new(g)?;
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    quochains_from(&dense, dense.all(), &mut memo, &mut prefix, &mut out);
    let mut cuts: Vec<Multicut> = out
        .into_iter()
        .map(|masks| Multicut::new(masks.into_iter().map(|m| dense.to_set(m)).collect()))
        .collect();
    cuts.sort();
    Ok(cuts)
}

fn quochains_from(
    dense: &Dense,
    alive: u128,
    memo: &mut HashMap<u128, Vec<u128>>,
    prefix: &mut Vec<u128>,
    out: &mut Vec<Vec<u128>>,
) {
    if alive == 0 {
        out.push(prefix.clone());
        return;
    }
    let choices = memo.entry(alive).or_insert_with(|| dense.mtos(alive)).clone();
    for m in choices {
        prefix.push(m);
        quochains_from(dense, alive & !m, memo, prefix, out);
        prefix.pop();
    }
}

/// Whether every part of `cut` is an mtos of its stage remainder.
pub fn is_mtos_quochain(g: &PQGraph, cut: &Multicut) -> Result<bool> {
    cut.validate(g)?;
    let mut rest = g.clone();
    for part in &cut.parts {
        if !enumerate_mtos(&rest)?.contains(part) {
            return Ok(false);
        }
        rest = rest.without(part)?;
    }
    Ok(true)
}

/// Same length and a part-matching with pairwise isomorphic parts.
pub fn quochains_isomorphic(q1: &Multicut, q2: &Multicut, g: &PQGraph) -> Result<bool> {
    q1.validate(g)?;
    q2.validate(g)?;
    Ok(q1.canonical_form(g)? == q2.canonical_form(g)?)
}

/// Number of mtos-quochains of `g`, without listing them.
pub fn count_mtos_quochains(g: &PQGraph) -> Result<u128> {
    fn count(dense: &Dense, alive: u128, memo: &mut HashMap<u128, u128>) -> u128 {
        if alive == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&alive) {
            return c;
        }
        let c = dense
            .mtos(alive)
            .into_iter()
            .map(|m| count(dense, alive & !m, memo))
            .fold(0u128, u128::saturating_add);
        memo.insert(alive, c);
        c
    }
    let dense = Dense::new(g)?;
    Ok(count(&dense, dense.all(), &mut HashMap::new()))
}

/// Canonical form of a quochain: sorted list of sorted part labels.
pub type QuochainForm = Vec<Vec<KrFactor>>;

/// The distinct canonical forms over all mtos-quochains of `g`, computed
/// per remainder so isomorphic branches are merged early.
pub fn mtos_quochain_forms(g: &PQGraph) -> Result<BTreeSet<QuochainForm>> {
    fn forms(
        g: &PQGraph,
        dense: &Dense,
        alive: u128,
        memo: &mut HashMap<u128, BTreeSet<QuochainForm>>,
    ) -> BTreeSet<QuochainForm> {
        if alive == 0 {
            return BTreeSet::from([Vec::new()]);
        }
        if let Some(f) = memo.get(&alive) {
            return f.clone();
        }
        let mut out = BTreeSet::new();
        for m in dense.mtos(alive) {
            let mut part: Vec<KrFactor> = bits(m).map(|x| g.label(dense.ids[x]).expect("vertex of g")).collect();
            part.sort();
            for mut rest in forms(g, dense, alive & !m, memo) {
                let at = rest.partition_point(|p| *p < part);
                rest.insert(at, part.clone());
                out.insert(rest);
            }
        }
        memo.insert(alive, out.clone());
        out
    }
    let dense = Dense::new(g)?;
    Ok(forms(g, &dense, dense.all(), &mut HashMap::new()))
}

/// Whether `g` has a unique mtos-decomposition up to isomorphism.
pub fn unique_mtos_decomposition(g: &PQGraph) -> Result<bool> {
    Ok(mtos_quochain_forms(g)?.len() <= 1)
}

/// Which argument produced a factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    SnakeSupportRoute,
    ThreeVertexRoute,
    ComponentRoute,
    Prime,
    Unknown,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::SnakeSupportRoute => "snake-support-route",
            Route::ThreeVertexRoute => "three-vertex-route",
            Route::ComponentRoute => "component-route",
            Route::Prime => "prime",
            Route::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationResult {
    pub status: Route,
    pub factors: Vec<DrinfeldPolynomial>,
}

impl FactorizationResult {
    fn routed(route: Route, factors: Vec<DrinfeldPolynomial>) -> Self {
        let status = if factors.len() == 1 && route != Route::Unknown {
            Route::Prime
        } else {
            route
        };
        Self { status, factors }
    }

    /// Factors sorted, for comparisons that ignore order.
    pub fn factor_multiset(&self) -> Vec<DrinfeldPolynomial> {
        let mut f = self.factors.clone();
        f.sort();
        f
    }

    pub fn product(&self, p: &DrinfeldPolynomial) -> Result<DrinfeldPolynomial> {
        product(p.diagram(), &self.factors)
    }
}

/// Prime factorization of a polynomial with snake support: per connected
/// component of the fundamental graph, split off one copy of each distinct
/// fundamental and recurse on what is left.
pub fn prime_factorize_snake_support(p: &DrinfeldPolynomial) -> Result<FactorizationResult> {
    if !has_snake_support(p) {
        return Err(Error::NoSnakeSupport);
    }
    let mut factors = Vec::new();
    split_bars(p, &mut factors)?;
    Ok(FactorizationResult::routed(Route::SnakeSupportRoute, factors))
}

fn split_bars(p: &DrinfeldPolynomial, out: &mut Vec<DrinfeldPolynomial>) -> Result<()> {
    let g = PQGraph::fundamental(p);
    for component in g.connected_components() {
        let piece = g.polynomial_of(&component)?;
        let top = piece.bar();
        let rest = piece.quotient(&top)?;
        out.push(top);
        if !rest.is_one() {
            split_bars(&rest, out)?;
        }
    }
    Ok(())
}

/// Data of a three-vertex alternating line `i_1 - i - i_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingLine {
    pub middle: KrFactor,
    pub outer: [KrFactor; 2],
    /// Absolute center difference between the middle and each outer vertex.
    pub gaps: [i64; 2],
    pub middle_is_sink: bool,
    pub conditions: [LineConditions; 2],
}

/// The four conditions for splitting off the outer factor `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineConditions {
    pub interval: Subdiagram,
    pub other_node_inside: bool,
    pub other_gap_reducible: bool,
    pub shifted_gap_reducible: bool,
    pub length_bound: bool,
}

impl LineConditions {
    pub fn all(&self) -> bool {
        self.other_node_inside && self.other_gap_reducible && self.shifted_gap_reducible && self.length_bound
    }
}

/// Classifies `g` (three vertices, connected, not totally ordered) as an
/// alternating line and evaluates the splitting conditions.
pub fn alternating_line(g: &PQGraph) -> Result<AlternatingLine> {
    if g.len() != 3 {
        return Err(Error::WrongVertexCount {
            expected: 3,
            found: g.len(),
        });
    }
    if g.arrow_count() != 2 || !g.is_connected() || g.is_totally_ordered() {
        return Err(Error::UnexpectedShape("not an alternating line".into()));
    }
    let ids: Vec<VertexId> = g.vertex_ids().collect();
    let degree = |v: VertexId| g.arrows().filter(|(a, b)| *a == v || *b == v).count();
    let mid = *ids
        .iter()
        .find(|v| degree(**v) == 2)
        .ok_or_else(|| Error::UnexpectedShape("no middle vertex".into()))?;
    let outer_ids: Vec<VertexId> = ids.iter().copied().filter(|v| *v != mid).collect();
    let middle = g.label(mid)?;
    let outer = [g.label(outer_ids[0])?, g.label(outer_ids[1])?];
    let middle_is_sink = g.has_arrow(outer_ids[0], mid);
    let gaps = [
        (outer[0].center - middle.center).abs(),
        (outer[1].center - middle.center).abs(),
    ];

    let diagram = g.diagram();
    let n = diagram.rank();
    let cross = outer[0].node.abs_diff(outer[1].node) as i64;
    let mut conditions = Vec::with_capacity(2);
    for j in 0..2 {
        let k = 1 - j;
        let (i, ij, ik) = (middle.node, outer[j].node, outer[k].node);
        let (r, rj, rk) = (middle.length, outer[j].length, outer[k].length);
        let (mj, mk) = (gaps[j], gaps[k]);

        // smallest I_j ⊇ [i, i_j] with m_j ∈ R_{i,i_j,I_j}^{r,r_j}
        let top = i64::from(r) + i64::from(rj) + i.abs_diff(ij) as i64 - mj;
        if top % 2 != 0 || top / 2 >= i64::from(r.min(rj)) {
            return Err(Error::Invariant(format!(
                "gap {mj} is not a reducibility value for {middle} and {}",
                outer[j]
            )));
        }
        let slack = (-(top / 2)).max(0) as usize;
        let (lo, hi) = (i.min(ij), i.max(ij));
        if lo <= slack || hi + slack > n {
            return Err(Error::Invariant(format!("no subdiagram of A{n} realizes gap {mj}")));
        }
        let interval = Subdiagram::new(lo - slack, hi + slack)?;

        let other_node_inside = interval.contains(ik);
        let other_gap_reducible = other_node_inside && in_red_set(interval, i, ik, r, rk, mk);
        let shifted_gap_reducible = other_node_inside && {
            let reflected = interval.dual_node(ij)?;
            let shifted = mk - mj + interval.dual_coxeter() as i64;
            in_red_set(interval, reflected, ik, rj, rk, shifted)
        };
        let length_bound = mj + i64::from(rj) <= mk + i64::from(rk) + cross;
        conditions.push(LineConditions {
            interval,
            other_node_inside,
            other_gap_reducible,
            shifted_gap_reducible,
            length_bound,
        });
    }
    Ok(AlternatingLine {
        middle,
        outer,
        gaps,
        middle_is_sink,
        conditions: [conditions[0], conditions[1]],
    })
}

fn component_factors(g: &PQGraph) -> Result<Vec<DrinfeldPolynomial>> {
    g.connected_components().iter().map(|c| g.polynomial_of(c)).collect()
}

/// Prime factorization for polynomials whose q-factorization graph has
/// exactly three vertices.
pub fn three_vertex_prime_check(p: &DrinfeldPolynomial) -> Result<FactorizationResult> {
    let g = PQGraph::q_factorization(p);
    if g.len() != 3 {
        return Err(Error::WrongVertexCount {
            expected: 3,
            found: g.len(),
        });
    }
    if !g.is_connected() {
        return Ok(FactorizationResult::routed(
            Route::ComponentRoute,
            component_factors(&g)?,
        ));
    }
    if g.is_totally_ordered() {
        return Ok(FactorizationResult::routed(Route::Prime, vec![p.clone()]));
    }
    let line = alternating_line(&g)?;
    for j in 0..2 {
        if line.conditions[j].all() {
            let split = line.outer[j].expand(p.diagram())?;
            let rest = p.quotient(&split)?;
            return Ok(FactorizationResult::routed(Route::ThreeVertexRoute, vec![split, rest]));
        }
    }
    Ok(FactorizationResult::routed(Route::Prime, vec![p.clone()]))
}

/// Dispatches to the first applicable criterion: snake support, connected
/// components of `G(π)`, total order, three-vertex lines. Anything else is
/// reported as `unknown`.
pub fn prime_factorize_small(p: &DrinfeldPolynomial) -> Result<FactorizationResult> {
    if has_snake_support(p) {
        return prime_factorize_snake_support(p);
    }
    let g = PQGraph::q_factorization(p);
    let components = g.connected_components();
    if components.len() > 1 {
        let mut factors = Vec::new();
        let mut unknown = false;
        for c in &components {
            let sub = prime_factorize_small(&g.polynomial_of(c)?)?;
            unknown |= sub.status == Route::Unknown;
            factors.extend(sub.factors);
        }
        let route = if unknown { Route::Unknown } else { Route::ComponentRoute };
        return Ok(FactorizationResult { status: route, factors });
    }
    if g.is_totally_ordered() {
        return Ok(FactorizationResult::routed(Route::Prime, vec![p.clone()]));
    }
    if g.len() == 3 {
        return three_vertex_prime_check(p);
    }
    Ok(FactorizationResult::routed(Route::Unknown, vec![p.clone()]))
}

/// Checks the invariants every factorization must satisfy.
pub fn check_factorization(p: &DrinfeldPolynomial, result: &FactorizationResult) -> Result<()> {
    if result.product(p)? != *p {
        return Err(Error::Invariant("factor product differs from the input".into()));
    }
    if result.status == Route::Prime && result.factors.len() != 1 {
        return Err(Error::Invariant("prime status with several factors".into()));
    }
    if result.status == Route::SnakeSupportRoute && !result.factors.iter().all(is_prime_snake_polynomial) {
        return Err(Error::Invariant("snake-support factor is not a prime snake".into()));
    }
    Ok(())
}
