//! Brute-force oracles and seeded generators.
//!
//! Everything here is written against the raw definitions and shares no
//! algorithmic code with `qfact-core`; it only borrows the value types.

use std::collections::BTreeSet;
use std::fmt;

use qfact_core::{
    is_prime_snake_polynomial, red_set, DrinfeldPolynomial, DynkinA, FundamentalWeight, KrFactor, PQGraph, VertexId,
};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BRUTE_MTOS_BOUND: usize = 16;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("fusion schedules disagree:\n  {first}\n  {second}")]
    ConfluenceViolation { first: Schedule, second: Schedule },
    #[error("graph has {size} vertices, oracle bound is {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Core(#[from] qfact_core::Error),
}

pub type Result<T, E = OracleError> = std::result::Result<T, E>;

/// Deterministic generator for `(seed, stream)`; distinct streams are
/// independent sequences under the same key.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

// (node, lowest center, highest center)
type Str = (usize, i64, i64);

/// The fusions performed by one run of the string-merging worklist and
/// where it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub trial: usize,
    pub merges: Vec<(KrFactor, KrFactor)>,
    pub terminal: Vec<KrFactor>,
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trial {}:", self.trial)?;
        for (x, y) in &self.merges {
            write!(f, " {x}+{y}")?;
        }
        write!(f, " =>")?;
        for k in &self.terminal {
            write!(f, " {k}")?;
        }
        Ok(())
    }
}

fn to_kr(s: Str) -> KrFactor {
    KrFactor {
        node: s.0,
        center: (s.1 + s.2) / 2,
        length: ((s.2 - s.1) / 2 + 1) as u32,
    }
}

fn mergeable(x: Str, y: Str) -> bool {
    let nested = (x.1 <= y.1 && y.2 <= x.2) || (y.1 <= x.1 && x.2 <= y.2);
    x.0 == y.0 && (x.1 - y.1).rem_euclid(2) == 0 && x.1 <= y.2 + 2 && y.1 <= x.2 + 2 && !nested
}

fn merge_run(p: &DrinfeldPolynomial, rng: &mut impl Rng, trial: usize) -> Schedule {
    let mut strings: Vec<Str> = p.fundamentals().map(|w| (w.node, w.center, w.center)).collect();
    let mut merges = Vec::new();
    loop {
        let mut pairs = Vec::new();
        for x in 0..strings.len() {
            for y in x + 1..strings.len() {
                if mergeable(strings[x], strings[y]) {
                    pairs.push((x, y));
                }
            }
        }
        let Some(&(x, y)) = pairs.choose(rng) else {
            break;
        };
        let (s, t) = (strings[x], strings[y]);
        merges.push((to_kr(s), to_kr(t)));
        strings.swap_remove(y);
        strings.swap_remove(x);
        strings.push((s.0, s.1.min(t.1), s.2.max(t.2)));
        let (lo, hi) = (s.1.max(t.1), s.2.min(t.2));
        if lo <= hi {
            strings.push((s.0, lo, hi));
        }
        // canonical order: runs differ only through the rng
        strings.sort();
    }
    let mut terminal: Vec<KrFactor> = strings.into_iter().map(to_kr).collect();
    terminal.sort();
    Schedule {
        trial,
        merges,
        terminal,
    }
}

/// Runs the fusion worklist under `trials` random schedules and returns the
/// common terminal multiset, sorted.
pub fn brute_qfact(p: &DrinfeldPolynomial, trials: usize, seed: u64) -> Result<Vec<KrFactor>> {
    let mut first: Option<Schedule> = None;
    for trial in 0..trials.max(1) {
        let run = merge_run(p, &mut rng_for(seed, trial as u64), trial);
        match &first {
            None => first = Some(run),
            Some(f) if f.terminal != run.terminal => {
                return Err(OracleError::ConfluenceViolation {
                    first: f.clone(),
                    second: run,
                });
            }
            Some(_) => {}
        }
    }
    Ok(first.expect("at least one trial").terminal)
}

/// All inclusion-maximal vertex sets whose induced subgraph is totally
/// ordered, by testing every subset.
pub fn brute_mtos(g: &PQGraph) -> Result<Vec<BTreeSet<VertexId>>> {
    let ids: Vec<VertexId> = g.vertex_ids().collect();
    let n = ids.len();
    if n > BRUTE_MTOS_BOUND {
        return Err(OracleError::BoundExceeded {
            size: n,
            bound: BRUTE_MTOS_BOUND,
        });
    }
    let adj: Vec<Vec<bool>> = ids
        .iter()
        .map(|&v| ids.iter().map(|&w| g.has_arrow(v, w)).collect())
        .collect();
    let mut ordered = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|x| mask >> x & 1 == 1).collect();
        let mut reach: Vec<Vec<bool>> = members
            .iter()
            .map(|&x| members.iter().map(|&y| adj[x][y]).collect())
            .collect();
        let k = members.len();
        for m in 0..k {
            let via = reach[m].clone();
            for row in reach.iter_mut().filter(|row| row[m]) {
                row.iter_mut().zip(&via).for_each(|(cell, &hop)| *cell |= hop);
            }
        }
        if (0..k).all(|x| (x + 1..k).all(|y| reach[x][y] || reach[y][x])) {
            ordered.push(mask);
        }
    }
    ordered.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<u32> = Vec::new();
    for m in ordered {
        if maximal.iter().all(|&big| m & big != m) {
            maximal.push(m);
        }
    }
    let mut sets: Vec<BTreeSet<VertexId>> = maximal
        .into_iter()
        .map(|m| (0..n).filter(|x| m >> x & 1 == 1).map(|x| ids[x]).collect())
        .collect();
    sets.sort();
    Ok(sets)
}

/// Monochromatic prime factorization by repeatedly splitting off one copy of
/// every center in each maximal segment of the distinct centers.
pub fn iterated_bar_factorization(p: &DrinfeldPolynomial) -> Result<Vec<DrinfeldPolynomial>> {
    let diagram = p.diagram();
    if p.is_one() {
        return Ok(Vec::new());
    }
    let node = p
        .monochromatic_node()
        .ok_or_else(|| OracleError::Precondition(format!("{p} is not supported on a single node")))?;
    let widest = 2 * node.min(diagram.rank() + 1 - node) as i64;
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_one() {
        let centers: BTreeSet<i64> = rest.fundamentals().map(|w| w.center).collect();
        let mut runs: Vec<Vec<i64>> = Vec::new();
        for parity in [0, 1] {
            let mut run: Vec<i64> = Vec::new();
            for &c in centers.iter().filter(|c| c.rem_euclid(2) == parity) {
                if run.last().is_some_and(|&last| c - last > widest) {
                    runs.push(std::mem::take(&mut run));
                }
                run.push(c);
            }
            if !run.is_empty() {
                runs.push(run);
            }
        }
        runs.sort();
        for run in runs {
            let piece = DrinfeldPolynomial::new(diagram, run.iter().map(|&c| FundamentalWeight::new(node, c)))?;
            if !is_prime_snake_polynomial(&piece) {
                return Err(OracleError::Precondition(format!("{piece} is not a prime snake")));
            }
            rest = rest.quotient(&piece)?;
            out.push(piece);
        }
    }
    Ok(out)
}

/// Bounds for [`random_drinfeld`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n: usize,
    pub max_factors: usize,
    pub center_range: (i64, i64),
    pub snake_support_only: bool,
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.max_factors == 0 || self.center_range.0 > self.center_range.1 {
            return Err(OracleError::Precondition(format!("invalid bounds {self:?}")));
        }
        Ok(())
    }
}

/// Reproducible random polynomial. Ordinary draws pick between one and
/// `max_factors` fundamentals uniformly. Snake-support draws walk a random
/// prime snake from a center in range and then repeat random entries, never
/// exceeding `max_factors` in total.
pub fn random_drinfeld(seed: u64, bounds: Bounds) -> Result<DrinfeldPolynomial> {
    bounds.validate()?;
    let mut rng = rng_for(seed, 0);
    let diagram = DynkinA::new(bounds.n)?;
    let (lo, hi) = bounds.center_range;
    if !bounds.snake_support_only {
        let count = rng.random_range(1..=bounds.max_factors);
        let ws: Vec<FundamentalWeight> = (0..count)
            .map(|_| FundamentalWeight::new(rng.random_range(1..=bounds.n), rng.random_range(lo..=hi)))
            .collect();
        return Ok(DrinfeldPolynomial::new(diagram, ws)?);
    }
    let len = rng.random_range(1..=bounds.max_factors);
    let snake = random_prime_snake(&mut rng, diagram, len, (lo, hi))?;
    let mut ws = snake.clone();
    for _ in 0..rng.random_range(0..=bounds.max_factors - len) {
        ws.push(*snake.choose(&mut rng).expect("nonempty snake"));
    }
    Ok(DrinfeldPolynomial::new(diagram, ws)?)
}

/// A prime snake with `len` entries: random nodes, first center drawn from
/// `start`, each step drawn uniformly from `R_{i_k,i_{k+1}}`.
pub fn random_prime_snake(
    rng: &mut impl Rng,
    diagram: DynkinA,
    len: usize,
    start: (i64, i64),
) -> Result<Vec<FundamentalWeight>> {
    let mut out: Vec<FundamentalWeight> = Vec::with_capacity(len);
    for _ in 0..len {
        let node = rng.random_range(1..=diagram.rank());
        let center = match out.last() {
            None => rng.random_range(start.0..=start.1),
            Some(prev) => {
                let steps = red_set(diagram.full(), prev.node, node, 1, 1)?;
                prev.center + steps.values().choose(rng).expect("R_{i,j} is never empty")
            }
        };
        out.push(FundamentalWeight::new(node, center));
    }
    Ok(out)
}

fn special(x: &KrFactor, y: &KrFactor) -> bool {
    let s = |k: &KrFactor| (k.node, k.center - k.length as i64 + 1, k.center + k.length as i64 - 1);
    mergeable(s(x), s(y))
}

/// A random chain of fusions starting at `g`, each fusing a special pair
/// that contains a fundamental vertex. Returns every graph produced, in
/// order. Stops after `max_steps` fusions or when no such pair is left.
pub fn random_fusion_sequence(g: &PQGraph, rng: &mut impl Rng, max_steps: usize) -> Result<Vec<PQGraph>> {
    let mut current = g.clone();
    let mut out = Vec::new();
    for _ in 0..max_steps {
        let labelled: Vec<(VertexId, KrFactor)> = current.vertices().collect();
        let mut pairs = Vec::new();
        for (x, (v, kv)) in labelled.iter().enumerate() {
            for (w, kw) in &labelled[x + 1..] {
                if (kv.length == 1 || kw.length == 1) && special(kv, kw) {
                    pairs.push((*v, *w));
                }
            }
        }
        let Some(&(v, w)) = pairs.choose(rng) else {
            break;
        };
        let (v, w) = if rng.random_bool(0.5) { (v, w) } else { (w, v) };
        current = current.fuse_vertices(v, w)?;
        out.push(current.clone());
    }
    Ok(out)
}

/// Directed paths with at least two vertices, following arrows, listed by
/// labels. Enumeration stops after `limit` paths.
pub fn directed_paths(g: &PQGraph, limit: usize) -> Vec<Vec<KrFactor>> {
    fn extend(g: &PQGraph, path: &mut Vec<VertexId>, out: &mut Vec<Vec<KrFactor>>, limit: usize) {
        let last = *path.last().expect("nonempty path");
        let next: Vec<VertexId> = g.arrows().filter(|(a, _)| *a == last).map(|(_, b)| b).collect();
        for w in next {
            if out.len() >= limit {
                return;
            }
            path.push(w);
            out.push(path.iter().map(|v| g.label(*v).expect("vertex of g")).collect());
            extend(g, path, out, limit);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for v in g.vertex_ids() {
        extend(g, &mut vec![v], &mut out, limit);
    }
    out
}

/// `p_{l,k}` with `m_l - m_k = r_l + r_k + d(i_l,i_k) - 2 p_{l,k}`, or
/// `None` if the parity is wrong.
pub fn path_p(l: &KrFactor, k: &KrFactor) -> Option<i64> {
    let twice = i64::from(l.length) + i64::from(k.length) + l.node.abs_diff(k.node) as i64 - (l.center - k.center);
    (twice % 2 == 0).then_some(twice / 2)
}

/// Checks the p-bounds along a path whose centers strictly increase:
/// `p_{N,1} < p_{l,k} < min(r_k, r_l)` for `k < l`, `(k,l) ≠ (1,N)`, and
/// `p_{N,1} < min(r_1, r_N)`.
pub fn check_path_bounds(path: &[KrFactor]) -> std::result::Result<(), String> {
    let n = path.len();
    if n < 2 {
        return Ok(());
    }
    if path.windows(2).any(|w| w[1].center <= w[0].center) {
        return Err("centers are not increasing".into());
    }
    let p = |l: usize, k: usize| path_p(&path[l], &path[k]).ok_or_else(|| format!("parity fails at ({k},{l})"));
    let outer = p(n - 1, 0)?;
    if outer >= i64::from(path[0].length.min(path[n - 1].length)) {
        return Err(format!("p_(N,1) = {outer} is not below min(r_1, r_N)"));
    }
    for k in 0..n {
        for l in k + 1..n {
            if (k, l) == (0, n - 1) {
                continue;
            }
            let v = p(l, k)?;
            if v <= outer || v >= i64::from(path[k].length.min(path[l].length)) {
                return Err(format!("p_({},{}) = {v} outside ({outer}, min r)", l + 1, k + 1));
            }
        }
    }
    Ok(())
}

/// `ω_{i,a,r}` divides `ω_{i,b,s}`: same node, string contained.
pub fn kr_divides(small: &KrFactor, big: &KrFactor) -> bool {
    small.node == big.node
        && big.min_center() <= small.min_center()
        && small.max_center() <= big.max_center()
        && (small.center - big.center + i64::from(small.length) - i64::from(big.length)).rem_euclid(2) == 0
}

/// Pairs of distinct vertices where one label divides the other and the two
/// are comparable in the arrow order.
pub fn divisible_comparable_pairs(g: &PQGraph) -> Vec<(VertexId, VertexId)> {
    let order = g.reachability_order();
    let labelled: Vec<(VertexId, KrFactor)> = g.vertices().collect();
    let mut bad = Vec::new();
    for (x, (v, kv)) in labelled.iter().enumerate() {
        for (w, kw) in &labelled[x + 1..] {
            if (kr_divides(kv, kw) || kr_divides(kw, kv)) && order.comparable(*v, *w) {
                bad.push((*v, *w));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_predicate() {
        assert!(mergeable((1, 0, 0), (1, 2, 2)));
        assert!(mergeable((1, 0, 4), (1, 2, 8)));
        assert!(!mergeable((1, 0, 0), (1, 4, 4)));
        assert!(!mergeable((1, 0, 0), (1, 1, 1)));
        assert!(!mergeable((1, 0, 4), (1, 2, 2)));
        assert!(!mergeable((1, 0, 0), (2, 2, 2)));
    }

    #[test]
    fn p_values() {
        let k = |i, a, r| KrFactor::new(i, a, r).unwrap();
        assert_eq!(path_p(&k(1, 2, 1), &k(1, 0, 1)), Some(0));
        assert_eq!(path_p(&k(2, 3, 1), &k(1, 0, 1)), Some(0));
        assert_eq!(path_p(&k(2, 2, 1), &k(1, 0, 1)), None);
    }

    #[test]
    fn divisibility() {
        let k = |i, a, r| KrFactor::new(i, a, r).unwrap();
        assert!(kr_divides(&k(1, 0, 1), &k(1, 1, 2)));
        assert!(kr_divides(&k(1, 1, 2), &k(1, 1, 2)));
        assert!(!kr_divides(&k(1, 1, 1), &k(1, 1, 2)));
        assert!(!kr_divides(&k(1, 1, 2), &k(1, 0, 1)));
        assert!(!kr_divides(&k(2, 0, 1), &k(1, 1, 2)));
    }
}
