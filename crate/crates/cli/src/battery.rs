//! Seeded and exhaustive property batteries.
//!
//! Each battery returns a [`CriterionReport`]. Graph-level structural checks
//! (divisible q-factors are incomparable, p-bounds on monotone paths, mtos
//! enumeration against the brute-force oracle) run on every graph the
//! snake batteries produce and are collected in a [`Structural`].

use std::fmt;
use std::time::{Duration, Instant};

use qfact_core::{
    all_mtos_quochains, count_mtos_quochains, enumerate_mtos, has_snake_support, is_prime_snake,
    is_prime_snake_polynomial, is_q_factorization, monochromatic_equivalence_report, mtos_quochain_forms,
    prime_factorize_small, prime_factorize_snake_support, product, q_factorization, quochains_isomorphic,
    three_vertex_prime_check, DrinfeldPolynomial, DynkinA, FundamentalWeight, KrFactor, PQGraph, Route,
    DEFAULT_QUOCHAIN_BOUND,
};
use qfact_oracle::{
    brute_mtos, brute_qfact, check_path_bounds, directed_paths, divisible_comparable_pairs, iterated_bar_factorization,
    random_drinfeld, random_fusion_sequence, random_prime_snake, rng_for, Bounds,
};
use rand::Rng;

const KEEP_FAILURES: usize = 8;
const PATHS_PER_GRAPH: usize = 64;
// above this many quochains, compare canonical forms instead of listing
const QUOCHAIN_LISTING_LIMIT: u128 = 20_000;

pub const SEED_CONFLUENCE: u64 = 0x51_0001;
pub const SEED_FUSIONS: u64 = 0x51_0002;
pub const SEED_QUOCHAINS: u64 = 0x51_0003;

/// Case count and the first few failure messages.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failed += 1;
        if self.failures.len() < KEEP_FAILURES {
            self.failures.push(msg.into());
        }
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.case();
        if !ok {
            self.fail(msg());
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub tally: Tally,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.tally.failed == 0 && self.tally.cases > 0 && self.elapsed < self.limit
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} [PRIMARY] {}: {} ({} checks, {} failed, {:.2}s, limit {}s)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.tally.cases,
            self.tally.failed,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
        )?;
        for msg in &self.tally.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

fn timed(id: u8, title: &'static str, limit_secs: u64, body: impl FnOnce(&mut Tally)) -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    body(&mut tally);
    CriterionReport {
        id,
        title,
        tally,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit_secs),
    }
}

/// Structural checks accumulated across the snake batteries.
#[derive(Clone, Debug, Default)]
pub struct Structural {
    pub tally: Tally,
    pub elapsed: Duration,
}

impl Structural {
    /// Divisible q-factors are never comparable.
    pub fn q_factors(&mut self, g: &PQGraph, ctx: &dyn fmt::Display) {
        let start = Instant::now();
        let bad = divisible_comparable_pairs(g);
        self.tally.check(bad.is_empty(), || {
            format!("{ctx}: divisible comparable q-factors {bad:?}")
        });
        self.elapsed += start.elapsed();
    }

    /// p-bounds on directed paths and mtos enumeration against brute force.
    pub fn graph(&mut self, g: &PQGraph, ctx: &dyn fmt::Display) {
        let start = Instant::now();
        for mut path in directed_paths(g, PATHS_PER_GRAPH) {
            // arrows point down in center; read the path bottom-up
            path.reverse();
            let verdict = check_path_bounds(&path);
            self.tally.check(verdict.is_ok(), || {
                format!("{ctx}: path {path:?}: {}", verdict.unwrap_err())
            });
        }
        match (enumerate_mtos(g), brute_mtos(g)) {
            (Ok(fast), Ok(slow)) => self
                .tally
                .check(fast == slow, || format!("{ctx}: mtos {fast:?} vs brute {slow:?}")),
            (a, b) => self
                .tally
                .fail(format!("{ctx}: mtos enumeration failed: {a:?} / {b:?}")),
        }
        self.elapsed += start.elapsed();
    }

    pub fn report(self) -> CriterionReport {
        CriterionReport {
            id: 8,
            title: "structural checks on the graphs of criteria 4-6",
            tally: self.tally,
            elapsed: self.elapsed,
            limit: Duration::from_secs(540),
        }
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn diagram(n: usize) -> DynkinA {
    DynkinA::new(n).expect("positive rank")
}

/// Monochromatic three-q-factor alternating lines in A3, KR centers in
/// `[0,12]`, lengths up to 3: the three-vertex check agrees with the snake
/// route whenever the input has snake support.
pub fn line_consistency() -> CriterionReport {
    timed(
        2,
        "three-vertex check agrees with the snake route on monochromatic lines",
        60,
        |t| {
            let d = diagram(3);
            let mut compared = 0usize;
            for node in 1..=3 {
                let krs: Vec<KrFactor> = (0..=12)
                    .flat_map(|a| (1..=3).map(move |r| KrFactor::new(node, a, r).unwrap()))
                    .collect();
                for x in 0..krs.len() {
                    for y in x..krs.len() {
                        for z in y..krs.len() {
                            let triple = [krs[x], krs[y], krs[z]];
                            if !is_q_factorization(&triple) {
                                continue;
                            }
                            let g = PQGraph::build(d, triple).unwrap();
                            if !g.is_connected() || g.is_totally_ordered() {
                                continue;
                            }
                            let p = DrinfeldPolynomial::from_kr(d, triple).unwrap();
                            if q_factorization(&p) != sorted(triple.to_vec()) {
                                t.check(false, || format!("{p}: q-factorization is not {triple:?}"));
                                continue;
                            }
                            if !has_snake_support(&p) {
                                continue;
                            }
                            compared += 1;
                            match (three_vertex_prime_check(&p), prime_factorize_snake_support(&p)) {
                                (Ok(a), Ok(b)) => t.check(a.factor_multiset() == b.factor_multiset(), || {
                                    format!("{p}: three-vertex {:?} vs snake {:?}", a.factors, b.factors)
                                }),
                                (a, b) => t.fail(format!("{p}: {a:?} / {b:?}")),
                            }
                        }
                    }
                }
            }
            if compared == 0 {
                t.fail("no alternating line with snake support was generated");
            }
        },
    )
}

/// Random polynomials under random fusion schedules: one terminal multiset,
/// equal to the q-factorization, whose product is the input.
pub fn confluence(samples: u64, schedules: usize) -> CriterionReport {
    timed(3, "q-factorization confluence and round trip", 60, |t| {
        for k in 0..samples {
            let n = 1 + (k % 5) as usize;
            let bounds = Bounds {
                n,
                max_factors: 8,
                center_range: (-10, 10),
                snake_support_only: false,
            };
            let p = random_drinfeld(SEED_CONFLUENCE.wrapping_add(k), bounds).unwrap();
            let qf = q_factorization(&p);
            match brute_qfact(&p, schedules, SEED_CONFLUENCE ^ k) {
                Ok(brute) => t.check(brute == qf, || {
                    format!("{p}: schedules give {brute:?}, core gives {qf:?}")
                }),
                Err(e) => t.fail(format!("{p}: {e}")),
            }
            t.check(is_q_factorization(&qf), || {
                format!("{p}: {qf:?} still has a special pair")
            });
            let back = DrinfeldPolynomial::from_kr(p.diagram(), qf.iter().copied()).unwrap();
            t.check(back == p, || format!("{p}: expansion gives {back}"));
        }
    })
}

fn for_each_snake(n: usize, max_len: usize, max_extra: i64, visit: &mut impl FnMut(&[FundamentalWeight])) {
    fn grow(
        n: usize,
        max_len: usize,
        max_extra: i64,
        seq: &mut Vec<FundamentalWeight>,
        visit: &mut impl FnMut(&[FundamentalWeight]),
    ) {
        visit(seq);
        if seq.len() == max_len {
            return;
        }
        let last = *seq.last().unwrap();
        for node in 1..=n {
            let d = last.node.abs_diff(node) as i64;
            for extra in (2..=max_extra).step_by(2) {
                seq.push(FundamentalWeight::new(node, last.center + d + extra));
                grow(n, max_len, max_extra, seq, visit);
                seq.pop();
            }
        }
    }
    for node in 1..=n {
        grow(n, max_len, max_extra, &mut vec![FundamentalWeight::new(node, 0)], visit);
    }
}

/// Every snake in A3 and A4 with up to five entries and steps up to `d+8`,
/// starting at center 0: prime snake, connected fundamental graph and
/// totally ordered fundamental graph coincide.
pub fn snake_equivalence(structural: &mut Structural) -> CriterionReport {
    timed(4, "prime snake <=> connected <=> totally ordered (A3, A4)", 120, |t| {
        for n in [3, 4] {
            let d = diagram(n);
            for_each_snake(n, 5, 8, &mut |seq| {
                let p = DrinfeldPolynomial::new(d, seq.iter().copied()).unwrap();
                let g = PQGraph::fundamental(&p);
                let (prime, connected, ordered) = (is_prime_snake(seq, d), g.is_connected(), g.is_totally_ordered());
                t.check(prime == connected && connected == ordered, || {
                    format!("{p}: prime {prime}, connected {connected}, totally ordered {ordered}")
                });
                structural.graph(&g, &p);
                let q = PQGraph::q_factorization(&p);
                structural.q_factors(&q, &p);
                structural.graph(&q, &p);
            });
        }
    })
}

/// Random prime snakes under random fusion sequences that always involve a
/// fundamental vertex: every resulting graph is totally ordered.
pub fn fusion_preserves_order(samples: u64, sequences: usize, structural: &mut Structural) -> CriterionReport {
    timed(
        5,
        "fusions with a fundamental vertex keep prime snakes totally ordered",
        120,
        |t| {
            for k in 0..samples {
                let mut rng = rng_for(SEED_FUSIONS, k);
                let d = diagram(rng.random_range(1..=5));
                let len = rng.random_range(1..=7);
                let snake = random_prime_snake(&mut rng, d, len, (-10, 10)).unwrap();
                let p = DrinfeldPolynomial::new(d, snake).unwrap();
                let g = PQGraph::fundamental(&p);
                t.check(g.is_totally_ordered(), || {
                    format!("{p}: fundamental graph is not totally ordered")
                });
                let q = PQGraph::q_factorization(&p);
                structural.q_factors(&q, &p);
                structural.graph(&g, &p);
                for s in 0..sequences {
                    let chain = random_fusion_sequence(&g, &mut rng, len).unwrap();
                    for (step, h) in chain.iter().enumerate() {
                        let ctx = format!("{p} sequence {s} step {step}");
                        t.check(h.is_totally_ordered() && h.polynomial() == p, || {
                            format!("{ctx}: {h:?}")
                        });
                        structural.graph(h, &ctx);
                    }
                }
            }
        },
    )
}

/// Random snake-support polynomials of degree at most 10: every
/// mtos-quochain of the fundamental graph yields the snake-route factors.
pub fn quochain_uniqueness(samples: u64, structural: &mut Structural) -> CriterionReport {
    timed(
        6,
        "mtos-quochains of snake-support polynomials are unique and prime",
        300,
        |t| {
            for k in 0..samples {
                let n = 1 + (k % 5) as usize;
                let bounds = Bounds {
                    n,
                    max_factors: 10,
                    center_range: (-10, 10),
                    snake_support_only: true,
                };
                let p = random_drinfeld(SEED_QUOCHAINS.wrapping_add(k), bounds).unwrap();
                let g = PQGraph::fundamental(&p);
                t.check(g.len() <= 10 && has_snake_support(&p), || {
                    format!("{p}: generator out of bounds")
                });
                let route = match prime_factorize_snake_support(&p) {
                    Ok(r) => r,
                    Err(e) => {
                        t.fail(format!("{p}: {e}"));
                        continue;
                    }
                };
                let expected = route.factor_multiset();
                t.check(expected.iter().all(is_prime_snake_polynomial), || {
                    format!("{p}: non-prime-snake factor")
                });
                t.check(product(p.diagram(), &route.factors).as_ref() == Ok(&p), || {
                    format!("{p}: product differs")
                });
                check_quochains(t, &p, &g, &expected);
                structural.graph(&g, &p);
                let q = PQGraph::q_factorization(&p);
                structural.q_factors(&q, &p);
                structural.graph(&q, &p);
            }
        },
    )
}

fn check_quochains(t: &mut Tally, p: &DrinfeldPolynomial, g: &PQGraph, expected: &[DrinfeldPolynomial]) {
    let count = count_mtos_quochains(g).unwrap();
    t.check(count > 0, || format!("{p}: no mtos-quochain"));
    if count <= QUOCHAIN_LISTING_LIMIT {
        let cuts = all_mtos_quochains(g, DEFAULT_QUOCHAIN_BOUND).unwrap();
        t.check(cuts.len() as u128 == count, || {
            format!("{p}: {} quochains listed, {count} counted", cuts.len())
        });
        for cut in &cuts {
            let iso = quochains_isomorphic(&cuts[0], cut, g).unwrap();
            t.check(iso, || {
                format!("{p}: {:?} and {:?} are not isomorphic", cuts[0].parts, cut.parts)
            });
            let factors = sorted(cut.factors(g).unwrap());
            t.check(factors == expected, || {
                format!("{p}: quochain {:?} gives {factors:?}", cut.parts)
            });
        }
    } else {
        let forms = mtos_quochain_forms(g).unwrap();
        t.check(forms.len() == 1, || {
            format!("{p}: {} non-isomorphic quochains", forms.len())
        });
        for form in forms {
            let factors = sorted(
                form.iter()
                    .map(|part| DrinfeldPolynomial::from_kr(p.diagram(), part.iter().copied()).unwrap())
                    .collect(),
            );
            t.check(factors == expected, || format!("{p}: quochain form gives {factors:?}"));
        }
    }
}

/// Every monochromatic polynomial at node 2 of A3 with one to five factors
/// and centers in `[0,10]`.
pub fn monochromatic_battery() -> CriterionReport {
    timed(
        7,
        "monochromatic equivalences, coverage and iterated bars (A3, node 2)",
        180,
        |t| {
            let d = diagram(3);
            let mut centers = Vec::new();
            for_each_multiset(0, 10, 5, &mut centers, &mut |cs| {
                if cs.is_empty() {
                    return;
                }
                let p = DrinfeldPolynomial::new(d, cs.iter().map(|&a| FundamentalWeight::new(2, a))).unwrap();
                match monochromatic_equivalence_report(&p) {
                    Ok(r) => t.check(r.all_agree(), || format!("{p}: {r:?}")),
                    Err(e) => t.fail(format!("{p}: {e}")),
                }
                let result = match prime_factorize_small(&p) {
                    Ok(r) => r,
                    Err(e) => {
                        t.fail(format!("{p}: {e}"));
                        return;
                    }
                };
                t.check(result.status != Route::Unknown, || format!("{p}: status unknown"));
                t.check(qfact_core::check_factorization(&p, &result).is_ok(), || {
                    format!("{p}: invalid factorization")
                });
                match iterated_bar_factorization(&p) {
                    Ok(bars) => {
                        let bars = sorted(bars);
                        t.check(bars == result.factor_multiset(), || {
                            format!("{p}: {:?} vs bars {bars:?}", result.factors)
                        });
                    }
                    Err(e) => t.fail(format!("{p}: {e}")),
                }
            });
        },
    )
}

fn for_each_multiset(lo: i64, hi: i64, max_len: usize, acc: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    visit(acc);
    if acc.len() == max_len {
        return;
    }
    let from = acc.last().copied().unwrap_or(lo);
    for c in from..=hi {
        acc.push(c);
        for_each_multiset(lo, hi, max_len, acc, visit);
        acc.pop();
    }
}

/// Criteria 2 through 8 at their stated sizes, in order.
pub fn run_all() -> Vec<CriterionReport> {
    let mut structural = Structural::default();
    let mut reports = vec![line_consistency(), confluence(1000, 20)];
    reports.push(snake_equivalence(&mut structural));
    reports.push(fusion_preserves_order(500, 10, &mut structural));
    reports.push(quochain_uniqueness(300, &mut structural));
    reports.push(monochromatic_battery());
    reports.push(structural.report());
    reports
}
