//! `qfact scan`: run the per-polynomial property sweep over seeded random
//! inputs.
//!
//! Output: `{"bounds","seed","count","checked","violations":[{"input","check","detail"}],"candidates":[input]}`.
//! A candidate is an input whose q-factorization graph has a unique
//! mtos-decomposition while `factorize` reports `unknown`.

use std::str::FromStr;

use qfact_core::{
    check_factorization, enumerate_mtos, has_snake_support, mtos_quochain_forms, prime_factorize_small,
    prime_factorize_snake_support, q_factorization, unique_mtos_decomposition, DrinfeldPolynomial, PQGraph, Route,
    DEFAULT_QUOCHAIN_BOUND,
};
use qfact_oracle::{
    brute_mtos, brute_qfact, check_path_bounds, directed_paths, divisible_comparable_pairs, random_drinfeld, Bounds,
    BRUTE_MTOS_BOUND,
};
use serde::Serialize;

/// `n=5,factors=8,centers=-10:10[,snake]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds(pub Bounds);

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds(Bounds {
            n: 4,
            max_factors: 6,
            center_range: (-6, 6),
            snake_support_only: false,
        })
    }
}

impl FromStr for ScanBounds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut b = ScanBounds::default().0;
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (key, value) = item.split_once('=').unwrap_or((item, ""));
            let int = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("{key}: {e}"));
            match key.trim() {
                "n" => b.n = int(value)?.try_into().map_err(|_| "n must be positive".to_string())?,
                "factors" => {
                    b.max_factors = int(value)?
                        .try_into()
                        .map_err(|_| "factors must be positive".to_string())?
                }
                "centers" => {
                    let (lo, hi) = value.split_once(':').ok_or("centers must be lo:hi")?;
                    b.center_range = (int(lo)?, int(hi)?);
                }
                "snake" => b.snake_support_only = true,
                other => return Err(format!("unknown bound `{other}`")),
            }
        }
        b.validate().map_err(|e| e.to_string())?;
        Ok(ScanBounds(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub input: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub bounds: String,
    pub seed: u64,
    pub count: u64,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub candidates: Vec<String>,
}

fn bounds_text(b: &Bounds) -> String {
    let mut s = format!(
        "n={},factors={},centers={}:{}",
        b.n, b.max_factors, b.center_range.0, b.center_range.1
    );
    if b.snake_support_only {
        s.push_str(",snake");
    }
    s
}

/// Checks one polynomial. Returns the number of checks made.
pub fn sweep_one(
    p: &DrinfeldPolynomial,
    seed: u64,
    violations: &mut Vec<Violation>,
    candidates: &mut Vec<String>,
) -> usize {
    let mut checked = 0;
    let mut flag = |ok: bool, check: &'static str, detail: &dyn Fn() -> String| {
        checked += 1;
        if !ok {
            violations.push(Violation {
                input: p.to_string(),
                check,
                detail: detail(),
            });
        }
    };

    let qf = q_factorization(p);
    match brute_qfact(p, 8, seed) {
        Ok(brute) => flag(brute == qf, "confluence", &|| {
            format!("schedules {brute:?}, core {qf:?}")
        }),
        Err(e) => flag(false, "confluence", &|| e.to_string()),
    }
    let back = DrinfeldPolynomial::from_kr(p.diagram(), qf.iter().copied());
    flag(back.as_ref() == Ok(p), "round-trip", &|| format!("{back:?}"));

    let result = prime_factorize_small(p);
    let status = result.as_ref().map(|r| r.status).ok();
    match &result {
        Ok(r) => {
            let verdict = check_factorization(p, r);
            flag(verdict.is_ok(), "factorization", &|| format!("{verdict:?}"));
        }
        Err(e) => flag(false, "factorization", &|| e.to_string()),
    }

    let gf = PQGraph::fundamental(p);
    let gq = PQGraph::q_factorization(p);
    let bad = divisible_comparable_pairs(&gq);
    flag(bad.is_empty(), "divisible-incomparable", &|| format!("{bad:?}"));
    for g in [&gf, &gq] {
        for mut path in directed_paths(g, 64) {
            path.reverse();
            let verdict = check_path_bounds(&path);
            flag(verdict.is_ok(), "path-bounds", &|| format!("{path:?}: {verdict:?}"));
        }
        if g.len() <= BRUTE_MTOS_BOUND {
            let (fast, slow) = (enumerate_mtos(g), brute_mtos(g));
            let same = matches!((&fast, &slow), (Ok(a), Ok(b)) if a == b);
            flag(same, "mtos", &|| format!("{fast:?} vs {slow:?}"));
        }
    }

    if has_snake_support(p) && gf.len() <= DEFAULT_QUOCHAIN_BOUND {
        let forms = mtos_quochain_forms(&gf);
        let route = prime_factorize_snake_support(p).map(|r| r.factor_multiset());
        let agree = match (&forms, &route) {
            (Ok(forms), Ok(expected)) => {
                forms.len() == 1
                    && forms.iter().all(|form| {
                        let mut f: Vec<DrinfeldPolynomial> = form
                            .iter()
                            .map(|part| DrinfeldPolynomial::from_kr(p.diagram(), part.iter().copied()).unwrap())
                            .collect();
                        f.sort();
                        f == *expected
                    })
            }
            _ => false,
        };
        flag(agree, "quochain-uniqueness", &|| format!("{forms:?} vs {route:?}"));
    }

    if status == Some(Route::Unknown)
        && gq.len() <= DEFAULT_QUOCHAIN_BOUND
        && unique_mtos_decomposition(&gq).unwrap_or(false)
    {
        candidates.push(p.to_string());
    }
    checked
}

pub fn scan(bounds: ScanBounds, seed: u64, count: u64) -> ScanReport {
    let mut violations = Vec::new();
    let mut candidates = Vec::new();
    let mut checked = 0;
    for k in 0..count {
        let p = random_drinfeld(seed.wrapping_add(k), bounds.0).expect("bounds validated");
        checked += sweep_one(&p, seed ^ k, &mut violations, &mut candidates);
    }
    candidates.sort();
    candidates.dedup();
    ScanReport {
        bounds: bounds_text(&bounds.0),
        seed,
        count,
        checked,
        violations,
        candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bounds() {
        let b: ScanBounds = "n=5,factors=8,centers=-10:10".parse().unwrap();
        assert_eq!(
            b.0,
            Bounds {
                n: 5,
                max_factors: 8,
                center_range: (-10, 10),
                snake_support_only: false
            }
        );
        let b: ScanBounds = "n=2, snake".parse().unwrap();
        assert!(b.0.snake_support_only);
        assert_eq!(bounds_text(&b.0), "n=2,factors=6,centers=-6:6,snake");
        assert!("n=0".parse::<ScanBounds>().is_err());
        assert!("centers=3:1".parse::<ScanBounds>().is_err());
        assert!("colour=red".parse::<ScanBounds>().is_err());
    }

    #[test]
    fn small_scan_is_clean_and_deterministic() {
        let b: ScanBounds = "n=3,factors=5,centers=-4:4".parse().unwrap();
        let r = scan(b, 9, 40);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r, scan(b, 9, 40));
    }
}
