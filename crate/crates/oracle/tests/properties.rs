use proptest::prelude::*;
use qfact_core::{
    enumerate_mtos, q_factorization, red_set, segment_check, DrinfeldPolynomial, DynkinA, FundamentalWeight, KrFactor,
    PQGraph,
};
use qfact_oracle::{brute_mtos, brute_qfact};

fn polynomial() -> impl Strategy<Value = DrinfeldPolynomial> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec((1..=n, -10i64..=10), 0..=9).prop_map(move |ws| {
            DrinfeldPolynomial::new(
                DynkinA::new(n).unwrap(),
                ws.into_iter().map(|(i, a)| FundamentalWeight::new(i, a)),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn every_schedule_reaches_the_q_factorization(p in polynomial(), seed in any::<u64>()) {
        prop_assert_eq!(brute_qfact(&p, 6, seed).unwrap(), q_factorization(&p));
    }

    #[test]
    fn mtos_agree_with_brute_force(p in polynomial()) {
        for g in [PQGraph::fundamental(&p), PQGraph::q_factorization(&p)] {
            prop_assert_eq!(enumerate_mtos(&g).unwrap(), brute_mtos(&g).unwrap());
        }
    }
}

// two reducible same-node q-factors concatenate into a segment
#[test]
fn reducible_q_factor_pairs_extend_to_segments() {
    let mut hits = 0;
    for n in 1..=6 {
        let d = DynkinA::new(n).unwrap();
        for i in 1..=n {
            let steps = red_set(d.full(), i, i, 1, 1).unwrap();
            for r in 1..=4u32 {
                for s in 1..=4u32 {
                    let reducible = red_set(d.full(), i, i, r, s).unwrap();
                    for m in 1..=20 {
                        let (x, y) = (KrFactor::new(i, 0, r).unwrap(), KrFactor::new(i, m, s).unwrap());
                        let p = DrinfeldPolynomial::from_kr(d, [x, y]).unwrap();
                        if !reducible.contains(m) || q_factorization(&p) != vec![x, y] {
                            continue;
                        }
                        hits += 1;
                        assert!(steps.contains(m - i64::from(s) + 1 - (i64::from(r) - 1)), "{x} {y}");
                        let offsets: Vec<i64> = x.fundamentals().chain(y.fundamentals()).map(|w| w.center).collect();
                        assert!(segment_check(i, &offsets, d).unwrap(), "{x} {y}");
                    }
                }
            }
        }
    }
    assert!(hits > 100, "{hits}");
}
