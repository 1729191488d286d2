use std::collections::BTreeSet;

use qfact_core::{
    enumerate_mtos, has_snake_support, parse_polynomial, prime_factorize_snake_support, q_factorization,
    DrinfeldPolynomial, KrFactor, PQGraph, VertexId,
};
use qfact_oracle::*;

fn poly(s: &str) -> DrinfeldPolynomial {
    parse_polynomial(s).unwrap()
}

fn kr(i: usize, a: i64, r: u32) -> KrFactor {
    KrFactor::new(i, a, r).unwrap()
}

#[test]
fn brute_qfact_examples() {
    assert_eq!(
        brute_qfact(&poly("A1; w[1,0] w[1,2] w[1,4]"), 30, 7).unwrap(),
        vec![kr(1, 2, 3)]
    );
    assert_eq!(
        brute_qfact(&poly("A1; w[1,0] w[1,2] w[1,6]"), 30, 7).unwrap(),
        vec![kr(1, 1, 2), kr(1, 6, 1)]
    );
    assert_eq!(brute_qfact(&poly("A3; w[2,5]"), 5, 1).unwrap(), vec![kr(2, 5, 1)]);
}

#[test]
fn brute_qfact_matches_core() {
    for seed in 0..300 {
        let n = 1 + (seed % 5) as usize;
        let p = random_drinfeld(
            seed,
            Bounds {
                n,
                max_factors: 8,
                center_range: (-6, 6),
                snake_support_only: false,
            },
        )
        .unwrap();
        assert_eq!(brute_qfact(&p, 8, seed).unwrap(), q_factorization(&p), "{p}");
    }
}

#[test]
fn brute_mtos_examples() {
    let g = PQGraph::q_factorization(&poly("A3; w[1,3] w[2,0] w[3,3]"));
    let sets = brute_mtos(&g).unwrap();
    assert_eq!(sets.len(), 2);
    assert_eq!(sets, enumerate_mtos(&g).unwrap());

    let g = PQGraph::fundamental(&poly("A3; w[1,0] w[2,3] w[3,6]"));
    assert!(g.is_totally_ordered());
    assert_eq!(brute_mtos(&g).unwrap(), vec![g.vertex_ids().collect::<BTreeSet<_>>()]);

    let g = PQGraph::fundamental(&poly("A3; w[1,0] w[1,20] w[1,40]"));
    assert_eq!(g.arrow_count(), 0);
    let singles: Vec<BTreeSet<VertexId>> = g.vertex_ids().map(|v| BTreeSet::from([v])).collect();
    assert_eq!(brute_mtos(&g).unwrap(), singles);
}

#[test]
fn brute_mtos_bound() {
    let p = poly("A1; w[1,0]^17");
    assert!(matches!(
        brute_mtos(&PQGraph::fundamental(&p)),
        Err(OracleError::BoundExceeded { size: 17, .. })
    ));
}

#[test]
fn brute_mtos_matches_core() {
    for seed in 0..200 {
        let p = random_drinfeld(
            seed,
            Bounds {
                n: 3,
                max_factors: 9,
                center_range: (0, 8),
                snake_support_only: false,
            },
        )
        .unwrap();
        for g in [PQGraph::fundamental(&p), PQGraph::q_factorization(&p)] {
            assert_eq!(brute_mtos(&g).unwrap(), enumerate_mtos(&g).unwrap(), "{p}");
        }
    }
}

#[test]
fn iterated_bar_examples() {
    assert_eq!(
        iterated_bar_factorization(&poly("A3; w[2,0]^2 w[2,4]")).unwrap(),
        vec![poly("A3; w[2,0] w[2,4]"), poly("A3; w[2,0]")]
    );
    assert_eq!(
        iterated_bar_factorization(&poly("A3; w[2,0] w[2,4]")).unwrap(),
        vec![poly("A3; w[2,0] w[2,4]")]
    );
    assert_eq!(
        iterated_bar_factorization(&poly("A3; w[2,0]")).unwrap(),
        vec![poly("A3; w[2,0]")]
    );
    assert!(matches!(
        iterated_bar_factorization(&poly("A3; w[1,0] w[2,1]")),
        Err(OracleError::Precondition(_))
    ));
}

#[test]
fn iterated_bar_matches_snake_route() {
    for seed in 0..300 {
        let p = random_drinfeld(
            seed,
            Bounds {
                n: 1 + (seed % 4) as usize,
                max_factors: 8,
                center_range: (0, 4),
                snake_support_only: true,
            },
        )
        .unwrap();
        let Some(_) = p.monochromatic_node() else {
            continue;
        };
        let mut expected = prime_factorize_snake_support(&p).unwrap().factors;
        expected.sort();
        let mut got = iterated_bar_factorization(&p).unwrap();
        got.sort();
        assert_eq!(got, expected, "{p}");
    }
}

#[test]
fn generator_properties() {
    let b = Bounds {
        n: 4,
        max_factors: 8,
        center_range: (-10, 10),
        snake_support_only: false,
    };
    assert_eq!(random_drinfeld(42, b).unwrap(), random_drinfeld(42, b).unwrap());
    for seed in 0..200 {
        let p = random_drinfeld(
            seed,
            Bounds {
                snake_support_only: true,
                ..b
            },
        )
        .unwrap();
        assert!(has_snake_support(&p), "{p}");
        assert!(p.degree() <= 8);
        let q = random_drinfeld(seed, Bounds { n: 1, ..b }).unwrap();
        assert_eq!(q.monochromatic_node(), Some(1));
    }
    assert!(random_drinfeld(0, Bounds { n: 0, ..b }).is_err());
}

#[test]
fn fusion_sequences_stay_on_polynomial() {
    let mut rng = rng_for(3, 0);
    for _ in 0..50 {
        let snake = random_prime_snake(&mut rng, qfact_core::DynkinA::new(3).unwrap(), 6, (0, 0)).unwrap();
        let p = DrinfeldPolynomial::new(qfact_core::DynkinA::new(3).unwrap(), snake).unwrap();
        let g = PQGraph::fundamental(&p);
        for h in random_fusion_sequence(&g, &mut rng, 10).unwrap() {
            assert_eq!(h.polynomial(), p);
            h.check_arrows().unwrap();
        }
    }
}

#[test]
fn path_bounds_on_snake_graphs() {
    let p = poly("A3; w[1,0] w[2,3] w[1,4] w[3,7]");
    let g = PQGraph::fundamental(&p);
    let paths = directed_paths(&g, 100);
    assert!(!paths.is_empty());
    for mut path in paths {
        path.reverse();
        check_path_bounds(&path).unwrap();
    }
    assert!(check_path_bounds(&[kr(1, 0, 1), kr(1, 1, 2)]).is_err());
}

#[test]
fn divisible_q_factors_are_incomparable() {
    let p = poly("A3; kr[1,3,3] w[1,3] w[2,0] w[2,7]");
    assert!(divisible_comparable_pairs(&PQGraph::q_factorization(&p)).is_empty());
}
