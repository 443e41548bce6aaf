use braceforge::families::{
    digits, enumerate_quadruples, family1_data, family1_shortcut_meta_trivial, family2_data, from_digits,
    multiplicative_order, Family1Params, Family2Params,
};
use braceforge::matrix::{cri_hypothesis, MatrixModM};
use braceforge::Error;
use proptest::prelude::*;

fn rescan(max: u32, nontrivial: bool) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            for k in 1..=max {
                for l in 1..=max {
                    let ok = k <= m.min(n) && l <= m.min(n) && k + l <= n;
                    if ok && (!nontrivial || (k < m && l < n)) {
                        out.push((m, n, k, l));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_rescan() {
    for max in 0..=10 {
        assert_eq!(enumerate_quadruples(max, true), rescan(max, true));
        assert_eq!(enumerate_quadruples(max, false), rescan(max, false));
    }
    assert_eq!(enumerate_quadruples(10, true).len(), 1025);
    assert_eq!(enumerate_quadruples(10, false).len(), 1120);
}

#[test]
fn family1_small_quadruples() {
    for p in [3u64, 5] {
        for (m, n, k, l) in enumerate_quadruples(3, true) {
            let params = Family1Params::new(p, m, n, k, l).unwrap();
            let order = params.b_order().unwrap() * params.c_order().unwrap();
            let data = family1_data(&params).unwrap();
            assert!(data.criterion_meta_trivial(), "{params:?}");
            assert!(family1_shortcut_meta_trivial(&params).unwrap(), "{params:?}");
            if order <= 1000 {
                assert!(data.build().unwrap().is_meta_trivial(), "{params:?}");
            }
        }
    }
}

#[test]
fn family1_boundary_multiplier_fails_certification() {
    let params = Family1Params::new(3, 1, 2, 1, 1).unwrap();
    assert_eq!(params.phi_multiplier(), 2);
    assert!(matches!(family1_data(&params), Err(Error::MapLaw { .. })));
}

#[test]
fn family1_rejects_broken_inequalities() {
    for (m, n, k, l) in [(1, 1, 1, 1), (2, 2, 3, 1), (3, 2, 1, 3), (0, 2, 1, 1)] {
        assert!(Family1Params::new(3, m, n, k, l).is_err());
    }
    assert!(Family1Params::new(4, 2, 2, 1, 1).is_err());
    assert!(Family1Params::new(2, 2, 2, 1, 1).is_err());
}

#[test]
fn family2_examples() {
    for index in [1, 2, 3, 5, 6] {
        let params = Family2Params::example(index).unwrap();
        assert_eq!(cri_hypothesis(&params.matrix, params.p).unwrap(), Some(1), "example {index}");
        let data = family2_data(&params).unwrap();
        assert!(!data.criterion_meta_trivial(), "example {index}");
    }
    assert!(Family2Params::example(4).is_err());
    assert!(Family2Params::example(0).is_err());
    assert!(Family2Params::example(7).is_err());
}

#[test]
fn family2_parameter_checks() {
    let p = MatrixModM::parse_binary_rows("01;11").unwrap();
    assert!(Family2Params::new(3, p.clone(), 2, vec![1, -1]).is_ok());
    assert!(Family2Params::new(3, p.clone(), 3, vec![1, 1, -1]).is_ok());
    assert!(Family2Params::new(3, p.clone(), 1, vec![-1]).is_err());
    assert!(Family2Params::new(3, p.clone(), 2, vec![1, 1]).is_err());
    assert!(Family2Params::new(3, p.clone(), 2, vec![-1, 1]).is_err());
    assert!(Family2Params::new(3, p.clone(), 2, vec![1, 2]).is_err());
    assert!(Family2Params::new(3, p.clone(), 2, vec![1]).is_err());
    assert!(Family2Params::new(5, p, 2, vec![1, -1]).is_err());
}

#[test]
fn family2_larger_n_is_still_sharp() {
    let params = Family2Params::new(3, MatrixModM::parse_binary_rows("01;11").unwrap(), 3, vec![1, -1, 1]).unwrap();
    let data = family2_data(&params).unwrap();
    let br = data.build().unwrap();
    assert_eq!(br.order(), 108);
    assert!(!br.is_meta_trivial());
    assert!(!data.criterion_meta_trivial());
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #[test]
    fn multiplicative_order_is_least(a in 1u64..500, modulus in 2u64..500) {
        let got = multiplicative_order(a, modulus);
        if gcd(a, modulus) != 1 {
            prop_assert_eq!(got, None);
        } else {
            let mut x = 1u64;
            let mut first = None;
            for e in 1..=modulus {
                x = x * a % modulus;
                if x == 1 % modulus {
                    first = Some(e);
                    break;
                }
            }
            prop_assert_eq!(got, first);
        }
    }

    #[test]
    fn digits_round_trip(index in 0usize..100_000, q in 2usize..8) {
        let len = 12;
        let ds = digits(index % q.pow(6), q, len);
        prop_assert!(ds.iter().all(|&d| (d as usize) < q));
        prop_assert_eq!(from_digits(&ds, q), index % q.pow(6));
    }
}
