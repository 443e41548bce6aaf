mod common;

use braceforge::{Error, GroupTable, SkewBrace};
use common::small_braces;
use proptest::prelude::*;

fn for_triples(br: &SkewBrace, f: impl Fn(usize, usize, usize) -> bool) -> Option<(usize, usize, usize)> {
    let n = br.order();
    (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| !f(a, b, c))
}

#[test]
fn lambda_is_a_homomorphism_into_automorphisms() {
    for br in small_braces() {
        let (d, c) = (br.dot(), br.circle());
        assert_eq!(for_triples(&br, |a, b, x| br.lambda(c.mul(a, b), x) == br.lambda(a, br.lambda(b, x))), None, "{}", br.label());
        assert_eq!(for_triples(&br, |a, x, y| br.lambda(a, d.mul(x, y)) == d.mul(br.lambda(a, x), br.lambda(a, y))), None, "{}", br.label());
    }
}

#[test]
fn identity_web() {
    for br in small_braces() {
        let (d, c) = (br.dot(), br.circle());
        for a in 0..br.order() {
            for b in 0..br.order() {
                let ab = c.mul(a, b);
                assert_eq!(ab, d.mul(a, br.lambda(a, b)));
                assert_eq!(ab, d.mul(br.lambda_op(a, b), a));
                assert_eq!(d.mul(a, b), c.mul(a, br.lambda(c.inv(a), b)));
                assert_eq!(br.star(a, b), d.mul(br.lambda(a, b), d.inv(b)));
                assert_eq!(br.star(a, b), d.mul(d.mul(d.inv(a), ab), d.inv(b)));
            }
        }
    }
}

#[test]
fn star_identities_over_all_triples() {
    for br in small_braces() {
        let (d, c) = (br.dot(), br.circle());
        let s = |a, b| br.star(a, b);
        let m = |x, y| d.mul(x, y);
        let first = for_triples(&br, |a, b, x| s(a, m(b, x)) == m(m(m(s(a, b), b), s(a, x)), d.inv(b)));
        let second = for_triples(&br, |a, b, x| s(c.mul(a, b), x) == m(m(s(a, s(b, x)), s(b, x)), s(a, x)));
        let conj = for_triples(&br, |a, b, x| m(m(a, s(b, x)), d.inv(a)) == m(d.inv(s(b, a)), s(b, m(a, x))));
        let equiv = for_triples(&br, |a, b, x| {
            br.lambda(a, s(b, x)) == s(c.mul(c.mul(a, b), c.inv(a)), br.lambda(a, x))
        });
        assert_eq!((first, second, conj, equiv), (None, None, None, None), "{}", br.label());
        if br.is_two_sided() {
            let w = for_triples(&br, |a, b, x| s(m(a, b), x) == m(m(m(d.inv(b), s(a, x)), b), s(b, x)));
            assert_eq!(w, None, "{}", br.label());
        }
    }
}

#[test]
fn opposite_is_an_involution_and_a_brace() {
    for br in small_braces() {
        let op = br.opposite();
        assert!(SkewBrace::new(op.dot().clone(), op.circle().clone()).is_ok(), "{}", br.label());
        let back = op.opposite();
        assert_eq!(back.dot().table(), br.dot().table());
        assert_eq!(back.circle().table(), br.circle().table());
        assert_eq!(back.label(), br.label());
    }
}

#[test]
fn triviality_predicates() {
    for br in small_braces() {
        let d = br.dot();
        let n = br.order();
        let all_one = (0..n).all(|a| (0..n).all(|b| br.star(a, b) == br.identity()));
        assert_eq!(br.is_trivial(), all_one);
        let comm = (0..n).all(|a| (0..n).all(|b| br.star(a, b) == d.mul(d.mul(d.mul(d.inv(a), b), a), d.inv(b))));
        assert_eq!(br.is_almost_trivial(), comm);
    }
}

#[test]
fn derived_subgroup_is_an_ideal_with_trivial_quotient() {
    for br in small_braces() {
        let ds = br.derived_series3();
        assert!(br.subset_status(&ds.derived).ideal, "{}", br.label());
        let (d, c) = (br.dot(), br.circle());
        for a in 0..br.order() {
            for b in 0..br.order() {
                assert!(ds.derived.contains(d.mul(d.inv(d.mul(a, b)), c.mul(a, b))));
            }
        }
        assert!(br.quotient_is_trivial(&ds.derived));
    }
}

#[test]
fn almost_trivial_series_matches_groups() {
    for g in [
        GroupTable::symmetric(3).unwrap(),
        GroupTable::symmetric(4).unwrap(),
        GroupTable::dihedral(4).unwrap(),
        GroupTable::quaternion().unwrap(),
    ] {
        let ds = SkewBrace::almost_trivial(&g).derived_series3();
        let gg = g.commutator_subgroup();
        let ggg = g.commutator_of(&g.full_set(), &gg);
        assert_eq!(ds.derived, gg);
        assert_eq!(ds.left3, ggg);
        assert_eq!(ds.right3, ggg);
    }
}

fn first_relation_failure(dot: &GroupTable, circ: &GroupTable) -> Option<(usize, usize, usize)> {
    let n = dot.order();
    (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| {
            circ.mul(a, dot.mul(b, c)) != dot.mul(dot.mul(circ.mul(a, b), dot.inv(a)), circ.mul(a, c))
        })
}

proptest! {
    #[test]
    fn brace_validation_matches_brute_force(perm_seed in proptest::collection::vec(0usize..8, 8)) {
        // circle = dot transported along a random relabelling fixing 0
        let dot = GroupTable::dihedral(4).unwrap();
        let mut p: Vec<usize> = (0..8).collect();
        for (i, s) in perm_seed.iter().enumerate().skip(1) {
            let j = 1 + s % 7;
            p.swap(i, j);
        }
        let mut inv = [0; 8];
        for (i, &x) in p.iter().enumerate() {
            inv[x] = i;
        }
        let circ = GroupTable::from_fn(8, "relabelled", |a, b| inv[dot.mul(p[a], p[b])]).unwrap();
        let expected = first_relation_failure(&dot, &circ);
        match SkewBrace::new(dot.clone(), circ.clone()) {
            Ok(br) => {
                prop_assert!(expected.is_none());
                prop_assert!(br.validate_exhaustive().is_ok());
            }
            Err(Error::BraceAxiom { a, b, c }) => prop_assert_eq!(Some((a, b, c)), expected),
            Err(Error::Domain(_)) => prop_assert!(expected.is_some()),
            Err(e) => prop_assert!(false, "unexpected {:?}", e),
        }
    }
}
