#![allow(dead_code)]

use braceforge::{BicrossedData, BicrossedSpec, GroupTable, SkewBrace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Certified `Z/q ⋊ Z/n` data with random multipliers, order at most
/// `max_order`, reproducible from `seed`.
pub fn random_bicrossed(seed: u64, count: usize, max_order: usize) -> Vec<(String, BicrossedData)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100_000, "random search stalled");
        let q = rng.gen_range(2..=24usize);
        let n = rng.gen_range(2..=24usize);
        if q * n > max_order {
            continue;
        }
        let a = rng.gen_range(1..q as u64);
        let u = rng.gen_range(1..n as u64);
        if a == 1 && u == 1 && rng.gen_bool(0.8) {
            continue;
        }
        if let Ok(data) = BicrossedSpec::cyclic(q, n, a, u).and_then(BicrossedSpec::certify) {
            out.push((format!("Z/{q} x Z/{n} (a={a}, u={u})"), data));
        }
    }
    out
}

/// Small braces of several shapes for identity scans.
pub fn small_braces() -> Vec<SkewBrace> {
    let mut out = Vec::new();
    for g in [
        GroupTable::cyclic(6).unwrap(),
        GroupTable::symmetric(3).unwrap(),
        GroupTable::dihedral(4).unwrap(),
        GroupTable::quaternion().unwrap(),
        GroupTable::dihedral(5).unwrap(),
    ] {
        out.push(SkewBrace::trivial(&g));
        out.push(SkewBrace::almost_trivial(&g));
    }
    let z4 = GroupTable::cyclic(4).unwrap();
    let twisted = GroupTable::from_fn(4, "Z/4 twisted", |a, b| (a + b + 2 * a * b) % 4).unwrap();
    out.push(SkewBrace::new(z4, twisted).unwrap());
    for (_, data) in random_bicrossed(7, 8, 120) {
        out.push(data.build().unwrap());
    }
    out
}
