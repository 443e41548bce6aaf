//! The bicrossed construction on B × C from a pair of compatible actions.

use braceforge::{BicrossedSpec, GroupTable};

fn main() -> braceforge::Result<()> {
    // φ_c(x) = 2^c x on Z/7, ψ trivial
    let data = BicrossedSpec::cyclic(7, 3, 2, 1)?.certify()?;
    let br = data.build()?;
    println!("{} order {}", br.label(), br.order());
    println!("  criterion meta-trivial {}  brute force {}", data.criterion_meta_trivial(), br.is_meta_trivial());
    let profile = data.ideal_profile();
    println!("  predicted B×1 {:?}", profile.b_factor);
    println!("  observed  B×1 {:?}", br.subset_status(&data.b_factor()));

    // S3 acted on by nothing, Z/3 inverted by odd permutations
    let s3 = GroupTable::symmetric(3)?;
    let perms = braceforge::group::permutations(3);
    let odd = |b: usize| {
        let p = &perms[b];
        (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count() % 2 == 1
    };
    let data = BicrossedSpec::from_fns(s3, GroupTable::cyclic(3)?, |_, x| x, |b, y| if odd(b) { (3 - y) % 3 } else { y })
        .certify()?;
    let br = data.build()?;
    println!("{} order {}: meta-trivial {}", br.label(), br.order(), br.is_meta_trivial());

    // incompatible actions are rejected with a witness
    match BicrossedSpec::cyclic(14, 3, 9, 2)?.certify() {
        Ok(_) => println!("unexpectedly certified"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
