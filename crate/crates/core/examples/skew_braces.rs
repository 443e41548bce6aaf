//! Building braces, the star operation, the derived series and the opposite.

use braceforge::{GroupTable, SkewBrace};

fn main() -> braceforge::Result<()> {
    let s3 = GroupTable::symmetric(3)?;
    let at = SkewBrace::almost_trivial(&s3);
    let series = at.derived_series3();
    println!("{}: |A'| = {}, |A^3| = {}, |A^(3)| = {}", at.label(), series.derived.len(), series.left3.len(), series.right3.len());
    println!("  meta-trivial {}  left nilpotent {}", at.is_meta_trivial(), at.is_left_nilpotent3());

    let op = at.opposite();
    println!("  opposite is trivial: {}", op.is_trivial());

    // a∘b = a + b + 2ab on Z/4
    let z4 = GroupTable::cyclic(4)?;
    let circle = GroupTable::from_fn(4, "Z/4 twisted", |a, b| (a + b + 2 * a * b) % 4)?;
    let br = SkewBrace::new(z4.clone(), circle)?;
    println!("{}: two-sided {}, trivial {}", br.label(), br.is_two_sided(), br.is_trivial());
    for a in 0..4 {
        let row: Vec<usize> = (0..4).map(|b| br.star(a, b)).collect();
        println!("  {a} * _ = {row:?}");
    }

    // a relabelled circle table breaks the brace relation
    let swapped = GroupTable::from_fn(4, "Z/4 relabelled", |a, b| {
        let p = [0, 2, 1, 3];
        p[(p[a] + p[b]) % 4]
    })?;
    match SkewBrace::new(z4, swapped) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
