//! The first family on Z/p^m × Z/p^n: quadruples and meta-triviality.

use braceforge::families::{enumerate_quadruples, family1_data, family1_shortcut_meta_trivial, Family1Params};

fn main() -> braceforge::Result<()> {
    println!("quadruples in [1,10]^4: {}", enumerate_quadruples(10, true).len());
    for (m, n, k, l) in enumerate_quadruples(3, true) {
        let params = Family1Params::new(3, m, n, k, l)?;
        let data = family1_data(&params)?;
        let br = data.build()?;
        println!(
            "p=3 m={m} n={n} k={k} l={l}: order {:>3}  meta-trivial {} (criterion {}, scalar {})",
            br.order(),
            br.is_meta_trivial(),
            data.criterion_meta_trivial(),
            family1_shortcut_meta_trivial(&params)?
        );
    }
    match Family1Params::new(3, 1, 1, 1, 1) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
