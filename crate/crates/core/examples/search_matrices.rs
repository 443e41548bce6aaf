//! Searching GL_m(Z/2) for elements of odd prime order.

use braceforge::matrix::{gl2_order, search_gl2_order};

fn main() -> braceforge::Result<()> {
    for (m, p) in [(2, 3), (3, 7), (4, 5)] {
        println!("|GL_{m}(Z/2)| = {}", gl2_order(m as u32).unwrap());
        for hit in search_gl2_order(m, p, 3)? {
            println!("  {}  order {}  v {:?}", hit.matrix.row_strings().join(";"), hit.order, hit.hypothesis_v);
        }
    }
    if let Err(e) = search_gl2_order(2, 5, 3) {
        println!("m=2 p=5: {e}");
    }
    Ok(())
}
