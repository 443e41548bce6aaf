//! The second family on (Z/2)^m × (Z/p)^n: the listed matrices and the
//! failure of meta-triviality.

use braceforge::families::{cri_hypothesis, family2_data, Family2Params, FAMILY2_EXAMPLES};
use braceforge::matrix::MatrixOrder;
use braceforge::MatrixModM;

fn main() -> braceforge::Result<()> {
    for (i, (p, rows)) in FAMILY2_EXAMPLES.iter().enumerate() {
        let mat = MatrixModM::parse_binary_rows(rows)?;
        let order = match mat.order(mat.default_order_cap())? {
            MatrixOrder::Finite(o) => o,
            MatrixOrder::Exceeded(cap) => panic!("order above {cap}"),
        };
        print!("({}) p={p} P={rows:<20} order {order}", i + 1);
        let Ok(params) = Family2Params::new(*p, mat.clone(), 2, vec![1, -1]) else {
            println!("  (not of order {p})");
            continue;
        };
        let data = family2_data(&params)?;
        let br = data.build()?;
        println!(
            "  v = {:?}  |A| = {}  meta-trivial {} (criterion {})",
            cri_hypothesis(&mat, *p)?,
            br.order(),
            br.is_meta_trivial(),
            data.criterion_meta_trivial()
        );
    }
    Ok(())
}
