//! Sub-skew braces and the ideal notions of a brace and its opposite.

use braceforge::{ElemSet, GroupTable, SkewBrace};

fn main() -> braceforge::Result<()> {
    let d4 = GroupTable::dihedral(4)?;
    let br = SkewBrace::almost_trivial(&d4);
    let subsets = [
        ("<r>", d4.generated_subgroup(&ElemSet::singleton(8, 1))),
        ("<s>", d4.generated_subgroup(&ElemSet::singleton(8, 4))),
        ("<r^2>", d4.generated_subgroup(&ElemSet::singleton(8, 2))),
    ];
    println!("{:<6} {:>9} {:>6} {:>5} {:>6} {:>8} {:>9}", "", "sub-brace", "ideal", "left", "right", "left^op", "right^op");
    for (name, s) in &subsets {
        let st = br.subset_status(s);
        println!(
            "{name:<6} {:>9} {:>6} {:>5} {:>6} {:>8} {:>9}",
            st.sub_skew_brace, st.ideal, st.left_ideal, st.right_ideal, st.left_ideal_op, st.right_ideal_op
        );
    }
    let f = br.factorization_check(&subsets[0].1, &subsets[1].1)?;
    println!("A = <r>·<s>: {}, A = <r>∘<s>: {}", f.dot_product, f.circle_product);
    Ok(())
}
