//! Finite groups as Cayley tables: constructors, subgroups, commutators.

use braceforge::{ElemSet, GroupTable};

fn main() -> braceforge::Result<()> {
    let s3 = GroupTable::symmetric(3)?;
    let d4 = GroupTable::dihedral(4)?;
    let q8 = GroupTable::quaternion()?;
    let z2z3 = GroupTable::direct_product(&GroupTable::cyclic(2)?, &GroupTable::cyclic(3)?)?;

    for g in [&s3, &d4, &q8, &z2z3] {
        let derived = g.commutator_subgroup();
        println!(
            "{:<10} order {:>2}  abelian {:<5}  |[G,G]| = {}",
            g.label(),
            g.order(),
            g.is_abelian(),
            derived.len()
        );
    }

    // ⟨r⟩ and ⟨s⟩ in D4
    let r = d4.generated_subgroup(&ElemSet::singleton(8, 1));
    let s = d4.generated_subgroup(&ElemSet::singleton(8, 4));
    println!("D4: <r> = {r:?}, normal {}", d4.is_normal(&r)?);
    println!("D4: <s> = {s:?}, normal {}", d4.is_normal(&s)?);
    println!("D4 = <r><s>: {}", d4.set_product(&r, &s).is_full());

    let u9 = GroupTable::units_mod(9)?;
    println!("U(9) residues {:?}, cyclic of order {}", GroupTable::units_residues(9), u9.order());
    Ok(())
}
