//! Certifying a map between tables as a group homomorphism.

use braceforge::{GroupHom, GroupTable};

fn main() -> braceforge::Result<()> {
    let z9 = GroupTable::cyclic(9)?;
    let u9 = GroupTable::units_mod(9)?;
    let residues = GroupTable::units_residues(9);

    // b ↦ 4^b mod 9
    let image: Vec<usize> = (0..9u64)
        .map(|b| {
            let r = (0..b).fold(1, |acc, _| acc * 4 % 9);
            residues.iter().position(|&x| x == r).unwrap()
        })
        .collect();
    let hom = GroupHom::new(&z9, &u9, image)?.certify()?;
    println!("b -> 4^b mod 9 certified: {}", hom.is_certified());

    // doubling is not a homomorphism into U(9)
    let bad = GroupHom::new(&z9, &u9, (0..9).map(|b| b % 6).collect())?;
    match bad.certify() {
        Ok(_) => println!("unexpectedly certified"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
