//! The space of classes with finite Weyl group and the Boolean algebra of its
//! clopen subsets. In O(2) the dihedral classes accumulate at O(2) itself, so
//! a clopen set contains O(2) exactly when it contains a dihedral tail.
//!
//! Run with `cargo run --example phi_clopen`.

use ttg_spectra::phi_space::{basic_nbhd, phi};
use ttg_spectra::{parse_set, ClopenSet, GroupId, SubgroupClass};

fn main() -> ttg_spectra::Result<()> {
    let g = GroupId::O2;
    let space = phi(&g);
    println!("Phi(O2) = {}", space.points());

    let u = ClopenSet::new(parse_set(&g, "O2+tailD(4)")?)?;
    let v = ClopenSet::new(parse_set(&g, "{D2,D5,D9}")?)?;
    println!("U = {}, V = {}", u.set(), v.set());
    println!("U u V = {}", u.union(&v)?.set());
    println!("U n V = {}", u.intersection(&v)?.set());
    println!("complement of U = {}", u.complement().set());

    // O2 without a dihedral tail is not open
    match ClopenSet::new(parse_set(&g, "{O2,D3}")?) {
        Ok(_) => println!("unexpectedly clopen"),
        Err(e) => println!("{{O2,D3}} rejected: {e}"),
    }

    for n in [1, 3] {
        println!("basic neighbourhood of O2 at cutoff {n}: {}", basic_nbhd(&g, SubgroupClass::Full, n)?.set());
    }
    println!("Phi(SO3) = {}", phi(&GroupId::SO3).points());
    Ok(())
}
