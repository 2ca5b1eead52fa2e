//! Subgroup catalogues: a finite group from its multiplication table and the
//! compact Lie groups O(2) and SO(3), with subconjugacy, the cotoral order
//! and restriction of classes to a subgroup.
//!
//! Run with `cargo run --example group_catalog`.

use std::sync::Arc;

use ttg_spectra::group::tables;
use ttg_spectra::{FiniteGroup, GroupId, SubgroupClass};

fn main() -> ttg_spectra::Result<()> {
    let s4 = GroupId::Finite(Arc::new(FiniteGroup::from_table(&tables::symmetric(4))?));
    let fg = s4.finite().expect("finite");
    println!("S4 has {} conjugacy classes of subgroups", fg.classes().len());
    for (i, c) in fg.classes().iter().enumerate() {
        println!("  F{i}: order {:>2}, {} conjugates, Weyl order {}", c.order, c.class_size(), c.weyl_order());
    }

    let so3 = GroupId::SO3;
    println!("\nSO(3) classes up to index 4:");
    for k in so3.classes(4) {
        let weyl = so3.weyl_order(k)?.map_or("infinite".to_string(), |w| w.to_string());
        println!("  {:<4} Weyl group {weyl}", so3.class_name(k));
    }

    let (d2, a4) = (so3.parse_class("D2")?, so3.parse_class("A4")?);
    println!("\nD2 subconjugate to A4 in SO(3): {}", so3.is_subconjugate(d2, a4)?);
    let (c5, t) = (SubgroupClass::C(5), so3.parse_class("SO2")?);
    println!("C5 cotoral in SO2: {}", so3.is_cotoral(c5, t)?);

    let r = so3.restrict_class(SubgroupClass::O2, SubgroupClass::C(2))?;
    let names: Vec<_> = r.classes.iter().map(|&k| r.model.class_name(k)).collect();
    println!("C2 in SO(3) restricted to O(2) splits as {names:?}");
    Ok(())
}
