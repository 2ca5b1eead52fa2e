//! The rational Burnside ring of a finite group through its table of marks,
//! and of O(2) as locally constant functions on the space of finite-Weyl
//! classes.
//!
//! Run with `cargo run --example burnside_ring`.

use std::sync::Arc;

use ttg_spectra::burnside::{marks_matrix, primitive_idempotent};
use ttg_spectra::group::tables;
use ttg_spectra::linalg::{fmt_q, q};
use ttg_spectra::{parse_set, BurnsideElement, ClopenSet, FiniteGroup, GroupId, SubgroupClass};

fn main() -> ttg_spectra::Result<()> {
    let s3 = GroupId::Finite(Arc::new(FiniteGroup::from_table(&tables::symmetric(3))?));
    let m = marks_matrix(&s3)?;
    println!("table of marks of S3:");
    for l in 0..m.dim() {
        let row: Vec<_> = (0..m.dim()).map(|k| format!("{:>3}", fmt_q(m.entry(l, k)))).collect();
        println!("  {}", row.join(" "));
    }
    for i in 0..m.dim() {
        let e = primitive_idempotent(&s3, SubgroupClass::Finite(i))?;
        let coeffs: Vec<_> = e.iter().map(fmt_q).collect();
        println!("idempotent at F{i}: {}", coeffs.join(", "));
    }

    let x = BurnsideElement::from_transitive(&s3, &[q(1), q(-1), q(0), q(2)])?;
    println!("marks of [S3/1] - [S3/C2] + 2[S3/S3]: {}", x.to_json()["cells"]);

    let o2 = GroupId::O2;
    let u = ClopenSet::new(parse_set(&o2, "O2+tailD(3)")?)?;
    let e = BurnsideElement::e_u(&o2, &u)?;
    let f = BurnsideElement::one(&o2).sub(&e)?;
    println!("O(2): e_U idempotent {}, e_U (1 - e_U) = 0: {}", e.is_idempotent(), e.mul(&f)?.support().is_empty());
    Ok(())
}
