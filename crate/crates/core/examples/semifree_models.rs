//! Wide spheres in the algebraic model of semifree circle spectra: the
//! untwisted test, homotopy classes and cofibres, and the classification of
//! models with a given Poincaré series.
//!
//! Run with `cargo run --example semifree_models`.

use ttg_spectra::linalg::q;
use ttg_spectra::semifree::{enumerate_classes, is_isomorphic, Parity, WideSphere};

fn main() -> ttg_spectra::Result<()> {
    let s0 = WideSphere::sphere0();
    let hg = s0.homotopy_classes(1);
    println!("[S^1, S^0] has dimension {}", hg.dim());

    let cone = s0.attach_cell(1, &[q(1)])?;
    println!("cofibre of the generator: untwisted = {}", cone.is_untwisted());

    // S^z ∨ S^{2-z} has the same Poincaré series as the cofibre
    let wedge = WideSphere::rep_sphere(1).direct_sum(&WideSphere::rep_sphere(-1).suspend(2));
    let report = wedge.twist_report(0);
    println!(
        "S^z v S^(2-z): p_1 = {}, p_T = {}, untwisted = {}",
        report.p_fixed,
        report.p_borel_jump,
        report.holds()
    );
    println!("{}", serde_json::to_string_pretty(&wedge.to_json()).expect("json"));

    let classes = enumerate_classes(&"1+t^2".parse()?, Parity::Even)?;
    println!("{} classes with p_1 = p_T = 1+t^2:", classes.len());
    for c in &classes {
        let tag = if is_isomorphic(c, &wedge)? { " (the wedge)" } else { "" };
        println!("  untwisted = {}{tag}", c.is_untwisted());
    }

    for k in -2..=2 {
        let w = cone.smash_rep_sphere(k);
        println!("cofibre smashed with S^({k}z) is {k}-twisted: {}", w.is_k_twisted(k));
    }
    Ok(())
}
