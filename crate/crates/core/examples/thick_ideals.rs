//! Thick and localizing tensor ideals are determined by geometric isotropy:
//! `Y` lies in the thick ideal generated by `X` exactly when its support is
//! contained in the support of `X`.
//!
//! Run with `cargo run --example thick_ideals`.

use ttg_spectra::isotropy::{in_thickt, loct_equal, support};
use ttg_spectra::{parse_expr, GroupId};

fn main() -> ttg_spectra::Result<()> {
    let g = GroupId::SO3;
    let pairs = [
        ("cell(D2)", "cell(A4)"),
        ("cell(A4)", "cell(D2)"),
        ("basic(O2,3)", "cell(O2)"),
        ("smash(cell(S4),cell(D4))", "cell(D4)"),
        ("susp(3,dual(cell(C2)))", "basic(O2,1)"),
    ];
    for (y, x) in pairs {
        let (ey, ex) = (parse_expr(&g, y)?, parse_expr(&g, x)?);
        println!("{y:<26} in thick<{x}>: {}", in_thickt(&g, &ey, &ex)?);
    }

    let x = parse_expr(&g, "wedge(cell(SO2),cell(D3))")?;
    println!("support of {}: {}", x.render(&g), support(&g, &x)?);

    // localizing ideals also see the non-finite universal pieces
    let a = parse_expr(&g, "wedge(iso(SO2),iso(C4))")?;
    let b = parse_expr(&g, "wedge(iso(C4),iso(SO2),iso(SO2))")?;
    println!("loc<{}> = loc<{}>: {}", a.render(&g), b.render(&g), loct_equal(&g, &a, &b)?);
    Ok(())
}
