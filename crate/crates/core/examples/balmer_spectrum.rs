//! The Balmer spectrum of finite rational O(2)-spectra: primes are subgroup
//! classes ordered by cotoral inclusion, supports are cotorally closed, and a
//! set is the support of a finite spectrum exactly when its cotorally maximal
//! part is open and compact.
//!
//! Run with `cargo run --example balmer_spectrum`.

use ttg_spectra::isotropy::{
    is_realizable, is_zariski_closed, point_closure, prime_leq, realize, separate, support,
    zariski_closure,
};
use ttg_spectra::{parse_set, BalmerPrime, GroupId, SubgroupClass};

fn main() -> ttg_spectra::Result<()> {
    let g = GroupId::O2;
    let (c3, so2, d3) = (SubgroupClass::C(3), SubgroupClass::SO2, SubgroupClass::D(3));
    let leq = |a, b| prime_leq(&BalmerPrime::new(&g, a)?, &BalmerPrime::new(&g, b)?);
    println!("P(C3) <= P(SO2): {}", leq(c3, so2)?);
    println!("P(C3) <= P(D3): {}", leq(c3, d3)?);
    println!("closure of P(SO2): {}", point_closure(&g, so2)?);

    for text in ["{O2}+tailD(4)+{D1}", "Lct{SO2}+{D2}", "{O2,D1}", "tailD(2)"] {
        let s = parse_set(&g, text)?;
        if is_realizable(&s) {
            let x = realize(&s)?;
            println!("{text:<20} realized by {} with support {}", x.render(&g), support(&g, &x)?);
        } else {
            println!("{text:<20} is not the support of a finite spectrum");
        }
    }

    let s = parse_set(&g, "tailD(5)")?;
    println!("Zariski closure of {s}: {} (closed: {})", zariski_closure(&s), is_zariski_closed(&s));

    let (x1, x2) = separate(&g, d3, so2)?;
    println!("D3 and SO2 are separated by {} and {}", x1.render(&g), x2.render(&g));
    Ok(())
}
