//! Geometric isotropy of formal spectrum expressions, the Balmer spectrum as
//! the cotoral poset of subgroup classes, realizability of isotropy sets by
//! finite wedges of basic cells, and the ideal-membership tests built on
//! supports.

use std::fmt;

use serde_json::{json, Value};

use crate::classset::{ClassSet, IndexSet};
use crate::error::{Error, Result};
use crate::group::{subgroup_model, GroupId, Series, SubgroupClass};
use crate::phi_space::{basic_nbhd_in, is_f_compact, is_f_open};

/// A formal rational `G`-spectrum built from cells and universal pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumExpr {
    /// The unit `S^0`.
    Sphere,
    /// `G/K_+`.
    Cell(SubgroupClass),
    /// `σ_{K,U}` with `U` the basic neighbourhood of `K` in `ΦK` at `cutoff`.
    Basic { class: SubgroupClass, cutoff: u64 },
    /// The universal spectrum concentrated at the single class `K`. Not finite.
    IsoClass(SubgroupClass),
    /// Wedge sum; the empty wedge is the zero spectrum.
    Wedge(Vec<SpectrumExpr>),
    /// Smash product; the empty smash is `S^0`.
    Smash(Vec<SpectrumExpr>),
    Susp(i64, Box<SpectrumExpr>),
    /// Spanier-Whitehead dual of a finite spectrum.
    Dual(Box<SpectrumExpr>),
}

impl SpectrumExpr {
    pub fn is_finite(&self) -> bool {
        match self {
            SpectrumExpr::Sphere | SpectrumExpr::Cell(_) | SpectrumExpr::Basic { .. } => true,
            SpectrumExpr::IsoClass(_) => false,
            SpectrumExpr::Wedge(xs) | SpectrumExpr::Smash(xs) => xs.iter().all(Self::is_finite),
            SpectrumExpr::Susp(_, x) | SpectrumExpr::Dual(x) => x.is_finite(),
        }
    }

    /// Checks class tokens against the group and that duals are of finite
    /// spectra.
    pub fn validate(&self, g: &GroupId) -> Result<()> {
        let class = |k: SubgroupClass| g.validate(k).map_err(|e| Error::MalformedExpr(e.to_string()));
        match self {
            SpectrumExpr::Sphere => Ok(()),
            SpectrumExpr::Cell(k) | SpectrumExpr::IsoClass(k) | SpectrumExpr::Basic { class: k, .. } => class(*k),
            SpectrumExpr::Wedge(xs) | SpectrumExpr::Smash(xs) => xs.iter().try_for_each(|x| x.validate(g)),
            SpectrumExpr::Susp(_, x) => x.validate(g),
            SpectrumExpr::Dual(x) => {
                if !x.is_finite() {
                    return Err(Error::MalformedExpr("dual of a non-finite expression".into()));
                }
                x.validate(g)
            }
        }
    }

    /// Renders in the expression grammar with class tokens of `g`.
    pub fn render(&self, g: &GroupId) -> String {
        let list = |xs: &[SpectrumExpr]| xs.iter().map(|x| x.render(g)).collect::<Vec<_>>().join(",");
        match self {
            SpectrumExpr::Sphere => "S0".into(),
            SpectrumExpr::Cell(k) => format!("cell({})", k.token(g)),
            SpectrumExpr::Basic { class, cutoff } => format!("basic({},{cutoff})", class.token(g)),
            SpectrumExpr::IsoClass(k) => format!("iso({})", k.token(g)),
            SpectrumExpr::Wedge(xs) => format!("wedge({})", list(xs)),
            SpectrumExpr::Smash(xs) => format!("smash({})", list(xs)),
            SpectrumExpr::Susp(n, x) => format!("susp({n},{})", x.render(g)),
            SpectrumExpr::Dual(x) => format!("dual({})", x.render(g)),
        }
    }

    /// A display adapter bound to a group.
    pub fn display<'a>(&'a self, g: &'a GroupId) -> impl fmt::Display + 'a {
        struct D<'a>(&'a SpectrumExpr, &'a GroupId);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, g)
    }
}

/// Classes subconjugate to `K`.
pub fn subconjugacy_downset(g: &GroupId, k: SubgroupClass) -> Result<ClassSet> {
    use SubgroupClass::*;
    g.validate(k)?;
    if g.is_finite() {
        let below = g.classes(0).into_iter().filter(|&l| g.is_subconjugate(l, k).unwrap_or(false));
        return ClassSet::from_classes(g, below);
    }
    let infinite = matches!(k, SO2 | O2 | Full);
    let mut s = ClassSet::empty(g);
    if infinite {
        let all_d = matches!((g, k), (GroupId::O2, Full) | (GroupId::SO3, O2 | Full));
        let d = if all_d { IndexSet::all() } else { IndexSet::empty() };
        s = ClassSet::from_parts(g, IndexSet::all(), d, [])?;
    } else {
        // a finite subgroup only contains classes of order at most its own
        let bound = match k {
            C(n) | D(n) => n,
            _ => 5,
        };
        for l in g.classes(bound) {
            if l.series().is_some() && g.is_subconjugate(l, k)? {
                s.insert(l)?;
            }
        }
    }
    for l in g.special_classes() {
        if g.is_subconjugate(l, k)? {
            s.insert(l)?;
        }
    }
    Ok(s)
}

/// Downward closure under the cotoral order: a set containing the class of
/// the maximal torus gains every finite cyclic class.
pub fn lambda_ct(s: &ClassSet) -> ClassSet {
    let g = s.group();
    match g.circle_class() {
        Some(t) if s.contains(t) => s.union(&ClassSet::tail(g, Series::C, 1).expect("C-series")).expect("same group"),
        _ => s.clone(),
    }
}

/// Cotorally maximal members.
pub fn ctmax(s: &ClassSet) -> ClassSet {
    let g = s.group();
    match g.circle_class() {
        Some(t) if s.contains(t) => {
            s.difference(&ClassSet::tail(g, Series::C, 1).expect("C-series")).expect("same group")
        }
        _ => s.clone(),
    }
}

/// Geometric isotropy of an expression.
pub fn support(g: &GroupId, x: &SpectrumExpr) -> Result<ClassSet> {
    x.validate(g)?;
    support_unchecked(g, x)
}

fn support_unchecked(g: &GroupId, x: &SpectrumExpr) -> Result<ClassSet> {
    Ok(match x {
        SpectrumExpr::Sphere => ClassSet::all(g),
        SpectrumExpr::Cell(k) => subconjugacy_downset(g, *k)?,
        SpectrumExpr::IsoClass(k) => ClassSet::from_classes(g, [*k])?,
        SpectrumExpr::Basic { class, cutoff } => {
            let model = subgroup_model(g, *class)?;
            let u = basic_nbhd_in(&model, *cutoff)?;
            lambda_ct(&u.set().fuse(&model.fusion, g)?)
        }
        SpectrumExpr::Wedge(xs) => {
            let mut acc = ClassSet::empty(g);
            for y in xs {
                acc = acc.union(&support_unchecked(g, y)?)?;
            }
            acc
        }
        SpectrumExpr::Smash(xs) => {
            let mut acc = ClassSet::all(g);
            for y in xs {
                acc = acc.intersection(&support_unchecked(g, y)?)?;
            }
            acc
        }
        SpectrumExpr::Susp(_, y) | SpectrumExpr::Dual(y) => support_unchecked(g, y)?,
    })
}

/// A set is the support of a finite spectrum iff it is cotorally closed with
/// open and compact cotorally maximal part.
pub fn is_realizable(s: &ClassSet) -> bool {
    let top = ctmax(s);
    lambda_ct(s) == *s && is_f_open(&top) && is_f_compact(&top)
}

/// A wedge of basic cells, one per cotorally maximal class, with support `S`.
pub fn realize(s: &ClassSet) -> Result<SpectrumExpr> {
    if !is_realizable(s) {
        return Err(Error::NotRealizable(s.to_string()));
    }
    let g = s.group();
    if *s == ClassSet::all(g) {
        return Ok(SpectrumExpr::Sphere);
    }
    let top = ctmax(s);
    let mut cells = Vec::new();
    let mut rest = top.clone();
    if let Some(limit) = g.dihedral_limit().filter(|&l| top.contains(l)) {
        let start = g.series_start(Series::D).expect("dihedral series");
        let from = top.series(Series::D).tail_start(start).expect("open sets contain a tail");
        cells.push(SpectrumExpr::Basic { class: limit, cutoff: from });
        rest.remove(limit);
        rest = rest.difference(&ClassSet::tail(g, Series::D, from)?)?;
    }
    debug_assert!(rest.is_finite());
    for k in rest.members_up_to(u64::MAX) {
        cells.push(SpectrumExpr::Basic { class: k, cutoff: 1 });
    }
    Ok(if cells.len() == 1 { cells.pop().expect("one cell") } else { SpectrumExpr::Wedge(cells) })
}

/// The prime `℘_K` of finite spectra with contractible `K`-geometric fixed
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalmerPrime {
    pub group: GroupId,
    pub class: SubgroupClass,
}

impl BalmerPrime {
    pub fn new(g: &GroupId, k: SubgroupClass) -> Result<Self> {
        g.validate(k)?;
        Ok(BalmerPrime { group: g.clone(), class: k })
    }
}

/// `℘_L ⊆ ℘_K` iff `L` is cotoral in `K`.
pub fn prime_leq(p: &BalmerPrime, q: &BalmerPrime) -> Result<bool> {
    if p.group != q.group {
        return Err(Error::GroupMismatch);
    }
    p.group.is_cotoral(p.class, q.class)
}

/// Closure of the point `℘_K` in the Balmer spectrum.
pub fn point_closure(g: &GroupId, k: SubgroupClass) -> Result<ClassSet> {
    Ok(lambda_ct(&ClassSet::from_classes(g, [k])?))
}

fn require_finite(g: &GroupId, x: &SpectrumExpr) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NotFiniteExpr(x.render(g)))
    }
}

/// `Y` lies in the thick tensor ideal generated by `X`.
pub fn in_thickt(g: &GroupId, y: &SpectrumExpr, x: &SpectrumExpr) -> Result<bool> {
    require_finite(g, y)?;
    require_finite(g, x)?;
    support(g, y)?.is_subset(&support(g, x)?)
}

/// `X` and `Y` generate the same localizing tensor ideal.
pub fn loct_equal(g: &GroupId, x: &SpectrumExpr, y: &SpectrumExpr) -> Result<bool> {
    Ok(support(g, x)? == support(g, y)?)
}

/// Finite spectra `X1, X2` with `K_i` in the support of `X_i` and disjoint
/// supports, for classes with disjoint cotoral cones.
pub fn separate(g: &GroupId, k1: SubgroupClass, k2: SubgroupClass) -> Result<(SpectrumExpr, SpectrumExpr)> {
    let (c1, c2) = (point_closure(g, k1)?, point_closure(g, k2)?);
    if !c1.intersection(&c2)?.is_empty() {
        return Err(Error::NotUnrelated(g.class_name(k1), g.class_name(k2)));
    }
    // any dihedral overlap sits in a tail, so the cutoff only has to pass the
    // largest relevant index
    let bound = [k1, k2]
        .iter()
        .filter_map(|k| k.series().map(|(_, n)| n))
        .max()
        .unwrap_or(0)
        + 2;
    for cutoff in 1..=bound {
        let x1 = SpectrumExpr::Basic { class: k1, cutoff };
        let x2 = SpectrumExpr::Basic { class: k2, cutoff };
        if support(g, &x1)?.intersection(&support(g, &x2)?)?.is_empty() {
            return Ok((x1, x2));
        }
    }
    unreachable!("cutoffs past every finite index separate cotorally unrelated classes")
}

/// Closed in the Zariski topology transported from the Balmer spectrum.
pub fn is_zariski_closed(s: &ClassSet) -> bool {
    zariski_closure(s) == *s
}

/// Smallest Zariski-closed superset: cotoral closure, the torus class when
/// infinitely many cyclic classes are present, the dihedral limit when
/// infinitely many dihedral classes are present.
pub fn zariski_closure(s: &ClassSet) -> ClassSet {
    let g = s.group();
    let mut out = lambda_ct(s);
    if let Some(t) = g.circle_class() {
        if !out.series(Series::C).is_finite() {
            out.insert(t).expect("catalogue class");
        }
    }
    if let Some(limit) = g.dihedral_limit() {
        if !out.series(Series::D).is_finite() {
            out.insert(limit).expect("catalogue class");
        }
    }
    lambda_ct(&out)
}

pub fn expr_json(g: &GroupId, x: &SpectrumExpr) -> Value {
    json!({ "expr": x.render(g), "finite": x.is_finite() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tables;
    use SubgroupClass::*;

    fn set(g: &GroupId, ks: &[SubgroupClass]) -> ClassSet {
        ClassSet::from_classes(g, ks.iter().copied()).unwrap()
    }

    fn tail_d(g: &GroupId, n: u64) -> ClassSet {
        ClassSet::tail(g, Series::D, n).unwrap()
    }

    fn all_c(g: &GroupId) -> ClassSet {
        ClassSet::tail(g, Series::C, 1).unwrap()
    }

    #[test]
    fn basic_cells_of_o2() {
        let g = GroupId::O2;
        for n in [1, 2, 5] {
            let s = support(&g, &SpectrumExpr::Basic { class: Full, cutoff: n }).unwrap();
            let expected = set(&g, &[Full]).union(&tail_d(&g, n)).unwrap();
            assert_eq!(s, expected);
            assert_eq!(ctmax(&s), expected);
            assert!(is_realizable(&s));
        }
    }

    #[test]
    fn leaf_supports() {
        let g = GroupId::O2;
        assert_eq!(support(&g, &SpectrumExpr::Sphere).unwrap(), ClassSet::all(&g));
        let so2 = support(&g, &SpectrumExpr::Cell(SO2)).unwrap();
        assert_eq!(so2, set(&g, &[SO2]).union(&all_c(&g)).unwrap());
        let d6 = support(&g, &SpectrumExpr::Cell(D(6))).unwrap();
        assert_eq!(d6, set(&g, &[C(1), C(2), C(3), C(6), D(1), D(2), D(3), D(6)]));
        let so3 = GroupId::SO3;
        let a4 = support(&so3, &SpectrumExpr::Cell(Tetra)).unwrap();
        assert_eq!(a4, set(&so3, &[C(1), C(2), C(3), D(2), Tetra]));
        assert_eq!(support(&g, &SpectrumExpr::Basic { class: SO2, cutoff: 1 }).unwrap(), so2);
        assert_eq!(support(&g, &SpectrumExpr::IsoClass(SO2)).unwrap(), set(&g, &[SO2]));
        let o2_in_so3 = support(&so3, &SpectrumExpr::Basic { class: O2, cutoff: 1 }).unwrap();
        assert_eq!(o2_in_so3, set(&so3, &[O2, C(2)]).union(&tail_d(&so3, 2)).unwrap());
    }

    #[test]
    fn smash_of_unrelated_cells_is_empty() {
        let g = GroupId::load_finite(&tables::symmetric(3)).unwrap();
        let x = SpectrumExpr::Smash(vec![
            SpectrumExpr::Basic { class: Finite(1), cutoff: 1 },
            SpectrumExpr::Basic { class: Finite(2), cutoff: 1 },
        ]);
        assert!(support(&g, &x).unwrap().is_empty());
    }

    #[test]
    fn cotoral_closure_and_maxima() {
        let g = GroupId::O2;
        assert_eq!(lambda_ct(&set(&g, &[SO2])), set(&g, &[SO2]).union(&all_c(&g)).unwrap());
        assert_eq!(lambda_ct(&set(&g, &[D(5)])), set(&g, &[D(5)]));
        assert_eq!(ctmax(&set(&g, &[C(2), SO2, C(1)])), set(&g, &[SO2]));
        let top = ctmax(&ClassSet::all(&g));
        assert_eq!(top, set(&g, &[Full, SO2]).union(&tail_d(&g, 1)).unwrap());
    }

    #[test]
    fn realizability_examples() {
        let t = GroupId::Circle;
        assert!(is_realizable(&lambda_ct(&set(&t, &[C(2), C(3)]))));
        assert!(!is_realizable(&all_c(&t)));
        assert!(!is_realizable(&set(&GroupId::O2, &[Full])));
        let r = realize(&lambda_ct(&set(&t, &[C(2)]))).unwrap();
        assert_eq!(r, SpectrumExpr::Basic { class: C(2), cutoff: 1 });
        let o2 = GroupId::O2;
        let s = set(&o2, &[Full]).union(&tail_d(&o2, 3)).unwrap();
        assert_eq!(realize(&s).unwrap(), SpectrumExpr::Basic { class: Full, cutoff: 3 });
        assert_eq!(realize(&ClassSet::all(&o2)).unwrap(), SpectrumExpr::Sphere);
        assert_eq!(realize(&ClassSet::empty(&o2)).unwrap(), SpectrumExpr::Wedge(vec![]));
        assert!(matches!(realize(&all_c(&t)), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn realize_round_trips_with_holes() {
        let g = GroupId::SO3;
        let s = set(&g, &[O2, D(2), D(4), C(7), Tetra])
            .union(&tail_d(&g, 6))
            .unwrap();
        let x = realize(&s).unwrap();
        assert_eq!(support(&g, &x).unwrap(), s);
    }

    #[test]
    fn primes_and_closures() {
        let g = GroupId::O2;
        let p = |k| BalmerPrime::new(&g, k).unwrap();
        assert!(prime_leq(&p(C(3)), &p(SO2)).unwrap());
        assert!(!prime_leq(&p(D(3)), &p(Full)).unwrap());
        assert!(prime_leq(&p(D(3)), &p(D(3))).unwrap());
        let other = BalmerPrime::new(&GroupId::SO3, SO2).unwrap();
        assert_eq!(prime_leq(&p(SO2), &other), Err(Error::GroupMismatch));
        assert_eq!(point_closure(&GroupId::SO3, Tetra).unwrap(), set(&GroupId::SO3, &[Tetra]));
    }

    #[test]
    fn ideal_membership() {
        let g = GroupId::O2;
        assert!(in_thickt(&g, &SpectrumExpr::Cell(C(2)), &SpectrumExpr::Sphere).unwrap());
        let u1 = SpectrumExpr::Basic { class: Full, cutoff: 1 };
        assert!(!in_thickt(&g, &SpectrumExpr::Sphere, &u1).unwrap());
        assert!(in_thickt(&g, &u1, &u1).unwrap());
        assert!(matches!(
            in_thickt(&g, &SpectrumExpr::IsoClass(SO2), &u1),
            Err(Error::NotFiniteExpr(_))
        ));
        assert!(loct_equal(&g, &SpectrumExpr::Cell(Full), &SpectrumExpr::Sphere).unwrap());
        assert!(!loct_equal(&g, &SpectrumExpr::IsoClass(SO2), &SpectrumExpr::Cell(SO2)).unwrap());
        assert!(loct_equal(&g, &SpectrumExpr::IsoClass(D(3)), &SpectrumExpr::Basic { class: D(3), cutoff: 1 }).unwrap());
    }

    #[test]
    fn separation() {
        let g = GroupId::O2;
        let (x1, x2) = separate(&g, SO2, D(3)).unwrap();
        assert_eq!(x1, SpectrumExpr::Basic { class: SO2, cutoff: 1 });
        assert_eq!(x2, SpectrumExpr::Basic { class: D(3), cutoff: 1 });
        let (y1, _) = separate(&g, Full, D(3)).unwrap();
        assert_eq!(y1, SpectrumExpr::Basic { class: Full, cutoff: 4 });
        assert!(separate(&GroupId::SO3, Tetra, Icosa).is_ok());
        assert!(matches!(separate(&g, C(2), C(2)), Err(Error::NotUnrelated(..))));
        assert!(matches!(separate(&g, C(2), SO2), Err(Error::NotUnrelated(..))));
        let (z1, _) = separate(&GroupId::SO3, O2, C(2)).unwrap();
        assert_eq!(z1, SpectrumExpr::Basic { class: O2, cutoff: 2 });
    }

    #[test]
    fn zariski_closure_rules() {
        let g = GroupId::O2;
        let s = tail_d(&g, 3);
        assert!(!is_zariski_closed(&s));
        assert_eq!(zariski_closure(&s), s.union(&set(&g, &[Full])).unwrap());
        let t = GroupId::Circle;
        assert!(is_zariski_closed(&lambda_ct(&set(&t, &[C(2)]))));
        assert!(is_zariski_closed(&ClassSet::all(&g)));
        assert_eq!(zariski_closure(&all_c(&t)), ClassSet::all(&t));
        assert_eq!(zariski_closure(&set(&g, &[SO2])), point_closure(&g, SO2).unwrap());
    }

    #[test]
    fn rendering() {
        let g = GroupId::SO3;
        let x = SpectrumExpr::Wedge(vec![
            SpectrumExpr::Susp(-2, Box::new(SpectrumExpr::Cell(Tetra))),
            SpectrumExpr::Dual(Box::new(SpectrumExpr::Basic { class: O2, cutoff: 3 })),
        ]);
        assert_eq!(x.render(&g), "wedge(susp(-2,cell(A4)),dual(basic(O2,3)))");
        assert!(SpectrumExpr::Dual(Box::new(SpectrumExpr::IsoClass(SO2))).validate(&g).is_err());
    }
}
