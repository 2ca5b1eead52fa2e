//! Subgroup-class combinatorics for the supported groups: loaded finite
//! groups, the circle `T`, `O(2)` and `SO(3)`.
//!
//! Closed subgroups of the infinite catalogue groups up to conjugacy:
//!
//! | group  | classes                                                         |
//! |--------|-----------------------------------------------------------------|
//! | Circle | `C(n)` (n ≥ 1), the circle itself                               |
//! | O(2)   | `C(n)`, `D(n)` (n ≥ 1, `D(1)` a reflection), `SO(2)`, `O(2)`     |
//! | SO(3)  | `C(n)`, `D(n)` (n ≥ 2), `SO(2)`, `O(2)`, `A4`, `S4`, `A5`, `SO(3)` |
//!
//! Infinite series are handled symbolically by index arithmetic.

pub mod finite;
pub mod tables;

mod models;

use std::fmt;
use std::sync::Arc;

pub use finite::FiniteGroup;
pub use models::{subgroup_model, Fusion, SubgroupModel};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub enum GroupId {
    Finite(Arc<FiniteGroup>),
    Circle,
    O2,
    SO3,
}

impl PartialEq for GroupId {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupId::Finite(a), GroupId::Finite(b)) => Arc::ptr_eq(a, b) || a == b,
            (GroupId::Circle, GroupId::Circle)
            | (GroupId::O2, GroupId::O2)
            | (GroupId::SO3, GroupId::SO3) => true,
            _ => false,
        }
    }
}

impl Eq for GroupId {}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Finite(g) => write!(f, "Finite(order {})", g.order()),
            GroupId::Circle => f.write_str("Circle"),
            GroupId::O2 => f.write_str("O2"),
            GroupId::SO3 => f.write_str("SO3"),
        }
    }
}

/// Conjugacy class of closed subgroups.
///
/// `Full` is the ambient group itself. For `O2` ambient the class of `O(2)`
/// is `Full`; for `SO3` ambient the class `O2` is the proper subgroup `O(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupClass {
    C(u64),
    D(u64),
    SO2,
    O2,
    Tetra,
    Octa,
    Icosa,
    Full,
    Finite(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    C,
    D,
}

impl Series {
    pub fn class(self, n: u64) -> SubgroupClass {
        match self {
            Series::C => SubgroupClass::C(n),
            Series::D => SubgroupClass::D(n),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Series::C => "C",
            Series::D => "D",
        }
    }
}

impl SubgroupClass {
    pub fn series(self) -> Option<(Series, u64)> {
        match self {
            SubgroupClass::C(n) => Some((Series::C, n)),
            SubgroupClass::D(n) => Some((Series::D, n)),
            _ => None,
        }
    }

    /// Token used in the textual grammars.
    pub fn token(self, group: &GroupId) -> String {
        match self {
            SubgroupClass::C(n) => format!("C{n}"),
            SubgroupClass::D(n) => format!("D{n}"),
            SubgroupClass::SO2 => "SO2".into(),
            SubgroupClass::O2 => "O2".into(),
            SubgroupClass::Tetra => "A4".into(),
            SubgroupClass::Octa => "S4".into(),
            SubgroupClass::Icosa => "A5".into(),
            SubgroupClass::Finite(i) => format!("F{i}"),
            SubgroupClass::Full => match group {
                GroupId::Circle => "T".into(),
                GroupId::O2 => "O2".into(),
                GroupId::SO3 => "SO3".into(),
                GroupId::Finite(_) => "G".into(),
            },
        }
    }
}

impl GroupId {
    pub fn load_finite(rows: &[Vec<usize>]) -> Result<GroupId> {
        Ok(GroupId::Finite(Arc::new(FiniteGroup::from_table(rows)?)))
    }

    pub fn finite(&self) -> Option<&FiniteGroup> {
        match self {
            GroupId::Finite(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroupId::Finite(_))
    }

    /// First index of a series, if the group has it.
    pub fn series_start(&self, s: Series) -> Option<u64> {
        match (self, s) {
            (GroupId::Finite(_), _) => None,
            (_, Series::C) => Some(1),
            (GroupId::O2, Series::D) => Some(1),
            (GroupId::SO3, Series::D) => Some(2),
            (GroupId::Circle, Series::D) => None,
        }
    }

    /// The non-series classes, in canonical order.
    pub fn special_classes(&self) -> Vec<SubgroupClass> {
        use SubgroupClass::*;
        match self {
            GroupId::Finite(g) => (0..g.classes().len()).map(Finite).collect(),
            GroupId::Circle => vec![Full],
            GroupId::O2 => vec![SO2, Full],
            GroupId::SO3 => vec![SO2, O2, Tetra, Octa, Icosa, Full],
        }
    }

    /// The class containing the maximal torus, for groups with one.
    pub fn circle_class(&self) -> Option<SubgroupClass> {
        match self {
            GroupId::Finite(_) => None,
            GroupId::Circle => Some(SubgroupClass::Full),
            GroupId::O2 | GroupId::SO3 => Some(SubgroupClass::SO2),
        }
    }

    /// The class that the dihedral series converges to.
    pub fn dihedral_limit(&self) -> Option<SubgroupClass> {
        match self {
            GroupId::O2 => Some(SubgroupClass::Full),
            GroupId::SO3 => Some(SubgroupClass::O2),
            _ => None,
        }
    }

    pub fn top(&self) -> SubgroupClass {
        match self {
            GroupId::Finite(g) => SubgroupClass::Finite(g.top_class()),
            _ => SubgroupClass::Full,
        }
    }

    pub fn validate(&self, k: SubgroupClass) -> Result<()> {
        let ok = match (k.series(), self) {
            (Some((s, n)), _) => self.series_start(s).is_some_and(|start| n >= start),
            (None, GroupId::Finite(g)) => matches!(k, SubgroupClass::Finite(i) if i < g.classes().len()),
            (None, _) => self.special_classes().contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(self.invalid(k))
        }
    }

    pub(crate) fn invalid(&self, k: SubgroupClass) -> Error {
        Error::InvalidClass { group: self.to_string(), class: format!("{k:?}") }
    }

    /// All classes with series index at most `bound`, followed by the special
    /// classes.
    pub fn classes(&self, bound: u64) -> Vec<SubgroupClass> {
        let mut out = Vec::new();
        for s in [Series::C, Series::D] {
            if let Some(start) = self.series_start(s) {
                out.extend((start..=bound).map(|n| s.class(n)));
            }
        }
        out.extend(self.special_classes());
        out
    }

    /// Parses a class token (`C3`, `D5`, `SO2`, `O2`, `T`, `A4`, `S4`, `A5`,
    /// `G`, `F<i>`) in the context of this group.
    pub fn parse_class(&self, token: &str) -> Result<SubgroupClass> {
        use SubgroupClass::*;
        let t = token.trim();
        let bad = || Error::Parse(format!("unknown class token {t:?} for {self}"));
        let k = if let Some(rest) = t.strip_prefix('F').filter(|r| !r.is_empty()) {
            Finite(rest.parse().map_err(|_| bad())?)
        } else if let Some(n) = t.strip_prefix('C').and_then(|r| r.parse().ok()) {
            C(n)
        } else if let Some(n) = t.strip_prefix('D').and_then(|r| r.parse().ok()) {
            D(n)
        } else {
            match (t, self) {
                ("G", g) => g.top(),
                ("T" | "SO2", GroupId::Circle) => Full,
                ("T" | "A4", GroupId::SO3) => Tetra,
                ("O2", GroupId::O2) | ("SO3", GroupId::SO3) => Full,
                ("SO2", _) => SO2,
                ("O2", _) => O2,
                ("A4", _) => Tetra,
                ("S4", _) => Octa,
                ("A5", _) => Icosa,
                _ => return Err(bad()),
            }
        };
        self.validate(k)?;
        Ok(k)
    }

    pub fn class_name(&self, k: SubgroupClass) -> String {
        k.token(self)
    }

    /// `L ⊆_G K`: some conjugate of `L` lies in `K`.
    pub fn is_subconjugate(&self, l: SubgroupClass, k: SubgroupClass) -> Result<bool> {
        use SubgroupClass::*;
        self.validate(l)?;
        self.validate(k)?;
        if l == k {
            return Ok(true);
        }
        let divides = |a: u64, b: u64| b.is_multiple_of(a);
        Ok(match self {
            GroupId::Finite(g) => match (l, k) {
                (Finite(a), Finite(b)) => g.is_subconjugate(a, b),
                _ => unreachable!("validated"),
            },
            GroupId::Circle => match (l, k) {
                (C(m), C(n)) => divides(m, n),
                (_, Full) => true,
                _ => false,
            },
            GroupId::O2 => match (l, k) {
                (_, Full) => true,
                (C(m), C(n) | D(n)) => divides(m, n),
                (C(_), SO2) => true,
                (D(m), D(n)) => divides(m, n),
                _ => false,
            },
            GroupId::SO3 => match (l, k) {
                (_, Full) => true,
                (C(m), C(n)) => divides(m, n),
                // D(n) holds the rotations C(n) and n half-turns
                (C(m), D(n)) => divides(m, n) || m == 2,
                (C(_), SO2 | O2) => true,
                (C(m), Tetra) => [1, 2, 3].contains(&m),
                (C(m), Octa) => [1, 2, 3, 4].contains(&m),
                (C(m), Icosa) => [1, 2, 3, 5].contains(&m),
                (D(m), D(n)) => divides(m, n),
                (D(_), O2) => true,
                (D(m), Tetra) => m == 2,
                (D(m), Octa) => [2, 3, 4].contains(&m),
                (D(m), Icosa) => [2, 3, 5].contains(&m),
                (SO2, O2) => true,
                (Tetra, Octa | Icosa) => true,
                _ => false,
            },
        })
    }

    /// `L` is normal in `K` with torus quotient.
    pub fn is_cotoral(&self, l: SubgroupClass, k: SubgroupClass) -> Result<bool> {
        use SubgroupClass::*;
        self.validate(l)?;
        self.validate(k)?;
        Ok(l == k
            || match self {
                GroupId::Finite(_) => false,
                _ => matches!(l, C(_)) && Some(k) == self.circle_class(),
            })
    }

    /// `K` has finite Weyl group `N_G(K)/K`.
    pub fn is_in_phi(&self, k: SubgroupClass) -> Result<bool> {
        use SubgroupClass::*;
        self.validate(k)?;
        Ok(match self {
            GroupId::Finite(_) => true,
            GroupId::Circle => k == Full,
            GroupId::O2 | GroupId::SO3 => !matches!(k, C(_)),
        })
    }

    /// `|W_G(K)|` where it is finite and known from the catalogue.
    pub fn weyl_order(&self, k: SubgroupClass) -> Result<Option<u64>> {
        use SubgroupClass::*;
        if !self.is_in_phi(k)? {
            return Ok(None);
        }
        Ok(Some(match (self, k) {
            (GroupId::Finite(g), Finite(i)) => g.classes()[i].weyl_order() as u64,
            (_, Full) => 1,
            (GroupId::O2, SO2 | D(_)) => 2,
            (GroupId::SO3, SO2 | Tetra) => 2,
            (GroupId::SO3, D(2)) => 6,
            (GroupId::SO3, D(_)) => 2,
            (GroupId::SO3, O2 | Octa | Icosa) => 1,
            _ => return Ok(None),
        }))
    }

    /// Decomposes `(K)_G ∩ sub(H)` into `H`-conjugacy classes, expressed in the
    /// model of `H` returned alongside.
    pub fn restrict_class(&self, h: SubgroupClass, k: SubgroupClass) -> Result<Restriction> {
        use SubgroupClass::*;
        self.validate(h)?;
        self.validate(k)?;
        let unsupported = || Error::UnsupportedPair {
            group: self.to_string(),
            subgroup: self.class_name(h),
        };
        if !self.is_subconjugate(k, h)? {
            return Err(Error::NotSubconjugate {
                class: self.class_name(k),
                subgroup: self.class_name(h),
            });
        }
        match (self, h) {
            (GroupId::SO3, O2) => {
                // an order-2 subgroup of O(2) ⊂ SO(3) is the central rotation
                // or a reflection (a half-turn about a horizontal axis)
                let classes = match k {
                    C(2) => vec![C(2), D(1)],
                    C(n) => vec![C(n)],
                    D(n) => vec![D(n)],
                    SO2 => vec![SO2],
                    O2 => vec![Full],
                    _ => return Err(unsupported()),
                };
                Ok(Restriction { model: GroupId::O2, classes })
            }
            (GroupId::O2, SO2) => {
                let classes = match k {
                    C(n) => vec![C(n)],
                    SO2 => vec![Full],
                    _ => return Err(unsupported()),
                };
                Ok(Restriction { model: GroupId::Circle, classes })
            }
            (GroupId::Finite(g), Finite(hi)) => {
                let hrep = g.classes()[hi].representative;
                let (model, elems) = g.subgroup_model(hrep)?;
                let pos = |e: usize| elems.iter().position(|&x| x == e).expect("element of H");
                let mut classes: Vec<SubgroupClass> = Vec::new();
                let Finite(ki) = k else { unreachable!("validated") };
                for &m in &g.classes()[ki].members {
                    if m & hrep != m {
                        continue;
                    }
                    let local = finite::members(m).fold(0u128, |acc, e| acc | 1 << pos(e));
                    let c = Finite(model.class_of(local).expect("subgroup of H"));
                    if !classes.contains(&c) {
                        classes.push(c);
                    }
                }
                classes.sort();
                Ok(Restriction { model: GroupId::Finite(Arc::new(model)), classes })
            }
            _ => Err(unsupported()),
        }
    }
}

/// Result of [`GroupId::restrict_class`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub model: GroupId,
    pub classes: Vec<SubgroupClass>,
}

#[cfg(test)]
mod tests {
    use super::SubgroupClass::*;
    use super::*;

    fn s4() -> GroupId {
        GroupId::load_finite(&tables::symmetric(4)).unwrap()
    }

    #[test]
    fn class_listings() {
        assert_eq!(GroupId::Circle.classes(3), vec![C(1), C(2), C(3), Full]);
        assert_eq!(GroupId::O2.classes(2), vec![C(1), C(2), D(1), D(2), SO2, Full]);
        assert_eq!(
            GroupId::SO3.classes(2),
            vec![C(1), C(2), D(2), SO2, O2, Tetra, Octa, Icosa, Full]
        );
    }

    #[test]
    fn s4_has_eleven_classes() {
        assert_eq!(s4().finite().unwrap().classes().len(), 11);
    }

    #[test]
    fn subconjugacy_examples() {
        let g = GroupId::O2;
        assert!(g.is_subconjugate(C(2), D(4)).unwrap());
        assert!(!g.is_subconjugate(D(2), SO2).unwrap());
        for k in g.classes(6) {
            assert!(g.is_subconjugate(k, k).unwrap());
        }
        assert!(GroupId::SO3.is_subconjugate(C(2), D(3)).unwrap());
        assert!(!GroupId::SO3.is_subconjugate(D(2), D(3)).unwrap());
        assert!(GroupId::SO3.is_subconjugate(Tetra, Icosa).unwrap());
        assert!(!GroupId::SO3.is_subconjugate(Octa, Icosa).unwrap());
    }

    #[test]
    fn cotoral_examples() {
        assert!(GroupId::O2.is_cotoral(C(5), SO2).unwrap());
        assert!(!GroupId::O2.is_cotoral(D(3), Full).unwrap());
        assert!(!GroupId::SO3.is_cotoral(SO2, Full).unwrap());
        assert!(GroupId::Circle.is_cotoral(C(1), Full).unwrap());
        assert!(!GroupId::O2.is_cotoral(C(1), Full).unwrap());
    }

    #[test]
    fn phi_membership() {
        assert!(!GroupId::Circle.is_in_phi(C(7)).unwrap());
        assert!(GroupId::O2.is_in_phi(D(3)).unwrap());
        assert!(GroupId::SO3.is_in_phi(Tetra).unwrap());
        assert!(GroupId::SO3.is_in_phi(SO2).unwrap());
        assert!(!GroupId::SO3.is_in_phi(C(3)).unwrap());
        assert_eq!(GroupId::SO3.weyl_order(D(2)).unwrap(), Some(6));
    }

    #[test]
    fn invalid_classes_are_rejected() {
        assert!(matches!(GroupId::SO3.is_cotoral(D(1), Full), Err(Error::InvalidClass { .. })));
        assert!(GroupId::Circle.validate(D(2)).is_err());
        assert!(GroupId::O2.validate(Tetra).is_err());
        assert!(GroupId::Circle.validate(C(0)).is_err());
        assert!(s4().validate(Finite(11)).is_err());
    }

    #[test]
    fn parse_tokens() {
        assert_eq!(GroupId::O2.parse_class("O2").unwrap(), Full);
        assert_eq!(GroupId::SO3.parse_class("O2").unwrap(), O2);
        assert_eq!(GroupId::SO3.parse_class("A5").unwrap(), Icosa);
        assert_eq!(GroupId::Circle.parse_class("T").unwrap(), Full);
        assert_eq!(GroupId::SO3.parse_class("C12").unwrap(), C(12));
        assert_eq!(s4().parse_class("G").unwrap(), Finite(10));
        assert!(GroupId::SO3.parse_class("D1").is_err());
        assert!(GroupId::O2.parse_class("Q8").is_err());
    }

    #[test]
    fn restriction_so3_to_o2() {
        let r = GroupId::SO3.restrict_class(O2, C(2)).unwrap();
        assert_eq!(r.model, GroupId::O2);
        assert_eq!(r.classes, vec![C(2), D(1)]);
        assert_eq!(GroupId::SO3.restrict_class(O2, C(3)).unwrap().classes, vec![C(3)]);
        assert!(matches!(
            GroupId::SO3.restrict_class(O2, Tetra),
            Err(Error::NotSubconjugate { .. })
        ));
        assert!(matches!(
            GroupId::SO3.restrict_class(Octa, C(2)),
            Err(Error::UnsupportedPair { .. })
        ));
    }

    #[test]
    fn restriction_o2_to_circle() {
        for n in 1..6 {
            let r = GroupId::O2.restrict_class(SO2, C(n)).unwrap();
            assert_eq!(r.model, GroupId::Circle);
            assert_eq!(r.classes, vec![C(n)]);
        }
    }

    #[test]
    fn restriction_s4_to_d4_splits_involutions() {
        let g = s4();
        let f = g.finite().unwrap();
        let d4 = f.classes().iter().position(|c| c.order == 8).unwrap();
        // transpositions and double transpositions both meet D4
        let order2: Vec<usize> = (0..f.classes().len()).filter(|&i| f.classes()[i].order == 2).collect();
        assert_eq!(order2.len(), 2);
        let counts: Vec<usize> = order2
            .iter()
            .map(|&c| g.restrict_class(Finite(d4), Finite(c)).unwrap().classes.len())
            .collect();
        // double transpositions: central one and the non-central pair
        assert!(counts.contains(&2));
    }
}
