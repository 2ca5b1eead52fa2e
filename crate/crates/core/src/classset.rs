//! Sets of subgroup classes in normalized form: each infinite series is
//! either a finite index set or the complement of one, and the remaining
//! (special) classes are listed explicitly.
//!
//! Every set the theory produces (supports, cotoral cones, clopen sets and
//! their Boolean combinations) has this form, and the form is closed under
//! the Boolean operations.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{Fusion, GroupId, Series, SubgroupClass};

/// Subset of `{start, start+1, ...}`: finitely many indices, or all but
/// finitely many.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexSet {
    Finite(BTreeSet<u64>),
    /// Complement of the listed indices.
    Cofinite(BTreeSet<u64>),
}

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet::Finite(BTreeSet::new())
    }

    pub fn all() -> Self {
        IndexSet::Cofinite(BTreeSet::new())
    }

    pub fn tail(start: u64, from: u64) -> Self {
        IndexSet::Cofinite((start..from).collect())
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            IndexSet::Finite(s) => s.contains(&n),
            IndexSet::Cofinite(s) => !s.contains(&n),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IndexSet::Finite(s) if s.is_empty())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, IndexSet::Finite(_))
    }

    pub fn is_cofinite(&self) -> bool {
        matches!(self, IndexSet::Cofinite(_))
    }

    /// First index from which every index is a member, if cofinite.
    pub fn tail_start(&self, start: u64) -> Option<u64> {
        match self {
            IndexSet::Finite(_) => None,
            IndexSet::Cofinite(s) => Some(s.iter().next_back().map_or(start, |m| (m + 1).max(start))),
        }
    }

    fn normalize(self, start: u64) -> Self {
        match self {
            IndexSet::Finite(s) => IndexSet::Finite(s.into_iter().filter(|&n| n >= start).collect()),
            IndexSet::Cofinite(s) => IndexSet::Cofinite(s.into_iter().filter(|&n| n >= start).collect()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use IndexSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
            (Finite(f), Cofinite(c)) | (Cofinite(c), Finite(f)) => Cofinite(c - f),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        use IndexSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
            (Finite(f), Cofinite(c)) | (Cofinite(c), Finite(f)) => Finite(f - c),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            IndexSet::Finite(s) => IndexSet::Cofinite(s.clone()),
            IndexSet::Cofinite(s) => IndexSet::Finite(s.clone()),
        }
    }

    /// Members not exceeding `bound`.
    pub fn members_up_to(&self, start: u64, bound: u64) -> Vec<u64> {
        match self {
            IndexSet::Finite(s) => s.range(start..=bound).copied().collect(),
            IndexSet::Cofinite(_) => (start..=bound).filter(|&n| self.contains(n)).collect(),
        }
    }

    fn to_json(&self) -> Value {
        let (kind, idx) = match self {
            IndexSet::Finite(s) => ("finite", s),
            IndexSet::Cofinite(s) => ("cofinite", s),
        };
        json!({ "kind": kind, "indices": idx.iter().collect::<Vec<_>>() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSet {
    group: GroupId,
    cyclic: IndexSet,
    dihedral: IndexSet,
    specials: BTreeSet<SubgroupClass>,
}

impl ClassSet {
    pub fn empty(group: &GroupId) -> Self {
        ClassSet {
            group: group.clone(),
            cyclic: IndexSet::empty(),
            dihedral: IndexSet::empty(),
            specials: BTreeSet::new(),
        }
    }

    pub fn all(group: &GroupId) -> Self {
        let mut s = ClassSet::empty(group);
        for series in [Series::C, Series::D] {
            if group.series_start(series).is_some() {
                *s.series_mut(series) = IndexSet::all();
            }
        }
        s.specials = group.special_classes().into_iter().collect();
        s
    }

    pub fn from_classes(group: &GroupId, classes: impl IntoIterator<Item = SubgroupClass>) -> Result<Self> {
        let mut s = ClassSet::empty(group);
        for k in classes {
            s.insert(k)?;
        }
        Ok(s)
    }

    /// Builds a set from raw parts, dropping out-of-range indices.
    pub fn from_parts(
        group: &GroupId,
        cyclic: IndexSet,
        dihedral: IndexSet,
        specials: impl IntoIterator<Item = SubgroupClass>,
    ) -> Result<Self> {
        let mut s = ClassSet::empty(group);
        for (series, idx) in [(Series::C, cyclic), (Series::D, dihedral)] {
            match group.series_start(series) {
                Some(start) => *s.series_mut(series) = idx.normalize(start),
                None if idx.is_empty() => {}
                None => {
                    return Err(Error::MalformedDescriptor(format!(
                        "{group} has no {}-series",
                        series.letter()
                    )))
                }
            }
        }
        for k in specials {
            if k.series().is_some() {
                return Err(Error::MalformedDescriptor(format!("{k:?} is not a special class")));
            }
            s.insert(k)?;
        }
        Ok(s)
    }

    /// All indices `>= from` of a series.
    pub fn tail(group: &GroupId, series: Series, from: u64) -> Result<Self> {
        let start = group.series_start(series).ok_or_else(|| {
            Error::MalformedDescriptor(format!("{group} has no {}-series", series.letter()))
        })?;
        let mut s = ClassSet::empty(group);
        *s.series_mut(series) = IndexSet::tail(start, from.max(start));
        Ok(s)
    }

    pub fn group(&self) -> &GroupId {
        &self.group
    }

    pub fn series(&self, s: Series) -> &IndexSet {
        match s {
            Series::C => &self.cyclic,
            Series::D => &self.dihedral,
        }
    }

    fn series_mut(&mut self, s: Series) -> &mut IndexSet {
        match s {
            Series::C => &mut self.cyclic,
            Series::D => &mut self.dihedral,
        }
    }

    pub fn specials(&self) -> &BTreeSet<SubgroupClass> {
        &self.specials
    }

    pub fn insert(&mut self, k: SubgroupClass) -> Result<()> {
        self.group.validate(k)?;
        match k.series() {
            Some((s, n)) => {
                let idx = self.series_mut(s);
                *idx = idx.union(&IndexSet::Finite([n].into()));
            }
            None => {
                self.specials.insert(k);
            }
        }
        Ok(())
    }

    pub fn remove(&mut self, k: SubgroupClass) {
        if !self.contains(k) {
            return;
        }
        match k.series() {
            Some((s, n)) => {
                let idx = self.series_mut(s);
                *idx = idx.intersection(&IndexSet::Cofinite([n].into()));
            }
            None => {
                self.specials.remove(&k);
            }
        }
    }

    pub fn contains(&self, k: SubgroupClass) -> bool {
        if self.group.validate(k).is_err() {
            return false;
        }
        match k.series() {
            Some((s, n)) => self.series(s).contains(n),
            None => self.specials.contains(&k),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cyclic.is_empty() && self.dihedral.is_empty() && self.specials.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.cyclic.is_finite() && self.dihedral.is_finite()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClassSet {
            group: self.group.clone(),
            cyclic: self.cyclic.union(&other.cyclic),
            dihedral: self.dihedral.union(&other.dihedral),
            specials: &self.specials | &other.specials,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ClassSet {
            group: self.group.clone(),
            cyclic: self.cyclic.intersection(&other.cyclic),
            dihedral: self.dihedral.intersection(&other.dihedral),
            specials: &self.specials & &other.specials,
        })
    }

    pub fn complement(&self) -> Self {
        let all = ClassSet::all(&self.group);
        let comp = |s: Series, idx: &IndexSet| {
            if self.group.series_start(s).is_some() {
                idx.complement()
            } else {
                IndexSet::empty()
            }
        };
        ClassSet {
            group: self.group.clone(),
            cyclic: comp(Series::C, &self.cyclic),
            dihedral: comp(Series::D, &self.dihedral),
            specials: &all.specials - &self.specials,
        }
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Members with series index at most `bound`, in canonical order.
    pub fn members_up_to(&self, bound: u64) -> Vec<SubgroupClass> {
        let mut out = Vec::new();
        for s in [Series::C, Series::D] {
            if let Some(start) = self.group.series_start(s) {
                out.extend(self.series(s).members_up_to(start, bound).into_iter().map(|n| s.class(n)));
            }
        }
        out.extend(self.specials.iter().copied());
        out
    }

    /// Image under a subgroup model's fusion map.
    pub fn fuse(&self, fusion: &Fusion, ambient: &GroupId) -> Result<ClassSet> {
        let mut out = ClassSet::empty(ambient);
        match fusion {
            Fusion::Identity => return Ok(ClassSet { group: ambient.clone(), ..self.clone() }),
            Fusion::O2IntoSO3 => {
                out.cyclic = self.cyclic.clone();
                // D(1) becomes a half-turn C(2); D(n >= 2) keep their index
                out.dihedral = self.dihedral.clone().normalize(2);
                if self.dihedral.contains(1) {
                    out.insert(SubgroupClass::C(2))?;
                }
            }
            Fusion::CircleAsSO2 => {
                out.cyclic = self.cyclic.clone();
            }
            Fusion::Table(_) => {}
        }
        for &k in &self.specials {
            out.insert(fusion.apply(k))?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let isolated: Vec<String> = self.specials.iter().map(|k| k.token(&self.group)).collect();
        let mut series = serde_json::Map::new();
        for s in [Series::C, Series::D] {
            if self.group.series_start(s).is_some() {
                series.insert(s.letter().into(), self.series(s).to_json());
            }
        }
        json!({
            "isolated": isolated,
            "series": series,
            "descriptor": self.to_string(),
        })
    }
}

impl fmt::Display for ClassSet {
    /// Renders in the set-descriptor grammar, e.g. `{C2,SO2}+tailD(4)-{D6}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut finite: Vec<String> = Vec::new();
        let mut tails: Vec<String> = Vec::new();
        for s in [Series::C, Series::D] {
            let Some(start) = self.group.series_start(s) else { continue };
            match self.series(s) {
                IndexSet::Finite(idx) => finite.extend(idx.iter().map(|n| format!("{}{n}", s.letter()))),
                IndexSet::Cofinite(ex) => {
                    let from = self.series(s).tail_start(start).unwrap_or(start);
                    tails.push(format!("tail{}({from})", s.letter()));
                    finite.extend(
                        (start..from).filter(|n| !ex.contains(n)).map(|n| format!("{}{n}", s.letter())),
                    );
                }
            }
        }
        finite.extend(self.specials.iter().map(|k| k.token(&self.group)));
        let mut parts = Vec::new();
        if !finite.is_empty() || tails.is_empty() {
            parts.push(format!("{{{}}}", finite.join(",")));
        }
        parts.extend(tails);
        write!(f, "{}", parts.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SubgroupClass::*;

    #[test]
    fn boolean_operations() {
        let g = GroupId::O2;
        let a = ClassSet::from_classes(&g, [D(1), D(2)]).unwrap();
        let tail = ClassSet::tail(&g, Series::D, 2).unwrap().union(&ClassSet::from_classes(&g, [Full]).unwrap()).unwrap();
        assert_eq!(a.intersection(&tail).unwrap(), ClassSet::from_classes(&g, [D(2)]).unwrap());
        assert_eq!(a.union(&a.complement()).unwrap(), ClassSet::all(&g));
        assert!(a.intersection(&a.complement()).unwrap().is_empty());
    }

    #[test]
    fn display_uses_descriptor_grammar() {
        let g = GroupId::O2;
        let s = ClassSet::tail(&g, Series::D, 3)
            .unwrap()
            .union(&ClassSet::from_classes(&g, [Full, C(2)]).unwrap())
            .unwrap();
        assert_eq!(s.to_string(), "{C2,O2}+tailD(3)");
        assert_eq!(ClassSet::empty(&g).to_string(), "{}");
    }

    #[test]
    fn fusion_of_o2_sets_into_so3() {
        let o2 = GroupId::O2;
        let u1 = ClassSet::tail(&o2, Series::D, 1).unwrap().union(&ClassSet::from_classes(&o2, [Full]).unwrap()).unwrap();
        let f = u1.fuse(&Fusion::O2IntoSO3, &GroupId::SO3).unwrap();
        assert!(f.contains(C(2)));
        assert!(f.contains(SubgroupClass::O2));
        assert!(f.contains(D(2)));
        assert_eq!(f.series(Series::D), &IndexSet::all());
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = ClassSet::all(&GroupId::O2);
        let b = ClassSet::all(&GroupId::SO3);
        assert_eq!(a.union(&b), Err(Error::GroupMismatch));
    }
}
