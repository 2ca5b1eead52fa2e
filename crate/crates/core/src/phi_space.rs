//! The space `ΦG` of conjugacy classes of subgroups with finite Weyl group,
//! its Boolean algebra of clopen sets, and the f-topology on all classes.
//!
//! In the catalogue `ΦG` is a finite union of isolated points and at most one
//! convergent sequence `D(n) → limit`. A clopen set containing the limit must
//! contain a tail of the sequence; one avoiding it meets the sequence finitely.

use serde_json::{json, Value};

use crate::classset::ClassSet;
use crate::error::{Error, Result};
use crate::group::{finite, subgroup_model, tables, FiniteGroup, GroupId, Series, SubgroupClass, SubgroupModel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiComponent {
    Isolated(SubgroupClass),
    Sequence { series: Series, start: u64, limit: SubgroupClass },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSpace {
    group: GroupId,
    components: Vec<PhiComponent>,
}

pub fn phi(g: &GroupId) -> PhiSpace {
    let mut components = Vec::new();
    if let (Some(start), Some(limit)) = (g.series_start(Series::D), g.dihedral_limit()) {
        components.push(PhiComponent::Sequence { series: Series::D, start, limit });
    }
    for k in g.special_classes() {
        if Some(k) != g.dihedral_limit() && g.is_in_phi(k).unwrap_or(false) {
            components.push(PhiComponent::Isolated(k));
        }
    }
    PhiSpace { group: g.clone(), components }
}

impl PhiSpace {
    pub fn group(&self) -> &GroupId {
        &self.group
    }

    pub fn components(&self) -> &[PhiComponent] {
        &self.components
    }

    /// All points of the space as a class set.
    pub fn points(&self) -> ClassSet {
        let mut s = ClassSet::empty(&self.group);
        for c in &self.components {
            match *c {
                PhiComponent::Isolated(k) => s.insert(k).expect("catalogue class"),
                PhiComponent::Sequence { series, start, limit } => {
                    s = s.union(&ClassSet::tail(&self.group, series, start).expect("series")).expect("same group");
                    s.insert(limit).expect("catalogue class");
                }
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|c| match *c {
                PhiComponent::Isolated(k) => json!({ "isolated": k.token(&self.group) }),
                PhiComponent::Sequence { series, start, limit } => json!({
                    "sequence": {
                        "series": series.letter(),
                        "start": start,
                        "limit": limit.token(&self.group),
                    }
                }),
            })
            .collect();
        json!({ "group": self.group.to_string(), "components": comps })
    }
}

/// An open and closed subset of `ΦG`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClopenSet {
    set: ClassSet,
}

impl ClopenSet {
    pub fn new(set: ClassSet) -> Result<Self> {
        let space = phi(set.group());
        if !set.is_subset(&space.points())? {
            return Err(Error::MalformedDescriptor(format!("{set} is not contained in Φ")));
        }
        if let Some(limit) = set.group().dihedral_limit() {
            if set.contains(limit) != set.series(Series::D).is_cofinite() {
                return Err(Error::MalformedDescriptor(format!(
                    "{set} is not clopen: the limit point needs exactly a cofinite tail"
                )));
            }
        }
        Ok(ClopenSet { set })
    }

    pub fn whole(g: &GroupId) -> Self {
        ClopenSet { set: phi(g).points() }
    }

    pub fn empty(g: &GroupId) -> Self {
        ClopenSet { set: ClassSet::empty(g) }
    }

    pub fn singleton(g: &GroupId, k: SubgroupClass) -> Result<Self> {
        ClopenSet::new(ClassSet::from_classes(g, [k])?)
    }

    pub fn group(&self) -> &GroupId {
        self.set.group()
    }

    pub fn set(&self) -> &ClassSet {
        &self.set
    }

    pub fn contains(&self, k: SubgroupClass) -> bool {
        self.set.contains(k)
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.group() == other.group() {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(ClopenSet { set: self.set.union(&other.set)? })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(ClopenSet { set: self.set.intersection(&other.set)? })
    }

    pub fn complement(&self) -> Self {
        let whole = phi(self.group()).points();
        ClopenSet { set: whole.difference(&self.set).expect("same group") }
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        self.set.is_subset(&other.set)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.set.to_json();
        if let Some(series) = v.get_mut("series").and_then(Value::as_object_mut) {
            series.remove("C");
        }
        v
    }
}

/// Clopen neighbourhood of `K` in `ΦK` cut out by a series cutoff: the limit
/// point together with the sequence members of index `>= cutoff` when `K` is
/// the limit of a sequence in `ΦK`, otherwise `{K}`.
pub fn basic_nbhd(g: &GroupId, k: SubgroupClass, cutoff: u64) -> Result<ClopenSet> {
    let model = subgroup_model(g, k)?;
    basic_nbhd_in(&model, cutoff)
}

pub fn basic_nbhd_in(model: &SubgroupModel, cutoff: u64) -> Result<ClopenSet> {
    let h = &model.group;
    let top = h.top();
    let mut set = ClassSet::from_classes(h, [top])?;
    if h.dihedral_limit() == Some(top) {
        set = set.union(&ClassSet::tail(h, Series::D, cutoff)?)?;
    }
    ClopenSet::new(set)
}

/// Whether `S` is open in the f-topology on all classes. Every class is
/// isolated except the dihedral limit, whose neighbourhoods contain a tail of
/// dihedral classes.
pub fn is_f_open(s: &ClassSet) -> bool {
    match s.group().dihedral_limit() {
        Some(limit) if s.contains(limit) => s.series(Series::D).is_cofinite(),
        _ => true,
    }
}

/// Whether `S` is compact in the f-topology.
pub fn is_f_compact(s: &ClassSet) -> bool {
    let g = s.group();
    if !s.series(Series::C).is_finite() {
        return false;
    }
    let d = s.series(Series::D);
    d.is_finite() || g.dihedral_limit().is_some_and(|limit| s.contains(limit))
}

/// A clopen `U ⊆ Φ(N_G K)` with `K` cotoral in a member of `U` and no other
/// `N`-class of `G`-conjugates of `K` cotoral in a member of `U`.
#[derive(Debug, Clone)]
pub struct SeparatingClopen {
    pub normalizer: GroupId,
    pub clopen: ClopenSet,
}

pub fn separating_clopen(g: &GroupId, k: SubgroupClass) -> Result<SeparatingClopen> {
    use SubgroupClass::*;
    g.validate(k)?;
    let out = |normalizer: GroupId, clopen: ClopenSet| Ok(SeparatingClopen { normalizer, clopen });
    let top_nbhd = |n: GroupId| -> Result<SeparatingClopen> {
        let clopen = basic_nbhd(&n, n.top(), 1)?;
        out(n, clopen)
    };
    match (g, k) {
        (GroupId::Finite(fg), Finite(i)) => {
            let rep = fg.classes()[i].representative;
            let (model, elems) = fg.subgroup_model(fg.normalizer(rep))?;
            let pos = |e: usize| elems.iter().position(|&x| x == e).expect("element of N");
            let local = finite::members(rep).fold(0u128, |acc, e| acc | 1 << pos(e));
            let j = model.class_of(local).expect("K is a subgroup of its normalizer");
            let n = GroupId::Finite(model.into());
            let clopen = ClopenSet::singleton(&n, Finite(j))?;
            out(n, clopen)
        }
        (GroupId::Circle, _) => top_nbhd(GroupId::Circle),
        (GroupId::O2 | GroupId::SO3, C(_) | SO2) => out(GroupId::O2, ClopenSet::singleton(&GroupId::O2, SO2)?),
        (GroupId::O2, Full) | (GroupId::SO3, O2) => top_nbhd(GroupId::O2),
        (GroupId::SO3, Full) => top_nbhd(GroupId::SO3),
        (GroupId::O2 | GroupId::SO3, D(n)) if !(*g == GroupId::SO3 && n == 2) => {
            // N(D_n) = D_2n, with D_n = <r^2, s>
            let m = 2 * n as usize;
            if 2 * m > finite::MODEL_LIMIT {
                return Err(Error::TooLarge { order: 2 * m, limit: finite::MODEL_LIMIT });
            }
            let model = FiniteGroup::model(&tables::dihedral(m))?;
            let kset = model.generate(&[model.mul(1, 1), m]);
            finite_separating(model, kset)
        }
        (GroupId::SO3, D(2) | Tetra) => {
            // the normal Klein four-group, resp. A4, inside the octahedral group
            let model = FiniteGroup::model(&tables::symmetric(4))?;
            let order = if k == Tetra { 12 } else { 4 };
            let c = model
                .classes()
                .iter()
                .find(|c| c.order == order && c.class_size() == 1)
                .expect("normal subgroup of S4");
            let kset = c.representative;
            finite_separating(model, kset)
        }
        (GroupId::SO3, Octa) => top_nbhd(GroupId::Finite(FiniteGroup::model(&tables::symmetric(4))?.into())),
        (GroupId::SO3, Icosa) => top_nbhd(GroupId::Finite(FiniteGroup::model(&tables::alternating(5))?.into())),
        _ => Err(Error::UnsupportedInstance { group: g.to_string(), class: g.class_name(k) }),
    }
}

fn finite_separating(model: FiniteGroup, kset: u128) -> Result<SeparatingClopen> {
    let j = model.class_of(kset).expect("subgroup of the model");
    let n = GroupId::Finite(model.into());
    let clopen = ClopenSet::singleton(&n, SubgroupClass::Finite(j))?;
    Ok(SeparatingClopen { normalizer: n, clopen })
}
