//! Models of closed subgroups as groups in their own right, with the fusion
//! map sending subgroup classes of the model to classes of the ambient group.

use std::sync::{Arc, OnceLock};

use super::finite::{members, FiniteGroup};
use super::{tables, GroupId, SubgroupClass};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fusion {
    Identity,
    /// `O(2)` inside `SO(3)`: reflections become half-turns.
    O2IntoSO3,
    /// The circle as the class `SO2` of `O(2)` or `SO(3)`.
    CircleAsSO2,
    /// Finite model; entry `i` is the ambient class of model class `i`.
    Table(Vec<SubgroupClass>),
}

impl Fusion {
    pub fn apply(&self, k: SubgroupClass) -> SubgroupClass {
        use SubgroupClass::*;
        match self {
            Fusion::Identity => k,
            Fusion::O2IntoSO3 => match k {
                D(1) => C(2),
                Full => O2,
                other => other,
            },
            Fusion::CircleAsSO2 => match k {
                Full => SO2,
                other => other,
            },
            Fusion::Table(t) => match k {
                Finite(i) => t[i],
                other => panic!("class {other:?} is not a finite-model class"),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct SubgroupModel {
    pub ambient: GroupId,
    pub class: SubgroupClass,
    pub group: GroupId,
    pub fusion: Fusion,
}

fn cached(cell: &'static OnceLock<Arc<FiniteGroup>>, rows: fn() -> tables::Table) -> Arc<FiniteGroup> {
    cell.get_or_init(|| Arc::new(FiniteGroup::model(&rows()).expect("polyhedral model")))
        .clone()
}

pub(crate) fn tetrahedral() -> Arc<FiniteGroup> {
    static CELL: OnceLock<Arc<FiniteGroup>> = OnceLock::new();
    cached(&CELL, || tables::alternating(4))
}

pub(crate) fn octahedral() -> Arc<FiniteGroup> {
    static CELL: OnceLock<Arc<FiniteGroup>> = OnceLock::new();
    cached(&CELL, || tables::symmetric(4))
}

pub(crate) fn icosahedral() -> Arc<FiniteGroup> {
    static CELL: OnceLock<Arc<FiniteGroup>> = OnceLock::new();
    cached(&CELL, || tables::alternating(5))
}

fn is_cyclic(g: &FiniteGroup, set: u128) -> bool {
    let n = set.count_ones() as usize;
    members(set).any(|a| g.element_order(a) == n)
}

/// Ambient class of every subgroup class of a finite subgroup of `SO(3)`
/// (polyhedral model).
fn polyhedral_fusion(g: &FiniteGroup) -> Vec<SubgroupClass> {
    use SubgroupClass::*;
    g.classes()
        .iter()
        .map(|c| {
            let n = c.order as u64;
            if is_cyclic(g, c.representative) {
                C(n)
            } else {
                match n {
                    4 => D(2),
                    12 => Tetra,
                    24 => Octa,
                    60 => Icosa,
                    _ => D(n / 2),
                }
            }
        })
        .collect()
}

/// Dihedral model of order `2n`; reflections are the elements `>= n`.
fn dihedral_fusion(g: &FiniteGroup, n: usize, ambient: &GroupId) -> Vec<SubgroupClass> {
    use SubgroupClass::*;
    let reflections: u128 = (n..2 * n).fold(0, |acc, i| acc | 1 << i);
    g.classes()
        .iter()
        .map(|c| {
            let m = c.order as u64;
            if c.representative & reflections == 0 {
                C(m)
            } else if m == 2 && *ambient == GroupId::SO3 {
                C(2)
            } else {
                D(m / 2)
            }
        })
        .collect()
}

fn finite_model(group: Arc<FiniteGroup>, fusion: Vec<SubgroupClass>, ambient: &GroupId, class: SubgroupClass) -> SubgroupModel {
    SubgroupModel {
        ambient: ambient.clone(),
        class,
        group: GroupId::Finite(group),
        fusion: Fusion::Table(fusion),
    }
}

/// Model of the subgroup class `k` of `g`.
pub fn subgroup_model(g: &GroupId, k: SubgroupClass) -> Result<SubgroupModel> {
    use SubgroupClass::*;
    g.validate(k)?;
    let infinite = |group: GroupId, fusion: Fusion| SubgroupModel {
        ambient: g.clone(),
        class: k,
        group,
        fusion,
    };
    Ok(match (g, k) {
        (GroupId::Finite(fg), Finite(i)) => {
            let rep = fg.classes()[i].representative;
            let (model, elems) = fg.subgroup_model(rep)?;
            let fusion = model
                .classes()
                .iter()
                .map(|c| {
                    let set = members(c.representative).fold(0u128, |acc, e| acc | 1 << elems[e]);
                    Finite(fg.class_of(set).expect("subgroup of G"))
                })
                .collect();
            finite_model(Arc::new(model), fusion, g, k)
        }
        (_, Full) => infinite(g.clone(), Fusion::Identity),
        (_, SO2) => infinite(GroupId::Circle, Fusion::CircleAsSO2),
        (GroupId::SO3, O2) => infinite(GroupId::O2, Fusion::O2IntoSO3),
        (_, C(n)) => {
            let model = Arc::new(FiniteGroup::model(&tables::cyclic(n as usize))?);
            let fusion = model.classes().iter().map(|c| C(c.order as u64)).collect();
            finite_model(model, fusion, g, k)
        }
        (_, D(n)) => {
            let model = Arc::new(FiniteGroup::model(&tables::dihedral(n as usize))?);
            let fusion = dihedral_fusion(&model, n as usize, g);
            finite_model(model, fusion, g, k)
        }
        (_, Tetra) => {
            let m = tetrahedral();
            let f = polyhedral_fusion(&m);
            finite_model(m, f, g, k)
        }
        (_, Octa) => {
            let m = octahedral();
            let f = polyhedral_fusion(&m);
            finite_model(m, f, g, k)
        }
        (_, Icosa) => {
            let m = icosahedral();
            let f = polyhedral_fusion(&m);
            finite_model(m, f, g, k)
        }
        _ => return Err(g.invalid(k)),
    })
}

#[cfg(test)]
mod tests {
    use super::SubgroupClass::*;
    use super::*;

    fn fused(g: &GroupId, k: SubgroupClass) -> Vec<SubgroupClass> {
        let m = subgroup_model(g, k).unwrap();
        let mut out: Vec<SubgroupClass> = match &m.fusion {
            Fusion::Table(t) => t.clone(),
            _ => panic!("expected a finite model"),
        };
        out.sort();
        out.dedup();
        out
    }

    /// The catalogue's subconjugacy table agrees with the subgroups found by
    /// brute force inside finite models, wherever both apply.
    #[test]
    fn fusion_oracle_matches_catalogue() {
        for g in [GroupId::O2, GroupId::SO3] {
            let mut ks: Vec<SubgroupClass> = g.classes(12).into_iter().filter(|k| matches!(k, C(_) | D(_))).collect();
            if g == GroupId::SO3 {
                ks.extend([Tetra, Octa, Icosa]);
            }
            for k in ks {
                let below: Vec<SubgroupClass> = g
                    .classes(60)
                    .into_iter()
                    .filter(|&l| g.is_subconjugate(l, k).unwrap())
                    .collect();
                assert_eq!(fused(&g, k), below, "{g} {k:?}");
            }
        }
    }

    #[test]
    fn polyhedral_model_orders() {
        assert_eq!(tetrahedral().classes().len(), 5);
        assert_eq!(octahedral().classes().len(), 11);
        assert_eq!(icosahedral().classes().len(), 9);
    }

    #[test]
    fn o2_inside_so3() {
        let m = subgroup_model(&GroupId::SO3, O2).unwrap();
        assert_eq!(m.group, GroupId::O2);
        assert_eq!(m.fusion.apply(D(1)), C(2));
        assert_eq!(m.fusion.apply(Full), O2);
        assert_eq!(m.fusion.apply(D(4)), D(4));
    }
}
