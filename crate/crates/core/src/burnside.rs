//! The rational Burnside ring as locally constant `Q`-valued functions on
//! `ΦG`, with the table of marks and primitive idempotents of finite groups.

use num::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::finite::{members, ElementSet};
use crate::group::{FiniteGroup, GroupId, SubgroupClass};
use crate::linalg::{fmt_q, q, solve_upper_triangular, unit_vec, Q};
use crate::phi_space::{phi, ClopenSet};

fn finite_group(g: &GroupId) -> Result<&FiniteGroup> {
    g.finite().ok_or_else(|| Error::NotFinite(g.to_string()))
}

/// Table of marks. Rows and columns follow the class order of the group,
/// which sorts by subgroup order; `entries[l][k] = |(G/K)^L|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarksMatrix {
    pub group: GroupId,
    pub entries: Vec<Vec<Q>>,
}

impl MarksMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, l: usize, k: usize) -> &Q {
        &self.entries[l][k]
    }

    pub fn to_json(&self) -> Value {
        let g = self.group.finite().expect("finite");
        let classes: Vec<Value> = g
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| json!({ "class": format!("F{i}"), "order": c.order }))
            .collect();
        let rows: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(fmt_q).collect()).collect();
        json!({ "classes": classes, "marks": rows })
    }
}

/// `|(G/K)^L|`: the number of cosets `gK` with `g⁻¹Lg ⊆ K`.
fn fixed_cosets(g: &FiniteGroup, l: ElementSet, k: ElementSet) -> usize {
    let hits = (0..g.order()).filter(|&x| g.conjugate(l, x) & !k == 0).count();
    hits / k.count_ones() as usize
}

pub fn marks_matrix(g: &GroupId) -> Result<MarksMatrix> {
    let fg = finite_group(g)?;
    let reps: Vec<ElementSet> = fg.classes().iter().map(|c| c.representative).collect();
    let entries = reps
        .iter()
        .map(|&l| reps.iter().map(|&k| q(fixed_cosets(fg, l, k) as i64)).collect())
        .collect();
    Ok(MarksMatrix { group: g.clone(), entries })
}

fn finite_index(g: &GroupId, l: SubgroupClass) -> Result<usize> {
    g.validate(l)?;
    match l {
        SubgroupClass::Finite(i) => Ok(i),
        other => Err(g.invalid(other)),
    }
}

/// Coefficients over the transitive basis `[G/K]` of the idempotent with mark
/// 1 at `L` and 0 elsewhere.
pub fn primitive_idempotent(g: &GroupId, l: SubgroupClass) -> Result<Vec<Q>> {
    let m = marks_matrix(g)?;
    let i = finite_index(g, l)?;
    Ok(solve_upper_triangular(&m.entries, &unit_vec(m.dim(), i)))
}

/// Mark at `L` of the virtual `G`-set `Σ c_K [G/K]`.
pub fn mark_of(g: &GroupId, coeffs: &[Q], l: SubgroupClass) -> Result<Q> {
    let m = marks_matrix(g)?;
    let i = finite_index(g, l)?;
    check_len(&m, coeffs)?;
    Ok(m.entries[i].iter().zip(coeffs).map(|(a, b)| a * b).sum())
}

fn check_len(m: &MarksMatrix, coeffs: &[Q]) -> Result<()> {
    if coeffs.len() == m.dim() {
        Ok(())
    } else {
        Err(Error::Parse(format!("expected {} coefficients, got {}", m.dim(), coeffs.len())))
    }
}

/// Decomposes the `G`-set `G/H × G/K` into orbits by brute force and returns
/// its transitive-basis coordinates.
pub fn product_of_transitive(g: &FiniteGroup, h: usize, k: usize) -> Vec<Q> {
    let hset = g.classes()[h].representative;
    let kset = g.classes()[k].representative;
    let cosets = |s: ElementSet| -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = Vec::new();
        for x in 0..g.order() {
            let c = members(s).fold(0u128, |acc, y| acc | 1 << g.mul(x, y));
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    };
    let (ch, ck) = (cosets(hset), cosets(kset));
    let act = |x: usize, c: ElementSet| members(c).fold(0u128, |acc, y| acc | 1 << g.mul(x, y));
    let mut seen = vec![vec![false; ck.len()]; ch.len()];
    let mut out = vec![Q::zero(); g.classes().len()];
    for a in 0..ch.len() {
        for b in 0..ck.len() {
            if seen[a][b] {
                continue;
            }
            let mut stab: ElementSet = 0;
            for x in 0..g.order() {
                let (xa, xb) = (act(x, ch[a]), act(x, ck[b]));
                let ia = ch.iter().position(|&c| c == xa).expect("coset");
                let ib = ck.iter().position(|&c| c == xb).expect("coset");
                seen[ia][ib] = true;
                if ia == a && ib == b {
                    stab |= 1 << x;
                }
            }
            out[g.class_of(stab).expect("stabilizer")] += Q::one();
        }
    }
    out
}

/// A locally constant rational function on `ΦG`, stored as a partition of
/// `ΦG` into clopen cells with distinct values, sorted by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    group: GroupId,
    cells: Vec<(ClopenSet, Q)>,
}

impl BurnsideElement {
    pub fn constant(g: &GroupId, value: Q) -> Self {
        BurnsideElement { group: g.clone(), cells: vec![(ClopenSet::whole(g), value)] }.normalized()
    }

    pub fn zero(g: &GroupId) -> Self {
        Self::constant(g, Q::zero())
    }

    pub fn one(g: &GroupId) -> Self {
        Self::constant(g, Q::one())
    }

    /// Indicator function of a clopen set.
    pub fn e_u(g: &GroupId, u: &ClopenSet) -> Result<Self> {
        if u.group() != g {
            return Err(Error::SpaceMismatch);
        }
        let cells = vec![(u.clone(), Q::one()), (u.complement(), Q::zero())];
        Ok(BurnsideElement { group: g.clone(), cells }.normalized())
    }

    /// Builds an element from cells that must partition `ΦG`.
    pub fn from_cells(g: &GroupId, cells: Vec<(ClopenSet, Q)>) -> Result<Self> {
        let mut covered = ClopenSet::empty(g);
        for (u, _) in &cells {
            if u.group() != g {
                return Err(Error::SpaceMismatch);
            }
            if !covered.intersection(u)?.is_empty() {
                return Err(Error::MalformedDescriptor("cells overlap".into()));
            }
            covered = covered.union(u)?;
        }
        if covered != ClopenSet::whole(g) {
            return Err(Error::MalformedDescriptor("cells do not cover Φ".into()));
        }
        Ok(BurnsideElement { group: g.clone(), cells }.normalized())
    }

    /// The function of marks of `Σ c_K [G/K]` for a finite group.
    pub fn from_transitive(g: &GroupId, coeffs: &[Q]) -> Result<Self> {
        let m = marks_matrix(g)?;
        check_len(&m, coeffs)?;
        let cells = (0..m.dim())
            .map(|l| {
                let value = m.entries[l].iter().zip(coeffs).map(|(a, b)| a * b).sum();
                Ok((ClopenSet::singleton(g, SubgroupClass::Finite(l))?, value))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BurnsideElement { group: g.clone(), cells }.normalized())
    }

    pub fn group(&self) -> &GroupId {
        &self.group
    }

    pub fn cells(&self) -> &[(ClopenSet, Q)] {
        &self.cells
    }

    pub fn value_at(&self, k: SubgroupClass) -> Result<Q> {
        if !self.group.is_in_phi(k)? {
            return Err(Error::InvalidClass { group: self.group.to_string(), class: self.group.class_name(k) });
        }
        let cell = self.cells.iter().find(|(u, _)| u.contains(k)).expect("cells cover Φ");
        Ok(cell.1.clone())
    }

    fn normalized(mut self) -> Self {
        let mut merged: Vec<(ClopenSet, Q)> = Vec::new();
        for (u, v) in self.cells.drain(..) {
            if u.is_empty() {
                continue;
            }
            match merged.iter_mut().find(|(_, w)| *w == v) {
                Some(cell) => cell.0 = cell.0.union(&u).expect("same space"),
                None => merged.push((u, v)),
            }
        }
        merged.sort_by(|a, b| a.1.cmp(&b.1));
        self.cells = merged;
        self
    }

    fn combine(&self, other: &Self, op: impl Fn(&Q, &Q) -> Q) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::SpaceMismatch);
        }
        let mut cells = Vec::new();
        for (u, x) in &self.cells {
            for (v, y) in &other.cells {
                let w = u.intersection(v)?;
                if !w.is_empty() {
                    cells.push((w, op(x, y)));
                }
            }
        }
        Ok(BurnsideElement { group: self.group.clone(), cells }.normalized())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let cells = self.cells.iter().map(|(u, v)| (u.clone(), v * c)).collect();
        BurnsideElement { group: self.group.clone(), cells }.normalized()
    }

    /// Support of the function: where it is nonzero.
    pub fn support(&self) -> ClopenSet {
        self.cells
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .fold(ClopenSet::empty(&self.group), |acc, (u, _)| acc.union(u).expect("same space"))
    }

    pub fn is_idempotent(&self) -> bool {
        self.cells.iter().all(|(_, v)| v.is_zero() || v.is_one())
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|(u, v)| json!({ "set": u.to_json(), "value": fmt_q(v) }))
            .collect();
        json!({ "group": self.group.to_string(), "space": phi(&self.group).to_json(), "cells": cells })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classset::ClassSet;
    use crate::group::{tables, Series};
    use crate::linalg::qf;
    use SubgroupClass::*;

    fn z2() -> GroupId {
        GroupId::load_finite(&tables::cyclic(2)).unwrap()
    }

    #[test]
    fn z2_marks_and_idempotents() {
        let m = marks_matrix(&z2()).unwrap();
        assert_eq!(m.entries, vec![vec![q(2), q(1)], vec![q(0), q(1)]]);
        assert_eq!(primitive_idempotent(&z2(), Finite(0)).unwrap(), vec![qf(1, 2), q(0)]);
        assert_eq!(primitive_idempotent(&z2(), Finite(1)).unwrap(), vec![qf(-1, 2), q(1)]);
        assert_eq!(mark_of(&z2(), &[q(1), q(0)], Finite(0)).unwrap(), q(2));
    }

    #[test]
    fn trivial_group() {
        let g = GroupId::load_finite(&tables::cyclic(1)).unwrap();
        assert_eq!(marks_matrix(&g).unwrap().entries, vec![vec![q(1)]]);
        assert_eq!(primitive_idempotent(&g, Finite(0)).unwrap(), vec![q(1)]);
    }

    #[test]
    fn infinite_groups_have_no_table() {
        assert!(matches!(marks_matrix(&GroupId::O2), Err(Error::NotFinite(_))));
        assert!(matches!(primitive_idempotent(&GroupId::SO3, Full), Err(Error::NotFinite(_))));
    }

    #[test]
    fn s4_diagonal_is_weyl_orders() {
        let g = GroupId::load_finite(&tables::symmetric(4)).unwrap();
        let fg = g.finite().unwrap();
        let m = marks_matrix(&g).unwrap();
        assert_eq!(m.dim(), 11);
        for (i, c) in fg.classes().iter().enumerate() {
            assert_eq!(m.entries[i][i], q(c.weyl_order() as i64));
            for j in 0..i {
                assert!(m.entries[i][j].is_zero());
            }
        }
    }

    #[test]
    fn products_of_transitive_sets_multiply_marks() {
        let g = GroupId::load_finite(&tables::dihedral(4)).unwrap();
        let fg = g.finite().unwrap();
        let n = fg.classes().len();
        for h in 0..n {
            for k in 0..n {
                let prod = product_of_transitive(fg, h, k);
                for l in 0..n {
                    let lhs = mark_of(&g, &prod, Finite(l)).unwrap();
                    let rhs = mark_of(&g, &unit_vec(n, h), Finite(l)).unwrap()
                        * mark_of(&g, &unit_vec(n, k), Finite(l)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn indicator_algebra_on_o2() {
        let g = GroupId::O2;
        let u2 = ClopenSet::new(ClassSet::tail(&g, Series::D, 2).unwrap().union(&ClassSet::from_classes(&g, [Full]).unwrap()).unwrap()).unwrap();
        let e = BurnsideElement::e_u(&g, &u2).unwrap();
        assert_eq!(e.mul(&e).unwrap(), e);
        assert!(e.is_idempotent());
        let ec = BurnsideElement::e_u(&g, &u2.complement()).unwrap();
        assert_eq!(e.add(&ec).unwrap(), BurnsideElement::one(&g));
        assert_eq!(e.mul(&ec).unwrap(), BurnsideElement::zero(&g));
        let half = e.scale(&qf(1, 2));
        assert_eq!(half.add(&half).unwrap(), e);
        assert_eq!(e.value_at(D(7)).unwrap(), q(1));
        assert_eq!(e.value_at(D(1)).unwrap(), q(0));
        assert!(e.value_at(C(3)).is_err());
        assert_eq!(e.support(), u2);
        assert_eq!(BurnsideElement::e_u(&g, &ClopenSet::whole(&g)).unwrap(), BurnsideElement::one(&g));
        assert!(BurnsideElement::e_u(&GroupId::SO3, &u2).is_err());
    }
}
