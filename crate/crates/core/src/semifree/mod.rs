//! The algebraic model of rational semifree circle spectra restricted to
//! wide spheres: an injective `Q[c]`-map `β: N → Q[c,c⁻¹] ⊗ V` with `V`
//! finite dimensional and `N` bounded above.
//!
//! Each parity is stored through its normalized filtration
//! `N̄_d = c^{⌊d/2⌋} N_d ⊆ |V|`, a decreasing chain of subspaces in
//! coordinates ordered by ascending degree of the basis of `V`. Multiplying
//! by `c` lowers degree by two, so nesting reads `N̄_{d+2} ⊆ N̄_d`.

pub mod classify;
mod io;
pub mod poly;

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{identity, intersection_basis, non_pivot_columns, rank, rref, unit_vec, zero_vec, Q};

pub use classify::{enumerate_classes, is_isomorphic, CLASSIFY_LIMIT};
pub use poly::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(d: i64) -> Self {
        if d.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn index(self) -> i64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

type Rows = Vec<Vec<Q>>;

/// The part of a wide sphere in one parity. `N̄_d` is all of `|V|` for
/// `d < lo`, is `levels[(d - lo) / 2]` inside the window and zero above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPart {
    parity: Parity,
    v_dims: BTreeMap<i64, usize>,
    lo: i64,
    levels: Vec<Rows>,
}

impl ParityPart {
    pub fn zero(parity: Parity) -> Self {
        ParityPart { parity, v_dims: BTreeMap::new(), lo: parity.index(), levels: Vec::new() }
    }

    /// Assembles a part from explicit levels `N̄_lo, N̄_{lo+2}, ...`. With
    /// `strict`, rows of each level must be independent.
    pub fn new(parity: Parity, v_dims: BTreeMap<i64, usize>, lo: i64, levels: Vec<Rows>, strict: bool) -> Result<Self> {
        let bad = |why: String| Error::InvalidWideSphere(format!("{} part: {why}", parity.name()));
        if Parity::of(lo) != parity {
            return Err(bad(format!("window start {lo} has the wrong parity")));
        }
        let mut v: BTreeMap<i64, usize> = BTreeMap::new();
        for (&d, &m) in &v_dims {
            if Parity::of(d) != parity {
                return Err(bad(format!("V has a generator in degree {d}")));
            }
            if m > 0 {
                v.insert(d, m);
            }
        }
        let n: usize = v.values().sum();
        let mut reduced = Vec::with_capacity(levels.len());
        for (i, rows) in levels.iter().enumerate() {
            let d = lo + 2 * i as i64;
            if let Some(r) = rows.iter().find(|r| r.len() != n) {
                return Err(bad(format!("row of length {} at degree {d}, expected {n}", r.len())));
            }
            let (basis, _) = rref(rows, n);
            if strict && basis.len() != rows.len() {
                return Err(bad(format!("rows at degree {d} are linearly dependent")));
            }
            reduced.push(basis);
        }
        for (i, pair) in reduced.windows(2).enumerate() {
            if !crate::linalg::is_subspace(&pair[1], &pair[0], n) {
                let d = lo + 2 * i as i64;
                return Err(bad(format!("nesting fails: N̄_{} is not contained in N̄_{d}", d + 2)));
            }
        }
        Ok(ParityPart { parity, v_dims: v, lo, levels: reduced }.normalized())
    }

    /// Builds levels for `d ∈ [from, to]` from a function, full below and zero
    /// above.
    fn from_fn(parity: Parity, v_dims: BTreeMap<i64, usize>, from: i64, to: i64, f: impl Fn(i64) -> Rows) -> Self {
        let levels = (0..)
            .map(|i| from + 2 * i)
            .take_while(|&d| d <= to)
            .map(f)
            .collect();
        ParityPart::new(parity, v_dims, from, levels, false).expect("constructed chains are nested")
    }

    fn normalized(mut self) -> Self {
        let n = self.dim();
        if n == 0 {
            return ParityPart::zero(self.parity);
        }
        let full = self.levels.iter().take_while(|l| l.len() == n).count();
        self.levels.drain(..full);
        self.lo += 2 * full as i64;
        while self.levels.last().is_some_and(|l| l.is_empty()) {
            self.levels.pop();
        }
        self
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn v_dims(&self) -> &BTreeMap<i64, usize> {
        &self.v_dims
    }

    pub fn v_dim(&self, d: i64) -> usize {
        self.v_dims.get(&d).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.v_dims.values().sum()
    }

    /// First degree at which `N̄` is a proper subspace.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Last degree at which `N̄` is nonzero.
    pub fn hi(&self) -> i64 {
        self.lo + 2 * self.levels.len() as i64 - 2
    }

    /// Degree of each coordinate of `|V|`.
    pub fn degrees(&self) -> Vec<i64> {
        self.v_dims.iter().flat_map(|(&d, &m)| std::iter::repeat_n(d, m)).collect()
    }

    /// RREF basis of `N̄_d`.
    pub fn level(&self, d: i64) -> Rows {
        debug_assert_eq!(Parity::of(d), self.parity);
        if d < self.lo {
            identity(self.dim())
        } else {
            self.levels.get(((d - self.lo) / 2) as usize).cloned().unwrap_or_default()
        }
    }

    pub fn level_dim(&self, d: i64) -> usize {
        if d < self.lo {
            self.dim()
        } else {
            self.levels.get(((d - self.lo) / 2) as usize).map_or(0, Vec::len)
        }
    }

    /// Unit vectors spanning the coordinate subspace `V_d`.
    pub fn coordinate_space(&self, d: i64) -> Rows {
        let n = self.dim();
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == d)
            .map(|(i, _)| unit_vec(n, i))
            .collect()
    }

    fn p_fixed(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.v_dims.iter().map(|(&d, &m)| (d, m as u64)))
    }

    fn p_borel_jump(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        if self.dim() == 0 {
            return p;
        }
        let mut d = self.lo - 2;
        while d <= self.hi() {
            p.add_term(d, (self.level_dim(d) - self.level_dim(d + 2)) as u64);
            d += 2;
        }
        p
    }

    /// First degree `d` with `V_d ∩ N̄_{d+2k+2} ≠ 0`.
    fn first_overlap(&self, k: i64) -> Option<i64> {
        let n = self.dim();
        self.v_dims
            .keys()
            .copied()
            .find(|&d| !intersection_basis(&self.coordinate_space(d), &self.level(d + 2 * k + 2), n).is_empty())
    }

    fn shifted(&self, n: i64) -> Self {
        ParityPart {
            parity: Parity::of(self.parity.index() + n),
            v_dims: self.v_dims.iter().map(|(&d, &m)| (d + n, m)).collect(),
            lo: self.lo + n,
            levels: self.levels.clone(),
        }
        .normalized()
    }

    fn direct_sum(&self, other: &Self) -> Self {
        let mut v_dims = self.v_dims.clone();
        for (&d, &m) in &other.v_dims {
            *v_dims.entry(d).or_insert(0) += m;
        }
        // within a degree the first summand's basis comes first
        let (da, db) = (self.degrees(), other.degrees());
        let mut map_a = vec![0; da.len()];
        let mut map_b = vec![0; db.len()];
        let mut next = 0;
        for &d in v_dims.keys() {
            for (i, _) in da.iter().enumerate().filter(|(_, &e)| e == d) {
                map_a[i] = next;
                next += 1;
            }
            for (j, _) in db.iter().enumerate().filter(|(_, &e)| e == d) {
                map_b[j] = next;
                next += 1;
            }
        }
        let n = next;
        let embed = |rows: Rows, map: &[usize]| -> Rows {
            rows.into_iter()
                .map(|r| {
                    let mut out = zero_vec(n);
                    for (x, &i) in r.into_iter().zip(map) {
                        out[i] = x;
                    }
                    out
                })
                .collect()
        };
        let from = self.lo.min(other.lo) - 2;
        let to = self.hi().max(other.hi()).max(from);
        ParityPart::from_fn(self.parity, v_dims, from, to, |d| {
            let mut rows = embed(self.level(d), &map_a);
            rows.extend(embed(other.level(d), &map_b));
            rows
        })
    }
}

/// Verdict on the `k`-twisted conditions; `k = 0` is Condition (untwisted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    pub k: i64,
    pub p_fixed: LaurentPoly,
    pub p_borel_jump: LaurentPoly,
    /// `p_1 = t^{2k} p_T`.
    pub dimensions_match: bool,
    /// First degree `d` with `V_d ∩ N̄_{d+2k+2} ≠ 0`.
    pub overlap_degree: Option<i64>,
}

impl TwistReport {
    pub fn holds(&self) -> bool {
        self.dimensions_match && self.overlap_degree.is_none()
    }
}

/// Homotopy classes `[S^n, W]` in the model. `hom` spans the maps of
/// degree zero, `V_n ∩ N̄_n`, in the coordinates of the part of parity `n`.
/// `ext` spans the extension classes `|V| / N̄_{n+1}` of the other part,
/// presented by unit vectors on the non-pivot columns of `N̄_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyGroup {
    pub n: i64,
    pub hom: Rows,
    pub ext: Rows,
    /// Set when both parities are present and the group is reported as the
    /// sum of the two one-parity answers.
    pub provisional: bool,
}

impl HomotopyGroup {
    pub fn dim(&self) -> usize {
        self.hom.len() + self.ext.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideSphere {
    even: ParityPart,
    odd: ParityPart,
}

impl WideSphere {
    pub fn from_parts(even: ParityPart, odd: ParityPart) -> Result<Self> {
        if even.parity != Parity::Even || odd.parity != Parity::Odd {
            return Err(Error::InvalidWideSphere("parts are in the wrong parity".into()));
        }
        Ok(WideSphere { even, odd })
    }

    pub fn zero() -> Self {
        WideSphere { even: ParityPart::zero(Parity::Even), odd: ParityPart::zero(Parity::Odd) }
    }

    /// `S^0`: `N = Q[c]` inside `Q[c,c⁻¹]`.
    pub fn sphere0() -> Self {
        let even = ParityPart::new(Parity::Even, [(0, 1)].into(), 2, vec![], true).expect("S^0");
        WideSphere { even, odd: ParityPart::zero(Parity::Odd) }
    }

    /// The trivial-representation sphere `S^n`.
    pub fn sphere(n: i64) -> Self {
        Self::sphere0().suspend(n)
    }

    /// The representation sphere `S^{kz}`.
    pub fn rep_sphere(k: i64) -> Self {
        Self::sphere0().smash_rep_sphere(k)
    }

    pub fn part(&self, p: Parity) -> &ParityPart {
        match p {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    fn part_mut(&mut self, p: Parity) -> &mut ParityPart {
        match p {
            Parity::Even => &mut self.even,
            Parity::Odd => &mut self.odd,
        }
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    /// `p_T(t) = Σ dim V_i t^i`.
    pub fn p_fixed(&self) -> LaurentPoly {
        self.even.p_fixed().add(&self.odd.p_fixed())
    }

    /// `p_1(t) = Σ dim(N̄_i / N̄_{i+2}) t^i`.
    pub fn p_borel_jump(&self) -> LaurentPoly {
        self.even.p_borel_jump().add(&self.odd.p_borel_jump())
    }

    pub fn twist_report(&self, k: i64) -> TwistReport {
        let p_fixed = self.p_fixed();
        let p_borel_jump = self.p_borel_jump();
        let dimensions_match = p_borel_jump == p_fixed.shift(2 * k);
        let overlap_degree = [self.even.first_overlap(k), self.odd.first_overlap(k)].into_iter().flatten().min();
        TwistReport { k, p_fixed, p_borel_jump, dimensions_match, overlap_degree }
    }

    /// Condition: `dim N̄_i = dim |V|_{≥i}` for all `i`, and `V ∩ cN = 0`.
    pub fn is_untwisted(&self) -> bool {
        self.is_k_twisted(0)
    }

    /// `p_1 = t^{2k} p_T` and `V ∩ c^{k+1} N = 0`.
    pub fn is_k_twisted(&self, k: i64) -> bool {
        self.twist_report(k).holds()
    }

    /// Membership in the thick subcategory generated by `S^{kz}`.
    pub fn in_thick_sphere(&self, k: i64) -> bool {
        self.is_k_twisted(k)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        WideSphere { even: self.even.direct_sum(&other.even), odd: self.odd.direct_sum(&other.odd) }
    }

    /// Suspension by `n`: every degree moves up by `n`.
    pub fn suspend(&self, n: i64) -> Self {
        let (e, o) = (self.even.shifted(n), self.odd.shifted(n));
        if n.rem_euclid(2) == 0 {
            WideSphere { even: e, odd: o }
        } else {
            WideSphere { even: o, odd: e }
        }
    }

    /// Smash with `S^{kz}`: `V` is unchanged and `N` becomes `c^{-k} N`, so
    /// `N̄'_d = N̄_{d-2k}`.
    pub fn smash_rep_sphere(&self, k: i64) -> Self {
        let mut out = self.clone();
        for p in [Parity::Even, Parity::Odd] {
            let part = out.part_mut(p);
            if part.dim() > 0 {
                part.lo += 2 * k;
            }
        }
        out
    }

    pub fn homotopy_classes(&self, n: i64) -> HomotopyGroup {
        let same = self.part(Parity::of(n));
        let other = self.part(Parity::of(n + 1));
        let hom = intersection_basis(&same.coordinate_space(n), &same.level(n), same.dim());
        let ext = non_pivot_columns(&other.level(n + 1), other.dim())
            .into_iter()
            .map(|c| unit_vec(other.dim(), c))
            .collect();
        HomotopyGroup { n, hom, ext, provisional: self.even.dim() > 0 && self.odd.dim() > 0 }
    }

    /// Cofibre of the map `S^n → W` with the given coordinates on
    /// [`WideSphere::homotopy_classes`]: degree-zero coefficients first, then
    /// extension coefficients.
    ///
    /// A nonzero degree-zero part splits off a copy of `S^n` (this needs the
    /// part of parity `n` to be untwisted) and leaves the other parity alone.
    /// Otherwise a generator is adjoined to `V_{n+1}` and `N̄_d` gains the
    /// vector `ι + ω` for `d ≤ n+1`, where `ω` is the extension class.
    pub fn attach_cell(&self, n: i64, class: &[Q]) -> Result<Self> {
        let hg = self.homotopy_classes(n);
        if class.len() != hg.dim() {
            return Err(Error::ClassNotInGroup { expected: hg.dim(), got: class.len() });
        }
        let (h, e) = class.split_at(hg.hom.len());
        let mut out = self.clone();
        if h.iter().any(|x| !x.is_zero()) {
            let p = Parity::of(n);
            if self.part(p).first_overlap(0).is_some()
                || self.part(p).p_borel_jump() != self.part(p).p_fixed()
            {
                return Err(Error::SplitUnavailable(n));
            }
            let v = combine(h, &hg.hom, self.part(p).dim());
            *out.part_mut(p) = split_off(self.part(p), n, &v);
        } else {
            let p = Parity::of(n + 1);
            let part = self.part(p);
            let omega = combine(e, &hg.ext, part.dim());
            *out.part_mut(p) = extend(part, n + 1, &omega);
        }
        Ok(out)
    }
}

fn combine(coeffs: &[Q], basis: &[Vec<Q>], n: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    for (c, b) in coeffs.iter().zip(basis) {
        for (x, y) in v.iter_mut().zip(b) {
            *x += c * y;
        }
    }
    v
}

/// Adjoins a generator `ι` in degree `m` with `N̄_d += ι + ω` for `d ≤ m`.
fn extend(part: &ParityPart, m: i64, omega: &[Q]) -> ParityPart {
    let pos = part.degrees().iter().filter(|&&d| d <= m).count();
    let insert = |row: &[Q], value: Q| {
        let mut r = row.to_vec();
        r.insert(pos, value);
        r
    };
    let mut v_dims = part.v_dims.clone();
    *v_dims.entry(m).or_insert(0) += 1;
    let new_row = insert(omega, Q::from_integer(1.into()));
    let from = part.lo.min(m) - 2;
    let to = part.hi().max(m);
    ParityPart::from_fn(part.parity, v_dims, from, to, |d| {
        let mut rows: Rows = part.level(d).iter().map(|r| insert(r, Q::zero())).collect();
        if d <= m {
            rows.push(new_row.clone());
        }
        rows
    })
}

/// Quotient by the line spanned by `v ∈ V_m`, with coordinates projected
/// along `v` and the pivot coordinate of `v` dropped.
fn split_off(part: &ParityPart, m: i64, v: &[Q]) -> ParityPart {
    let j = v.iter().position(|x| !x.is_zero()).expect("nonzero class");
    let project = |x: &Vec<Q>| -> Vec<Q> {
        let f = &x[j] / &v[j];
        let mut out: Vec<Q> = x.iter().zip(v).map(|(a, b)| a - &f * b).collect();
        out.remove(j);
        out
    };
    let mut v_dims = part.v_dims.clone();
    *v_dims.get_mut(&m).expect("class lives in V_m") -= 1;
    ParityPart::from_fn(part.parity, v_dims, part.lo - 2, part.hi().max(part.lo - 2), |d| {
        part.level(d).iter().map(project).collect()
    })
}

/// Dimension of `V_d ∩ c^{k+1}N` summed over degrees, for the componentwise
/// check on direct sums.
pub fn overlap_dim(w: &WideSphere, k: i64) -> usize {
    [Parity::Even, Parity::Odd]
        .iter()
        .map(|&p| {
            let part = w.part(p);
            part.v_dims
                .keys()
                .map(|&d| {
                    let both = intersection_basis(&part.coordinate_space(d), &part.level(d + 2 * k + 2), part.dim());
                    rank(&both, part.dim())
                })
                .sum::<usize>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// The mapping cone of the essential map `S^1 → S^0`.
    fn m_f() -> WideSphere {
        WideSphere::sphere0().attach_cell(1, &[q(1)]).unwrap()
    }

    fn sz_wedge() -> WideSphere {
        WideSphere::rep_sphere(1).direct_sum(&WideSphere::rep_sphere(-1).suspend(2))
    }

    #[test]
    fn sphere_polynomials() {
        let s = WideSphere::sphere0();
        assert_eq!(s.p_fixed(), poly("1"));
        assert_eq!(s.p_borel_jump(), poly("1"));
        assert!(s.is_untwisted());
        assert_eq!(WideSphere::sphere(2).p_fixed(), poly("t^2"));
        assert_eq!(s.suspend(2), WideSphere::sphere(2));
        assert_eq!(WideSphere::sphere(3).part(Parity::Odd).dim(), 1);
    }

    #[test]
    fn representation_spheres() {
        for k in -3..=3 {
            let s = WideSphere::rep_sphere(k);
            assert_eq!(s.p_fixed(), poly("1"));
            assert_eq!(s.p_borel_jump(), LaurentPoly::monomial(2 * k, 1));
            assert!(s.is_k_twisted(k));
            assert_eq!(s.is_untwisted(), k == 0);
        }
    }

    #[test]
    fn twisted_wedge() {
        let w = sz_wedge();
        assert_eq!(w.p_fixed(), poly("1+t^2"));
        assert_eq!(w.p_borel_jump(), poly("1+t^2"));
        let r = w.twist_report(0);
        assert!(r.dimensions_match);
        assert_eq!(r.overlap_degree, Some(0));
        assert!(!w.is_untwisted());
        assert_eq!(w.part(Parity::Even).level(2), vec![vec![q(1), q(0)]]);
    }

    #[test]
    fn mapping_cone_of_eta() {
        let m = m_f();
        assert_eq!(m.part(Parity::Even).level(2), vec![vec![q(1), q(1)]]);
        assert_eq!(m.part(Parity::Even).level_dim(0), 2);
        assert_eq!(m.part(Parity::Even).level_dim(4), 0);
        assert!(m.is_untwisted());
        let trivial = WideSphere::sphere0().attach_cell(1, &[q(0)]).unwrap();
        assert_eq!(trivial, WideSphere::sphere0().direct_sum(&WideSphere::sphere(2)));
        assert!(trivial.is_untwisted());
    }

    #[test]
    fn homotopy_groups_of_the_sphere() {
        let s = WideSphere::sphere0();
        assert_eq!(s.homotopy_classes(0).dim(), 1);
        assert_eq!(s.homotopy_classes(1).dim(), 1);
        assert_eq!(s.homotopy_classes(-1).dim(), 0);
        assert_eq!(s.homotopy_classes(2).dim(), 0);
        assert_eq!(s.homotopy_classes(3).dim(), 1);
        assert!(!s.homotopy_classes(0).provisional);
        let mixed = s.direct_sum(&WideSphere::sphere(1));
        assert!(mixed.homotopy_classes(0).provisional);
    }

    #[test]
    fn split_attachment() {
        let w = WideSphere::sphere0().direct_sum(&WideSphere::sphere(2));
        let hg = w.homotopy_classes(0);
        assert_eq!(hg.hom.len(), 1);
        let mut class = vec![q(1)];
        class.extend(hg.ext.iter().map(|_| q(0)));
        let y = w.attach_cell(0, &class).unwrap();
        assert_eq!(y, WideSphere::sphere(2));
        assert!(matches!(w.attach_cell(0, &[]), Err(Error::ClassNotInGroup { .. })));
        let twisted = sz_wedge();
        let hg = twisted.homotopy_classes(0);
        let mut class = vec![q(1); hg.hom.len()];
        class.extend(hg.ext.iter().map(|_| q(0)));
        assert_eq!(twisted.attach_cell(0, &class), Err(Error::SplitUnavailable(0)));
    }

    #[test]
    fn nesting_is_enforced() {
        let bad = ParityPart::new(
            Parity::Even,
            [(0, 1), (2, 1)].into(),
            2,
            vec![vec![vec![q(1), q(0)]], vec![vec![q(0), q(1)]]],
            true,
        );
        assert!(matches!(bad, Err(Error::InvalidWideSphere(_))));
        let dependent = ParityPart::new(Parity::Even, [(0, 2)].into(), 2, vec![vec![vec![q(1), q(0)], vec![q(2), q(0)]]], true);
        assert!(dependent.is_err());
        assert!(ParityPart::new(Parity::Even, [(1, 1)].into(), 2, vec![], true).is_err());
    }

    #[test]
    fn direct_sums_are_componentwise() {
        let a = sz_wedge();
        let b = m_f();
        assert_eq!(overlap_dim(&a.direct_sum(&b), 0), overlap_dim(&a, 0) + overlap_dim(&b, 0));
        assert_eq!(a.direct_sum(&b).p_fixed(), a.p_fixed().add(&b.p_fixed()));
    }
}
