//! Finite groups given by multiplication tables, with brute-force subgroup
//! enumeration up to conjugacy.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest table accepted from user input.
pub const LOAD_LIMIT: usize = 48;
/// Largest internal model (element sets are `u128` masks).
pub const MODEL_LIMIT: usize = 128;

/// A set of group elements as a bitmask over element indices.
pub type ElementSet = u128;

pub fn members(set: ElementSet) -> impl Iterator<Item = usize> {
    (0..128).filter(move |i| set >> i & 1 == 1)
}

pub fn size(set: ElementSet) -> usize {
    set.count_ones() as usize
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClassData {
    pub representative: ElementSet,
    pub order: usize,
    pub normalizer_order: usize,
    /// Every conjugate of the representative, sorted.
    pub members: Vec<ElementSet>,
}

impl SubgroupClassData {
    pub fn class_size(&self) -> usize {
        self.members.len()
    }

    pub fn weyl_order(&self) -> usize {
        self.normalizer_order / self.order
    }
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    classes: Vec<SubgroupClassData>,
    subconj: Vec<Vec<bool>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Loads a user-supplied table, enforcing [`LOAD_LIMIT`].
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() > LOAD_LIMIT {
            return Err(Error::TooLarge { order: rows.len(), limit: LOAD_LIMIT });
        }
        Self::build(rows)
    }

    /// Builds an internal model, allowing up to [`MODEL_LIMIT`] elements.
    pub(crate) fn model(rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() > MODEL_LIMIT {
            return Err(Error::TooLarge { order: rows.len(), limit: MODEL_LIMIT });
        }
        Self::build(rows)
    }

    /// Parses the text format: `n` on the first line, then `n` rows of `n`
    /// whitespace-separated element indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty table file".into()))?
            .parse()
            .map_err(|_| Error::Parse("first token must be the order".into()))?;
        if n > LOAD_LIMIT {
            return Err(Error::TooLarge { order: n, limit: LOAD_LIMIT });
        }
        let mut rows = vec![Vec::with_capacity(n); n];
        for row in rows.iter_mut() {
            for _ in 0..n {
                let t = tokens
                    .next()
                    .ok_or_else(|| Error::Parse("table has too few entries".into()))?;
                row.push(t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}")))?);
            }
        }
        if tokens.next().is_some() {
            return Err(Error::Parse("table has trailing entries".into()));
        }
        Self::from_table(&rows)
    }

    fn build(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if let Some(x) = rows.iter().flatten().find(|&&x| x >= n) {
            return Err(Error::NotAGroup(format!("entry {x} out of range")));
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let mul = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if mul(0, a) != a || mul(a, 0) != a {
                return Err(Error::NotAGroup("element 0 is not an identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mul(a, b) == 0 && mul(b, a) == 0)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
        }
        let mut g = FiniteGroup { order: n, table, inverse, classes: Vec::new(), subconj: Vec::new() };
        g.classes = g.enumerate_classes();
        g.subconj = g
            .classes
            .iter()
            .map(|l| {
                g.classes
                    .iter()
                    .map(|k| l.members.iter().any(|&m| m & !k.representative == 0))
                    .collect()
            })
            .collect();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn classes(&self) -> &[SubgroupClassData] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> Option<&SubgroupClassData> {
        self.classes.get(i)
    }

    /// Index of the class of the whole group (always last).
    pub fn top_class(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn whole(&self) -> ElementSet {
        if self.order == 128 {
            u128::MAX
        } else {
            (1u128 << self.order) - 1
        }
    }

    pub fn is_subconjugate(&self, l: usize, k: usize) -> bool {
        self.subconj[l][k]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by the given elements.
    pub fn generate(&self, gens: &[usize]) -> ElementSet {
        let mut set: ElementSet = 1;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set >> y & 1 == 0 {
                    set |= 1 << y;
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, set: ElementSet) -> bool {
        if set & 1 == 0 {
            return false;
        }
        members(set).all(|a| members(set).all(|b| set >> self.mul(a, b) & 1 == 1))
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, set: ElementSet, g: usize) -> ElementSet {
        let gi = self.inv(g);
        members(set).fold(0, |acc, h| acc | 1 << self.mul(self.mul(gi, h), g))
    }

    pub fn normalizer(&self, set: ElementSet) -> ElementSet {
        (0..self.order)
            .filter(|&g| self.conjugate(set, g) == set)
            .fold(0, |acc, g| acc | 1 << g)
    }

    /// Class index of a subgroup given as an element set.
    pub fn class_of(&self, set: ElementSet) -> Option<usize> {
        self.classes.iter().position(|c| c.members.binary_search(&set).is_ok())
    }

    fn enumerate_classes(&self) -> Vec<SubgroupClassData> {
        let n = self.order;
        let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
        for g in 0..n {
            let c = self.generate(&[g]);
            if !cyclic.iter().any(|&(s, _)| s == c) {
                cyclic.push((c, g));
            }
        }
        let mut seen: HashMap<ElementSet, ()> = HashMap::new();
        let mut found: Vec<(ElementSet, Vec<usize>)> = vec![(1, vec![])];
        seen.insert(1, ());
        let mut i = 0;
        while i < found.len() {
            let (h, gens) = found[i].clone();
            for &(c, g) in &cyclic {
                if c & h == c {
                    continue;
                }
                let mut jg = gens.clone();
                jg.push(g);
                let j = self.generate(&jg);
                if seen.insert(j, ()).is_none() {
                    found.push((j, jg));
                }
            }
            i += 1;
        }
        let mut assigned: HashMap<ElementSet, ()> = HashMap::new();
        let mut classes = Vec::new();
        let mut subgroups: Vec<ElementSet> = found.into_iter().map(|(s, _)| s).collect();
        subgroups.sort_by_key(|&s| (size(s), s));
        for h in subgroups {
            if assigned.contains_key(&h) {
                continue;
            }
            let mut conj: Vec<ElementSet> = (0..n).map(|g| self.conjugate(h, g)).collect();
            conj.sort_unstable();
            conj.dedup();
            for &c in &conj {
                assigned.insert(c, ());
            }
            classes.push(SubgroupClassData {
                representative: conj[0],
                order: size(h),
                normalizer_order: n / conj.len(),
                members: conj,
            });
        }
        classes.sort_by_key(|c| (c.order, c.representative));
        classes
    }

    /// The subgroup `set` as a group in its own right. Returns the model and
    /// the ambient element of each model index (identity first).
    pub fn subgroup_model(&self, set: ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        let elems: Vec<usize> = members(set).collect();
        let index: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| index[&self.mul(a, b)]).collect())
            .collect();
        Ok((FiniteGroup::model(&rows)?, elems))
    }

    /// Serializes to the text table format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tables;

    #[test]
    fn trivial_group_has_one_class() {
        let g = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(g.classes().len(), 1);
    }

    #[test]
    fn z2_has_two_classes() {
        let g = FiniteGroup::from_table(&tables::cyclic(2)).unwrap();
        assert_eq!(g.classes().len(), 2);
    }

    #[test]
    fn rejects_non_groups() {
        // not associative: a Latin square with identity that is not a group
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&bad), Err(Error::NotAGroup(_))));
        let no_identity = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(FiniteGroup::from_table(&no_identity), Err(Error::NotAGroup(_))));
        let out_of_range = vec![vec![0, 2], vec![1, 0]];
        assert!(matches!(FiniteGroup::from_table(&out_of_range), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn rejects_large_tables() {
        let rows = tables::cyclic(49);
        assert!(matches!(FiniteGroup::from_table(&rows), Err(Error::TooLarge { order: 49, .. })));
    }

    #[test]
    fn text_round_trip() {
        let g = FiniteGroup::from_table(&tables::dihedral(3)).unwrap();
        let h = FiniteGroup::parse(&g.to_text()).unwrap();
        assert_eq!(g, h);
        assert!(FiniteGroup::parse("2\n0 1\n1").is_err());
    }

    #[test]
    fn normalizers_and_classes_are_consistent() {
        let g = FiniteGroup::from_table(&tables::symmetric(4)).unwrap();
        for c in g.classes() {
            assert_eq!(c.class_size() * c.normalizer_order, g.order());
            assert_eq!(size(g.normalizer(c.representative)), c.normalizer_order);
            assert!(g.is_subgroup(c.representative));
        }
        assert_eq!(g.class(g.top_class()).unwrap().order, 24);
    }
}
