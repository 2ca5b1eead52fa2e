//! Multiplication tables for standard small groups. Element 0 is always the
//! identity.

use std::collections::HashMap;

pub type Table = Vec<Vec<usize>>;

/// Cyclic group of order `n`.
pub fn cyclic(n: usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Dihedral group of order `2n`. Element `k + n·f` is `r^k s^f`, where `r` is
/// the rotation by `2π/n` and `s` a reflection.
pub fn dihedral(n: usize) -> Table {
    let idx = |k: usize, f: usize| k + n * f;
    let mut rows = vec![vec![0; 2 * n]; 2 * n];
    for f in 0..2 {
        for a in 0..n {
            for g in 0..2 {
                for b in 0..n {
                    // r^a s^f r^b s^g = r^(a ± b) s^(f+g)
                    let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
                    rows[idx(a, f)][idx(b, g)] = idx(k, (f + g) % 2);
                }
            }
        }
    }
    rows
}

/// Group generated by permutations of `0..degree`; composition is
/// `(p·q)(x) = q(p(x))`.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Table {
    let id: Vec<usize> = (0..degree).collect();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };
    let mut elems = vec![id];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = compose(&elems[i], g);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        i += 1;
    }
    elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
        .collect()
}

pub fn symmetric(n: usize) -> Table {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    from_permutations(n, &gens)
}

pub fn alternating(n: usize) -> Table {
    // 3-cycles (0 1 k) generate A_n
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    from_permutations(n, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(6).len(), 6);
        assert_eq!(dihedral(4).len(), 8);
        assert_eq!(symmetric(3).len(), 6);
        assert_eq!(symmetric(4).len(), 24);
        assert_eq!(alternating(4).len(), 12);
        assert_eq!(alternating(5).len(), 60);
        assert_eq!(symmetric(1).len(), 1);
    }
}
