//! Exact isomorphism test and orbit enumeration for small wide spheres.
//!
//! Two wide spheres are isomorphic when a degree-preserving automorphism of
//! `V` carries one normalized filtration onto the other. The maps carrying
//! each `N̄¹_d` into `N̄²_d` form a linear space `H`; an isomorphism exists
//! iff the determinant, as a polynomial on `H`, is not identically zero.

use std::collections::BTreeMap;

use num::{One, Zero};

use super::{LaurentPoly, Parity, ParityPart, WideSphere};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, zero_vec, Q};

/// Largest dimension per parity handled exactly.
pub const CLASSIFY_LIMIT: usize = 3;

fn check_size(part: &ParityPart) -> Result<()> {
    if part.dim() > CLASSIFY_LIMIT {
        Err(Error::TooLargeModel { dim: part.dim(), limit: CLASSIFY_LIMIT })
    } else {
        Ok(())
    }
}

pub fn is_isomorphic(a: &WideSphere, b: &WideSphere) -> Result<bool> {
    for p in [Parity::Even, Parity::Odd] {
        check_size(a.part(p))?;
        check_size(b.part(p))?;
    }
    Ok([Parity::Even, Parity::Odd].iter().all(|&p| parts_isomorphic(a.part(p), b.part(p))))
}

/// Multivariate polynomial with rational coefficients, keyed by exponent
/// vectors.
type Poly = BTreeMap<Vec<u32>, Q>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = out.entry(e).or_insert_with(Q::zero);
            *c += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_add(a: &mut Poly, b: &Poly, sign: i64) {
    for (e, c) in b {
        let slot = a.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c * Q::from_integer(sign.into());
    }
    a.retain(|_, c| !c.is_zero());
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            // inserting at i moves the new element past n-1-i others
            let sign = if (n - 1 - i).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// Whether some linear combination of the matrices is invertible.
fn generically_invertible(basis: &[Vec<Vec<Q>>], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let m = basis.len();
    let entry = |r: usize, c: usize| -> Poly {
        let mut p = Poly::new();
        for (i, b) in basis.iter().enumerate() {
            if !b[r][c].is_zero() {
                let mut e = vec![0; m];
                e[i] = 1;
                p.insert(e, b[r][c].clone());
            }
        }
        p
    };
    let entries: Vec<Vec<Poly>> = (0..n).map(|r| (0..n).map(|c| entry(r, c)).collect()).collect();
    let mut det = Poly::new();
    for (perm, sign) in permutations(n) {
        let mut term: Poly = [(vec![0; m], Q::one())].into();
        for (r, &c) in perm.iter().enumerate() {
            term = poly_mul(&term, &entries[r][c]);
            if term.is_empty() {
                break;
            }
        }
        poly_add(&mut det, &term, sign);
    }
    !det.is_empty()
}

fn parts_isomorphic(a: &ParityPart, b: &ParityPart) -> bool {
    if a.v_dims() != b.v_dims() {
        return false;
    }
    let n = a.dim();
    if n == 0 {
        return true;
    }
    let from = a.lo().min(b.lo()) - 2;
    let to = a.hi().max(b.hi()) + 2;
    let window: Vec<i64> = (0..).map(|i| from + 2 * i).take_while(|&d| d <= to).collect();
    if window.iter().any(|&d| a.level_dim(d) != b.level_dim(d)) {
        return false;
    }
    // unknowns: entries g[r][c] with r and c in the same degree block
    let degrees = a.degrees();
    let mut var = vec![vec![None; n]; n];
    let mut count = 0;
    for r in 0..n {
        for c in 0..n {
            if degrees[r] == degrees[c] {
                var[r][c] = Some(count);
                count += 1;
            }
        }
    }
    let mut constraints: Vec<Vec<Q>> = Vec::new();
    for &d in &window {
        let ann = nullspace(&b.level(d), n);
        for r in a.level(d) {
            for y in &ann {
                let mut row = zero_vec(count);
                for i in 0..n {
                    for j in 0..n {
                        if let Some(v) = var[i][j] {
                            row[v] += &y[i] * &r[j];
                        }
                    }
                }
                constraints.push(row);
            }
        }
    }
    let basis: Vec<Vec<Vec<Q>>> = nullspace(&constraints, count)
        .into_iter()
        .map(|sol| {
            let mut g = vec![zero_vec(n); n];
            for r in 0..n {
                for c in 0..n {
                    if let Some(v) = var[r][c] {
                        g[r][c] = sol[v].clone();
                    }
                }
            }
            g
        })
        .collect();
    generically_invertible(&basis, n)
}

/// All RREF bases of `k`-dimensional subspaces of `Q^n` with entries in
/// `{0, 1}`.
fn zero_one_subspaces(n: usize, k: usize) -> Vec<Vec<Vec<Q>>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let pivots: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        // free positions: right of the row's pivot, not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        for fill in 0u32..(1 << free.len()) {
            let mut rows = vec![zero_vec(n); k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = Q::one();
            }
            for (i, &(r, c)) in free.iter().enumerate() {
                if fill >> i & 1 == 1 {
                    rows[r][c] = Q::one();
                }
            }
            out.push(rows);
        }
    }
    out
}

/// Representatives of the isomorphism classes of wide spheres concentrated in
/// one parity with `p_1 = p_T = p`, each minimal among its zero-one
/// echelon forms in lexicographic order.
pub fn enumerate_classes(p: &LaurentPoly, parity: Parity) -> Result<Vec<WideSphere>> {
    if !p.parity_part(parity.flip().index()).is_zero() {
        return Err(Error::MalformedPoly(format!("{p} has terms of {} degree", parity.flip().name())));
    }
    let n = p.weight() as usize;
    if n > CLASSIFY_LIMIT {
        return Err(Error::TooLargeModel { dim: n, limit: CLASSIFY_LIMIT });
    }
    let terms: Vec<(i64, u64)> = p.terms().collect();
    if terms.len() >= 3 {
        // complete flags in Q^3 modulo the diagonal torus form a
        // one-parameter family (the cross-ratio of four lines)
        return Err(Error::ContinuousModuli(p.to_string()));
    }
    let wrap = |part: ParityPart| {
        let (even, odd) = match parity {
            Parity::Even => (part, ParityPart::zero(Parity::Odd)),
            Parity::Odd => (ParityPart::zero(Parity::Even), part),
        };
        WideSphere::from_parts(even, odd).expect("parities match")
    };
    let v_dims: BTreeMap<i64, usize> = terms.iter().map(|&(d, m)| (d, m as usize)).collect();
    let candidates: Vec<ParityPart> = match terms.as_slice() {
        [] => vec![ParityPart::zero(parity)],
        [(d, _)] => vec![ParityPart::new(parity, v_dims, d + 2, vec![], true)?],
        [(d1, _), (d2, m2)] => {
            // N̄_d is the same m2-dimensional subspace for d1 < d ≤ d2
            let steps = ((d2 - d1) / 2) as usize;
            let mut subspaces = zero_one_subspaces(n, *m2 as usize);
            subspaces.sort();
            subspaces
                .into_iter()
                .map(|s| ParityPart::new(parity, v_dims.clone(), d1 + 2, vec![s; steps], true))
                .collect::<Result<_>>()?
        }
        _ => unreachable!("at most two degrees"),
    };
    let mut classes: Vec<WideSphere> = Vec::new();
    for part in candidates {
        let w = wrap(part);
        if !classes.iter().any(|c| is_isomorphic(c, &w).expect("within limit")) {
            classes.push(w);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn determinant_polynomials() {
        let id = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let nil = vec![vec![q(0), q(1)], vec![q(0), q(0)]];
        assert!(generically_invertible(std::slice::from_ref(&id), 2));
        assert!(!generically_invertible(&[nil.clone()], 2));
        assert!(generically_invertible(&[nil, id], 2));
        assert_eq!(permutations(3).iter().map(|(_, s)| s).sum::<i64>(), 0);
    }

    #[test]
    fn example_classes() {
        let three = enumerate_classes(&poly("1+t^2"), Parity::Even).unwrap();
        assert_eq!(three.len(), 3);
        assert_eq!(three.iter().filter(|w| w.is_untwisted()).count(), 2);
        assert_eq!(enumerate_classes(&poly("1"), Parity::Even).unwrap(), vec![WideSphere::sphere0()]);
        assert_eq!(enumerate_classes(&poly("2t"), Parity::Odd).unwrap().len(), 1);
        // a 2-dimensional V_0 against a line in degree 2
        assert_eq!(enumerate_classes(&poly("2+t^2"), Parity::Even).unwrap().len(), 3);
        assert_eq!(enumerate_classes(&poly("1+2t^4"), Parity::Even).unwrap().len(), 3);
    }

    #[test]
    fn refusals() {
        assert!(matches!(enumerate_classes(&poly("1+t"), Parity::Even), Err(Error::MalformedPoly(_))));
        assert!(matches!(enumerate_classes(&poly("4"), Parity::Even), Err(Error::TooLargeModel { .. })));
        assert!(matches!(
            enumerate_classes(&poly("1+t^2+t^4"), Parity::Even),
            Err(Error::ContinuousModuli(_))
        ));
    }

    #[test]
    fn scaled_extension_classes_agree() {
        let s = WideSphere::sphere0();
        let m1 = s.attach_cell(1, &[q(1)]).unwrap();
        let m2 = s.attach_cell(1, &[q(2)]).unwrap();
        assert_ne!(m1, m2);
        assert!(is_isomorphic(&m1, &m2).unwrap());
        let split = s.direct_sum(&WideSphere::sphere(2));
        let twisted = WideSphere::rep_sphere(1).direct_sum(&WideSphere::rep_sphere(-1).suspend(2));
        assert!(!is_isomorphic(&split, &twisted).unwrap());
        assert!(is_isomorphic(&twisted, &twisted).unwrap());
        let big = (0..4).fold(WideSphere::zero(), |acc, _| acc.direct_sum(&s));
        assert!(matches!(is_isomorphic(&big, &big), Err(Error::TooLargeModel { .. })));
    }
}
