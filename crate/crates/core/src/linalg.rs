//! Exact linear algebra over the rationals.
//!
//! Subspaces of `Q^n` are carried as lists of row vectors; every routine
//! works on the row space and never assumes the rows are independent.

use num::{BigInt, BigRational, One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `p/q` rendering (lowest terms, positive denominator).
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(Q::new(a, b))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

/// Reduced row echelon form of the row space. Returns the nonzero rows and
/// their pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Reduces `v` modulo the row space of an RREF basis.
pub fn reduce(v: &[Q], basis: &[Vec<Q>], pivots: &[usize]) -> Vec<Q> {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        if !out[p].is_zero() {
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
    }
    out
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn in_span(v: &[Q], rows: &[Vec<Q>], ncols: usize) -> bool {
    let (b, p) = rref(rows, ncols);
    is_zero_vec(&reduce(v, &b, &p))
}

pub fn is_subspace(a: &[Vec<Q>], b: &[Vec<Q>], ncols: usize) -> bool {
    let (bb, bp) = rref(b, ncols);
    a.iter().all(|v| is_zero_vec(&reduce(v, &bb, &bp)))
}

pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>], ncols: usize) -> bool {
    rref(a, ncols).0 == rref(b, ncols).0
}

pub fn sum_dim(a: &[Vec<Q>], b: &[Vec<Q>], ncols: usize) -> usize {
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    rank(&all, ncols)
}

pub fn intersection_dim(a: &[Vec<Q>], b: &[Vec<Q>], ncols: usize) -> usize {
    rank(a, ncols) + rank(b, ncols) - sum_dim(a, b, ncols)
}

/// RREF basis of the intersection of two row spaces.
pub fn intersection_basis(a: &[Vec<Q>], b: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (a, _) = rref(a, ncols);
    // x lies in span(b) iff it pairs to zero with every vector killed by b
    let ann = nullspace(b, ncols);
    let pairing: Vec<Vec<Q>> = ann
        .iter()
        .map(|y| a.iter().map(|r| r.iter().zip(y).map(|(s, t)| s * t).sum()).collect())
        .collect();
    let coeffs = nullspace(&pairing, a.len());
    let vecs: Vec<Vec<Q>> = coeffs
        .iter()
        .map(|c| {
            let mut v = zero_vec(ncols);
            for (ci, r) in c.iter().zip(&a) {
                for (x, y) in v.iter_mut().zip(r) {
                    *x += ci * y;
                }
            }
            v
        })
        .collect();
    rref(&vecs, ncols).0
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (b, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(ncols);
            v[f] = Q::one();
            for (row, &p) in b.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Columns not occupied by pivots of the RREF; the corresponding unit vectors
/// form the canonical complement used for quotient presentations.
pub fn non_pivot_columns(rows: &[Vec<Q>], ncols: usize) -> Vec<usize> {
    let pivots = rref(rows, ncols).1;
    (0..ncols).filter(|c| !pivots.contains(c)).collect()
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let piv = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &piv[c];
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x -= &f * y;
                }
            }
        }
    }
    d
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Solves `upper · x = rhs` for an upper-triangular matrix with nonzero
/// diagonal by back substitution.
pub fn solve_upper_triangular(upper: &[Vec<Q>], rhs: &[Q]) -> Vec<Q> {
    let n = upper.len();
    let mut x = zero_vec(n);
    for i in (0..n).rev() {
        let mut acc = rhs[i].clone();
        for j in i + 1..n {
            acc -= &upper[i][j] * &x[j];
        }
        x[i] = acc / &upper[i][i];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rref_of_dependent_rows() {
        let (b, p) = rref(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]), 3);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(b, m(&[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let rows = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot: Q = r.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn intersections() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(intersection_dim(&a, &b, 3), 1);
        assert!(is_subspace(&m(&[&[1, 1, 0]]), &a, 3));
        assert!(!in_span(&[q(0), q(0), q(1)], &a, 3));
    }

    #[test]
    fn determinant_and_triangular_solve() {
        assert_eq!(det(&m(&[&[2, 1], &[4, 3]])), q(2));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), q(-1));
        let u = m(&[&[2, 1], &[0, 1]]);
        assert_eq!(solve_upper_triangular(&u, &[q(1), q(0)]), vec![qf(1, 2), q(0)]);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(fmt_q(&qf(-2, 4)), "-1/2");
        assert_eq!(fmt_q(&q(3)), "3/1");
        assert_eq!(parse_q("6/-4"), Some(qf(-3, 2)));
        assert_eq!(parse_q("7"), Some(q(7)));
        assert_eq!(parse_q("1/0"), None);
    }

    #[test]
    fn intersection_of_planes() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(intersection_basis(&a, &b, 3), m(&[&[0, 1, 0]]));
        assert!(intersection_basis(&a, &[], 3).is_empty());
        assert_eq!(intersection_basis(&a, &identity(3), 3), a);
    }
}
