//! Dense exact linear algebra over ℚ: row reduction, null spaces,
//! characteristic polynomials and rational eigenvalues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Q;

pub type Matrix = Vec<Vec<Q>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for j in c..cols {
            let v = &m[r][j] * &inv;
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let d = &f * &m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of `{v : m v = 0}`; `cols` is needed when `m` has no rows.
pub fn null_space(m: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Q::zero(); cols];
        v[f] = Q::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -w[row][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(t·I − A)`, coefficients from low to high degree.
pub fn char_poly(a: &Matrix) -> Vec<Q> {
    let n = a.len();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut m = zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let tr: Q = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / Q::from_integer(BigInt::from(k));
    }
    coeffs
}

pub fn poly_eval(p: &[Q], t: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

/// Divides by `(t - r)`; returns `(quotient, remainder)`.
pub fn deflate(p: &[Q], r: &Q) -> (Vec<Q>, Q) {
    if p.is_empty() {
        return (vec![], Q::zero());
    }
    let n = p.len() - 1;
    let mut quot = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for i in (0..=n).rev() {
        let v = &p[i] + &carry * r;
        if i == 0 {
            return (quot, v);
        }
        quot[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64()?;
    if small > 1u64 << 50 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots with algebraic multiplicities, plus the degree of the
/// factor that has no rational roots. `None` if the coefficients are too
/// large to search.
pub fn rational_roots(p: &[Q]) -> Option<(Vec<(Q, usize)>, usize)> {
    let mut poly: Vec<Q> = p.to_vec();
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
    let mut roots: Vec<(Q, usize)> = Vec::new();
    let mut zero_mult = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Q::zero(), zero_mult));
    }
    if poly.len() <= 1 {
        return Some((roots, 0));
    }
    // integer coefficients
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = divisors(ints.last().unwrap())?;
    let constant = divisors(&ints[0])?;
    let mut candidates: Vec<Q> = Vec::new();
    for a in &constant {
        for b in &lead {
            let r = Q::new(a.clone(), b.clone());
            if !candidates.contains(&r) {
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
    }
    for r in candidates {
        let mut mult = 0;
        loop {
            if poly.len() <= 1 {
                break;
            }
            let (quot, rem) = deflate(&poly, &r);
            if !rem.is_zero() {
                break;
            }
            poly = quot;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Some((roots, poly.len() - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn null_space_of_rank_one() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(rank(&m), 1);
        let ns = null_space(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Q = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn char_poly_and_roots() {
        // upper triangular with eigenvalues 2, 2, -1/2
        let a = vec![
            vec![q(2), q(1), q(0)],
            vec![q(0), q(2), q(5)],
            vec![q(0), q(0), frac(-1, 2)],
        ];
        let cp = char_poly(&a);
        assert_eq!(cp.len(), 4);
        assert_eq!(poly_eval(&cp, &q(2)), q(0));
        let (roots, rest) = rational_roots(&cp).unwrap();
        assert_eq!(rest, 0);
        assert_eq!(roots, vec![(frac(-1, 2), 1), (q(2), 2)]);
    }

    #[test]
    fn irrational_factor_is_reported() {
        // t^2 - 2
        let (roots, rest) = rational_roots(&[q(-2), q(0), q(1)]).unwrap();
        assert!(roots.is_empty());
        assert_eq!(rest, 2);
    }
}
