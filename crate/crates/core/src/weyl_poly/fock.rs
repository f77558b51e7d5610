//! The modules `F_n̄ ⊗ ℂ_{λ+2ρ}` and `F_{n̄,α} ⊗ ℂ_{λ+2ρ}`.
//!
//! Both are polynomial rings. In `F_n̄` the variables are the `∂_γ`, which
//! act by multiplication, and `x_γ` acts as `−d/d∂_γ`. In `F_{n̄,α}` the
//! variable for `α` is `x_α` instead, on which `∂_α` acts as `d/dx_α`.
//! `h_i` acts on the twist factor by `(λ+2ρ)(h_i) = λ_i + 2`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::WeylElement;
use crate::error::{Error, Result};
use crate::lie::Lie;
use crate::poly::Poly;
use crate::rational::{falling, q, Q};
use crate::root_data::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FockKind {
    /// `F_n̄`, realizing the Verma module `M(λ)`.
    Verma,
    /// `F_{n̄,α}` for the positive root with this index, realizing `T_α M(λ)`.
    Gt(usize),
}

impl FockKind {
    /// Whether variable `i` is an `x` (true) or a `∂` (false).
    pub fn is_x_variable(self, i: usize) -> bool {
        matches!(self, FockKind::Gt(a) if a == i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    pub kind: FockKind,
    pub lambda: Weight,
    pub terms: BTreeMap<Vec<u32>, Q>,
}

impl FockVector {
    pub fn zero(kind: FockKind, lambda: Weight) -> Self {
        FockVector {
            kind,
            lambda,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum(kind: FockKind, lambda: Weight, nvars: usize) -> Self {
        FockVector::monomial(kind, lambda, vec![0; nvars])
    }

    pub fn monomial(kind: FockKind, lambda: Weight, mono: Vec<u32>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mono, Q::one());
        FockVector {
            kind,
            lambda,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mono.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn scale(&self, c: &Q) -> FockVector {
        let mut out = FockVector {
            kind: self.kind,
            lambda: self.lambda.clone(),
            terms: BTreeMap::new(),
        };
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }
}

/// `(λ+2ρ)(h_i)`.
pub fn shifted_cartan_values(lambda: &Weight) -> Vec<Q> {
    lambda.coords.iter().map(|c| c + q(2)).collect()
}

/// Offset `μ − λ` of a monomial's weight in simple-root coordinates.
pub fn weight_offset(lie: &Lie, kind: FockKind, mono: &[u32]) -> Vec<i64> {
    let mut out = vec![0i64; lie.rank()];
    let roots = &lie.rs.positive_roots;
    if let FockKind::Gt(a) = kind {
        for (o, c) in out.iter_mut().zip(&roots[a].coeffs) {
            *o += c;
        }
    }
    for (i, &e) in mono.iter().enumerate() {
        let sign = if kind.is_x_variable(i) { 1 } else { -1 };
        for (o, c) in out.iter_mut().zip(&roots[i].coeffs) {
            *o += sign * e as i64 * c;
        }
    }
    out
}

/// Applies `x^a ∂^b p(h)` to a monomial; the image is again a single monomial.
pub fn apply_term(
    kind: FockKind,
    shift: &[Q],
    a: &[u32],
    b: &[u32],
    p: &Poly,
    mono: &[u32],
) -> Option<(Vec<u32>, Q)> {
    let mut m = mono.to_vec();
    let mut c = p.eval(shift);
    if c.is_zero() {
        return None;
    }
    for i in 0..m.len() {
        if b[i] == 0 {
            continue;
        }
        if kind.is_x_variable(i) {
            if m[i] < b[i] {
                return None;
            }
            c *= falling(m[i], b[i]);
            m[i] -= b[i];
        } else {
            m[i] += b[i];
        }
    }
    for i in 0..m.len() {
        if a[i] == 0 {
            continue;
        }
        if kind.is_x_variable(i) {
            m[i] += a[i];
        } else {
            if m[i] < a[i] {
                return None;
            }
            c *= falling(m[i], a[i]);
            if a[i] % 2 == 1 {
                c = -c;
            }
            m[i] -= a[i];
        }
    }
    Some((m, c))
}

/// `w · v` for `w ∈ 𝒜_n̄ ⊗ U(h)`.
pub fn act_f(w: &WeylElement, v: &FockVector) -> Result<FockVector> {
    if let Some(m) = v.terms.keys().next() {
        if m.len() != w.nvars() || v.lambda.rank() != w.rank() {
            return Err(Error::ModuleMismatch);
        }
    }
    if let FockKind::Gt(a) = v.kind {
        if a >= w.nvars() {
            return Err(Error::ModuleMismatch);
        }
    }
    let shift = shifted_cartan_values(&v.lambda);
    let mut out = FockVector {
        kind: v.kind,
        lambda: v.lambda.clone(),
        terms: BTreeMap::new(),
    };
    for (mono, cv) in &v.terms {
        for (a, b, p) in w.terms() {
            if let Some((m, c)) = apply_term(v.kind, &shift, a, b, p, mono) {
                out.add_term(m, c * cv);
            }
        }
    }
    Ok(out)
}

/// All monomials in `nvars` variables of total degree `≤ d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::weyl_poly::pi::pi_g;

    #[test]
    fn sl2_verma_highest_weight() {
        let g = Lie::new(2).unwrap();
        for l in [q(0), q(3), frac(-1, 2), frac(7, 3), q(-5)] {
            let lam = Weight::new(vec![l.clone()]);
            let vac = FockVector::vacuum(FockKind::Verma, lam.clone(), 1);
            assert_eq!(act_f(&pi_g(&g, &g.h(0)), &vac).unwrap(), vac.scale(&l));
            assert!(act_f(&pi_g(&g, &g.e(0)), &vac).unwrap().is_zero());
        }
    }

    #[test]
    fn sl2_gt_spectrum() {
        let g = Lie::new(2).unwrap();
        let lam = Weight::new(vec![frac(1, 3)]);
        for k in 0..6 {
            let v = FockVector::monomial(FockKind::Gt(0), lam.clone(), vec![k]);
            let expected = frac(1, 3) + q(2) + q(2 * k as i64);
            assert_eq!(act_f(&pi_g(&g, &g.h(0)), &v).unwrap(), v.scale(&expected));
            assert_eq!(weight_offset(&g, FockKind::Gt(0), &[k]), vec![k as i64 + 1]);
        }
    }

    #[test]
    fn mismatched_vectors_are_rejected() {
        let g = Lie::new(3).unwrap();
        let v = FockVector::vacuum(FockKind::Verma, Weight::zero(1), 1);
        assert_eq!(act_f(&pi_g(&g, &g.h(0)), &v), Err(Error::ModuleMismatch));
    }

    #[test]
    fn monomial_count() {
        // C(d + n, n)
        assert_eq!(monomials_up_to(3, 4).len(), 35);
        assert_eq!(monomials_up_to(1, 5).len(), 6);
    }
}
