//! `𝒜_n̄ ⊗ U(h)` in normal form: `x`'s to the left of `∂`'s, `h` central.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::lie::{Basis, Lie, LieElement};
use crate::poly::{push_term, render_monomial, Poly};
use crate::rational::{binomial, falling, Q};

type Key = (Vec<u32>, Vec<u32>);

/// A sum of `x^a ∂^b · p(h)` with `p` a polynomial in `h_1, …, h_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    nvars: usize,
    rank: usize,
    terms: BTreeMap<Key, Poly>,
}

impl WeylElement {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        WeylElement {
            nvars,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, rank: usize) -> Self {
        let mut w = WeylElement::zero(nvars, rank);
        w.add_term(vec![0; nvars], vec![0; nvars], Poly::one(rank));
        w
    }

    pub fn x(nvars: usize, rank: usize, i: usize) -> Self {
        let mut a = vec![0; nvars];
        a[i] = 1;
        let mut w = WeylElement::zero(nvars, rank);
        w.add_term(a, vec![0; nvars], Poly::one(rank));
        w
    }

    pub fn d(nvars: usize, rank: usize, i: usize) -> Self {
        let mut b = vec![0; nvars];
        b[i] = 1;
        let mut w = WeylElement::zero(nvars, rank);
        w.add_term(vec![0; nvars], b, Poly::one(rank));
        w
    }

    /// `h_i` as an element of `U(h)`.
    pub fn h(nvars: usize, rank: usize, i: usize) -> Self {
        let mut w = WeylElement::zero(nvars, rank);
        w.add_term(vec![0; nvars], vec![0; nvars], Poly::var(rank, i));
        w
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Vec<u32>, &Poly)> {
        self.terms.iter().map(|((a, b), p)| (a, b, p))
    }

    pub fn add_term(&mut self, a: Vec<u32>, b: Vec<u32>, p: Poly) {
        if p.is_zero() {
            return;
        }
        let key = (a, b);
        let sum = match self.terms.remove(&key) {
            Some(old) => old.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// A polynomial in the `x_α` as an element of the Weyl algebra.
    pub fn from_poly_x(p: &Poly, rank: usize) -> Self {
        let nvars = p.nvars();
        let mut w = WeylElement::zero(nvars, rank);
        for (e, c) in p.terms() {
            w.add_term(e.clone(), vec![0; nvars], Poly::constant(rank, c.clone()));
        }
        w
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for ((a, b), p) in &other.terms {
            out.add_term(a.clone(), b.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Q) -> WeylElement {
        let mut out = WeylElement::zero(self.nvars, self.rank);
        if c.is_zero() {
            return out;
        }
        for ((a, b), p) in &self.terms {
            out.terms.insert((a.clone(), b.clone()), p.scale(c));
        }
        out
    }

    /// Product in normal form, using `∂^b x^c = Σ_k C(b,k) c!/(c−k)! x^{c−k} ∂^{b−k}` per variable.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero(self.nvars, self.rank);
        for ((a1, b1), p1) in &self.terms {
            for ((a2, b2), p2) in &other.terms {
                let p = p1.mul(p2);
                let bounds: Vec<u32> = b1.iter().zip(a2).map(|(b, c)| (*b).min(*c)).collect();
                for k in contractions(&bounds) {
                    let mut coeff = Q::from_integer(1.into());
                    for i in 0..self.nvars {
                        if k[i] > 0 {
                            coeff *= binomial(b1[i], k[i]) * falling(a2[i], k[i]);
                        }
                    }
                    let a: Vec<u32> = (0..self.nvars).map(|i| a1[i] + a2[i] - k[i]).collect();
                    let b: Vec<u32> = (0..self.nvars).map(|i| b1[i] - k[i] + b2[i]).collect();
                    out.add_term(a, b, p.scale(&coeff));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Flattened `(coefficient, monomial text)` terms in display order.
    pub fn flat_terms(&self, lie: &Lie) -> Vec<(Q, String)> {
        let xs: Vec<String> = lie
            .rs
            .positive_roots
            .iter()
            .map(|r| format!("x_{{{}}}", r.label()))
            .collect();
        let ds: Vec<String> = lie
            .rs
            .positive_roots
            .iter()
            .map(|r| format!("d_{{{}}}", r.label()))
            .collect();
        let hs: Vec<String> = (1..=self.rank).map(|i| format!("h{i}")).collect();
        let mut out = Vec::new();
        for ((a, b), p) in self.terms.iter().rev() {
            let xd: Vec<String> = [render_monomial(a, &xs), render_monomial(b, &ds)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            let mut hterms: Vec<_> = p.terms().collect();
            hterms.reverse();
            for (e, c) in hterms {
                let mut parts = xd.clone();
                let hm = render_monomial(e, &hs);
                if !hm.is_empty() {
                    parts.push(hm);
                }
                out.push((c.clone(), parts.join(" ")));
            }
        }
        out
    }

    /// Text such as `x_{a1}^2 d_{a1} + x_{a1} h1`.
    pub fn render(&self, lie: &Lie) -> String {
        let flat = self.flat_terms(lie);
        if flat.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, m)) in flat.iter().enumerate() {
            push_term(&mut out, c, m, i == 0);
        }
        out
    }

    /// Sum of `x^a ∂^b` degrees over all terms, for truncation bookkeeping.
    pub fn max_x_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(a, _)| a.iter().sum())
            .max()
            .unwrap_or(0)
    }
}

/// All vectors `k` with `0 ≤ k_i ≤ bounds_i`.
fn contractions(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in &out {
            for k in 0..=b {
                let mut v = prefix.clone();
                v.push(k);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `Σ c_i h_i` from the Cartan part of a Lie element.
pub fn cartan_to_weyl(lie: &Lie, a: &LieElement) -> WeylElement {
    let (nv, r) = (lie.num_positive(), lie.rank());
    let mut p = Poly::zero(r);
    for i in 0..r {
        let c = &a.coeffs[lie.index(Basis::H(i))];
        if !c.is_zero() {
            p.add_assign_scaled(&Poly::var(r, i), c);
        }
    }
    let mut w = WeylElement::zero(nv, r);
    w.add_term(vec![0; nv], vec![0; nv], p);
    w
}
