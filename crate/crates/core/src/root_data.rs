//! Root data for type `A_{n-1}` (the Lie algebra `sl_n`).
//!
//! Weights are stored in the fundamental-weight basis, roots in the
//! simple-root basis. Positive roots are ordered by height and then by
//! the index of their first simple root, so `α1` precedes `α2` and the
//! highest root comes last. All downstream orderings (PBW words,
//! polynomial variables) inherit this order.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{fmt_q, is_nonneg_integer, q, Q};

/// A root written in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Label used in text output: `a1`, `a1+a2`, `-a2`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if s.is_empty() {
                ""
            } else {
                "+"
            };
            s.push_str(sign);
            if c.abs() != 1 {
                s.push_str(&format!("{}", c.abs()));
            }
            s.push_str(&format!("a{}", i + 1));
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    /// For a root `ε_i − ε_j` of `sl_n` returns `(i, j)` (0-based).
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let support: Vec<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect();
        let first = *support.first()?;
        let last = *support.last()?;
        let c = self.coeffs[first];
        if c.abs() != 1
            || support.len() != last - first + 1
            || support.iter().any(|&i| self.coeffs[i] != c)
        {
            return None;
        }
        if c > 0 {
            Some((first, last + 1))
        } else {
            Some((last + 1, first))
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A weight in the fundamental-weight basis: `coords[i] = ⟨λ, α_{i+1}∨⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Q::zero(); rank],
        }
    }

    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| q(c)).collect(),
        }
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i] = Q::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `a1*w1+a2*w2` style rendering; zero coordinates are skipped.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Q::zero();
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                s.push_str(&fmt_q(&abs));
                s.push('*');
            }
            s.push_str(&format!("w{}", i + 1));
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coords
                .iter()
                .map(|c| Value::String(fmt_q(c)))
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Which invariant form on `h` is meant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormLabel {
    /// Normalized form, `(θ, θ) = 2`; the trace form for `sl_n`.
    Kappa0,
    /// Killing form.
    Killing,
    /// Critical form `−h∨ κ0`.
    Critical,
    /// `−tr_{g/b}(ad a ad b)` restricted to `h`.
    CriticalBorel,
    /// `k κ0`.
    Level(Q),
}

impl FormLabel {
    pub fn parse(label: &str, k: Option<Q>) -> Result<Self> {
        match label {
            "k0" | "kappa0" => Ok(FormLabel::Kappa0),
            "kg" | "killing" => Ok(FormLabel::Killing),
            "kc" | "critical" => Ok(FormLabel::Critical),
            "kcb" | "critical_b" => Ok(FormLabel::CriticalBorel),
            "level" | "custom" => k
                .map(FormLabel::Level)
                .ok_or_else(|| Error::InvalidForm(label.into())),
            other => Err(Error::InvalidForm(other.into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    pub label: FormLabel,
    /// Gram matrix on the basis `h_1, …, h_r` of `h`.
    pub gram_h: Matrix,
    /// Induced Gram matrix on `h*` in the fundamental-weight basis, when nondegenerate.
    pub gram_hstar: Option<Matrix>,
}

impl BilinearForm {
    pub fn eval_h(&self, a: &[Q], b: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc += ai * bj * &self.gram_h[i][j];
            }
        }
        acc
    }
}

/// A Weyl group element of `sl_n`, stored as a permutation of `{0, …, n−1}`
/// acting on the `ε` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylGroupElement {
    pub perm: Vec<usize>,
}

impl WeylGroupElement {
    pub fn identity(n: usize) -> Self {
        WeylGroupElement {
            perm: (0..n).collect(),
        }
    }

    /// Simple reflection `s_i`, `i` 1-based.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidWeylWord(format!(
                "s_{i} does not exist in S_{n}"
            )));
        }
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(i - 1, i);
        Ok(WeylGroupElement { perm: p })
    }

    /// `s_{i1} s_{i2} ⋯` (1-based indices); the rightmost factor acts first.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = WeylGroupElement::identity(n);
        for &i in word {
            w = w.compose(&WeylGroupElement::simple(n, i)?);
        }
        Ok(w)
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidWeylWord(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(WeylGroupElement { perm })
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &WeylGroupElement) -> WeylGroupElement {
        WeylGroupElement {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylGroupElement {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        WeylGroupElement { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Linear action on weights: `ε_i ↦ ε_{perm[i]}`.
    pub fn act(&self, lambda: &Weight) -> Weight {
        let eps = weight_to_eps(lambda);
        let mut out = vec![Q::zero(); eps.len()];
        for (i, e) in eps.into_iter().enumerate() {
            out[self.perm[i]] = e;
        }
        eps_to_weight(&out)
    }

    /// Action on roots.
    pub fn act_root(&self, root: &Root) -> Root {
        let (i, j) = root.endpoints().expect("type A root");
        root_from_endpoints(root.rank(), self.perm[i], self.perm[j])
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<WeylGroupElement> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(|perm| WeylGroupElement { perm })
            .collect()
    }
}

/// `ε` coordinates of a weight (last coordinate normalized to 0).
pub fn weight_to_eps(lambda: &Weight) -> Vec<Q> {
    let r = lambda.rank();
    let mut eps = vec![Q::zero(); r + 1];
    for k in (0..r).rev() {
        eps[k] = &eps[k + 1] + &lambda.coords[k];
    }
    eps
}

pub fn eps_to_weight(eps: &[Q]) -> Weight {
    Weight {
        coords: eps.windows(2).map(|w| &w[0] - &w[1]).collect(),
    }
}

/// `ε_i − ε_j` in the simple-root basis.
pub fn root_from_endpoints(rank: usize, i: usize, j: usize) -> Root {
    let mut coeffs = vec![0i64; rank];
    let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    for c in coeffs.iter_mut().take(hi).skip(lo) {
        *c = s;
    }
    Root { coeffs }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    /// The `n` of `sl_n`.
    pub n: usize,
    pub rank: usize,
    pub simple_roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Coxeter number.
    pub h: usize,
    pub h_dual: usize,
    pub lacing: usize,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let rank = n - 1;
        let simple_roots: Vec<Root> = (0..rank)
            .map(|i| root_from_endpoints(rank, i, i + 1))
            .collect();
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(root_from_endpoints(rank, i, j));
            }
        }
        positive_roots.sort_by_key(|r| (r.height(), std::cmp::Reverse(r.coeffs.clone())));
        let cartan_matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Ok(RootSystem {
            n,
            rank,
            simple_roots,
            positive_roots,
            cartan_matrix,
            h: n,
            h_dual: n,
            lacing: 1,
        })
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn dim_g(&self) -> usize {
        self.n * self.n - 1
    }

    pub fn root_index(&self, root: &Root) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == root)
    }

    pub fn simple_index(&self, root: &Root) -> Option<usize> {
        self.simple_roots.iter().position(|r| r == root)
    }

    pub fn theta(&self) -> Root {
        Root {
            coeffs: vec![1; self.rank],
        }
    }

    pub fn rho(&self) -> Weight {
        Weight::from_ints(&vec![1; self.rank])
    }

    /// A root as a weight: coordinate `i` is `⟨α, α_i∨⟩`.
    pub fn root_weight(&self, root: &Root) -> Weight {
        let coords = (0..self.rank)
            .map(|i| {
                q((0..self.rank)
                    .map(|j| self.cartan_matrix[i][j] * root.coeffs[j])
                    .sum())
            })
            .collect();
        Weight { coords }
    }

    /// `⟨λ, α∨⟩`. In the simply-laced case `α∨ = Σ c_i α_i∨` for `α = Σ c_i α_i`.
    pub fn pairing(&self, lambda: &Weight, root: &Root) -> Result<Q> {
        if lambda.rank() != self.rank || root.rank() != self.rank {
            return Err(Error::DimensionError(format!(
                "rank {} weight / rank {} root in a rank {} system",
                lambda.rank(),
                root.rank(),
                self.rank
            )));
        }
        Ok(lambda
            .coords
            .iter()
            .zip(&root.coeffs)
            .map(|(l, &c)| l * q(c))
            .sum())
    }

    /// Simple-root coordinates of a weight in the root lattice ⊗ ℚ.
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Vec<Q> {
        let g = self.inverse_cartan();
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| &g[i][j] * &lambda.coords[j]).sum())
            .collect()
    }

    /// Inverse Cartan matrix; equals the κ0 Gram matrix on `h*` in the ω basis.
    pub fn inverse_cartan(&self) -> Matrix {
        let r = self.rank;
        let mut aug: Matrix = (0..r)
            .map(|i| {
                let mut row: Vec<Q> = self.cartan_matrix[i].iter().map(|&c| q(c)).collect();
                row.extend((0..r).map(|j| if i == j { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        linalg::rref(&mut aug);
        aug.into_iter().map(|row| row[r..].to_vec()).collect()
    }

    /// `(λ, μ)` for the κ0-induced form on `h*`.
    pub fn inner(&self, lambda: &Weight, mu: &Weight) -> Q {
        let g = self.inverse_cartan();
        let mut acc = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &lambda.coords[i] * &g[i][j] * &mu.coords[j];
            }
        }
        acc
    }

    pub fn form(&self, label: FormLabel) -> BilinearForm {
        let r = self.rank;
        let kappa0: Matrix = self
            .cartan_matrix
            .iter()
            .map(|row| row.iter().map(|&c| q(c)).collect())
            .collect();
        let scale = |s: Q| -> Matrix {
            kappa0
                .iter()
                .map(|row| row.iter().map(|c| c * &s).collect())
                .collect()
        };
        let gram_h = match &label {
            FormLabel::Kappa0 => kappa0.clone(),
            FormLabel::Killing => scale(q(2 * self.h_dual as i64)),
            FormLabel::Critical => scale(-q(self.h_dual as i64)),
            FormLabel::Level(k) => scale(k.clone()),
            FormLabel::CriticalBorel => {
                // −Σ_{α∈Δ+} α(h_i) α(h_j): ad(h) acts on g/b ≅ n̄ with eigenvalues −α(h)
                let mut m = linalg::zeros(r, r);
                for a in &self.positive_roots {
                    let w = self.root_weight(a);
                    for i in 0..r {
                        for j in 0..r {
                            m[i][j] -= &w.coords[i] * &w.coords[j];
                        }
                    }
                }
                m
            }
        };
        let gram_hstar = invert(&gram_h);
        BilinearForm {
            label,
            gram_h,
            gram_hstar,
        }
    }

    /// `w·λ = w(λ+ρ) − ρ`.
    pub fn dot_action(&self, w: &WeylGroupElement, lambda: &Weight) -> Weight {
        let rho = self.rho();
        w.act(&lambda.add(&rho)).sub(&rho)
    }

    /// `λ ∈ Λ+(p_Σ)`: `⟨λ, α_i∨⟩ ∈ ℕ0` for every `i ∈ Σ` (1-based indices).
    pub fn is_dominant_for(&self, sigma: &[usize], lambda: &Weight) -> bool {
        sigma
            .iter()
            .all(|&i| i >= 1 && i <= self.rank && is_nonneg_integer(&lambda.coords[i - 1]))
    }

    pub fn to_json(&self) -> Value {
        let roots = |rs: &[Root]| -> Value { rs.iter().map(|r| json!(r.coeffs)).collect() };
        json!({
            "type": "A",
            "rank": self.rank,
            "simple_roots": roots(&self.simple_roots),
            "positive_roots": roots(&self.positive_roots),
            "cartan_matrix": self.cartan_matrix,
            "coxeter_number": self.h,
            "dual_coxeter_number": self.h_dual,
            "rho": self.rho().to_json(),
        })
    }
}

fn invert(m: &Matrix) -> Option<Matrix> {
    let r = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..r).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let piv = linalg::rref(&mut aug);
    if piv.len() < r || piv.iter().any(|&p| p >= r) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[r..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn rank_one_and_two() {
        assert_eq!(RootSystem::new(1), Err(Error::InvalidRank(1)));
        let sl2 = RootSystem::new(2).unwrap();
        assert_eq!(sl2.positive_roots.len(), 1);
        assert_eq!(sl2.cartan_matrix, vec![vec![2]]);
        let sl3 = RootSystem::new(3).unwrap();
        let labels: Vec<String> = sl3.positive_roots.iter().map(|r| r.label()).collect();
        assert_eq!(labels, vec!["a1", "a2", "a1+a2"]);
        assert_eq!(sl3.theta().label(), "a1+a2");
    }

    #[test]
    fn sl4_has_six_positive_roots() {
        let rs = RootSystem::new(4).unwrap();
        // ε_i − ε_j, i < j
        let mut count = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(rs.root_index(&root_from_endpoints(3, i, j)).is_some());
                count += 1;
            }
        }
        assert_eq!(rs.positive_roots.len(), count);
        assert_eq!(rs.h_dual, 4);
    }

    #[test]
    fn pairings() {
        let sl2 = RootSystem::new(2).unwrap();
        assert_eq!(sl2.pairing(&sl2.rho(), &sl2.simple_roots[0]).unwrap(), q(1));
        let sl3 = RootSystem::new(3).unwrap();
        assert_eq!(sl3.pairing(&sl3.rho(), &sl3.theta()).unwrap(), q(2));
        assert_eq!(
            sl3.pairing(&Weight::fundamental(2, 0), &sl3.theta())
                .unwrap(),
            q(1)
        );
        assert!(matches!(
            sl3.pairing(&Weight::zero(1), &sl3.theta()),
            Err(Error::DimensionError(_))
        ));
    }

    #[test]
    fn forms_on_sl2() {
        let sl2 = RootSystem::new(2).unwrap();
        assert_eq!(sl2.form(FormLabel::Kappa0).gram_h[0][0], q(2));
        assert_eq!(sl2.form(FormLabel::Killing).gram_h[0][0], q(8));
        assert_eq!(sl2.form(FormLabel::CriticalBorel).gram_h[0][0], q(-4));
        assert_eq!(sl2.form(FormLabel::Critical).gram_h[0][0], q(-4));
        assert!(sl2.form(FormLabel::Level(q(0))).gram_hstar.is_none());
    }

    #[test]
    fn critical_form_is_minus_n_kappa0() {
        for n in 2..=5 {
            let rs = RootSystem::new(n).unwrap();
            let k0 = rs.form(FormLabel::Kappa0).gram_h;
            let kc = rs.form(FormLabel::Critical).gram_h;
            let kcb = rs.form(FormLabel::CriticalBorel).gram_h;
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    assert_eq!(kc[i][j], &k0[i][j] * q(-(n as i64)));
                    assert_eq!(kcb[i][j], kc[i][j]);
                }
            }
        }
    }

    #[test]
    fn theta_has_length_two() {
        for n in 2..=6 {
            let rs = RootSystem::new(n).unwrap();
            let t = rs.root_weight(&rs.theta());
            assert_eq!(rs.inner(&t, &t), q(2));
            let g = rs.form(FormLabel::Kappa0).gram_hstar.unwrap();
            assert_eq!(g, rs.inverse_cartan());
        }
    }

    #[test]
    fn dot_action_examples() {
        let sl2 = RootSystem::new(2).unwrap();
        let s = WeylGroupElement::simple(2, 1).unwrap();
        assert_eq!(
            sl2.dot_action(&s, &Weight::zero(1)),
            Weight::from_ints(&[-2])
        );
        let sl3 = RootSystem::new(3).unwrap();
        let w = WeylGroupElement::from_word(3, &[1, 2]).unwrap();
        // w(ρ) − ρ = −2α1 − α2 = −3ω1
        assert_eq!(
            sl3.dot_action(&w, &Weight::zero(2)),
            Weight::from_ints(&[-3, 0])
        );
        let e = WeylGroupElement::identity(3);
        let lam = Weight::new(vec![frac(1, 2), q(-3)]);
        assert_eq!(sl3.dot_action(&e, &lam), lam);
        assert!(matches!(
            WeylGroupElement::from_word(3, &[3]),
            Err(Error::InvalidWeylWord(_))
        ));
    }

    #[test]
    fn dominance_for_parabolics() {
        let sl3 = RootSystem::new(3).unwrap();
        assert!(sl3.is_dominant_for(&[], &Weight::from_ints(&[-5, -5])));
        assert!(!sl3.is_dominant_for(&[1], &Weight::from_ints(&[-1, 0])));
        assert!(sl3.is_dominant_for(&[1, 2], &Weight::from_ints(&[2, 1])));
    }

    #[test]
    fn root_closure_and_weyl_order() {
        for n in 2..=6 {
            let rs = RootSystem::new(n).unwrap();
            for a in &rs.positive_roots {
                for b in &rs.positive_roots {
                    let s = Root {
                        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
                    };
                    if s.endpoints().is_some() {
                        assert!(rs.root_index(&s).is_some());
                    }
                }
            }
        }
        for n in 2..=5 {
            let rs = RootSystem::new(n).unwrap();
            // orbit enumeration of a regular weight
            let mut orbit = std::collections::BTreeSet::new();
            let mut frontier = vec![rs.rho()];
            while let Some(w) = frontier.pop() {
                if orbit.insert(w.clone()) {
                    for i in 1..n {
                        frontier.push(WeylGroupElement::simple(n, i).unwrap().act(&w));
                    }
                }
            }
            let fact: usize = (1..=n).product();
            assert_eq!(orbit.len(), fact);
        }
    }

    #[test]
    fn form_is_weyl_invariant() {
        for n in 2..=5 {
            let rs = RootSystem::new(n).unwrap();
            for i in 1..n {
                let s = WeylGroupElement::simple(n, i).unwrap();
                for a in 0..rs.rank {
                    for b in 0..rs.rank {
                        let wa = Weight::fundamental(rs.rank, a);
                        let wb = Weight::fundamental(rs.rank, b);
                        assert_eq!(rs.inner(&s.act(&wa), &s.act(&wb)), rs.inner(&wa, &wb));
                    }
                }
            }
        }
    }

    #[test]
    fn dot_action_is_a_group_action() {
        let rs = RootSystem::new(4).unwrap();
        let lam = Weight::new(vec![frac(1, 3), q(-2), q(5)]);
        let all = WeylGroupElement::all(4);
        for w1 in all.iter().step_by(5) {
            for w2 in all.iter().step_by(7) {
                let lhs = rs.dot_action(&w1.compose(w2), &lam);
                let rhs = rs.dot_action(w1, &rs.dot_action(w2, &lam));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn simple_root_shift_under_rho() {
        let rs = RootSystem::new(4).unwrap();
        let lam = Weight::new(vec![frac(1, 2), q(3), q(-1)]);
        for (i, a) in rs.simple_roots.iter().enumerate() {
            let shifted = rs.pairing(&lam.add(&rs.rho()), a).unwrap();
            assert_eq!(shifted, &lam.coords[i] + q(1));
        }
    }
}
