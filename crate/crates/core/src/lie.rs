//! The Chevalley basis of `sl_n` realized by matrix units.
//!
//! `e_{ε_i−ε_j} = E_ij`, `f_{ε_i−ε_j} = E_ji` and `h_i = E_ii − E_{i+1,i+1}`.
//! Structure constants are read off matrix commutators once and cached.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{push_term, Poly};
use crate::rational::{frac, q, Q};
use crate::root_data::{Root, RootSystem};

/// A Chevalley basis symbol. Root indices refer to `RootSystem::positive_roots`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    E(usize),
    H(usize),
    F(usize),
}

#[derive(Clone, Debug)]
pub struct Lie {
    pub rs: RootSystem,
    pub basis: Vec<Basis>,
    /// `table[a][b]` lists the nonzero coordinates of `[b_a, b_b]`.
    table: Vec<Vec<Vec<(usize, i64)>>>,
    kappa0: Vec<Vec<i64>>,
}

/// An element of `sl_n` in the Chevalley basis (dense coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    pub n: usize,
    pub coeffs: Vec<Q>,
}

impl Lie {
    pub fn new(n: usize) -> Result<Self> {
        let rs = RootSystem::new(n)?;
        let np = rs.num_positive();
        let r = rs.rank;
        let mut basis: Vec<Basis> = (0..np).map(Basis::E).collect();
        basis.extend((0..r).map(Basis::H));
        basis.extend((0..np).map(Basis::F));
        let mats: Vec<Vec<Vec<i64>>> = basis.iter().map(|b| basis_matrix(&rs, *b)).collect();
        let dim = basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        let mut kappa0 = vec![vec![0i64; dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let ab = int_mul(&mats[a], &mats[b]);
                let ba = int_mul(&mats[b], &mats[a]);
                let comm: Vec<Vec<i64>> = ab
                    .iter()
                    .zip(&ba)
                    .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect())
                    .collect();
                table[a][b] = decompose(&rs, &comm);
                kappa0[a][b] = (0..n).map(|i| ab[i][i]).sum();
            }
        }
        Ok(Lie {
            rs,
            basis,
            table,
            kappa0,
        })
    }

    pub fn n(&self) -> usize {
        self.rs.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn index(&self, b: Basis) -> usize {
        let np = self.num_positive();
        match b {
            Basis::E(i) => i,
            Basis::H(i) => np + i,
            Basis::F(i) => np + self.rank() + i,
        }
    }

    pub fn basis_element(&self, b: Basis) -> LieElement {
        let mut x = self.zero();
        x.coeffs[self.index(b)] = Q::one();
        x
    }

    pub fn zero(&self) -> LieElement {
        LieElement {
            n: self.n(),
            coeffs: vec![Q::zero(); self.dim()],
        }
    }

    pub fn e(&self, root: usize) -> LieElement {
        self.basis_element(Basis::E(root))
    }

    pub fn f(&self, root: usize) -> LieElement {
        self.basis_element(Basis::F(root))
    }

    pub fn h(&self, i: usize) -> LieElement {
        self.basis_element(Basis::H(i))
    }

    /// `h_α = [e_α, f_α]`.
    pub fn h_root(&self, root: usize) -> LieElement {
        self.bracket(&self.e(root), &self.f(root))
            .expect("same algebra")
    }

    /// Structure constants of `[b_a, b_b]` by basis index.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    /// `κ0(b_a, b_b) = tr(b_a b_b)`.
    pub fn kappa0_basis(&self, a: usize, b: usize) -> i64 {
        self.kappa0[a][b]
    }

    pub fn kappa0(&self, a: &LieElement, b: &LieElement) -> Q {
        let mut acc = Q::zero();
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if self.kappa0[i][j] != 0 {
                    acc += x * y * q(self.kappa0[i][j]);
                }
            }
        }
        acc
    }

    fn check(&self, a: &LieElement) -> Result<()> {
        if a.n != self.n() || a.coeffs.len() != self.dim() {
            return Err(Error::DimensionError(format!(
                "element of sl_{} used in sl_{}",
                a.n,
                self.n()
            )));
        }
        Ok(())
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for &(l, c) in &self.table[i][j] {
                    out.coeffs[l] += x * y * q(c);
                }
            }
        }
        Ok(out)
    }

    /// `tr(ad a ad b)`, computed from the structure constants.
    pub fn killing(&self, a: &LieElement, b: &LieElement) -> Q {
        let ad_a = self.ad_matrix(a);
        let ad_b = self.ad_matrix(b);
        let prod = crate::linalg::mat_mul(&ad_a, &ad_b);
        (0..self.dim()).map(|i| prod[i][i].clone()).sum()
    }

    /// Matrix of `ad a` in the Chevalley basis (columns are images).
    pub fn ad_matrix(&self, a: &LieElement) -> Matrix {
        let d = self.dim();
        let mut m = crate::linalg::zeros(d, d);
        for j in 0..d {
            let img = self
                .bracket(a, &self.basis_element(self.basis[j]))
                .expect("same algebra");
            for i in 0..d {
                m[i][j] = img.coeffs[i].clone();
            }
        }
        m
    }

    /// Smallest `k` with `ad(a)^k = 0`, for `a ∈ n̄`.
    pub fn ad_nilpotency_index(&self, a: &LieElement) -> Result<usize> {
        self.check(a)?;
        if a.coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| !c.is_zero() && !matches!(self.basis[i], Basis::F(_)))
        {
            return Err(Error::NotNilpotent);
        }
        let ad = self.ad_matrix(a);
        let mut power = crate::linalg::identity(self.dim());
        for k in 0..=self.dim() {
            if power.iter().all(|row| row.iter().all(|c| c.is_zero())) {
                return Ok(k);
            }
            power = crate::linalg::mat_mul(&ad, &power);
        }
        Err(Error::NotNilpotent)
    }

    /// Nilpotency index of `ad u` for the generic `u = Σ x_α f_α` on `ℂ[n̄] ⊗ g`.
    pub fn generic_u_nilpotency(&self) -> usize {
        let mut k = 0;
        let mut current: Vec<PolyLie> = (0..self.dim()).map(|i| PolyLie::basis(self, i)).collect();
        while current.iter().any(|p| !p.is_zero()) {
            current = current.iter().map(|p| p.ad_u(self)).collect();
            k += 1;
        }
        k
    }

    pub fn casimir(&self, root: usize) -> CasimirAlpha {
        CasimirAlpha {
            e: self.e(root),
            f: self.f(root),
            h: self.h_root(root),
        }
    }

    /// Splits `a` into its `n̄`, `h` and `n` components.
    pub fn split(&self, a: &LieElement) -> (LieElement, LieElement, LieElement) {
        let (mut nbar, mut cartan, mut nil) = (self.zero(), self.zero(), self.zero());
        for (i, c) in a.coeffs.iter().enumerate() {
            let target = match self.basis[i] {
                Basis::F(_) => &mut nbar,
                Basis::H(_) => &mut cartan,
                Basis::E(_) => &mut nil,
            };
            target.coeffs[i] = c.clone();
        }
        (nbar, cartan, nil)
    }

    /// `n × n` matrix of an element.
    pub fn to_matrix(&self, a: &LieElement) -> Matrix {
        let n = self.n();
        let mut m = crate::linalg::zeros(n, n);
        for (i, c) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let bm = basis_matrix(&self.rs, self.basis[i]);
            for r in 0..n {
                for s in 0..n {
                    if bm[r][s] != 0 {
                        m[r][s] += c * q(bm[r][s]);
                    }
                }
            }
        }
        m
    }

    /// The weight of a basis symbol as a root (zero for `h_i`).
    pub fn basis_weight(&self, b: Basis) -> Vec<i64> {
        match b {
            Basis::E(i) => self.rs.positive_roots[i].coeffs.clone(),
            Basis::F(i) => self.rs.positive_roots[i].neg().coeffs,
            Basis::H(_) => vec![0; self.rank()],
        }
    }

    pub fn symbol(&self, b: Basis) -> String {
        match b {
            Basis::E(i) => format!("e_{{{}}}", self.rs.positive_roots[i].label()),
            Basis::F(i) => format!("f_{{{}}}", self.rs.positive_roots[i].label()),
            Basis::H(i) => format!("h{}", i + 1),
        }
    }

    /// Parses `e:a1`, `f:a1+a2`, `h:1`.
    pub fn parse_symbol(&self, s: &str) -> Result<Basis> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected kind:label, got {s:?}")))?;
        match kind.trim() {
            "h" => {
                let i: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad Cartan index {rest:?}")))?;
                if i == 0 || i > self.rank() {
                    return Err(Error::Parse(format!(
                        "h index {i} out of range 1..={}",
                        self.rank()
                    )));
                }
                Ok(Basis::H(i - 1))
            }
            "e" | "f" => {
                let root = parse_root(rest, self.rank())?;
                let idx = self
                    .rs
                    .root_index(&root)
                    .ok_or_else(|| Error::Parse(format!("{rest:?} is not a positive root")))?;
                Ok(if kind.trim() == "e" {
                    Basis::E(idx)
                } else {
                    Basis::F(idx)
                })
            }
            other => Err(Error::Parse(format!("unknown basis kind {other:?}"))),
        }
    }

    pub fn render(&self, a: &LieElement) -> String {
        let mut out = String::new();
        let mut first = true;
        for (i, c) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            push_term(&mut out, c, &self.symbol(self.basis[i]), first);
            first = false;
        }
        if first {
            "0".into()
        } else {
            out
        }
    }
}

/// Parses a root label such as `a1+a2` or `a2+2a3`.
pub fn parse_root(label: &str, rank: usize) -> Result<Root> {
    let mut coeffs = vec![0i64; rank];
    let bad = || Error::Parse(format!("bad root label {label:?}"));
    for part in label.trim().split('+') {
        let part = part.trim();
        let pos = part.find('a').ok_or_else(bad)?;
        let mult: i64 = if pos == 0 {
            1
        } else {
            part[..pos].parse().map_err(|_| bad())?
        };
        let i: usize = part[pos + 1..].parse().map_err(|_| bad())?;
        if i == 0 || i > rank {
            return Err(bad());
        }
        coeffs[i - 1] += mult;
    }
    Ok(Root { coeffs })
}

impl LieElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        LieElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        LieElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        LieElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Nonzero `(basis index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// `c_α = e_α f_α + f_α e_α + ½ h_α²`, kept as an ordered expression.
#[derive(Clone, Debug)]
pub struct CasimirAlpha {
    pub e: LieElement,
    pub f: LieElement,
    pub h: LieElement,
}

impl CasimirAlpha {
    /// `(coefficient, word)`; words act right to left.
    pub fn terms(&self) -> Vec<(Q, Vec<LieElement>)> {
        vec![
            (Q::one(), vec![self.e.clone(), self.f.clone()]),
            (Q::one(), vec![self.f.clone(), self.e.clone()]),
            (frac(1, 2), vec![self.h.clone(), self.h.clone()]),
        ]
    }
}

/// An element of `ℂ[n̄] ⊗ g`: one polynomial in the `x_α` per basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyLie {
    pub components: Vec<Poly>,
}

impl PolyLie {
    pub fn zero(lie: &Lie) -> Self {
        PolyLie {
            components: vec![Poly::zero(lie.num_positive()); lie.dim()],
        }
    }

    pub fn basis(lie: &Lie, i: usize) -> Self {
        let mut p = PolyLie::zero(lie);
        p.components[i] = Poly::one(lie.num_positive());
        p
    }

    pub fn from_element(lie: &Lie, a: &LieElement) -> Self {
        let nv = lie.num_positive();
        PolyLie {
            components: a
                .coeffs
                .iter()
                .map(|c| Poly::constant(nv, c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add_assign_scaled(&mut self, other: &PolyLie, c: &Q) {
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            a.add_assign_scaled(b, c);
        }
    }

    /// `ad(u)` with `u = Σ x_α f_α`, extended `ℂ[n̄]`-linearly.
    pub fn ad_u(&self, lie: &Lie) -> PolyLie {
        let nv = lie.num_positive();
        let mut out = PolyLie::zero(lie);
        for alpha in 0..nv {
            let fa = lie.index(Basis::F(alpha));
            let x = Poly::var(nv, alpha);
            for (j, p) in self
                .components
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
            {
                let xp = x.mul(p);
                for &(l, c) in lie.bracket_basis(fa, j) {
                    out.components[l].add_assign_scaled(&xp, &q(c));
                }
            }
        }
        out
    }

    /// Applies `Σ_k coeffs[k] ad(u)^k`; the series stops once `ad(u)^k` vanishes.
    pub fn apply_series(&self, lie: &Lie, coeffs: &[Q]) -> PolyLie {
        let mut out = PolyLie::zero(lie);
        let mut power = self.clone();
        for c in coeffs {
            if power.is_zero() {
                break;
            }
            out.add_assign_scaled(&power, c);
            power = power.ad_u(lie);
        }
        debug_assert!(
            power.is_zero(),
            "series truncated before ad(u) became nilpotent"
        );
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.components
            .iter()
            .map(Poly::total_degree)
            .max()
            .unwrap_or(0)
    }
}

fn basis_matrix(rs: &RootSystem, b: Basis) -> Vec<Vec<i64>> {
    let n = rs.n;
    let mut m = vec![vec![0i64; n]; n];
    match b {
        Basis::E(i) => {
            let (r, s) = rs.positive_roots[i].endpoints().expect("type A root");
            m[r][s] = 1;
        }
        Basis::F(i) => {
            let (r, s) = rs.positive_roots[i].endpoints().expect("type A root");
            m[s][r] = 1;
        }
        Basis::H(i) => {
            m[i][i] = 1;
            m[i + 1][i + 1] = -1;
        }
    }
    m
}

fn int_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

/// Coordinates of a traceless integer matrix in the Chevalley basis.
fn decompose(rs: &RootSystem, m: &[Vec<i64>]) -> Vec<(usize, i64)> {
    let n = rs.n;
    let np = rs.num_positive();
    let mut out = Vec::new();
    for (idx, root) in rs.positive_roots.iter().enumerate() {
        let (i, j) = root.endpoints().expect("type A root");
        if m[i][j] != 0 {
            out.push((idx, m[i][j]));
        }
    }
    // diag = Σ c_i (E_ii − E_{i+1,i+1}) gives c_i = Σ_{t ≤ i} diag_t
    let mut acc = 0;
    for i in 0..n - 1 {
        acc += m[i][i];
        if acc != 0 {
            out.push((np + i, acc));
        }
    }
    for (idx, root) in rs.positive_roots.iter().enumerate() {
        let (i, j) = root.endpoints().expect("type A root");
        if m[j][i] != 0 {
            out.push((np + rs.rank + idx, m[j][i]));
        }
    }
    out.sort();
    out
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match Lie::new(self.n) {
            Ok(lie) => f.write_str(&lie.render(self)),
            Err(_) => write!(f, "{:?}", self.coeffs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations() {
        let g = Lie::new(2).unwrap();
        let (e, f, h) = (g.e(0), g.f(0), g.h(0));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert_eq!(g.bracket(&h, &e).unwrap(), e.scale(&q(2)));
        assert_eq!(g.bracket(&h, &f).unwrap(), f.scale(&q(-2)));
        assert_eq!(g.kappa0(&e, &f), q(1));
        assert_eq!(g.kappa0(&h, &h), q(2));
    }

    #[test]
    fn sl3_simple_brackets() {
        let g = Lie::new(3).unwrap();
        // E12 E23 − E23 E12 = E13
        assert_eq!(g.bracket(&g.e(0), &g.e(1)).unwrap(), g.e(2));
        assert_eq!(g.bracket(&g.f(0), &g.f(1)).unwrap(), g.f(2).scale(&q(-1)));
        assert!(g.bracket(&g.h(0), &g.h(1)).unwrap().is_zero());
        for a in 0..3 {
            let ha = g.h_root(a);
            let w = g.rs.root_weight(&g.rs.positive_roots[a]);
            for i in 0..2 {
                let hi = g.h(i);
                assert_eq!(g.bracket(&hi, &g.e(a)).unwrap(), g.e(a).scale(&w.coords[i]));
            }
            assert_eq!(g.kappa0(&ha, &ha), q(2));
        }
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        for n in 2..=4 {
            let g = Lie::new(n).unwrap();
            let d = g.dim();
            let b: Vec<LieElement> = (0..d).map(|i| g.basis_element(g.basis[i])).collect();
            for x in &b {
                for y in &b {
                    let xy = g.bracket(x, y).unwrap();
                    assert_eq!(xy, g.bracket(y, x).unwrap().scale(&q(-1)));
                    for z in &b {
                        let t1 = g.bracket(x, &g.bracket(y, z).unwrap()).unwrap();
                        let t2 = g.bracket(y, &g.bracket(z, x).unwrap()).unwrap();
                        let t3 = g.bracket(z, &xy).unwrap();
                        assert!(t1.add(&t2).add(&t3).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn killing_is_2n_kappa0() {
        for n in 2..=4 {
            let g = Lie::new(n).unwrap();
            for i in 0..g.rank() {
                for j in 0..g.rank() {
                    let (hi, hj) = (g.h(i), g.h(j));
                    assert_eq!(g.killing(&hi, &hj), g.kappa0(&hi, &hj) * q(2 * n as i64));
                }
            }
        }
    }

    #[test]
    fn nilpotency() {
        let g2 = Lie::new(2).unwrap();
        assert_eq!(g2.ad_nilpotency_index(&g2.f(0)).unwrap(), 3);
        assert_eq!(g2.ad_nilpotency_index(&g2.e(0)), Err(Error::NotNilpotent));
        let g3 = Lie::new(3).unwrap();
        assert_eq!(g3.ad_nilpotency_index(&g3.f(2)).unwrap(), 3);
        assert!(g3.generic_u_nilpotency() <= 5);
        assert_eq!(g2.generic_u_nilpotency(), 3);
    }

    #[test]
    fn split_round_trip() {
        let g = Lie::new(3).unwrap();
        let mut a = g.zero();
        for (i, c) in a.coeffs.iter_mut().enumerate() {
            *c = frac(i as i64 - 3, 2);
        }
        let (x, y, z) = g.split(&a);
        assert_eq!(x.add(&y).add(&z), a);
    }

    #[test]
    fn casimir_on_highest_weight_line() {
        // on v_λ: e f v = λ(h_α) v, f e v = 0, h² v = λ(h_α)² v
        let g = Lie::new(3).unwrap();
        let rho = g.rs.rho();
        let theta = g.rs.positive_roots.len() - 1;
        let l = g.rs.pairing(&rho, &g.rs.positive_roots[theta]).unwrap();
        let c = g.casimir(theta);
        let expected = &l + &l * &l / q(2);
        assert_eq!(expected, q(4));
        assert_eq!(c.terms().len(), 3);
        assert_eq!(g.h_root(theta), g.h(0).add(&g.h(1)));
    }

    #[test]
    fn parse_and_render() {
        let g = Lie::new(3).unwrap();
        assert_eq!(g.parse_symbol("f:a1+a2").unwrap(), Basis::F(2));
        assert_eq!(g.parse_symbol("h:2").unwrap(), Basis::H(1));
        assert!(g.parse_symbol("h:3").is_err());
        assert!(g.parse_symbol("e:a1+a3").is_err());
        let x = g.e(0).sub(&g.h(1).scale(&frac(1, 2)));
        assert_eq!(g.render(&x), "e_{a1} - 1/2 h2");
        assert_eq!(g.render(&g.zero()), "0");
    }
}
