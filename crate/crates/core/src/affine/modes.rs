//! Mode operators on the relaxed Wakimoto module `𝒲 ⊗ π^{κ−κ_c}_{λ+2ρ}`.
//!
//! The module is a polynomial ring. Its generators are `∂_{x_{γ,−m}}`,
//! `x_{γ,m}` and `y_{i,m}` for `m ≥ 1`, plus the top variables: `∂_{x_{γ,0}}`
//! for a Verma top, or `x_{α,0}` together with `∂_{x_{γ,0}}` (`γ ≠ α`)
//! for a Gelfand–Tsetlin top. Every mode maps a monomial to at most a few
//! monomials, and the module's energy grading counts `m` for each generator.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::lie::Lie;
use crate::linalg::Matrix;
use crate::rational::{add_to, mul, q, Q};
use crate::root_data::Weight;
use crate::weyl_poly::FockKind;

/// A generator of the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Top-component variable of positive root `γ`.
    Top(u16),
    /// `∂_{x_{γ,−m}}`
    D(u16, u16),
    /// `x_{γ,m}`
    X(u16, u16),
    /// `y_{i,m}`
    Y(u16, u16),
}

impl Var {
    pub fn energy(self) -> u32 {
        match self {
            Var::Top(_) => 0,
            Var::D(_, m) | Var::X(_, m) | Var::Y(_, m) => m as u32,
        }
    }
}

/// A monomial, stored as sorted `(variable, exponent)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub Vec<(Var, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn times(&self, v: Var, k: u32) -> Mono {
        let mut out = self.0.clone();
        match out.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => out[i].1 += k,
            Err(i) => out.insert(i, (v, k)),
        }
        Mono(out)
    }

    /// `d/dv`, returning the multiplicity factor.
    pub fn derive(&self, v: Var) -> Option<(Mono, u32)> {
        let i = self.0.binary_search_by(|(w, _)| w.cmp(&v)).ok()?;
        let e = self.0[i].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some((Mono(out), e))
    }

    pub fn energy(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.energy() * e).sum()
    }

    pub fn top_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| matches!(v, Var::Top(_)))
            .map(|(_, e)| e)
            .sum()
    }

    /// Exponent vector of the top variables.
    pub fn top_exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(Var::Top(i as u16))).collect()
    }

    pub fn from_top(exps: &[u32]) -> Mono {
        Mono(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (Var::Top(i as u16), e))
                .collect(),
        )
    }
}

/// A vector of the relaxed Wakimoto module.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WakimotoVector {
    pub terms: BTreeMap<Mono, Q>,
}

impl WakimotoVector {
    pub fn zero() -> Self {
        WakimotoVector::default()
    }

    pub fn vacuum() -> Self {
        WakimotoVector::basis(Mono::one())
    }

    pub fn basis(m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Q::one());
        WakimotoVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                add_to(o.get_mut(), &c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WakimotoVector, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), mul(v, c));
        }
    }

    pub fn sub(&self, other: &WakimotoVector) -> WakimotoVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    /// Common energy of all terms, if homogeneous.
    pub fn energy(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Mono::energy);
        let first = it.next()?;
        it.all(|e| e == first).then_some(first)
    }
}

/// A field of the free-field algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// `a_α(z)`, conformal weight 1.
    A(usize),
    /// `a*_α(z)`, conformal weight 0.
    AStar(usize),
    /// `b_i(z)`, conformal weight 1.
    B(usize),
}

impl FieldKind {
    pub fn conformal_weight(self) -> i64 {
        match self {
            FieldKind::AStar(_) => 0,
            _ => 1,
        }
    }

    /// Annihilation modes stand to the right in normal-ordered products.
    pub fn is_annihilator(self, n: i64) -> bool {
        match self {
            FieldKind::A(_) => n >= 0,
            FieldKind::AStar(_) | FieldKind::B(_) => n >= 1,
        }
    }
}

/// Everything needed to act by modes: the top, `λ`, the level and the Heisenberg Gram matrix.
#[derive(Clone, Debug)]
pub struct ModeContext {
    pub top: FockKind,
    pub lambda: Weight,
    pub k: Q,
    /// `(κ−κ_c)(h_i, h_j) = (k+n) κ0(h_i, h_j)`.
    pub gram: Matrix,
    /// `(λ+2ρ)(h_i)`.
    pub shift: Vec<Q>,
    pub nroots: usize,
    pub rank: usize,
}

impl ModeContext {
    pub fn new(lie: &Lie, top: FockKind, lambda: Weight, k: Q) -> Self {
        let kc = &k + q(lie.n() as i64);
        let gram = lie
            .rs
            .cartan_matrix
            .iter()
            .map(|row| row.iter().map(|&c| q(c) * &kc).collect())
            .collect();
        let shift = lambda.coords.iter().map(|c| c + q(2)).collect();
        ModeContext {
            top,
            lambda,
            k,
            gram,
            shift,
            nroots: lie.num_positive(),
            rank: lie.rank(),
        }
    }

    /// The Heisenberg part is degenerate at the critical level.
    pub fn is_critical(&self) -> bool {
        self.gram.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    fn top_is_x(&self, root: usize) -> bool {
        self.top.is_x_variable(root)
    }

    /// Applies one mode to a monomial.
    pub fn apply_mode(&self, field: FieldKind, n: i64, m: &Mono) -> Vec<(Mono, Q)> {
        match field {
            FieldKind::A(a) => {
                let r = a as u16;
                if n >= 1 {
                    derive(m, Var::X(r, n as u16), Q::one())
                } else if n <= -1 {
                    vec![(m.times(Var::D(r, (-n) as u16), 1), Q::one())]
                } else if self.top_is_x(a) {
                    derive(m, Var::Top(r), Q::one())
                } else {
                    vec![(m.times(Var::Top(r), 1), Q::one())]
                }
            }
            FieldKind::AStar(a) => {
                let r = a as u16;
                if n <= -1 {
                    vec![(m.times(Var::X(r, (-n) as u16), 1), Q::one())]
                } else if n >= 1 {
                    derive(m, Var::D(r, n as u16), -Q::one())
                } else if self.top_is_x(a) {
                    vec![(m.times(Var::Top(r), 1), Q::one())]
                } else {
                    derive(m, Var::Top(r), -Q::one())
                }
            }
            FieldKind::B(i) => heisenberg_mode(self, i, n, m),
        }
    }
}

fn derive(m: &Mono, v: Var, sign: Q) -> Vec<(Mono, Q)> {
    match m.derive(v) {
        Some((d, e)) => vec![(d, sign * q(e as i64))],
        None => Vec::new(),
    }
}

fn heisenberg_mode(ctx: &ModeContext, i: usize, n: i64, m: &Mono) -> Vec<(Mono, Q)> {
    if n < 0 {
        return vec![(m.times(Var::Y(i as u16, (-n) as u16), 1), Q::one())];
    }
    if n == 0 {
        return vec![(m.clone(), ctx.shift[i].clone())];
    }
    let mut out = Vec::new();
    for j in 0..ctx.rank {
        let g = &ctx.gram[i][j];
        if g.is_zero() {
            continue;
        }
        if let Some((d, e)) = m.derive(Var::Y(j as u16, n as u16)) {
            out.push((d, g * q(n * e as i64)));
        }
    }
    out
}

/// `b_{i,n} · v` with the Gram-matrix action for `n > 0`.
pub fn heisenberg_act(ctx: &ModeContext, i: usize, n: i64, v: &WakimotoVector) -> WakimotoVector {
    let mut out = WakimotoVector::zero();
    for (m, c) in &v.terms {
        for (img, coeff) in heisenberg_mode(ctx, i, n, m) {
            out.add_term(img, coeff * c);
        }
    }
    out
}

/// Offset `μ − λ` of a monomial's weight in simple-root coordinates.
pub fn weight_offset(lie: &Lie, top: FockKind, m: &Mono) -> Vec<i64> {
    let mut out = vec![0i64; lie.rank()];
    let mut add = |root: usize, sign: i64, e: u32| {
        for (o, c) in out.iter_mut().zip(&lie.rs.positive_roots[root].coeffs) {
            *o += sign * e as i64 * c;
        }
    };
    if let FockKind::Gt(a) = top {
        add(a, 1, 1);
    }
    for &(v, e) in &m.0 {
        match v {
            Var::Top(r) => add(
                r as usize,
                if top.is_x_variable(r as usize) { 1 } else { -1 },
                e,
            ),
            Var::D(r, _) => add(r as usize, -1, e),
            Var::X(r, _) => add(r as usize, 1, e),
            Var::Y(..) => {}
        }
    }
    out
}

/// All non-top generators of energy exactly `m`.
pub fn generators_at(nroots: usize, rank: usize, m: u16) -> Vec<Var> {
    let mut out: Vec<Var> = (0..nroots as u16).map(|r| Var::D(r, m)).collect();
    out.extend((0..nroots as u16).map(|r| Var::X(r, m)));
    out.extend((0..rank as u16).map(|i| Var::Y(i, m)));
    out
}

/// Monomials with energy `≤ dmax` and top degree `≤ top_max`.
pub fn spanning_monomials(nroots: usize, rank: usize, dmax: u32, top_max: u32) -> Vec<Mono> {
    let mut vars: Vec<Var> = (0..nroots as u16).map(Var::Top).collect();
    for m in 1..=dmax as u16 {
        vars.extend(generators_at(nroots, rank, m));
    }
    // monomials are stored in variable order
    vars.sort();
    let mut out = Vec::new();
    fn rec(
        vars: &[Var],
        i: usize,
        energy_left: u32,
        top_left: u32,
        cur: &mut Vec<(Var, u32)>,
        out: &mut Vec<Mono>,
    ) {
        if i == vars.len() {
            out.push(Mono(cur.clone()));
            return;
        }
        let v = vars[i];
        let (cost, budget) = match v {
            Var::Top(_) => (1, top_left),
            _ => (v.energy(), energy_left),
        };
        let mut e = 0;
        while e * cost <= budget {
            if e > 0 {
                cur.push((v, e));
            }
            let (el, tl) = match v {
                Var::Top(_) => (energy_left, top_left - e),
                _ => (energy_left - e * cost, top_left),
            };
            rec(vars, i + 1, el, tl, cur, out);
            if e > 0 {
                cur.pop();
            }
            e += 1;
        }
    }
    rec(&vars, 0, dmax, top_max, &mut Vec::new(), &mut out);
    out.sort();
    out
}
