//! Relaxed Verma modules `U(ĝ_κ) ⊗_{U(g[t] ⊕ ℂc)} E` in PBW normal form.
//!
//! A basis vector is a sorted list of negative modes `a_{−n}` applied to a
//! monomial of the top component `E`. The top is either `F_n̄ ⊗ ℂ_{λ+2ρ}`
//! (a Verma module) or `F_{n̄,α} ⊗ ℂ_{λ+2ρ}` (a Gelfand–Tsetlin module), with
//! `g` acting through `π_g`.

use std::cell::RefCell;
use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::Lie;
use crate::rational::{add_to, mul, q, Q};
use crate::root_data::Weight;
use crate::weyl_poly::fock::{apply_term, shifted_cartan_values, weight_offset};
use crate::weyl_poly::{pi_g_basis, FockKind, WeylElement};

/// `a_{−n}` as `(n, basis index)` with `n ≥ 1`.
pub type ModeFactor = (u32, usize);

fn factor_key(f: &ModeFactor) -> (Reverse<u32>, usize) {
    (Reverse(f.0), f.1)
}

/// A PBW basis vector: factors sorted by decreasing `n`, then basis index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub factors: Vec<ModeFactor>,
    pub top: Vec<u32>,
}

impl PbwMonomial {
    pub fn new(mut factors: Vec<ModeFactor>, top: Vec<u32>) -> Self {
        factors.sort_by_key(factor_key);
        PbwMonomial { factors, top }
    }

    pub fn energy(&self) -> u32 {
        self.factors.iter().map(|f| f.0).sum()
    }

    pub fn render(&self, lie: &Lie) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(n, i)| format!("{}(-{n})", lie.symbol(lie.basis[i])))
            .collect();
        let top: Vec<String> = self
            .top
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let v = format!("t_{{{}}}", lie.rs.positive_roots[i].label());
                if e == 1 {
                    v
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        parts.push(if top.is_empty() {
            "v".into()
        } else {
            format!("{} v", top.join(" "))
        });
        parts.join(" ")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PBWVector {
    pub terms: BTreeMap<PbwMonomial, Q>,
}

impl PBWVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: PbwMonomial) -> Self {
        let mut v = Self::zero();
        v.terms.insert(m, Q::from_integer(1.into()));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                add_to(e.get_mut(), &c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PBWVector, c: &Q) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), mul(v, c));
        }
    }

    pub fn sub(&self, other: &PBWVector) -> PBWVector {
        let mut out = self.clone();
        out.add_scaled(other, &q(-1));
        out
    }

    pub fn scale(&self, c: &Q) -> PBWVector {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn render(&self, lie: &Lie) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            crate::poly::push_term(&mut out, c, &m.render(lie), i == 0);
        }
        out
    }
}

type Terms = Vec<(PbwMonomial, Q)>;

/// The relaxed Verma module at level `k·κ0` over a top component.
pub struct RelaxedVerma {
    pub lie: Lie,
    pub kind: FockKind,
    pub lambda: Weight,
    pub k: Q,
    shift: Vec<Q>,
    top_ops: Vec<WeylElement>,
    cache: RefCell<HashMap<(usize, i64, PbwMonomial), Terms>>,
}

impl RelaxedVerma {
    pub fn new(lie: &Lie, kind: FockKind, lambda: Weight, k: Q) -> Result<Self> {
        if lambda.rank() != lie.rank() {
            return Err(Error::DimensionError(format!(
                "weight of rank {} for sl_{}",
                lambda.rank(),
                lie.n()
            )));
        }
        if let FockKind::Gt(a) = kind {
            if a >= lie.num_positive() {
                return Err(Error::ModuleMismatch);
            }
        }
        Ok(RelaxedVerma {
            lie: lie.clone(),
            kind,
            shift: shifted_cartan_values(&lambda),
            lambda,
            k,
            top_ops: pi_g_basis(lie),
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn vacuum(&self) -> PBWVector {
        PBWVector::basis(PbwMonomial::new(
            Vec::new(),
            vec![0; self.lie.num_positive()],
        ))
    }

    /// `a_m · v` for the basis element with index `idx`.
    pub fn act(&self, idx: usize, m: i64, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (mono, c) in &v.terms {
            for (img, c2) in self.act_mono(idx, m, mono) {
                out.add_term(img, c2 * c);
            }
        }
        out
    }

    /// Offset of a basis vector's weight from `λ`, in simple-root coordinates.
    pub fn weight_offset(&self, m: &PbwMonomial) -> Vec<i64> {
        let mut o = weight_offset(&self.lie, self.kind, &m.top);
        for &(_, i) in &m.factors {
            for (x, c) in o.iter_mut().zip(self.lie.basis_weight(self.lie.basis[i])) {
                *x += c;
            }
        }
        o
    }

    fn act_mono(&self, a: usize, m: i64, mono: &PbwMonomial) -> Terms {
        let key = (a, m, mono.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let result = self.straighten(a, m, mono);
        self.cache.borrow_mut().insert(key, result.clone());
        result
    }

    fn straighten(&self, a: usize, m: i64, mono: &PbwMonomial) -> Terms {
        let Some(&first) = mono.factors.first() else {
            return self.act_on_top(a, m, &mono.top);
        };
        if m < 0 && factor_key(&((-m) as u32, a)) <= factor_key(&first) {
            let mut factors = Vec::with_capacity(mono.factors.len() + 1);
            factors.push(((-m) as u32, a));
            factors.extend_from_slice(&mono.factors);
            return vec![(
                PbwMonomial {
                    factors,
                    top: mono.top.clone(),
                },
                q(1),
            )];
        }
        // a_m b_{−n} w = b_{−n} a_m w + [a,b]_{m−n} w + m κ(a,b) δ_{m,n} w
        let (n, b) = (first.0 as i64, first.1);
        let rest = PbwMonomial {
            factors: mono.factors[1..].to_vec(),
            top: mono.top.clone(),
        };
        let mut acc: BTreeMap<PbwMonomial, Q> = BTreeMap::new();
        for (t, c) in self.act_mono(a, m, &rest) {
            for (t2, c2) in self.act_mono(b, -n, &t) {
                *acc.entry(t2).or_insert_with(Q::zero) += c2 * &c;
            }
        }
        for &(l, c) in self.lie.bracket_basis(a, b) {
            for (t, c2) in self.act_mono(l, m - n, &rest) {
                *acc.entry(t).or_insert_with(Q::zero) += c2 * q(c);
            }
        }
        if m == n {
            let central = q(m) * &self.k * q(self.lie.kappa0_basis(a, b));
            *acc.entry(rest).or_insert_with(Q::zero) += central;
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn act_on_top(&self, a: usize, m: i64, top: &[u32]) -> Terms {
        if m > 0 {
            return Vec::new();
        }
        if m < 0 {
            return vec![(
                PbwMonomial {
                    factors: vec![((-m) as u32, a)],
                    top: top.to_vec(),
                },
                q(1),
            )];
        }
        let mut acc: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (x, d, p) in self.top_ops[a].terms() {
            if let Some((img, c)) = apply_term(self.kind, &self.shift, x, d, p, top) {
                *acc.entry(img).or_insert_with(Q::zero) += c;
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| {
                (
                    PbwMonomial {
                        factors: Vec::new(),
                        top: t,
                    },
                    c,
                )
            })
            .collect()
    }
}

/// `a_m · v` in a freshly built module; use [`RelaxedVerma::act`] to reuse the straightening cache.
pub fn relaxed_verma_act(rv: &RelaxedVerma, a: &str, m: i64, v: &PBWVector) -> Result<PBWVector> {
    let b = rv.lie.parse_symbol(a)?;
    Ok(rv.act(rv.lie.index(b), m, v))
}

/// All sorted factor lists of total energy `≤ dmax`.
pub fn factor_lists(lie: &Lie, dmax: u32) -> Vec<Vec<ModeFactor>> {
    let mut gens: Vec<ModeFactor> = (1..=dmax)
        .flat_map(|n| (0..lie.dim()).map(move |i| (n, i)))
        .collect();
    gens.sort_by_key(factor_key);
    let mut out = Vec::new();
    fn rec(
        gens: &[ModeFactor],
        i: usize,
        left: u32,
        cur: &mut Vec<ModeFactor>,
        out: &mut Vec<Vec<ModeFactor>>,
    ) {
        if i == gens.len() {
            out.push(cur.clone());
            return;
        }
        let g = gens[i];
        let mut pushed = 0;
        loop {
            rec(gens, i + 1, left - pushed * g.0, cur, out);
            if (pushed + 1) * g.0 > left {
                break;
            }
            cur.push(g);
            pushed += 1;
        }
        cur.truncate(cur.len() - pushed as usize);
    }
    rec(&gens, 0, dmax, &mut Vec::new(), &mut out);
    out
}

/// Top monomials whose weight is `λ + offset`.
///
/// Weight spaces of `F_{n̄,α}` are infinite-dimensional when `α` is not
/// simple; then only monomials of `x_α`-degree below `k_cap` are returned.
pub fn top_basis(lie: &Lie, kind: FockKind, offset: &[i64], k_cap: u32) -> Vec<Vec<u32>> {
    let nv = lie.num_positive();
    let roots = &lie.rs.positive_roots;
    let mut out = Vec::new();
    match kind {
        FockKind::Verma => {
            let target: Vec<i64> = offset.iter().map(|c| -c).collect();
            let vars: Vec<usize> = (0..nv).collect();
            partitions(lie, &vars, &target, vec![0; nv], &mut out);
        }
        FockKind::Gt(a) => {
            let alpha = &roots[a].coeffs;
            let jmax = if roots[a].height() == 1 {
                let s = alpha.iter().position(|&c| c == 1).expect("simple root");
                offset[s]
                    + offset
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != s)
                        .map(|(_, &c)| (-c).max(0))
                        .sum::<i64>()
            } else {
                k_cap as i64
            };
            let vars: Vec<usize> = (0..nv).filter(|&i| i != a).collect();
            for j in 0..jmax.max(0) {
                let target: Vec<i64> = alpha
                    .iter()
                    .zip(offset)
                    .map(|(c, o)| (j + 1) * c - o)
                    .collect();
                let mut start = vec![0; nv];
                start[a] = j as u32;
                partitions(lie, &vars, &target, start, &mut out);
            }
        }
    }
    out
}

fn partitions(lie: &Lie, vars: &[usize], target: &[i64], cur: Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if target.iter().any(|&c| c < 0) {
        return;
    }
    let Some((&v, rest)) = vars.split_first() else {
        if target.iter().all(|&c| c == 0) {
            out.push(cur);
        }
        return;
    };
    let root = &lie.rs.positive_roots[v].coeffs;
    let mut t = target.to_vec();
    let mut cur = cur;
    loop {
        partitions(lie, rest, &t, cur.clone(), out);
        for (x, c) in t.iter_mut().zip(root) {
            *x -= c;
        }
        if t.iter().any(|&c| c < 0) {
            break;
        }
        cur[v] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Basis;
    use crate::rational::frac;

    fn sl2(kind: FockKind, l: Q, k: Q) -> RelaxedVerma {
        RelaxedVerma::new(&Lie::new(2).unwrap(), kind, Weight::new(vec![l]), k).unwrap()
    }

    #[test]
    fn e_one_f_minus_one() {
        for (l, k) in [
            (q(0), frac(-1, 2)),
            (frac(2, 3), q(3)),
            (frac(-5, 2), frac(1, 7)),
        ] {
            let rv = sl2(FockKind::Verma, l.clone(), k.clone());
            let fv = relaxed_verma_act(&rv, "f:a1", -1, &rv.vacuum()).unwrap();
            let efv = relaxed_verma_act(&rv, "e:a1", 1, &fv).unwrap();
            assert_eq!(efv, rv.vacuum().scale(&(l + k)));
        }
    }

    #[test]
    fn positive_modes_kill_the_top() {
        let rv = sl2(FockKind::Gt(0), frac(1, 3), q(1));
        for idx in 0..3 {
            for m in 1..3 {
                assert!(rv.act(idx, m, &rv.vacuum()).is_zero());
            }
        }
    }

    #[test]
    fn gt_top_f_is_a_derivative() {
        let rv = sl2(FockKind::Gt(0), frac(1, 3), q(1));
        let f = rv.lie.index(Basis::F(0));
        for j in 0..5u32 {
            let v = PBWVector::basis(PbwMonomial::new(vec![], vec![j]));
            let mut expected = PBWVector::zero();
            if j > 0 {
                expected.add_term(PbwMonomial::new(vec![], vec![j - 1]), -q(j as i64));
            }
            assert_eq!(rv.act(f, 0, &v), expected);
        }
    }

    #[test]
    fn straightening_respects_commutators() {
        for n in 2..=3 {
            let lie = Lie::new(n).unwrap();
            let lam = Weight::new(vec![frac(1, 3); n - 1]);
            let k = frac(-3, 2);
            for kind in [FockKind::Verma, FockKind::Gt(lie.num_positive() - 1)] {
                let rv = RelaxedVerma::new(&lie, kind, lam.clone(), k.clone()).unwrap();
                let dmax = if n == 2 { 3 } else { 1 };
                let mut vectors = Vec::new();
                for f in factor_lists(&lie, dmax) {
                    for t in [vec![0; lie.num_positive()], {
                        let mut t = vec![0; lie.num_positive()];
                        t[0] = 1;
                        t
                    }] {
                        vectors.push(PBWVector::basis(PbwMonomial::new(f.clone(), t)));
                    }
                }
                let d = lie.dim();
                for v in vectors.iter().take(if n == 2 { usize::MAX } else { 40 }) {
                    for a in 0..d {
                        for b in 0..d {
                            for m in -2..=2i64 {
                                for nn in -2..=2i64 {
                                    let lhs = rv.act(a, m, &rv.act(b, nn, v)).sub(&rv.act(
                                        b,
                                        nn,
                                        &rv.act(a, m, v),
                                    ));
                                    let mut rhs = PBWVector::zero();
                                    for &(l, c) in lie.bracket_basis(a, b) {
                                        rhs.add_scaled(&rv.act(l, m + nn, v), &q(c));
                                    }
                                    if m + nn == 0 {
                                        rhs.add_scaled(v, &(q(m) * &k * q(lie.kappa0_basis(a, b))));
                                    }
                                    assert_eq!(lhs, rhs, "n={n} a={a} b={b} m={m} nn={nn}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factor_list_counts() {
        // coefficients of Π_m (1 − q^m)^{−3}: 1, 3, 9, 22
        let lie = Lie::new(2).unwrap();
        let lists = factor_lists(&lie, 3);
        let mut by_energy = [0usize; 4];
        for l in &lists {
            by_energy[l.iter().map(|f| f.0).sum::<u32>() as usize] += 1;
            assert!(l.windows(2).all(|w| factor_key(&w[0]) <= factor_key(&w[1])));
        }
        assert_eq!(by_energy, [1, 3, 9, 22]);
    }

    #[test]
    fn top_bases() {
        let g = Lie::new(3).unwrap();
        // ∂_1 ∂_2 and ∂_θ
        assert_eq!(top_basis(&g, FockKind::Verma, &[-1, -1], 0).len(), 2);
        for m in top_basis(&g, FockKind::Gt(0), &[2, -1], 0) {
            assert_eq!(weight_offset(&g, FockKind::Gt(0), &m), vec![2, -1]);
        }
        assert_eq!(top_basis(&g, FockKind::Gt(2), &[0, 0], 3).len(), 3);
    }
}
