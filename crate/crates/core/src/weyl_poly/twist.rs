//! The twisting functor `T_α` on characters, and `Γ_α`-multiplicities.
//!
//! `ch T_α M(λ) = e^λ Σ_{k≥1} e^{kα} Π_{γ≠α} (1 − e^{−γ})^{−1}`. For a
//! simple root every weight space is finite-dimensional; otherwise every
//! multiplicity is infinite and only truncations (`k ≤ cap`) are reported,
//! flagged as lower bounds.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::algebra::WeylElement;
use super::fock::{apply_term, monomials_up_to, shifted_cartan_values, weight_offset, FockKind};
use super::pi::pi_g;
use crate::character::{Character, Window};
use crate::error::{Error, Result};
use crate::lie::Lie;
use crate::linalg;
use crate::rational::{as_i64, Q};
use crate::root_data::Weight;

/// Number of ways to write `target` as a nonnegative combination of `roots`.
pub fn partition_count(roots: &[Vec<i64>], target: &[i64]) -> u64 {
    fn rec(
        roots: &[Vec<i64>],
        i: usize,
        t: &mut Vec<i64>,
        memo: &mut HashMap<(usize, Vec<i64>), u64>,
    ) -> u64 {
        if t.iter().any(|&c| c < 0) {
            return 0;
        }
        if i == roots.len() {
            return u64::from(t.iter().all(|&c| c == 0));
        }
        if let Some(&v) = memo.get(&(i, t.clone())) {
            return v;
        }
        let key = (i, t.clone());
        let mut total = 0;
        let mut steps = 0;
        loop {
            if t.iter().any(|&c| c < 0) {
                break;
            }
            total += rec(roots, i + 1, t, memo);
            for (c, r) in t.iter_mut().zip(&roots[i]) {
                *c -= r;
            }
            steps += 1;
        }
        for (c, r) in t.iter_mut().zip(&roots[i]) {
            *c += steps * r;
        }
        memo.insert(key, total);
        total
    }
    rec(roots, 0, &mut target.to_vec(), &mut HashMap::new())
}

fn is_simple(lie: &Lie, alpha: usize) -> bool {
    lie.rs.positive_roots[alpha].height() == 1
}

/// Largest `k` that can contribute at offset `o` for a simple root `α`.
fn k_bound_simple(lie: &Lie, alpha: usize, o: &[i64]) -> i64 {
    let a = lie.rs.positive_roots[alpha]
        .coeffs
        .iter()
        .position(|&c| c == 1)
        .expect("simple root");
    o[a] + o
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != a)
        .map(|(_, &c)| (-c).max(0))
        .sum::<i64>()
}

/// Character of `T_α M(λ)` on a window, at energy 0.
pub fn twist_character(
    lie: &Lie,
    lambda: &Weight,
    alpha: usize,
    window: &Window,
    k_cap: u32,
) -> Result<Character> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let simple = is_simple(lie, alpha);
    let roots: Vec<Vec<i64>> = lie
        .rs
        .positive_roots
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != alpha)
        .map(|(_, r)| r.coeffs.clone())
        .collect();
    let a = &lie.rs.positive_roots[alpha].coeffs;
    let mut ch = Character::new(lambda.clone());
    for o in window.offsets(lie.rank()) {
        let kmax = if simple {
            k_bound_simple(lie, alpha, &o)
        } else {
            k_cap as i64
        };
        let mut count = 0;
        for k in 1..=kmax {
            let target: Vec<i64> = a.iter().zip(&o).map(|(c, oi)| k * c - oi).collect();
            count += partition_count(&roots, &target);
        }
        ch.add(o, 0, count, !simple);
    }
    Ok(ch)
}

/// Character of a Fock module read off from the `h`-spectrum of monomials.
///
/// For `F_{n̄,α}` with `α` not simple only monomials with `x_α`-degree below
/// `k_cap` are counted, matching the truncation of [`twist_character`].
pub fn fock_character(
    lie: &Lie,
    kind: FockKind,
    lambda: &Weight,
    window: &Window,
    k_cap: u32,
) -> Result<Character> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let (r, nv) = (lie.rank() as i64, lie.num_positive());
    let radius = window.radius;
    let (x_max, height, lower_bound) = match kind {
        FockKind::Verma => (0, 0, false),
        FockKind::Gt(a) if is_simple(lie, a) => (r * radius, 1, false),
        FockKind::Gt(a) => (k_cap as i64 - 1, lie.rs.positive_roots[a].height(), true),
    };
    let hs: Vec<WeylElement> = (0..lie.rank()).map(|i| pi_g(lie, &lie.h(i))).collect();
    let shift = shifted_cartan_values(lambda);
    let inv = lie.rs.inverse_cartan();
    let mut ch = Character::new(lambda.clone());
    for xdeg in 0..=x_max.max(0) {
        let budget = ((xdeg + 1) * height + r * radius) as u32;
        let mut mono = vec![0u32; nv];
        let mut found = Vec::new();
        enumerate_d(
            lie,
            kind,
            0,
            budget,
            xdeg as u32,
            &mut mono,
            radius + (xdeg + 1) * height,
            &mut found,
        );
        for m in found {
            // eigenvalues of π_g(h_i) give μ(h_i)
            let mut mu = Vec::with_capacity(lie.rank());
            for h in &hs {
                let mut value = Q::zero();
                for (a, b, p) in h.terms() {
                    if let Some((img, c)) = apply_term(kind, &shift, a, b, p, &m) {
                        assert_eq!(img, m, "Cartan elements act diagonally on monomials");
                        value += c;
                    }
                }
                mu.push(value);
            }
            let diff: Vec<Q> = mu.iter().zip(&lambda.coords).map(|(a, b)| a - b).collect();
            let offset: Vec<i64> = (0..lie.rank())
                .map(|i| {
                    let c: Q = (0..lie.rank()).map(|j| &inv[i][j] * &diff[j]).sum();
                    as_i64(&c).expect("integral weight offset")
                })
                .collect();
            if window.contains(&offset) {
                ch.add(offset, 0, 1, lower_bound);
            }
        }
    }
    Ok(ch)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_d(
    lie: &Lie,
    kind: FockKind,
    i: usize,
    budget: u32,
    xdeg: u32,
    mono: &mut Vec<u32>,
    coord_cap: i64,
    out: &mut Vec<Vec<u32>>,
) {
    let nv = mono.len();
    if i == nv {
        out.push(mono.clone());
        return;
    }
    if kind.is_x_variable(i) {
        mono[i] = xdeg;
        enumerate_d(lie, kind, i + 1, budget, xdeg, mono, coord_cap, out);
        mono[i] = 0;
        return;
    }
    for e in 0..=budget {
        mono[i] = e;
        // the ∂ part alone already lies outside the window
        let partial: Vec<i64> = (0..lie.rank())
            .map(|j| {
                (0..=i)
                    .filter(|&t| !kind.is_x_variable(t))
                    .map(|t| mono[t] as i64 * lie.rs.positive_roots[t].coeffs[j])
                    .sum()
            })
            .collect();
        if partial.iter().any(|&c| c > coord_cap) {
            break;
        }
        enumerate_d(lie, kind, i + 1, budget - e, xdeg, mono, coord_cap, out);
    }
    mono[i] = 0;
}

/// Exact `c_α` spectrum on the degree-`≤ D` part of a weight space of `F_{n̄,α}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub slice_dim: usize,
    /// Rational eigenvalue → algebraic multiplicity.
    pub eigenvalues: BTreeMap<Q, usize>,
    /// Degree of the irreducible part of the characteristic polynomial without rational roots.
    pub irrational_degree: usize,
    /// Whether `c_α` maps the slice into itself.
    pub invariant: bool,
}

/// `π_g(c_α)` as an element of the Weyl algebra.
pub fn casimir_image(lie: &Lie, alpha: usize) -> WeylElement {
    let c = lie.casimir(alpha);
    let mut out = WeylElement::zero(lie.num_positive(), lie.rank());
    for (coeff, word) in c.terms() {
        out = out.add(&super::pi::pi_g_word(lie, &word).scale(&coeff));
    }
    out
}

pub fn gamma_alpha_multiplicity(
    lie: &Lie,
    lambda: &Weight,
    alpha: usize,
    mu: &Weight,
    d: u32,
) -> Result<GammaReport> {
    let diff = mu.sub(lambda);
    let rc = lie.rs.weight_to_root_coords(&diff);
    let target: Vec<i64> = rc
        .iter()
        .map(|c| as_i64(c).ok_or_else(|| Error::EmptyWeightSpace(mu.render())))
        .collect::<Result<_>>()?;
    let kind = FockKind::Gt(alpha);
    let basis: Vec<Vec<u32>> = monomials_up_to(lie.num_positive(), d)
        .into_iter()
        .filter(|m| weight_offset(lie, kind, m) == target)
        .collect();
    let index: HashMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let c = casimir_image(lie, alpha);
    let shift = shifted_cartan_values(lambda);
    let s = basis.len();
    let mut mat = linalg::zeros(s, s);
    let mut invariant = true;
    for (j, m) in basis.iter().enumerate() {
        for (a, b, p) in c.terms() {
            if let Some((img, coeff)) = apply_term(kind, &shift, a, b, p, m) {
                match index.get(&img) {
                    Some(&i) => mat[i][j] += coeff,
                    None => invariant = false,
                }
            }
        }
    }
    let mut eigenvalues = BTreeMap::new();
    let mut irrational_degree = 0;
    if s > 0 {
        let cp = linalg::char_poly(&mat);
        match linalg::rational_roots(&cp) {
            Some((roots, rest)) => {
                for (r, m) in roots {
                    eigenvalues.insert(r, m);
                }
                irrational_degree = rest;
            }
            None => irrational_degree = s,
        }
    }
    Ok(GammaReport {
        slice_dim: s,
        eigenvalues,
        irrational_degree,
        invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn kostant_partitions_sl3() {
        let g = Lie::new(3).unwrap();
        let roots: Vec<Vec<i64>> =
            g.rs.positive_roots
                .iter()
                .map(|r| r.coeffs.clone())
                .collect();
        assert_eq!(partition_count(&roots, &[1, 1]), 2);
        assert_eq!(partition_count(&roots, &[2, 2]), 3);
        assert_eq!(partition_count(&roots, &[2, 1]), 2);
        assert_eq!(partition_count(&roots, &[-1, 0]), 0);
    }

    #[test]
    fn sl2_twist_weights() {
        let g = Lie::new(2).unwrap();
        let lam = Weight::new(vec![frac(1, 2)]);
        let w = Window::new(5, 0);
        let ch = twist_character(&g, &lam, 0, &w, 0).unwrap();
        for o in -5..=5i64 {
            let expected = u64::from(o >= 1);
            assert_eq!(ch.get(&[o], 0).count, expected);
        }
        assert_eq!(
            ch,
            fock_character(&g, FockKind::Gt(0), &lam, &w, 0).unwrap()
        );
        assert_eq!(
            twist_character(&g, &lam, 0, &Window::new(-1, 0), 0),
            Err(Error::EmptyWindow)
        );
    }

    #[test]
    fn sl3_theta_multiplicity_grows() {
        let g = Lie::new(3).unwrap();
        let lam = Weight::zero(2);
        let w = Window::new(1, 0);
        let mut last = 0;
        for cap in 1..=4 {
            let ch = twist_character(&g, &lam, 2, &w, cap).unwrap();
            let m = ch.get(&[0, 0], 0);
            assert!(m.lower_bound);
            assert!(m.count > last);
            last = m.count;
            assert_eq!(
                ch,
                fock_character(&g, FockKind::Gt(2), &lam, &w, cap).unwrap()
            );
        }
    }

    #[test]
    fn sl2_casimir_is_scalar() {
        let g = Lie::new(2).unwrap();
        for l in [q(0), q(2), frac(-3, 2)] {
            let lam = Weight::new(vec![l.clone()]);
            let mu = lam.add(&Weight::from_ints(&[4]));
            let rep = gamma_alpha_multiplicity(&g, &lam, 0, &mu, 4).unwrap();
            let expected = &l + &l * &l / q(2);
            assert_eq!(
                rep.eigenvalues.into_iter().collect::<Vec<_>>(),
                vec![(expected, 1)]
            );
            assert!(rep.invariant);
        }
        let lam = Weight::zero(1);
        assert!(matches!(
            gamma_alpha_multiplicity(&g, &lam, 0, &Weight::new(vec![frac(1, 2)]), 4),
            Err(Error::EmptyWeightSpace(_))
        ));
        assert!(
            gamma_alpha_multiplicity(&g, &lam, 0, &Weight::from_ints(&[-2]), 4)
                .unwrap()
                .eigenvalues
                .is_empty()
        );
    }
}
