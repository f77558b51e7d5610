//! Admissible weights `P̄r_k` and the sets `Ω_k(p_Σ)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::affine_weyl::{y_is_admissible, AffineWeight, AffineWeylElement};
use super::level::{dominant_integral, pr_k_integral, AdmissibleLevel};
use crate::rational::{is_positive_integer, q, Q};
use crate::root_data::{weight_to_eps, Root, RootSystem, Weight, WeylGroupElement};

/// A point of `P̄r_k` together with one `y` and one integral weight producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrEntry {
    pub lambda: Weight,
    pub y: AffineWeylElement,
    pub base: Weight,
}

/// The finite part of `y·(λ + kΛ0)`.
pub fn project_dot(
    rs: &RootSystem,
    lvl: &AdmissibleLevel,
    y: &AffineWeylElement,
    lambda: &Weight,
) -> Weight {
    y.dot(
        rs,
        &AffineWeight::new(lambda.clone(), lvl.k.clone(), Q::zero()),
    )
    .finite
}

/// `P̄r_{k,y}`.
pub fn pr_k_y(rs: &RootSystem, lvl: &AdmissibleLevel, y: &AffineWeylElement) -> BTreeSet<Weight> {
    pr_k_integral(lvl)
        .iter()
        .map(|l| project_dot(rs, lvl, y, l))
        .collect()
}

/// Every admissible `y = w̄ t_{−η}`.
///
/// Admissibility forces `0 ≤ (η, α) ≤ q` on positive roots, so `η` is
/// dominant with `(η, θ) ≤ q` and the search is finite.
pub fn admissible_ys(rs: &RootSystem, lvl: &AdmissibleLevel) -> Vec<AffineWeylElement> {
    let etas = dominant_integral(rs.rank, lvl.q);
    let mut out = Vec::new();
    for w in WeylGroupElement::all(rs.n) {
        for eta in &etas {
            let y = AffineWeylElement::new(w.clone(), eta.clone());
            if y_is_admissible(rs, &y, lvl.q) {
                out.push(y);
            }
        }
    }
    out
}

/// `P̄r_k`, sorted, each weight recorded with the first `y` that produces it.
pub fn pr_k_bar(lvl: &AdmissibleLevel) -> Vec<PrEntry> {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let integral = pr_k_integral(lvl);
    let mut seen: BTreeMap<Weight, PrEntry> = BTreeMap::new();
    for y in admissible_ys(&rs, lvl) {
        for base in &integral {
            let lambda = project_dot(&rs, lvl, &y, base);
            seen.entry(lambda.clone()).or_insert(PrEntry {
                lambda,
                y: y.clone(),
                base: base.clone(),
            });
        }
    }
    seen.into_values().collect()
}

/// `P̄r_k` grouped into classes under the finite dot action.
pub fn pr_k_bar_classes(lvl: &AdmissibleLevel) -> Vec<Vec<Weight>> {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let mut classes: BTreeMap<Vec<Q>, Vec<Weight>> = BTreeMap::new();
    for e in pr_k_bar(lvl) {
        let mut key = weight_to_eps(&e.lambda.add(&rs.rho()));
        key.sort();
        classes.entry(key).or_default().push(e.lambda);
    }
    classes.into_values().collect()
}

/// `⟨λ + ρ̂, α∨⟩ ∉ −ℕ0` for real positive affine roots `ᾱ + mδ` with `m ≤ mmax`.
pub fn is_regular_dominant(lvl: &AdmissibleLevel, lambda: &Weight, mmax: i64) -> bool {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let lr = lambda.add(&rs.rho());
    let kn = lvl.shifted();
    rs.positive_roots.iter().all(|a| {
        let base = rs.pairing(&lr, a).expect("same rank");
        (0..=mmax).all(|m| {
            let plus = &base + q(m) * &kn;
            let minus = -&base + q(m + 1) * &kn;
            !(is_nonpositive_integer(&plus) || is_nonpositive_integer(&minus))
        })
    })
}

fn is_nonpositive_integer(x: &Q) -> bool {
    x.is_integer() && *x <= q(0)
}

/// `Δ_Σ` for `Σ ⊆ {1, …, n−1}`, both signs.
pub fn delta_sigma(rs: &RootSystem, sigma: &[usize]) -> BTreeSet<Root> {
    let mut out = BTreeSet::new();
    for r in &rs.positive_roots {
        let inside = r
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || sigma.contains(&(i + 1)));
        if inside {
            out.insert(r.clone());
            out.insert(r.neg());
        }
    }
    out
}

/// `Δ_+^u`: positive roots outside `Δ_Σ`.
pub fn nilradical_roots(rs: &RootSystem, sigma: &[usize]) -> Vec<Root> {
    let ds = delta_sigma(rs, sigma);
    rs.positive_roots
        .iter()
        .filter(|r| !ds.contains(*r))
        .cloned()
        .collect()
}

/// The `y` selected by the structural description of `Ω_k(p_Σ)`.
pub fn omega_ys(lvl: &AdmissibleLevel, sigma: &[usize]) -> Vec<AffineWeylElement> {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let target = delta_sigma(&rs, sigma);
    let theta = rs.theta();
    let mut out = Vec::new();
    for w in WeylGroupElement::all(lvl.n) {
        if !w.act_root(&theta).is_positive() {
            continue;
        }
        for eta in dominant_integral(rs.rank, lvl.q - 1) {
            let zero: Vec<&Root> = rs
                .positive_roots
                .iter()
                .filter(|a| rs.pairing(&eta, a).expect("same rank").is_zero())
                .collect();
            if !zero.iter().all(|a| w.act_root(a).is_positive()) {
                continue;
            }
            let image: BTreeSet<Root> = zero
                .iter()
                .flat_map(|a| [w.act_root(a), w.act_root(&a.neg())])
                .collect();
            if image == target {
                out.push(AffineWeylElement::new(w.clone(), eta));
            }
        }
    }
    out
}

/// `Ω_k(p_Σ)` as a union of `P̄r_{k, w̄ t_{−η}}`.
pub fn omega_theorem(sigma: &[usize], lvl: &AdmissibleLevel) -> Vec<Weight> {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let ys = omega_ys(lvl, sigma);
    let sets: Vec<BTreeSet<Weight>> = ys.par_iter().map(|y| pr_k_y(&rs, lvl, y)).collect();
    sets.into_iter()
        .flatten()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// `Ω_k(p_Σ)` from its definition: `λ ∈ P̄r_k ∩ Λ+(p_Σ)` with
/// `⟨λ + ρ, α∨⟩ ∉ ℕ` for every `α ∈ Δ_+^u`.
pub fn omega_direct(sigma: &[usize], lvl: &AdmissibleLevel) -> Vec<Weight> {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let unip = nilradical_roots(&rs, sigma);
    let rho = rs.rho();
    pr_k_bar(lvl)
        .into_iter()
        .map(|e| e.lambda)
        .filter(|l| rs.is_dominant_for(sigma, l))
        .filter(|l| {
            let lr = l.add(&rho);
            unip.iter()
                .all(|a| !is_positive_integer(&rs.pairing(&lr, a).expect("same rank")))
        })
        .collect()
}

/// `(λ, α)` for `λ ∈ Ω_k(p_Σ)` and `α ∈ Δ_+^u`.
pub fn certificates(sigma: &[usize], lvl: &AdmissibleLevel) -> Vec<(Weight, Root)> {
    let rs = RootSystem::new(lvl.n).expect("valid level");
    let unip = nilradical_roots(&rs, sigma);
    omega_theorem(sigma, lvl)
        .into_iter()
        .flat_map(|l| unip.iter().map(move |a| (l.clone(), a.clone())))
        .collect()
}

pub fn omega_json(sigma: &[usize], lvl: &AdmissibleLevel) -> Value {
    json!({
        "level": lvl.to_json(),
        "sigma": sigma,
        "omega": omega_theorem(sigma, lvl).iter().map(Weight::to_json).collect::<Vec<_>>(),
        "certificates": certificates(sigma, lvl).iter()
            .map(|(l, a)| json!({"lambda": l.to_json(), "alpha": a.label()}))
            .collect::<Vec<_>>(),
    })
}

/// All subsets of `{1, …, n−1}`.
pub fn all_sigmas(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << (n - 1))
        .map(|mask| (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}
