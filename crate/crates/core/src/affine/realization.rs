//! The mode-level homomorphism `π_{κ,g}` into free fields.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::field::{astar_monomial_times, term_mode_apply, Factor, FieldExpr, FieldTerm};
use super::modes::{FieldKind, ModeContext, Mono, WakimotoVector};
use crate::error::{Error, Result};
use crate::lie::{Basis, Lie, LieElement};
use crate::rational::{q, Q};
use crate::root_data::Weight;
use crate::weyl_poly::pi::{f_component, t_poly};
use crate::weyl_poly::{pq_polynomials, FockKind};

/// Memo table for `(basis index, mode) ↦ (monomial ↦ image)`.
pub type ModeCache = HashMap<(usize, i64), HashMap<Mono, WakimotoVector>>;

fn simple_position(lie: &Lie, root: usize) -> Option<usize> {
    lie.rs.simple_index(&lie.rs.positive_roots[root])
}

/// `π_{κ,g}(a)(z)` for `a ∈ n̄ ∪ h` or `a = e_γ` with `γ` simple.
///
/// `c_gamma[i]` is the constant attached to the `i`-th simple root.
pub fn pi_affine(lie: &Lie, a: &LieElement, k: &Q, c_gamma: &[Q]) -> Result<FieldExpr> {
    let (nbar, cartan, nil) = lie.split(a);
    let mut terms = Vec::new();
    if !nbar.is_zero() {
        let t = t_poly(lie, &nbar)?;
        for alpha in 0..lie.num_positive() {
            for (e, c) in f_component(lie, &t, alpha).terms() {
                terms.push(astar_monomial_times(
                    e,
                    Some(FieldKind::A(alpha)),
                    -c.clone(),
                ));
            }
        }
    }
    if !cartan.is_zero() {
        let coords: Vec<Q> = (0..lie.rank())
            .map(|i| cartan.coeffs[lie.index(Basis::H(i))].clone())
            .collect();
        for (alpha, root) in lie.rs.positive_roots.iter().enumerate() {
            let w = lie.rs.root_weight(root);
            let value: Q = coords.iter().zip(&w.coords).map(|(c, x)| c * x).sum();
            if !value.is_zero() {
                terms.push(FieldTerm {
                    coeff: value,
                    factors: vec![
                        Factor::plain(FieldKind::AStar(alpha)),
                        Factor::plain(FieldKind::A(alpha)),
                    ],
                });
            }
        }
        for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            terms.push(FieldTerm {
                coeff: c.clone(),
                factors: vec![Factor::plain(FieldKind::B(i))],
            });
        }
    }
    for (idx, c) in nil.support() {
        let Basis::E(gamma) = lie.basis[idx] else {
            unreachable!("n part holds only e's")
        };
        let i = simple_position(lie, gamma)
            .ok_or_else(|| Error::UseBracketClosure(lie.symbol(lie.basis[idx])))?;
        let (_, qs) = pq_polynomials(lie, gamma)?;
        for (alpha, poly) in qs.iter().enumerate() {
            for (e, qc) in poly.terms() {
                terms.push(astar_monomial_times(
                    e,
                    Some(FieldKind::A(alpha)),
                    -(qc * c),
                ));
            }
        }
        let kappa_ef = q(lie.kappa0_basis(idx, lie.index(Basis::F(gamma))));
        let shifted = &c_gamma[i] + (k + q(lie.n() as i64)) * kappa_ef;
        terms.push(FieldTerm {
            coeff: -(shifted * c),
            factors: vec![Factor {
                field: FieldKind::AStar(gamma),
                deriv: 1,
            }],
        });
        terms.push(FieldTerm {
            coeff: c.clone(),
            factors: vec![
                Factor::plain(FieldKind::AStar(gamma)),
                Factor::plain(FieldKind::B(i)),
            ],
        });
    }
    Ok(FieldExpr::Normal(terms))
}

/// `π(e_β)` for non-simple `β = γ + β′`, `γ` the simple root of lowest index,
/// as `(1/s)[π(e_γ)_0, π(e_β′)(z)]` where `[e_γ, e_β′] = s e_β`.
pub fn bracket_closure(lie: &Lie, beta: usize) -> Result<FieldExpr> {
    let root = &lie.rs.positive_roots[beta];
    if root.height() < 2 {
        return Err(Error::NotInNilradical);
    }
    let (i, _) = root.endpoints().expect("type A root");
    let gamma = lie
        .rs
        .root_index(&lie.rs.simple_roots[i])
        .expect("simple root");
    let mut rest = root.coeffs.clone();
    rest[i] -= 1;
    let beta_prime = lie
        .rs
        .root_index(&crate::root_data::Root { coeffs: rest })
        .expect("β − γ is a root");
    let (eg, ebp, eb) = (
        lie.index(Basis::E(gamma)),
        lie.index(Basis::E(beta_prime)),
        lie.index(Basis::E(beta)),
    );
    let s = lie
        .bracket_basis(eg, ebp)
        .iter()
        .find(|(l, _)| *l == eb)
        .map(|(_, c)| *c)
        .expect("nonzero bracket");
    Ok(FieldExpr::ZeroModeCommutator {
        scale: Q::one() / q(s),
        left: eg,
        right: ebp,
    })
}

/// The realization on one relaxed Wakimoto module.
#[derive(Clone, Debug)]
pub struct Realization {
    pub lie: Lie,
    pub ctx: ModeContext,
    pub c_gamma: Vec<Q>,
    pub exprs: Vec<FieldExpr>,
}

impl Realization {
    pub fn with_constants(
        lie: &Lie,
        top: FockKind,
        lambda: Weight,
        k: Q,
        c_gamma: Vec<Q>,
    ) -> Result<Self> {
        let ctx = ModeContext::new(lie, top, lambda, k.clone());
        let mut exprs = Vec::with_capacity(lie.dim());
        for b in &lie.basis {
            let e = match *b {
                Basis::E(beta) if simple_position(lie, beta).is_none() => {
                    bracket_closure(lie, beta)?
                }
                _ => pi_affine(lie, &lie.basis_element(*b), &k, &c_gamma)?,
            };
            exprs.push(e);
        }
        Ok(Realization {
            lie: lie.clone(),
            ctx,
            c_gamma,
            exprs,
        })
    }

    /// Builds the realization with every `c_γ` solved from the commutator identity.
    pub fn new(lie: &Lie, top: FockKind, lambda: Weight, k: Q) -> Result<Self> {
        let c = (0..lie.rank())
            .map(|i| solve_c_gamma_at(lie, i, &k, top, &lambda))
            .collect::<Result<Vec<_>>>()?;
        Realization::with_constants(lie, top, lambda, k, c)
    }

    pub fn k(&self) -> &Q {
        &self.ctx.k
    }

    /// `π(b_idx)_m · v`.
    pub fn apply_basis(
        &self,
        idx: usize,
        m: i64,
        v: &WakimotoVector,
        cache: &mut ModeCache,
    ) -> WakimotoVector {
        let mut out = WakimotoVector::zero();
        for (mono, c) in &v.terms {
            if let Some(img) = cache.get(&(idx, m)).and_then(|s| s.get(mono)) {
                out.add_scaled(img, c);
                continue;
            }
            let img = self.mode_apply_mono(&self.exprs[idx], m, mono, cache);
            out.add_scaled(&img, c);
            cache.entry((idx, m)).or_default().insert(mono.clone(), img);
        }
        out
    }

    pub fn apply_element(
        &self,
        a: &LieElement,
        m: i64,
        v: &WakimotoVector,
        cache: &mut ModeCache,
    ) -> WakimotoVector {
        let mut out = WakimotoVector::zero();
        for (idx, c) in a.support() {
            out.add_scaled(&self.apply_basis(idx, m, v, cache), c);
        }
        out
    }

    /// `F_m · v` for any field expression.
    pub fn mode_apply(
        &self,
        f: &FieldExpr,
        m: i64,
        v: &WakimotoVector,
        cache: &mut ModeCache,
    ) -> WakimotoVector {
        let mut out = WakimotoVector::zero();
        for (mono, c) in &v.terms {
            out.add_scaled(&self.mode_apply_mono(f, m, mono, cache), c);
        }
        out
    }

    fn mode_apply_mono(
        &self,
        f: &FieldExpr,
        m: i64,
        mono: &Mono,
        cache: &mut ModeCache,
    ) -> WakimotoVector {
        match f {
            FieldExpr::Normal(terms) => {
                let mut out = WakimotoVector::zero();
                for t in terms {
                    out.add_scaled(&term_mode_apply(&self.ctx, t, m, mono), &Q::one());
                }
                out
            }
            FieldExpr::ZeroModeCommutator { scale, left, right } => {
                let v = WakimotoVector::basis(mono.clone());
                let lr = self.apply_basis(*right, m, &v, cache);
                let lr = self.apply_basis(*left, 0, &lr, cache);
                let rl = self.apply_basis(*left, 0, &v, cache);
                let rl = self.apply_basis(*right, m, &rl, cache);
                let mut out = WakimotoVector::zero();
                out.add_scaled(&lr.sub(&rl), scale);
                out
            }
        }
    }
}

/// `[π(e_γ)_1, π(f_γ)_{−1}] v − π(h_γ)_0 v − k κ0(e_γ,f_γ) v` for the given constants.
fn level_defect(real: &Realization, gamma: usize, v: &WakimotoVector) -> WakimotoVector {
    let lie = &real.lie;
    let (e, f) = (lie.index(Basis::E(gamma)), lie.index(Basis::F(gamma)));
    let mut cache = ModeCache::new();
    let ef = real.apply_basis(e, 1, &real.apply_basis(f, -1, v, &mut cache), &mut cache);
    let fe = real.apply_basis(f, -1, &real.apply_basis(e, 1, v, &mut cache), &mut cache);
    let h = lie.h_root(gamma);
    let mut out = ef.sub(&fe).sub(&real.apply_element(&h, 0, v, &mut cache));
    out.add_scaled(v, &-(real.k() * q(lie.kappa0_basis(e, f))));
    out
}

fn solve_c_gamma_at(lie: &Lie, i: usize, k: &Q, top: FockKind, lambda: &Weight) -> Result<Q> {
    let gamma = lie
        .rs
        .root_index(&lie.rs.simple_roots[i])
        .expect("simple root");
    let zero = vec![Q::zero(); lie.rank()];
    let mut unit = zero.clone();
    unit[i] = Q::one();
    let r0 = Realization::with_constants(lie, top, lambda.clone(), k.clone(), zero)?;
    let r1 = Realization::with_constants(lie, top, lambda.clone(), k.clone(), unit)?;
    let vectors = super::modes::spanning_monomials(lie.num_positive(), lie.rank(), 2, 1);
    let mut solution: Option<Q> = None;
    for m in vectors {
        let v = WakimotoVector::basis(m);
        let d0 = level_defect(&r0, gamma, &v);
        let d1 = level_defect(&r1, gamma, &v);
        let slope = d1.sub(&d0);
        let keys: std::collections::BTreeSet<&Mono> =
            d0.terms.keys().chain(slope.terms.keys()).collect();
        for key in keys {
            let a = slope.terms.get(key).cloned().unwrap_or_else(Q::zero);
            let b = d0.terms.get(key).cloned().unwrap_or_else(Q::zero);
            if a.is_zero() {
                if !b.is_zero() {
                    return Err(Error::RealizationBug(format!(
                        "level defect independent of c_{}",
                        i + 1
                    )));
                }
                continue;
            }
            let c = -b / a;
            match &solution {
                Some(s) if *s != c => {
                    return Err(Error::RealizationBug(format!(
                        "inconsistent equations for c_{}",
                        i + 1
                    )));
                }
                _ => solution = Some(c),
            }
        }
    }
    solution.ok_or_else(|| Error::RealizationBug(format!("c_{} is not determined", i + 1)))
}

/// Solves for `c_γ` (simple root index `i`, 0-based) at level `k` on a Verma top of weight `λ`.
pub fn solve_c_gamma(lie: &Lie, i: usize, k: &Q, lambda: &Weight) -> Result<Q> {
    solve_c_gamma_at(lie, i, k, FockKind::Verma, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn sl2_images() {
        let g = Lie::new(2).unwrap();
        let c = vec![q(0)];
        let f = pi_affine(&g, &g.f(0), &q(1), &c).unwrap();
        assert_eq!(f.render(&g), "-a_{a1}(z)");
        let h = pi_affine(&g, &g.h(0), &q(1), &c).unwrap();
        assert_eq!(h.render(&g), "2 :a*_{a1}(z) a_{a1}(z): + b_1(z)");
        let e = pi_affine(&g, &g.e(0), &q(1), &c).unwrap();
        assert_eq!(
            e.render(&g),
            ":a*_{a1}(z) a*_{a1}(z) a_{a1}(z): - 3 d_z a*_{a1}(z) + :a*_{a1}(z) b_1(z):"
        );
    }

    #[test]
    fn non_simple_needs_closure() {
        let g = Lie::new(3).unwrap();
        let c = vec![q(0), q(0)];
        assert!(matches!(
            pi_affine(&g, &g.e(2), &q(1), &c),
            Err(Error::UseBracketClosure(_))
        ));
        let FieldExpr::ZeroModeCommutator { scale, left, right } = bracket_closure(&g, 2).unwrap()
        else {
            panic!("expected a commutator node")
        };
        assert_eq!((scale, left, right), (q(1), 0, 1));
    }

    #[test]
    fn c_gamma_is_constant() {
        let g = Lie::new(2).unwrap();
        let mut seen = Vec::new();
        for (k, l) in [
            (frac(1, 2), q(0)),
            (frac(1, 2), frac(3, 7)),
            (frac(-4, 3), q(-2)),
            (q(3), frac(1, 2)),
        ] {
            seen.push(solve_c_gamma(&g, 0, &k, &Weight::new(vec![l])).unwrap());
        }
        assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
    }
}
