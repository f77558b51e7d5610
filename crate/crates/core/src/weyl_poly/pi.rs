//! The homomorphism `π_g : U(g) → 𝒜_n̄ ⊗ U(h)` and the polynomials feeding it.
//!
//! With `u = Σ x_α f_α`,
//! `π_g(a) = −Σ_α [K(ad u)(e^{−ad u} a)_n̄]_α ∂_α + (e^{−ad u} a)_h`
//! where `K(t) = t e^t/(e^t−1)`.

use super::algebra::WeylElement;
use super::series::{bernoulli_series, exp_neg, Kernel};
use crate::error::{Error, Result};
use crate::lie::{Basis, Lie, LieElement, PolyLie};
use crate::poly::Poly;

fn series_len(lie: &Lie) -> usize {
    // ad(u) lowers the height grading, so ad(u)^{2n-1} = 0
    2 * lie.n()
}

/// `e^{−ad u} a` in `ℂ[n̄] ⊗ g`.
pub fn exp_neg_ad_u(lie: &Lie, a: &LieElement) -> PolyLie {
    PolyLie::from_element(lie, a).apply_series(lie, &exp_neg(series_len(lie)))
}

fn in_nbar(lie: &Lie, a: &LieElement) -> bool {
    a.support()
        .all(|(i, _)| matches!(lie.basis[i], Basis::F(_)))
}

/// `T(a, x) = ad(u)/(e^{ad u} − 1) · a` for `a ∈ n̄`.
pub fn t_poly(lie: &Lie, a: &LieElement) -> Result<PolyLie> {
    if !in_nbar(lie, a) {
        return Err(Error::NotInNilradical);
    }
    let k = bernoulli_series(Kernel::Bernoulli, series_len(lie));
    Ok(PolyLie::from_element(lie, a).apply_series(lie, &k))
}

/// Keeps only the `n̄` components.
fn nbar_part(lie: &Lie, p: &PolyLie) -> PolyLie {
    let mut out = PolyLie::zero(lie);
    for i in 0..lie.num_positive() {
        let idx = lie.index(Basis::F(i));
        out.components[idx] = p.components[idx].clone();
    }
    out
}

/// `[P]_α`, the coefficient polynomial of `f_α`.
pub fn f_component(lie: &Lie, p: &PolyLie, alpha: usize) -> Poly {
    p.components[lie.index(Basis::F(alpha))].clone()
}

/// `K(ad u)(e^{−ad u} a)_n̄` with `K(t) = t e^t/(e^t−1)`.
pub fn vector_field_part(lie: &Lie, a: &LieElement) -> PolyLie {
    let k = bernoulli_series(Kernel::BernoulliPlus, series_len(lie));
    nbar_part(lie, &exp_neg_ad_u(lie, a)).apply_series(lie, &k)
}

pub fn pi_g(lie: &Lie, a: &LieElement) -> WeylElement {
    let (nv, r) = (lie.num_positive(), lie.rank());
    let mut out = WeylElement::zero(nv, r);
    let vf = vector_field_part(lie, a);
    for alpha in 0..nv {
        let p = f_component(lie, &vf, alpha);
        if !p.is_zero() {
            let term = WeylElement::from_poly_x(&p, r).mul(&WeylElement::d(nv, r, alpha));
            out = out.sub(&term);
        }
    }
    let twisted = exp_neg_ad_u(lie, a);
    for i in 0..r {
        let p = &twisted.components[lie.index(Basis::H(i))];
        if !p.is_zero() {
            out = out.add(&WeylElement::from_poly_x(p, r).mul(&WeylElement::h(nv, r, i)));
        }
    }
    out
}

/// `π_g` on a word `a_1 a_2 ⋯ a_k ∈ U(g)`.
pub fn pi_g_word(lie: &Lie, word: &[LieElement]) -> WeylElement {
    let mut out = WeylElement::one(lie.num_positive(), lie.rank());
    for a in word {
        out = out.mul(&pi_g(lie, a));
    }
    out
}

/// Images of the whole Chevalley basis, in basis order.
pub fn pi_g_basis(lie: &Lie) -> Vec<WeylElement> {
    lie.basis
        .iter()
        .map(|b| pi_g(lie, &lie.basis_element(*b)))
        .collect()
}

/// The polynomials `p^γ_α` and `q^γ_α` attached to a simple root `γ` (index into positive roots).
pub fn pq_polynomials(lie: &Lie, gamma: usize) -> Result<(Vec<Poly>, Vec<Poly>)> {
    let root = lie
        .rs
        .positive_roots
        .get(gamma)
        .ok_or_else(|| Error::NotSimpleRoot(format!("root #{gamma}")))?;
    if lie.rs.simple_index(root).is_none() {
        return Err(Error::NotSimpleRoot(root.label()));
    }
    let km1 = bernoulli_series(Kernel::BernoulliMinusOne, series_len(lie));
    let p_field = PolyLie::from_element(lie, &lie.f(gamma)).apply_series(lie, &km1);
    let q_field = vector_field_part(lie, &lie.e(gamma));
    let nv = lie.num_positive();
    let p = (0..nv).map(|a| f_component(lie, &p_field, a)).collect();
    let q = (0..nv).map(|a| f_component(lie, &q_field, a)).collect();
    Ok((p, q))
}

/// Failed pairs `(a, b)` of `π_g([a,b]) = [π_g(a), π_g(b)]` over the Chevalley basis.
pub fn verify_pi_hom(lie: &Lie) -> Vec<(usize, usize)> {
    use rayon::prelude::*;
    let images = pi_g_basis(lie);
    let d = lie.dim();
    (0..d * d)
        .into_par_iter()
        .filter_map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let mut lhs = WeylElement::zero(lie.num_positive(), lie.rank());
            for &(l, c) in lie.bracket_basis(i, j) {
                lhs = lhs.add(&images[l].scale(&crate::rational::q(c)));
            }
            let rhs = images[i].commutator(&images[j]);
            (lhs != rhs).then_some((i, j))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn sl2_anchors() {
        let g = Lie::new(2).unwrap();
        let (x, d, h) = (
            WeylElement::x(1, 1, 0),
            WeylElement::d(1, 1, 0),
            WeylElement::h(1, 1, 0),
        );
        assert_eq!(pi_g(&g, &g.f(0)), d.scale(&q(-1)));
        assert_eq!(pi_g(&g, &g.h(0)), x.mul(&d).scale(&q(2)).add(&h));
        assert_eq!(pi_g(&g, &g.e(0)), x.mul(&x).mul(&d).add(&x.mul(&h)));
    }

    /// Direct expansion of `e^{−ad u}` and the kernel with `u = x f` in the 2×2 matrix picture.
    #[test]
    fn sl2_matches_matrix_expansion() {
        let g = Lie::new(2).unwrap();
        // e^{−ad(xf)} e = e + x h − x² f
        let twisted = exp_neg_ad_u(&g, &g.e(0));
        let x = Poly::var(1, 0);
        assert_eq!(twisted.components[g.index(Basis::E(0))], Poly::one(1));
        assert_eq!(twisted.components[g.index(Basis::H(0))], x);
        assert_eq!(
            twisted.components[g.index(Basis::F(0))],
            x.mul(&x).scale(&q(-1))
        );
    }

    #[test]
    fn homomorphism_small_ranks() {
        for n in 2..=3 {
            let g = Lie::new(n).unwrap();
            assert!(verify_pi_hom(&g).is_empty(), "sl{n}");
        }
    }

    #[test]
    fn t_poly_examples() {
        let g2 = Lie::new(2).unwrap();
        assert_eq!(
            t_poly(&g2, &g2.f(0)).unwrap(),
            PolyLie::from_element(&g2, &g2.f(0))
        );
        assert_eq!(t_poly(&g2, &g2.e(0)), Err(Error::NotInNilradical));
        let g3 = Lie::new(3).unwrap();
        assert_eq!(
            t_poly(&g3, &g3.f(2)).unwrap(),
            PolyLie::from_element(&g3, &g3.f(2))
        );
        let t = t_poly(&g3, &g3.f(0)).unwrap();
        // ad(u) f_{a1} = x_{a2}[f_{a2}, f_{a1}] = x_{a2} f_θ; kernel coefficient −1/2
        assert_eq!(f_component(&g3, &t, 0), Poly::one(3));
        assert_eq!(f_component(&g3, &t, 2), Poly::var(3, 1).scale(&frac(-1, 2)));
        let nil = g3.generic_u_nilpotency() as u32;
        for a in 0..3 {
            assert!(t_poly(&g3, &g3.f(a)).unwrap().total_degree() <= nil);
        }
    }

    #[test]
    fn pq_examples() {
        let g2 = Lie::new(2).unwrap();
        let (p, qq) = pq_polynomials(&g2, 0).unwrap();
        assert!(p[0].is_zero());
        assert_eq!(qq[0], Poly::var(1, 0).mul(&Poly::var(1, 0)).scale(&q(-1)));
        let g3 = Lie::new(3).unwrap();
        let (_, q3) = pq_polynomials(&g3, 0).unwrap();
        assert_eq!(q3[0].coeff(&[2, 0, 0]), q(-1));
        assert!(matches!(
            pq_polynomials(&g3, 2),
            Err(Error::NotSimpleRoot(_))
        ));
    }
}
