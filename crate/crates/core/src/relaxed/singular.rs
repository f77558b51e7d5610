//! Singular vectors, coinvariants and the top-component comparison.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::affine::{zhu_check, Realization, ZhuReport};
use crate::character::{Character, Window};
use crate::error::{Error, Result};
use crate::lie::{Basis, Lie};
use crate::linalg::{self, Matrix};
use crate::rational::{fmt_q, Q};
use crate::root_data::Weight;
use crate::weyl_poly::FockKind;

use super::pbw::{factor_lists, top_basis, ModeFactor, PBWVector, PbwMonomial, RelaxedVerma};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularVector {
    pub energy: u32,
    pub offset: Vec<i64>,
    pub vector: PBWVector,
}

impl SingularVector {
    pub fn to_json(&self, lie: &Lie, lambda: &Weight) -> Value {
        let ch = Character::new(lambda.clone());
        json!({
            "energy": self.energy,
            "weight": ch.weight_of(&lie.rs, &self.offset).to_json(),
            "terms": self.vector.terms.iter()
                .map(|(m, c)| json!({"monomial": m.render(lie), "coeff": fmt_q(c)}))
                .collect::<Vec<_>>(),
        })
    }
}

fn finite_weight_spaces(rv: &RelaxedVerma) -> Result<()> {
    match rv.kind {
        FockKind::Gt(a) if rv.lie.rs.positive_roots[a].height() > 1 => {
            Err(Error::InfiniteWeightSpace(format!(
                "top F_(n,{})",
                rv.lie.rs.positive_roots[a].label()
            )))
        }
        _ => Ok(()),
    }
}

/// Basis of the `(λ + offset, energy d)` cell.
pub fn cell_basis(
    rv: &RelaxedVerma,
    lists: &[Vec<ModeFactor>],
    offset: &[i64],
    d: u32,
) -> Vec<PbwMonomial> {
    let lie = &rv.lie;
    let mut out = Vec::new();
    for f in lists
        .iter()
        .filter(|f| f.iter().map(|x| x.0).sum::<u32>() == d)
    {
        let mut rest = offset.to_vec();
        for &(_, i) in f {
            for (x, c) in rest.iter_mut().zip(lie.basis_weight(lie.basis[i])) {
                *x -= c;
            }
        }
        for t in top_basis(lie, rv.kind, &rest, 0) {
            out.push(PbwMonomial {
                factors: f.clone(),
                top: t,
            });
        }
    }
    out
}

/// Matrix of a linear map on `basis`, rows indexed by the monomials of the images.
fn image_matrix(images: &[Vec<PBWVector>]) -> Matrix {
    let mut rows: BTreeMap<(usize, PbwMonomial), usize> = BTreeMap::new();
    for imgs in images {
        for (op, v) in imgs.iter().enumerate() {
            for m in v.terms.keys() {
                let next = rows.len();
                rows.entry((op, m.clone())).or_insert(next);
            }
        }
    }
    let mut mat = linalg::zeros(rows.len(), images.len());
    for (j, imgs) in images.iter().enumerate() {
        for (op, v) in imgs.iter().enumerate() {
            for (m, c) in &v.terms {
                mat[rows[&(op, m.clone())]][j] = c.clone();
            }
        }
    }
    mat
}

/// Vectors of energy `1..=window.dmax` with weight in the window killed by
/// `g ⊗ t` and, over a Verma top, by the simple root vectors `e_{γ,0}`.
pub fn find_singular_vectors(rv: &RelaxedVerma, window: &Window) -> Result<Vec<SingularVector>> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    finite_weight_spaces(rv)?;
    let lie = &rv.lie;
    let mut ops: Vec<(usize, i64)> = (0..lie.dim()).map(|i| (i, 1)).collect();
    if rv.kind == FockKind::Verma {
        for g in (0..lie.num_positive()).filter(|&g| lie.rs.positive_roots[g].height() == 1) {
            ops.push((lie.index(Basis::E(g)), 0));
        }
    }
    let lists = factor_lists(lie, window.dmax);
    let mut found = Vec::new();
    for d in 1..=window.dmax {
        for o in window.offsets(lie.rank()) {
            let basis = cell_basis(rv, &lists, &o, d);
            if basis.is_empty() {
                continue;
            }
            let images: Vec<Vec<PBWVector>> = basis
                .iter()
                .map(|b| {
                    let v = PBWVector::basis(b.clone());
                    ops.iter().map(|&(i, m)| rv.act(i, m, &v)).collect()
                })
                .collect();
            let mat = image_matrix(&images);
            for sol in linalg::null_space(&mat, basis.len()) {
                let mut v = PBWVector::zero();
                for (b, c) in basis.iter().zip(sol) {
                    v.add_term(b.clone(), c);
                }
                // leading coefficient one
                if let Some(lead) = v.terms.values().next().cloned() {
                    v = v.scale(&lead.recip());
                }
                found.push(SingularVector {
                    energy: d,
                    offset: o.clone(),
                    vector: v,
                });
            }
        }
    }
    Ok(found)
}

/// Character of `M / f_{α,0} M` on the window.
pub fn coinvariants_character(
    rv: &RelaxedVerma,
    alpha: usize,
    window: &Window,
) -> Result<Character> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    finite_weight_spaces(rv)?;
    let lie = &rv.lie;
    let f = lie.index(Basis::F(alpha));
    let a = &lie.rs.positive_roots[alpha].coeffs;
    let lists = factor_lists(lie, window.dmax);
    let mut ch = Character::new(rv.lambda.clone());
    for d in 0..=window.dmax {
        for o in window.offsets(lie.rank()) {
            let target = cell_basis(rv, &lists, &o, d);
            if target.is_empty() {
                continue;
            }
            let above: Vec<i64> = o.iter().zip(a).map(|(x, c)| x + c).collect();
            let source = cell_basis(rv, &lists, &above, d);
            let index: BTreeMap<&PbwMonomial, usize> =
                target.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut mat = linalg::zeros(target.len(), source.len());
            for (j, s) in source.iter().enumerate() {
                for (m, c) in rv.act(f, 0, &PBWVector::basis(s.clone())).terms {
                    let i = *index
                        .get(&m)
                        .ok_or_else(|| Error::RealizationBug("f_0 left its weight space".into()))?;
                    mat[i][j] = c;
                }
            }
            let rank = if source.is_empty() {
                0
            } else {
                linalg::rank(&mat)
            };
            ch.add(o, d, (target.len() - rank) as u64, false);
        }
    }
    Ok(ch)
}

/// Zero modes of the free-field realization on the energy-0 part against `π_g` on the top.
pub fn top_component_check(
    n: usize,
    lambda: &Weight,
    kind: FockKind,
    k: &Q,
    top_max: u32,
) -> Result<ZhuReport> {
    let lie = Lie::new(n)?;
    let real = Realization::new(&lie, kind, lambda.clone(), k.clone())?;
    Ok(zhu_check(&real, top_max))
}

/// Whether `f_{α,0}` is injective on top monomials of degree `≤ deg`.
pub fn top_f_injective(rv: &RelaxedVerma, alpha: usize, deg: u32) -> bool {
    let f = rv.lie.index(Basis::F(alpha));
    crate::weyl_poly::fock::monomials_up_to(rv.lie.num_positive(), deg)
        .into_iter()
        .all(|t| {
            let v = PBWVector::basis(PbwMonomial {
                factors: Vec::new(),
                top: t,
            });
            !rv.act(f, 0, &v).is_zero()
        })
}

/// Smallest `N ≤ limit` with `f_{α,0}^N v = 0`, if any.
pub fn f_nilpotency(rv: &RelaxedVerma, alpha: usize, v: &PBWVector, limit: u32) -> Option<u32> {
    let f = rv.lie.index(Basis::F(alpha));
    let mut w = v.clone();
    for n in 0..=limit {
        if w.is_zero() {
            return Some(n);
        }
        w = rv.act(f, 0, &w);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn vacuum_sl2_at_admissible_level() {
        let g = Lie::new(2).unwrap();
        let rv = RelaxedVerma::new(&g, FockKind::Verma, Weight::zero(1), frac(-1, 2)).unwrap();
        let found = find_singular_vectors(&rv, &Window::new(4, 4)).unwrap();
        let cells: Vec<(u32, Vec<i64>)> =
            found.iter().map(|s| (s.energy, s.offset.clone())).collect();
        // weights λ + 2α and λ − 3α at energy 4
        assert_eq!(cells, vec![(4, vec![-3]), (4, vec![2])]);
        for s in &found {
            for i in 0..3 {
                assert!(rv.act(i, 1, &s.vector).is_zero());
            }
        }
    }

    #[test]
    fn generic_sl2_has_none() {
        let g = Lie::new(2).unwrap();
        let rv = RelaxedVerma::new(
            &g,
            FockKind::Verma,
            Weight::new(vec![frac(1, 3)]),
            frac(1, 5),
        )
        .unwrap();
        assert!(find_singular_vectors(&rv, &Window::new(4, 3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn coinvariants_of_verma_top() {
        let g = Lie::new(2).unwrap();
        let rv =
            RelaxedVerma::new(&g, FockKind::Verma, Weight::new(vec![frac(1, 2)]), q(1)).unwrap();
        let ch = coinvariants_character(&rv, 0, &Window::new(4, 0)).unwrap();
        assert_eq!(ch.cells.len(), 1);
        assert_eq!(ch.get(&[0], 0).count, 1);
        assert_eq!(
            coinvariants_character(&rv, 0, &Window::new(-1, 0)),
            Err(Error::EmptyWindow)
        );
    }

    #[test]
    fn f_on_tops() {
        let g = Lie::new(2).unwrap();
        let verma =
            RelaxedVerma::new(&g, FockKind::Verma, Weight::new(vec![frac(1, 2)]), q(1)).unwrap();
        assert!(top_f_injective(&verma, 0, 6));
        let gt =
            RelaxedVerma::new(&g, FockKind::Gt(0), Weight::new(vec![frac(1, 2)]), q(1)).unwrap();
        for j in 0..6u32 {
            let v = PBWVector::basis(PbwMonomial {
                factors: Vec::new(),
                top: vec![j],
            });
            assert_eq!(f_nilpotency(&gt, 0, &v, 10), Some(j + 1));
        }
    }

    #[test]
    fn infinite_cells_are_rejected() {
        let g = Lie::new(3).unwrap();
        let rv = RelaxedVerma::new(&g, FockKind::Gt(2), Weight::zero(2), q(1)).unwrap();
        assert!(matches!(
            find_singular_vectors(&rv, &Window::new(1, 1)),
            Err(Error::InfiniteWeightSpace(_))
        ));
    }
}
