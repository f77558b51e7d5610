//! Exhaustive slice checks of the affine commutation relations and of the
//! zero-mode correspondence with `π_g`.

use rayon::prelude::*;
use serde::Serialize;

use super::modes::{spanning_monomials, Mono, WakimotoVector};
use super::realization::{ModeCache, Realization};
use crate::rational::{fmt_q, q, Q};
use crate::weyl_poly::fock::apply_term;
use crate::weyl_poly::{pi_g_basis, FockKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommFailure {
    pub pair: (String, String),
    pub m: i64,
    pub n: i64,
    pub vector: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CommReport {
    pub checks: usize,
    pub failures: Vec<CommFailure>,
}

impl CommReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Slice parameters for [`verify_affine_comm`].
#[derive(Clone, Copy, Debug)]
pub struct CommSlice {
    /// Largest energy of the test vectors.
    pub dmax: u32,
    /// Largest top-component degree of the test vectors.
    pub top_max: u32,
    /// Modes range over `−mode_max..=mode_max`.
    pub mode_max: i64,
}

impl Default for CommSlice {
    fn default() -> Self {
        CommSlice {
            dmax: 3,
            top_max: 1,
            mode_max: 2,
        }
    }
}

pub fn render_mono(m: &Mono) -> String {
    if m.0.is_empty() {
        return "vac".into();
    }
    m.0.iter()
        .map(|(v, e)| {
            if *e == 1 {
                format!("{v:?}")
            } else {
                format!("{v:?}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Checks `[π(a)_m, π(b)_n] v = π([a,b])_{m+n} v + m k κ0(a,b) δ_{m+n,0} v`
/// for all basis pairs, modes and spanning monomials in the slice.
pub fn verify_affine_comm(real: &Realization, slice: CommSlice) -> CommReport {
    let lie = &real.lie;
    let d = lie.dim();
    let vectors = spanning_monomials(lie.num_positive(), lie.rank(), slice.dmax, slice.top_max);
    let results: Vec<(usize, Vec<CommFailure>)> = (0..d * d)
        .into_par_iter()
        .map_init(ModeCache::new, |cache, ij| {
            let (a, b) = (ij / d, ij % d);
            let mut failures = Vec::new();
            let mut checks = 0;
            let bracket = lie.bracket_basis(a, b);
            let kappa = q(lie.kappa0_basis(a, b));
            for mono in &vectors {
                let v = WakimotoVector::basis(mono.clone());
                for m in -slice.mode_max..=slice.mode_max {
                    let av = real.apply_basis(a, m, &v, cache);
                    for n in -slice.mode_max..=slice.mode_max {
                        let bv = real.apply_basis(b, n, &v, cache);
                        let lhs = real
                            .apply_basis(a, m, &bv, cache)
                            .sub(&real.apply_basis(b, n, &av, cache));
                        let mut rhs = WakimotoVector::zero();
                        for &(l, c) in bracket {
                            rhs.add_scaled(&real.apply_basis(l, m + n, &v, cache), &q(c));
                        }
                        if m + n == 0 {
                            rhs.add_scaled(&v, &(q(m) * real.k() * &kappa));
                        }
                        checks += 1;
                        if lhs != rhs {
                            failures.push(CommFailure {
                                pair: (lie.symbol(lie.basis[a]), lie.symbol(lie.basis[b])),
                                m,
                                n,
                                vector: render_mono(mono),
                            });
                        }
                    }
                }
            }
            (checks, failures)
        })
        .collect();
    let mut report = CommReport::default();
    for (c, f) in results {
        report.checks += c;
        report.failures.extend(f);
    }
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ZhuReport {
    pub slice_dim: usize,
    pub checks: usize,
    /// `(basis symbol, top monomial)` pairs where the two actions differ.
    pub failures: Vec<(String, String)>,
}

/// Compares zero modes of `π_{κ,g}` on the energy-0 component with `π_g` acting on the Fock module.
pub fn zhu_check(real: &Realization, top_max: u32) -> ZhuReport {
    let lie = &real.lie;
    let nv = lie.num_positive();
    let finite = pi_g_basis(lie);
    let tops = spanning_monomials(nv, lie.rank(), 0, top_max);
    let mut report = ZhuReport {
        slice_dim: tops.len(),
        ..Default::default()
    };
    let mut cache = ModeCache::new();
    for (idx, w) in finite.iter().enumerate() {
        for mono in &tops {
            let affine = real.apply_basis(idx, 0, &WakimotoVector::basis(mono.clone()), &mut cache);
            let exps = mono.top_exponents(nv);
            let mut expected = WakimotoVector::zero();
            for (a, b, p) in w.terms() {
                if let Some((img, c)) = apply_term(real.ctx.top, &real.ctx.shift, a, b, p, &exps) {
                    expected.add_term(Mono::from_top(&img), c);
                }
            }
            report.checks += 1;
            if affine != expected {
                report
                    .failures
                    .push((lie.symbol(lie.basis[idx]), render_mono(mono)));
            }
        }
    }
    report
}

/// JSON-friendly dump of a vector.
pub fn vector_json(v: &WakimotoVector) -> serde_json::Value {
    serde_json::Value::Array(
        v.terms
            .iter()
            .map(|(m, c)| serde_json::json!({"monomial": render_mono(m), "coeff": fmt_q(c)}))
            .collect(),
    )
}

/// The largest `N` such that some mode `m ≥ N` still acts nontrivially, searching up to `limit`.
pub fn smoothness_bound(real: &Realization, idx: usize, v: &WakimotoVector, limit: i64) -> i64 {
    let mut cache = ModeCache::new();
    let mut last = i64::MIN;
    for m in -limit..=limit {
        if !real.apply_basis(idx, m, v, &mut cache).is_zero() {
            last = m;
        }
    }
    last
}

pub fn top_kinds(lie: &crate::lie::Lie) -> Vec<FockKind> {
    let mut out = vec![FockKind::Verma];
    out.extend((0..lie.num_positive()).map(FockKind::Gt));
    out
}

/// `m·k·κ0` helper for reports.
pub fn central_term(m: i64, k: &Q, kappa: i64) -> Q {
    q(m) * k * q(kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Lie;
    use crate::rational::frac;
    use crate::root_data::Weight;

    #[test]
    fn sl2_small_slice_passes() {
        let g = Lie::new(2).unwrap();
        for top in [FockKind::Verma, FockKind::Gt(0)] {
            let real =
                Realization::new(&g, top, Weight::new(vec![frac(1, 3)]), frac(1, 2)).unwrap();
            let rep = verify_affine_comm(
                &real,
                CommSlice {
                    dmax: 1,
                    top_max: 1,
                    mode_max: 1,
                },
            );
            assert!(
                rep.passed(),
                "{:?}",
                &rep.failures[..rep.failures.len().min(5)]
            );
        }
    }

    #[test]
    fn zero_modes_match_finite_action() {
        for n in 2..=3 {
            let g = Lie::new(n).unwrap();
            let lam = Weight::new((0..n - 1).map(|i| frac(i as i64 + 1, 2)).collect());
            for top in [FockKind::Verma, FockKind::Gt(0)] {
                let real = Realization::new(&g, top, lam.clone(), frac(-1, 2)).unwrap();
                let rep = zhu_check(&real, 2);
                assert!(rep.failures.is_empty(), "{:?}", rep.failures);
            }
        }
    }

    #[test]
    fn smoothness() {
        let g = Lie::new(2).unwrap();
        let real = Realization::new(&g, FockKind::Verma, Weight::zero(1), q(1)).unwrap();
        for mono in spanning_monomials(1, 1, 2, 1) {
            let d = mono.energy() as i64;
            let v = WakimotoVector::basis(mono);
            for idx in 0..3 {
                assert!(smoothness_bound(&real, idx, &v, 6) <= d);
            }
        }
    }
}
