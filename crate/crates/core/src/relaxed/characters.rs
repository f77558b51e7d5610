//! Bigraded characters of relaxed Verma and relaxed Wakimoto modules.
//!
//! Both are a top character times `Π_{m≥1} Π_a (1 − q^m e^{wt a})^{−1}`,
//! but every factor is obtained independently: the Verma side counts PBW
//! factor lists over Kostant partitions or twisted tops, the Wakimoto side
//! counts free-field monomials over the `h`-spectrum of the Fock top.

use crate::affine::modes::{spanning_monomials, weight_offset as wakimoto_offset};
use crate::character::{Character, Window};
use crate::error::{Error, Result};
use crate::lie::Lie;
use crate::root_data::Weight;
use crate::weyl_poly::twist::partition_count;
use crate::weyl_poly::{fock_character, twist_character, FockKind};

use super::pbw::factor_lists;

/// Each mode factor moves every root coordinate by at most one.
fn padded(window: &Window) -> Window {
    Window::new(window.radius + window.dmax as i64, 0)
}

/// `ch M(λ)` from Kostant's partition function.
pub fn verma_top_character(lie: &Lie, lambda: &Weight, window: &Window) -> Character {
    let roots: Vec<Vec<i64>> = lie
        .rs
        .positive_roots
        .iter()
        .map(|r| r.coeffs.clone())
        .collect();
    let mut ch = Character::new(lambda.clone());
    for o in window.offsets(lie.rank()) {
        let target: Vec<i64> = o.iter().map(|c| -c).collect();
        ch.add(o, 0, partition_count(&roots, &target), false);
    }
    ch
}

fn product(top: &Character, modes: &[(Vec<i64>, u32)], window: &Window) -> Character {
    let mut ch = Character::new(top.lambda.clone());
    for ((o, _), mult) in &top.cells {
        for (w, d) in modes {
            let cell: Vec<i64> = o.iter().zip(w).map(|(a, b)| a + b).collect();
            if *d <= window.dmax && window.contains(&cell) {
                ch.add(cell, *d, mult.count, mult.lower_bound);
            }
        }
    }
    ch
}

/// Character of the relaxed Verma module over a Verma or Gelfand–Tsetlin top.
///
/// For a non-simple `α` the top is truncated to `k ≤ k_cap` and cells are
/// lower bounds.
pub fn character_relaxed_verma(
    lie: &Lie,
    kind: FockKind,
    lambda: &Weight,
    window: &Window,
    k_cap: u32,
) -> Result<Character> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let big = padded(window);
    let top = match kind {
        FockKind::Verma => verma_top_character(lie, lambda, &big),
        FockKind::Gt(a) => twist_character(lie, lambda, a, &big, k_cap)?,
    };
    let modes: Vec<(Vec<i64>, u32)> = factor_lists(lie, window.dmax)
        .into_iter()
        .map(|f| {
            let mut w = vec![0i64; lie.rank()];
            for &(_, i) in &f {
                for (x, c) in w.iter_mut().zip(lie.basis_weight(lie.basis[i])) {
                    *x += c;
                }
            }
            (w, f.iter().map(|x| x.0).sum())
        })
        .collect();
    Ok(product(&top, &modes, window))
}

/// Character of the relaxed Wakimoto module `W_n̄ ⊗ π ⊗ E`.
pub fn character_relaxed_wakimoto(
    lie: &Lie,
    kind: FockKind,
    lambda: &Weight,
    window: &Window,
    k_cap: u32,
) -> Result<Character> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let top = fock_character(lie, kind, lambda, &padded(window), k_cap)?;
    let modes: Vec<(Vec<i64>, u32)> =
        spanning_monomials(lie.num_positive(), lie.rank(), window.dmax, 0)
            .into_iter()
            .map(|m| (wakimoto_offset(lie, FockKind::Verma, &m), m.energy()))
            .collect();
    Ok(product(&top, &modes, window))
}

/// `χ(𝕄(M(λ))) · (1 − e^{−α}) · Σ_{k≥1} e^{kα}`, the expected character over the twisted top.
///
/// For a simple root the sum is exact on the window; otherwise it stops at
/// `k_cap`, the same truncation as [`twist_character`].
pub fn twisted_prediction(
    lie: &Lie,
    lambda: &Weight,
    alpha: usize,
    window: &Window,
    k_cap: u32,
) -> Result<Character> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let root = &lie.rs.positive_roots[alpha];
    let simple = root.height() == 1;
    // a cell at offset o can only receive k ≤ rank·(R + D) for simple α
    let kmax = if simple {
        lie.rank() as i64 * (window.radius + window.dmax as i64) + 1
    } else {
        k_cap as i64
    };
    let wide = Window::new(window.radius + kmax + 1, window.dmax);
    let verma = character_relaxed_verma(lie, FockKind::Verma, lambda, &wide, 0)?;
    let mut ch = Character::new(lambda.clone());
    for o in window.offsets(lie.rank()) {
        for d in 0..=window.dmax {
            let mut total: i64 = 0;
            for k in 1..=kmax {
                let at: Vec<i64> = o.iter().zip(&root.coeffs).map(|(x, c)| x - k * c).collect();
                let above: Vec<i64> = at.iter().zip(&root.coeffs).map(|(x, c)| x + c).collect();
                total += verma.get(&at, d).count as i64 - verma.get(&above, d).count as i64;
            }
            // the partial sums telescope to nonnegative counts
            let count = u64::try_from(total)
                .map_err(|_| Error::RealizationBug("negative multiplicity".into()))?;
            ch.add(o.clone(), d, count, !simple);
        }
    }
    Ok(ch)
}
