//! Normal-ordered products of free fields and their modes.

use num_traits::{One, Zero};

use super::modes::{FieldKind, ModeContext, Mono, WakimotoVector};
use crate::lie::Lie;
use crate::poly::push_term;
use crate::rational::{mul, q, Q};

/// `∂_z^deriv φ(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub field: FieldKind,
    pub deriv: u32,
}

impl Factor {
    pub fn plain(field: FieldKind) -> Self {
        Factor { field, deriv: 0 }
    }

    /// Coefficient of `φ_n` in the mode expansion of `∂^d φ`: `Π_t (−n − w − t)`.
    pub fn mode_coefficient(&self, n: i64) -> Q {
        let w = self.field.conformal_weight();
        (0..self.deriv as i64).map(|t| q(-n - w - t)).product()
    }
}

/// `coeff · :Π factors:`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTerm {
    pub coeff: Q,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldExpr {
    /// A sum of normal-ordered monomials in the free fields.
    Normal(Vec<FieldTerm>),
    /// `scale · [π(b_left)_0, π(b_right)(z)]`, for basis indices of the Lie algebra.
    ZeroModeCommutator { scale: Q, left: usize, right: usize },
}

impl FieldExpr {
    pub fn zero() -> Self {
        FieldExpr::Normal(Vec::new())
    }

    pub fn terms(&self) -> &[FieldTerm] {
        match self {
            FieldExpr::Normal(t) => t,
            FieldExpr::ZeroModeCommutator { .. } => &[],
        }
    }

    pub fn render(&self, lie: &Lie) -> String {
        match self {
            FieldExpr::Normal(terms) => {
                if terms.is_empty() {
                    return "0".into();
                }
                let mut out = String::new();
                for (i, t) in terms.iter().enumerate() {
                    let body = render_factors(lie, &t.factors);
                    push_term(&mut out, &t.coeff, &body, i == 0);
                }
                out
            }
            FieldExpr::ZeroModeCommutator { scale, left, right } => {
                let mut out = String::new();
                let body = format!(
                    "[{}_0, {}(z)]",
                    lie.symbol(lie.basis[*left]),
                    lie.symbol(lie.basis[*right])
                );
                push_term(&mut out, scale, &body, true);
                out
            }
        }
    }
}

fn render_factors(lie: &Lie, factors: &[Factor]) -> String {
    let name = |f: &Factor| {
        let base = match f.field {
            FieldKind::A(a) => format!("a_{{{}}}(z)", lie.rs.positive_roots[a].label()),
            FieldKind::AStar(a) => format!("a*_{{{}}}(z)", lie.rs.positive_roots[a].label()),
            FieldKind::B(i) => format!("b_{}(z)", i + 1),
        };
        match f.deriv {
            0 => base,
            1 => format!("d_z {base}"),
            d => format!("d_z^{d} {base}"),
        }
    };
    let names: Vec<String> = factors.iter().map(name).collect();
    if factors.len() == 1 {
        names[0].clone()
    } else {
        format!(":{}:", names.join(" "))
    }
}

/// The `m`-th mode of a normal-ordered term applied to a monomial.
///
/// Annihilation modes act first and commute with each other, so each one is
/// chosen only among modes that hit a variable still present. Whatever is left
/// of `m` is then spread over the creation modes, which also commute.
pub fn term_mode_apply(ctx: &ModeContext, term: &FieldTerm, m: i64, mono: &Mono) -> WakimotoVector {
    let mut out = WakimotoVector::zero();
    if term.factors.is_empty() {
        if m == 0 {
            out.add_term(mono.clone(), term.coeff.clone());
        }
        return out;
    }
    let d = mono.energy() as i64;
    if m > d {
        return out;
    }
    let start = vec![(mono.clone(), term.coeff.clone())];
    annihilate(
        ctx,
        &term.factors,
        0,
        m,
        d,
        start,
        &mut Vec::new(),
        &mut out,
    );
    out
}

type Terms = Vec<(Mono, Q)>;

fn act(ctx: &ModeContext, f: &Factor, n: i64, current: &Terms) -> Terms {
    let scale = f.mode_coefficient(n);
    if scale.is_zero() {
        return Vec::new();
    }
    let mut next = Vec::new();
    for (mm, c) in current {
        for (img, c2) in ctx.apply_mode(f.field, n, mm) {
            next.push((img, mul(&mul(&c2, c), &scale)));
        }
    }
    next
}

/// Largest creation mode of a field.
fn creation_top(f: &Factor) -> i64 {
    match f.field {
        FieldKind::A(_) => -1,
        _ => 0,
    }
}

#[allow(clippy::too_many_arguments)]
fn annihilate(
    ctx: &ModeContext,
    factors: &[Factor],
    i: usize,
    left: i64,
    budget: i64,
    current: Terms,
    creators: &mut Vec<usize>,
    out: &mut WakimotoVector,
) {
    if i == factors.len() {
        let fs: Vec<Factor> = creators.iter().map(|&c| factors[c]).collect();
        create(ctx, &fs, left, current, out);
        return;
    }
    creators.push(i);
    annihilate(
        ctx,
        factors,
        i + 1,
        left,
        budget,
        current.clone(),
        creators,
        out,
    );
    creators.pop();
    let f = &factors[i];
    let lowest = if matches!(f.field, FieldKind::A(_)) {
        0
    } else {
        1
    };
    for n in lowest..=budget {
        let next = act(ctx, f, n, &current);
        if !next.is_empty() {
            annihilate(
                ctx,
                factors,
                i + 1,
                left - n,
                budget - n,
                next,
                creators,
                out,
            );
        }
    }
}

/// Splits `left` over the creation factors, each at most its [`creation_top`].
fn create(
    ctx: &ModeContext,
    factors: &[Factor],
    left: i64,
    current: Terms,
    out: &mut WakimotoVector,
) {
    let Some((f, rest)) = factors.split_first() else {
        if left == 0 {
            for (mm, c) in current {
                out.add_term(mm, c);
            }
        }
        return;
    };
    let rest_top: i64 = rest.iter().map(creation_top).sum();
    // n ≤ top(f) and left − n ≤ rest_top
    for n in (left - rest_top)..=creation_top(f) {
        let next = act(ctx, f, n, &current);
        if !next.is_empty() {
            create(ctx, rest, left - n, next, out);
        }
    }
}

/// `:Π factors:` with a single `a`-field last, from an exponent vector of `a*`-fields.
pub fn astar_monomial_times(exps: &[u32], last: Option<FieldKind>, coeff: Q) -> FieldTerm {
    let mut factors = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            factors.push(Factor::plain(FieldKind::AStar(i)));
        }
    }
    if let Some(f) = last {
        factors.push(Factor::plain(f));
    }
    FieldTerm { coeff, factors }
}

/// `1 · vac`, for convenience in tests and examples.
pub fn identity_term() -> FieldTerm {
    FieldTerm {
        coeff: Q::one(),
        factors: Vec::new(),
    }
}
