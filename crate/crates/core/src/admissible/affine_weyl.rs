//! The extended affine Weyl group `W ⋉ P∨` acting on affine weights.
//!
//! Coweights of `sl_n` are identified with weights through the normalized
//! form, so translations are stored as [`Weight`]s.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::rational::{fmt_q, q, Q};
use crate::root_data::{RootSystem, Weight, WeylGroupElement};

/// `λ̄ + level·Λ0 + delta·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub finite: Weight,
    pub level: Q,
    pub delta: Q,
}

impl AffineWeight {
    pub fn new(finite: Weight, level: Q, delta: Q) -> Self {
        AffineWeight {
            finite,
            level,
            delta,
        }
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            finite: self.finite.add(&other.finite),
            level: &self.level + &other.level,
            delta: &self.delta + &other.delta,
        }
    }

    pub fn sub(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            finite: self.finite.sub(&other.finite),
            level: &self.level - &other.level,
            delta: &self.delta - &other.delta,
        }
    }

    /// `(λ̄+kΛ0+aδ, μ̄+lΛ0+bδ) = (λ̄,μ̄) + kb + la`.
    pub fn pair(&self, rs: &RootSystem, other: &AffineWeight) -> Q {
        rs.inner(&self.finite, &other.finite)
            + &self.level * &other.delta
            + &other.level * &self.delta
    }

    /// `ρ̂ = ρ + h∨Λ0`.
    pub fn rho_hat(rs: &RootSystem) -> AffineWeight {
        AffineWeight::new(rs.rho(), q(rs.h_dual as i64), Q::zero())
    }
}

/// `t_μ(γ) = γ + (γ,δ)μ − ((μ,μ)/2·(γ,δ) + (γ,μ))δ`.
pub fn t_translation(rs: &RootSystem, mu: &Weight, gamma: &AffineWeight) -> AffineWeight {
    let k = &gamma.level;
    let shift = rs.inner(mu, mu) / q(2) * k + rs.inner(&gamma.finite, mu);
    AffineWeight {
        finite: gamma.finite.add(&mu.scale(k)),
        level: k.clone(),
        delta: &gamma.delta - shift,
    }
}

/// `y = w̄ t_{−η}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    pub w: WeylGroupElement,
    pub eta: Weight,
}

impl AffineWeylElement {
    pub fn new(w: WeylGroupElement, eta: Weight) -> Self {
        AffineWeylElement { w, eta }
    }

    pub fn identity(n: usize) -> Self {
        AffineWeylElement {
            w: WeylGroupElement::identity(n),
            eta: Weight::zero(n - 1),
        }
    }

    /// `t_μ` alone.
    pub fn translation(n: usize, mu: &Weight) -> Self {
        AffineWeylElement {
            w: WeylGroupElement::identity(n),
            eta: mu.scale(&q(-1)),
        }
    }

    pub fn finite(w: WeylGroupElement) -> Self {
        let r = w.perm.len() - 1;
        AffineWeylElement {
            w,
            eta: Weight::zero(r),
        }
    }

    /// `w1 t_{−η1} w2 t_{−η2} = w1 w2 t_{−(w2⁻¹η1 + η2)}`.
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        AffineWeylElement {
            w: self.w.compose(&other.w),
            eta: other.w.inverse().act(&self.eta).add(&other.eta),
        }
    }

    pub fn act(&self, rs: &RootSystem, gamma: &AffineWeight) -> AffineWeight {
        let t = t_translation(rs, &self.eta.scale(&q(-1)), gamma);
        AffineWeight {
            finite: self.w.act(&t.finite),
            ..t
        }
    }

    /// `y·λ = y(λ + ρ̂) − ρ̂`.
    pub fn dot(&self, rs: &RootSystem, lambda: &AffineWeight) -> AffineWeight {
        let rho = AffineWeight::rho_hat(rs);
        self.act(rs, &lambda.add(&rho)).sub(&rho)
    }

    pub fn to_json(&self) -> Value {
        json!({"w": self.w.perm, "eta": self.eta.coords.iter().map(fmt_q).collect::<Vec<_>>()})
    }
}

/// Whether `y(Δ̂(kΛ0)_+) ⊂ Δ̂^re_+` for `y = w̄ t_{−η}` and denominator `q`.
pub fn y_is_admissible(rs: &RootSystem, y: &AffineWeylElement, q_: i64) -> bool {
    rs.positive_roots.iter().all(|alpha| {
        let e = rs.pairing(&y.eta, alpha).expect("same rank");
        if y.w.act_root(alpha).is_positive() {
            e >= q(0) && e <= q(q_ - 1)
        } else {
            e >= q(1) && e <= q(q_)
        }
    })
}

/// `w_j`: the power `c^j` of the cyclic shift `ε_i ↦ ε_{i+1}`, which
/// permutes `{α_1, …, α_{n−1}, −θ}` and sends `−θ` to `α_j`.
pub fn w_j(n: usize, j: usize) -> WeylGroupElement {
    WeylGroupElement::from_perm((0..n).map(|i| (i + j) % n).collect()).expect("cyclic shift")
}
