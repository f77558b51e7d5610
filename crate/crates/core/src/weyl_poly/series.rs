//! Taylor coefficients of the kernels `t/(e^t−1)` and relatives.

use num_traits::{One, Zero};

use crate::rational::{factorial, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kernel {
    /// `t/(e^t−1)`
    Bernoulli,
    /// `t e^t/(e^t−1) = t/(1−e^{−t})`
    BernoulliPlus,
    /// `t/(e^t−1) − 1`
    BernoulliMinusOne,
    /// `(e^t−1)/t`
    Expm1OverT,
}

/// Coefficients of `t^0, …, t^order`.
pub fn bernoulli_series(kernel: Kernel, order: usize) -> Vec<Q> {
    let expm1_over_t: Vec<Q> = (0..=order)
        .map(|k| Q::one() / factorial(k as u32 + 1))
        .collect();
    match kernel {
        Kernel::Expm1OverT => expm1_over_t,
        Kernel::Bernoulli => invert(&expm1_over_t),
        Kernel::BernoulliPlus => invert(&expm1_over_t)
            .into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c })
            .collect(),
        Kernel::BernoulliMinusOne => {
            let mut c = invert(&expm1_over_t);
            c[0] -= Q::one();
            c
        }
    }
}

/// Inverse of a power series with nonzero constant term.
fn invert(a: &[Q]) -> Vec<Q> {
    let mut b = vec![Q::zero(); a.len()];
    b[0] = Q::one() / &a[0];
    for k in 1..a.len() {
        let s: Q = (1..=k).map(|j| &a[j] * &b[k - j]).sum();
        b[k] = -s / &a[0];
    }
    b
}

/// `(−1)^k / k!`, the coefficients of `e^{−t}`.
pub fn exp_neg(order: usize) -> Vec<Q> {
    (0..=order)
        .map(|k| {
            let c = Q::one() / factorial(k as u32);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}
