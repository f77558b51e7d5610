//! Admissible levels and the integral admissible weights.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, Q};
use crate::root_data::Weight;

/// A level `k` with `k + n = p/q` in lowest terms and `p ≥ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleLevel {
    pub n: usize,
    pub p: i64,
    pub q: i64,
    pub k: Q,
}

impl AdmissibleLevel {
    pub fn from_pq(n: usize, p: i64, q_: i64) -> Result<Self> {
        if q_ <= 0 {
            return Err(Error::NotAdmissible(format!(
                "nonpositive: denominator {q_}"
            )));
        }
        if p.gcd(&q_) != 1 {
            return Err(Error::NotAdmissible(format!(
                "{p}/{q_} is not in lowest terms"
            )));
        }
        admissible_check(&(Q::new(p.into(), q_.into()) - q(n as i64)), n)
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// `k + n = p/q`.
    pub fn shifted(&self) -> Q {
        Q::new(self.p.into(), self.q.into())
    }

    pub fn to_json(&self) -> Value {
        json!({"n": self.n, "p": self.p, "q": self.q, "k": fmt_q(&self.k)})
    }
}

pub fn admissible_check(k: &Q, n: usize) -> Result<AdmissibleLevel> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let shifted = k + q(n as i64);
    if !shifted.is_positive() {
        return Err(Error::NotAdmissible(format!(
            "nonpositive: k + {n} = {}",
            fmt_q(&shifted)
        )));
    }
    let p = shifted
        .numer()
        .to_i64()
        .ok_or_else(|| Error::NotAdmissible("numerator too large".into()))?;
    let qq = shifted
        .denom()
        .to_i64()
        .ok_or_else(|| Error::NotAdmissible("denominator too large".into()))?;
    if p < n as i64 {
        return Err(Error::NotAdmissible(format!("p_too_small: p = {p} < {n}")));
    }
    Ok(AdmissibleLevel {
        n,
        p,
        q: qq,
        k: k.clone(),
    })
}

/// Dominant integral `λ` with `⟨λ, θ∨⟩ ≤ p − n`, in lexicographic order of coordinates.
pub fn pr_k_integral(lvl: &AdmissibleLevel) -> Vec<Weight> {
    dominant_integral(lvl.rank(), lvl.p - lvl.n as i64)
}

/// Dominant integral weights with `⟨λ, θ∨⟩ ≤ bound`.
pub fn dominant_integral(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    fn rec(i: usize, rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if i == rank {
            out.push(Weight::from_ints(cur));
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(i + 1, rank, left - c, cur, out);
            cur.pop();
        }
    }
    rec(0, rank, bound, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn checks() {
        let l = admissible_check(&frac(-1, 2), 2).unwrap();
        assert_eq!((l.p, l.q), (3, 2));
        let l = admissible_check(&frac(-3, 2), 3).unwrap();
        assert_eq!((l.p, l.q), (3, 2));
        assert!(
            matches!(admissible_check(&q(-2), 2), Err(Error::NotAdmissible(r)) if r.starts_with("nonpositive"))
        );
        assert!(
            matches!(admissible_check(&frac(-3, 2), 2), Err(Error::NotAdmissible(r)) if r.starts_with("p_too_small"))
        );
        assert!(AdmissibleLevel::from_pq(2, 4, 2).is_err());
    }

    #[test]
    fn integral_weights() {
        let count = |n, p, q_| pr_k_integral(&AdmissibleLevel::from_pq(n, p, q_).unwrap()).len();
        assert_eq!(count(2, 3, 2), 2);
        assert_eq!(count(2, 2, 1), 1);
        let l = AdmissibleLevel::from_pq(3, 4, 1).unwrap();
        assert_eq!(
            pr_k_integral(&l),
            vec![
                Weight::from_ints(&[0, 0]),
                Weight::from_ints(&[0, 1]),
                Weight::from_ints(&[1, 0])
            ]
        );
    }
}
