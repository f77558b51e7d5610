//! Exact rational scalars and their textual form.
//!
//! Every quantity in the crate is a `BigRational`; the text form is the
//! usual `p/q` (or `p` when the denominator is one), which is also how
//! rationals are serialized to JSON.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"3"`, `"-3/2"`, `" 4 / 6 "`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((a, b)) = t.split_once('/') {
        let n: BigInt = a.trim().parse().map_err(|_| bad())?;
        let d: BigInt = b.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Q::from_integer(n))
    }
}

fn small(x: &Q) -> Option<(i128, i128)> {
    Some((x.numer().to_i64()? as i128, x.denom().to_i64()? as i128))
}

fn from_reduced(n: i128, d: i128) -> Q {
    Q::new_raw(BigInt::from(n), BigInt::from(d))
}

/// `a·b`, with a machine-integer path for small operands.
pub fn mul(a: &Q, b: &Q) -> Q {
    match (small(a), small(b)) {
        (Some((an, ad)), Some((bn, bd))) => {
            let g1 = an.gcd(&bd).max(1);
            let g2 = bn.gcd(&ad).max(1);
            from_reduced((an / g1) * (bn / g2), (ad / g2) * (bd / g1))
        }
        _ => a * b,
    }
}

/// `*a += b`, with a machine-integer path for small operands.
pub fn add_to(a: &mut Q, b: &Q) {
    match (small(a), small(b)) {
        (Some((an, ad)), Some((bn, bd))) => {
            let n = an * bd + bn * ad;
            let d = ad * bd;
            let g = n.gcd(&d).max(1);
            *a = from_reduced(n / g, d / g);
        }
        _ => *a += b,
    }
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// `Some(n)` when `x` is an integer fitting in `i64`.
pub fn as_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// True iff `x ∈ {1, 2, 3, ...}`.
pub fn is_positive_integer(x: &Q) -> bool {
    x.is_integer() && x.is_positive()
}

/// True iff `x ∈ {0, 1, 2, ...}`.
pub fn is_nonneg_integer(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

pub fn binomial(n: u32, k: u32) -> Q {
    if k > n {
        return zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(acc)
}

/// `n (n-1) ... (n-k+1)`, zero when `k > n`.
pub fn falling(n: u32, k: u32) -> Q {
    if k > n {
        return zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    Q::from_integer(acc)
}

pub fn factorial(n: u32) -> Q {
    falling(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_q("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_q(" 4 / 6 ").unwrap(), frac(2, 3));
        assert_eq!(parse_q("7").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
        assert_eq!(fmt_q(&frac(-4, 6)), "-2/3");
        assert_eq!(fmt_q(&q(5)), "5");
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(5, 2), q(10));
        assert_eq!(binomial(2, 5), q(0));
        assert_eq!(falling(5, 2), q(20));
        assert_eq!(factorial(5), q(120));
        assert!(is_positive_integer(&q(3)));
        assert!(!is_positive_integer(&q(0)));
        assert!(is_nonneg_integer(&q(0)));
        assert!(!is_nonneg_integer(&frac(1, 2)));
    }
}
