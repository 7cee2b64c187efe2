//! Exact scalar arithmetic: arbitrary-precision rationals and the binomial
//! helpers shared by every module.
//!
//! All algebra in this crate happens over [`Rat`]; no floating point enters a
//! computation except where a value is explicitly rendered for display.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// The scalar type: arbitrary-precision rational, always in lowest terms
/// with positive denominator (maintained by `num_rational`).
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(i: i64) -> Rat {
    Rat::from_integer(BigInt::from(i))
}

/// Ratio of two integers.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient with combinatorial support: zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// `k!` as a big integer.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=k {
        acc *= BigInt::from(t);
    }
    acc
}

/// Product `a (a+1) ... (b)` over the integers, `1` when `a > b`.
pub fn int_product(a: i64, b: i64) -> BigInt {
    let mut acc = BigInt::one();
    for t in a..=b {
        acc *= BigInt::from(t);
    }
    acc
}

/// Renders a rational as `p` when the denominator is one, else `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (arbitrary precision, `q > 0` after normalization).
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(mk_err());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Float rendering for display columns. Exact values stay rational; this is
/// only attached next to them.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or_else(|| {
        // numerator overflowed f64; fall back on a digit-scaled division
        let digits = r.numer().abs().to_string().len() as i32 - 15;
        let scale = BigInt::from(10u32).pow(digits.max(0) as u32);
        let num = (r.numer() / &scale).to_f64().unwrap_or(f64::NAN);
        let den = (r.denom() / &scale).to_f64().unwrap_or(f64::NAN);
        num / den
    }) / r.denom().to_f64().unwrap_or(f64::NAN)
}
