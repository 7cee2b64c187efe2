//! Exact `(alpha, beta)`-Hahn polynomials on `{0, ..., N}` and their
//! orthogonality data. The `(0, 0)` case is the discrete Chebyshev family
//! (the beta-binomial weight degenerates to uniform).
//!
//! Parameters are restricted to nonnegative integers, which keeps every
//! value an exact rational.

use num_traits::Zero;

use crate::scalar::{binomial, rat, Rat};
use crate::Error;

/// Parameters of one Hahn polynomial: domain `{0, ..., big_n}`, integer
/// parameters `alpha, beta >= 0`, degree `ell <= big_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HahnSpec {
    pub big_n: usize,
    pub alpha: usize,
    pub beta: usize,
    pub ell: usize,
}

impl HahnSpec {
    pub fn new(big_n: usize, alpha: usize, beta: usize, ell: usize) -> Result<Self, Error> {
        if ell > big_n {
            return Err(Error::InvalidArgument(format!(
                "degree ell = {ell} exceeds domain size parameter N = {big_n}"
            )));
        }
        Ok(HahnSpec {
            big_n,
            alpha,
            beta,
            ell,
        })
    }
}

/// Rising factorial `(a)_0 = 1`, `(a)_j = a (a+1) ... (a+j-1)`.
pub fn rising_factorial(a: &Rat, j: usize) -> Rat {
    let mut acc = rat(1);
    let mut term = a.clone();
    for _ in 0..j {
        acc *= &term;
        term += rat(1);
    }
    acc
}

fn rising_int(a: i64, j: usize) -> Rat {
    rising_factorial(&rat(a), j)
}

/// Evaluates the Hahn polynomial at an integer point of its domain.
///
/// The hypergeometric sum truncates at `k = ell` because `(-ell)_k = 0`
/// beyond, and for `k <= ell <= N` the denominator factor `(-N)_k` is
/// nonzero, so no division by zero can occur. Normalized so the value at 0
/// is 1.
pub fn hahn_eval(spec: HahnSpec, x: usize) -> Result<Rat, Error> {
    let HahnSpec {
        big_n,
        alpha,
        beta,
        ell,
    } = spec;
    if x > big_n {
        return Err(Error::IndexOutOfRange(format!(
            "evaluation point {x} outside 0..={big_n}"
        )));
    }
    let mut acc = Rat::zero();
    for k in 0..=ell {
        let denom = rising_int(-(big_n as i64), k);
        debug_assert!(
            !denom.is_zero(),
            "(-N)_k must stay nonzero for k <= ell <= N"
        );
        let num = rising_int(-(ell as i64), k)
            * rising_int((ell + alpha + beta + 1) as i64, k)
            * rising_int(-(x as i64), k);
        let den = Rat::from_integer(crate::scalar::factorial(k as u64))
            * rising_int(alpha as i64 + 1, k)
            * denom;
        acc += num / den;
    }
    Ok(acc)
}

/// The beta-binomial weight
/// `m(i) = C(N, i) (alpha+1)_i (beta+1)_{N-i} / (alpha+beta+2)_N`.
/// Uniform `1/(N+1)` when `alpha = beta = 0`; sums to 1 over the domain.
pub fn beta_binomial_weight(
    big_n: usize,
    alpha: usize,
    beta: usize,
    i: usize,
) -> Result<Rat, Error> {
    if i > big_n {
        return Err(Error::IndexOutOfRange(format!(
            "weight index {i} outside 0..={big_n}"
        )));
    }
    Ok(Rat::from_integer(binomial(big_n as i64, i as i64))
        * rising_int(alpha as i64 + 1, i)
        * rising_int(beta as i64 + 1, big_n - i)
        / rising_int((alpha + beta + 2) as i64, big_n))
}

/// Closed form for the diagonal of the orthogonality relation: the value of
/// `sum_i C(alpha+i, i) C(N+beta-i, N-i) Q^ell(i)^2`.
pub fn hahn_norm_rhs(big_n: usize, alpha: usize, beta: usize, ell: usize) -> Rat {
    let n = big_n as i64;
    let l = ell as i64;
    let sign = if ell.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    };
    sign * Rat::from_integer(crate::scalar::factorial(ell as u64))
        * rising_int(beta as i64 + 1, ell)
        * rising_int(l + alpha as i64 + beta as i64 + 1, big_n + 1)
        / (Rat::from_integer(crate::scalar::factorial(big_n as u64))
            * rat(2 * l + alpha as i64 + beta as i64 + 1)
            * rising_int(-n, ell)
            * rising_int(alpha as i64 + 1, ell))
}

/// Brute-force left side of the orthogonality relation:
/// `sum_i C(alpha+i, i) C(N+beta-i, N-i) Q^{ell}(i) Q^{ell'}(i)`.
pub fn hahn_orthogonality_sum(
    big_n: usize,
    alpha: usize,
    beta: usize,
    ell: usize,
    ell2: usize,
) -> Result<Rat, Error> {
    let mut acc = Rat::zero();
    for i in 0..=big_n {
        let w = Rat::from_integer(
            binomial((alpha + i) as i64, i as i64)
                * binomial((big_n + beta - i) as i64, (big_n - i) as i64),
        );
        let a = hahn_eval(HahnSpec::new(big_n, alpha, beta, ell)?, i)?;
        let b = hahn_eval(HahnSpec::new(big_n, alpha, beta, ell2)?, i)?;
        acc += w * a * b;
    }
    Ok(acc)
}
