//! Brute-force verification of the triple-sum orthogonality identity and
//! exact checking of its three telescoping certificates.
//!
//! The summand `P(n, m, l1, l2, i, j1, j2)` is an integer product of
//! binomials (combinatorial support: a binomial with a negative or
//! overflowing index is zero) times `(l1 - l2)`; the identity states that
//! its triple sum over `i, j1, j2` vanishes whenever `l1 != l2`.
//!
//! The certificates are given as rational multipliers `Q_X / P`. The
//! telescoping relation
//! `P(n+1) - P(n) = ΔQ_I + ΔQ_{J1} + ΔQ_{J2}` (forward differences in `i`,
//! `j1`, `j2` respectively) is an identity of meromorphic functions; at
//! integer lattice points each certificate value is the limit of
//! `multiplier * P` along its own telescoped variable. Where `P != 0` and
//! the multiplier denominator is nonzero this is the plain product, and
//! where `P = 0` with nonzero denominator it is zero; the remaining
//! boundary points (simultaneous zero and pole) are resolved exactly by
//! Laurent leading-term arithmetic through the Gamma continuation of each
//! binomial. A genuine pole (a zero denominator against `P != 0`) is
//! reported as a hard failure, since it would falsify the certificates'
//! well-definedness.
//!
//! This is verification at desk scale: exact confirmation at every point of
//! the stated finite grids, not a symbolic proof for all parameters.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{binomial, factorial, rat, Rat};
use crate::Error;

/// One lattice point of the summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WZPoint {
    pub n: i64,
    pub m: i64,
    pub l1: i64,
    pub l2: i64,
    pub i: i64,
    pub j1: i64,
    pub j2: i64,
}

impl WZPoint {
    /// Membership in the declared lattice:
    /// `n >= 2m`, `l1, l2 in 0..=n-2m`, `0 <= j1, j2 <= i <= n-2m`.
    pub fn is_valid(&self) -> bool {
        let lim = self.n - 2 * self.m;
        self.m >= 0
            && lim >= 0
            && (0..=lim).contains(&self.l1)
            && (0..=lim).contains(&self.l2)
            && (0..=self.i).contains(&self.j1)
            && (0..=self.i).contains(&self.j2)
            && self.i <= lim
    }

    fn with_i(&self, i: i64) -> Self {
        WZPoint { i, ..*self }
    }

    fn with_j1(&self, j1: i64) -> Self {
        WZPoint { j1, ..*self }
    }

    fn with_j2(&self, j2: i64) -> Self {
        WZPoint { j2, ..*self }
    }

    fn with_n(&self, n: i64) -> Self {
        WZPoint { n, ..*self }
    }
}

/// The summand: exact integer value of
/// `(-1)^{j1+j2} C(2m+l1, m+j1) C(2m+l2, m+j2) C(i,j1) C(i,j2)
///  C(n-2m-i, l1-j1) C(n-2m-i, l2-j2) C(m+i, i) C(n-m-i, m) (l1 - l2)`.
pub fn summand_p(p: &WZPoint) -> BigInt {
    let WZPoint {
        n,
        m,
        l1,
        l2,
        i,
        j1,
        j2,
    } = *p;
    let prod = binomial(2 * m + l1, m + j1)
        * binomial(2 * m + l2, m + j2)
        * binomial(i, j1)
        * binomial(i, j2)
        * binomial(n - 2 * m - i, l1 - j1)
        * binomial(n - 2 * m - i, l2 - j2)
        * binomial(m + i, i)
        * binomial(n - m - i, m)
        * BigInt::from(l1 - l2);
    if (j1 + j2) % 2 == 0 {
        prod
    } else {
        -prod
    }
}

/// The factor-free summand (without `(l1 - l2)`), used to tie the `l1 = l2`
/// diagonal back to the closed-form norms.
pub fn summand_weight(p: &WZPoint) -> BigInt {
    let WZPoint {
        n,
        m,
        l1,
        l2,
        i,
        j1,
        j2,
    } = *p;
    let prod = binomial(2 * m + l1, m + j1)
        * binomial(2 * m + l2, m + j2)
        * binomial(i, j1)
        * binomial(i, j2)
        * binomial(n - 2 * m - i, l1 - j1)
        * binomial(n - 2 * m - i, l2 - j2)
        * binomial(m + i, i)
        * binomial(n - m - i, m);
    if (j1 + j2) % 2 == 0 {
        prod
    } else {
        -prod
    }
}

/// Triple sum of the summand over the full lattice; must be exactly zero
/// whenever `l1 != l2`.
pub fn brute_force_identity(n: usize, m: usize, l1: usize, l2: usize) -> Result<BigInt, Error> {
    if 2 * m > n || l1 > n - 2 * m || l2 > n - 2 * m {
        return Err(Error::IndexOutOfRange(format!(
            "(n, m, l1, l2) = ({n}, {m}, {l1}, {l2}) not a valid parameter tuple"
        )));
    }
    Ok(triple_sum(
        n as i64, m as i64, l1 as i64, l2 as i64, summand_p,
    ))
}

/// Triple sum of the factor-free summand (the inner-product weight sum).
pub fn weighted_triple_sum(n: usize, m: usize, l1: usize, l2: usize) -> Result<BigInt, Error> {
    if 2 * m > n || l1 > n - 2 * m || l2 > n - 2 * m {
        return Err(Error::IndexOutOfRange(format!(
            "(n, m, l1, l2) = ({n}, {m}, {l1}, {l2}) not a valid parameter tuple"
        )));
    }
    Ok(triple_sum(
        n as i64,
        m as i64,
        l1 as i64,
        l2 as i64,
        summand_weight,
    ))
}

fn triple_sum(n: i64, m: i64, l1: i64, l2: i64, f: impl Fn(&WZPoint) -> BigInt) -> BigInt {
    let lim = n - 2 * m;
    let mut acc = BigInt::zero();
    for i in 0..=lim {
        for j1 in 0..=i {
            for j2 in 0..=i {
                acc += f(&WZPoint {
                    n,
                    m,
                    l1,
                    l2,
                    i,
                    j1,
                    j2,
                });
            }
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Certificate evaluation by Laurent leading terms
// ---------------------------------------------------------------------------

/// Which certificate (equivalently, which variable its telescoping shifts).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    I,
    J1,
    J2,
}

/// Leading Laurent term `coeff * eps^ord` of a factor along the telescoped
/// variable, or identically zero along that line.
#[derive(Debug, Clone)]
enum Leading {
    Zero,
    Term { ord: i64, coeff: Rat },
}

/// Leading term of `Gamma(x0 + slope * eps)`; `None` marks an identically
/// infinite constant factor (pole with zero slope), which the caller turns
/// into an identically-zero reciprocal.
fn gamma_leading(x0: i64, slope: i64) -> Option<Leading> {
    if x0 >= 1 {
        return Some(Leading::Term {
            ord: 0,
            coeff: Rat::from_integer(factorial((x0 - 1) as u64)),
        });
    }
    if slope == 0 {
        return None;
    }
    let k = (-x0) as u64;
    let sign = if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Some(Leading::Term {
        ord: -1,
        coeff: Rat::new(sign, factorial(k) * BigInt::from(slope)),
    })
}

/// Leading term of `C(a0 + sa*eps, b0 + sb*eps)` via
/// `Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1))`.
fn binom_leading(a0: i64, sa: i64, b0: i64, sb: i64) -> Result<Leading, Error> {
    if sa == 0 && sb == 0 {
        let v = binomial(a0, b0);
        return Ok(if v.is_zero() {
            Leading::Zero
        } else {
            Leading::Term {
                ord: 0,
                coeff: Rat::from_integer(v),
            }
        });
    }
    let num = gamma_leading(a0 + 1, sa)
        .ok_or_else(|| Error::InvalidArgument("identically infinite binomial factor".into()))?;
    let d1 = gamma_leading(b0 + 1, sb);
    let d2 = gamma_leading(a0 - b0 + 1, sa - sb);
    let (d1, d2) = match (d1, d2) {
        (Some(d1), Some(d2)) => (d1, d2),
        // a constant Gamma pole in the denominator kills the whole factor
        _ => return Ok(Leading::Zero),
    };
    match (num, d1, d2) {
        (
            Leading::Term { ord: on, coeff: cn },
            Leading::Term { ord: o1, coeff: c1 },
            Leading::Term { ord: o2, coeff: c2 },
        ) => Ok(Leading::Term {
            ord: on - o1 - o2,
            coeff: cn / (c1 * c2),
        }),
        _ => unreachable!("gamma_leading never returns Zero"),
    }
}

/// `(a0, sa, b0, sb)` per binomial factor of the summand, with slopes taken
/// along the certificate's telescoped variable.
fn factor_slopes(cert: Certificate, p: &WZPoint) -> [(i64, i64, i64, i64); 8] {
    let WZPoint {
        n,
        m,
        l1,
        l2,
        i,
        j1,
        j2,
    } = *p;
    match cert {
        Certificate::I => [
            (2 * m + l1, 0, m + j1, 0),
            (2 * m + l2, 0, m + j2, 0),
            (i, 1, j1, 0),
            (i, 1, j2, 0),
            (n - 2 * m - i, -1, l1 - j1, 0),
            (n - 2 * m - i, -1, l2 - j2, 0),
            (m + i, 1, i, 1),
            (n - m - i, -1, m, 0),
        ],
        Certificate::J1 => [
            (2 * m + l1, 0, m + j1, 1),
            (2 * m + l2, 0, m + j2, 0),
            (i, 0, j1, 1),
            (i, 0, j2, 0),
            (n - 2 * m - i, 0, l1 - j1, -1),
            (n - 2 * m - i, 0, l2 - j2, 0),
            (m + i, 0, i, 0),
            (n - m - i, 0, m, 0),
        ],
        Certificate::J2 => [
            (2 * m + l1, 0, m + j1, 0),
            (2 * m + l2, 0, m + j2, 1),
            (i, 0, j1, 0),
            (i, 0, j2, 1),
            (n - 2 * m - i, 0, l1 - j1, 0),
            (n - 2 * m - i, 0, l2 - j2, -1),
            (m + i, 0, i, 0),
            (n - m - i, 0, m, 0),
        ],
    }
}

/// Multiplier numerator as `[c0, c1, c2]` in powers of the shift along the
/// telescoped variable, plus the denominator's linear factors as
/// `(value, slope)` pairs.
fn multiplier_parts(cert: Certificate, p: &WZPoint) -> (Vec<BigInt>, Vec<(i64, i64)>) {
    let WZPoint {
        n,
        m,
        l1,
        l2,
        i,
        j1,
        j2,
    } = *p;
    match cert {
        Certificate::I => {
            let c0 = -j1 + 2 * i * j1 - i * i * j1 + j2 - 2 * i * j2 + i * i * j2 + 3 * j1 * m
                - 3 * i * j1 * m
                - 3 * j2 * m
                + 3 * i * j2 * m
                - 2 * j1 * m * m
                + 2 * j2 * m * m
                - 2 * j1 * n
                + 2 * i * j1 * n
                + 2 * j2 * n
                - 2 * i * j2 * n
                + 3 * j1 * m * n
                - 3 * j2 * m * n
                - j1 * n * n
                + j2 * n * n;
            let c1 =
                2 * j1 - 2 * i * j1 - 2 * j2 + 2 * i * j2 - 3 * j1 * m + 3 * j2 * m + 2 * j1 * n
                    - 2 * j2 * n;
            let c2 = j2 - j1;
            (
                vec![BigInt::from(c0), BigInt::from(c1), BigInt::from(c2)],
                vec![
                    (l1 - l2, 0),
                    (-1 + i - j1 + l1 + 2 * m - n, 1),
                    (-1 + i - j2 + l2 + 2 * m - n, 1),
                ],
            )
        }
        Certificate::J1 => (
            vec![
                BigInt::from(-j1 * j1 - j1 * m),
                BigInt::from(-2 * j1 - m),
                BigInt::from(-1),
            ],
            vec![(1 + i - j1, -1), (l1 - l2, 0)],
        ),
        Certificate::J2 => (
            vec![
                BigInt::from(j2 * j2 + j2 * m),
                BigInt::from(2 * j2 + m),
                BigInt::from(1),
            ],
            vec![(1 + i - j2, -1), (l1 - l2, 0)],
        ),
    }
}

/// Exact value of the certificate at an integer point: the limit of
/// `multiplier * P` along the telescoped variable. `Err` marks a genuine
/// pole (infinite limit), which would falsify the certificates.
pub fn certificate_value(cert: Certificate, p: &WZPoint) -> Result<Rat, Error> {
    let mut ord: i64 = 0;
    let sign = if (p.j1 + p.j2) % 2 == 0 { 1 } else { -1 };
    let mut coeff = rat(sign * (p.l1 - p.l2));
    if coeff.is_zero() {
        // the (l1 - l2) factor of P is constant in every telescoped variable
        return Ok(rat(0));
    }
    for (a0, sa, b0, sb) in factor_slopes(cert, p) {
        match binom_leading(a0, sa, b0, sb)? {
            Leading::Zero => return Ok(rat(0)),
            Leading::Term { ord: o, coeff: c } => {
                ord += o;
                coeff *= c;
            }
        }
    }
    let (num_poly, den_factors) = multiplier_parts(cert, p);
    match num_poly.iter().position(|c| !c.is_zero()) {
        None => return Ok(rat(0)),
        Some(o) => {
            ord += o as i64;
            coeff *= Rat::from_integer(num_poly[o].clone());
        }
    }
    for (value, slope) in den_factors {
        if value != 0 {
            coeff /= rat(value);
        } else if slope != 0 {
            ord -= 1;
            coeff /= rat(slope);
        } else {
            return Err(Error::InvalidArgument(
                "identically zero certificate denominator".into(),
            ));
        }
    }
    if ord > 0 {
        Ok(rat(0))
    } else if ord == 0 {
        Ok(coeff)
    } else {
        Err(Error::InvalidArgument(format!(
            "certificate {cert:?} has a genuine pole at {p:?}"
        )))
    }
}

/// One telescoping failure.
#[derive(Debug, Clone)]
pub struct WzViolation {
    pub point: WZPoint,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Outcome of the certificate check over the full valid lattice.
#[derive(Debug, Clone)]
pub struct WzReport {
    pub max_n: usize,
    pub points_checked: usize,
    pub first_violation: Option<WzViolation>,
    /// Points where a certificate had a genuine pole (must stay empty).
    pub pole_points: Vec<WZPoint>,
    /// `Q_I` at `i = 0` negates under swapping `j1` and `j2` at every
    /// checked integer point.
    pub antisymmetry_pairs: usize,
    pub antisymmetry_holds: bool,
    /// Every lower-boundary value (`Q_I` at `i = 0`, `Q_{J1}` at `j1 = 0`,
    /// `Q_{J2}` at `j2 = 0`) evaluates to exactly zero at the integer
    /// points, so the telescoped boundary sums collapse term by term.
    pub boundary_terms_vanish: bool,
}

impl WzReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
            && self.pole_points.is_empty()
            && self.antisymmetry_holds
            && self.boundary_terms_vanish
    }
}

/// Verifies the telescoping relation
/// `P(n+1) - P(n) = ΔQ_I + ΔQ_{J1} + ΔQ_{J2}` at every point of the valid
/// lattice for all `n <= max_n`, plus the `i = 0` antisymmetry of `Q_I`
/// under swapping `j1` and `j2`.
pub fn check_certificates(max_n: usize) -> WzReport {
    let mut points_checked = 0;
    let mut first_violation = None;
    let mut pole_points = Vec::new();
    for n in 0..=(max_n as i64) {
        for m in 0..=(n / 2) {
            let lim = n - 2 * m;
            for l1 in 0..=lim {
                for l2 in 0..=lim {
                    if l1 == l2 {
                        continue;
                    }
                    for i in 0..=lim {
                        for j1 in 0..=i {
                            for j2 in 0..=i {
                                let p = WZPoint {
                                    n,
                                    m,
                                    l1,
                                    l2,
                                    i,
                                    j1,
                                    j2,
                                };
                                points_checked += 1;
                                let lhs =
                                    Rat::from_integer(summand_p(&p.with_n(n + 1)) - summand_p(&p));
                                let mut rhs = Rat::from_integer(BigInt::zero());
                                let mut pole = false;
                                for (cert, plus, minus) in [
                                    (Certificate::I, p.with_i(i + 1), p),
                                    (Certificate::J1, p.with_j1(j1 + 1), p),
                                    (Certificate::J2, p.with_j2(j2 + 1), p),
                                ] {
                                    match (
                                        certificate_value(cert, &plus),
                                        certificate_value(cert, &minus),
                                    ) {
                                        (Ok(a), Ok(b)) => rhs += a - b,
                                        _ => {
                                            pole = true;
                                            pole_points.push(p);
                                        }
                                    }
                                }
                                if !pole && lhs != rhs && first_violation.is_none() {
                                    first_violation = Some(WzViolation { point: p, lhs, rhs });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // boundary behavior: Q_I at i = 0 is antisymmetric under the j-swap and
    // all lower-boundary certificate values vanish at integer points
    let mut antisymmetry_pairs = 0;
    let mut antisymmetry_holds = true;
    let mut boundary_terms_vanish = true;
    for n in 0..=(max_n as i64) {
        for m in 0..=(n / 2) {
            let lim = n - 2 * m;
            for l1 in 0..=lim {
                for l2 in 0..=lim {
                    if l1 == l2 {
                        continue;
                    }
                    for j1 in 0..=(lim + 1) {
                        for j2 in 0..=(lim + 1) {
                            let p = WZPoint {
                                n,
                                m,
                                l1,
                                l2,
                                i: 0,
                                j1,
                                j2,
                            };
                            let q = p.with_j1(j2).with_j2(j1);
                            match (
                                certificate_value(Certificate::I, &p),
                                certificate_value(Certificate::I, &q),
                            ) {
                                (Ok(a), Ok(b)) => {
                                    antisymmetry_pairs += 1;
                                    if a != -b.clone() {
                                        antisymmetry_holds = false;
                                    }
                                    if !a.is_zero() || !b.is_zero() {
                                        boundary_terms_vanish = false;
                                    }
                                }
                                _ => antisymmetry_holds = false,
                            }
                        }
                    }
                    for i in 0..=lim {
                        for j in 0..=(i + 1) {
                            let pj1 = WZPoint {
                                n,
                                m,
                                l1,
                                l2,
                                i,
                                j1: 0,
                                j2: j,
                            };
                            let pj2 = WZPoint {
                                n,
                                m,
                                l1,
                                l2,
                                i,
                                j1: j,
                                j2: 0,
                            };
                            let v1 = certificate_value(Certificate::J1, &pj1);
                            let v2 = certificate_value(Certificate::J2, &pj2);
                            match (v1, v2) {
                                (Ok(a), Ok(b)) => {
                                    if !a.is_zero() || !b.is_zero() {
                                        boundary_terms_vanish = false;
                                    }
                                }
                                _ => boundary_terms_vanish = false,
                            }
                        }
                    }
                }
            }
        }
    }
    WzReport {
        max_n,
        points_checked,
        first_violation,
        pole_points,
        antisymmetry_pairs,
        antisymmetry_holds,
        boundary_terms_vanish,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn summand_examples() {
        // the (l1 - l2) factor kills equal degrees
        let p = WZPoint {
            n: 6,
            m: 1,
            l1: 2,
            l2: 2,
            i: 1,
            j1: 0,
            j2: 1,
        };
        assert_eq!(summand_p(&p), BigInt::zero());
        // base case n = 2m: the only lattice point has i = j1 = j2 = 0 and the
        // tail binomials vanish unless l1 = l2 = 0
        let p = WZPoint {
            n: 4,
            m: 2,
            l1: 0,
            l2: 2,
            i: 0,
            j1: 0,
            j2: 0,
        };
        assert_eq!(summand_p(&p), BigInt::zero());
        // full triple sum example
        assert_eq!(brute_force_identity(4, 1, 0, 2).unwrap(), BigInt::zero());
        assert!(brute_force_identity(4, 3, 0, 0).is_err());
    }

    #[test]
    fn triple_sum_vanishes_up_to_n8() {
        for n in 0..=8usize {
            for m in 0..=n / 2 {
                let lim = n - 2 * m;
                for l1 in 0..=lim {
                    for l2 in 0..=lim {
                        if l1 == l2 {
                            continue;
                        }
                        assert_eq!(
                            brute_force_identity(n, m, l1, l2).unwrap(),
                            BigInt::zero(),
                            "(n,m,l1,l2)=({n},{m},{l1},{l2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn base_case_n_equals_2m() {
        for m in 0..=5usize {
            let n = 2 * m;
            for l1 in 0..=0 {
                for l2 in 0..=0 {
                    // only l = 0 is valid at n = 2m; the sum is trivially zero
                    assert_eq!(brute_force_identity(n, m, l1, l2).unwrap(), BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn weighted_diagonal_matches_closed_norm() {
        use crate::eigenbasis::sq_norm_closed;
        use crate::Tableau;
        // sum_{i,j1,j2} weight = multinomial(n; n-2m, m, m) * (n+1)/2^m * <f, f>
        for n in 1..=8usize {
            for m in 0..=n / 2 {
                let t = Tableau::column_reading(n, m).unwrap();
                for l in 0..=(n - 2 * m) {
                    let lhs = Rat::from_integer(weighted_triple_sum(n, m, l, l).unwrap());
                    let multinomial = Rat::from_integer(
                        factorial(n as u64)
                            / (factorial((n - 2 * m) as u64)
                                * factorial(m as u64)
                                * factorial(m as u64)),
                    );
                    let norm = sq_norm_closed(m, l, &t).unwrap();
                    let expect = multinomial * rat(n as i64 + 1) * norm
                        / Rat::from_integer(BigInt::one() << m);
                    assert_eq!(lhs, expect, "(n,m,l)=({n},{m},{l})");
                }
            }
        }
    }

    #[test]
    fn weighted_offdiagonal_matches_inner_product_route() {
        use crate::eigenbasis::f_vector;
        use crate::Tableau;
        // both routes to <f_T^{l1}, f_T^{l2}> must agree (and vanish)
        for n in 1..=7usize {
            for m in 0..=n / 2 {
                let t = Tableau::column_reading(n, m).unwrap();
                for l1 in 0..=(n - 2 * m) {
                    for l2 in (l1 + 1)..=(n - 2 * m) {
                        let sum = Rat::from_integer(weighted_triple_sum(n, m, l1, l2).unwrap());
                        let f1 = f_vector(m, l1, &t).unwrap();
                        let f2 = f_vector(m, l2, &t).unwrap();
                        let ip = f1.inner_product(&f2).unwrap();
                        let multinomial = Rat::from_integer(
                            factorial(n as u64)
                                / (factorial((n - 2 * m) as u64)
                                    * factorial(m as u64)
                                    * factorial(m as u64)),
                        );
                        let scaled = multinomial * rat(n as i64 + 1) * &ip
                            / Rat::from_integer(BigInt::one() << m);
                        assert_eq!(sum, scaled);
                        assert_eq!(ip, rat(0));
                    }
                }
            }
        }
    }

    #[test]
    fn certificate_plain_product_region() {
        // where P != 0 and denominators are clean, the limit equals the
        // literal multiplier * P product
        let p = WZPoint {
            n: 8,
            m: 1,
            l1: 1,
            l2: 2,
            i: 2,
            j1: 1,
            j2: 1,
        };
        assert_eq!(summand_p(&p), BigInt::from(-4320));
        let (num, den) = multiplier_parts(Certificate::J1, &p);
        let plain = Rat::from_integer(num[0].clone()) / (rat(den[0].0) * rat(den[1].0))
            * Rat::from_integer(summand_p(&p));
        assert_eq!(certificate_value(Certificate::J1, &p).unwrap(), plain);
        assert_eq!(plain, rat(-4320));
    }

    #[test]
    fn certificate_negation_under_j_swap() {
        // Q_{J1}/P and Q_{J2}/P are mutual negatives under swapping j1 <-> j2
        for p in [
            WZPoint {
                n: 6,
                m: 1,
                l1: 1,
                l2: 3,
                i: 2,
                j1: 1,
                j2: 0,
            },
            WZPoint {
                n: 7,
                m: 2,
                l1: 0,
                l2: 3,
                i: 3,
                j1: 2,
                j2: 1,
            },
        ] {
            let swapped = WZPoint {
                j1: p.j2,
                j2: p.j1,
                ..p
            };
            let (n1, d1) = multiplier_parts(Certificate::J1, &p);
            let (n2, d2) = multiplier_parts(Certificate::J2, &swapped);
            let m1 = Rat::from_integer(n1[0].clone()) / (rat(d1[0].0) * rat(d1[1].0));
            let m2 = Rat::from_integer(n2[0].clone()) / (rat(d2[0].0) * rat(d2[1].0));
            assert_eq!(m1, -m2);
        }
    }

    #[test]
    fn telescoping_holds_small() {
        let report = check_certificates(5);
        assert!(
            report.holds(),
            "first violation: {:?}",
            report.first_violation
        );
        assert!(report.points_checked > 0);
        assert!(report.antisymmetry_pairs > 0);
        assert!(report.boundary_terms_vanish);
    }

    #[test]
    fn limit_resolves_boundary_point() {
        // at (n,m,l1,l2,i,j1,j2) = (1,0,0,1,0,0,1) the multiplier of Q_{J2}
        // has a zero denominator against P = 0; the exact limit is finite and
        // nonzero, and it is what makes the relation at the base point
        // (..., j2 = 0) balance: P(2) - P(1) = -1 there
        let p = WZPoint {
            n: 1,
            m: 0,
            l1: 0,
            l2: 1,
            i: 0,
            j1: 0,
            j2: 1,
        };
        assert_eq!(summand_p(&p), BigInt::zero());
        assert_eq!(
            certificate_value(Certificate::J2, &p).unwrap(),
            ratio(-1, 1)
        );
        let base = p.with_j2(0);
        let lhs = summand_p(&base.with_n(2)) - summand_p(&base);
        assert_eq!(lhs, BigInt::from(-1));
    }
}
