//! Exact chi-square distance to stationarity via the orthogonal eigenbasis.
//!
//! For a start `x` and `s >= 1` steps, the distance is
//! `sum (f(x)^2 / <f, f>) * beta^{2s}` over the eigenvectors `f` with
//! nonzero eigenvalue `beta` (the zero-eigenvalue terms vanish for
//! `s >= 1`). From a one-ones start almost every evaluation is zero, which
//! collapses the sum to `O(n)` closed-form terms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chain::{beta, ChainState};
use crate::eigenbasis::{g_vector, sq_norm_closed, t_scalar};
use crate::scalar::{binomial, rat, Rat};
use crate::tableaux::shape_dimension;
use crate::{Error, Tableau};

/// Cap for the general-start eigenbasis path.
pub const GENERAL_START_CAP: usize = 12;
/// Cap for the one-ones closed-form path (the sum has `O(n)` terms).
pub const ONE_ONES_CAP: usize = 100_000;

/// Exact chi-square distance after `s` steps, with its per-eigenvalue
/// decomposition.
#[derive(Debug, Clone)]
pub struct MixingReport {
    pub n: usize,
    pub s: u32,
    pub start: ChainState,
    pub chi_square: Rat,
    /// Contribution of each nonzero eigenvalue; the values sum to
    /// `chi_square` and every contribution is nonnegative.
    pub per_eigenvalue: BTreeMap<Rat, Rat>,
}

fn report_from_contributions(
    n: usize,
    s: u32,
    start: ChainState,
    contributions: impl IntoIterator<Item = (Rat, Rat)>,
) -> MixingReport {
    let mut per_eigenvalue: BTreeMap<Rat, Rat> = BTreeMap::new();
    for (ev, c) in contributions {
        if c.is_zero() {
            continue;
        }
        let slot = per_eigenvalue.entry(ev).or_insert_with(Rat::zero);
        *slot += c;
    }
    let chi_square = per_eigenvalue.values().cloned().sum();
    MixingReport {
        n,
        s,
        start,
        chi_square,
        per_eigenvalue,
    }
}

/// Exact chi-square distance from an arbitrary binary start via the full
/// eigenbasis. Requires `s >= 1` (the expansion drops zero-eigenvalue terms,
/// which is only the distance in that regime) and `n <= 12`.
pub fn chi_square(x: &ChainState, s: u32) -> Result<MixingReport, Error> {
    if s == 0 {
        return Err(Error::InvalidArgument(
            "chi-square expansion requires s >= 1".into(),
        ));
    }
    if x.k() != 2 {
        return Err(Error::UnsupportedAlphabet(x.k()));
    }
    let n = x.n();
    if n > GENERAL_START_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: GENERAL_START_CAP,
        });
    }
    let xs = x.to_subset()?;
    // f_Q^{m,ell}(x) = T_{m,n}^{(ell)}(|x| - m) * g_Q^{m,|x|-m}(x): only the
    // g at the start's level ever contributes, so one g per tableau suffices.
    let level = xs.size();
    let mut contributions = Vec::new();
    for m in 0..=(n / 2) {
        if level < m || level > n - m {
            continue;
        }
        let i = level - m;
        for q in Tableau::enumerate(n, m)? {
            let gx = g_vector(m, i, &q)?.coeff(&xs);
            if gx.is_zero() {
                continue;
            }
            for ell in 0..=(n - 2 * m) {
                if (m + ell) % 2 != 0 || (m, ell) == (0, 0) {
                    continue;
                }
                let value = Rat::from_integer(t_scalar(m, n, ell, i)?) * &gx;
                if value.is_zero() {
                    continue;
                }
                let ev = beta((m + ell) / 2);
                let weight = &value * &value / sq_norm_closed(m, ell, &q)?;
                contributions.push((ev.clone(), weight * ev.pow(2 * s as i32)));
            }
        }
    }
    Ok(report_from_contributions(n, s, x.clone(), contributions))
}

/// Closed-form evaluation of `f_Q^{m,ell}` at the one-ones state `e_n`
/// (single one in the last coordinate), without materializing any vector.
///
/// Zero for all `m >= 2`; for `m = 1` nonzero only when the tableau's
/// second-row entry is `n`.
pub fn evaluate_f_at_one_ones(m: usize, ell: usize, q: &Tableau, n: usize) -> Result<Rat, Error> {
    if q.n() != n || q.m() != m {
        return Err(Error::InvalidTableau(format!(
            "tableau {q} does not have shape ({}, {m}) with n = {n}",
            n - m
        )));
    }
    if ell > n - 2 * m {
        return Err(Error::IndexOutOfRange(format!(
            "degree ell = {ell} outside 0..={}",
            n - 2 * m
        )));
    }
    let (ni, li) = (n as i64, ell as i64);
    Ok(match m {
        0 => Rat::from_integer(binomial(ni - 1, li) - li * binomial(ni - 1, li - 1)),
        1 if q.second_row() == [n] => Rat::from_integer(-(2 + li) * binomial(ni - 2, li)),
        _ => rat(0),
    })
}

/// The one-ones spectral profile: for each contributing eigenvector, its
/// eigenvalue and the squared normalized evaluation `f(e_n)^2 / <f, f>`.
/// Only the `m = 0` family (even degrees) and the single shape-`(n-1, 1)`
/// tableau with `n` in its second row (odd degrees) contribute, so the list
/// has `O(n)` terms and no vector is ever materialized.
///
/// The squared norms enter through their two specialized product forms
/// (`prod (n+t)` over a centered window against `(2l+1) l!^2`-style
/// constants); all pieces are maintained incrementally across the degree
/// loop, so the whole profile costs `O(n)` big-integer multiplications.
pub fn one_ones_profile(n: usize) -> Result<Vec<(Rat, Rat)>, Error> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "one-ones closed form requires n >= 3".into(),
        ));
    }
    if n > ONE_ONES_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: ONE_ONES_CAP,
        });
    }
    let nb = |v: usize| BigInt::from(v as i64);
    let mut profile = Vec::new();

    // m = 0, even degrees l >= 2:
    //   value = C(n-1, l) - l C(n-1, l-1)
    //   norm  = prod_{t=1-l}^{l+1} (n+t) / ((2l+1) l!^2 (n+1))
    if n >= 2 {
        let mut binom_prev = nb(n - 1); // C(n-1, 1)
        let mut binom_curr = nb(n - 1) * nb(n - 2) / nb(2); // C(n-1, 2)
        let mut lfact_sq = nb(4); // (2!)^2
        let mut window: BigInt = (n - 1..=n + 3).map(&nb).product();
        let mut ell = 2usize;
        loop {
            let value = &binom_curr - nb(ell) * &binom_prev;
            let weight = Rat::new(
                &value * &value * nb(2 * ell + 1) * &lfact_sq * nb(n + 1),
                window.clone(),
            );
            profile.push((beta(ell / 2), weight));
            if ell + 2 > n {
                break;
            }
            // advance C(n-1, .) twice, l!^2, and the (n+t) window
            binom_prev = &binom_curr * nb(n - 1 - ell) / nb(ell + 1);
            binom_curr = &binom_prev * nb(n - 2 - ell) / nb(ell + 2);
            lfact_sq *= nb((ell + 1) * (ell + 2)).pow(2);
            window *= nb(n + ell + 2) * nb(n + ell + 3) * nb(n - ell) * nb(n - ell - 1);
            ell += 2;
        }
    }

    // m = 1 (the tableau with n in its second row), odd degrees l <= n-2:
    //   value = -(2+l) C(n-2, l)
    //   norm  = (l+2) prod_{t=-l-1}^{l+1} (n+t)
    //           / ((l+1)(2l+3) l!^2 (n-1)^2 (n+1))
    if n >= 3 {
        let mut binom = nb(n - 2); // C(n-2, 1)
        let mut lfact_sq = BigInt::one(); // (1!)^2
        let mut window: BigInt = (n - 2..=n + 2).map(&nb).product();
        let mut ell = 1usize;
        loop {
            let weight = Rat::new(
                nb(ell + 2)
                    * nb(ell + 1)
                    * nb(2 * ell + 3)
                    * &binom
                    * &binom
                    * &lfact_sq
                    * nb(n - 1).pow(2)
                    * nb(n + 1),
                window.clone(),
            );
            profile.push((beta(ell.div_ceil(2)), weight));
            if ell + 4 > n {
                break;
            }
            binom = &binom * nb(n - 2 - ell) / nb(ell + 1);
            binom = &binom * nb(n - 3 - ell) / nb(ell + 2);
            lfact_sq *= nb((ell + 1) * (ell + 2)).pow(2);
            window *= nb(n + ell + 2) * nb(n + ell + 3) * nb(n - ell - 2) * nb(n - ell - 3);
            ell += 2;
        }
    }
    Ok(profile)
}

/// Exact chi-square distance from the one-ones state in `O(n)` terms.
pub fn chi_square_one_ones(n: usize, s: u32) -> Result<MixingReport, Error> {
    if s == 0 {
        return Err(Error::InvalidArgument(
            "chi-square expansion requires s >= 1".into(),
        ));
    }
    let contributions = one_ones_profile(n)?
        .into_iter()
        .map(|(ev, weight)| {
            let term = weight * ev.pow(2 * s as i32);
            (ev, term)
        })
        .collect::<Vec<_>>();
    Ok(report_from_contributions(
        n,
        s,
        ChainState::one_ones(n)?,
        contributions,
    ))
}

/// The coefficient of `beta_1^{2s}` in the one-ones profile (the
/// contributions of the two eigenvectors at the largest nontrivial
/// eigenvalue). Tends to 35 as `n` grows.
pub fn one_ones_leading_coefficient(n: usize) -> Result<Rat, Error> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "one-ones closed form requires n >= 3".into(),
        ));
    }
    let flat = Tableau::column_reading(n, 0)?;
    let hook = Tableau::new(n, vec![n])?;
    let v0 = evaluate_f_at_one_ones(0, 2, &flat, n)?;
    let v1 = evaluate_f_at_one_ones(1, 1, &hook, n)?;
    Ok(&v0 * &v0 / sq_norm_closed(0, 2, &flat)? + &v1 * &v1 / sq_norm_closed(1, 1, &hook)?)
}

/// Upper bound for the squared total-variation distance implied by the
/// chi-square distance: `4 TV^2 <= chi^2`, so this returns `chi / 4`.
pub fn tv_squared_bound(chi: &Rat) -> Rat {
    chi / rat(4)
}

/// The eigenvalue attached to each (tableau, level) cell of one shape.
#[derive(Debug, Clone)]
pub struct IsotypicShape {
    pub m: usize,
    /// Number of standard tableaux of the shape, i.e. the multiplicity each
    /// eigenvalue below carries inside the isotypic component.
    pub dimension: BigInt,
    /// `(level m + ell, eigenvalue)` for `ell = 0, ..., n - 2m`.
    pub levels: Vec<(usize, Rat)>,
}

/// Per-shape eigenvalue table: shape `(n-m, m)` carries eigenvalue
/// `beta_{(m+ell)/2}` at level `m + ell` for even `m + ell` and `0` at odd
/// levels; the nonzero `beta_k` appears iff `m <= min(2k, n-2k)`.
pub fn isotypic_table(n: usize) -> Result<Vec<IsotypicShape>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > GENERAL_START_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: GENERAL_START_CAP,
        });
    }
    let mut out = Vec::new();
    for m in 0..=(n / 2) {
        let levels = (m..=(n - m))
            .map(|level| {
                let ev = if level % 2 == 0 {
                    beta(level / 2)
                } else {
                    rat(0)
                };
                (level, ev)
            })
            .collect();
        out.push(IsotypicShape {
            m,
            dimension: shape_dimension(n, m),
            levels,
        });
    }
    Ok(out)
}

/// Total multiplicity of `beta_k` implied by the isotypic table; equals
/// `C(n, 2k)`.
pub fn beta_multiplicity_from_table(table: &[IsotypicShape], k: usize) -> BigInt {
    let target = beta(k);
    table
        .iter()
        .filter(|shape| shape.levels.iter().any(|(_, ev)| *ev == target))
        .map(|shape| shape.dimension.clone())
        .sum()
}
