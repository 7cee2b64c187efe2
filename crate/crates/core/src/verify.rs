//! The structured verification suite: every check the CLI's `verify-all`
//! runs and the acceptance tests assert, with exact pass/fail outcomes.
//!
//! Checks are exact rational comparisons unless stated otherwise (the
//! spectrum multiplicity check clusters floating-point eigenvalues, and the
//! sampler checks use fixed-seed empirical tolerances).

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chain::{
    self, check_lumping, check_lumping_with_entry, k_entry_from_stats, numeric_spectrum,
    sample_step, ChainState, EntryCache, PairStats,
};
use crate::eigenbasis::{f_vector, full_basis_with_cap, g_vector, sq_norm_closed, t_scalar};
use crate::mixing::{chi_square, one_ones_leading_coefficient, one_ones_profile};
use crate::orthopoly::{hahn_eval, hahn_norm_rhs, hahn_orthogonality_sum, HahnSpec};
use crate::scalar::{binomial, format_rat, parse_rat, rat, ratio, Rat};
use crate::sl2::{expansion_terms, verify_sl2_conjecture};
use crate::subset::Subset;
use crate::tableaux::Tableau;
use crate::wz::{brute_force_identity, check_certificates, summand_p, WZPoint};
use crate::{Error, TensorVector};

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub elapsed: Duration,
}

impl CheckReport {
    fn run(name: &'static str, body: impl FnOnce() -> Result<(bool, String), Error>) -> Self {
        let start = Instant::now();
        let (passed, details) = match body() {
            Ok(pair) => pair,
            Err(e) => (false, format!("error: {e}")),
        };
        CheckReport {
            name,
            passed,
            details,
            elapsed: start.elapsed(),
        }
    }
}

/// Knobs for the suite; the defaults match the acceptance criteria.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Cap for the exhaustive eigenbasis / operator checks (criteria sized
    /// at `n <= 8`). Lower values shrink the run proportionally.
    pub max_n: usize,
    /// Include the slow cases (expansion check at n = 9, 10).
    pub slow: bool,
    /// Seed for the randomized norm sampling and the sampler statistics.
    pub seed: u64,
    /// One-step draws per start in the sampler check.
    pub sampler_draws: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 8,
            slow: false,
            seed: 0x5eed,
            sampler_draws: 1_000_000,
        }
    }
}

// ---------------------------------------------------------------------------
// Reference tables for n = 3 (the two printed 8-row tables with the norm
// column {1, 5, 1, 4/3, 9, 9/4, 3, 5})
// ---------------------------------------------------------------------------

type ReferenceRow = (usize, usize, &'static [usize], [&'static str; 8]);

/// The eight `g` rows for n = 3, states ordered 000..111.
pub const REFERENCE_G_N3: [ReferenceRow; 8] = [
    (0, 0, &[], ["1", "0", "0", "0", "0", "0", "0", "0"]),
    (0, 1, &[], ["0", "1", "1", "0", "1", "0", "0", "0"]),
    (1, 0, &[3], ["0", "1", "-1/2", "0", "-1/2", "0", "0", "0"]),
    (1, 0, &[2], ["0", "0", "1", "0", "-1", "0", "0", "0"]),
    (0, 2, &[], ["0", "0", "0", "1", "0", "1", "1", "0"]),
    (1, 1, &[3], ["0", "0", "0", "1/2", "0", "1/2", "-1", "0"]),
    (1, 1, &[2], ["0", "0", "0", "1", "0", "-1", "0", "0"]),
    (0, 3, &[], ["0", "0", "0", "0", "0", "0", "0", "1"]),
];

type ReferenceRowWithNorm = (
    usize,
    usize,
    &'static [usize],
    [&'static str; 8],
    &'static str,
);

/// The eight `f` rows for n = 3 with their squared norms.
pub const REFERENCE_F_N3: [ReferenceRowWithNorm; 8] = [
    (0, 0, &[], ["1", "1", "1", "1", "1", "1", "1", "1"], "1"),
    (0, 1, &[], ["3", "1", "1", "-1", "1", "-1", "-1", "-3"], "5"),
    (1, 0, &[3], ["0", "-2", "1", "-1", "1", "-1", "2", "0"], "1"),
    (
        1,
        0,
        &[2],
        ["0", "0", "-2", "-2", "2", "2", "0", "0"],
        "4/3",
    ),
    (
        0,
        2,
        &[],
        ["3", "-3", "-3", "-3", "-3", "-3", "-3", "3"],
        "9",
    ),
    (
        1,
        1,
        &[3],
        ["0", "-3", "3/2", "3/2", "3/2", "3/2", "-3", "0"],
        "9/4",
    ),
    (1, 1, &[2], ["0", "0", "-3", "3", "3", "-3", "0", "0"], "3"),
    (0, 3, &[], ["1", "-3", "-3", "3", "-3", "3", "3", "-1"], "5"),
];

/// One row of the printed basis tables.
#[derive(Debug, Clone)]
pub struct BasisTableRow {
    pub m: usize,
    pub ell: usize,
    pub tableau: Tableau,
    pub g: TensorVector,
    pub f: TensorVector,
    pub sq_norm: Rat,
}

/// All basis rows in table order: by level `m + ell`, then `m`, then
/// tableau second row in reverse lexicographic order.
pub fn basis_table_rows(n: usize) -> Result<Vec<BasisTableRow>, Error> {
    if n == 0 || n > crate::eigenbasis::FULL_BASIS_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: crate::eigenbasis::FULL_BASIS_CAP,
        });
    }
    let mut indices = Vec::new();
    for m in 0..=(n / 2) {
        for ell in 0..=(n - 2 * m) {
            for q in Tableau::enumerate(n, m)? {
                indices.push((m, ell, q));
            }
        }
    }
    indices.sort_by(|a, b| {
        (a.0 + a.1, a.0)
            .cmp(&(b.0 + b.1, b.0))
            .then_with(|| b.2.second_row().cmp(a.2.second_row()))
    });
    indices
        .into_iter()
        .map(|(m, ell, q)| {
            Ok(BasisTableRow {
                m,
                ell,
                g: g_vector(m, ell, &q)?,
                f: f_vector(m, ell, &q)?,
                sq_norm: sq_norm_closed(m, ell, &q)?,
                tableau: q,
            })
        })
        .collect()
}

/// Values of a vector over all states in display order (000, 001, ...).
pub fn state_row(v: &TensorVector) -> Vec<Rat> {
    let mut states: Vec<Subset> = Subset::all(v.n()).collect();
    states.sort_by_key(|s| s.display_rank());
    states.iter().map(|s| v.coeff(s)).collect()
}

/// Criterion: the generated n = 3 tables reproduce the reference rows and
/// norms exactly.
pub fn check_reference_tables() -> CheckReport {
    CheckReport::run("reference-tables-n3", || {
        let rows = basis_table_rows(3)?;
        if rows.len() != 8 {
            return Ok((false, format!("expected 8 rows, got {}", rows.len())));
        }
        for (row, (m, ell, second, g_vals)) in rows.iter().zip(REFERENCE_G_N3) {
            if row.m != m || row.ell != ell || row.tableau.second_row() != second {
                return Ok((false, format!("row order mismatch at ({m}, {ell})")));
            }
            let got = state_row(&row.g);
            for (gv, want) in got.iter().zip(g_vals) {
                if *gv != parse_rat(want)? {
                    return Ok((
                        false,
                        format!("g row ({m}, {ell}, {second:?}): got {}", format_rat(gv)),
                    ));
                }
            }
        }
        for (row, (m, ell, second, f_vals, norm)) in rows.iter().zip(REFERENCE_F_N3) {
            if row.m != m || row.ell != ell || row.tableau.second_row() != second {
                return Ok((false, format!("row order mismatch at ({m}, {ell})")));
            }
            let got = state_row(&row.f);
            for (fv, want) in got.iter().zip(f_vals) {
                if *fv != parse_rat(want)? {
                    return Ok((
                        false,
                        format!("f row ({m}, {ell}, {second:?}): got {}", format_rat(fv)),
                    ));
                }
            }
            if row.sq_norm != parse_rat(norm)? {
                return Ok((
                    false,
                    format!("norm of ({m}, {ell}): got {}", format_rat(&row.sq_norm)),
                ));
            }
        }
        Ok((true, "16 rows and 8 norms reproduced exactly".into()))
    })
}

/// Criterion: for every `n <= max_n` the `2^n` eigenvectors are pairwise
/// orthogonal and the operator reproduces each closed-form eigenvalue.
pub fn check_orthogonal_eigenbasis(max_n: usize) -> CheckReport {
    CheckReport::run("orthogonal-eigenbasis", || {
        let mut pairs_total = 0usize;
        for n in 1..=max_n {
            let basis = full_basis_with_cap(n, max_n.max(crate::eigenbasis::FULL_BASIS_CAP))?;
            let vectors: Vec<&TensorVector> = basis.par_iter().map(|e| e.vector()).collect();
            let dim = vectors.len();
            let bad_pair = (0..dim).into_par_iter().find_map_any(|a| {
                for b in (a + 1)..dim {
                    let ip = vectors[a].inner_product(vectors[b]).expect("same n");
                    if !ip.is_zero() {
                        return Some((a, b, ip));
                    }
                }
                None
            });
            if let Some((a, b, ip)) = bad_pair {
                return Ok((
                    false,
                    format!(
                        "n = {n}: <({},{},{}), ({},{},{})> = {}",
                        basis[a].m,
                        basis[a].ell,
                        basis[a].tableau,
                        basis[b].m,
                        basis[b].ell,
                        basis[b].tableau,
                        format_rat(&ip)
                    ),
                ));
            }
            pairs_total += dim * (dim - 1) / 2;
            let bad_eigen = basis.par_iter().find_map_any(|entry| {
                let image = chain::apply_k_with_cap(entry.vector(), max_n).expect("capped");
                let expect = entry.vector().scale(&entry.eigenvalue);
                if image != expect {
                    Some(format!(
                        "n = {n}: K f != beta f at ({}, {}, {})",
                        entry.m, entry.ell, entry.tableau
                    ))
                } else {
                    None
                }
            });
            if let Some(msg) = bad_eigen {
                return Ok((false, msg));
            }
        }
        Ok((
            true,
            format!("{pairs_total} pairwise products zero; all eigenvalue relations exact"),
        ))
    })
}

/// Criterion: closed-form squared norms equal the inner products,
/// exhaustively for `n <= 8`, on 1000 seeded random indices for n = 9, 10.
pub fn check_norm_closed_form(seed: u64) -> CheckReport {
    CheckReport::run("norm-closed-form", || {
        for n in 1..=8usize {
            for m in 0..=n / 2 {
                for q in Tableau::enumerate(n, m)? {
                    for ell in 0..=(n - 2 * m) {
                        let f = f_vector(m, ell, &q)?;
                        if f.inner_product(&f)? != sq_norm_closed(m, ell, &q)? {
                            return Ok((
                                false,
                                format!("norm mismatch at (n,m,ell,Q)=({n},{m},{ell},{q})"),
                            ));
                        }
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for n in [9usize, 10] {
            let mut indices = Vec::new();
            for m in 0..=n / 2 {
                for q in Tableau::enumerate(n, m)? {
                    for ell in 0..=(n - 2 * m) {
                        indices.push((m, ell, q.clone()));
                    }
                }
            }
            let samples: Vec<_> = (0..1000)
                .map(|_| indices[rng.gen_range(0..indices.len())].clone())
                .collect();
            let bad = samples.par_iter().find_map_any(|(m, ell, q)| {
                let f = f_vector(*m, *ell, q).expect("valid index");
                let ip = f.inner_product(&f).expect("same n");
                if ip != sq_norm_closed(*m, *ell, q).expect("valid index") {
                    Some(format!("norm mismatch at (n,m,ell,Q)=({n},{m},{ell},{q})"))
                } else {
                    None
                }
            });
            if let Some(msg) = bad {
                return Ok((false, msg));
            }
        }
        Ok((
            true,
            "exhaustive n <= 8 plus 1000 seeded samples at n = 9, 10".into(),
        ))
    })
}

/// Criterion: clustered numeric spectra match the closed-form eigenvalue
/// multiplicities for `n <= 10`.
pub fn check_spectrum_multiplicities() -> CheckReport {
    CheckReport::run("spectrum-multiplicities", || {
        for n in 1..=10usize {
            let got = numeric_spectrum(n)?;
            let want = chain::expected_spectrum(n);
            if got.len() != want.len() {
                return Ok((
                    false,
                    format!("n = {n}: {} clusters, expected {}", got.len(), want.len()),
                ));
            }
            for (cluster, (ev, mult)) in got.iter().zip(&want) {
                let target = crate::scalar::rat_to_f64(ev);
                if (cluster.value - target).abs() > 1e-7 || cluster.multiplicity != *mult {
                    return Ok((
                        false,
                        format!(
                            "n = {n}: cluster ({:.12}, {}) vs expected ({target:.12}, {mult})",
                            cluster.value, cluster.multiplicity
                        ),
                    ));
                }
            }
        }
        Ok((true, "multiplicity patterns match for n = 1..=10".into()))
    })
}

/// Criterion: the one-ones chi-square lies in the exact sandwich
/// `5 (1/4)^{2s} <= chi <= 270 (1/4)^{2s}` for `3 <= n <= 200`,
/// `3 <= s <= 10`, and the leading coefficient at n = 500 is within 5% of 35.
pub fn check_one_ones_sandwich() -> CheckReport {
    CheckReport::run("one-ones-sandwich", || {
        let bad = (3usize..=200).into_par_iter().find_map_any(|n| {
            let profile = one_ones_profile(n).expect("valid n");
            for s in 3u32..=10 {
                let chi: Rat = profile.iter().map(|(ev, w)| w * ev.pow(2 * s as i32)).sum();
                let unit = ratio(1, 4).pow(2 * s as i32);
                if chi < rat(5) * &unit || chi > rat(270) * &unit {
                    return Some(format!("sandwich fails at (n, s) = ({n}, {s})"));
                }
            }
            None
        });
        if let Some(msg) = bad {
            return Ok((false, msg));
        }
        let c = one_ones_leading_coefficient(500)?;
        let err = (&c - rat(35)).abs() / rat(35);
        if err > ratio(1, 20) {
            return Ok((
                false,
                format!(
                    "leading coefficient {} misses 35 by more than 5%",
                    format_rat(&c)
                ),
            ));
        }
        Ok((
            true,
            format!(
                "1584 exact comparisons hold; coefficient at n = 500 is {} (~{:.4})",
                format_rat(&c),
                crate::scalar::rat_to_f64(&c)
            ),
        ))
    })
}

/// Independent chi-square route: dense transition matrix powers.
pub fn chi_square_dense_oracle(x: &Subset, s: u32) -> Result<Rat, Error> {
    let n = x.n();
    if n > chain::DENSE_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: chain::DENSE_CAP,
        });
    }
    let states: Vec<Subset> = Subset::all(n).collect();
    let mut cache = EntryCache::new();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(states.len());
    for a in &states {
        let mut row = Vec::with_capacity(states.len());
        for b in &states {
            row.push(cache.entry(a, b)?);
        }
        rows.push(row);
    }
    let mut dist: Vec<Rat> = states.iter().map(|t| rat((t == x) as i64)).collect();
    for _ in 0..s {
        let mut next = vec![Rat::zero(); states.len()];
        for (a, weight) in dist.iter().enumerate() {
            if weight.is_zero() {
                continue;
            }
            for (b, entry) in rows[a].iter().enumerate() {
                next[b] += weight * entry;
            }
        }
        dist = next;
    }
    let mut chi = Rat::zero();
    for (idx, t) in states.iter().enumerate() {
        let pi = chain::stationary_probability(t);
        let diff = &dist[idx] - &pi;
        chi += &diff * &diff / pi;
    }
    Ok(chi)
}

/// Criterion: the eigenbasis chi-square equals the matrix-power definition
/// for every start, `n <= 6`, `s <= 4`.
pub fn check_chi_square_oracle() -> CheckReport {
    CheckReport::run("chi-square-oracle", || {
        for n in 1..=6usize {
            let bad = Subset::all(n)
                .collect::<Vec<_>>()
                .into_par_iter()
                .find_map_any(|x| {
                    for s in 1u32..=4 {
                        let eigen = chi_square(&ChainState::from_subset(&x), s)
                            .expect("within cap")
                            .chi_square;
                        let dense = chi_square_dense_oracle(&x, s).expect("within cap");
                        if eigen != dense {
                            return Some(format!("mismatch at n = {n}, start {x}, s = {s}"));
                        }
                    }
                    None
                });
            if let Some(msg) = bad {
                return Ok((false, msg));
            }
        }
        Ok((
            true,
            "both routes agree for all starts, n <= 6, s <= 4".into(),
        ))
    })
}

/// Criterion: Hahn orthogonality (diagonal and off-diagonal, `N <= 12`,
/// `alpha = beta = m <= 3`) and the scalar identity tying the polynomial
/// values to `T_{m,n}^{(ell)}(i)` for `n <= 10`.
pub fn check_hahn_identities() -> CheckReport {
    CheckReport::run("hahn-identities", || {
        for big_n in 1..=12usize {
            for m in 0..=3usize {
                for ell in 0..=big_n {
                    for ell2 in ell..=big_n {
                        let lhs = hahn_orthogonality_sum(big_n, m, m, ell, ell2)?;
                        let rhs = if ell == ell2 {
                            hahn_norm_rhs(big_n, m, m, ell)
                        } else {
                            rat(0)
                        };
                        if lhs != rhs {
                            return Ok((
                                false,
                                format!(
                                    "orthogonality fails at (N,m,l,l')=({big_n},{m},{ell},{ell2})"
                                ),
                            ));
                        }
                    }
                }
            }
        }
        // Q_{n-2m; m,m}^{ell}(i) = (-1)^m T_{m,n}^{(ell)}(i) / (C(n-2m,ell) C(2m+ell,m))
        for n in 1..=10usize {
            for m in 0..=n / 2 {
                let lim = n - 2 * m;
                for ell in 0..=lim {
                    for i in 0..=lim {
                        let q = hahn_eval(HahnSpec::new(lim, m, m, ell)?, i)?;
                        let t = Rat::from_integer(t_scalar(m, n, ell, i)?);
                        let scale = Rat::from_integer(
                            binomial(lim as i64, ell as i64)
                                * binomial((2 * m + ell) as i64, m as i64),
                        );
                        let signed = if m % 2 == 0 { t } else { -t };
                        if q * scale != signed {
                            return Ok((
                                false,
                                format!("scalar identity fails at (n,m,ell,i)=({n},{m},{ell},{i})"),
                            ));
                        }
                    }
                }
            }
        }
        Ok((
            true,
            "orthogonality N <= 12 and scalar identity n <= 10, all exact".into(),
        ))
    })
}

/// Criterion: the lumping identity holds entrywise for `2 <= n <= 8` and a
/// single perturbed entry is detected.
pub fn check_lumping_identity(max_n: usize) -> CheckReport {
    CheckReport::run("lumping-identity", || {
        let mut entries = 0usize;
        for n in 2..=max_n.max(2) {
            let report = check_lumping(n)?;
            if !report.holds() {
                let v = &report.violations[0];
                return Ok((
                    false,
                    format!("lumping fails at n = {n}, entry ({}, {})", v.row, v.col),
                ));
            }
            entries += report.entries_checked;
        }
        // negative control: bump one entry and expect a detection
        let target_row = Subset::parse("0110").expect("valid");
        let target_col = Subset::parse("1100").expect("valid");
        let perturbed = check_lumping_with_entry(4, |x, y| {
            let mut e = k_entry_from_stats(&PairStats::of_subsets(x, y).expect("same n"));
            if *x == target_row && *y == target_col {
                e += ratio(1, 977);
            }
            e
        })?;
        if perturbed.holds() {
            return Ok((false, "perturbed entry was not detected".into()));
        }
        Ok((
            true,
            format!(
                "{entries} entries verified for n = 2..={}; negative control detected",
                max_n.max(2)
            ),
        ))
    })
}

/// The displayed expansion term lists for n = 4 and n = 6.
const EXPANSION_N4: [(usize, usize, usize, &str); 6] = [
    (4, 0, 0, "1"),
    (2, 2, 0, "1/4"),
    (2, 0, 2, "1/4"),
    (0, 4, 0, "9/64"),
    (0, 0, 4, "9/64"),
    (0, 2, 2, "1/64"),
];

const EXPANSION_N6: [(usize, usize, usize, &str); 10] = [
    (6, 0, 0, "1"),
    (4, 2, 0, "1/4"),
    (4, 0, 2, "1/4"),
    (2, 4, 0, "9/64"),
    (2, 0, 4, "9/64"),
    (2, 2, 2, "1/64"),
    (0, 6, 0, "25/256"),
    (0, 0, 6, "25/256"),
    (0, 2, 4, "1/256"),
    (0, 4, 2, "1/256"),
];

/// Criterion: the projector expansion reproduces the transition matrix
/// entrywise for `n <= max_n`, with the displayed n = 4 and n = 6 term
/// lists matched exactly.
pub fn check_sl2_expansion(max_n: usize) -> CheckReport {
    CheckReport::run("sl2-expansion", || {
        for n in 1..=max_n {
            let report = verify_sl2_conjecture(n)?;
            if !report.holds() {
                let v = report.first_violation.expect("violation recorded");
                return Ok((
                    false,
                    format!(
                        "expansion fails at n = {n}, stats {:?}: {} vs {}",
                        v.stats,
                        format_rat(&v.lhs),
                        format_rat(&v.rhs)
                    ),
                ));
            }
            if !report.diagonal_coefficients_match_beta {
                return Ok((false, format!("c_{{2k,0}} != beta_k at n = {n}")));
            }
        }
        for (n, expect) in [(4usize, &EXPANSION_N4[..]), (6, &EXPANSION_N6[..])] {
            let terms = expansion_terms(n);
            if terms.len() != expect.len() {
                return Ok((false, format!("term count at n = {n}: {}", terms.len())));
            }
            for (x, y, z, c) in expect {
                let found = terms.iter().any(|t| {
                    t.x == *x
                        && t.y == *y
                        && t.z == *z
                        && t.coefficient == parse_rat(c).expect("literal")
                });
                if !found {
                    return Ok((
                        false,
                        format!("term c f({x},{y},{z}) = {c} missing at n = {n}"),
                    ));
                }
            }
        }
        Ok((
            true,
            format!("entrywise equality for n = 1..={max_n}; displayed term lists match"),
        ))
    })
}

/// Criterion: the triple-sum identity vanishes on its full range
/// (`n <= 12`), the telescoping certificates hold on the full lattice for
/// `n <= 8`, and the `n = 2m` base case is zero.
pub fn check_wz_appendix() -> CheckReport {
    CheckReport::run("wz-appendix", || {
        let tuples: Vec<(usize, usize, usize, usize)> = (0..=12usize)
            .flat_map(|n| {
                (0..=n / 2).flat_map(move |m| {
                    let lim = n - 2 * m;
                    (0..=lim).flat_map(move |l1| {
                        (0..=lim)
                            .filter(move |&l2| l1 != l2)
                            .map(move |l2| (n, m, l1, l2))
                    })
                })
            })
            .collect();
        let bad = tuples.par_iter().find_map_any(|&(n, m, l1, l2)| {
            let sum = brute_force_identity(n, m, l1, l2).expect("valid tuple");
            if sum.is_zero() {
                None
            } else {
                Some(format!(
                    "triple sum nonzero at (n,m,l1,l2)=({n},{m},{l1},{l2})"
                ))
            }
        });
        if let Some(msg) = bad {
            return Ok((false, msg));
        }
        // base case of the n-independence argument: at n = 2m every lattice
        // summand vanishes even for out-of-range degree pairs
        for m in 0..=6i64 {
            for l1 in 0..=6i64 {
                for l2 in 0..=6i64 {
                    if l1 == l2 {
                        continue;
                    }
                    let p = WZPoint {
                        n: 2 * m,
                        m,
                        l1,
                        l2,
                        i: 0,
                        j1: 0,
                        j2: 0,
                    };
                    if !summand_p(&p).is_zero() {
                        return Ok((
                            false,
                            format!("base case fails at m = {m}, (l1, l2) = ({l1}, {l2})"),
                        ));
                    }
                }
            }
        }
        let report = check_certificates(8);
        if !report.holds() {
            let detail = if let Some(v) = &report.first_violation {
                format!(
                    "telescoping fails at {:?}: {} vs {}",
                    v.point,
                    format_rat(&v.lhs),
                    format_rat(&v.rhs)
                )
            } else if !report.pole_points.is_empty() {
                format!("certificate pole at {:?}", report.pole_points[0])
            } else if !report.antisymmetry_holds {
                "antisymmetry at i = 0 fails".into()
            } else {
                "a boundary certificate value is nonzero".into()
            };
            return Ok((false, detail));
        }
        Ok((
            true,
            format!(
                "{} telescoping points hold; boundary values vanish across {} antisymmetric pairs",
                report.points_checked, report.antisymmetry_pairs
            ),
        ))
    })
}

/// Criterion: one-step empirical frequencies from every n = 6 start match
/// the exact rows within total variation 0.005 at 10^6 draws per start
/// (fixed seed), pass a chi-square goodness-of-fit test at p > 0.001, and
/// long-run orbit occupancy is uniform within 0.01.
///
/// The 0.005 tolerance is calibrated for 10^6 draws; running with fewer
/// draws scales it by `sqrt(10^6 / draws)` so reduced smoke runs stay
/// meaningful without weakening the full-size criterion.
pub fn check_sampler_statistics(seed: u64, draws: usize) -> CheckReport {
    CheckReport::run("sampler-statistics", || {
        let one_step_tol = 0.005 * (1_000_000f64 / draws as f64).sqrt().max(1.0);
        // 99.9th percentile of chi-square with 2^6 - 1 = 63 degrees of freedom
        let gof_critical = 103.44;
        let n = 6usize;
        let starts: Vec<Subset> = Subset::all(n).collect();
        let (worst, worst_gof) = starts
            .par_iter()
            .enumerate()
            .map(|(idx, x)| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64));
                let start = ChainState::from_subset(x);
                let mut counts: HashMap<u32, usize> = HashMap::new();
                for _ in 0..draws {
                    let y = sample_step(&start, &mut rng);
                    *counts
                        .entry(y.to_subset().expect("binary").bits())
                        .or_default() += 1;
                }
                let mut tv = 0.0f64;
                let mut gof = 0.0f64;
                let mut cache = EntryCache::new();
                for y in Subset::all(n) {
                    let exact = crate::scalar::rat_to_f64(&cache.entry(x, &y).expect("same n"));
                    let obs = counts.get(&y.bits()).copied().unwrap_or(0) as f64;
                    let expect = exact * draws as f64;
                    tv += (exact - obs / draws as f64).abs();
                    gof += (obs - expect) * (obs - expect) / expect;
                }
                ((tv / 2.0, *x), (gof, *x))
            })
            .reduce(
                || ((0.0, starts[0]), (0.0, starts[0])),
                |a, b| {
                    (
                        if a.0 .0 >= b.0 .0 { a.0 } else { b.0 },
                        if a.1 .0 >= b.1 .0 { a.1 } else { b.1 },
                    )
                },
            );
        if worst.0 >= one_step_tol {
            return Ok((
                false,
                format!(
                    "one-step TV {:.5} from start {} exceeds {one_step_tol}",
                    worst.0, worst.1
                ),
            ));
        }
        if worst_gof.0 >= gof_critical {
            return Ok((
                false,
                format!(
                    "goodness-of-fit X^2 = {:.2} from start {} exceeds {gof_critical} (p < 0.001)",
                    worst_gof.0, worst_gof.1
                ),
            ));
        }
        // long-run orbit occupancy
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0xabcd));
        let mut state = ChainState::zeros(n, 2)?;
        let burn_in = 10_000usize;
        let steps = 1_000_000usize;
        for _ in 0..burn_in {
            state = sample_step(&state, &mut rng);
        }
        let mut orbit_counts = vec![0usize; n + 1];
        for _ in 0..steps {
            state = sample_step(&state, &mut rng);
            let ones = state.letters().iter().filter(|&&l| l == 1).count();
            orbit_counts[ones] += 1;
        }
        let mut orbit_tv = 0.0f64;
        for c in &orbit_counts {
            orbit_tv += (*c as f64 / steps as f64 - 1.0 / (n as f64 + 1.0)).abs();
        }
        orbit_tv /= 2.0;
        if orbit_tv >= 0.01 {
            return Ok((
                false,
                format!("orbit occupancy TV {orbit_tv:.5} exceeds 0.01"),
            ));
        }
        Ok((
            true,
            format!(
                "worst one-step TV {:.5} (start {}); worst X^2 {:.1}; orbit TV {:.5}",
                worst.0, worst.1, worst_gof.0, orbit_tv
            ),
        ))
    })
}

/// Runs the whole suite in criterion order. The dense operator checks are
/// specified at `n <= 8` and stay clamped there.
pub fn run_all(config: &VerifyConfig) -> Vec<CheckReport> {
    vec![
        check_reference_tables(),
        check_orthogonal_eigenbasis(config.max_n.min(8)),
        check_norm_closed_form(config.seed),
        check_spectrum_multiplicities(),
        check_one_ones_sandwich(),
        check_chi_square_oracle(),
        check_hahn_identities(),
        check_lumping_identity(config.max_n.min(8)),
        check_sl2_expansion(if config.slow { 10 } else { config.max_n.min(8) }),
        check_wz_appendix(),
        check_sampler_statistics(config.seed, config.sampler_draws),
    ]
}

/// Exact expected count of basis elements, for sanity assertions.
pub fn basis_cardinality(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for m in 0..=(n / 2) {
        let tableaux = crate::tableaux::shape_dimension(n, m);
        total += tableaux * BigInt::from(n as i64 - 2 * m as i64 + 1);
    }
    total
}
