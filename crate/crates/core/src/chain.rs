//! The Burnside transition operator on binary (and general-alphabet)
//! strings: exact closed-form entries, operator application, stationary
//! distribution, the lumping identity, Monte-Carlo samplers, and a
//! floating-point spectrum oracle.
//!
//! One step of the process from `x`: draw a uniform permutation stabilizing
//! `x` (an independent uniform shuffle within each letter class), break it
//! into cycles, and give every cycle an independent uniform letter.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::scalar::{binomial, rat, Rat};
use crate::{Error, Subset, TensorVector};

/// Default cap for operations that generate dense `2^n x 2^n` data.
pub const DENSE_CAP: usize = 8;
/// Cap for the floating-point spectrum oracle.
pub const SPECTRUM_CAP: usize = 10;

/// Nonzero eigenvalue `beta_k = C(2k,k)^2 / 2^{4k}` (`beta_0 = 1`).
pub fn beta(k: usize) -> Rat {
    let c = binomial(2 * k as i64, k as i64);
    Rat::new(&c * &c, BigInt::one() << (4 * k))
}

/// Coordinate-pair counts of a state pair `(x, y)`:
/// `n_ab = #{i : x_i = a, y_i = b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairStats {
    pub n00: usize,
    pub n01: usize,
    pub n10: usize,
    pub n11: usize,
}

impl PairStats {
    pub fn total(&self) -> usize {
        self.n00 + self.n01 + self.n10 + self.n11
    }

    /// Stats of two binary states given as subsets of one-coordinates.
    pub fn of_subsets(x: &Subset, y: &Subset) -> Result<Self, Error> {
        if x.n() != y.n() {
            return Err(Error::DimensionMismatch(x.n(), y.n()));
        }
        let n = x.n();
        let n11 = x.intersection_size(y);
        let n10 = x.size() - n11;
        let n01 = y.size() - n11;
        Ok(PairStats {
            n00: n - n11 - n10 - n01,
            n01,
            n10,
            n11,
        })
    }

    /// All compositions of `n` into four counts, in lexicographic order.
    pub fn all(n: usize) -> Vec<PairStats> {
        let mut out = Vec::new();
        for n00 in 0..=n {
            for n01 in 0..=(n - n00) {
                for n10 in 0..=(n - n00 - n01) {
                    out.push(PairStats {
                        n00,
                        n01,
                        n10,
                        n11: n - n00 - n01 - n10,
                    });
                }
            }
        }
        out
    }
}

/// A state of the chain over an alphabet of size `k` (`k = 2` for the exact
/// theory; only the sampler supports general `k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainState {
    k: usize,
    letters: Vec<u8>,
}

impl ChainState {
    pub fn new(k: usize, letters: Vec<u8>) -> Result<Self, Error> {
        if !(2..=255).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "alphabet size {k} outside 2..=255"
            )));
        }
        if letters.is_empty() {
            return Err(Error::InvalidArgument(
                "state must have at least one coordinate".into(),
            ));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= k) {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} outside alphabet 0..{k}"
            )));
        }
        Ok(ChainState { k, letters })
    }

    /// The all-zeros state.
    pub fn zeros(n: usize, k: usize) -> Result<Self, Error> {
        Self::new(k, vec![0; n])
    }

    /// The binary state with ones at the subset's coordinates.
    pub fn from_subset(s: &Subset) -> Self {
        ChainState {
            k: 2,
            letters: (1..=s.n()).map(|c| s.contains(c) as u8).collect(),
        }
    }

    /// The binary one-ones state `e_n` (single one in the last coordinate).
    pub fn one_ones(n: usize) -> Result<Self, Error> {
        let mut letters = vec![0u8; n];
        *letters.last_mut().ok_or_else(|| {
            Error::InvalidArgument("state must have at least one coordinate".into())
        })? = 1;
        Self::new(2, letters)
    }

    /// Parses a binary string, coordinate 1 leftmost.
    pub fn parse_binary(s: &str) -> Result<Self, Error> {
        Ok(Self::from_subset(&Subset::parse(s)?))
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Number of coordinates carrying each letter.
    pub fn letter_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.k];
        for &l in &self.letters {
            counts[l as usize] += 1;
        }
        counts
    }

    /// The subset of one-coordinates (binary states only).
    pub fn to_subset(&self) -> Result<Subset, Error> {
        if self.k != 2 {
            return Err(Error::UnsupportedAlphabet(self.k));
        }
        let members: Vec<usize> = (1..=self.n())
            .filter(|&c| self.letters[c - 1] == 1)
            .collect();
        Subset::from_members(self.n(), &members)
    }
}

impl std::fmt::Display for ChainState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.k <= 10 {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Exact transition probability from the pair counts:
/// `C(2n00,n00) C(2n01,n01) C(2n10,n10) C(2n11,n11)
///  / (4^n C(n00+n01, n00) C(n10+n11, n10))`.
pub fn k_entry_from_stats(st: &PairStats) -> Rat {
    let n = st.total();
    let num = binomial(2 * st.n00 as i64, st.n00 as i64)
        * binomial(2 * st.n01 as i64, st.n01 as i64)
        * binomial(2 * st.n10 as i64, st.n10 as i64)
        * binomial(2 * st.n11 as i64, st.n11 as i64);
    let den = (BigInt::one() << (2 * n))
        * binomial((st.n00 + st.n01) as i64, st.n00 as i64)
        * binomial((st.n10 + st.n11) as i64, st.n10 as i64);
    Rat::new(num, den)
}

/// Exact transition probability between two binary states.
pub fn k_entry(x: &ChainState, y: &ChainState) -> Result<Rat, Error> {
    if x.k() != 2 || y.k() != 2 {
        return Err(Error::UnsupportedAlphabet(x.k().max(y.k())));
    }
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch(x.n(), y.n()));
    }
    Ok(k_entry_from_stats(&PairStats::of_subsets(
        &x.to_subset()?,
        &y.to_subset()?,
    )?))
}

/// Stationary probability `pi(x) = 1 / ((n+1) C(n, |x|))`.
pub fn stationary_probability(x: &Subset) -> Rat {
    Rat::new(
        BigInt::one(),
        BigInt::from(x.n() as i64 + 1) * binomial(x.n() as i64, x.size() as i64),
    )
}

/// Entry cache keyed by pair stats; there are only `C(n+3, 3)` classes.
pub struct EntryCache {
    cache: HashMap<PairStats, Rat>,
}

impl EntryCache {
    pub fn new() -> Self {
        EntryCache {
            cache: HashMap::new(),
        }
    }

    pub fn entry(&mut self, x: &Subset, y: &Subset) -> Result<Rat, Error> {
        let st = PairStats::of_subsets(x, y)?;
        Ok(self
            .cache
            .entry(st)
            .or_insert_with(|| k_entry_from_stats(&st))
            .clone())
    }
}

impl Default for EntryCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Applies the transition operator: `(Kv)(x) = sum_y K(x, y) v(y)`.
/// Rows are generated on demand from pair counts; capped at [`DENSE_CAP`].
pub fn apply_k(v: &TensorVector) -> Result<TensorVector, Error> {
    apply_k_with_cap(v, DENSE_CAP)
}

/// As [`apply_k`] with an explicit cap override.
pub fn apply_k_with_cap(v: &TensorVector, cap: usize) -> Result<TensorVector, Error> {
    let n = v.n();
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    let mut cache = EntryCache::new();
    let mut terms = Vec::new();
    for x in Subset::all(n) {
        let mut acc = Rat::zero();
        for (y, c) in v.terms() {
            acc += cache.entry(&x, y)? * c;
        }
        if !acc.is_zero() {
            terms.push((x, acc));
        }
    }
    TensorVector::from_terms(n, terms)
}

/// Outcome of the lumping-identity check
/// `K_n (I^{(n-1)} ⊗ K_1) = K_{n-1} ⊗ K_1`, verified entrywise.
#[derive(Debug, Clone)]
pub struct LumpingReport {
    pub n: usize,
    pub entries_checked: usize,
    pub violations: Vec<LumpingViolation>,
}

#[derive(Debug, Clone)]
pub struct LumpingViolation {
    pub row: String,
    pub col: String,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl LumpingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the lumping identity for the exact chain.
pub fn check_lumping(n: usize) -> Result<LumpingReport, Error> {
    check_lumping_with_entry(n, |x, y| {
        k_entry_from_stats(&PairStats::of_subsets(x, y).expect("same n"))
    })
}

/// As [`check_lumping`] with the `K_n` entries supplied by a closure; used
/// for negative controls that perturb a single entry.
pub fn check_lumping_with_entry(
    n: usize,
    entry_n: impl Fn(&Subset, &Subset) -> Rat,
) -> Result<LumpingReport, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument("lumping needs n >= 2".into()));
    }
    if n > DENSE_CAP {
        return Err(Error::SizeCapExceeded { n, cap: DENSE_CAP });
    }
    let half = rat(1) / rat(2);
    let mut violations = Vec::new();
    let mut entries_checked = 0;
    let mut small_cache = EntryCache::new();
    for xa in Subset::all(n) {
        for y in Subset::all(n - 1) {
            // row sum of K_n over the two extensions of y
            let y0 = extend(&y, false);
            let y1 = extend(&y, true);
            let lumped = entry_n(&xa, &y0) + entry_n(&xa, &y1);
            let x = restrict(&xa);
            let rhs_base = small_cache.entry(&x, &y)?;
            for b in [false, true] {
                let yb = extend(&y, b);
                let lhs = &lumped * &half;
                let rhs = &rhs_base * &half;
                entries_checked += 1;
                if lhs != rhs {
                    violations.push(LumpingViolation {
                        row: xa.to_string(),
                        col: yb.to_string(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(LumpingReport {
        n,
        entries_checked,
        violations,
    })
}

fn extend(y: &Subset, last: bool) -> Subset {
    let n = y.n() + 1;
    let bits = y.bits() | if last { 1 << (n - 1) } else { 0 };
    Subset::from_bits(n, bits).expect("extension stays in range")
}

fn restrict(x: &Subset) -> Subset {
    let n = x.n() - 1;
    Subset::from_bits(n, x.bits() & ((1 << n) - 1)).expect("restriction stays in range")
}

/// Draws a uniform element of the stabilizer of `x` (independent uniform
/// shuffles within each letter class), as a one-line permutation.
pub fn sample_stabilizer_permutation<R: Rng + ?Sized>(x: &ChainState, rng: &mut R) -> Vec<usize> {
    let n = x.n();
    let mut perm = vec![0usize; n];
    for letter in 0..x.k() {
        let class: Vec<usize> = (0..n)
            .filter(|&i| x.letters()[i] as usize == letter)
            .collect();
        let mut image = class.clone();
        image.shuffle(rng);
        for (&pos, &img) in class.iter().zip(image.iter()) {
            perm[pos] = img;
        }
    }
    perm
}

/// One Burnside step: sample a stabilizer permutation, split it into cycles,
/// and give each cycle an independent uniform letter.
pub fn sample_step<R: Rng + ?Sized>(x: &ChainState, rng: &mut R) -> ChainState {
    let n = x.n();
    let perm = sample_stabilizer_permutation(x, rng);
    let mut letters = vec![0u8; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let letter = rng.gen_range(0..x.k()) as u8;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            letters[p] = letter;
            p = perm[p];
        }
    }
    ChainState::new(x.k(), letters).expect("letters stay in alphabet")
}

/// One cluster of numerically computed eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueCluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Floating-point spectrum of the dense row-generated transition matrix,
/// clustered with the given tolerance and sorted descending. This is an
/// independent oracle for the exact multiplicity formulas.
pub fn numeric_spectrum(n: usize) -> Result<Vec<EigenvalueCluster>, Error> {
    numeric_spectrum_with_tolerance(n, 1e-9)
}

pub fn numeric_spectrum_with_tolerance(
    n: usize,
    tol: f64,
) -> Result<Vec<EigenvalueCluster>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > SPECTRUM_CAP {
        return Err(Error::SizeCapExceeded {
            n,
            cap: SPECTRUM_CAP,
        });
    }
    let dim = 1usize << n;
    let states: Vec<Subset> = Subset::all(n).collect();
    let sqrt_pi: Vec<f64> = states
        .iter()
        .map(|s| crate::scalar::rat_to_f64(&stationary_probability(s)).sqrt())
        .collect();
    let mut cache: HashMap<PairStats, f64> = HashMap::new();
    // symmetrized conjugate D^{1/2} K D^{-1/2}; reversibility makes it symmetric
    let mut mat = DMatrix::<f64>::zeros(dim, dim);
    for (ix, x) in states.iter().enumerate() {
        for (iy, y) in states.iter().enumerate() {
            let st = PairStats::of_subsets(x, y)?;
            let k = *cache
                .entry(st)
                .or_insert_with(|| crate::scalar::rat_to_f64(&k_entry_from_stats(&st)));
            mat[(ix, iy)] = sqrt_pi[ix] * k / sqrt_pi[iy];
        }
    }
    let mut eigs: Vec<f64> = mat.symmetric_eigenvalues().iter().cloned().collect();
    eigs.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    let mut clusters: Vec<EigenvalueCluster> = Vec::new();
    for e in eigs {
        match clusters.last_mut() {
            Some(c) if (c.value - e).abs() <= tol => {
                c.multiplicity += 1;
            }
            _ => clusters.push(EigenvalueCluster {
                value: e,
                multiplicity: 1,
            }),
        }
    }
    Ok(clusters)
}

/// The exact spectrum `(eigenvalue, multiplicity)` sorted descending:
/// `1` once, `beta_k` with multiplicity `C(n, 2k)`, `0` with `2^{n-1}`.
pub fn expected_spectrum(n: usize) -> Vec<(Rat, usize)> {
    use num_traits::ToPrimitive;
    let mut out = vec![(rat(1), 1usize)];
    for k in 1..=(n / 2) {
        out.push((
            beta(k),
            binomial(n as i64, 2 * k as i64).to_usize().unwrap(),
        ));
    }
    if n >= 1 {
        out.push((rat(0), 1 << (n - 1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn beta_values() {
        assert_eq!(beta(0), rat(1));
        assert_eq!(beta(1), ratio(1, 4));
        assert_eq!(beta(2), ratio(9, 64));
        assert_eq!(beta(3), ratio(400, 4096));
    }

    #[test]
    fn k1_is_all_half() {
        for x in ["0", "1"] {
            for y in ["0", "1"] {
                let e = k_entry(
                    &ChainState::parse_binary(x).unwrap(),
                    &ChainState::parse_binary(y).unwrap(),
                )
                .unwrap();
                assert_eq!(e, ratio(1, 2));
            }
        }
    }

    #[test]
    fn diagonal_entry_from_zero_state() {
        for n in 1..=8usize {
            let zero = ChainState::zeros(n, 2).unwrap();
            let e = k_entry(&zero, &zero).unwrap();
            let expect = Rat::new(binomial(2 * n as i64, n as i64), BigInt::one() << (2 * n));
            assert_eq!(e, expect);
        }
    }

    #[test]
    fn rows_sum_to_one_and_reversibility() {
        for n in 1..=8usize {
            let mut cache = EntryCache::new();
            for x in Subset::all(n) {
                let mut sum = Rat::zero();
                for y in Subset::all(n) {
                    sum += cache.entry(&x, &y).unwrap();
                }
                assert_eq!(sum, rat(1), "row {x}");
            }
            for x in Subset::all(n) {
                for y in Subset::all(n) {
                    let kxy = cache.entry(&x, &y).unwrap();
                    let kyx = cache.entry(&y, &x).unwrap();
                    assert_eq!(
                        stationary_probability(&x) * kxy,
                        stationary_probability(&y) * kyx
                    );
                }
            }
        }
    }

    #[test]
    fn permutation_invariance_of_entries() {
        for n in 2..=6usize {
            for x in Subset::all(n) {
                for y in Subset::all(n).step_by(3) {
                    for (i, j) in [(1usize, 2usize), (1, n), (2, n)] {
                        if i == j {
                            continue;
                        }
                        let a = k_entry_from_stats(&PairStats::of_subsets(&x, &y).unwrap());
                        let b = k_entry_from_stats(
                            &PairStats::of_subsets(&x.swap(i, j), &y.swap(i, j)).unwrap(),
                        );
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn stationary_examples() {
        assert_eq!(
            stationary_probability(&Subset::parse("011").unwrap()),
            ratio(1, 12)
        );
        for n in 1..=8usize {
            assert_eq!(
                stationary_probability(&Subset::empty(n).unwrap()),
                ratio(1, n as i64 + 1)
            );
            let total: Rat = Subset::all(n).map(|s| stationary_probability(&s)).sum();
            assert_eq!(total, rat(1));
        }
    }

    #[test]
    fn stochasticity_fixes_all_ones_vector() {
        for n in 1..=6 {
            let ones = TensorVector::from_terms(n, Subset::all(n).map(|s| (s, rat(1)))).unwrap();
            assert_eq!(apply_k(&ones).unwrap(), ones);
        }
    }

    #[test]
    fn apply_k_eigenvector_relations() {
        use crate::eigenbasis::{f_lifted, f_vector};
        use crate::Tableau;
        for n in 1..=6 {
            for m in 0..=n / 2 {
                for q in Tableau::enumerate(n, m).unwrap() {
                    for ell in 0..=(n - 2 * m) {
                        let f = f_vector(m, ell, &q).unwrap();
                        let expect = if (m + ell) % 2 == 0 {
                            f.scale(&beta((m + ell) / 2))
                        } else {
                            TensorVector::zero(n).unwrap()
                        };
                        assert_eq!(apply_k(&f).unwrap(), expect);
                    }
                }
            }
            for s in Subset::all(n) {
                if s.size() % 2 == 1 {
                    let lifted = f_lifted(s);
                    assert!(apply_k(&lifted).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn apply_k_cap() {
        let v = TensorVector::basis(Subset::empty(9).unwrap());
        assert!(matches!(
            apply_k(&v),
            Err(Error::SizeCapExceeded { n: 9, cap: 8 })
        ));
        assert!(apply_k_with_cap(&v, 9).is_ok());
    }

    #[test]
    fn lumping_holds_small() {
        for n in 2..=5 {
            let report = check_lumping(n).unwrap();
            assert!(report.holds(), "n = {n}");
            assert_eq!(report.entries_checked, (1 << n) * (1 << n));
        }
    }

    #[test]
    fn lumping_negative_control() {
        // perturbing any single entry must be detected
        let n = 3;
        let target = (Subset::parse("010").unwrap(), Subset::parse("110").unwrap());
        let report = check_lumping_with_entry(n, |x, y| {
            let mut e = k_entry_from_stats(&PairStats::of_subsets(x, y).unwrap());
            if (*x, *y) == target {
                e += ratio(1, 1000);
            }
            e
        })
        .unwrap();
        assert!(!report.holds());
        assert!(report
            .violations
            .iter()
            .all(|v| v.row == "010" && (v.col == "110" || v.col == "111")));
    }

    #[test]
    fn stabilizer_permutation_preserves_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let x = ChainState::new(3, vec![0, 1, 2, 1, 0, 2, 2, 1]).unwrap();
            let perm = sample_stabilizer_permutation(&x, &mut rng);
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..8).collect::<Vec<_>>());
            for (pos, &img) in perm.iter().enumerate() {
                assert_eq!(x.letters()[pos], x.letters()[img]);
            }
        }
    }

    #[test]
    fn uniform_permutation_from_constant_state() {
        // from the all-zeros state the stabilizer is the whole group
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = ChainState::zeros(3, 2).unwrap();
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        let draws = 60_000;
        for _ in 0..draws {
            *counts
                .entry(sample_stabilizer_permutation(&x, &mut rng))
                .or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        let expected = draws as f64 / 6.0;
        for (_, c) in counts {
            assert!((c as f64 - expected).abs() < 0.05 * expected);
        }
    }

    #[test]
    fn one_step_distribution_matches_entries() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let x = ChainState::parse_binary("0010").unwrap();
        let n = 4;
        let draws = 200_000usize;
        let mut counts: HashMap<Vec<u8>, usize> = HashMap::new();
        for _ in 0..draws {
            *counts
                .entry(sample_step(&x, &mut rng).letters().to_vec())
                .or_default() += 1;
        }
        let mut tv = 0.0;
        for y in Subset::all(n) {
            let exact =
                crate::scalar::rat_to_f64(&k_entry(&x, &ChainState::from_subset(&y)).unwrap());
            let emp = counts
                .get(ChainState::from_subset(&y).letters())
                .copied()
                .unwrap_or(0) as f64
                / draws as f64;
            tv += (exact - emp).abs();
        }
        assert!(tv / 2.0 < 0.01, "one-step TV = {}", tv / 2.0);
    }

    #[test]
    fn general_alphabet_sampler_runs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut x = ChainState::zeros(5, 3).unwrap();
        for _ in 0..1000 {
            x = sample_step(&x, &mut rng);
            assert_eq!(x.n(), 5);
            assert!(x.letters().iter().all(|&l| l < 3));
        }
    }

    #[test]
    fn numeric_spectrum_small() {
        let s1 = numeric_spectrum(1).unwrap();
        assert_eq!(s1.len(), 2);
        assert!((s1[0].value - 1.0).abs() < 1e-12 && s1[0].multiplicity == 1);
        assert!(s1[1].value.abs() < 1e-12 && s1[1].multiplicity == 1);

        let s4 = numeric_spectrum(4).unwrap();
        let expect = [(1.0, 1), (0.25, 6), (0.140625, 1), (0.0, 8)];
        assert_eq!(s4.len(), expect.len());
        for (c, (v, m)) in s4.iter().zip(expect) {
            assert!((c.value - v).abs() < 1e-9);
            assert_eq!(c.multiplicity, m);
        }

        let s5 = numeric_spectrum(5).unwrap();
        let expect5 = [(1.0, 1), (0.25, 10), (9.0 / 64.0, 5), (0.0, 16)];
        assert_eq!(s5.len(), expect5.len());
        for (c, (v, m)) in s5.iter().zip(expect5) {
            assert!((c.value - v).abs() < 1e-9);
            assert_eq!(c.multiplicity, m);
        }
        assert!(numeric_spectrum(11).is_err());
    }

    #[test]
    fn chain_state_validation() {
        assert!(ChainState::new(1, vec![0]).is_err());
        assert!(ChainState::new(2, vec![2]).is_err());
        assert!(ChainState::new(2, vec![]).is_err());
        assert_eq!(ChainState::one_ones(4).unwrap().to_string(), "0001");
        assert_eq!(
            ChainState::parse_binary("0101")
                .unwrap()
                .to_subset()
                .unwrap(),
            Subset::from_members(4, &[2, 4]).unwrap()
        );
    }
}
