//! The orthogonal eigenvector families of the binary Burnside operator.
//!
//! For each shape `(n-m, m)`, level index `i` and tableau `Q`, the vector
//! `g_Q^{m,i}` spans the one-dimensional simultaneous Murphy eigenspace
//! `V_Q ∩ V^{(m+i)}`; the eigenvectors `f_Q^{m,ell}` are integer-coefficient
//! combinations of the `g`'s with discrete orthogonal polynomial scalars.
//! Both families are obtained from the column reading tableau by applying
//! the shifted-transposition word of `Q`.
//!
//! `full_basis` enumerates all `2^n` eigenvectors with closed-form
//! eigenvalue and squared norm; the actual vectors materialize lazily.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chain::beta;
use crate::scalar::{binomial, factorial, int_product, rat, Rat};
use crate::{Error, Subset, Tableau, TensorVector};

/// Default cap for whole-basis enumerations.
pub const FULL_BASIS_CAP: usize = 10;

/// The scalar `T_{m,n}^{(ell)}(i)` via the closed single sum
/// `sum_j (-1)^{m+j} C(2m+ell, m+j) C(i, j) C(n-2m-i, ell-j)`.
pub fn t_scalar(m: usize, n: usize, ell: usize, i: usize) -> Result<BigInt, Error> {
    if 2 * m > n {
        return Err(Error::IndexOutOfRange(format!(
            "2m = {} exceeds n = {n}",
            2 * m
        )));
    }
    let lim = n - 2 * m;
    if ell > lim || i > lim {
        return Err(Error::IndexOutOfRange(format!(
            "indices (ell = {ell}, i = {i}) outside 0..={lim}"
        )));
    }
    let (m, n, ell, i) = (m as i64, n as i64, ell as i64, i as i64);
    let mut acc = BigInt::zero();
    for j in 0..=i {
        let term = binomial(2 * m + ell, m + j) * binomial(i, j) * binomial(n - 2 * m - i, ell - j);
        if (m + j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn check_shape(m: usize, q: &Tableau) -> Result<usize, Error> {
    if q.m() != m {
        return Err(Error::InvalidTableau(format!(
            "tableau {q} has second-row length {}, expected m = {m}",
            q.m()
        )));
    }
    Ok(q.n())
}

/// The vector `g_Q^{m,i}`: for the column reading tableau this is
/// `(v_01 - v_10)^{tensor m} tensor sum_{|S|=i} v_S` with pair coordinates
/// `1..2m` and tail coordinates `2m+1..n`; general tableaux are transported
/// by their intertwiner word. Supported on level `m + i`.
pub fn g_vector(m: usize, i: usize, q: &Tableau) -> Result<TensorVector, Error> {
    let n = check_shape(m, q)?;
    if i > n - 2 * m {
        return Err(Error::IndexOutOfRange(format!(
            "level index i = {i} outside 0..={}",
            n - 2 * m
        )));
    }
    let mut terms = Vec::new();
    for pattern in 0u32..(1 << m) {
        // bit t set: pair t+1 contributes v_10 (coordinate 2t+1), sign -1
        let sign = if pattern.count_ones() % 2 == 0 {
            rat(1)
        } else {
            rat(-1)
        };
        let mut pair_members: Vec<usize> = Vec::with_capacity(m);
        for t in 0..m {
            if pattern & (1 << t) != 0 {
                pair_members.push(2 * t + 1);
            } else {
                pair_members.push(2 * t + 2);
            }
        }
        for tail in Subset::all_of_size(n - 2 * m, i) {
            let mut members = pair_members.clone();
            members.extend(tail.members().iter().map(|c| c + 2 * m));
            terms.push((Subset::from_members(n, &members)?, sign.clone()));
        }
    }
    let base = TensorVector::from_terms(n, terms)?;
    base.act_tau_word(&q.tau_word())
}

/// The eigenvector `f_Q^{m,ell} = tau_Q sum_i T_{m,n}^{(ell)}(i) g_T^{m,i}`.
///
/// Unlike the `g`'s this combination spans every level; it is the image of
/// `g_Q^{m,ell}` under the subset-to-eigenvector transform [`phi_map`].
pub fn f_vector(m: usize, ell: usize, q: &Tableau) -> Result<TensorVector, Error> {
    let n = check_shape(m, q)?;
    if ell > n - 2 * m {
        return Err(Error::IndexOutOfRange(format!(
            "degree ell = {ell} outside 0..={}",
            n - 2 * m
        )));
    }
    let t = Tableau::column_reading(n, m)?;
    let mut acc = TensorVector::zero(n)?;
    for i in 0..=(n - 2 * m) {
        let coeff = Rat::from_integer(t_scalar(m, n, ell, i)?);
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&g_vector(m, i, &t)?.scale(&coeff))?;
    }
    acc.act_tau_word(&q.tau_word())
}

/// The lifted eigenvector
/// `f_S = sum_T (-1)^{|S∩T|} C(|S|, |S∩T|) v_T` (dense).
pub fn f_lifted(s: Subset) -> TensorVector {
    let n = s.n();
    let size = s.size() as i64;
    let terms = Subset::all(n).map(|t| {
        let overlap = s.intersection_size(&t) as i64;
        let mut c = binomial(size, overlap);
        if overlap % 2 != 0 {
            c = -c;
        }
        (t, Rat::from_integer(c))
    });
    TensorVector::from_terms(n, terms).expect("dense expansion stays in range")
}

/// The linear extension of `v_S -> f_S`.
pub fn phi_map(v: &TensorVector) -> TensorVector {
    let mut acc = TensorVector::zero(v.n()).expect("same n");
    for (s, c) in v.terms() {
        acc = acc.add(&f_lifted(*s).scale(c)).expect("same n");
    }
    acc
}

/// Closed-form squared norm of `g_T^{m,i}` for the column reading tableau:
/// `2^m/(n+1) * C(n-2m, i)/C(n, m+i)`.
pub fn g_sq_norm_closed(m: usize, i: usize, n: usize) -> Rat {
    Rat::new(
        BigInt::from(2).pow(m as u32) * binomial(n as i64 - 2 * m as i64, i as i64),
        BigInt::from(n as i64 + 1) * binomial(n as i64, (m + i) as i64),
    )
}

/// Closed-form squared norm of `f_Q^{m,ell}` under the stationary inner
/// product:
/// `gamma_Q * 2^m/(n+1) * (2m+ell)! / ((2m+2ell+1)(m+ell)!^2 ell!)
///  * (n-2m)!/n! * (n+ell+1)!/(n-2m-ell)!`.
///
/// The `n`-dependent factorial ratios are computed as short products, so the
/// cost is `O(m + ell)` regardless of `n`.
pub fn sq_norm_closed(m: usize, ell: usize, q: &Tableau) -> Result<Rat, Error> {
    let n = check_shape(m, q)? as i64;
    let (mi, li) = (m as i64, ell as i64);
    if li > n - 2 * mi {
        return Err(Error::IndexOutOfRange(format!(
            "degree ell = {ell} outside 0..={}",
            n - 2 * mi
        )));
    }
    let num = BigInt::from(2).pow(m as u32)
        * factorial((2 * m + ell) as u64)
        * int_product(n - 2 * mi - li + 1, n + li + 1);
    let den = BigInt::from(n + 1)
        * BigInt::from(2 * mi + 2 * li + 1)
        * factorial((m + ell) as u64).pow(2)
        * factorial(ell as u64)
        * int_product(n - 2 * mi + 1, n);
    Ok(q.gamma() * Rat::new(num, den))
}

/// One element of the eigenbasis: indices, closed-form eigenvalue and squared
/// norm, with the vector itself materialized on demand (compute-once).
#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub m: usize,
    pub ell: usize,
    pub tableau: Tableau,
    pub eigenvalue: Rat,
    pub sq_norm: Rat,
    vector: OnceLock<TensorVector>,
}

impl SpectrumEntry {
    pub fn new(m: usize, ell: usize, tableau: Tableau) -> Result<Self, Error> {
        let eigenvalue = if (m + ell).is_multiple_of(2) {
            beta((m + ell) / 2)
        } else {
            rat(0)
        };
        let sq_norm = sq_norm_closed(m, ell, &tableau)?;
        Ok(SpectrumEntry {
            m,
            ell,
            tableau,
            eigenvalue,
            sq_norm,
            vector: OnceLock::new(),
        })
    }

    /// Level `m + ell`; its parity decides between eigenvalue
    /// `beta_{(m+ell)/2}` and zero.
    pub fn level(&self) -> usize {
        self.m + self.ell
    }

    /// The eigenvector, materialized on first use.
    pub fn vector(&self) -> &TensorVector {
        self.vector
            .get_or_init(|| f_vector(self.m, self.ell, &self.tableau).expect("indices validated"))
    }
}

/// All `2^n` eigenbasis entries in deterministic order: `m` ascending, `ell`
/// ascending, tableau second row lexicographic.
pub fn full_basis(n: usize) -> Result<Vec<SpectrumEntry>, Error> {
    full_basis_with_cap(n, FULL_BASIS_CAP)
}

/// As [`full_basis`] with an explicit cap override.
pub fn full_basis_with_cap(n: usize, cap: usize) -> Result<Vec<SpectrumEntry>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    Subset::empty(n)?;
    let mut out = Vec::with_capacity(1 << n);
    for m in 0..=(n / 2) {
        for ell in 0..=(n - 2 * m) {
            for q in Tableau::enumerate(n, m)? {
                out.push(SpectrumEntry::new(m, ell, q)?);
            }
        }
    }
    Ok(out)
}
