//! Sparse subset-indexed vectors over `{0,1}^n` with the stationary inner
//! product and the symmetric-group / Jucys–Murphy / shifted-transposition
//! actions.
//!
//! A [`TensorVector`] is a function on binary states, stored as a sparse map
//! from [`Subset`] (the positions of the ones) to exact rational
//! coefficients. Zero coefficients are pruned eagerly after every operation,
//! so equality is structural. All values are immutable after construction
//! and every operation is a pure function.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{self, binomial, Rat};
use crate::{Error, Subset};

/// An element of the `2^n`-dimensional function space on binary states.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    coeffs: BTreeMap<Subset, Rat>,
}

/// A transposition `s_{ij}` of two distinct coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self, Error> {
        if i == j {
            return Err(Error::InvalidArgument(format!(
                "transposition coordinates must differ, got ({i}, {j})"
            )));
        }
        if i == 0 || j == 0 {
            return Err(Error::CoordinateOutOfRange { coord: 0, n: 0 });
        }
        Ok(Transposition { i, j })
    }
}

/// One factor `(s_j + c)` of a shifted-transposition word. Words are stored
/// in application order: the factor at index 0 acts first.
pub type TauFactor = (usize, Rat);

impl TensorVector {
    /// The zero vector on `n` coordinates.
    pub fn zero(n: usize) -> Result<Self, Error> {
        Subset::empty(n)?;
        Ok(TensorVector {
            n,
            coeffs: BTreeMap::new(),
        })
    }

    /// The basis vector `v_S`.
    pub fn basis(s: Subset) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(s, Rat::from_integer(1.into()));
        TensorVector { n: s.n(), coeffs }
    }

    /// Builds a vector from `(subset, coefficient)` terms, summing repeats
    /// and pruning zeros.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Subset, Rat)>,
    ) -> Result<Self, Error> {
        let mut v = Self::zero(n)?;
        for (s, c) in terms {
            v.add_term(s, c)?;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of `v_S` (zero when absent).
    pub fn coeff(&self, s: &Subset) -> Rat {
        self.coeffs.get(s).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterates over the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &Rat)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, s: Subset, c: Rat) -> Result<(), Error> {
        if s.n() != self.n {
            return Err(Error::DimensionMismatch(s.n(), self.n));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(s).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&s);
        }
        Ok(())
    }

    /// `self + other`.
    pub fn add(&self, other: &TensorVector) -> Result<TensorVector, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(*s, c.clone())?;
        }
        Ok(out)
    }

    /// `self - other`.
    pub fn sub(&self, other: &TensorVector) -> Result<TensorVector, Error> {
        self.add(&other.scale(&scalar::rat(-1)))
    }

    /// `c * self`.
    pub fn scale(&self, c: &Rat) -> TensorVector {
        if c.is_zero() {
            return TensorVector {
                n: self.n,
                coeffs: BTreeMap::new(),
            };
        }
        TensorVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }

    /// The stationary inner product
    /// `<u, v> = sum_S u_S v_S / ((n+1) C(n, |S|))`.
    pub fn inner_product(&self, other: &TensorVector) -> Result<Rat, Error> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        // iterate over the smaller support
        let (small, large) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rat::zero();
        for (s, c) in small.terms() {
            if let Some(d) = large.coeffs.get(s) {
                let weight = Rat::new(
                    1.into(),
                    binomial(self.n as i64, s.size() as i64) * (self.n as i64 + 1),
                );
                acc += c * d * weight;
            }
        }
        Ok(acc)
    }

    /// Action of the transposition `s_{ij}`: every key `S` becomes `s_{ij} S`.
    pub fn act_transposition(&self, t: Transposition) -> Result<TensorVector, Error> {
        for c in [t.i, t.j] {
            if c > self.n {
                return Err(Error::CoordinateOutOfRange {
                    coord: c,
                    n: self.n,
                });
            }
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(s, c)| (s.swap(t.i, t.j), c.clone()))
            .collect();
        Ok(TensorVector { n: self.n, coeffs })
    }

    /// Action of the Jucys–Murphy element `M_r = sum_{i<r} s_{ir}`.
    pub fn act_murphy(&self, r: usize) -> Result<TensorVector, Error> {
        if r < 2 || r > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "Murphy index {r} outside 2..={}",
                self.n
            )));
        }
        let mut out = TensorVector::zero(self.n)?;
        for i in 1..r {
            let image = self.act_transposition(Transposition::new(i, r)?)?;
            out = out.add(&image)?;
        }
        Ok(out)
    }

    /// Applies a word of factors `(s_j + c)`, index 0 first.
    pub fn act_tau_word(&self, word: &[TauFactor]) -> Result<TensorVector, Error> {
        let mut v = self.clone();
        for (j, shift) in word {
            if *j + 1 > self.n {
                return Err(Error::IndexOutOfRange(format!(
                    "simple reflection s_{j} needs coordinates {j},{} within n = {}",
                    j + 1,
                    self.n
                )));
            }
            let swapped = v.act_transposition(Transposition::new(*j, j + 1)?)?;
            v = swapped.add(&v.scale(shift))?;
        }
        Ok(v)
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVector(n={}, {{", self.n)?;
        for (idx, (s, c)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", s, scalar::format_rat(c))?;
        }
        write!(f, "}})")
    }
}

// JSON form: {"n": 3, "coeffs": {"011": "1/2", "110": "-1"}}
impl Serialize for TensorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("TensorVector", 2)?;
        st.serialize_field("n", &self.n)?;
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(s, c)| (s.to_string(), scalar::format_rat(c)))
            .collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            coeffs: BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut v = TensorVector::zero(raw.n).map_err(D::Error::custom)?;
        for (key, val) in raw.coeffs {
            let s = Subset::parse(&key).map_err(D::Error::custom)?;
            if s.n() != raw.n {
                return Err(D::Error::custom(format!(
                    "key {key:?} has length {} but n = {}",
                    s.n(),
                    raw.n
                )));
            }
            let c = scalar::parse_rat(&val).map_err(D::Error::custom)?;
            v.add_term(s, c).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn basis(s: &str) -> TensorVector {
        TensorVector::basis(Subset::parse(s).unwrap())
    }

    #[test]
    fn inner_product_diagonal_weights() {
        let v_empty = basis("000");
        assert_eq!(v_empty.inner_product(&v_empty).unwrap(), ratio(1, 4));
        let v3 = basis("001");
        assert_eq!(v3.inner_product(&v3).unwrap(), ratio(1, 12));
        let v1 = basis("100");
        let v2 = basis("010");
        assert_eq!(v1.inner_product(&v2).unwrap(), rat(0));
    }

    #[test]
    fn inner_product_dimension_mismatch() {
        let a = basis("10");
        let b = basis("100");
        assert!(matches!(
            a.inner_product(&b),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn transposition_action() {
        let t = Transposition::new(1, 2).unwrap();
        assert_eq!(basis("10").act_transposition(t).unwrap(), basis("01"));
        assert_eq!(basis("11").act_transposition(t).unwrap(), basis("11"));
        // s_{2,3} (v_{011} - v_{101}) = v_{011} - v_{110}
        let v = basis("011").sub(&basis("101")).unwrap();
        let image = v
            .act_transposition(Transposition::new(2, 3).unwrap())
            .unwrap();
        assert_eq!(image, basis("011").sub(&basis("110")).unwrap());
        assert!(basis("10")
            .act_transposition(Transposition::new(1, 3).unwrap())
            .is_err());
        assert!(Transposition::new(2, 2).is_err());
    }

    #[test]
    fn murphy_action() {
        // M_2 v_{10} = s_{12} v_{10} = v_{01}
        assert_eq!(basis("10").act_murphy(2).unwrap(), basis("01"));
        assert!(basis("10").act_murphy(1).is_err());
        assert!(basis("10").act_murphy(3).is_err());
    }

    #[test]
    fn tau_word_identity_and_square() {
        let v = basis("010").sub(&basis("100")).unwrap();
        assert_eq!(v.act_tau_word(&[]).unwrap(), v);
        // the intertwiner square acts as (d^2-1)/d^2 = 3/4 on this family;
        // the first factor sees the content gap -2, the second sees +2 after
        // the boxes have swapped
        let w = [(2usize, ratio(-1, 2)), (2usize, ratio(1, 2))];
        assert_eq!(v.act_tau_word(&w).unwrap(), v.scale(&ratio(3, 4)));
    }

    #[test]
    fn zero_pruning_is_eager() {
        let v = basis("01");
        let out = v.sub(&v).unwrap();
        assert!(out.is_zero());
        assert_eq!(out.support_size(), 0);
        assert_eq!(v.scale(&rat(0)).support_size(), 0);
    }

    #[test]
    fn json_round_trip() {
        let v = TensorVector::from_terms(
            3,
            [
                (Subset::parse("011").unwrap(), ratio(1, 2)),
                (Subset::parse("110").unwrap(), rat(-1)),
            ],
        )
        .unwrap();
        let js = serde_json::to_string(&v).unwrap();
        assert_eq!(js, r#"{"n":3,"coeffs":{"011":"1/2","110":"-1"}}"#);
        let back: TensorVector = serde_json::from_str(&js).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<TensorVector>(r#"{"n":2,"coeffs":{"011":"1"}}"#).is_err());
    }
}
