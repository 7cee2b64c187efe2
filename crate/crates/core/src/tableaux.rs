//! Two-row standard Young tableaux of shape `(n-m, m)`.
//!
//! A tableau is canonicalized by its second row `a_1 < ... < a_m` (the first
//! row is the increasing complement); standardness is exactly `a_r >= 2r`.
//! The column reading tableau has second row `2, 4, ..., 2m`. Moving a box
//! from its column-reading position to `a_r` traverses content gaps
//! `-2, -3, ..., -(a_r - 2r + 1)`, which produces both the shifted
//! intertwiner word [`Tableau::tau_word`] and the norm-transfer constant
//! [`Tableau::gamma`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::{binomial, rat, ratio, Rat};
use crate::tensor::TauFactor;
use crate::Error;

/// A standard two-row Young tableau, stored as its second row.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Tableau {
    n: usize,
    second_row: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    n: usize,
    m: usize,
    second_row: Vec<usize>,
}

impl From<Tableau> for RawTableau {
    fn from(t: Tableau) -> Self {
        RawTableau {
            n: t.n,
            m: t.second_row.len(),
            second_row: t.second_row,
        }
    }
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self, Error> {
        if raw.m != raw.second_row.len() {
            return Err(Error::InvalidTableau(format!(
                "m = {} but second row has {} entries",
                raw.m,
                raw.second_row.len()
            )));
        }
        Tableau::new(raw.n, raw.second_row)
    }
}

impl Tableau {
    /// Builds a tableau from its second row, validating standardness.
    pub fn new(n: usize, second_row: Vec<usize>) -> Result<Self, Error> {
        let m = second_row.len();
        if 2 * m > n {
            return Err(Error::InvalidTableau(format!(
                "second row length {m} exceeds n/2 for n = {n}"
            )));
        }
        for (idx, &a) in second_row.iter().enumerate() {
            let r = idx + 1;
            if a < 2 * r {
                return Err(Error::InvalidTableau(format!(
                    "entry a_{r} = {a} violates a_{r} >= {}",
                    2 * r
                )));
            }
            if a > n {
                return Err(Error::InvalidTableau(format!("entry {a} exceeds n = {n}")));
            }
            if idx > 0 && second_row[idx - 1] >= a {
                return Err(Error::InvalidTableau(
                    "second row must be strictly increasing".into(),
                ));
            }
        }
        Ok(Tableau { n, second_row })
    }

    /// The column reading tableau of shape `(n-m, m)`: second row `2, 4, ..., 2m`.
    pub fn column_reading(n: usize, m: usize) -> Result<Self, Error> {
        Tableau::new(n, (1..=m).map(|r| 2 * r).collect())
    }

    /// All standard tableaux of shape `(n-m, m)` in lexicographic order of
    /// the second row. The count is `C(n,m) - C(n,m-1)`.
    pub fn enumerate(n: usize, m: usize) -> Result<Vec<Self>, Error> {
        if 2 * m > n {
            return Err(Error::InvalidTableau(format!(
                "shape ({}, {m}) is not a partition of {n}",
                n as i64 - m as i64
            )));
        }
        let mut out = Vec::new();
        let mut row = Vec::with_capacity(m);
        fn rec(n: usize, m: usize, row: &mut Vec<usize>, out: &mut Vec<Tableau>) {
            if row.len() == m {
                out.push(Tableau {
                    n,
                    second_row: row.clone(),
                });
                return;
            }
            let r = row.len() + 1;
            let lo = std::cmp::max(2 * r, row.last().map_or(0, |&a| a + 1));
            // entry a_r must leave room for the remaining m - r entries
            let hi = n - (m - r);
            for a in lo..=hi {
                row.push(a);
                rec(n, m, row, out);
                row.pop();
            }
        }
        rec(n, m, &mut row, &mut out);
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Second-row length, i.e. the `m` of the shape `(n-m, m)`.
    pub fn m(&self) -> usize {
        self.second_row.len()
    }

    pub fn second_row(&self) -> &[usize] {
        &self.second_row
    }

    /// True when this is the column reading tableau of its shape.
    pub fn is_column_reading(&self) -> bool {
        self.second_row
            .iter()
            .enumerate()
            .all(|(idx, &a)| a == 2 * (idx + 1))
    }

    /// Row (1 or 2) and 1-based column of the box holding `r`.
    pub fn position(&self, r: usize) -> Result<(usize, usize), Error> {
        if r == 0 || r > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "box label {r} outside 1..={}",
                self.n
            )));
        }
        match self.second_row.binary_search(&r) {
            Ok(idx) => Ok((2, idx + 1)),
            Err(below) => Ok((1, r - below)),
        }
    }

    /// Content of the box holding `r`: column minus row, so box 1 has content 0.
    pub fn content(&self, r: usize) -> Result<i64, Error> {
        let (row, col) = self.position(r)?;
        Ok(col as i64 - row as i64)
    }

    /// The shifted-transposition word transporting the column reading
    /// tableau's eigenvector family to this tableau's.
    ///
    /// Factors are listed in application order (index 0 acts first): for
    /// `r = m, m-1, ..., 1` with `a_r > 2r`, the box walks right through
    /// `(s_j - 1/(j - 2r + 2))` for `j = 2r, ..., a_r - 1`. Empty exactly for
    /// the column reading tableau.
    pub fn tau_word(&self) -> Vec<TauFactor> {
        let mut word = Vec::new();
        for r in (1..=self.m()).rev() {
            let a = self.second_row[r - 1];
            for j in 2 * r..a {
                word.push((j, ratio(-1, (j - 2 * r + 2) as i64)));
            }
        }
        word
    }

    /// The norm-transfer constant: the product of `(d^2 - 1)/d^2` over the
    /// content gaps `d = 2, ..., a_r - 2r + 1` of every box move; equals 1
    /// for the column reading tableau.
    pub fn gamma(&self) -> Rat {
        let mut acc = rat(1);
        for (idx, &a) in self.second_row.iter().enumerate() {
            let r = idx + 1;
            for d in 2..=(a as i64 - 2 * r as i64 + 1) {
                acc *= ratio(d * d - 1, d * d);
            }
        }
        acc
    }

    /// Two-row ASCII box diagram.
    pub fn ascii_diagram(&self) -> String {
        let width = self.n.to_string().len();
        let row = |labels: &[usize]| {
            labels
                .iter()
                .map(|l| format!("[{l:>width$}]"))
                .collect::<String>()
        };
        let first: Vec<usize> = (1..=self.n)
            .filter(|r| self.second_row.binary_search(r).is_err())
            .collect();
        if self.second_row.is_empty() {
            row(&first)
        } else {
            format!("{}\n{}", row(&first), row(&self.second_row))
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first: Vec<String> = (1..=self.n)
            .filter(|r| self.second_row.binary_search(r).is_err())
            .map(|r| r.to_string())
            .collect();
        let second: Vec<String> = self.second_row.iter().map(|r| r.to_string()).collect();
        if second.is_empty() {
            write!(f, "[{}]", first.join(","))
        } else {
            write!(f, "[{}|{}]", first.join(","), second.join(","))
        }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `C(n,m) - C(n,m-1)`, the number of standard tableaux of shape `(n-m, m)`.
pub fn shape_dimension(n: usize, m: usize) -> num_bigint::BigInt {
    binomial(n as i64, m as i64) - binomial(n as i64, m as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn enumerate_matches_examples() {
        let ts = Tableau::enumerate(3, 1).unwrap();
        let rows: Vec<&[usize]> = ts.iter().map(|t| t.second_row()).collect();
        assert_eq!(rows, vec![&[2][..], &[3][..]]);

        assert_eq!(Tableau::enumerate(5, 2).unwrap().len(), 5);
        assert_eq!(Tableau::enumerate(4, 0).unwrap().len(), 1);
        assert!(Tableau::enumerate(3, 2).is_err());
    }

    #[test]
    fn enumeration_count_is_shape_dimension() {
        for n in 1..=10 {
            for m in 0..=n / 2 {
                let count = Tableau::enumerate(n, m).unwrap().len();
                assert_eq!(
                    count,
                    shape_dimension(n, m).to_usize().unwrap(),
                    "shape ({}, {m})",
                    n - m
                );
            }
        }
    }

    #[test]
    fn contents() {
        let t = Tableau::column_reading(3, 1).unwrap();
        assert_eq!(t.second_row(), &[2]);
        assert_eq!(t.content(1).unwrap(), 0);
        assert_eq!(t.content(2).unwrap(), -1);
        assert_eq!(t.content(3).unwrap(), 1);
        let q = Tableau::new(3, vec![3]).unwrap();
        assert_eq!(q.content(3).unwrap(), -1);
        assert!(q.content(4).is_err());
        assert!(q.content(0).is_err());
    }

    #[test]
    fn contents_increase_along_rows() {
        for n in 1..=8 {
            for m in 0..=n / 2 {
                for t in Tableau::enumerate(n, m).unwrap() {
                    assert_eq!(t.content(1).unwrap(), 0);
                    let mut by_row: [Vec<i64>; 2] = [Vec::new(), Vec::new()];
                    for r in 1..=n {
                        let (row, _) = t.position(r).unwrap();
                        by_row[row - 1].push(t.content(r).unwrap());
                    }
                    for row in &by_row {
                        assert!(row.windows(2).all(|w| w[0] < w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn column_reading_examples() {
        assert_eq!(Tableau::column_reading(3, 1).unwrap().second_row(), &[2]);
        assert_eq!(
            Tableau::column_reading(6, 3).unwrap().second_row(),
            &[2, 4, 6]
        );
        assert!(Tableau::column_reading(5, 0)
            .unwrap()
            .second_row()
            .is_empty());
    }

    #[test]
    fn standardness_validation() {
        assert!(Tableau::new(4, vec![1]).is_err()); // a_1 < 2
        assert!(Tableau::new(4, vec![2, 3]).is_err()); // a_2 < 4
        assert!(Tableau::new(4, vec![3, 3]).is_err()); // not increasing
        assert!(Tableau::new(4, vec![5]).is_err()); // exceeds n
        assert!(Tableau::new(3, vec![2, 3]).is_err()); // 2m > n
    }

    #[test]
    fn tau_words() {
        assert!(Tableau::column_reading(6, 3).unwrap().tau_word().is_empty());
        assert_eq!(
            Tableau::new(3, vec![3]).unwrap().tau_word(),
            vec![(2, ratio(-1, 2))]
        );
        // single box move 4 -> 5 for second row [2, 5]
        assert_eq!(
            Tableau::new(5, vec![2, 5]).unwrap().tau_word(),
            vec![(4, ratio(-1, 2))]
        );
        // box 2 walks 2 -> 5: factors s_2, s_3, s_4 with gaps -2, -3, -4
        assert_eq!(
            Tableau::new(5, vec![5]).unwrap().tau_word(),
            vec![(2, ratio(-1, 2)), (3, ratio(-1, 3)), (4, ratio(-1, 4))]
        );
        // later rows move before earlier ones
        assert_eq!(
            Tableau::new(6, vec![3, 6]).unwrap().tau_word(),
            vec![(4, ratio(-1, 2)), (5, ratio(-1, 3)), (2, ratio(-1, 2)),]
        );
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(Tableau::column_reading(6, 3).unwrap().gamma(), rat(1));
        assert_eq!(Tableau::new(3, vec![3]).unwrap().gamma(), ratio(3, 4));
        // shape (n-1, 1) with second row [n]: telescopes to n / (2(n-1))
        for n in 2..=12i64 {
            let q = Tableau::new(n as usize, vec![n as usize]).unwrap();
            assert_eq!(q.gamma(), ratio(n, 2 * (n - 1)));
        }
    }

    #[test]
    fn gamma_matches_word_gaps() {
        // gamma must equal the product of (d^2-1)/d^2 over the gap sizes
        // encoded in the tau word shifts (shift = -1/d).
        for n in 2..=9 {
            for m in 0..=n / 2 {
                for t in Tableau::enumerate(n, m).unwrap() {
                    let mut acc = rat(1);
                    for (_, shift) in t.tau_word() {
                        let d = -shift.recip();
                        acc *= (&d * &d - rat(1)) / (&d * &d);
                    }
                    assert_eq!(t.gamma(), acc, "tableau {t}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let t = Tableau::new(5, vec![3, 5]).unwrap();
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"n":5,"m":2,"second_row":[3,5]}"#);
        let back: Tableau = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Tableau>(r#"{"n":5,"m":1,"second_row":[3,5]}"#).is_err());
        assert!(serde_json::from_str::<Tableau>(r#"{"n":5,"m":1,"second_row":[1]}"#).is_err());
    }

    #[test]
    fn diagram_rendering() {
        let t = Tableau::new(3, vec![2]).unwrap();
        assert_eq!(t.ascii_diagram(), "[1][3]\n[2]");
        assert_eq!(t.to_string(), "[1,3|2]");
        let flat = Tableau::column_reading(3, 0).unwrap();
        assert_eq!(flat.ascii_diagram(), "[1][2][3]");
    }
}
