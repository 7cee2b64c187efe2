//! Subsets of coordinates `{1, ..., n}` encoded as bitmasks.
//!
//! Bit `i-1` of the mask is set exactly when coordinate `i` is a member.
//! The string rendering puts coordinate 1 leftmost, so `"011"` is the subset
//! `{2, 3}` of a 3-coordinate space.

use std::fmt;

use crate::Error;

/// Hard cap on the coordinate count for dense-level enumerations.
pub const MAX_N: usize = 24;

/// A subset of `{1, ..., n}` with `n <= 24`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    n: u8,
    bits: u32,
}

impl Subset {
    /// The empty subset of an `n`-coordinate space.
    pub fn empty(n: usize) -> Result<Self, Error> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidArgument(format!(
                "coordinate count {n} outside 1..={MAX_N}"
            )));
        }
        Ok(Subset {
            n: n as u8,
            bits: 0,
        })
    }

    /// Builds a subset from a raw bitmask (bit `i-1` <-> coordinate `i`).
    pub fn from_bits(n: usize, bits: u32) -> Result<Self, Error> {
        let mut s = Self::empty(n)?;
        if bits >= (1u32 << n) {
            return Err(Error::InvalidArgument(format!(
                "bitmask {bits:#b} out of range for n = {n}"
            )));
        }
        s.bits = bits;
        Ok(s)
    }

    /// Builds a subset from 1-based member coordinates.
    pub fn from_members(n: usize, members: &[usize]) -> Result<Self, Error> {
        let mut s = Self::empty(n)?;
        for &c in members {
            if c == 0 || c > n {
                return Err(Error::CoordinateOutOfRange { coord: c, n });
            }
            s.bits |= 1 << (c - 1);
        }
        Ok(s)
    }

    /// Parses the string rendering, e.g. `"011"` -> `{2, 3}`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let n = s.len();
        let mut out =
            Self::empty(n).map_err(|_| Error::Parse(format!("bit string {s:?} has bad length")))?;
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => out.bits |= 1 << idx,
                _ => {
                    return Err(Error::Parse(format!(
                        "bit string {s:?} has non-binary digit"
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Number of members.
    pub fn size(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Membership of coordinate `c` (1-based).
    pub fn contains(&self, c: usize) -> bool {
        c >= 1 && c <= self.n() && self.bits & (1 << (c - 1)) != 0
    }

    /// The subset with coordinates `i` and `j` swapped.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let bi = (self.bits >> (i - 1)) & 1;
        let bj = (self.bits >> (j - 1)) & 1;
        if bi == bj {
            *self
        } else {
            Subset {
                n: self.n,
                bits: self.bits ^ (1 << (i - 1)) ^ (1 << (j - 1)),
            }
        }
    }

    /// Toggles membership of coordinate `c`.
    pub fn toggle(&self, c: usize) -> Self {
        Subset {
            n: self.n,
            bits: self.bits ^ (1 << (c - 1)),
        }
    }

    /// `|self ∩ other|`.
    pub fn intersection_size(&self, other: &Subset) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    /// 1-based member coordinates in increasing order.
    pub fn members(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&c| self.contains(c)).collect()
    }

    /// All `2^n` subsets, in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        let n8 = n as u8;
        (0u32..(1u32 << n)).map(move |bits| Subset { n: n8, bits })
    }

    /// All subsets of the given size, in bitmask order.
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        Self::all(n).filter(move |s| s.size() == k)
    }

    /// Rank with coordinate 1 as the most significant displayed digit; sorting
    /// by this matches the column order of the printed state tables.
    pub fn display_rank(&self) -> u32 {
        let mut r = 0;
        for c in 1..=self.n() {
            r = (r << 1) | ((self.bits >> (c - 1)) & 1);
        }
        r
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in 1..=self.n() {
            write!(f, "{}", if self.contains(c) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
