//! Partitions inside a rectangular `d x e` frame.
//!
//! A partition `α = (α₁ ≥ … ≥ α_d ≥ 0)` fits in `Frame(d, e)` when it has at
//! most `d` nonzero parts and `α₁ ≤ e`. The frame carries the duality
//! `α ↦ α^∨ = (e − α_d, …, e − α₁)`, which rotates the diagram by 180 degrees
//! and takes the complement inside the frame.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
///
/// Trailing zeros are kept as given but ignored by equality, ordering and
/// hashing, so `(1)` and `(1, 0)` compare equal. Operations that take a
/// [`Frame`] return partitions padded to the frame's row count.
#[derive(Clone, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parts exactly as stored, trailing zeros included.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts without trailing zeros.
    pub fn nonzero_parts(&self) -> &[u32] {
        let n = self.parts.iter().take_while(|&&p| p > 0).count();
        &self.parts[..n]
    }

    /// Number of nonzero parts (rows of the Young diagram).
    pub fn length(&self) -> usize {
        self.nonzero_parts().len()
    }

    /// The `i`-th part (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// `|α| = Σ αᵢ`.
    pub fn degree(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Copy padded with zeros (or stripped of trailing zeros) to `len` parts.
    ///
    /// Panics if that would drop a nonzero part.
    pub fn padded(&self, len: usize) -> Partition {
        assert!(self.length() <= len, "cannot pad {self} to {len} parts");
        let mut parts = self.nonzero_parts().to_vec();
        parts.resize(len, 0);
        Partition { parts }
    }

    /// Comma-separated parts, as accepted by [`FromStr`].
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        parts.join(",")
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_parts() == other.nonzero_parts()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero_parts().hash(state);
    }
}

impl Ord for Partition {
    /// Lexicographic on the zero-padded sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        self.nonzero_parts().cmp(other.nonzero_parts())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero_parts().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `4,3,3,1`. The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// The `d x e` bounding box of `P_{d,e}`: at most `d` rows, at most `e` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    d: usize,
    e: usize,
}

impl Frame {
    pub fn new(d: usize, e: usize) -> Result<Self> {
        if d == 0 || e == 0 {
            return Err(Error::InvalidFrame { d, e });
        }
        Ok(Self { d, e })
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.e
    }

    /// `d' = ⌊d/2⌋`.
    pub fn half_rows(&self) -> usize {
        self.d / 2
    }

    /// `e' = e/2`, defined only for even `e`.
    pub fn half_cols(&self) -> Result<usize> {
        self.require_even()?;
        Ok(self.e / 2)
    }

    /// `d·e`, the dimension of `Gr(d, d+e)`.
    pub fn area(&self) -> u64 {
        (self.d * self.e) as u64
    }

    /// The `e x d` frame holding transposed diagrams.
    pub fn transposed(&self) -> Frame {
        Frame {
            d: self.e,
            e: self.d,
        }
    }

    /// `|P_{d,e}| = C(d+e, e)`.
    pub fn size(&self) -> BigUint {
        crate::binomial(self.d + self.e, self.e)
    }

    pub fn require_even(&self) -> Result<()> {
        if self.e % 2 == 1 {
            return Err(Error::OddFrame {
                d: self.d,
                e: self.e,
            });
        }
        Ok(())
    }

    /// Whether `α` has at most `d` nonzero parts and `α₁ ≤ e`.
    pub fn contains(&self, alpha: &Partition) -> bool {
        alpha.length() <= self.d && alpha.first() as usize <= self.e
    }

    fn check(&self, alpha: &Partition) -> Result<Partition> {
        if !self.contains(alpha) {
            return Err(Error::FrameViolation {
                partition: alpha.to_string(),
                d: self.d,
                e: self.e,
            });
        }
        Ok(alpha.padded(self.d))
    }

    /// `α^T ∈ P_{e,d}` with `(α^T)_j = #{i : αᵢ ≥ j}`, padded to `e` parts.
    pub fn transpose(&self, alpha: &Partition) -> Result<Partition> {
        let alpha = self.check(alpha)?;
        let parts = (1..=self.e as u32)
            .map(|j| alpha.parts.iter().filter(|&&a| a >= j).count() as u32)
            .collect();
        Ok(Partition { parts })
    }

    /// `α^∨ = e̲ − w₀α`: reverse the padded parts and subtract each from `e`.
    pub fn dual(&self, alpha: &Partition) -> Result<Partition> {
        let alpha = self.check(alpha)?;
        let e = self.e as u32;
        let parts = alpha.parts.iter().rev().map(|&a| e - a).collect();
        Ok(Partition { parts })
    }

    /// `|α| = d·e'`.
    pub fn is_half_partition(&self, alpha: &Partition) -> Result<bool> {
        self.require_even()?;
        let alpha = self.check(alpha)?;
        Ok(2 * alpha.degree() == self.area())
    }

    /// `α^∨ = α`. Every symmetric partition is a half partition.
    pub fn is_symmetric(&self, alpha: &Partition) -> Result<bool> {
        self.require_even()?;
        Ok(self.dual(alpha)? == *alpha)
    }

    /// Lattice-path encoding of the diagram boundary, walked from the
    /// lower-left corner of the frame: `1` steps one column right, `0`
    /// steps one row up. `(4,3,3,1)` in the `4 x 4` frame is `10110010`.
    pub fn to_binary(&self, alpha: &Partition) -> Result<BinarySequence> {
        let alpha = self.check(alpha)?;
        let mut bits = Vec::with_capacity(self.d + self.e);
        let mut col = 0;
        for &row in alpha.parts.iter().rev() {
            bits.extend(std::iter::repeat_n(true, (row - col) as usize));
            bits.push(false);
            col = row;
        }
        bits.extend(std::iter::repeat_n(true, self.e - col as usize));
        Ok(BinarySequence { bits })
    }

    /// Inverse of [`Frame::to_binary`].
    pub fn from_binary(&self, seq: &BinarySequence) -> Result<Partition> {
        if seq.len() != self.d + self.e || seq.zeros() != self.d {
            return Err(Error::MalformedSequence(format!(
                "{seq} must have length {} with exactly {} zeros",
                self.d + self.e,
                self.d
            )));
        }
        let mut col = 0u32;
        let mut rows = Vec::with_capacity(self.d);
        for &bit in &seq.bits {
            if bit {
                col += 1;
            } else {
                rows.push(col);
            }
        }
        rows.reverse();
        Ok(Partition { parts: rows })
    }

    /// Every partition of the frame, in decreasing lexicographic order
    /// starting from the full rectangle `(e, …, e)`.
    pub fn partitions(&self) -> Partitions {
        Partitions {
            next: Some(vec![self.e as u32; self.d]),
            degree: None,
        }
    }

    /// `(P_{d,e})_i`, in the same order as [`Frame::partitions`].
    pub fn partitions_of_degree(&self, degree: u64) -> Partitions {
        Partitions {
            next: (degree <= self.area()).then(|| vec![self.e as u32; self.d]),
            degree: Some(degree),
        }
    }

    /// Partitions of degree `d·e'`.
    pub fn half_partitions(&self) -> Result<Partitions> {
        self.require_even()?;
        Ok(self.partitions_of_degree(self.area() / 2))
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.d, self.e)
    }
}

/// Iterator over `P_{d,e}` in decreasing lexicographic order, optionally
/// restricted to a single degree.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
    degree: Option<u64>,
}

impl Partitions {
    fn advance(current: &[u32]) -> Option<Vec<u32>> {
        // Lex-predecessor: decrement the rightmost nonzero part and raise
        // everything after it to the new value.
        let i = current.iter().rposition(|&p| p > 0)?;
        let mut next = current.to_vec();
        next[i] -= 1;
        let v = next[i];
        next[i + 1..].iter_mut().for_each(|p| *p = v);
        Some(next)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let current = self.next.take()?;
            self.next = Self::advance(&current);
            let degree: u64 = current.iter().map(|&p| u64::from(p)).sum();
            if self.degree.is_none_or(|d| d == degree) {
                return Some(Partition { parts: current });
            }
        }
    }
}

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinarySequence {
    bits: Vec<bool>,
}

impl BinarySequence {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.bits.iter().filter(|&&b| !b).count()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn reversed(&self) -> BinarySequence {
        BinarySequence {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.bits.iter().eq(self.bits.iter().rev())
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::MalformedSequence(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(BinarySequence { bits })
    }
}
