//! Type A root data: weights of `GL_n`, the longest Weyl element and the
//! sign of self-dual irreducible representations.
//!
//! The Weyl group of `GL_n` is the symmetric group acting on `Z^n` by
//! permuting coordinates; its longest element `w₀` reverses the order of the
//! coordinates. The irreducible representation of highest weight `λ` has
//! dual of highest weight `−w₀λ`, and a self-dual one carries a symmetric
//! form iff `⟨2ρ^∨, λ⟩` is even.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer weight `(m₁, …, m_n)` of `GL_n`; the rank is the length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `m₁ ≥ m₂ ≥ … ≥ m_n`.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `w₀λ`, the coordinates in reverse order.
    pub fn longest_element_action(&self) -> WeightVector {
        WeightVector(self.0.iter().rev().copied().collect())
    }

    /// Coordinatewise `λ − m̲`.
    pub fn shifted(&self, m: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|x| x - m).collect())
    }

    fn require_dominant(&self) -> Result<()> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.to_string()));
        }
        Ok(())
    }
}

impl From<&crate::Partition> for WeightVector {
    fn from(p: &crate::Partition) -> Self {
        WeightVector(p.parts().iter().map(|&x| i64::from(x)).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(WeightVector::default());
        }
        s.split(',')
            .map(|x| x.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(WeightVector)
            .map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

/// The root datum of `GL_n` with the upper-triangular Borel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootDatumA {
    rank: usize,
}

impl RootDatumA {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "GL_n needs n >= 1");
        Self { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The coroots `eᵢ^∨ − eⱼ^∨` for `i < j`, as coefficient vectors.
    pub fn positive_coroots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                out.push(v);
            }
        }
        out
    }

    /// `2ρ^∨` as the sum of the positive coroots. Entry `i` (1-based) is
    /// `n + 1 − 2i`.
    pub fn two_rho_check(&self) -> Vec<i64> {
        self.positive_coroots()
            .into_iter()
            .fold(vec![0; self.rank], |mut acc, c| {
                acc.iter_mut().zip(&c).for_each(|(a, x)| *a += x);
                acc
            })
    }

    /// `⟨2ρ^∨, λ⟩`.
    pub fn pair_two_rho_check(&self, lambda: &WeightVector) -> i64 {
        assert_eq!(lambda.rank(), self.rank, "rank mismatch");
        self.two_rho_check()
            .iter()
            .zip(lambda.entries())
            .map(|(c, m)| c * m)
            .sum()
    }
}

/// How an irreducible representation relates to its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignClass {
    Symmetric,
    AntiSymmetric,
    NotSelfDual,
}

pub fn is_dominant(lambda: &WeightVector) -> bool {
    lambda.is_dominant()
}

/// `−w₀λ`, the highest weight of the dual representation.
pub fn dual_weight(lambda: &WeightVector) -> Result<WeightVector> {
    lambda.require_dominant()?;
    Ok(WeightVector(lambda.0.iter().rev().map(|m| -m).collect()))
}

pub fn is_self_dual(lambda: &WeightVector) -> Result<bool> {
    Ok(dual_weight(lambda)? == *lambda)
}

/// `Σᵢ (n + 1 − 2i)·mᵢ`; defined for any weight, dominant or not.
pub fn pair_two_rho_check(lambda: &WeightVector) -> i64 {
    if lambda.rank() == 0 {
        return 0;
    }
    RootDatumA::new(lambda.rank()).pair_two_rho_check(lambda)
}

/// Sign of a self-dual weight decided by the parity of `⟨2ρ^∨, λ⟩`.
pub fn sign_from_parity(pairing: i64) -> SignClass {
    if pairing.rem_euclid(2) == 0 {
        SignClass::Symmetric
    } else {
        SignClass::AntiSymmetric
    }
}

pub fn sign_of(lambda: &WeightVector) -> Result<SignClass> {
    if !is_self_dual(lambda)? {
        return Ok(SignClass::NotSelfDual);
    }
    Ok(sign_from_parity(pair_two_rho_check(lambda)))
}

/// Dominant weights of `GL_rank` with every entry in `[−bound, bound]`,
/// in decreasing lexicographic order.
pub fn dominant_weights_in_box(rank: usize, bound: u32) -> Vec<WeightVector> {
    fn fill(prefix: &mut Vec<i64>, rank: usize, lo: i64, hi: i64, out: &mut Vec<WeightVector>) {
        if prefix.len() == rank {
            out.push(WeightVector(prefix.clone()));
            return;
        }
        for m in (lo..=hi).rev() {
            prefix.push(m);
            fill(prefix, rank, lo, m, out);
            prefix.pop();
        }
    }
    let b = i64::from(bound);
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(rank), rank, -b, b, &mut out);
    out
}

/// Dominant weights of a finite box sorted into symmetric self-dual,
/// anti-symmetric self-dual, and one representative per dual pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoxCensus {
    pub rank: usize,
    pub bound: u32,
    pub symmetric: Vec<WeightVector>,
    pub antisymmetric: Vec<WeightVector>,
    /// `(representative, partner)` with the representative the
    /// lexicographically larger of `{λ, −w₀λ}`.
    pub dual_pairs: Vec<(WeightVector, WeightVector)>,
}

impl BoxCensus {
    /// Number of `−w₀`-orbits in the box.
    pub fn orbit_count(&self) -> usize {
        self.symmetric.len() + self.antisymmetric.len() + self.dual_pairs.len()
    }

    /// Number of dominant weights in the box.
    pub fn weight_count(&self) -> usize {
        self.symmetric.len() + self.antisymmetric.len() + 2 * self.dual_pairs.len()
    }
}

/// Sort every dominant weight with `|mᵢ| ≤ bound` by sign. The box is
/// closed under `−w₀`, so each dual pair lies entirely inside it.
pub fn classify_box(rank: usize, bound: u32) -> BoxCensus {
    let mut census = BoxCensus {
        rank,
        bound,
        ..BoxCensus::default()
    };
    for lambda in dominant_weights_in_box(rank, bound) {
        let dual = dual_weight(&lambda).expect("box weights are dominant");
        match sign_of(&lambda).expect("box weights are dominant") {
            SignClass::Symmetric => census.symmetric.push(lambda),
            SignClass::AntiSymmetric => census.antisymmetric.push(lambda),
            SignClass::NotSelfDual if lambda > dual => census.dual_pairs.push((lambda, dual)),
            SignClass::NotSelfDual => {}
        }
    }
    census
}
