//! Formal additive decompositions of Grothendieck-Witt spectra.
//!
//! The derived category of `Gr(d, d+e)` has one exceptional generator per
//! partition in `P_{d,e}`. After twisting by `Δ^{−e'}` the duality permutes
//! the generators through `α ↦ α^∨`; each self-dual generator contributes a
//! copy of `GW^{[n]}(k)` and each pair `{α, α^∨}` with `α ≠ α^∨` a copy of
//! `K(k)`. The same bookkeeping applied to the irreducible representations
//! of `GL_n` gives the equivariant decomposition of a point.
//!
//! Only multisets of summands are computed here, labelled by the partition
//! or weight they come from.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binomial;
use crate::error::{Error, Result};
use crate::rootdata::{classify_box, BoxCensus, WeightVector};
use crate::young::{Frame, Partition};

/// Frames with more partitions than this get counts but no per-summand labels.
pub const PROVENANCE_LIMIT: u64 = 100_000;

/// Symbolic `Λ^{profile} 𝒰 ⊗ Δ^{twist}` on `Gr(d, d+e)`.
///
/// The profile is the transposed partition `α^T ∈ P_{e,d}`, stored with `e`
/// parts; `Λ^{β} 𝒰 = ⊗ Λ^{βⱼ} 𝒰`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleExpression {
    profile: Partition,
    twist: i64,
    frame: Frame,
}

impl BundleExpression {
    pub fn new(profile: Partition, twist: i64, frame: Frame) -> Result<Self> {
        let profile_frame = frame.transposed();
        if !profile_frame.contains(&profile) {
            return Err(Error::MalformedExpression(format!(
                "profile {profile} is not in P_{{{},{}}}",
                profile_frame.rows(),
                profile_frame.cols()
            )));
        }
        Ok(Self {
            profile: profile.padded(frame.cols()),
            twist,
            frame,
        })
    }

    /// The generator `Λ^{α^T} 𝒰 ⊗ Δ^{twist}` attached to `α ∈ P_{d,e}`.
    pub fn generator(alpha: &Partition, frame: Frame, twist: i64) -> Result<Self> {
        let profile = frame
            .transpose(alpha)
            .map_err(|e| Error::MalformedExpression(e.to_string()))?;
        Self::new(profile, twist, frame)
    }

    /// `Λ^i 𝒰` for `0 ≤ i ≤ d`.
    pub fn exterior_power(i: u32, frame: Frame) -> Result<Self> {
        Self::new(Partition::new(vec![i])?, 0, frame)
    }

    pub fn profile(&self) -> &Partition {
        &self.profile
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn profile_degree(&self) -> u64 {
        self.profile.degree()
    }

    /// `(Λ^{β}𝒰 ⊗ Δ^t)^∨ = Λ^{d̲ − w₀β}𝒰 ⊗ Δ^{−e−t}`.
    pub fn dual(&self) -> BundleExpression {
        let profile = self
            .frame
            .transposed()
            .dual(&self.profile)
            .expect("profile is validated on construction");
        BundleExpression {
            profile,
            twist: -(self.frame.cols() as i64) - self.twist,
            frame: self.frame,
        }
    }

    /// Rewrites each full factor `Λ^d 𝒰 = Δ` as a unit of twist.
    pub fn normalized(&self) -> BundleExpression {
        let d = self.frame.rows() as u32;
        let full = self.profile.parts().iter().filter(|&&p| p == d).count();
        let mut parts: Vec<u32> = self
            .profile
            .parts()
            .iter()
            .copied()
            .filter(|&p| p < d)
            .collect();
        parts.resize(self.frame.cols(), 0);
        BundleExpression {
            profile: Partition::new(parts).expect("filtering keeps the order"),
            twist: self.twist + full as i64,
            frame: self.frame,
        }
    }
}

pub fn dual_bundle(b: &BundleExpression) -> BundleExpression {
    b.dual()
}

/// Outcome of dualising every generator of one degree block
/// `A_i ⊗ Δ^{−e'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub degree: u64,
    pub dual_degree: u64,
    pub generators: usize,
    pub self_dual: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDualityReport {
    pub frame: Frame,
    pub blocks: Vec<BlockCheck>,
}

impl BlockDualityReport {
    pub fn all_passed(&self) -> bool {
        self.blocks.iter().all(|b| b.passed)
    }
}

/// Checks that dualising the generators of block `i` (twisted by
/// `Δ^{−e'}`) yields exactly the twisted generators of block `de − i`.
pub fn middle_block_dual_check(frame: Frame) -> Result<BlockDualityReport> {
    let half = frame.half_cols()? as i64;
    let area = frame.area();
    let mut blocks = Vec::with_capacity(area as usize + 1);
    for degree in 0..=area {
        let dual_degree = area - degree;
        let target: Vec<BundleExpression> = frame
            .partitions_of_degree(dual_degree)
            .map(|b| BundleExpression::generator(&b, frame, -half))
            .collect::<Result<_>>()?;
        let mut generators = 0;
        let mut passed = true;
        let mut images = Vec::new();
        for alpha in frame.partitions_of_degree(degree) {
            generators += 1;
            let image = BundleExpression::generator(&alpha, frame, -half)?.dual();
            let expected = BundleExpression::generator(&frame.dual(&alpha)?, frame, -half)?;
            passed &=
                image.twist == -half && image.profile_degree() == dual_degree && image == expected;
            images.push(image);
        }
        // The images must exhaust the dual block.
        passed &= images.len() == target.len() && target.iter().all(|t| images.contains(t));
        blocks.push(BlockCheck {
            degree,
            dual_degree,
            generators,
            self_dual: degree == dual_degree,
            passed,
        });
    }
    Ok(BlockDualityReport { frame, blocks })
}

/// `GW^{[shift]}(k)` or `K(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    Gw { shift: i64 },
    K,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub theory: Theory,
    pub multiplicity: BigUint,
}

/// What a decomposition is a decomposition of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    /// `Gr(d, d+e)`. When `transposed` is set the labels live in `P_{e,d}`.
    Grassmannian {
        d: usize,
        e: usize,
        transposed: bool,
    },
    /// The self-dual block `D_{de'}` of `Gr(d, d+e)`.
    MiddleBlock { d: usize, e: usize },
    /// `GL_rank`-equivariant theory of a point, truncated to `|mᵢ| ≤ bound`.
    EquivariantBox { rank: usize, bound: u32 },
}

/// Where one copy of a summand comes from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// A partition fixed by the duality; one copy of `GW`.
    SelfDual(Partition),
    /// `{α, α^∨}` with `α > α^∨`; one copy of `K`.
    DualPair(Partition, Partition),
    /// A self-dual weight; `GW` at the base shift, or at `+2` when the
    /// invariant form is anti-symmetric.
    SelfDualWeight {
        weight: WeightVector,
        antisymmetric: bool,
    },
    /// `{λ, −w₀λ}` with `λ` the lexicographically larger; one copy of `K`.
    WeightOrbit(WeightVector, WeightVector),
}

impl Provenance {
    /// Label for the pair `{α, β}`, larger member first.
    pub fn dual_pair(a: Partition, b: Partition) -> Provenance {
        if a >= b {
            Provenance::DualPair(a, b)
        } else {
            Provenance::DualPair(b, a)
        }
    }

    pub fn theory(&self, shift: i64) -> Theory {
        match self {
            Provenance::SelfDual(_) => Theory::Gw { shift },
            Provenance::SelfDualWeight { antisymmetric, .. } => Theory::Gw {
                shift: if *antisymmetric { shift + 2 } else { shift },
            },
            Provenance::DualPair(..) | Provenance::WeightOrbit(..) => Theory::K,
        }
    }

    fn sort_key(&self, shift: i64) -> (Theory, Reverse<LabelKey<'_>>) {
        let key = match self {
            Provenance::SelfDual(p) | Provenance::DualPair(p, _) => LabelKey::Partition(p),
            Provenance::SelfDualWeight { weight, .. } | Provenance::WeightOrbit(weight, _) => {
                LabelKey::Weight(weight)
            }
        };
        (self.theory(shift), Reverse(key))
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum LabelKey<'a> {
    Partition(&'a Partition),
    Weight(&'a WeightVector),
}

/// A multiset of `GW^{[n]}(k)` and `K(k)` summands.
///
/// `provenance` holds one label per summand copy, GW before K and each
/// group in decreasing order of its label. It is empty when the indexing
/// set was too large to list (see [`PROVENANCE_LIMIT`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumDecomposition {
    pub subject: Subject,
    pub shift: i64,
    pub summands: Vec<Summand>,
    pub provenance: Vec<Provenance>,
}

impl SpectrumDecomposition {
    /// Builds the summands by tallying the labels.
    pub fn from_provenance(subject: Subject, shift: i64, mut labels: Vec<Provenance>) -> Self {
        labels.sort_by(|a, b| a.sort_key(shift).cmp(&b.sort_key(shift)));
        let mut tally: BTreeMap<Theory, BigUint> = BTreeMap::new();
        for label in &labels {
            *tally.entry(label.theory(shift)).or_default() += 1u32;
        }
        Self {
            subject,
            shift,
            summands: tally
                .into_iter()
                .map(|(theory, multiplicity)| Summand {
                    theory,
                    multiplicity,
                })
                .collect(),
            provenance: labels,
        }
    }

    fn from_counts(subject: Subject, shift: i64, gw: BigUint, k: BigUint) -> Self {
        let summands = [(Theory::Gw { shift }, gw), (Theory::K, k)]
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(theory, multiplicity)| Summand {
                theory,
                multiplicity,
            })
            .collect();
        Self {
            subject,
            shift,
            summands,
            provenance: Vec::new(),
        }
    }

    pub fn multiplicity(&self, theory: Theory) -> BigUint {
        self.summands
            .iter()
            .find(|s| s.theory == theory)
            .map(|s| s.multiplicity.clone())
            .unwrap_or_default()
    }

    /// Copies of `GW` at any shift.
    pub fn gw_count(&self) -> BigUint {
        self.summands
            .iter()
            .filter(|s| matches!(s.theory, Theory::Gw { .. }))
            .map(|s| &s.multiplicity)
            .sum()
    }

    pub fn k_count(&self) -> BigUint {
        self.multiplicity(Theory::K)
    }

    /// `GW` shifts with their multiplicities, ascending.
    pub fn gw_shifts(&self) -> Vec<(i64, BigUint)> {
        self.summands
            .iter()
            .filter_map(|s| match s.theory {
                Theory::Gw { shift } => Some((shift, s.multiplicity.clone())),
                Theory::K => None,
            })
            .collect()
    }

    /// Total number of summand copies.
    pub fn rank(&self) -> BigUint {
        self.summands.iter().map(|s| &s.multiplicity).sum()
    }

    /// Number of generators accounted for: one per GW copy, two per K copy.
    pub fn generator_count(&self) -> BigUint {
        self.gw_count() + self.k_count() * 2u32
    }
}

fn even_frame(d: usize, e: usize) -> Result<Frame> {
    let frame = Frame::new(d, e)?;
    frame.require_even()?;
    Ok(frame)
}

/// `p = C(d'+e', e')` for a frame with `e` even.
pub fn symmetric_count_closed(frame: Frame) -> Result<BigUint> {
    let half = frame.half_cols()?;
    Ok(binomial(frame.half_rows() + half, half))
}

/// The frame the decomposition of `Gr(d, d+e)` is computed in: `d x e`, or
/// `e x d` when `e` is odd.
fn grassmannian_frame(d: usize, e: usize) -> Result<(Frame, bool)> {
    let frame = Frame::new(d, e)?;
    match (d % 2, e % 2) {
        (1, 1) => Err(Error::OddDimension { d, e }),
        (_, 1) => Ok((frame.transposed(), true)),
        _ => Ok((frame, false)),
    }
}

/// `(p, q)` from the closed forms, without listing any partitions.
pub fn grassmannian_counts(d: usize, e: usize) -> Result<(BigUint, BigUint)> {
    let (frame, _) = grassmannian_frame(d, e)?;
    let p = symmetric_count_closed(frame)?;
    let q = (frame.size() - &p) / 2u32;
    Ok((p, q))
}

/// `GW^{[shift]}(Gr(d, d+e)) ≃ p·GW^{[shift]}(k) ⊕ q·K(k)` with
/// `p = C(d'+e', e')` and `q = (C(d+e, e) − p)/2`.
///
/// Requires `d·e` even. When `e` is odd the frame is transposed first, which
/// describes the same Grassmannian `Gr(e, d+e)`.
pub fn gw_grassmannian(d: usize, e: usize, shift: i64) -> Result<SpectrumDecomposition> {
    let (frame, transposed) = grassmannian_frame(d, e)?;
    let subject = Subject::Grassmannian { d, e, transposed };
    let (p, q) = grassmannian_counts(d, e)?;

    if frame.size() > BigUint::from(PROVENANCE_LIMIT) {
        return Ok(SpectrumDecomposition::from_counts(subject, shift, p, q));
    }
    let mut labels = Vec::new();
    for alpha in frame.partitions() {
        let dual = frame.dual(&alpha)?;
        if dual == alpha {
            labels.push(Provenance::SelfDual(alpha));
        } else if alpha > dual {
            labels.push(Provenance::DualPair(alpha, dual));
        }
    }
    let out = SpectrumDecomposition::from_provenance(subject, shift, labels);
    debug_assert_eq!(out.gw_count(), p);
    debug_assert_eq!(out.k_count(), q);
    Ok(out)
}

/// The generators of `D_{de'}`: each symmetric half partition gives a copy
/// of `GW^{[shift]}(k)`, each pair of asymmetric half partitions a `K(k)`.
pub fn gw_middle(d: usize, e: usize, shift: i64) -> Result<SpectrumDecomposition> {
    let frame = even_frame(d, e)?;
    let mut labels = Vec::new();
    let mut asymmetric = 0u64;
    for alpha in frame.half_partitions()? {
        let dual = frame.dual(&alpha)?;
        if dual == alpha {
            labels.push(Provenance::SelfDual(alpha));
        } else {
            asymmetric += 1;
            if alpha > dual {
                labels.push(Provenance::DualPair(alpha, dual));
            }
        }
    }
    assert!(
        asymmetric.is_multiple_of(2),
        "duality pairs asymmetric half partitions"
    );
    Ok(SpectrumDecomposition::from_provenance(
        Subject::MiddleBlock { d, e },
        shift,
        labels,
    ))
}

/// A `K(B_i)` term of the partial decomposition: the partitions of degree
/// `i < de'`, each hyperbolically paired with its dual in degree `de − i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicBlock {
    pub degree: u64,
    pub partitions: Vec<Partition>,
}

/// `GW^{[n]}(X) ≃ GW^{[n]}(B_{de'}) ⊕ ⊕_{i<de'} K(B_i)` with the middle
/// block left unresolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialDecomposition {
    pub frame: Frame,
    pub shift: i64,
    /// Half partitions indexing the generators of the middle block.
    pub middle: Vec<Partition>,
    pub hyperbolic: Vec<HyperbolicBlock>,
}

impl PartialDecomposition {
    pub fn middle_rank(&self) -> usize {
        self.middle.len()
    }

    /// `|(P_{d,e})_i|`, the number of `K(k)` copies in `K(B_i)`.
    pub fn k_multiplicity(&self, degree: u64) -> usize {
        self.hyperbolic
            .iter()
            .find(|b| b.degree == degree)
            .map_or(0, |b| b.partitions.len())
    }

    /// Splits `B_{de'}` with [`gw_middle`] and flattens everything into
    /// copies of `GW^{[n]}(k)` and `K(k)`.
    pub fn resolve(&self) -> Result<SpectrumDecomposition> {
        let (d, e) = (self.frame.rows(), self.frame.cols());
        let middle = gw_middle(d, e, self.shift)?;
        let mut labels = middle.provenance;
        for block in &self.hyperbolic {
            for alpha in &block.partitions {
                labels.push(Provenance::dual_pair(
                    alpha.clone(),
                    self.frame.dual(alpha)?,
                ));
            }
        }
        Ok(SpectrumDecomposition::from_provenance(
            Subject::Grassmannian {
                d,
                e,
                transposed: false,
            },
            self.shift,
            labels,
        ))
    }
}

pub fn gw_partial(d: usize, e: usize, shift: i64) -> Result<PartialDecomposition> {
    let frame = even_frame(d, e)?;
    let half = frame.area() / 2;
    let hyperbolic = (0..half)
        .map(|degree| HyperbolicBlock {
            degree,
            partitions: frame.partitions_of_degree(degree).collect(),
        })
        .collect();
    Ok(PartialDecomposition {
        frame,
        shift,
        middle: frame.half_partitions()?.collect(),
        hyperbolic,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    /// Walk `(P_{d,e})_{de'}`.
    Enumerate,
    /// Recurse on the first part.
    Recursive,
    /// `C(d'+e', e')`; counts symmetric half partitions only.
    ClosedSymmetric,
}

/// Counts half partitions of `P_{d,e}` (all of them, or only the symmetric
/// ones for [`CountMethod::ClosedSymmetric`]).
pub fn count_half_partitions(d: usize, e: usize, method: CountMethod) -> Result<BigUint> {
    let frame = even_frame(d, e)?;
    match method {
        CountMethod::Enumerate => Ok(BigUint::from(frame.half_partitions()?.count())),
        CountMethod::Recursive => Ok(half_partition_count_recursive(frame)),
        CountMethod::ClosedSymmetric => symmetric_count_closed(frame),
    }
}

/// Symmetric half partitions counted by walking the degree-`de'` slice.
pub fn count_symmetric_enumerated(frame: Frame) -> Result<u64> {
    let mut n = 0;
    for alpha in frame.half_partitions()? {
        if frame.dual(&alpha)? == alpha {
            n += 1;
        }
    }
    Ok(n)
}

/// `A_{d,e}`, the number of asymmetric half partitions.
pub fn count_asymmetric(frame: Frame) -> Result<u64> {
    let total = frame.half_partitions()?.count() as u64;
    Ok(total - count_symmetric_enumerated(frame)?)
}

/// `|(P_{d,e})_{de'}| = Σ_{j=1}^{e} |(P_{d−1,j})_{de'−j}|`; the first part
/// is nonzero because `de' > 0`.
fn half_partition_count_recursive(frame: Frame) -> BigUint {
    let (d, e) = (frame.rows(), frame.cols());
    let target = frame.area() / 2;
    let mut memo = HashMap::new();
    (1..=e)
        .filter(|&j| j as u64 <= target)
        .map(|j| degree_count_recursive(d - 1, j, target - j as u64, &mut memo))
        .sum()
}

/// `|(P_{d,e})_k|` via `Σ_{j=0}^{e} |(P_{d−1,j})_{k−j}|`. Inner calls start at
/// `j = 0` because a sub-partition may be empty.
pub fn degree_count(d: usize, e: usize, k: u64) -> BigUint {
    degree_count_recursive(d, e, k, &mut HashMap::new())
}

fn degree_count_recursive(
    d: usize,
    e: usize,
    k: u64,
    memo: &mut HashMap<(usize, usize, u64), BigUint>,
) -> BigUint {
    if d == 0 {
        return if k == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if k > (d * e) as u64 {
        return BigUint::zero();
    }
    if let Some(v) = memo.get(&(d, e, k)) {
        return v.clone();
    }
    let v: BigUint = (0..=e.min(k as usize))
        .map(|j| degree_count_recursive(d - 1, j, k - j as u64, memo))
        .sum();
    memo.insert((d, e, k), v.clone());
    v
}

/// Decomposition of the equivariant theory attached to a census: symmetric
/// weights give `GW^{[shift]}`, anti-symmetric ones `GW^{[shift+2]}`, dual
/// pairs `K`.
pub fn decompose_census(census: &BoxCensus, shift: i64) -> SpectrumDecomposition {
    let labels = census
        .symmetric
        .iter()
        .map(|w| Provenance::SelfDualWeight {
            weight: w.clone(),
            antisymmetric: false,
        })
        .chain(
            census
                .antisymmetric
                .iter()
                .map(|w| Provenance::SelfDualWeight {
                    weight: w.clone(),
                    antisymmetric: true,
                }),
        )
        .chain(
            census
                .dual_pairs
                .iter()
                .map(|(a, b)| Provenance::WeightOrbit(a.clone(), b.clone())),
        )
        .collect();
    SpectrumDecomposition::from_provenance(
        Subject::EquivariantBox {
            rank: census.rank,
            bound: census.bound,
        },
        shift,
        labels,
    )
}

/// `GL_rank`-equivariant `GW^{[shift]}` of a point, restricted to dominant
/// weights with `|mᵢ| ≤ bound`.
pub fn equivariant_gw(rank: usize, bound: u32, shift: i64) -> SpectrumDecomposition {
    decompose_census(&classify_box(rank, bound), shift)
}
