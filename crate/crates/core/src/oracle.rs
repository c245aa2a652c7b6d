//! Naive reference implementations used to cross-check the counting
//! formulas and the enumerator in [`crate::young`].
//!
//! Nothing here calls into `young` or `decomp`: partitions are produced by
//! nested loops over raw tuples and the duality is recomputed inline.

use crate::error::{Error, Result};
use crate::young::Partition;

/// Frames with more partitions than this are refused.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

fn frame_size(d: usize, e: usize) -> u128 {
    // C(d+e, d) by the multiplicative formula; exact at every step.
    let mut acc: u128 = 1;
    for i in 1..=d as u128 {
        acc = acc * (e as u128 + i) / i;
        if acc > u128::from(u64::MAX) {
            return acc;
        }
    }
    acc
}

fn guard(d: usize, e: usize) -> Result<()> {
    let count = frame_size(d, e);
    if count > u128::from(BRUTE_FORCE_LIMIT) {
        return Err(Error::TooLarge {
            d,
            e,
            count: count.to_string(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

fn tuples(d: usize, e: u32) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, d: usize, cap: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for a in 0..=cap {
            prefix.push(a);
            go(prefix, d, a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(d), d, e, &mut out);
    out
}

/// Every weakly decreasing `d`-tuple with entries in `[0, e]`, sorted in
/// decreasing lexicographic order.
pub fn brute_enumerate_partitions(d: usize, e: usize) -> Result<Vec<Partition>> {
    guard(d, e)?;
    let mut raw = tuples(d, e as u32);
    raw.sort_unstable_by(|a, b| b.cmp(a));
    Ok(raw
        .into_iter()
        .map(|t| Partition::new(t).expect("nested loops yield decreasing tuples"))
        .collect())
}

/// `|(P_{d,e})_degree|` by filtering the brute-force enumeration.
pub fn brute_count(d: usize, e: usize, degree: u64) -> Result<u64> {
    guard(d, e)?;
    Ok(tuples(d, e as u32)
        .iter()
        .filter(|t| t.iter().map(|&a| u64::from(a)).sum::<u64>() == degree)
        .count() as u64)
}

/// Number of `α ∈ P_{d,e}` with `(e − α_d, …, e − α₁) = α`.
pub fn brute_symmetric_count(d: usize, e: usize) -> Result<u64> {
    if e % 2 == 1 {
        return Err(Error::OddFrame { d, e });
    }
    guard(d, e)?;
    let e32 = e as u32;
    Ok(tuples(d, e32)
        .iter()
        .filter(|t| (0..d).all(|i| t[i] == e32 - t[d - 1 - i]))
        .count() as u64)
}

/// Number of half partitions that differ from their dual.
pub fn brute_asymmetric_count(d: usize, e: usize) -> Result<u64> {
    let symmetric = brute_symmetric_count(d, e)?;
    Ok(brute_count(d, e, (d * e / 2) as u64)? - symmetric)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small_frames() {
        assert_eq!(brute_enumerate_partitions(2, 2).unwrap().len(), 6);
        assert_eq!(brute_enumerate_partitions(3, 3).unwrap().len(), 20);
        assert_eq!(
            brute_enumerate_partitions(0, 5).unwrap(),
            vec![Partition::empty()]
        );
        let first = &brute_enumerate_partitions(2, 3).unwrap()[0];
        assert_eq!(first.parts(), &[3, 3]);
    }

    #[test]
    fn counts() {
        assert_eq!(brute_count(2, 2, 2).unwrap(), 2);
        assert_eq!(brute_count(1, 2, 1).unwrap(), 1);
        for (d, e) in [(1, 1), (3, 4), (5, 2)] {
            assert_eq!(brute_count(d, e, 0).unwrap(), 1);
        }
    }

    #[test]
    fn symmetric_counts() {
        assert_eq!(brute_symmetric_count(4, 4).unwrap(), 6);
        assert_eq!(brute_symmetric_count(2, 2).unwrap(), 2);
        assert_eq!(brute_symmetric_count(1, 2).unwrap(), 1);
        assert_eq!(brute_asymmetric_count(1, 2).unwrap(), 0);
        assert!(matches!(
            brute_symmetric_count(2, 3),
            Err(Error::OddFrame { .. })
        ));
    }

    #[test]
    fn guard_refuses_huge_frames() {
        assert!(matches!(
            brute_enumerate_partitions(20, 20),
            Err(Error::TooLarge { .. })
        ));
        assert!(brute_count(30, 30, 0).is_err());
        assert_eq!(frame_size(4, 4), 70);
        assert_eq!(frame_size(0, 9), 1);
    }
}
