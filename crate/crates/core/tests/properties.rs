use gwgrass::rootdata::{
    classify_box, dominant_weights_in_box, dual_weight, pair_two_rho_check, sign_of, SignClass,
    WeightVector,
};
use gwgrass::{oracle, Frame, Partition};
use proptest::prelude::*;

fn frame_and_partition(max: usize, even_e: bool) -> impl Strategy<Value = (Frame, Partition)> {
    let e_range = if even_e {
        (1..=max / 2).prop_map(|h| 2 * h).boxed()
    } else {
        (1..=max).boxed()
    };
    (1..=max, e_range).prop_flat_map(|(d, e)| {
        prop::collection::vec(0..=e as u32, d).prop_map(move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            (Frame::new(d, e).unwrap(), Partition::new(parts).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn dual_is_an_involution((frame, alpha) in frame_and_partition(12, false)) {
        let dual = frame.dual(&alpha).unwrap();
        prop_assert!(frame.contains(&dual));
        prop_assert_eq!(frame.dual(&dual).unwrap(), alpha.clone());
        prop_assert_eq!(dual.degree(), frame.area() - alpha.degree());
    }

    #[test]
    fn transpose_is_an_involution((frame, alpha) in frame_and_partition(12, false)) {
        let t = frame.transpose(&alpha).unwrap();
        prop_assert_eq!(t.degree(), alpha.degree());
        prop_assert!(frame.transposed().contains(&t));
        prop_assert_eq!(frame.transposed().transpose(&t).unwrap(), alpha);
    }

    #[test]
    fn transpose_commutes_with_dual((frame, alpha) in frame_and_partition(12, false)) {
        let tf = frame.transposed();
        let lhs = frame.transpose(&frame.dual(&alpha).unwrap()).unwrap();
        let rhs = tf.dual(&frame.transpose(&alpha).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binary_round_trip((frame, alpha) in frame_and_partition(12, false)) {
        let s = frame.to_binary(&alpha).unwrap();
        prop_assert_eq!(s.zeros(), frame.rows());
        prop_assert_eq!(s.ones(), frame.cols());
        prop_assert_eq!(frame.from_binary(&s).unwrap(), alpha);
    }

    #[test]
    fn duality_reverses_the_lattice_path((frame, alpha) in frame_and_partition(12, false)) {
        let s = frame.to_binary(&alpha).unwrap();
        let dual = frame.dual(&alpha).unwrap();
        prop_assert_eq!(frame.to_binary(&dual).unwrap(), s.reversed());
    }

    #[test]
    fn palindromes_are_symmetric((frame, alpha) in frame_and_partition(12, true)) {
        let s = frame.to_binary(&alpha).unwrap();
        prop_assert_eq!(s.is_palindrome(), frame.is_symmetric(&alpha).unwrap());
        if frame.is_symmetric(&alpha).unwrap() {
            prop_assert!(frame.is_half_partition(&alpha).unwrap());
        }
    }

    #[test]
    fn weight_duality(entries in prop::collection::vec(-20i64..=20, 1..8)) {
        let mut entries = entries;
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = WeightVector(entries);
        let dual = dual_weight(&lambda).unwrap();
        prop_assert!(dual.is_dominant());
        prop_assert_eq!(dual_weight(&dual).unwrap(), lambda.clone());
        prop_assert_eq!(dual.degree(), -lambda.degree());
        prop_assert_eq!(pair_two_rho_check(&dual), pair_two_rho_check(&lambda));
    }
}

#[test]
fn exhaustive_duality_up_to_six() {
    for d in 1..=6 {
        for e in 1..=6 {
            let frame = Frame::new(d, e).unwrap();
            let all: Vec<Partition> = frame.partitions().collect();
            assert_eq!(all, oracle::brute_enumerate_partitions(d, e).unwrap());
            for alpha in &all {
                let dual = frame.dual(alpha).unwrap();
                assert_eq!(&frame.dual(&dual).unwrap(), alpha);
                assert_eq!(dual.degree(), frame.area() - alpha.degree());
                let s = frame.to_binary(alpha).unwrap();
                assert_eq!(&frame.from_binary(&s).unwrap(), alpha);
                let t = frame.transpose(alpha).unwrap();
                assert_eq!(&frame.transposed().transpose(&t).unwrap(), alpha);
                assert_eq!(
                    frame.transpose(&dual).unwrap(),
                    frame.transposed().dual(&t).unwrap()
                );
                if e % 2 == 0 {
                    let symmetric = frame.is_symmetric(alpha).unwrap();
                    assert_eq!(s.is_palindrome(), symmetric, "{alpha} in {frame}");
                    if frame.is_half_partition(alpha).unwrap() && !symmetric {
                        assert_ne!(&dual, alpha);
                        assert!(frame.is_half_partition(&dual).unwrap());
                        assert!(!frame.is_symmetric(&dual).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn shifted_partition_duality_up_to_six() {
    for d in 1..=6 {
        for half in 1..=3 {
            let e = 2 * half;
            let frame = Frame::new(d, e).unwrap();
            for alpha in frame.partitions() {
                let shifted = WeightVector::from(&alpha).shifted(half as i64);
                let lhs = dual_weight(&shifted).unwrap();
                let rhs = WeightVector::from(&frame.dual(&alpha).unwrap()).shifted(half as i64);
                assert_eq!(lhs, rhs, "{alpha} in {frame}");
            }
        }
    }
}

#[test]
fn type_a_has_no_antisymmetric_weights() {
    for rank in 1..=5 {
        for bound in 0..=4 {
            for lambda in dominant_weights_in_box(rank, bound) {
                assert_ne!(
                    sign_of(&lambda).unwrap(),
                    SignClass::AntiSymmetric,
                    "{lambda}"
                );
            }
            let census = classify_box(rank, bound);
            assert!(census.antisymmetric.is_empty());
            assert_eq!(
                census.weight_count(),
                dominant_weights_in_box(rank, bound).len()
            );
            for (rep, partner) in &census.dual_pairs {
                assert!(rep > partner);
                assert_eq!(&dual_weight(rep).unwrap(), partner);
            }
        }
    }
}

#[test]
fn box_census_matches_self_dual_form() {
    // Self-dual weights of GL_n are determined by their first ⌈n/2⌉ entries;
    // in odd rank the middle entry is zero.
    for rank in 1..=5 {
        for bound in 0..=3 {
            let census = classify_box(rank, bound);
            for lambda in &census.symmetric {
                let m = lambda.entries();
                for i in 0..rank {
                    assert_eq!(m[i], -m[rank - 1 - i]);
                }
            }
        }
    }
}
