use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use wlpoly::partitions::{
    f_count_oracle, factorial, partitions_of, partitions_up_to, DegreeVector, Partition,
};

/// Random partitions of size at most `max`.
fn partition(max: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=max.max(1), 0..=max).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max
        });
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition(12)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn degree_vector_round_trip(lam in partition(12)) {
        let n = lam.degree_vector();
        prop_assert!(n.entries().windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(DegreeVector::new(n.entries().to_vec()).unwrap().to_partition(), lam);
    }

    #[test]
    fn f_count_matches_path_count(lam in partition(12)) {
        prop_assert_eq!(lam.f_count(), f_count_oracle(&lam).unwrap());
    }

    #[test]
    fn f_count_sums_over_lower_covers(lam in partition(12)) {
        prop_assume!(!lam.is_empty());
        let sum: BigUint = lam.covers_down().unwrap().iter().map(|c| c.smaller.f_count()).sum();
        prop_assert_eq!(sum, lam.f_count());
    }

    #[test]
    fn text_round_trip(lam in partition(12)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        let json = serde_json::to_string(&lam).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), lam);
    }
}

#[test]
fn f_count_matches_oracle_through_twelve() {
    for lam in partitions_up_to(12) {
        assert_eq!(lam.f_count(), f_count_oracle(&lam).unwrap(), "{lam}");
    }
}

#[test]
fn upper_cover_sum() {
    // Σ_{λ⋗μ} F_λ = (|μ|+1) F_μ
    for mu in partitions_up_to(10) {
        let sum: BigUint = mu.covers_up().iter().map(|c| c.larger.f_count()).sum();
        assert_eq!(sum, mu.f_count() * BigUint::from(mu.size() + 1), "{mu}");
    }
}

#[test]
fn signed_domino_sum_vanishes() {
    // Σ_{λ∈R₂⁺(ρ)} (-1)^{ht} F_λ = 0
    for rho in partitions_up_to(10) {
        let sum: BigInt = rho
            .border_strips_up(2)
            .iter()
            .map(|s| BigInt::from(s.larger.f_count()) * s.sign())
            .sum();
        assert_eq!(sum, BigInt::from(0), "{rho}");
    }
}

#[test]
fn strip_duality() {
    for lam in partitions_up_to(10) {
        for k in 1..=4 {
            for s in lam.border_strips_down(k) {
                let up = s.smaller.border_strips_up(k);
                assert!(
                    up.iter().any(|t| t.larger == lam && t.height == s.height),
                    "{lam} -> {} (k={k})",
                    s.smaller
                );
            }
            for s in lam.border_strips_up(k) {
                if s.larger.size() <= 10 {
                    assert!(s.larger.border_strips_down(k).iter().any(|t| t.smaller == lam && t.height == s.height));
                }
            }
        }
    }
}

#[test]
fn cover_duality() {
    for lam in partitions_up_to(10) {
        for c in lam.covers_up() {
            let back = c.larger.covers_down().unwrap();
            assert!(back.iter().any(|d| d.smaller == lam && d.content == c.content && d.row == c.row));
        }
    }
}

#[test]
fn plancherel_normalization_through_ten() {
    for n in 0..=10 {
        let total: BigUint = partitions_of(n).iter().map(|p| p.f_count().pow(2)).sum();
        assert_eq!(total, factorial(n), "n={n}");
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
}
