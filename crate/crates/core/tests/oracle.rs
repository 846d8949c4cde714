use std::collections::BTreeMap;

use diagcoinv::characters::{euler_profile, LinearChar, Scenario};
use diagcoinv::oracle::{epsilon_report, quotient_dims_direct, quotient_hilbert, DEFAULT_MAX_DEGREE};

fn dims(n: usize) -> Vec<usize> {
    quotient_hilbert(n, DEFAULT_MAX_DEGREE)
        .unwrap()
        .per_degree
        .iter()
        .map(|d| d.quotient_dim)
        .collect()
}

// Values computed by this oracle and cross-checked against the direct
// spanning-set route; frozen as regression data.
#[test]
fn frozen_hilbert_series() {
    assert_eq!(dims(1), vec![1, 2]);
    assert_eq!(dims(2), vec![1, 4, 7, 8, 5]);
    assert_eq!(dims(3).iter().sum::<usize>(), 343);
}

#[test]
fn routes_agree() {
    for n in 1..=2 {
        let mut want = dims(n);
        want.push(0);
        assert_eq!(quotient_dims_direct(n, DEFAULT_MAX_DEGREE).unwrap(), want);
    }
}

#[test]
fn structural_invariants() {
    for n in 1..=3 {
        let r = quotient_hilbert(n, DEFAULT_MAX_DEGREE).unwrap();
        assert!(r.complete);
        assert_eq!(r.per_degree[0].quotient_dim, 1);
        assert_eq!(r.per_degree[1].quotient_dim, 2 * n);
        assert_eq!(r.total, r.per_degree.iter().map(|d| d.quotient_dim).sum::<usize>());
        assert_eq!(r.total, r.per_euler_degree.iter().map(|d| d.quotient_dim).sum::<usize>());
        // for n = 1 the four characters collapse to two and double count
        if n >= 2 {
            for d in &r.per_degree {
                assert!(d.isotypic.values().sum::<usize>() <= d.quotient_dim);
            }
        }
        // the Euler grading is symmetric under swapping x and y
        let e: Vec<usize> = r.per_euler_degree.iter().map(|d| d.quotient_dim).collect();
        assert!(e.iter().eq(e.iter().rev()));
    }
}

#[test]
fn chi_prime_dominates_gordon_profile() {
    for n in 1..=3 {
        let r = quotient_hilbert(n, DEFAULT_MAX_DEGREE).unwrap();
        let oracle = r.isotypic_by_euler_degree(LinearChar::ChiPrime);
        let lw = Scenario::Gordon.lowest_weight(n).unwrap();
        let theory: BTreeMap<i64, u64> = euler_profile(&lw, LinearChar::Chi).unwrap();
        for (deg, count) in theory {
            assert!(oracle.get(&deg).copied().unwrap_or(0) as u64 >= count, "n={n} degree {deg}");
        }
    }
}

#[test]
fn epsilon_is_zero_below_four() {
    for n in 1..=3 {
        let e = epsilon_report(n, DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(e.epsilon, 0, "n={n}");
        assert_eq!(e.chi_prime_dim, n + 1);
    }
}
