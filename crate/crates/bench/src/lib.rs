//! Target sets shared by the criterion benchmarks.

/// Odd numbers in `[lo, hi]`.
pub fn odd_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|n| n % 2 == 1).collect()
}

/// Balanced semiprimes `p * q` with `p` and `q` prime and close together:
/// the inputs the difference-of-squares scan resolves in a handful of
/// candidates while trial division has to walk all the way up to `p`.
pub fn balanced_semiprimes() -> Vec<u64> {
    vec![
        1517,      // 37 * 41
        9991,      // 97 * 103
        10403,     // 101 * 103
        250997,    // 499 * 503
        1005973,   // 997 * 1009
        99400891,  // 9967 * 9973
    ]
}

/// Primes of increasing size: the scan's worst case, since certifying
/// primality walks the whole candidate interval.
pub fn scan_worst_case_primes() -> Vec<u64> {
    vec![101, 997, 9973, 49999]
}

#[cfg(test)]
mod tests {
    use super::*;
    use fermatx::{trial_division_is_prime, Natural};

    #[test]
    fn semiprime_table_is_correct() {
        for n in balanced_semiprimes() {
            let f = fermatx::factorize(&Natural::from(n), None).unwrap();
            assert_eq!(f.factors.len(), 2, "{n} is not a semiprime");
            for pp in &f.factors {
                assert_eq!(pp.exponent, 1);
                assert!(trial_division_is_prime(&pp.prime).unwrap());
            }
            assert_eq!(f.product(), Natural::from(n));
        }
    }

    #[test]
    fn prime_table_is_correct() {
        for p in scan_worst_case_primes() {
            assert!(trial_division_is_prime(&Natural::from(p)).unwrap());
        }
    }

    #[test]
    fn odd_range_bounds_inclusive() {
        assert_eq!(odd_range(3, 9), vec![3, 5, 7, 9]);
        assert_eq!(odd_range(4, 8), vec![5, 7]);
        assert_eq!(odd_range(3, 99).len(), 49);
    }
}
