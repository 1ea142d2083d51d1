//! Oracle-equivalence tests: every sieved table must agree with a direct,
//! independently coded computation on a range where brute force is cheap.

use proptest::prelude::*;
use sieve_core::{
    aliquot_sum, build_caches, pow2_decimal, to_roman, untouchable_set, DigitString,
    PowerOfTwoScan,
};

/// Brute-force aliquot sum by scanning every candidate divisor, kept
/// deliberately naive and separate from the library's implementation.
fn aliquot_by_full_scan(n: u64) -> u64 {
    (1..n).filter(|d| n % d == 0).sum()
}

#[test]
fn sieved_aliquot_matches_divisor_enumeration() {
    let limit = 2000;
    let cache = build_caches(limit).unwrap();
    for n in 2..=limit {
        assert_eq!(
            cache.aliquot_of(n),
            aliquot_by_full_scan(n),
            "aliquot table wrong at {n}"
        );
        assert_eq!(aliquot_sum(n).unwrap(), aliquot_by_full_scan(n));
    }
}

/// Naive untouchable search: n <= limit is reachable iff some m <= limit^2
/// has aliquot sum n, with s computed by full divisor scan.
fn untouchable_by_naive_search(limit: u64) -> Vec<u64> {
    let mut reached = vec![false; limit as usize + 1];
    for m in 2..=limit * limit {
        let s = {
            let mut s = 0;
            let mut d = 1;
            while d * d <= m {
                if m % d == 0 {
                    if d < m {
                        s += d;
                    }
                    let q = m / d;
                    if q != d && q < m {
                        s += q;
                    }
                }
                d += 1;
            }
            s
        };
        if s <= limit {
            reached[s as usize] = true;
        }
    }
    (1..=limit).filter(|&n| !reached[n as usize]).collect()
}

#[test]
fn untouchable_blocked_sieve_matches_naive_search() {
    let blocked = untouchable_set(100);
    let from_blocked: Vec<u64> = (1..=100).filter(|&n| blocked[n as usize]).collect();
    let naive = untouchable_by_naive_search(100);
    assert_eq!(from_blocked, naive);
    assert_eq!(from_blocked, vec![2, 5, 52, 88, 96]);
}

#[test]
fn pow2_doubling_consistency() {
    let mut scan = PowerOfTwoScan::new();
    for n in 0..1000u64 {
        let direct = pow2_decimal(n);
        assert_eq!(scan.to_digit_string(), direct, "exponent {n}");
        scan.advance();
    }
}

/// Roman parser used only by this test: accumulate symbol values, treating
/// a symbol smaller than its successor as subtractive.
fn parse_roman(s: &str) -> u64 {
    let value = |c: char| -> i64 {
        match c {
            'I' => 1,
            'V' => 5,
            'X' => 10,
            'L' => 50,
            'C' => 100,
            'D' => 500,
            'M' => 1000,
            _ => panic!("bad roman symbol {c}"),
        }
    };
    let vals: Vec<i64> = s.chars().map(value).collect();
    let mut total: i64 = 0;
    for (i, &v) in vals.iter().enumerate() {
        if vals.get(i + 1).is_some_and(|&next| next > v) {
            total -= v;
        } else {
            total += v;
        }
    }
    total as u64
}

#[test]
fn roman_is_injective_and_round_trips() {
    let mut seen = std::collections::HashSet::new();
    for n in 1..=3999u64 {
        let r = to_roman(n).unwrap();
        assert!(seen.insert(r.clone()), "duplicate numeral {r}");
        assert_eq!(parse_roman(&r), n, "round trip failed for {n} -> {r}");
    }
}

proptest! {
    #[test]
    fn digit_string_round_trips_u64(n in any::<u64>()) {
        let d = DigitString::from_u64(n);
        prop_assert_eq!(d.to_string(), n.to_string());
        prop_assert_eq!(d.value(), Some(n));
        let reparsed = DigitString::parse(&d.to_string()).unwrap();
        prop_assert_eq!(reparsed, d);
    }

    #[test]
    fn double_reversal_is_identity_on_canonical_values(n in 1u64..10_000_000) {
        // Reversal strips leading zeros, so reversing twice lands back on
        // the original only when the original has no trailing zeros.
        let d = DigitString::from_u64(n);
        prop_assert_eq!(d.reversed().digit_sum(), d.digit_sum());
        if n % 10 != 0 {
            prop_assert_eq!(d.reversed().reversed(), d);
        }
    }

    #[test]
    fn aliquot_of_prime_is_one(i in 0usize..100) {
        let primes: Vec<u64> = (2..1000).filter(|&n| sieve_core::is_prime(n)).collect();
        let p = primes[i % primes.len()];
        prop_assert_eq!(aliquot_sum(p).unwrap(), 1);
    }
}
