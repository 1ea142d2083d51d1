//! Standalone integer utilities: trial-division primality and
//! factorization, aliquot sums, and the practical-number criterion.

use crate::error::SieveError;

/// Number of ones in the binary expansion.
pub fn binary_popcount(n: u64) -> u32 {
    n.count_ones()
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Trial-division factorization into (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Sum of proper divisors s(n) = sigma(n) - n, by divisor enumeration.
/// s(1) = 0; n = 0 is a domain error.
pub fn aliquot_sum(n: u64) -> Result<u64, SieveError> {
    if n == 0 {
        return Err(SieveError::ZeroArgument);
    }
    Ok(aliquot_sum_unchecked(n))
}

pub(crate) fn aliquot_sum_unchecked(n: u64) -> u64 {
    if n <= 1 {
        return 0;
    }
    let mut s = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            s += d;
            let q = n / d;
            if q != d {
                s += q;
            }
        }
        d += 1;
    }
    s
}

/// Iterated sum of squared digits reaches 1. Every non-happy trajectory
/// falls into the cycle through 4, so the loop terminates there.
pub fn is_happy_number(n: u64) -> bool {
    let mut x = n;
    while x != 1 && x != 4 {
        let mut s = 0;
        let mut v = x;
        while v > 0 {
            let d = v % 10;
            s += d * d;
            v /= 10;
        }
        x = s;
    }
    x == 1
}

/// Practical-number test from a factorization with ascending primes:
/// n = 1 qualifies; otherwise n must be even and each prime p_i must
/// satisfy p_i <= 1 + sigma(product of the smaller prime powers).
pub fn practical_from_factors(factors: &[(u64, u32)]) -> bool {
    if factors.is_empty() {
        return true; // n = 1
    }
    if factors[0].0 != 2 {
        return false;
    }
    let mut sigma: u64 = 1;
    for &(p, a) in factors {
        if p > sigma + 1 {
            return false;
        }
        // sigma(p^a) = (p^(a+1) - 1) / (p - 1)
        let mut pa = 1u64;
        for _ in 0..=a {
            pa = pa.saturating_mul(p);
        }
        sigma = sigma.saturating_mul((pa - 1) / (p - 1));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliquot_examples() {
        assert_eq!(aliquot_sum(6), Ok(6));
        assert_eq!(aliquot_sum(13), Ok(1));
        assert_eq!(aliquot_sum(25), Ok(6));
        assert_eq!(aliquot_sum(1), Ok(0));
        assert_eq!(aliquot_sum(0), Err(SieveError::ZeroArgument));
    }

    #[test]
    fn popcount_examples() {
        assert_eq!(binary_popcount(6), 2);
        assert_eq!(binary_popcount(7), 3);
        assert_eq!(binary_popcount(8128), 7);
    }

    #[test]
    fn popcount_of_powers_of_two() {
        for k in 0..=60 {
            assert_eq!(binary_popcount(1u64 << k), 1);
        }
    }

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2047)); // 23 * 89
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(8128), vec![(2, 6), (127, 1)]);
    }

    #[test]
    fn happy_examples() {
        assert!(is_happy_number(7));
        assert!(is_happy_number(1));
        assert!(!is_happy_number(4));
    }

    #[test]
    fn practical_criterion_examples() {
        assert!(practical_from_factors(&factorize(8)));
        assert!(practical_from_factors(&factorize(1)));
        assert!(!practical_from_factors(&factorize(10)));
    }
}
