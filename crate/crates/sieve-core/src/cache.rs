//! Precomputed tables over a configurable range.
//!
//! [`build_caches`] populates everything in one pass: a smallest-prime-factor
//! sieve (which doubles as the primality table), an aliquot-sum table
//! extended to twice the limit so amicable partners stay in range, and the
//! membership tables for the sequence-style predicates that are cheapest to
//! produce wholesale (Ulam, lucky, untouchable, practical, happy).
//!
//! The untouchable table is the expensive one. A number n <= limit is
//! reachable only from m with s(m) = n, and any composite m has
//! s(m) >= 1 + sqrt(m) while primes contribute only the value 1, so
//! scanning m in [2, limit^2] is exhaustive. The scan runs as a blocked
//! divisor-pair sieve: each block of 2^20 consecutive m accumulates
//! divisor pairs (d, m/d) with d < sqrt(m), keeping memory flat no matter
//! the limit.

use crate::arith::{aliquot_sum_unchecked, is_happy_number, is_prime, practical_from_factors};
use crate::error::SieveError;

pub const MIN_LIMIT: u64 = 2;
pub const MAX_LIMIT: u64 = 100_000;

/// Block size for the untouchable divisor-sum sieve: 2^20 values per block
/// (8 MiB of u64 accumulators) balances cache locality against per-block
/// setup overhead.
const UNTOUCHABLE_BLOCK: usize = 1 << 20;

/// Immutable precomputed tables for the range [0, limit].
#[derive(Debug)]
pub struct SieveCache {
    limit: u64,
    is_prime: Vec<bool>,
    smallest_prime_factor: Vec<u32>,
    /// Aliquot sums over [0, 2 * limit]; values beyond are computed on demand.
    aliquot: Vec<u64>,
    ulam: Vec<bool>,
    lucky: Vec<bool>,
    untouchable: Vec<bool>,
    practical: Vec<bool>,
    happy: Vec<bool>,
}

impl SieveCache {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primality for any n: table lookup within the range, trial division
    /// beyond it (twin checks at the boundary need limit + 2).
    pub fn is_prime(&self, n: u64) -> bool {
        match self.is_prime.get(n as usize) {
            Some(&p) => p,
            None => is_prime(n),
        }
    }

    /// Smallest prime factor of n, for 2 <= n <= limit.
    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        debug_assert!(n >= 2 && n <= self.limit);
        self.smallest_prime_factor[n as usize] as u64
    }

    /// Factorization into (prime, exponent) pairs, ascending. Uses the
    /// precomputed factor table within range and trial division beyond.
    pub fn factorize(&self, n: u64) -> Vec<(u64, u32)> {
        if n > self.limit {
            return crate::arith::factorize(n);
        }
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut v = n as usize;
        while v > 1 {
            let p = self.smallest_prime_factor[v] as usize;
            let mut e = 0u32;
            while v % p == 0 {
                v /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// Aliquot sum for any n >= 1: table lookup up to 2 * limit, divisor
    /// enumeration beyond (aliquot chain walks can leave the table).
    pub fn aliquot_of(&self, n: u64) -> u64 {
        debug_assert!(n >= 1);
        match self.aliquot.get(n as usize) {
            Some(&s) => s,
            None => aliquot_sum_unchecked(n),
        }
    }

    pub fn is_ulam(&self, n: u64) -> bool {
        self.ulam[n as usize]
    }

    pub fn is_lucky(&self, n: u64) -> bool {
        self.lucky[n as usize]
    }

    pub fn is_untouchable(&self, n: u64) -> bool {
        self.untouchable[n as usize]
    }

    pub fn is_practical(&self, n: u64) -> bool {
        self.practical[n as usize]
    }

    pub fn is_happy(&self, n: u64) -> bool {
        self.happy[n as usize]
    }
}

/// Build every table for the inclusive range [0, limit].
///
/// Construction is single-threaded and deterministic; the result is
/// immutable and freely shareable afterwards.
pub fn build_caches(limit: u64) -> Result<SieveCache, SieveError> {
    if !(MIN_LIMIT..=MAX_LIMIT).contains(&limit) {
        return Err(SieveError::LimitOutOfRange(limit));
    }
    let lim = limit as usize;

    let smallest_prime_factor = spf_table(lim);
    let mut is_prime_table = vec![false; lim + 1];
    for n in 2..=lim {
        is_prime_table[n] = smallest_prime_factor[n] as usize == n;
    }

    let aliquot = aliquot_table(2 * lim);

    let mut practical = vec![false; lim + 1];
    for n in 1..=lim {
        practical[n] = practical_from_factors(&factorize_with_spf(&smallest_prime_factor, n));
    }

    let mut happy = vec![false; lim + 1];
    for n in 1..=lim {
        happy[n] = is_happy_number(n as u64);
    }

    Ok(SieveCache {
        limit,
        is_prime: is_prime_table,
        smallest_prime_factor,
        aliquot,
        ulam: ulam_set(limit),
        lucky: lucky_set(limit),
        untouchable: untouchable_set(limit),
        practical,
        happy,
    })
}

fn spf_table(lim: usize) -> Vec<u32> {
    let mut spf = vec![0u32; lim + 1];
    for i in 2..=lim {
        if spf[i] == 0 {
            spf[i] = i as u32;
            let mut j = i * i;
            while j <= lim {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

fn factorize_with_spf(spf: &[u32], n: usize) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut v = n;
    while v > 1 {
        let p = spf[v] as usize;
        let mut e = 0u32;
        while v % p == 0 {
            v /= p;
            e += 1;
        }
        out.push((p as u64, e));
    }
    out
}

/// Proper-divisor sums over [0, hi] by harmonic accumulation.
fn aliquot_table(hi: usize) -> Vec<u64> {
    let mut alq = vec![1u64; hi + 1];
    alq[0] = 0;
    if hi >= 1 {
        alq[1] = 0;
    }
    for d in 2..=hi / 2 {
        let mut m = 2 * d;
        while m <= hi {
            alq[m] += d as u64;
            m += d;
        }
    }
    alq
}

/// Membership table for the (1, 2)-Ulam sequence: after the seeds, each
/// member is the smallest integer with exactly one representation as a sum
/// of two distinct earlier members.
pub fn ulam_set(limit: u64) -> Vec<bool> {
    let lim = limit as usize;
    let mut member = vec![false; lim + 1];
    let mut members: Vec<usize> = Vec::new();
    for seed in [1usize, 2] {
        if seed <= lim {
            member[seed] = true;
            members.push(seed);
        }
    }
    for n in 3..=lim {
        let mut reps = 0;
        for &a in &members {
            if 2 * a >= n {
                break;
            }
            if member[n - a] {
                reps += 1;
                if reps > 1 {
                    break;
                }
            }
        }
        if reps == 1 {
            member[n] = true;
            members.push(n);
        }
    }
    member
}

/// Membership table for the lucky-number sieve: start from the odd
/// numbers; repeatedly the next survivor k > 1 deletes every k-th survivor.
pub fn lucky_set(limit: u64) -> Vec<bool> {
    let lim = limit as usize;
    let mut survivors: Vec<usize> = (1..=lim).step_by(2).collect();
    let mut i = 1;
    while i < survivors.len() {
        let k = survivors[i];
        if k > survivors.len() {
            break;
        }
        survivors = survivors
            .iter()
            .enumerate()
            .filter(|(pos, _)| (pos + 1) % k != 0)
            .map(|(_, &v)| v)
            .collect();
        i += 1;
    }
    let mut member = vec![false; lim + 1];
    for v in survivors {
        member[v] = true;
    }
    member
}

/// Membership table for untouchable numbers: n is marked iff no m >= 1 has
/// aliquot sum n. Scans m in [2, limit^2] with the blocked divisor-pair
/// sieve described in the module docs.
pub fn untouchable_set(limit: u64) -> Vec<bool> {
    debug_assert!(limit <= MAX_LIMIT);
    let lim = limit as usize;
    let mut reached = vec![false; lim + 1];
    let hi_total: u64 = limit * limit;

    let mut alq = vec![0u64; UNTOUCHABLE_BLOCK];
    let mut lo: u64 = 2;
    while lo <= hi_total {
        let hi = (lo + UNTOUCHABLE_BLOCK as u64 - 1).min(hi_total);
        let len = (hi - lo + 1) as usize;
        for v in alq[..len].iter_mut() {
            *v = 1; // the divisor 1, proper for every m >= 2
        }

        let sq = integer_sqrt(hi);
        for d in 2..=sq {
            // pairs (d, q) with q > d contribute d + q to m = d * q
            let mut q = (lo + d - 1) / d;
            if q <= d {
                q = d + 1;
            }
            let mut m = d * q;
            while m <= hi {
                alq[(m - lo) as usize] += d + q;
                q += 1;
                m += d;
            }
            let dd = d * d;
            if dd >= lo && dd <= hi {
                alq[(dd - lo) as usize] += d;
            }
        }

        for (i, &s) in alq[..len].iter().enumerate() {
            debug_assert_eq!(s, aliquot_check(lo + i as u64, s));
            if s <= limit {
                reached[s as usize] = true;
            }
        }
        lo = hi + 1;
    }

    let mut member = vec![false; lim + 1];
    for (n, slot) in member.iter_mut().enumerate().skip(1) {
        *slot = !reached[n];
    }
    member
}

// Spot check used only under debug assertions, and only for small m where
// recomputation stays cheap.
fn aliquot_check(m: u64, sieved: u64) -> u64 {
    if m <= 50_000 {
        aliquot_sum_unchecked(m)
    } else {
        sieved
    }
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}
