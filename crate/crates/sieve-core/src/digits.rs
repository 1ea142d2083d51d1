//! Decimal digit sequences and exact powers of two.
//!
//! Two independent routes produce the decimal expansion of 2^n:
//! [`pow2_decimal`] converts an arbitrary-precision shift, while
//! [`PowerOfTwoScan`] maintains the digit vector by repeated decimal
//! doubling. The doubling route is what the long conjecture scans use;
//! the two routes cross-check each other in tests.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// A nonempty big-endian sequence of decimal digits with no leading zero
/// (except the single digit 0 itself).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u8>,
}

impl DigitString {
    pub fn from_u64(n: u64) -> Self {
        let mut digits = Vec::new();
        let mut v = n;
        loop {
            digits.push((v % 10) as u8);
            v /= 10;
            if v == 0 {
                break;
            }
        }
        digits.reverse();
        DigitString { digits }
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        let digits = n.to_radix_be(10);
        debug_assert!(!digits.is_empty());
        DigitString { digits }
    }

    /// Parse a canonical digit string ("0", "131072", ...). Rejects empty
    /// input, non-digits, and leading zeros.
    pub fn parse(s: &str) -> Option<Self> {
        if s.is_empty() || (s.len() > 1 && s.starts_with('0')) {
            return None;
        }
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            digits.push(c.to_digit(10)? as u8);
        }
        Some(DigitString { digits })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: nonempty
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().map(|&d| d as u64).sum()
    }

    /// Product of the digits, saturating at u64::MAX. Exact for any value
    /// up to 20 digits, which covers every u64.
    pub fn digit_product(&self) -> u64 {
        self.digits
            .iter()
            .fold(1u64, |acc, &d| acc.saturating_mul(d as u64))
    }

    /// The digits reversed and re-canonicalized: leading zeros of the
    /// reversal are stripped, so reversing 1200 yields 21.
    pub fn reversed(&self) -> DigitString {
        let mut digits: Vec<u8> = self.digits.iter().rev().copied().collect();
        let lead = digits.iter().take_while(|&&d| d == 0).count();
        if lead == digits.len() {
            digits = vec![0];
        } else {
            digits.drain(..lead);
        }
        DigitString { digits }
    }

    pub fn is_palindrome(&self) -> bool {
        self.digits.iter().eq(self.digits.iter().rev())
    }

    /// Contiguous substring search over digit values.
    pub fn contains(&self, pattern: &[u8]) -> bool {
        !pattern.is_empty() && self.digits.windows(pattern.len()).any(|w| w == pattern)
    }

    /// Numeric value, when it fits in a u64.
    pub fn value(&self) -> Option<u64> {
        let mut v: u64 = 0;
        for &d in &self.digits {
            v = v.checked_mul(10)?.checked_add(d as u64)?;
        }
        Some(v)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitStats {
    pub sum: u64,
    pub product: u64,
    pub reversal: DigitString,
    pub palindrome: bool,
}

pub fn digit_stats(d: &DigitString) -> DigitStats {
    DigitStats {
        sum: d.digit_sum(),
        product: d.digit_product(),
        reversal: d.reversed(),
        palindrome: d.is_palindrome(),
    }
}

/// Exact decimal expansion of 2^exponent via arbitrary-precision shift.
pub fn pow2_decimal(exponent: u64) -> DigitString {
    DigitString::from_biguint(&(BigUint::one() << exponent as usize))
}

/// Incremental decimal expansion of successive powers of two.
///
/// Keeps the digits least-significant first so doubling is a single O(d)
/// pass; one `advance` per exponent makes a scan over all exponents up to
/// N cost O(N * digits) instead of recomputing each power from scratch.
pub struct PowerOfTwoScan {
    exponent: u64,
    digits_lsd: Vec<u8>,
}

impl PowerOfTwoScan {
    /// Starts at 2^0 = 1.
    pub fn new() -> Self {
        PowerOfTwoScan {
            exponent: 0,
            digits_lsd: vec![1],
        }
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Double the current value; returns the new exponent.
    pub fn advance(&mut self) -> u64 {
        let mut carry = 0u8;
        for d in self.digits_lsd.iter_mut() {
            let v = *d * 2 + carry;
            *d = v % 10;
            carry = v / 10;
        }
        if carry > 0 {
            self.digits_lsd.push(carry);
        }
        self.exponent += 1;
        self.exponent
    }

    pub fn digit_count(&self) -> usize {
        self.digits_lsd.len()
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits_lsd.iter().map(|&d| d as u64).sum()
    }

    pub fn has_zero_digit(&self) -> bool {
        self.digits_lsd.contains(&0)
    }

    pub fn all_digits_among(&self, allowed: &[u8]) -> bool {
        self.digits_lsd.iter().all(|d| allowed.contains(d))
    }

    /// Substring search with the pattern given most-significant first.
    pub fn contains(&self, pattern_msd: &[u8]) -> bool {
        if pattern_msd.is_empty() || pattern_msd.len() > self.digits_lsd.len() {
            return false;
        }
        self.digits_lsd
            .windows(pattern_msd.len())
            .any(|w| w.iter().rev().eq(pattern_msd.iter()))
    }

    pub fn to_digit_string(&self) -> DigitString {
        let digits: Vec<u8> = self.digits_lsd.iter().rev().copied().collect();
        debug_assert!(!digits.is_empty() && digits[0] != 0);
        DigitString { digits }
    }
}

impl Default for PowerOfTwoScan {
    fn default() -> Self {
        Self::new()
    }
}
