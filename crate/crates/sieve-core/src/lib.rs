//! Shared number-theoretic infrastructure: precomputed sieve tables
//! (primality, aliquot sums, Ulam/lucky/untouchable/practical/happy
//! membership), decimal digit utilities, exact powers of two, Fibonacci
//! ranks of apparition, and Roman/English numeral rendering.
//!
//! Everything here is deterministic and pure. [`SieveCache`] is immutable
//! after construction and safe to share across threads.

mod arith;
mod cache;
mod digits;
mod error;
mod fib;
mod naming;

pub use arith::{
    aliquot_sum, binary_popcount, factorize, is_happy_number, is_prime, practical_from_factors,
};
pub use cache::{build_caches, lucky_set, ulam_set, untouchable_set, SieveCache, MAX_LIMIT, MIN_LIMIT};
pub use digits::{digit_stats, pow2_decimal, DigitStats, DigitString, PowerOfTwoScan};
pub use error::SieveError;
pub use fib::rank_of_apparition;
pub use naming::{english_letters, to_english, to_roman};
