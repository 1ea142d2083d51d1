//! Fibonacci rank of apparition.

/// Smallest k >= 1 with m dividing F(k), found by iterating the Fibonacci
/// recurrence modulo m. The first zero always appears within the Pisano
/// period, which is at most 6m.
pub fn rank_of_apparition(m: u64) -> u64 {
    debug_assert!(m >= 2);
    if m <= 1 {
        return 1;
    }
    let mut a = 1 % m; // F(1)
    let mut b = 1 % m; // F(2)
    let mut k = 1u64;
    let guard = 6 * m + 3;
    while a != 0 {
        let next = ((a as u128 + b as u128) % m as u128) as u64;
        a = b;
        b = next;
        k += 1;
        assert!(k <= guard, "no zero of F mod {m} within the Pisano bound");
    }
    k
}
