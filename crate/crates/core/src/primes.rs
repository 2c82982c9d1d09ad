//! Small-prime helpers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// Smallest odd prime strictly greater than `n`.
pub fn next_odd_prime(n: u64) -> u64 {
    let mut p = (n + 1).max(3);
    while !is_odd_prime(p) {
        p += 1;
    }
    p
}

/// Odd primes in increasing order, starting at 3.
pub fn odd_primes() -> impl Iterator<Item = u64> {
    std::iter::successors(Some(3), |&p| Some(next_odd_prime(p)))
}
