//! Small number-theoretic helpers on machine integers. Truncation sets are
//! tiny, so everything here is plain trial division.

use num_integer::Integer;

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize: n must be positive");
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// The Möbius function.
pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// p-adic valuation of a positive integer.
pub fn ord_p(mut n: u64, p: u64) -> u32 {
    assert!(n >= 1 && p >= 2);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|k| n % k == 0).collect()
}

pub fn lcm_all(xs: impl IntoIterator<Item = u64>) -> u64 {
    xs.into_iter().fold(1, |acc, x| acc.lcm(&x))
}

/// Returns `(g, i, j)` with `i*a + j*b = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// `p^e` with overflow detection.
pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn mobius_sums_vanish() {
        for l in 2..200u64 {
            let s: i32 = divisors(l).into_iter().map(mobius).sum();
            assert_eq!(s, 0, "l = {l}");
        }
    }

    #[test]
    fn valuations_and_primes() {
        assert_eq!(ord_p(12, 2), 2);
        assert_eq!(ord_p(12, 3), 1);
        assert_eq!(ord_p(7, 2), 0);
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(6));
        assert_eq!(lcm_all([1, 2, 3, 6]), 6);
        let (g, i, j) = ext_gcd(4, 6);
        assert_eq!(g, 2);
        assert_eq!(i * 4 + j * 6, 2);
    }
}
