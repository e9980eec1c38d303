//! Integer number theory used throughout: primality, factorization,
//! multiplicative orders and modular arithmetic.
//!
//! Everything here is deterministic and sized for desk-scale inputs
//! (moduli up to a few million, field orders up to 2^32); primality is
//! plain trial division by design.

use crate::error::{Error, Result};

/// Deterministic primality test by trial division up to sqrt(n).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// base^exp mod m, with 128-bit intermediates so any u64 modulus is safe.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = (base % m) as u128;
    let m = m as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
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

/// The distinct prime factors of `n`, ascending.
pub fn distinct_prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for p in distinct_prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// If `q = p^e` for a prime `p` and `e >= 1`, returns `(p, e)`.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fac = factorize(q);
    if fac.len() == 1 {
        Some(fac[0])
    } else {
        None
    }
}

/// Multiplicative order of `t` modulo `v`: the smallest `e >= 1` with
/// `t^e = 1 (mod v)`.
///
/// Errors with [`Error::NotCoprime`] when `gcd(t, v) != 1` (the order
/// does not exist).
pub fn order_mod(t: u64, v: u64) -> Result<u64> {
    if v < 2 {
        return Err(Error::NotCoprime { t, v });
    }
    if num_integer::gcd(t, v) != 1 {
        return Err(Error::NotCoprime { t, v });
    }
    // The order divides phi(v); descend through the prime factors.
    let phi = euler_phi(v);
    let mut order = phi;
    for p in distinct_prime_factors(phi) {
        while order % p == 0 && mod_pow(t, order / p, v) == 1 {
            order /= p;
        }
    }
    debug_assert_eq!(mod_pow(t, order, v), 1);
    Ok(order)
}

/// Binomial coefficient with saturation, for oracle cost estimates.
pub fn binomial_saturating(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// q^r with saturation, for oracle cost estimates.
pub fn pow_saturating(q: u64, r: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..r {
        acc = match acc.checked_mul(q as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(193));
        assert!(is_prime(257));
        assert!(is_prime(449));
        assert!(!is_prime(51));
        assert!(!is_prime(85));
    }

    #[test]
    fn order_mod_paper_values() {
        assert_eq!(order_mod(3, 16).unwrap(), 4);
        assert_eq!(order_mod(7, 16).unwrap(), 2);
        assert_eq!(order_mod(17, 16).unwrap(), 1);
        assert_eq!(order_mod(5, 193).unwrap(), 192);
        assert_eq!(order_mod(2, 61).unwrap(), 60);
        assert_eq!(order_mod(3, 113).unwrap(), 112);
        assert_eq!(order_mod(97, 96).unwrap(), 1);
        assert_eq!(order_mod(5, 96).unwrap(), 8);
        assert_eq!(order_mod(3, 449).unwrap(), 448);
        // ord(3, 193) = 16, i.e. 3^16 = 1 mod 193
        assert_eq!(order_mod(3, 193).unwrap(), 16);
        assert_eq!(mod_pow(3, 16, 193), 1);
    }

    #[test]
    fn order_mod_requires_coprime() {
        assert_eq!(
            order_mod(4, 16),
            Err(Error::NotCoprime { t: 4, v: 16 })
        );
        assert_eq!(order_mod(3, 1), Err(Error::NotCoprime { t: 3, v: 1 }));
    }

    #[test]
    fn order_divides_phi() {
        for v in 2..200u64 {
            for t in 1..v {
                if num_integer::gcd(t, v) == 1 {
                    let e = order_mod(t, v).unwrap();
                    assert_eq!(euler_phi(v) % e, 0, "ord({t} mod {v}) = {e}");
                }
            }
        }
    }

    #[test]
    fn factorization_roundtrip() {
        for n in 2..2000u64 {
            let back: u64 = factorize(n)
                .into_iter()
                .map(|(p, e)| p.pow(e))
                .product();
            assert_eq!(back, n);
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(is_prime_power(16), Some((2, 4)));
        assert_eq!(is_prime_power(49), Some((7, 2)));
        assert_eq!(is_prime_power(17), Some((17, 1)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(1), None);
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(4, 15), Some(4));
        assert_eq!(mod_inverse(3, 17), Some(6));
        assert_eq!(mod_inverse(6, 15), None);
        for n in 2..80u64 {
            for a in 1..n {
                if let Some(inv) = mod_inverse(a, n) {
                    assert_eq!(a * inv % n, 1);
                }
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_saturating(15, 13), 105);
        assert_eq!(binomial_saturating(10, 6), 210);
        assert_eq!(binomial_saturating(5, 9), 0);
    }
}
