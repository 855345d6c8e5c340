//! Integer helpers: primality, prime powers, multiplicative orders.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^k` with `p` prime, or returns `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut k = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

/// p-adic valuation of `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `m`; `None` unless `gcd(a, m) = 1`.
/// The order modulo 1 is 1.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut order = 1u64;
    let mut x = a % m;
    while x != 1 {
        x = ((x as u128 * (a % m) as u128) % m as u128) as u64;
        order += 1;
    }
    Some(order)
}

/// Returns `Some(s)` with `q^s = n` and `s >= 1`.
pub fn exact_log(n: u64, q: u64) -> Option<u32> {
    if q < 2 || n < q {
        return None;
    }
    let mut s = 0;
    let mut m = n;
    while m.is_multiple_of(q) {
        m /= q;
        s += 1;
    }
    (m == 1).then_some(s)
}

pub fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_powers() {
        assert!(is_prime(7) && is_prime(13) && is_prime(2));
        assert!(!is_prime(4) && !is_prime(1) && !is_prime(91));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(3, 5), Some(4));
        assert_eq!(multiplicative_order(7, 3), Some(1));
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(multiplicative_order(5, 1), Some(1));
        assert_eq!(valuation(12, 2), 2);
        assert_eq!(exact_log(9, 3), Some(2));
        assert_eq!(exact_log(4, 4), Some(1));
        assert_eq!(exact_log(3, 3), Some(1));
        assert_eq!(exact_log(6, 3), None);
        assert_eq!(exact_log(1, 3), None);
    }
}
