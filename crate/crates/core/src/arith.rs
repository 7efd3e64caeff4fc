//! Small integer helpers used throughout.

/// Largest exponent `v` with `p^v | n`.
pub fn p_valuation(mut n: u128, p: u64) -> u32 {
    assert!(n > 0 && p > 1);
    let p = p as u128;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// The `p`-part `p^v` of `n`.
pub fn p_part(n: u128, p: u64) -> u128 {
    (p as u128).pow(p_valuation(n, p))
}

/// The `p'`-part `n / p^v` of `n`.
pub fn p_prime_part(n: u128, p: u64) -> u128 {
    n / p_part(n, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    for p in prime_divisors(n as u128) {
        result = result / p * (p - 1);
    }
    result
}

/// Multiplicative order of `a` modulo `m` (requires `gcd(a, m) = 1`).
pub fn mult_order(a: u64, m: u64) -> u64 {
    assert!(m >= 1);
    if m == 1 {
        return 1;
    }
    assert_eq!(num_integer::gcd(a, m), 1, "order undefined unless gcd(a,m)=1");
    let mut x = a % m;
    let mut k = 1u64;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

/// Modular exponentiation.
pub fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}

/// Inverse of `a` mod prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(p_valuation(24, 2), 3);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_prime_part(24, 2), 3);
    }

    #[test]
    fn primes_and_orders() {
        assert!(is_prime(61));
        assert!(!is_prime(1));
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
