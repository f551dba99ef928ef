//! Closed-form arithmetic on ideals of ℤ. An ideal nℤ is stored as `n`.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// lcm with lcm(0, m) = 0, matching nℤ ∩ mℤ.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(Error::Overflow("ideal intersection"))
}

/// Distinct prime factors in increasing order, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Radical of n: the product of its distinct primes. rad(0) = 0, rad(1) = 1.
pub fn radical(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    prime_factors(n).into_iter().product()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1
}

/// (nℤ : mℤ) = (n / gcd(n, m))ℤ, with (0 : 0) = ℤ.
pub fn colon(n: u64, m: u64) -> u64 {
    if n == 0 && m == 0 {
        return 1;
    }
    n / gcd(n, m)
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(radical(12), 6);
        assert_eq!(radical(0), 0);
        assert_eq!(colon(12, 8), 3);
        assert_eq!(colon(0, 5), 0);
        assert_eq!(colon(0, 0), 1);
        assert_eq!(lcm(4, 6).unwrap(), 12);
        assert!(lcm(u64::MAX, u64::MAX - 1).is_err());
        assert!(is_prime(97) && !is_prime(91));
        assert!(is_prime_power(27) && !is_prime_power(12));
        assert_eq!(primes_up_to(100).len(), 25);
    }

    #[test]
    fn radical_matches_trial_power_oracle() {
        // r is in √(nℤ) iff some power of r is divisible by n.
        for n in 1u64..=60 {
            let rad = radical(n);
            for r in 0u64..=60 {
                let mut in_rad = false;
                let mut p = 1u128;
                for _ in 0..8 {
                    p = p * r as u128 % n as u128;
                    if p == 0 {
                        in_rad = true;
                        break;
                    }
                }
                assert_eq!(in_rad, r % rad == 0, "n={n} r={r}");
            }
        }
    }
}
