use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 16;

/// A prime modulus below 2^16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < MAX_PRIME && is_prime(p) {
            Ok(Prime(p as u32))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.0 as u64) as u32
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `a` must be nonzero mod p.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        self.pow(a, self.0 as u64 - 2)
    }

    /// Largest power of p dividing `n` and the cofactor.
    pub fn split_part(self, mut n: u64) -> (u64, u64) {
        let p = self.0 as u64;
        let mut part = 1;
        while n.is_multiple_of(p) && n > 0 {
            n /= p;
            part *= p;
        }
        (part, n)
    }

    pub fn divides(self, n: u64) -> bool {
        n.is_multiple_of(self.0 as u64)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(p, d)` when `q = p^d` with `d >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let divs = prime_divisors(q);
    if divs.len() != 1 {
        return None;
    }
    let p = divs[0];
    let mut d = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        d += 1;
    }
    Some((p, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large() {
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(65537).is_err());
        assert_eq!(Prime::new(65521).unwrap().get(), 65521);
    }

    #[test]
    fn inverse_and_parts() {
        let p = Prime::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
        assert_eq!(p.split_part(98), (49, 2));
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
    }
}
