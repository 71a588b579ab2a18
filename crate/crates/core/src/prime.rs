use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime `p`, the characteristic of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct OddPrime(u32);

impl OddPrime {
    pub fn new(p: u32) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        Ok(Self(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }

    /// `(p - 1) / 2`, the rank of the real cyclotomic subring.
    #[inline]
    pub fn half(self) -> usize {
        (self.0 as usize - 1) / 2
    }

    /// Number of Heller shifts before returning to the start, `p - 1`.
    #[inline]
    pub fn heller_period(self) -> usize {
        self.0 as usize - 1
    }

    /// The smallest generator of the multiplicative group of `F_p`.
    pub fn smallest_primitive_root(self) -> u32 {
        let p = self.0 as u64;
        let order = p - 1;
        let factors = prime_factors(order);
        (2..p)
            .find(|&c| factors.iter().all(|&q| pow_mod(c, order / q, p) != 1))
            .expect("every prime has a primitive root") as u32
    }

    /// Odd primes up to and including `bound`.
    pub fn up_to(bound: u32) -> Vec<OddPrime> {
        (3..=bound).filter_map(|p| OddPrime::new(p).ok()).collect()
    }
}

impl TryFrom<u32> for OddPrime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Self::new(p)
    }
}

impl From<OddPrime> for u32 {
    fn from(p: OddPrime) -> u32 {
        p.0
    }
}

impl FromStr for OddPrime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: u32 = s
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("'{s}' is not a positive integer")))?;
        Self::new(v)
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
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

fn prime_factors(mut n: u64) -> Vec<u64> {
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

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_and_composites() {
        assert_eq!(OddPrime::new(2), Err(Error::NotOddPrime(2)));
        assert_eq!(OddPrime::new(9), Err(Error::NotOddPrime(9)));
        assert!("4".parse::<OddPrime>().is_err());
        assert_eq!("13".parse::<OddPrime>().unwrap().get(), 13);
    }

    #[test]
    fn smallest_primitive_roots() {
        let roots: Vec<_> = [3, 5, 7, 11, 13]
            .iter()
            .map(|&p| OddPrime::new(p).unwrap().smallest_primitive_root())
            .collect();
        assert_eq!(roots, vec![2, 2, 3, 2, 2]);
    }
}
