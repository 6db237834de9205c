//! Base-p combinatorics and finite-field scalars.
//!
//! The binomial routines here decide which products of paths survive in
//! characteristic `p`. Three independent formulations are provided (Lucas
//! digits, Legendre sums, Kummer carries) so that each can check the others.

mod field;

pub use field::{Field, FieldElement};

use crate::error::{Error, Result};
use std::fmt;

/// A prime number, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Little-endian base-p digits. Zero is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DigitVector(Vec<u32>);

impl DigitVector {
    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    /// Digit `i`, zero past the leading digit.
    pub fn digit(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, p: Prime) -> u64 {
        self.0
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * p.get() as u64 + d as u64)
    }
}

pub fn base_p_digits(mut m: u64, p: Prime) -> DigitVector {
    let p = p.get() as u64;
    let mut digits = Vec::new();
    while m > 0 {
        digits.push((m % p) as u32);
        m /= p;
    }
    DigitVector(digits)
}

/// `sum_{i >= 1} floor(n / p^i)`, the p-adic valuation of `n!`.
pub fn legendre_sum(n: u64, p: Prime) -> u64 {
    let p = p.get() as u64;
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// Number of carries when adding `m` and `n` in base `p`.
pub fn carry_count(m: u64, n: u64, p: Prime) -> u32 {
    let (dm, dn) = (base_p_digits(m, p), base_p_digits(n, p));
    let mut carries = 0;
    let mut carry = 0;
    for i in 0..dm.len().max(dn.len()) {
        let s = dm.digit(i) + dn.digit(i) + carry;
        carry = u32::from(s >= p.get());
        carries += carry;
    }
    carries
}

/// `C(a, b) mod p` for digits `a, b < p`; denominators are units mod p.
fn small_binom(a: u32, b: u32, p: u32) -> u32 {
    if b > a {
        return 0;
    }
    let p64 = p as u64;
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b as u64 {
        num = num * ((a as u64 - i) % p64) % p64;
        den = den * ((i + 1) % p64) % p64;
    }
    (num * pow_mod(den, p64 - 2, p64) % p64) as u32
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

/// `C(a, b) mod p` as the digit-wise product of small binomials.
pub fn lucas_binom(a: u64, b: u64, p: Prime) -> Result<u32> {
    if b > a {
        return Err(Error::BinomialOutOfRange { a, b });
    }
    let (da, db) = (base_p_digits(a, p), base_p_digits(b, p));
    let mut acc = 1u64;
    for i in 0..da.len() {
        acc = acc * small_binom(da.digit(i), db.digit(i), p.get()) as u64 % p.get() as u64;
        if acc == 0 {
            break;
        }
    }
    Ok(acc as u32)
}

/// Whether `C(m + n, n)` vanishes mod `p`.
///
/// Decided by the Legendre inequality; the Lucas and Kummer formulations
/// are equivalent and are checked against this in the tests.
pub fn binom_vanishes(m: u64, n: u64, p: Prime) -> bool {
    legendre_sum(m + n, p) > legendre_sum(m, p) + legendre_sum(n, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn primes() {
        assert!(Prime::new(0).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(9).is_err());
        assert_eq!(Prime::new(7).unwrap().get(), 7);
    }

    #[test]
    fn digits() {
        assert!(base_p_digits(0, p(3)).is_empty());
        assert_eq!(base_p_digits(5, p(2)).digits(), &[1, 0, 1]);
        assert_eq!(base_p_digits(7, p(3)).digits(), &[1, 2]);
        assert_eq!(base_p_digits(7, p(3)).value(p(3)), 7);
    }

    #[test]
    fn legendre() {
        assert_eq!(legendre_sum(0, p(7)), 0);
        assert_eq!(legendre_sum(5, p(2)), 3);
        assert_eq!(legendre_sum(9, p(3)), 4);
    }

    #[test]
    fn carries() {
        assert_eq!(carry_count(1, 1, p(2)), 1);
        assert_eq!(carry_count(17, 0, p(5)), 0);
        // 4 + 4 = (2,2)_3 without carrying
        assert_eq!(carry_count(4, 4, p(3)), 0);
    }

    #[test]
    fn lucas() {
        assert_eq!(lucas_binom(11, 0, p(3)).unwrap(), 1);
        assert_eq!(lucas_binom(4, 2, p(3)).unwrap(), 0);
        assert_eq!(lucas_binom(4, 2, p(2)).unwrap(), 0);
        assert_eq!(lucas_binom(3, 1, p(5)).unwrap(), 3);
        assert!(matches!(
            lucas_binom(2, 3, p(2)),
            Err(Error::BinomialOutOfRange { a: 2, b: 3 })
        ));
    }

    #[test]
    fn vanishing() {
        assert!(binom_vanishes(1, 1, p(2)));
        assert!(!binom_vanishes(1, 1, p(3)));
        assert!(binom_vanishes(2, 2, p(3)));
    }

    #[test]
    fn kummer_matches_legendre() {
        for prime in [2, 3, 5, 7] {
            let pr = p(prime);
            for m in 0..80 {
                for n in 0..80 {
                    let diff = legendre_sum(m + n, pr) - legendre_sum(m, pr) - legendre_sum(n, pr);
                    assert_eq!(carry_count(m, n, pr) as u64, diff);
                }
            }
        }
    }
}
