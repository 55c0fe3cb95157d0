//! Exact integer and rational arithmetic.

mod rational;

pub use rational::Rational;

use crate::error::{Error, Result};

/// Upper bound on both components of a [`CoprimePair`].
///
/// With `a, b ≤ 2²⁰` the largest intermediate in any identity check
/// (`8·b·a·(a+b)`-sized products, `b⁴`-sized congruence sides) stays below
/// `2⁸⁵`, comfortably inside `i128`.
pub const MAX_MODULUS: u64 = 1 << 20;

pub fn gcd(x: u64, y: u64) -> Result<u64> {
    if x == 0 && y == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_unchecked(x, y))
}

pub(crate) fn gcd_unchecked(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x
}

/// The inverse `a*` of `a` modulo `b`, normalized to `0 < a* < b`.
///
/// For `b = 1` every residue is zero; `1` is returned by convention.
pub fn mod_inverse(a: i64, b: u64) -> Result<u64> {
    if b == 0 {
        return Err(Error::ZeroModulus);
    }
    let m = b as i128;
    let a_red = (a as i128).rem_euclid(m);
    if b == 1 {
        return Ok(1);
    }
    let (mut old_r, mut r) = (a_red, m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotCoprime {
            a: a.unsigned_abs(),
            b,
        });
    }
    Ok(old_s.rem_euclid(m) as u64)
}

/// The Jacobi symbol `(a/b)` for odd positive `b`; `(a/1) = 1`.
pub fn jacobi(a: i64, b: u64) -> Result<i8> {
    if b == 0 || b.is_multiple_of(2) {
        return Err(Error::EvenModulus(b));
    }
    let mut n = b;
    let mut a = (a as i128).rem_euclid(b as i128) as u64;
    let mut sign = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = -sign;
        }
        // reciprocity for odd a, n
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        (a, n) = (n % a, a);
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// A pair `(a, b)` of positive integers with `gcd(a, b) = 1`.
///
/// `a` is not required to be smaller than `b`; each operation documents
/// how it reduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoprimePair {
    a: u64,
    b: u64,
}

impl CoprimePair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        for v in [a, b] {
            if v > MAX_MODULUS {
                return Err(Error::TooLarge {
                    value: v,
                    max: MAX_MODULUS,
                });
            }
        }
        if a == 0 || b == 0 || gcd_unchecked(a, b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(CoprimePair { a, b })
    }

    /// Like [`new`](Self::new), additionally requiring `0 < a < b`.
    pub fn reduced(a: u64, b: u64) -> Result<Self> {
        let p = Self::new(a, b)?;
        if a >= b {
            return Err(Error::NotReduced { a, b });
        }
        Ok(p)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `a mod b`, the residue every sum and permutation depends on.
    pub fn residue(&self) -> u64 {
        self.a % self.b
    }

    /// `a*` with `a·a* ≡ 1 (mod b)` and `0 < a* < b` (`1` when `b = 1`).
    pub fn inverse(&self) -> u64 {
        mod_inverse(self.a as i64, self.b).expect("coprime by construction")
    }
}

/// Units modulo `b` in `1..b`, ascending. Yields nothing for `b = 1`.
pub fn units(b: u64) -> impl Iterator<Item = u64> {
    (1..b).filter(move |&a| gcd_unchecked(a, b) == 1)
}
