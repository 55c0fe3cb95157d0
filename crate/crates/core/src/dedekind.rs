//! Dedekind sums `s(a, b) = Σ_{k=1}^{b} ((ak/b))((k/b))`.
//!
//! Two independent evaluators are provided. [`dedekind_sum_def`] follows the
//! definition term by term in `O(b)` and is the ground truth for testing;
//! [`dedekind_sum_bhk`] uses the Barkan–Hickerson–Knuth identity
//! `12·s(a, b) = T(a, b) + (a + a*)/b − 3` in `O(log b)` and backs every
//! production path.

use serde::Serialize;

use crate::confrac::reduced_expansion;
use crate::error::Result;
use crate::exactmath::{jacobi, CoprimePair, Rational};

/// The sawtooth `((x))`: `x − ⌊x⌋ − 1/2` off the integers, `0` on them.
pub fn sawtooth(x: Rational) -> Rational {
    if x.is_integer() {
        Rational::ZERO
    } else {
        x - Rational::from(x.floor()) - Rational::new(1, 2).expect("nonzero")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DedekindSum {
    pub a: u64,
    pub b: u64,
    pub value: Rational,
}

impl DedekindSum {
    /// `6·b·s(a, b)`, always an integer.
    pub fn six_b_multiple(&self) -> i128 {
        self.value
            .scale(6 * self.b as i128)
            .to_integer()
            .expect("6·b·s(a,b) is integral")
    }
}

/// `((p/q))` scaled by `2q`, for `q > 0`: the sawtooth without any
/// fraction reduction.
fn sawtooth_twice_q(p: i64, q: i64) -> i64 {
    let r = p.rem_euclid(q);
    if r == 0 {
        0
    } else {
        2 * r - q
    }
}

/// `s(a, b)` straight from the definition.
///
/// Every term `((ak/b))((k/b))` has denominator dividing `4b²`, so the terms
/// are summed as integers over that denominator and reduced once.
pub fn dedekind_sum_def(a: u64, b: u64) -> Result<DedekindSum> {
    CoprimePair::new(a, b)?;
    let bb = b as i64;
    let ar = (a % b) as i64;
    let total: i128 = (1..=bb)
        .map(|k| sawtooth_twice_q(ar * k, bb) as i128 * sawtooth_twice_q(k, bb) as i128)
        .sum();
    let value = Rational::new(total, 4 * (bb as i128) * (bb as i128)).expect("b > 0");
    Ok(DedekindSum { a, b, value })
}

/// `s(a, b)` via `12·s = T(a, b) + (a + a*)/b − 3`, reducing `a` modulo `b`
/// first. `s(a, 1) = 0`.
pub fn dedekind_sum_bhk(a: u64, b: u64) -> Result<DedekindSum> {
    let pair = CoprimePair::new(a, b)?;
    Ok(DedekindSum {
        a,
        b,
        value: bhk_value(pair),
    })
}

pub(crate) fn bhk_value(pair: CoprimePair) -> Rational {
    let Some(cf) = reduced_expansion(pair) else {
        return Rational::ZERO;
    };
    let b = pair.b() as i128;
    let a = pair.residue() as i128;
    let a_star = pair.inverse() as i128;
    let twelve_s = Rational::from(cf.alt_sum() as i128 - 3)
        + Rational::new(a + a_star, b).expect("b > 0");
    twelve_s * Rational::new(1, 12).expect("nonzero")
}

/// Lerch's parity expression:
/// `(1 − (a/b))/2` for odd `b`, `(a − 1)(b + a − 1)/4` for even `b`.
///
/// `a` is used as given (not reduced modulo `b`); only its parity class
/// matters to the theorems that consume it.
pub fn mu(a: u64, b: u64) -> Result<u64> {
    CoprimePair::new(a, b)?;
    if b % 2 == 1 {
        let j = jacobi(a as i64, b)?;
        return Ok(((1 - j) / 2) as u64);
    }
    assert!(a % 2 == 1, "a is odd when coprime to even b");
    let prod = (a as u128 - 1) * (b as u128 + a as u128 - 1);
    debug_assert_eq!(prod % 4, 0);
    Ok((prod / 4) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exactmath::{mod_inverse, units};

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(r(5, 1)), Rational::ZERO);
        assert_eq!(sawtooth(r(-3, 1)), Rational::ZERO);
        assert_eq!(sawtooth(r(1, 3)), r(-1, 6));
        assert_eq!(sawtooth(r(-1, 4)), r(1, 4));
        assert_eq!(sawtooth(r(1, 2)), Rational::ZERO);
        assert_eq!(sawtooth(r(7, 2)), Rational::ZERO);
    }

    #[test]
    fn scaled_sawtooth_matches_sawtooth() {
        for q in 1..40i64 {
            for p in -90..90i64 {
                let scaled = r(sawtooth_twice_q(p, q) as i128, 2 * q as i128);
                assert_eq!(scaled, sawtooth(r(p as i128, q as i128)), "(({p}/{q}))");
            }
        }
    }

    #[test]
    fn definition_examples() {
        assert_eq!(dedekind_sum_def(1, 49).unwrap().value, r(188, 49));
        assert_eq!(dedekind_sum_def(15, 49).unwrap().value, r(-8, 49));
        assert_eq!(dedekind_sum_def(1, 1).unwrap().value, Rational::ZERO);
        assert_eq!(dedekind_sum_def(1, 2).unwrap().value, Rational::ZERO);
        assert_eq!(dedekind_sum_def(2, 15).unwrap().value, r(7, 18));
        assert!(matches!(dedekind_sum_def(14, 49), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn bhk_examples() {
        assert_eq!(dedekind_sum_bhk(1, 49).unwrap().value, r(188, 49));
        assert_eq!(dedekind_sum_bhk(15, 49).unwrap().value, r(-8, 49));
        assert_eq!(dedekind_sum_bhk(2, 15).unwrap().value, r(7, 18));
        assert_eq!(dedekind_sum_bhk(64, 49).unwrap().value, r(-8, 49));
        assert_eq!(dedekind_sum_bhk(3, 1).unwrap().value, Rational::ZERO);
        for b in 2..60i128 {
            // (b-1)(b-2)/(12b)
            assert_eq!(
                dedekind_sum_bhk(1, b as u64).unwrap().value,
                r((b - 1) * (b - 2), 12 * b)
            );
        }
    }

    #[test]
    fn mu_examples() {
        for a in 1..20 {
            assert_eq!(mu(a, 1), Ok(0));
        }
        assert_eq!(mu(3, 8), Ok(5));
        assert_eq!(mu(2, 15), Ok(0));
        assert_eq!(mu(2, 5), Ok(1));
        assert_eq!(mu(49, 15), Ok(0));
        assert!(matches!(mu(4, 8), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn evaluators_agree_with_symmetries() {
        for b in 2..=200u64 {
            for a in units(b) {
                let s = dedekind_sum_def(a, b).unwrap();
                assert_eq!(dedekind_sum_bhk(a, b).unwrap().value, s.value, "s({a},{b})");
                s.six_b_multiple();
                let inv = mod_inverse(a as i64, b).unwrap();
                assert_eq!(dedekind_sum_bhk(inv, b).unwrap().value, s.value);
                assert_eq!(dedekind_sum_bhk(b - a, b).unwrap().value, -s.value);
            }
        }
    }

    #[test]
    fn even_modulus_mu_is_integral() {
        for b in (2..=300u64).step_by(2) {
            for a in units(b).chain(units(b).map(|a| a + 3 * b)) {
                let v = (a - 1) * (b + a - 1);
                assert_eq!(v % 4, 0);
                assert_eq!(mu(a, b).unwrap(), v / 4);
            }
        }
    }
}
