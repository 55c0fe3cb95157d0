//! Regular continued fractions `a/b = [0; a₁, …, aₙ]` normalized to odd `n`,
//! with the alternating digit sum `T(a, b)` and plain digit sum `D(a, b)`.

use crate::error::{Error, Result};
use crate::exactmath::CoprimePair;

/// Partial quotients `a₁, …, aₙ` of `[0; a₁, …, aₙ]`, with `n` odd and every
/// digit positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    digits: Vec<u64>,
}

impl ContinuedFraction {
    /// Expands `a/b` for coprime `0 < a < b`.
    pub fn expand(pair: CoprimePair) -> Result<Self> {
        let (a, b) = (pair.a(), pair.b());
        if a >= b {
            return Err(Error::NotReduced { a, b });
        }
        let mut digits = Vec::new();
        let (mut num, mut den) = (b, a);
        while den != 0 {
            digits.push(num / den);
            (num, den) = (den, num % den);
        }
        Ok(ContinuedFraction {
            digits: normalize_odd(digits),
        })
    }

    /// Validates a digit sequence: nonempty, odd length, positive digits,
    /// and a value strictly below one.
    pub fn from_digits(digits: Vec<u64>) -> Result<Self> {
        if digits.len().is_multiple_of(2) {
            return Err(Error::InvalidDigits("length must be odd"));
        }
        if digits.contains(&0) {
            return Err(Error::InvalidDigits("digits must be positive"));
        }
        if digits == [1] {
            return Err(Error::InvalidDigits("[0; 1] is not below one"));
        }
        Ok(ContinuedFraction { digits })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Folds the expansion back into `(a, b)` by the backward recurrence.
    pub fn eval(&self) -> Result<CoprimePair> {
        // value of the tail [a_j; a_{j+1}, ...] as num/den
        let (mut num, mut den) = (1u64, 0u64);
        for &d in self.digits.iter().rev() {
            let next = d
                .checked_mul(num)
                .and_then(|x| x.checked_add(den))
                .ok_or(Error::InvalidDigits("value exceeds supported range"))?;
            (num, den) = (next, num);
        }
        // [0; tail] = den/num
        CoprimePair::reduced(den, num)
    }

    /// `T = Σ (-1)^(j-1) aⱼ`.
    pub fn alt_sum(&self) -> i64 {
        self.digits
            .iter()
            .enumerate()
            .map(|(j, &d)| if j % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// `D = Σ aⱼ`.
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }
}

/// Rewrites an even-length expansion into the odd-length one with the same
/// value: `[…, x]` becomes `[…, x − 1, 1]`, or `[…, y, 1]` becomes `[…, y + 1]`.
fn normalize_odd(mut digits: Vec<u64>) -> Vec<u64> {
    if digits.len().is_multiple_of(2) {
        let last = digits.pop().expect("nonempty");
        if last > 1 {
            digits.push(last - 1);
            digits.push(1);
        } else {
            *digits.last_mut().expect("even length >= 2") += 1;
        }
    }
    digits
}

pub fn cf_expand(a: u64, b: u64) -> Result<ContinuedFraction> {
    ContinuedFraction::expand(CoprimePair::new(a, b)?)
}

pub fn cf_eval(cf: &ContinuedFraction) -> Result<CoprimePair> {
    cf.eval()
}

/// `T(a, b)` after reducing `a` modulo `b`; `T(·, 1) = 0`.
pub fn alt_sum(a: u64, b: u64) -> Result<i64> {
    let pair = CoprimePair::new(a, b)?;
    Ok(reduced_expansion(pair).map_or(0, |cf| cf.alt_sum()))
}

/// `D(a, b)` after reducing `a` modulo `b`; `D(·, 1) = 0`.
pub fn digit_sum(a: u64, b: u64) -> Result<u64> {
    let pair = CoprimePair::new(a, b)?;
    Ok(reduced_expansion(pair).map_or(0, |cf| cf.digit_sum()))
}

pub(crate) fn reduced_expansion(pair: CoprimePair) -> Option<ContinuedFraction> {
    if pair.b() == 1 {
        return None;
    }
    let reduced = CoprimePair::reduced(pair.residue(), pair.b()).expect("residue of a unit");
    Some(ContinuedFraction::expand(reduced).expect("reduced pair"))
}
