//! The multiplier permutation `x ↦ [a·x]_b` on `{0, …, b−1}` and its
//! inversion number `I(a, b)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dedekind::bhk_value;
use crate::error::Result;
use crate::exactmath::{CoprimePair, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierPermutation {
    a: u64,
    b: u64,
    image: Vec<u64>,
}

impl MultiplierPermutation {
    pub fn build(a: u64, b: u64) -> Result<Self> {
        let pair = CoprimePair::new(a, b)?;
        Ok(MultiplierPermutation {
            a,
            b,
            image: images(pair).collect(),
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Entry `x` is the least nonnegative residue of `a·x` modulo `b`.
    pub fn image(&self) -> &[u64] {
        &self.image
    }

    pub fn inversions(&self) -> u64 {
        let p = &self.image;
        let mut count = 0u64;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

/// `[a·0]_b, [a·1]_b, …, [a·(b−1)]_b` without materializing the sequence.
fn images(pair: CoprimePair) -> impl Iterator<Item = u64> {
    let (step, b) = (pair.residue(), pair.b());
    (0..b).scan(0u64, move |cur, _| {
        let v = *cur;
        *cur += step;
        if *cur >= b {
            *cur -= b;
        }
        Some(v)
    })
}

/// `I(a, b)` by the quadratic double loop. Test oracle only.
pub fn inversions_naive(a: u64, b: u64) -> Result<u64> {
    Ok(MultiplierPermutation::build(a, b)?.inversions())
}

/// `I(a, b)` in `O(b log b)` with a Fenwick tree over the image values.
pub fn inversions_fast(a: u64, b: u64) -> Result<u64> {
    let pair = CoprimePair::new(a, b)?;
    Ok(count_inversions(images(pair), b as usize))
}

/// Inversions of a sequence of distinct values drawn from `0..n`.
fn count_inversions(values: impl Iterator<Item = u64>, n: usize) -> u64 {
    let mut tree = vec![0u32; n + 1];
    let mut inversions = 0u64;
    for (seen, v) in values.enumerate() {
        // count already-placed values <= v
        let mut not_greater = 0u64;
        let mut i = v as usize + 1;
        while i > 0 {
            not_greater += tree[i] as u64;
            i &= i - 1;
        }
        inversions += seen as u64 - not_greater;
        let mut i = v as usize + 1;
        while i <= n {
            tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }
    inversions
}

/// `I(a, b) = −3b·s(a, b) + (b−1)(b−2)/4`, evaluated exactly.
///
/// # Panics
///
/// If the right-hand side is not a nonnegative integer, which would mean a
/// bug in the Dedekind sum evaluator.
pub fn inversions_meyer(a: u64, b: u64) -> Result<u64> {
    let pair = CoprimePair::new(a, b)?;
    Ok(meyer_value(pair))
}

pub(crate) fn meyer_value(pair: CoprimePair) -> u64 {
    let b = pair.b() as i128;
    let rhs = bhk_value(pair).scale(-3 * b)
        + Rational::new((b - 1) * (b - 2), 4).expect("nonzero");
    let i = rhs
        .to_integer()
        .unwrap_or_else(|| panic!("I({}, {}) = {rhs:?} is not integral", pair.a(), b));
    assert!(i >= 0, "I({}, {b}) = {i} is negative", pair.a());
    i as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InversionMethod {
    Naive,
    Fast,
    Meyer,
}

impl InversionMethod {
    pub const ALL: [InversionMethod; 3] = [Self::Naive, Self::Fast, Self::Meyer];

    pub fn count(self, a: u64, b: u64) -> Result<u64> {
        match self {
            Self::Naive => inversions_naive(a, b),
            Self::Fast => inversions_fast(a, b),
            Self::Meyer => inversions_meyer(a, b),
        }
    }
}

impl fmt::Display for InversionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Naive => "naive",
            Self::Fast => "fast",
            Self::Meyer => "meyer",
        })
    }
}

impl FromStr for InversionMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "naive" => Ok(Self::Naive),
            "fast" => Ok(Self::Fast),
            "meyer" => Ok(Self::Meyer),
            other => Err(format!("unknown inversion method `{other}` (naive|fast|meyer)")),
        }
    }
}

/// `I(a, b)` computed several ways for cross-checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InversionReport {
    pub a: u64,
    pub b: u64,
    /// Skipped for large `b`, where the quadratic loop is impractical.
    pub naive: Option<u64>,
    pub fast: u64,
    pub meyer: u64,
}

impl InversionReport {
    pub fn new(a: u64, b: u64, with_naive: bool) -> Result<Self> {
        Ok(InversionReport {
            a,
            b,
            naive: if with_naive {
                Some(inversions_naive(a, b)?)
            } else {
                None
            },
            fast: inversions_fast(a, b)?,
            meyer: inversions_meyer(a, b)?,
        })
    }

    pub fn agrees(&self) -> bool {
        self.fast == self.meyer && self.naive.is_none_or(|n| n == self.fast)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exactmath::units;

    #[test]
    fn build_examples() {
        let id = MultiplierPermutation::build(1, 6).unwrap();
        assert_eq!(id.image(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(MultiplierPermutation::build(2, 5).unwrap().image(), &[0, 2, 4, 1, 3]);
        assert_eq!(
            MultiplierPermutation::build(3, 8).unwrap().image(),
            &[0, 3, 6, 1, 4, 7, 2, 5]
        );
        assert_eq!(MultiplierPermutation::build(7, 5).unwrap().image(), &[0, 2, 4, 1, 3]);
        assert!(matches!(MultiplierPermutation::build(2, 4), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn images_form_a_permutation() {
        for b in 1..=120u64 {
            for a in units(b).chain(std::iter::once(1)) {
                let p = MultiplierPermutation::build(a, b).unwrap();
                let mut seen = vec![false; b as usize];
                for &v in p.image() {
                    assert!(!seen[v as usize]);
                    seen[v as usize] = true;
                }
                assert_eq!(p.image()[0], 0);
            }
        }
    }

    #[test]
    fn naive_examples() {
        for b in 2..30u64 {
            assert_eq!(inversions_naive(1, b), Ok(0));
            assert_eq!(inversions_naive(b - 1, b), Ok((b - 1) * (b - 2) / 2));
        }
        assert_eq!(inversions_naive(2, 5), Ok(3));
        assert_eq!(inversions_naive(3, 8), Ok(9));
        assert_eq!(inversions_naive(15, 49), Ok(588));
    }

    #[test]
    fn fast_examples() {
        assert_eq!(inversions_fast(2, 5), Ok(3));
        assert_eq!(inversions_fast(3, 8), Ok(9));
        assert_eq!(inversions_fast(1, 1_000_001), Ok(0));
        assert_eq!(inversions_fast(1, 1), Ok(0));
        assert_eq!(count_inversions([3u64, 1, 2, 0].into_iter(), 4), 5);
    }

    #[test]
    fn meyer_examples() {
        assert_eq!(inversions_meyer(1, 4), Ok(0));
        assert_eq!(inversions_meyer(15, 49), Ok(588));
        assert_eq!(inversions_meyer(2, 5), Ok(3));
        assert_eq!(inversions_meyer(1, 1), Ok(0));
        assert_eq!(inversions_meyer(1, 2), Ok(0));
    }

    #[test]
    fn three_way_agreement_small() {
        for b in 1..=150u64 {
            for a in units(b) {
                let rep = InversionReport::new(a, b, true).unwrap();
                assert!(rep.agrees(), "{rep:?}");
                assert!(rep.fast <= b * (b - 1) / 2);
            }
        }
    }

    #[test]
    fn method_parsing() {
        assert_eq!("fast".parse(), Ok(InversionMethod::Fast));
        assert!("quick".parse::<InversionMethod>().is_err());
        for m in InversionMethod::ALL {
            assert_eq!(m.to_string().parse(), Ok(m));
            assert_eq!(m.count(3, 8), Ok(9));
        }
    }
}
