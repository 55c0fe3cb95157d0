//! Executable congruences: the mod-8ℤ criterion for differences of Dedekind
//! sums, `b·T(a, b) mod 8`, and Girstmair's mod-4 cases for `T(a, b)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::confrac::reduced_expansion;
use crate::dedekind::{bhk_value, mu};
use crate::error::Result;
use crate::exactmath::{CoprimePair, Rational};
use crate::permutation::inversions_fast;

/// Largest `m ∈ {1, 2, 4, 8}` with `12s(a₁,b) − 12s(a₂,b) ∈ mℤ`, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ladder {
    None,
    One,
    Two,
    Four,
    Eight,
}

impl Ladder {
    pub fn of(x: Rational) -> Ladder {
        if !x.is_integer() {
            return Ladder::None;
        }
        match x.numer().rem_euclid(8) {
            0 => Ladder::Eight,
            4 => Ladder::Four,
            2 | 6 => Ladder::Two,
            _ => Ladder::One,
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Ladder::None => None,
            Ladder::One => Some(1),
            Ladder::Two => Some(2),
            Ladder::Four => Some(4),
            Ladder::Eight => Some(8),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Ladder::None => "none",
            Ladder::One => "1",
            Ladder::Two => "2",
            Ladder::Four => "4",
            Ladder::Eight => "8",
        }
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Ladder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(Ladder::None),
            "1" => Ok(Ladder::One),
            "2" => Ok(Ladder::Two),
            "4" => Ok(Ladder::Four),
            "8" => Ok(Ladder::Eight),
            other => Err(format!("unknown ladder level `{other}` (none|1|2|4|8)")),
        }
    }
}

impl Serialize for Ladder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

fn check_pair(a1: u64, a2: u64, b: u64) -> Result<(CoprimePair, CoprimePair)> {
    Ok((CoprimePair::new(a1, b)?, CoprimePair::new(a2, b)?))
}

/// `b | (a₁a₂ − 1)(a₁ − a₂)`, equivalent to `12s(a₁,b) − 12s(a₂,b) ∈ ℤ`.
pub fn jabuka(a1: u64, a2: u64, b: u64) -> Result<bool> {
    check_pair(a1, a2, b)?;
    Ok(jabuka_unchecked(a1, a2, b))
}

fn jabuka_unchecked(a1: u64, a2: u64, b: u64) -> bool {
    let (x, y, m) = (a1 as i128, a2 as i128, b as i128);
    ((x * y - 1) * (x - y)) % m == 0
}

/// The congruence
/// `(a₁ − a₂)(b − 1)(b + a₁a₂ − 1) ≡ 4b(a₂·μ(b, a₁) − a₁·μ(b, a₂)) (mod 8b)`.
///
/// Note the roles in `μ(b, aᵢ)`: `aᵢ` is the modulus there, so the branch
/// depends on the parity of `aᵢ`.
pub fn cond_8z(a1: u64, a2: u64, b: u64) -> Result<bool> {
    check_pair(a1, a2, b)?;
    Ok(cond_8z_with(a1, a2, b, mu(b, a1)?, mu(b, a2)?))
}

pub(crate) fn cond_8z_with(a1: u64, a2: u64, b: u64, mu1: u64, mu2: u64) -> bool {
    let (x, y, m) = (a1 as i128, a2 as i128, b as i128);
    let lhs = (x - y) * (m - 1) * (m + x * y - 1);
    let rhs = 4 * m * (y * mu1 as i128 - x * mu2 as i128);
    (lhs - rhs).rem_euclid(8 * m) == 0
}

/// The three equivalent conditions on `(a₁, a₂, b)`, each evaluated by its
/// own route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NecCondReport {
    pub a1: u64,
    pub a2: u64,
    pub b: u64,
    /// `I(a₁,b) ≡ I(a₂,b) (mod 2b)`, from the Fenwick inversion counter.
    pub inversions: bool,
    /// `3s(a₁,b) − 3s(a₂,b) ∈ 2ℤ`, from exact Dedekind sums.
    pub sums: bool,
    /// The Jacobi-symbol congruence of [`cond_8z`].
    pub congruence: bool,
}

impl NecCondReport {
    pub fn unanimous(&self) -> bool {
        self.inversions == self.sums && self.sums == self.congruence
    }
}

pub fn check_neccond_equivalence(a1: u64, a2: u64, b: u64) -> Result<NecCondReport> {
    let (p1, p2) = check_pair(a1, a2, b)?;
    let i1 = inversions_fast(a1, b)?;
    let i2 = inversions_fast(a2, b)?;
    let delta = (bhk_value(p1) - bhk_value(p2)).scale(12);
    Ok(NecCondReport {
        a1,
        a2,
        b,
        inversions: inversions_congruent(i1, i2, b),
        sums: delta.in_multiple_of(8),
        congruence: cond_8z(a1, a2, b)?,
    })
}

pub(crate) fn inversions_congruent(i1: u64, i2: u64, b: u64) -> bool {
    (i1 as i128 - i2 as i128).rem_euclid(2 * b as i128) == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub a1: u64,
    pub a2: u64,
    pub b: u64,
    pub s1: Rational,
    pub s2: Rational,
    /// `12s(a₁,b) − 12s(a₂,b)`
    pub delta12s: Rational,
    pub ladder: Ladder,
    pub equal: bool,
    pub cond_c: bool,
    pub jabuka: bool,
}

impl PairClassification {
    /// The structural implications every classification must satisfy.
    pub fn is_consistent(&self) -> bool {
        (!self.equal || self.ladder == Ladder::Eight)
            && ((self.ladder >= Ladder::One) == self.jabuka)
            && ((self.ladder == Ladder::Eight) == self.cond_c)
    }
}

/// Classifies `12s(a₁,b) − 12s(a₂,b)`.
///
/// # Panics
///
/// If the ladder disagrees with the Jabuka divisibility test or with
/// [`cond_8z`]; both equivalences are theorems, so this is a bug.
pub fn classify_pair(a1: u64, a2: u64, b: u64) -> Result<PairClassification> {
    let (p1, p2) = check_pair(a1, a2, b)?;
    let c = classify_with(a1, a2, b, bhk_value(p1), bhk_value(p2), mu(b, a1)?, mu(b, a2)?);
    assert!(c.is_consistent(), "inconsistent classification {c:?}");
    Ok(c)
}

pub(crate) fn classify_with(
    a1: u64,
    a2: u64,
    b: u64,
    s1: Rational,
    s2: Rational,
    mu1: u64,
    mu2: u64,
) -> PairClassification {
    let delta12s = (s1 - s2).scale(12);
    PairClassification {
        a1,
        a2,
        b,
        s1,
        s2,
        delta12s,
        ladder: Ladder::of(delta12s),
        equal: delta12s.is_zero(),
        cond_c: cond_8z_with(a1, a2, b, mu1, mu2),
        jabuka: jabuka_unchecked(a1, a2, b),
    }
}

/// `b·T(a, b) ≡ −4μ(a, b) + b² + 2 − a − a* (mod 8)`.
pub fn check_altsum_mod8(a: u64, b: u64) -> Result<bool> {
    let pair = CoprimePair::reduced(a, b)?;
    let cf = reduced_expansion(pair).expect("b >= 2");
    let (bb, aa) = (b as i128, a as i128);
    let lhs = bb * cf.alt_sum() as i128;
    let rhs = -4 * mu(a, b)? as i128 + bb * bb + 2 - aa - pair.inverse() as i128;
    Ok((lhs - rhs).rem_euclid(8) == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GirstmairTag {
    /// `a` or `a*` is odd.
    NotApplicable,
    /// Both even, at least one `≡ 2 (mod 4)`.
    CaseI,
    /// Both `≡ 0 (mod 4)`.
    CaseII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GirstmairCase {
    pub a: u64,
    pub b: u64,
    pub a_star: u64,
    /// `a·a* = 1 + k·b`
    pub k: i64,
    pub tag: GirstmairTag,
    pub t_mod4: u8,
    /// `(b − k)/2 mod 4` in case (i), `(k − b)/2 mod 4` in case (ii).
    pub predicted_mod4: Option<u8>,
    pub d_parity: u8,
}

impl GirstmairCase {
    pub fn holds(&self) -> bool {
        match self.tag {
            GirstmairTag::NotApplicable => true,
            GirstmairTag::CaseI => self.predicted_mod4 == Some(self.t_mod4),
            GirstmairTag::CaseII => {
                self.predicted_mod4 == Some(self.t_mod4) && self.d_parity == 1
            }
        }
    }
}

/// Evaluates the mod-4 predictions for `T(a, b)` when `a ≡ a* ≡ 0 (mod 2)`.
///
/// # Panics
///
/// If a case applies but `b − k` is odd. Both hypotheses force `b` and `k`
/// odd, so this cannot happen for coprime input.
pub fn check_girstmair(a: u64, b: u64) -> Result<GirstmairCase> {
    let pair = CoprimePair::reduced(a, b)?;
    let cf = reduced_expansion(pair).expect("b >= 2");
    let a_star = pair.inverse();
    let k = ((a as i128 * a_star as i128 - 1) / b as i128) as i64;
    debug_assert_eq!(k as i128 * b as i128, a as i128 * a_star as i128 - 1);

    let tag = match (a % 4, a_star % 4) {
        (0, 0) => GirstmairTag::CaseII,
        (0 | 2, 0 | 2) => GirstmairTag::CaseI,
        _ => GirstmairTag::NotApplicable,
    };
    let half = |x: i64| {
        assert!(x % 2 == 0, "({a}, {b}): half of odd {x}");
        (x / 2).rem_euclid(4) as u8
    };
    let predicted_mod4 = match tag {
        GirstmairTag::NotApplicable => None,
        GirstmairTag::CaseI => Some(half(b as i64 - k)),
        GirstmairTag::CaseII => Some(half(k - b as i64)),
    };
    Ok(GirstmairCase {
        a,
        b,
        a_star,
        k,
        tag,
        t_mod4: cf.alt_sum().rem_euclid(4) as u8,
        predicted_mod4,
        d_parity: (cf.digit_sum() % 2) as u8,
    })
}
