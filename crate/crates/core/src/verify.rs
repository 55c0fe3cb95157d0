//! Exhaustive sweeps that check each identity over every coprime input in a
//! range of moduli.
//!
//! Work is split by modulus `b`. Results are gathered in `b` order and the
//! violation list is sorted, so a parallel sweep yields exactly the same
//! report as a sequential one.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::dedekind::{bhk_value, dedekind_sum_def, mu};
use crate::error::{Error, Result};
use crate::exactmath::{gcd_unchecked, jacobi, units, CoprimePair, Rational};
use crate::permutation::{inversions_fast, inversions_naive, meyer_value};
use crate::theorems::{check_altsum_mod8, check_girstmair, cond_8z_with, inversions_congruent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theorem {
    /// `(−1)^I(a,b) = (a/b)` for odd `b`.
    #[serde(rename = "zolotarev")]
    Zolotarev,
    /// Naive, Fenwick, and Dedekind-sum inversion counts agree.
    #[serde(rename = "meyer")]
    Meyer,
    /// `4a·I(a,b) + 4b·I(b,a) = (a−1)(b−1)(a+b−1)`.
    #[serde(rename = "salie")]
    Salie,
    /// Definition and continued-fraction evaluators of `s(a,b)` agree.
    #[serde(rename = "bhk")]
    Bhk,
    /// `I(a,b) ≡ μ(a,b) (mod 2)`.
    #[serde(rename = "lerch")]
    Lerch,
    /// The three mod-8ℤ conditions agree.
    #[serde(rename = "necCond")]
    NecCond,
    /// `b·T(a,b) mod 8`.
    #[serde(rename = "altsum")]
    Altsum,
    /// Mod-4 cases for `T(a,b)` and the parity of `D(a,b)`.
    #[serde(rename = "girstmair")]
    Girstmair,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Zolotarev,
        Theorem::Meyer,
        Theorem::Salie,
        Theorem::Bhk,
        Theorem::Lerch,
        Theorem::NecCond,
        Theorem::Altsum,
        Theorem::Girstmair,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Zolotarev => "zolotarev",
            Theorem::Meyer => "meyer",
            Theorem::Salie => "salie",
            Theorem::Bhk => "bhk",
            Theorem::Lerch => "lerch",
            Theorem::NecCond => "necCond",
            Theorem::Altsum => "altsum",
            Theorem::Girstmair => "girstmair",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| {
                let ids: Vec<_> = Theorem::ALL.iter().map(|t| t.id()).collect();
                format!("unknown theorem `{s}` (expected one of {})", ids.join(", "))
            })
    }
}

/// A counterexample: `(a, b)`, or `(a1, a2, b)` for pair statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub b: u64,
    pub a: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a2: Option<u64>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a2 {
            Some(a2) => write!(f, "({}, {}, {})", self.a, a2, self.b),
            None => write!(f, "({}, {})", self.a, self.b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub b_min: u64,
    pub b_max: u64,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn record(&mut self, ok: bool, v: impl FnOnce() -> Violation) {
        self.checked += 1;
        if !ok {
            self.violations.push(v());
        }
    }
}

pub(crate) fn check_range(b_min: u64, b_max: u64) -> Result<()> {
    if b_min == 0 || b_min > b_max {
        return Err(Error::InvalidRange {
            min: b_min,
            max: b_max,
        });
    }
    CoprimePair::new(1, b_max)?;
    Ok(())
}

/// Maps `per_b` over `b_min..=b_max`, in parallel when asked, preserving
/// `b` order in the output.
pub(crate) fn map_moduli<T, F>(b_min: u64, b_max: u64, parallel: bool, per_b: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    if parallel {
        (b_min..=b_max).into_par_iter().map(per_b).collect()
    } else {
        (b_min..=b_max).map(per_b).collect()
    }
}

/// Checks `theorem` for every coprime input with modulus in `b_min..=b_max`.
///
/// Statements about `T` and `D` skip `b = 1`. The Salié identity is checked
/// for every `a ≤ b_max` coprime to each `b` in range, so `a` may exceed `b`.
pub fn verify(theorem: Theorem, b_min: u64, b_max: u64, parallel: bool) -> Result<VerifyReport> {
    check_range(b_min, b_max)?;
    let tallies = map_moduli(b_min, b_max, parallel, |b| sweep_modulus(theorem, b, b_max));
    let mut checked = 0;
    let mut violations = Vec::new();
    for t in tallies {
        checked += t.checked;
        violations.extend(t.violations);
    }
    violations.sort_unstable();
    Ok(VerifyReport {
        theorem,
        b_min,
        b_max,
        checked,
        violations,
    })
}

fn single(a: u64, b: u64) -> impl FnOnce() -> Violation {
    move || Violation { b, a, a2: None }
}

fn sweep_modulus(theorem: Theorem, b: u64, b_max: u64) -> Tally {
    let mut t = Tally::default();
    match theorem {
        Theorem::Zolotarev if b % 2 == 1 => {
            for a in units(b) {
                let i = inversions_fast(a, b).expect("unit");
                let sign = if i.is_multiple_of(2) { 1 } else { -1 };
                t.record(jacobi(a as i64, b) == Ok(sign), single(a, b));
            }
        }
        Theorem::Zolotarev => {}
        Theorem::Meyer => {
            for a in units(b) {
                let naive = inversions_naive(a, b).expect("unit");
                let fast = inversions_fast(a, b).expect("unit");
                let meyer = meyer_value(CoprimePair::new(a, b).expect("unit"));
                t.record(naive == fast && fast == meyer, single(a, b));
            }
        }
        Theorem::Salie => {
            for a in (1..=b_max.max(b)).filter(|&a| gcd_unchecked(a, b) == 1) {
                let i_ab = inversions_fast(a, b).expect("coprime") as i128;
                let i_ba = inversions_fast(b, a).expect("coprime") as i128;
                let (x, y) = (a as i128, b as i128);
                let ok = 4 * x * i_ab + 4 * y * i_ba == (x - 1) * (y - 1) * (x + y - 1);
                t.record(ok, single(a, b));
            }
        }
        Theorem::Bhk => {
            for a in units(b) {
                let def = dedekind_sum_def(a, b).expect("unit").value;
                let bhk = bhk_value(CoprimePair::new(a, b).expect("unit"));
                t.record(def == bhk, single(a, b));
            }
        }
        Theorem::Lerch => {
            for a in units(b) {
                let i = inversions_fast(a, b).expect("unit");
                let m = mu(a, b).expect("unit");
                t.record(i % 2 == m % 2, single(a, b));
            }
        }
        Theorem::NecCond => {
            let table = ModulusTable::new(b);
            for (i, x) in table.rows.iter().enumerate() {
                for y in &table.rows[i + 1..] {
                    let by_inversions = inversions_congruent(x.inversions, y.inversions, b);
                    let by_sums = (x.s - y.s).scale(12).in_multiple_of(8);
                    let by_congruence = cond_8z_with(x.a, y.a, b, x.mu_b, y.mu_b);
                    let ok = by_inversions == by_sums && by_sums == by_congruence;
                    t.record(ok, || Violation {
                        b,
                        a: x.a,
                        a2: Some(y.a),
                    });
                }
            }
        }
        Theorem::Altsum => {
            for a in units(b) {
                t.record(check_altsum_mod8(a, b) == Ok(true), single(a, b));
            }
        }
        Theorem::Girstmair => {
            for a in units(b) {
                let ok = check_girstmair(a, b).map(|g| g.holds()).unwrap_or(false);
                t.record(ok, single(a, b));
            }
        }
    }
    t
}

/// Per-unit quantities for one modulus, shared by all pairs at that modulus.
pub(crate) struct ModulusTable {
    pub rows: Vec<UnitRow>,
}

pub(crate) struct UnitRow {
    pub a: u64,
    /// `s(a, b)`
    pub s: Rational,
    /// `I(a, b)` from the Fenwick counter
    pub inversions: u64,
    /// `μ(b, a)`, with `a` as the modulus
    pub mu_b: u64,
}

impl ModulusTable {
    pub fn new(b: u64) -> Self {
        let rows = units(b)
            .map(|a| UnitRow {
                a,
                s: bhk_value(CoprimePair::new(a, b).expect("unit")),
                inversions: inversions_fast(a, b).expect("unit"),
                mu_b: mu(b, a).expect("unit"),
            })
            .collect();
        ModulusTable { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse(), Ok(t));
        }
        assert!("fermat".parse::<Theorem>().is_err());
        assert!("neccond".parse::<Theorem>().is_err());
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(verify(Theorem::Bhk, 0, 10, false).is_err());
        assert!(verify(Theorem::Bhk, 10, 9, false).is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for t in Theorem::ALL {
            let rep = verify(t, 1, 40, false).unwrap();
            assert!(rep.passed(), "{t}: {:?}", rep.violations);
            assert!(rep.checked > 0);
        }
    }

    #[test]
    fn checked_counts() {
        // units below b for b = 5..=8: 4 + 2 + 6 + 4
        assert_eq!(verify(Theorem::Bhk, 5, 8, false).unwrap().checked, 16);
        // odd b only
        assert_eq!(verify(Theorem::Zolotarev, 5, 8, false).unwrap().checked, 4 + 6);
        // pairs a1 < a2: C(4,2) + C(2,2) + C(6,2) + C(4,2)
        assert_eq!(verify(Theorem::NecCond, 5, 8, false).unwrap().checked, 6 + 1 + 15 + 6);
        // a in 1..=7 coprime to 7
        assert_eq!(verify(Theorem::Salie, 7, 7, false).unwrap().checked, 6);
        // b = 6 sees a in {1, 5, 7}
        assert_eq!(verify(Theorem::Salie, 6, 7, false).unwrap().checked, 3 + 6);
    }

    #[test]
    fn parallel_matches_sequential() {
        for t in [Theorem::NecCond, Theorem::Salie, Theorem::Girstmair] {
            assert_eq!(verify(t, 2, 60, true), verify(t, 2, 60, false));
        }
    }

    #[test]
    fn violation_rendering() {
        let v = Violation { b: 49, a: 1, a2: Some(15) };
        assert_eq!(v.to_string(), "(1, 15, 49)");
        assert_eq!(Violation { b: 8, a: 3, a2: None }.to_string(), "(3, 8)");
    }
}
