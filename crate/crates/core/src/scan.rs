//! Enumerates pairs `a₁ < a₂ < b` and keeps those matching a predicate on
//! their [`PairClassification`](crate::theorems::PairClassification).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;
use crate::exactmath::Rational;
use crate::theorems::{classify_with, Ladder, PairClassification};
use crate::verify::{check_range, map_moduli, ModulusTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanPredicate {
    /// `s(a₁, b) = s(a₂, b)`
    Equal,
    /// The mod-8ℤ congruence holds but the sums differ.
    CondCNotEqual,
    /// The ladder level is exactly this.
    Ladder(Ladder),
}

impl ScanPredicate {
    pub fn matches(&self, c: &PairClassification) -> bool {
        match self {
            ScanPredicate::Equal => c.equal,
            ScanPredicate::CondCNotEqual => c.cond_c && !c.equal,
            ScanPredicate::Ladder(level) => c.ladder == *level,
        }
    }
}

impl fmt::Display for ScanPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanPredicate::Equal => f.write_str("equal"),
            ScanPredicate::CondCNotEqual => f.write_str("cond-c-not-equal"),
            ScanPredicate::Ladder(l) => write!(f, "ladder={l}"),
        }
    }
}

impl FromStr for ScanPredicate {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "equal" => Ok(ScanPredicate::Equal),
            "cond-c-not-equal" => Ok(ScanPredicate::CondCNotEqual),
            _ => match s.strip_prefix("ladder=") {
                Some(level) => level.parse().map(ScanPredicate::Ladder),
                None => Err(format!(
                    "unknown predicate `{s}` (equal|cond-c-not-equal|ladder=none|1|2|4|8)"
                )),
            },
        }
    }
}

/// One emitted scan row. Field order is the column order of the CSV form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub b: u64,
    pub a1: u64,
    pub a2: u64,
    pub s1: Rational,
    pub s2: Rational,
    pub delta12s: Rational,
    pub ladder: Ladder,
    pub equal: bool,
    pub cond_c: bool,
    pub jabuka: bool,
}

impl ScanRecord {
    pub const COLUMNS: [&'static str; 10] = [
        "b", "a1", "a2", "s1", "s2", "delta12s", "ladder", "equal", "cond_c", "jabuka",
    ];
}

impl From<PairClassification> for ScanRecord {
    fn from(c: PairClassification) -> Self {
        ScanRecord {
            b: c.b,
            a1: c.a1,
            a2: c.a2,
            s1: c.s1,
            s2: c.s2,
            delta12s: c.delta12s,
            ladder: c.ladder,
            equal: c.equal,
            cond_c: c.cond_c,
            jabuka: c.jabuka,
        }
    }
}

/// All matching records with `b_min ≤ b ≤ b_max`, sorted by `(b, a1, a2)`.
pub fn scan(
    b_min: u64,
    b_max: u64,
    predicate: ScanPredicate,
    parallel: bool,
) -> Result<Vec<ScanRecord>> {
    check_range(b_min, b_max)?;
    let per_b = map_moduli(b_min, b_max, parallel, |b| scan_modulus(b, predicate));
    Ok(per_b.into_iter().flatten().collect())
}

fn scan_modulus(b: u64, predicate: ScanPredicate) -> Vec<ScanRecord> {
    classify_modulus(b)
        .into_iter()
        .filter(|c| predicate.matches(c))
        .map(ScanRecord::from)
        .collect()
}

/// Classifications of every pair of units `a₁ < a₂` modulo `b`, in
/// `(a₁, a₂)` order.
pub fn classify_modulus(b: u64) -> Vec<PairClassification> {
    let table = ModulusTable::new(b);
    let mut out = Vec::new();
    for (i, x) in table.rows.iter().enumerate() {
        for y in &table.rows[i + 1..] {
            let c = classify_with(x.a, y.a, b, x.s, y.s, x.mu_b, y.mu_b);
            assert!(c.is_consistent(), "inconsistent classification {c:?}");
            out.push(c);
        }
    }
    out
}
