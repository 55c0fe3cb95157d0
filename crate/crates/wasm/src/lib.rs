//! Browser bindings for the demo page in `www/`.
//!
//! Each export returns a JSON string so the page can stay plain JavaScript.

use dedekind_core::confrac::{alt_sum, cf_expand, digit_sum};
use dedekind_core::dedekind::{dedekind_sum_bhk, dedekind_sum_def, mu};
use dedekind_core::exactmath::{jacobi, units, CoprimePair, Rational};
use dedekind_core::permutation::{
    inversions_fast, inversions_meyer, inversions_naive, MultiplierPermutation,
};
use dedekind_core::scan::{classify_modulus, ScanRecord};
use dedekind_core::theorems::{classify_pair, Ladder};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest modulus the page will draw; keeps the pair grid and the naive
/// inversion count interactive.
pub const DEMO_MAX_MODULUS: u64 = 400;

#[derive(Debug, Serialize)]
pub struct Exploration {
    pub a: u64,
    pub b: u64,
    pub s_def: Rational,
    pub s_bhk: Rational,
    pub digits: Vec<u64>,
    pub t: i64,
    pub d: u64,
    pub a_star: u64,
    pub mu: u64,
    pub jacobi: Option<i8>,
    pub inversions_naive: u64,
    pub inversions_fast: u64,
    pub inversions_meyer: u64,
    pub image: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct LadderGrid {
    pub b: u64,
    pub units: Vec<u64>,
    /// `levels[i][j]` is the ladder of `(units[i], units[j])`, as
    /// `-1` (none), `1`, `2`, `4` or `8`.
    pub levels: Vec<Vec<i8>>,
    /// Pairs whose congruence holds while the sums differ.
    pub witnesses: usize,
}

fn check_demo_range(b: u64) -> Result<(), String> {
    if !(2..=DEMO_MAX_MODULUS).contains(&b) {
        return Err(format!("b must be between 2 and {DEMO_MAX_MODULUS}"));
    }
    Ok(())
}

/// Everything about a single pair `(a, b)`, `0 < a < b`.
pub fn explore_pair(a: u64, b: u64) -> Result<Exploration, String> {
    check_demo_range(b)?;
    let pair = CoprimePair::reduced(a, b).map_err(|e| e.to_string())?;
    let err = |e: dedekind_core::Error| e.to_string();
    Ok(Exploration {
        a,
        b,
        s_def: dedekind_sum_def(a, b).map_err(err)?.value,
        s_bhk: dedekind_sum_bhk(a, b).map_err(err)?.value,
        digits: cf_expand(a, b).map_err(err)?.digits().to_vec(),
        t: alt_sum(a, b).map_err(err)?,
        d: digit_sum(a, b).map_err(err)?,
        a_star: pair.inverse(),
        mu: mu(a, b).map_err(err)?,
        jacobi: (b % 2 == 1).then(|| jacobi(a as i64, b).expect("odd")),
        inversions_naive: inversions_naive(a, b).map_err(err)?,
        inversions_fast: inversions_fast(a, b).map_err(err)?,
        inversions_meyer: inversions_meyer(a, b).map_err(err)?,
        image: MultiplierPermutation::build(a, b).map_err(err)?.image().to_vec(),
    })
}

pub fn compare_pair(a1: u64, a2: u64, b: u64) -> Result<ScanRecord, String> {
    check_demo_range(b)?;
    classify_pair(a1, a2, b)
        .map(ScanRecord::from)
        .map_err(|e| e.to_string())
}

/// Ladder levels for every ordered pair of units modulo `b`.
pub fn ladder_grid(b: u64) -> Result<LadderGrid, String> {
    check_demo_range(b)?;
    let us: Vec<u64> = units(b).collect();
    let table = classify_modulus(b);
    let mut levels = vec![vec![8i8; us.len()]; us.len()];
    let mut witnesses = 0;
    for c in &table {
        let i = us.binary_search(&c.a1).expect("unit");
        let j = us.binary_search(&c.a2).expect("unit");
        let level = match c.ladder {
            Ladder::None => -1,
            other => other.modulus().expect("level") as i8,
        };
        levels[i][j] = level;
        levels[j][i] = level;
        if c.cond_c && !c.equal {
            witnesses += 1;
        }
    }
    Ok(LadderGrid {
        b,
        units: us,
        levels,
        witnesses,
    })
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn explore(a: u32, b: u32) -> Result<String, JsValue> {
    to_js(explore_pair(a.into(), b.into()))
}

#[wasm_bindgen]
pub fn compare(a1: u32, a2: u32, b: u32) -> Result<String, JsValue> {
    to_js(compare_pair(a1.into(), a2.into(), b.into()))
}

#[wasm_bindgen]
pub fn ladder(b: u32) -> Result<String, JsValue> {
    to_js(ladder_grid(b.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explore_15_49() {
        let e = explore_pair(15, 49).unwrap();
        assert_eq!(e.s_def, Rational::new(-8, 49).unwrap());
        assert_eq!(e.s_def, e.s_bhk);
        assert_eq!(e.digits, vec![3, 3, 1, 2, 1]);
        assert_eq!((e.t, e.d, e.a_star), (0, 10, 36));
        assert_eq!(e.inversions_naive, 588);
        assert_eq!(e.inversions_fast, 588);
        assert_eq!(e.inversions_meyer, 588);
        assert_eq!(e.jacobi, Some(1));
        assert_eq!(e.image.len(), 49);
    }

    #[test]
    fn explore_rejects_bad_input() {
        assert!(explore_pair(14, 49).is_err());
        assert!(explore_pair(50, 49).is_err());
        assert!(explore_pair(1, DEMO_MAX_MODULUS + 1).is_err());
    }

    #[test]
    fn compare_serializes_like_the_cli() {
        let rec = compare_pair(1, 15, 49).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains(r#""delta12s":"48/1""#));
        assert!(json.contains(r#""cond_c":true"#));
    }

    #[test]
    fn grid_is_symmetric_with_eights_on_diagonal() {
        let g = ladder_grid(49).unwrap();
        assert_eq!(g.units.len(), 42);
        for i in 0..g.units.len() {
            assert_eq!(g.levels[i][i], 8);
            for j in 0..g.units.len() {
                assert_eq!(g.levels[i][j], g.levels[j][i]);
            }
        }
        let i = g.units.binary_search(&1).unwrap();
        let j = g.units.binary_search(&15).unwrap();
        assert_eq!(g.levels[i][j], 8);
        assert!(g.witnesses >= 1);
    }
}
