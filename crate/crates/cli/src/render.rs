use std::io::{self, Write};

use dedekind_core::confrac::ContinuedFraction;
use dedekind_core::dedekind::DedekindSum;
use dedekind_core::exactmath::Rational;
use dedekind_core::permutation::InversionMethod;
use dedekind_core::scan::ScanRecord;
use dedekind_core::verify::VerifyReport;
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct SumExtras {
    pub t: i64,
    pub d: u64,
    pub a_star: u64,
    pub mu: u64,
    pub inversions: u64,
}

pub struct SumReport {
    pub sum: DedekindSum,
    pub extras: Option<SumExtras>,
}

impl SumReport {
    pub fn new(sum: DedekindSum) -> Self {
        SumReport { sum, extras: None }
    }
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn csv_rows(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn write_sum(out: &mut impl Write, format: Format, r: &SumReport) -> io::Result<()> {
    let s = &r.sum;
    match format {
        Format::Text => {
            writeln!(out, "s = {}", s.value)?;
            if let Some(x) = &r.extras {
                writeln!(out, "T = {}", x.t)?;
                writeln!(out, "D = {}", x.d)?;
                writeln!(out, "a* = {}", x.a_star)?;
                writeln!(out, "mu = {}", x.mu)?;
                writeln!(out, "I = {}", x.inversions)?;
            }
            Ok(())
        }
        Format::Json => {
            let mut v = json!({ "a": s.a, "b": s.b, "s": s.value });
            if let Some(x) = &r.extras {
                let m = v.as_object_mut().expect("object");
                m.insert("T".into(), x.t.into());
                m.insert("D".into(), x.d.into());
                m.insert("a_star".into(), x.a_star.into());
                m.insert("mu".into(), x.mu.into());
                m.insert("I".into(), x.inversions.into());
            }
            json_line(out, &v)
        }
        Format::Csv => {
            let mut header = vec!["a", "b", "s"];
            let mut row = vec![s.a.to_string(), s.b.to_string(), s.value.to_fraction_string()];
            if let Some(x) = &r.extras {
                header.extend(["T", "D", "a_star", "mu", "I"]);
                row.extend([
                    x.t.to_string(),
                    x.d.to_string(),
                    x.a_star.to_string(),
                    x.mu.to_string(),
                    x.inversions.to_string(),
                ]);
            }
            csv_rows(out, &header, &[row])
        }
    }
}

pub fn write_inv(
    out: &mut impl Write,
    format: Format,
    a: u64,
    b: u64,
    method: InversionMethod,
    count: u64,
) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "I = {count}"),
        Format::Json => json_line(out, &json!({ "a": a, "b": b, "method": method, "I": count })),
        Format::Csv => csv_rows(
            out,
            &["a", "b", "method", "I"],
            &[vec![a.to_string(), b.to_string(), method.to_string(), count.to_string()]],
        ),
    }
}

pub fn write_cf(
    out: &mut impl Write,
    format: Format,
    a: u64,
    b: u64,
    cf: &ContinuedFraction,
) -> io::Result<()> {
    let digits: Vec<String> = cf.digits().iter().map(u64::to_string).collect();
    match format {
        Format::Text => {
            writeln!(out, "digits = [{}]", digits.join(", "))?;
            writeln!(out, "T = {}", cf.alt_sum())?;
            writeln!(out, "D = {}", cf.digit_sum())
        }
        Format::Json => json_line(
            out,
            &json!({ "a": a, "b": b, "digits": cf.digits(), "T": cf.alt_sum(), "D": cf.digit_sum() }),
        ),
        Format::Csv => csv_rows(
            out,
            &["a", "b", "digits", "T", "D"],
            &[vec![
                a.to_string(),
                b.to_string(),
                digits.join(" "),
                cf.alt_sum().to_string(),
                cf.digit_sum().to_string(),
            ]],
        ),
    }
}

pub fn write_jacobi(out: &mut impl Write, format: Format, a: i64, b: u64, j: i8) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{j}"),
        Format::Json => json_line(out, &json!({ "a": a, "b": b, "jacobi": j })),
        Format::Csv => csv_rows(
            out,
            &["a", "b", "jacobi"],
            &[vec![a.to_string(), b.to_string(), j.to_string()]],
        ),
    }
}

fn record_row(r: &ScanRecord) -> Vec<String> {
    let frac = Rational::to_fraction_string;
    vec![
        r.b.to_string(),
        r.a1.to_string(),
        r.a2.to_string(),
        frac(&r.s1),
        frac(&r.s2),
        frac(&r.delta12s),
        r.ladder.to_string(),
        r.equal.to_string(),
        r.cond_c.to_string(),
        r.jabuka.to_string(),
    ]
}

pub fn write_check(out: &mut impl Write, format: Format, r: &ScanRecord) -> io::Result<()> {
    match format {
        Format::Text => {
            writeln!(out, "a1 = {}, a2 = {}, b = {}", r.a1, r.a2, r.b)?;
            writeln!(out, "s1 = {}", r.s1)?;
            writeln!(out, "s2 = {}", r.s2)?;
            writeln!(out, "12s1 - 12s2 = {}", r.delta12s)?;
            writeln!(out, "ladder = {}", r.ladder)?;
            writeln!(out, "equal = {}", r.equal)?;
            writeln!(out, "cond_c = {}", r.cond_c)?;
            writeln!(out, "jabuka = {}", r.jabuka)
        }
        Format::Json => json_line(out, r),
        Format::Csv => csv_rows(out, &ScanRecord::COLUMNS, &[record_row(r)]),
    }
}

/// Scans default to CSV; plain text has no separate table layout.
pub fn write_scan(out: &mut impl Write, format: Format, rows: &[ScanRecord]) -> io::Result<()> {
    match format {
        Format::Json => rows.iter().try_for_each(|r| json_line(out, r)),
        Format::Text | Format::Csv => {
            let rows: Vec<_> = rows.iter().map(record_row).collect();
            csv_rows(out, &ScanRecord::COLUMNS, &rows)
        }
    }
}

pub fn write_verify(out: &mut impl Write, format: Format, r: &VerifyReport) -> io::Result<()> {
    match format {
        Format::Json => json_line(out, r),
        Format::Text | Format::Csv => {
            writeln!(
                out,
                "theorem={} range={}..={} checked={} violations={}",
                r.theorem,
                r.b_min,
                r.b_max,
                r.checked,
                r.violations.len()
            )?;
            for v in &r.violations {
                writeln!(out, "violation {v}")?;
            }
            writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })
        }
    }
}
