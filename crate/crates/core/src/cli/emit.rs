//! Text, JSON and CSV renderings of reports and value tables.

use clap::ValueEnum;
use serde::Serialize;

use crate::asymptotics::{BesselEnclosure, ErrorBudget};
use crate::interval::Interval;
use crate::verify::VerificationReport;

/// Significant digits for interval endpoints, rounded outward.
pub const INTERVAL_DIGITS: u32 = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn bounds(iv: &Interval) -> (String, String) {
    iv.to_decimal_bounds(INTERVAL_DIGITS)
}

#[derive(Serialize)]
struct WitnessJson {
    n: u64,
    value_lo: String,
    value_hi: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    check: &'a str,
    range: [u64; 2],
    verdict: &'a str,
    witnesses: Vec<WitnessJson>,
    precision_bits: u32,
    elapsed_s: f64,
    notes: &'a [String],
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = ReportJson {
                check: &r.check,
                range: [r.range.0, r.range.1],
                verdict: r.verdict.as_str(),
                witnesses: r
                    .witnesses
                    .iter()
                    .map(|w| {
                        let (value_lo, value_hi) = bounds(&w.value);
                        WitnessJson {
                            n: w.n,
                            value_lo,
                            value_hi,
                        }
                    })
                    .collect(),
                precision_bits: r.precision_bits,
                elapsed_s: r.elapsed.as_secs_f64(),
                notes: &r.notes,
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Csv => csv_string(
            &["n", "value_lo", "value_hi"],
            r.witnesses.iter().map(|w| {
                let (lo, hi) = bounds(&w.value);
                vec![w.n.to_string(), lo, hi]
            }),
        ),
        Format::Text => {
            let mut s = format!(
                "check:     {}\nrange:     [{}, {}]\nverdict:   {}\n",
                r.check, r.range.0, r.range.1, r.verdict
            );
            if r.precision_bits == 0 {
                s += "precision: exact\n";
            } else {
                s += &format!("precision: {} bits\n", r.precision_bits);
            }
            s += &format!("elapsed:   {:.3} s\n", r.elapsed.as_secs_f64());
            for w in &r.witnesses {
                let (lo, hi) = bounds(&w.value);
                s += &format!("witness:   n = {}: [{lo}, {hi}]\n", w.n);
            }
            for note in &r.notes {
                s += &format!("note:      {note}\n");
            }
            s
        }
    }
}

/// `n,value` table of exact values, already rendered as decimal integers or
/// `num/den`.
pub fn value_table(rows: &[(u64, String)], format: Format) -> String {
    match format {
        Format::Csv => csv_string(
            &["n", "value"],
            rows.iter().map(|(n, v)| vec![n.to_string(), v.clone()]),
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                n: u64,
                value: &'a str,
            }
            let doc: Vec<Row> = rows.iter().map(|(n, v)| Row { n: *n, value: v }).collect();
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => rows.iter().map(|(n, v)| format!("{n}\t{v}\n")).collect(),
    }
}

pub fn bessel(b: &BesselEnclosure, format: Format) -> String {
    let (x_lo, x_hi) = bounds(&b.x);
    let (p_lo, p_hi) = bounds(&b.p);
    let (q_lo, q_hi) = bounds(&b.q);
    let (j_lo, j_hi) = bounds(&b.j);
    let order = b.order.value().to_string();
    match format {
        Format::Csv => csv_string(
            &["order", "x_lo", "x_hi", "p_lo", "p_hi", "q_lo", "q_hi", "j_lo", "j_hi"],
            [vec![order, x_lo, x_hi, p_lo, p_hi, q_lo, q_hi, j_lo, j_hi]],
        ),
        Format::Json => {
            let doc = serde_json::json!({
                "order": b.order.value(),
                "x": [x_lo, x_hi],
                "p": [p_lo, p_hi],
                "q": [q_lo, q_hi],
                "j": [j_lo, j_hi],
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => format!(
            "J_{order}(x), x in [{x_lo}, {x_hi}]\nP: [{p_lo}, {p_hi}]\nQ: [{q_lo}, {q_hi}]\nJ: [{j_lo}, {j_hi}]\n"
        ),
    }
}

const BUDGET_COLUMNS: [&str; 10] = [
    "n",
    "e2_hi",
    "e3_hi",
    "e4_hi",
    "e5_hi",
    "e6_hi",
    "e7_hi",
    "e8_hi",
    "total_hi",
    "normalized_hi",
];

fn budget_row(b: &ErrorBudget) -> Vec<String> {
    let mut row = vec![b.n.to_string()];
    for (_, iv) in b.terms() {
        row.push(bounds(iv).1);
    }
    row.push(bounds(&b.total).1);
    row.push(bounds(&b.normalized).1);
    row
}

pub fn budgets(rows: &[ErrorBudget], format: Format) -> String {
    match format {
        Format::Csv => csv_string(&BUDGET_COLUMNS, rows.iter().map(budget_row)),
        Format::Json => {
            let doc: Vec<serde_json::Value> = rows
                .iter()
                .map(|b| {
                    let mut obj = serde_json::Map::new();
                    for (k, v) in BUDGET_COLUMNS.iter().zip(budget_row(b)) {
                        let v = if *k == "n" {
                            serde_json::Value::from(b.n)
                        } else {
                            serde_json::Value::from(v)
                        };
                        obj.insert((*k).to_string(), v);
                    }
                    obj.insert(
                        "outside_proof_range".into(),
                        serde_json::Value::from(b.outside_proof_range),
                    );
                    serde_json::Value::Object(obj)
                })
                .collect();
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for b in rows {
                s += &format!("n = {}", b.n);
                if b.outside_proof_range {
                    s += " (outside proof range)";
                }
                s += "\n";
                for (name, iv) in b.terms() {
                    s += &format!("  {name}:         {}\n", bounds(iv).1);
                }
                s += &format!("  total:      {}\n", bounds(&b.total).1);
                s += &format!("  normalized: {}\n", bounds(&b.normalized).1);
            }
            s
        }
    }
}

/// Generic table of already formatted cells.
pub fn table(header: &[&str], rows: &[Vec<String>], format: Format) -> String {
    match format {
        Format::Csv => csv_string(header, rows.iter().cloned()),
        Format::Json => {
            let doc: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let obj: serde_json::Map<String, serde_json::Value> = header
                        .iter()
                        .zip(row)
                        .map(|(k, v)| ((*k).to_string(), serde_json::Value::from(v.as_str())))
                        .collect();
                    serde_json::Value::Object(obj)
                })
                .collect();
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s = header.join("\t") + "\n";
            for row in rows {
                s += &(row.join("\t") + "\n");
            }
            s
        }
    }
}
