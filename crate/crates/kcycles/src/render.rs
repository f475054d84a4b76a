//! Text, markdown, CSV and JSON emitters for tables and reports.
//!
//! JSON never contains floating-point tokens: every rational is an
//! object with decimal-string numerator and denominator.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::expectation::ExpectationTable;
use crate::mahonian::ConjectureReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Markdown,
    Csv,
    Json,
}

/// How to print exact rationals: `Reduced` prints integers bare
/// ("13/5", "2"), `Figure1` always shows the denominator ("2/1").
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RationalStyle {
    #[default]
    Reduced,
    Figure1,
}

pub fn format_rational(value: &BigRational, style: RationalStyle) -> String {
    match style {
        RationalStyle::Reduced if value.is_integer() => value.numer().to_string(),
        _ => format!("{}/{}", value.numer(), value.denom()),
    }
}

pub fn rational_json(value: &BigRational) -> serde_json::Value {
    serde_json::json!({
        "numerator": value.numer().to_string(),
        "denominator": value.denom().to_string(),
    })
}

fn grid_plain(header: &[String], rows: &[Vec<String>]) -> String {
    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let line: Vec<String> = (0..columns)
            .map(|i| {
                let cell = cells.get(i).map(String::as_str).unwrap_or("");
                format!("{:>width$}", cell, width = widths[i])
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    emit(&mut out, header);
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn grid_markdown(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!(
        "|{}\n",
        " --- |".repeat(header.len())
    ));
    for row in rows {
        let cells: Vec<&str> = (0..header.len())
            .map(|i| row.get(i).map(String::as_str).unwrap_or(""))
            .collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

fn grid_csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<&str> = (0..header.len())
            .map(|i| row.get(i).map(String::as_str).unwrap_or(""))
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn render_grid(
    format: OutputFormat,
    header: &[String],
    rows: &[Vec<String>],
) -> String {
    match format {
        OutputFormat::Plain => grid_plain(header, rows),
        OutputFormat::Markdown => grid_markdown(header, rows),
        OutputFormat::Csv => grid_csv(header, rows),
        OutputFormat::Json => unreachable!("json is rendered structurally"),
    }
}

/// Render the expectation table. Cells with an empty population are
/// blank, as in the reference table shape.
pub fn render_expectation_table(
    table: &ExpectationTable,
    format: OutputFormat,
    style: RationalStyle,
) -> String {
    if format == OutputFormat::Json {
        let rows: Vec<serde_json::Value> = table
            .rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "n": row.n,
                    "cells": row.cells.iter().map(|(m, value)| {
                        let mut cell = rational_json(value);
                        cell["m"] = serde_json::json!(m);
                        cell
                    }).collect::<Vec<_>>(),
                })
            })
            .collect();
        let json = serde_json::json!({ "k": table.k, "rows": rows });
        return format!("{json:#}\n");
    }
    let max_m = table.max_m();
    let mut header: Vec<String> = vec!["n".into()];
    header.extend((0..=max_m).map(|m| m.to_string()));
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|row| {
            let mut cells = vec![row.n.to_string()];
            for m in 0..=max_m {
                cells.push(
                    row.cells
                        .iter()
                        .find(|(cm, _)| *cm == m)
                        .map(|(_, v)| format_rational(v, style))
                        .unwrap_or_default(),
                );
            }
            cells
        })
        .collect();
    render_grid(format, &header, &rows)
}

/// Render one row of counts `C_k(n, m)` for `m = 0..`.
pub fn render_count_row(
    k: u64,
    n: u64,
    counts: &[(u64, BigInt)],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Plain => {
            let row: Vec<String> = counts.iter().map(|(_, c)| c.to_string()).collect();
            format!("{}\n", row.join(" "))
        }
        OutputFormat::Json => {
            let json = serde_json::json!({
                "k": k,
                "n": n,
                "counts": counts.iter().map(|(m, c)| serde_json::json!({
                    "m": m,
                    "count": c.to_string(),
                })).collect::<Vec<_>>(),
            });
            format!("{json:#}\n")
        }
        other => {
            let header: Vec<String> = counts.iter().map(|(m, _)| m.to_string()).collect();
            let row: Vec<String> = counts.iter().map(|(_, c)| c.to_string()).collect();
            render_grid(other, &header, &[row])
        }
    }
}

/// Render conjecture reports, one grid per conjecture, with a summary
/// line per report.
pub fn render_conjecture_reports(
    reports: &[ConjectureReport],
    format: OutputFormat,
    style: RationalStyle,
) -> String {
    if format == OutputFormat::Json {
        let json: Vec<serde_json::Value> = reports
            .iter()
            .map(|report| {
                serde_json::json!({
                    "conjecture": report.id.label(),
                    "n_max": report.n_max,
                    "all_equal": report.all_equal(),
                    "cells": report.cells.iter().map(|cell| serde_json::json!({
                        "n": cell.n,
                        "value": cell.value,
                        "conjectured": rational_json(&cell.conjectured),
                        "brute": rational_json(&cell.brute),
                        "equal": cell.equal,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        return format!("{}\n", serde_json::json!(json));
    }
    let mut out = String::new();
    for report in reports {
        let header: Vec<String> = ["n", "value", "conjectured", "brute", "equal"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let rows: Vec<Vec<String>> = report
            .cells
            .iter()
            .map(|cell| {
                vec![
                    cell.n.to_string(),
                    cell.value.to_string(),
                    format_rational(&cell.conjectured, style),
                    format_rational(&cell.brute, style),
                    if cell.equal { "yes" } else { "NO" }.to_string(),
                ]
            })
            .collect();
        out.push_str(&format!("conjecture {}:\n", report.id.label()));
        out.push_str(&render_grid(format, &header, &rows));
        let mismatches = report.cells.iter().filter(|c| !c.equal).count();
        out.push_str(&format!(
            "summary {}: {} cells, {} equal, {} mismatched\n",
            report.id.label(),
            report.cells.len(),
            report.cells.len() - mismatches,
            mismatches
        ));
    }
    out
}
