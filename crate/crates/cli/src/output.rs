use std::fmt::Write;

use anyhow::Result;
use jordanian::Report;
use serde::Serialize;

use crate::Format;

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct ReportFile<'a> {
    summary: Summary,
    reports: &'a [Report],
}

fn summary(reports: &[Report]) -> Summary {
    let passed = reports.iter().filter(|r| r.passed()).count();
    Summary { total: reports.len(), passed, failed: reports.len() - passed }
}

pub fn reports_json(reports: &[Report]) -> Result<String> {
    Ok(serde_json::to_string_pretty(&ReportFile { summary: summary(reports), reports })?)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn render_reports(reports: &[Report], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = reports_json(reports)?;
            out.push('\n');
        }
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            let s = summary(reports);
            writeln!(out, "{} checks, {} passed, {} failed", s.total, s.passed, s.failed)?;
        }
        Format::Csv => {
            writeln!(out, "check,family,u,N,status,first_residual_order,max_terms,max_residual,detail")?;
            for r in reports {
                let row = [
                    csv_field(&r.check),
                    csv_field(&r.family),
                    csv_field(&opt(r.u.as_ref())),
                    opt(r.order),
                    r.status.to_string(),
                    opt(r.first_residual_order),
                    r.max_terms.to_string(),
                    opt(r.max_residual.map(|x| format!("{x:e}"))),
                    csv_field(&opt(r.detail.as_ref())),
                ];
                writeln!(out, "{}", row.join(","))?;
            }
        }
    }
    Ok(out)
}
