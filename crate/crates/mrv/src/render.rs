//! Report and table renderers. Output depends only on the data passed in.

use std::fmt::Write as _;

use anyhow::Result;
use mrv_core::presentations::PoincareTable;
use mrv_core::verify::{CheckBox, CheckReport};
use serde_json::json;

use crate::config::Format;

pub fn reports(reports: &[CheckReport], bounds: CheckBox, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(reports)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "status", "p", "q", "expected", "computed", "witness"])?;
            for r in reports {
                let status = r.status.to_string();
                if r.findings.is_empty() {
                    w.write_record([r.check.as_str(), &status, "", "", "", "", ""])?;
                }
                for f in &r.findings {
                    w.write_record([
                        r.check.as_str(),
                        &status,
                        &f.bidegree[0].to_string(),
                        &f.bidegree[1].to_string(),
                        &f.expected,
                        &f.computed,
                        &f.witness.join(" "),
                    ])?;
                }
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Md => {
            let mut s = String::new();
            writeln!(s, "# Verification report\n")?;
            writeln!(s, "Box: p ≤ {}, q ≤ {}, m ≤ {}\n", bounds.p_max, bounds.q_max, bounds.m_max)?;
            writeln!(s, "| check | status | findings |\n|---|---|---|")?;
            for r in reports {
                writeln!(s, "| {} | {} | {} |", r.check, r.status, r.findings.len())?;
            }
            for r in reports.iter().filter(|r| !r.findings.is_empty()) {
                writeln!(s, "\n## {}\n", r.check)?;
                writeln!(s, "| (p,q) | expected | computed | witness |\n|---|---|---|---|")?;
                for f in &r.findings {
                    writeln!(
                        s,
                        "| ({},{}) | {} | {} | {} |",
                        f.bidegree[0],
                        f.bidegree[1],
                        f.expected,
                        f.computed,
                        f.witness.join(", ")
                    )?;
                }
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                writeln!(s, "{:<24} {:<6} {} finding(s)", r.check, r.status, r.findings.len())?;
                for f in &r.findings {
                    writeln!(
                        s,
                        "    ({},{}) expected {}; computed {}; witness [{}]",
                        f.bidegree[0],
                        f.bidegree[1],
                        f.expected,
                        f.computed,
                        f.witness.join(", ")
                    )?;
                }
            }
            Ok(s)
        }
    }
}

pub fn table(t: &PoincareTable, bigraded: bool, format: Format) -> Result<String> {
    let qs: Vec<i64> = (0..=t.q_max).collect();
    let group = |p: i64, q: i64| t.get(mrv_core::Bidegree::new(p, q)).map(|c| c.group.to_string()).unwrap_or_default();
    let header: Vec<String> = if bigraded {
        std::iter::once("p".to_string()).chain(qs.iter().map(|q| format!("q={q}"))).collect()
    } else {
        vec!["m".into(), "group".into()]
    };
    let rows: Vec<Vec<String>> =
        (0..=t.p_max).map(|p| std::iter::once(p.to_string()).chain(qs.iter().map(|&q| group(p, q))).collect()).collect();
    match format {
        Format::Json => {
            let cells: Vec<_> = t
                .cells
                .iter()
                .map(|c| json!({"p": c.degree.p, "q": c.degree.q, "group": c.group.to_string(), "basis": c.basis}))
                .collect();
            let doc = json!({"ring": t.ring, "p_max": t.p_max, "q_max": t.q_max, "cells": cells});
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header)?;
            for r in &rows {
                w.write_record(r)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Md => {
            let mut s = String::new();
            writeln!(s, "| {} |", header.join(" | "))?;
            writeln!(s, "|{}", "---|".repeat(header.len()))?;
            for r in &rows {
                writeln!(s, "| {} |", r.join(" | "))?;
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for c in &t.cells {
                let deg = if bigraded { format!("({},{})", c.degree.p, c.degree.q) } else { c.degree.p.to_string() };
                writeln!(s, "{deg}: {}: {{{}}}", c.group, c.basis.join(", "))?;
            }
            Ok(s)
        }
    }
}
