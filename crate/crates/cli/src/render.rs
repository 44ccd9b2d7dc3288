use floer_core::floerring::{self, SpectrumEntry};
use floer_core::groebner::ORDER_TAG;
use floer_core::relations;
use floer_core::scalars::Scalar;
use floer_core::tables;
use floer_core::Result;
use serde::Serialize;
use serde_json::json;

use crate::checks::SuiteReport;
use crate::Format;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Right-aligned columns separated by two spaces.
fn columns(rows: &[Vec<String>]) -> String {
    let n = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..n).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn triple(eig: &[Scalar; 3]) -> String {
    format!("({}, {}, {})", eig[0], eig[1], eig[2])
}

pub(crate) fn present(genus: u32, format: Format) -> Result<String> {
    let family = relations::ideal_j(genus);
    let standard = family.basis.standard_monomials()?;
    Ok(match format {
        Format::Json => to_json(&json!({
            "genus": genus,
            "R": family.triple.relations,
            "groebner": family.basis.generators(),
            "order": ORDER_TAG,
            "standard_monomials": standard.iter().map(|m| m.exps).collect::<Vec<_>>(),
            "dim": standard.len(),
        })),
        Format::Text => {
            let mut out = format!("genus {genus}\n");
            for (k, r) in family.triple.relations.iter().enumerate() {
                out += &format!("R{} = {r}\n", k + 1);
            }
            out += &format!("groebner basis [{ORDER_TAG}]\n");
            for p in family.basis.generators() {
                out += &format!("  {p}\n");
            }
            let names: Vec<String> = standard.iter().map(ToString::to_string).collect();
            out += &format!("standard monomials: {}\n", names.join(", "));
            out += &format!("dim {}\n", standard.len());
            out
        }
    })
}

fn spectrum_rows(entries: &[SpectrumEntry]) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["i".into(), "α".into(), "β".into(), "γ".into(), "dim".into()]];
    for e in entries {
        let [a, b, c] = &e.candidate.eigenvalues;
        rows.push(vec![e.candidate.index.to_string(), a.to_string(), b.to_string(), c.to_string(), e.dim.to_string()]);
    }
    rows
}

pub(crate) fn spectrum(genus: u32, format: Format) -> Result<String> {
    let algebra = floerring::build_quotient(genus)?;
    let report = floerring::spectrum(algebra.genus())?;
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = format!("genus {genus}, dim {}\n", algebra.dim());
            out += &columns(&spectrum_rows(&report.entries));
            let c = &report.certificate;
            out += &format!(
                "certified: {} (exponents α {:?}, β {:?}, γ {})\n",
                report.certified, c.alpha_exponents, c.beta_exponents, c.gamma_exponent
            );
            out
        }
    })
}

pub(crate) fn decompose(genus: u32, format: Format) -> Result<String> {
    let report = floerring::decomposition(genus)?;
    Ok(match format {
        Format::Json => to_json(&*report),
        Format::Text => {
            let mut rows = vec![vec!["i".into(), "eigenvalues".into(), "dim".into()]];
            for s in &report.summands {
                rows.push(vec![s.index.to_string(), triple(&s.eigenvalues), s.dim.to_string()]);
            }
            let total: usize = report.dims().iter().sum();
            format!("genus {genus}\n{}total {total}, certified: {}\n", columns(&rows), report.certified)
        }
    })
}

pub(crate) fn table(genus: u32, format: Format) -> Result<String> {
    let t = tables::sp_table(genus)?;
    Ok(match format {
        Format::Json => to_json(&t),
        Format::Text => format!("{t}\n"),
    })
}

pub(crate) fn conjecture(genus: u32, format: Format) -> Result<String> {
    let r = tables::conjecture_report(genus)?;
    Ok(match format {
        Format::Json => to_json(&r),
        Format::Text => format!("{r}\n"),
    })
}

pub(crate) fn suite(report: &SuiteReport, format: Format, timings: bool) -> String {
    match format {
        Format::Json => {
            let checks: Vec<serde_json::Value> = report
                .checks
                .iter()
                .map(|c| {
                    let mut v = json!({ "name": c.name, "genus": c.genus, "passed": c.passed });
                    if let Some(d) = &c.detail {
                        v["detail"] = json!(d);
                    }
                    if timings {
                        v["elapsed_ms"] = json!(c.elapsed.as_millis() as u64);
                    }
                    v
                })
                .collect();
            to_json(&json!({
                "max_genus": report.max_genus,
                "checks": checks,
                "passed": report.passed(),
                "failed": report.failed(),
            }))
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                out += &format!("{} {} g={}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.genus);
                if timings {
                    out += &format!(" [{} ms]", c.elapsed.as_millis());
                }
                if let Some(d) = &c.detail {
                    out += &format!(": {d}");
                }
                out.push('\n');
            }
            out += &format!("{} passed, {} failed\n", report.passed(), report.failed());
            out
        }
    }
}
