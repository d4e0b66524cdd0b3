//! Rendering of reports, partitions, sweep tables and verify results.
//!
//! JSON is the primary format; csv and md carry the same fields in a fixed
//! column order. Everything is emitted in canonical order so identical
//! inputs produce byte-identical output.

use clap::ValueEnum;
use serde::Serialize;

use flag_concavity::concavity::ConcavityReport;
use flag_concavity::domains::{DomainSpec, RootPartition};
use flag_concavity::roots::Root;

use crate::verify::{FormulaMismatch, VerifyOutcome};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

pub fn root_array(root: &Root) -> Vec<i64> {
    root.coeffs().to_vec()
}

/// Debug form of an exact matrix: rows of "num/den" strings.
pub fn matrix_strings(m: &flag_concavity::linalg::Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let x = m.get(i, j);
                    format!("{}/{}", x.numer(), x.denom())
                })
                .collect()
        })
        .collect()
}

fn root_set_arrays<'a>(roots: impl Iterator<Item = &'a Root>) -> Vec<Vec<i64>> {
    roots.map(root_array).collect()
}

fn compact_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    out.push('\n');
    out
}

fn csv_cell(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str("| ");
    out.push_str(&header.join(" | "));
    out.push_str(" |\n|");
    for _ in header {
        out.push_str(" --- |");
    }
    out.push('\n');
    for row in rows {
        out.push_str("| ");
        out.push_str(&row.join(" | "));
        out.push_str(" |\n");
    }
    out
}

#[derive(Serialize)]
#[serde(untagged)]
enum ParamsDoc {
    Su {
        p: u32,
        p_prime: u32,
        r: u32,
        r_prime: u32,
    },
    Sp {
        n: u32,
        p: u32,
        q: u32,
    },
}

fn family_name(spec: &DomainSpec) -> &'static str {
    match spec {
        DomainSpec::Su { .. } => "su",
        DomainSpec::Sp { .. } => "sp",
    }
}

fn params_doc(spec: &DomainSpec) -> ParamsDoc {
    match *spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => ParamsDoc::Su {
            p,
            p_prime,
            r,
            r_prime,
        },
        DomainSpec::Sp { n, p, q } => ParamsDoc::Sp { n, p, q },
    }
}

fn param_columns(spec: &DomainSpec) -> Vec<(&'static str, String)> {
    match *spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => vec![
            ("p", p.to_string()),
            ("p_prime", p_prime.to_string()),
            ("r", r.to_string()),
            ("r_prime", r_prime.to_string()),
        ],
        DomainSpec::Sp { n, p, q } => vec![
            ("n", n.to_string()),
            ("p", p.to_string()),
            ("q", q.to_string()),
        ],
    }
}

#[derive(Serialize)]
struct AtEntry {
    alpha: Vec<i64>,
    size: usize,
}

#[derive(Serialize)]
struct ReportDoc {
    family: &'static str,
    params: ParamsDoc,
    dim_u_minus: usize,
    attractiveness: Vec<AtEntry>,
    d_ma: usize,
    argmin: Vec<Vec<i64>>,
    paper_bound: u64,
    derived_bound_su: Option<u64>,
    convex_degenerate: bool,
    paper_formula_match: bool,
}

fn report_doc(report: &ConcavityReport) -> ReportDoc {
    ReportDoc {
        family: family_name(&report.spec),
        params: params_doc(&report.spec),
        dim_u_minus: report.dim_u_minus,
        attractiveness: report
            .per_alpha
            .iter()
            .map(|(alpha, size)| AtEntry {
                alpha: root_array(alpha),
                size: *size,
            })
            .collect(),
        d_ma: report.d_ma,
        argmin: root_set_arrays(report.argmin.iter()),
        paper_bound: report.paper_bound,
        derived_bound_su: report.derived_bound_su,
        convex_degenerate: report.convex_degenerate,
        paper_formula_match: report.paper_formula_match,
    }
}

/// The scalar columns shared by single reports and sweep rows, in the wire
/// column order.
fn scalar_columns(report: &ConcavityReport) -> Vec<(&'static str, String)> {
    let mut cols = vec![("family", family_name(&report.spec).to_string())];
    cols.extend(param_columns(&report.spec));
    cols.push(("dim_u_minus", report.dim_u_minus.to_string()));
    cols.push(("d_ma", report.d_ma.to_string()));
    cols.push(("paper_bound", report.paper_bound.to_string()));
    cols.push((
        "derived_bound_su",
        report
            .derived_bound_su
            .map(|b| b.to_string())
            .unwrap_or_default(),
    ));
    cols.push((
        "paper_formula_match",
        report.paper_formula_match.to_string(),
    ));
    cols.push(("convex_degenerate", report.convex_degenerate.to_string()));
    cols
}

pub fn render_report(report: &ConcavityReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => pretty_json(&report_doc(report)),
        OutputFormat::Csv | OutputFormat::Md => {
            let doc = report_doc(report);
            let mut cols = scalar_columns(report);
            cols.push(("argmin", compact_json(&doc.argmin)));
            cols.push(("attractiveness", compact_json(&doc.attractiveness)));
            let header: Vec<&str> = cols.iter().map(|(h, _)| *h).collect();
            let row: Vec<String> = cols.into_iter().map(|(_, v)| v).collect();
            match format {
                OutputFormat::Csv => csv_table(&header, &[row]),
                _ => md_table(&header, &[row]),
            }
        }
    }
}

#[derive(Serialize)]
struct PartitionDoc {
    lambda_k: Vec<Vec<i64>>,
    lambda_q0: Vec<Vec<i64>>,
    lambda_u_minus: Vec<Vec<i64>>,
    gamma: Vec<Vec<i64>>,
    phi: Vec<Vec<i64>>,
}

pub fn render_partition(part: &RootPartition, format: OutputFormat) -> String {
    let doc = PartitionDoc {
        lambda_k: root_set_arrays(part.lambda_k().iter()),
        lambda_q0: root_set_arrays(part.lambda_q0().iter()),
        lambda_u_minus: root_set_arrays(part.lambda_u_minus().iter()),
        gamma: root_set_arrays(part.gamma().iter()),
        phi: root_set_arrays(part.phi().iter()),
    };
    match format {
        OutputFormat::Json => pretty_json(&doc),
        OutputFormat::Csv | OutputFormat::Md => {
            let sets: [(&str, &Vec<Vec<i64>>); 5] = [
                ("lambda_k", &doc.lambda_k),
                ("lambda_q0", &doc.lambda_q0),
                ("lambda_u_minus", &doc.lambda_u_minus),
                ("gamma", &doc.gamma),
                ("phi", &doc.phi),
            ];
            let rows: Vec<Vec<String>> = sets
                .iter()
                .flat_map(|(name, roots)| {
                    roots
                        .iter()
                        .map(|r| vec![name.to_string(), compact_json(r)])
                        .collect::<Vec<_>>()
                })
                .collect();
            match format {
                OutputFormat::Csv => csv_table(&["set", "root"], &rows),
                _ => md_table(&["set", "root"], &rows),
            }
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum SweepRow {
    Su {
        family: &'static str,
        p: u32,
        p_prime: u32,
        r: u32,
        r_prime: u32,
        dim_u_minus: usize,
        d_ma: usize,
        paper_bound: u64,
        derived_bound_su: Option<u64>,
        paper_formula_match: bool,
        convex_degenerate: bool,
    },
    Sp {
        family: &'static str,
        n: u32,
        p: u32,
        q: u32,
        dim_u_minus: usize,
        d_ma: usize,
        paper_bound: u64,
        derived_bound_su: Option<u64>,
        paper_formula_match: bool,
        convex_degenerate: bool,
    },
}

fn sweep_row(report: &ConcavityReport) -> SweepRow {
    match report.spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => SweepRow::Su {
            family: "su",
            p,
            p_prime,
            r,
            r_prime,
            dim_u_minus: report.dim_u_minus,
            d_ma: report.d_ma,
            paper_bound: report.paper_bound,
            derived_bound_su: report.derived_bound_su,
            paper_formula_match: report.paper_formula_match,
            convex_degenerate: report.convex_degenerate,
        },
        DomainSpec::Sp { n, p, q } => SweepRow::Sp {
            family: "sp",
            n,
            p,
            q,
            dim_u_minus: report.dim_u_minus,
            d_ma: report.d_ma,
            paper_bound: report.paper_bound,
            derived_bound_su: report.derived_bound_su,
            paper_formula_match: report.paper_formula_match,
            convex_degenerate: report.convex_degenerate,
        },
    }
}

pub fn render_sweep(reports: &[ConcavityReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let rows: Vec<SweepRow> = reports.iter().map(sweep_row).collect();
            pretty_json(&rows)
        }
        OutputFormat::Csv | OutputFormat::Md => {
            let mut header: Vec<&str> = Vec::new();
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|report| {
                    let cols = scalar_columns(report);
                    if header.is_empty() {
                        header = cols.iter().map(|(h, _)| *h).collect();
                    }
                    cols.into_iter().map(|(_, v)| v).collect()
                })
                .collect();
            match format {
                OutputFormat::Csv => csv_table(&header, &rows),
                _ => md_table(&header, &rows),
            }
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum MismatchDoc {
    Su {
        family: &'static str,
        p: u32,
        p_prime: u32,
        r: u32,
        r_prime: u32,
        d_ma: usize,
        paper_bound: u64,
    },
    Sp {
        family: &'static str,
        n: u32,
        p: u32,
        q: u32,
        d_ma: usize,
        paper_bound: u64,
    },
}

#[derive(Serialize)]
struct VerifyDoc {
    instances_checked: usize,
    membership_mismatches: usize,
    rank_mismatches: usize,
    theorem_main_violations: usize,
    maximum_prop_violations: usize,
    transversality_failures: usize,
    paper_formula_mismatches: Vec<MismatchDoc>,
}

pub fn render_verify(outcome: &VerifyOutcome) -> String {
    let mismatch_doc = |m: &FormulaMismatch| match m.spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => MismatchDoc::Su {
            family: "su",
            p,
            p_prime,
            r,
            r_prime,
            d_ma: m.d_ma,
            paper_bound: m.paper_bound,
        },
        DomainSpec::Sp { n, p, q } => MismatchDoc::Sp {
            family: "sp",
            n,
            p,
            q,
            d_ma: m.d_ma,
            paper_bound: m.paper_bound,
        },
    };
    pretty_json(&VerifyDoc {
        instances_checked: outcome.instances_checked,
        membership_mismatches: outcome.membership_mismatches,
        rank_mismatches: outcome.rank_mismatches,
        theorem_main_violations: outcome.theorem_main_violations,
        maximum_prop_violations: outcome.maximum_prop_violations,
        transversality_failures: outcome.transversality_failures,
        paper_formula_mismatches: outcome
            .paper_formula_mismatches
            .iter()
            .map(mismatch_doc)
            .collect(),
    })
}
