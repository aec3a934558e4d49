//! JSON and text rendering of reports.

use std::fmt::Write as _;

use idealkit::certify::{CertificateReport, ReportRecord};
use idealkit::Field;
use serde::Serialize;

use crate::lemmas::Bundle;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Serialize)]
struct BundleRecord {
    schema: u32,
    lemma: String,
    field: String,
    all_verified: bool,
    claims: Vec<ReportRecord>,
}

#[derive(Serialize)]
struct CommandRecord<'a> {
    schema: u32,
    command: &'a str,
    result: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    claims: Vec<ReportRecord>,
}

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("Fp({p})"),
    }
}

pub fn render_bundle(b: &Bundle, format: Format) -> String {
    match format {
        Format::Json => {
            let rec = BundleRecord {
                schema: SCHEMA,
                lemma: b.lemma.to_string(),
                field: field_name(b.field),
                all_verified: b.all_verified(),
                claims: b.reports.iter().map(CertificateReport::record).collect(),
            };
            serde_json::to_string_pretty(&rec).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = format!("{} over {}\n", b.lemma, field_name(b.field));
            for r in &b.reports {
                render_report_text(&mut out, r);
            }
            let verified = b.reports.iter().filter(|r| r.is_verified()).count();
            let _ = writeln!(out, "{verified}/{} claims verified", b.reports.len());
            out
        }
    }
}

fn render_report_text(out: &mut String, r: &CertificateReport) {
    let _ = writeln!(out, "[{}] {} ({}, {} ms)", r.status, r.claim, r.anchor, r.millis);
    if let Some(note) = &r.note {
        let _ = writeln!(out, "    note: {note}");
    }
}

/// Output of `run`: result lines plus any certificate reports.
#[derive(Clone, Debug, Default)]
pub struct CommandOutput {
    pub lines: Vec<String>,
    pub reports: Vec<CertificateReport>,
}

impl CommandOutput {
    pub fn lines(lines: Vec<String>) -> Self {
        CommandOutput {
            lines,
            reports: Vec::new(),
        }
    }

    pub fn report(r: CertificateReport) -> Self {
        CommandOutput {
            lines: vec![r.status.to_string()],
            reports: vec![r],
        }
    }

    pub fn success(&self) -> bool {
        self.reports.iter().all(CertificateReport::is_verified)
    }

    pub fn render(&self, command: &str, format: Format) -> String {
        match format {
            Format::Json => {
                let rec = CommandRecord {
                    schema: SCHEMA,
                    command,
                    result: self.lines.clone(),
                    claims: self.reports.iter().map(CertificateReport::record).collect(),
                };
                serde_json::to_string_pretty(&rec).expect("serializable") + "\n"
            }
            Format::Text => {
                let mut out = String::new();
                if self.reports.is_empty() {
                    for l in &self.lines {
                        let _ = writeln!(out, "{l}");
                    }
                }
                for r in &self.reports {
                    render_report_text(&mut out, r);
                    for c in &r.checks {
                        let _ = writeln!(out, "    {}", c.describe());
                    }
                }
                out
            }
        }
    }
}
