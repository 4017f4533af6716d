use std::fmt::Write as _;

use serde::Serialize;

use super::{AggregateReport, StepRecord, VerificationReport};

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace('\n', " ")
}

fn step_row(out: &mut String, s: &StepRecord) {
    let counts = s.counts.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join(", ");
    let _ = writeln!(
        out,
        "| {} | {} | {} | {} | {} |",
        cell(&s.name),
        cell(&s.anchor),
        if s.passed { "pass" } else { "FAIL" },
        s.scalar.as_deref().unwrap_or(""),
        cell(&counts)
    );
}

fn scenario_section(out: &mut String, r: &VerificationReport) {
    let _ = writeln!(out, "## {} ({})\n", r.scenario, r.status);
    out.push_str("| step | anchor | result | scalar | counts |\n|---|---|---|---|---|\n");
    for s in &r.steps {
        step_row(out, s);
    }
    let enclosures: Vec<&String> = r.steps.iter().flat_map(|s| &s.enclosures).collect();
    if !enclosures.is_empty() {
        out.push_str("\nEnclosures:\n\n");
        for e in enclosures {
            let _ = writeln!(out, "- {e}");
        }
    }
    out.push('\n');
}

pub trait Markdown {
    fn markdown(&self) -> String;
}

impl Markdown for VerificationReport {
    fn markdown(&self) -> String {
        let mut out = format!("# biharm report: {}\n\nstatus: {}, version {}, seed {}\n\n", self.scenario, self.status, self.version, self.seed);
        scenario_section(&mut out, self);
        out
    }
}

impl Markdown for AggregateReport {
    fn markdown(&self) -> String {
        let mut out = format!("# biharm report\n\nstatus: {}, version {}, seed {}\n\n", self.status, self.version, self.seed);
        out.push_str("| scenario | status | failed steps |\n|---|---|---|\n");
        for r in &self.scenarios {
            let _ = writeln!(out, "| {} | {} | {} |", r.scenario, r.status, cell(&r.failures().join(", ")));
        }
        out.push('\n');
        for r in &self.scenarios {
            scenario_section(&mut out, r);
        }
        out
    }
}

pub fn to_markdown<T: Markdown>(report: &T) -> String {
    report.markdown()
}
