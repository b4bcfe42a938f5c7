use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::verify::{Verdict, VerificationReport};

/// Version tag of the JSON layout; bump on any field change.
pub const REPORT_SCHEMA: &str = "degenlab.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            _ => Err(format!("unknown report format `{s}` (text or json)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of(reports: &[VerificationReport]) -> Self {
        reports.iter().flat_map(|r| &r.checks).fold(Tally::default(), |mut t, c| {
            match c.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::Skipped => t.skipped += 1,
            }
            t
        })
    }
}

/// 0 iff no report carries a FAIL.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    i32::from(reports.iter().any(VerificationReport::has_failure))
}

/// Renders `reports`. JSON omits timings, so equal inputs give equal bytes.
pub fn emit_report(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                schema: &'static str,
                summary: Tally,
                reports: &'a [VerificationReport],
            }
            let doc = Doc { schema: REPORT_SCHEMA, summary: Tally::of(reports), reports };
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => text(reports),
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("    {l}\n")).collect()
}

fn text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let verdict = if r.has_failure() { Verdict::Fail } else { Verdict::Pass };
        let _ = writeln!(s, "== {}  [{}; {}]  {verdict}", r.fixture, r.field, r.order);
        if !r.initial_ideal.is_empty() {
            let _ = writeln!(s, "in(I) = ({})", r.initial_ideal.join(", "));
        }
        let name_w = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &r.checks {
            let _ = writeln!(s, "  {:<7} {:<name_w$}  {}", c.verdict.to_string(), c.name, c.reason);
        }
        for (title, table) in [("Betti S/I", &r.betti_ideal), ("Betti S/in(I)", &r.betti_initial)] {
            if let Some(t) = table {
                let _ = write!(s, "  {title}:\n{}", indent(&t.to_string()));
            }
        }
        for (title, table) in [("h^ij S/I", &r.lc_ideal), ("h^ij S/in(I)", &r.lc_initial)] {
            if let Some(t) = table {
                let _ = write!(s, "  {title}:\n{}", indent(&t.to_string()));
            }
        }
        if !r.timings.is_empty() {
            let parts: Vec<String> = r.timings.iter().map(|(k, d)| format!("{k} {d:.2?}")).collect();
            let _ = writeln!(s, "  time: {}", parts.join(", "));
        }
        s.push('\n');
    }
    let id_w = reports.iter().map(|r| r.fixture.len()).max().unwrap_or(0).max("fixture".len());
    let _ = writeln!(s, "{:<id_w$}  {:>4} {:>4} {:>4}  verdict", "fixture", "pass", "fail", "skip");
    for r in reports {
        let t = Tally::of(std::slice::from_ref(r));
        let v = if r.has_failure() { Verdict::Fail } else { Verdict::Pass };
        let _ = writeln!(s, "{:<id_w$}  {:>4} {:>4} {:>4}  {v}", r.fixture, t.pass, t.fail, t.skipped);
    }
    let t = Tally::of(reports);
    let _ = writeln!(s, "{} PASS, {} FAIL, {} SKIPPED", t.pass, t.fail, t.skipped);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Check;

    #[test]
    fn empty_list_passes() {
        assert_eq!(exit_code(&[]), 0);
        let t = emit_report(&[], ReportFormat::Text);
        assert!(t.starts_with("fixture"));
        let j: serde_json::Value = serde_json::from_str(&emit_report(&[], ReportFormat::Json)).unwrap();
        assert_eq!(j["schema"], REPORT_SCHEMA);
        assert_eq!(j["reports"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn one_fail_exits_one() {
        let mut r = VerificationReport::empty("x");
        r.push(Check::expect("a", true, ""));
        r.push(Check::expect("b", false, "broken"));
        assert_eq!(exit_code(std::slice::from_ref(&r)), 1);
        let j: serde_json::Value = serde_json::from_str(&emit_report(&[r], ReportFormat::Json)).unwrap();
        assert_eq!(j["summary"]["fail"], 1);
        assert_eq!(j["reports"][0]["checks"][1]["verdict"], "FAIL");
    }

    #[test]
    fn text_has_tables_and_json_is_stable() {
        use crate::groebner::Ideal;
        use crate::poly::{Field, PolyRing, TermOrder};
        let r = PolyRing::standard(4, Field::Rationals);
        let i = Ideal::parse(&r, &["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]).unwrap();
        let a = crate::harness::verify_degeneration("cubic", &i, &TermOrder::Lex);
        let b = crate::harness::verify_degeneration("cubic", &i, &TermOrder::Lex);
        let t = emit_report(std::slice::from_ref(&a), ReportFormat::Text);
        assert!(t.contains("Betti S/in(I)") && t.contains("h^ij S/I") && t.contains("total:"));
        assert_eq!(emit_report(&[a], ReportFormat::Json), emit_report(&[b], ReportFormat::Json));
    }
}
