//! Structured pass/fail reports for the verification checks.
//!
//! A report names a check and collects per-case records. Each case has
//! a deterministic identifier, so aggregation is order-independent:
//! both renderings sort cases by id. A failing case always carries a
//! witness; an undetermined case can only come from isomorphism-search
//! exhaustion, never from a definitive computation.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

/// Outcome of a check or of one of its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Undetermined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undetermined => "undetermined",
        }
    }

    /// Combines two verdicts; failure dominates, then undetermined.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Undetermined, _) | (_, Verdict::Undetermined) => Verdict::Undetermined,
            _ => Verdict::Pass,
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One checked case: inputs by reference, verdict, ordered details,
/// and a witness when the case fails.
#[derive(Clone, Debug)]
pub struct CaseRecord {
    /// Deterministic identifier, unique within its report.
    pub id: String,
    /// Short description of the inputs.
    pub inputs: String,
    pub verdict: Verdict,
    /// Ordered key-value details such as per-degree dimensions.
    pub data: Vec<(String, String)>,
    /// Witness morphism or counterexample coordinates.
    pub witness: Option<String>,
}

impl CaseRecord {
    pub fn pass(id: impl Into<String>, inputs: impl Into<String>) -> Self {
        CaseRecord {
            id: id.into(),
            inputs: inputs.into(),
            verdict: Verdict::Pass,
            data: Vec::new(),
            witness: None,
        }
    }

    /// A failing case; the witness is mandatory.
    pub fn fail(
        id: impl Into<String>,
        inputs: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CaseRecord {
            id: id.into(),
            inputs: inputs.into(),
            verdict: Verdict::Fail,
            data: Vec::new(),
            witness: Some(witness.into()),
        }
    }

    pub fn undetermined(id: impl Into<String>, inputs: impl Into<String>) -> Self {
        CaseRecord {
            id: id.into(),
            inputs: inputs.into(),
            verdict: Verdict::Undetermined,
            data: Vec::new(),
            witness: None,
        }
    }

    /// Appends one detail entry.
    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.data.push((key.into(), value.into()));
        self
    }

    /// Attaches a witness to a non-failing case.
    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

/// A named check over a list of cases, with free-form notes.
///
/// An empty case list renders as a vacuous pass.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub cases: Vec<CaseRecord>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            cases: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, case: CaseRecord) {
        self.cases.push(case);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Aggregate verdict over all cases; vacuously a pass.
    pub fn verdict(&self) -> Verdict {
        self.cases
            .iter()
            .fold(Verdict::Pass, |acc, c| acc.and(c.verdict))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    fn sorted_cases(&self) -> Vec<&CaseRecord> {
        let mut cases: Vec<&CaseRecord> = self.cases.iter().collect();
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        cases
    }

    /// Plain-text summary: counts, notes, and details of every case
    /// that did not pass.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = self.verdict();
        let _ = writeln!(
            out,
            "check {}: {} ({} cases)",
            self.check,
            verdict,
            self.cases.len()
        );
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        for case in self.sorted_cases() {
            if case.verdict == Verdict::Pass {
                continue;
            }
            let _ = writeln!(out, "  [{}] {}: {}", case.verdict, case.id, case.inputs);
            for (key, value) in &case.data {
                let _ = writeln!(out, "      {key}: {value}");
            }
            if let Some(w) = &case.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
        out
    }

    /// Full machine-readable rendering with stable field names:
    /// check, verdict, cases (id, inputs, verdict, data as key/value
    /// pairs, witness), notes. Cases are sorted by id, so the output
    /// bytes do not depend on insertion order.
    pub fn render_structured(&self) -> String {
        let mut out = String::new();
        out.push_str("{\"check\":");
        json_string(&mut out, &self.check);
        out.push_str(",\"verdict\":");
        json_string(&mut out, self.verdict().as_str());
        out.push_str(",\"cases\":[");
        for (k, case) in self.sorted_cases().into_iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str("{\"id\":");
            json_string(&mut out, &case.id);
            out.push_str(",\"inputs\":");
            json_string(&mut out, &case.inputs);
            out.push_str(",\"verdict\":");
            json_string(&mut out, case.verdict.as_str());
            out.push_str(",\"data\":[");
            for (j, (key, value)) in case.data.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str("{\"key\":");
                json_string(&mut out, key);
                out.push_str(",\"value\":");
                json_string(&mut out, value);
                out.push('}');
            }
            out.push_str("],\"witness\":");
            match &case.witness {
                Some(w) => json_string(&mut out, w),
                None => out.push_str("null"),
            }
            out.push('}');
        }
        out.push_str("],\"notes\":[");
        for (k, note) in self.notes.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            json_string(&mut out, note);
        }
        out.push_str("]}");
        out
    }
}

impl core::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Writes s as a JSON string literal.
fn json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation_prefers_failure() {
        assert_eq!(Verdict::Pass.and(Verdict::Pass), Verdict::Pass);
        assert_eq!(Verdict::Pass.and(Verdict::Undetermined), Verdict::Undetermined);
        assert_eq!(Verdict::Undetermined.and(Verdict::Fail), Verdict::Fail);
        assert_eq!(Verdict::Fail.and(Verdict::Pass), Verdict::Fail);
    }

    #[test]
    fn empty_report_is_a_vacuous_pass() {
        let report = VerificationReport::new("nothing");
        assert_eq!(report.verdict(), Verdict::Pass);
        assert!(report.render_text().contains("pass (0 cases)"));
        assert_eq!(
            report.render_structured(),
            "{\"check\":\"nothing\",\"verdict\":\"pass\",\"cases\":[],\"notes\":[]}"
        );
    }

    #[test]
    fn structured_rendering_is_insertion_order_independent() {
        let mut a = VerificationReport::new("c");
        a.push(CaseRecord::pass("x", "first"));
        a.push(CaseRecord::fail("b", "second", "witness"));
        let mut b = VerificationReport::new("c");
        b.push(CaseRecord::fail("b", "second", "witness"));
        b.push(CaseRecord::pass("x", "first"));
        assert_eq!(a.render_structured(), b.render_structured());
        assert_eq!(a.verdict(), Verdict::Fail);
    }

    #[test]
    fn text_rendering_shows_failures_with_witnesses() {
        let mut report = VerificationReport::new("demo");
        report.push(CaseRecord::pass("ok-case", "fine"));
        report.push(
            CaseRecord::fail("bad-case", "broken pair", "degree -1: [2] vs []")
                .with("degree", "-1"),
        );
        report.note("one note");
        let text = report.render_text();
        assert!(text.contains("check demo: fail (2 cases)"));
        assert!(text.contains("note: one note"));
        assert!(!text.contains("ok-case"));
        assert!(text.contains("bad-case"));
        assert!(text.contains("witness: degree -1: [2] vs []"));
    }

    #[test]
    fn json_strings_escape_quotes_and_controls() {
        let mut out = String::new();
        json_string(&mut out, "a\"b\\c\nd\u{1}");
        assert_eq!(out, "\"a\\\"b\\\\c\\nd\\u0001\"");
    }
}
