//! Reports produced by the command-line verbs and the verification suites,
//! rendered as plain text or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::report::{AxiomReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Sampled,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub items: Vec<Item>,
}

impl Section {
    pub fn push(
        &mut self,
        label: impl Into<String>,
        status: Status,
        detail: Option<String>,
    ) -> &mut Self {
        self.items.push(Item {
            label: label.into(),
            status,
            detail,
        });
        self
    }

    pub fn check(
        &mut self,
        label: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
    ) -> &mut Self {
        let d: String = detail.into();
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(label, status, (!d.is_empty()).then_some(d))
    }

    pub fn info(&mut self, label: impl Into<String>, text: impl Into<String>) -> &mut Self {
        self.push(label, Status::Info, Some(text.into()))
    }

    pub fn axiom(&mut self, r: &AxiomReport) -> &mut Self {
        self.axiom_labelled(r.axiom.to_string(), r)
    }

    pub fn axiom_labelled(&mut self, label: impl Into<String>, r: &AxiomReport) -> &mut Self {
        match &r.verdict {
            Verdict::Pass => self.push(label, Status::Pass, None),
            Verdict::SampledPass { samples } => {
                self.push(label, Status::Sampled, Some(format!("{samples} samples")))
            }
            Verdict::Fail { counterexample } => {
                let d = counterexample
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                self.push(
                    label,
                    Status::Fail,
                    (!d.is_empty()).then(|| format!("at {d}")),
                )
            }
        }
    }

    pub fn axioms(&mut self, rs: &[AxiomReport]) -> &mut Self {
        for r in rs {
            self.axiom(r);
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub params: Vec<(String, String)>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            params: Vec::new(),
            sections: Vec::new(),
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn section(&mut self, name: impl Into<String>) -> &mut Section {
        self.sections.push(Section {
            name: name.into(),
            items: Vec::new(),
        });
        self.sections.last_mut().expect("just pushed")
    }

    pub fn extend(&mut self, other: Report) {
        self.sections.extend(other.sections);
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn failures(&self) -> usize {
        self.sections
            .iter()
            .flat_map(|s| &s.items)
            .filter(|i| i.status == Status::Fail)
            .count()
    }

    pub fn checks(&self) -> usize {
        self.sections
            .iter()
            .flat_map(|s| &s.items)
            .filter(|i| i.status != Status::Info)
            .count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.title);
        for (k, v) in &self.params {
            let _ = writeln!(out, "{k}: {v}");
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n== {} ==", s.name);
            for i in &s.items {
                let tag = match i.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Sampled => "sampled",
                    Status::Info => "info",
                };
                match &i.detail {
                    Some(d) => {
                        let _ = writeln!(out, "[{tag}] {}: {d}", i.label);
                    }
                    None => {
                        let _ = writeln!(out, "[{tag}] {}", i.label);
                    }
                }
            }
        }
        let _ = writeln!(
            out,
            "\nsummary: {} checks, {} failed",
            self.checks(),
            self.failures()
        );
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{CheckId, Witness};

    #[test]
    fn text_layout() {
        let mut r = Report::new("demo");
        r.param("seed", 7);
        r.section("axioms")
            .axiom(&AxiomReport::new(CheckId::C1, Verdict::Pass))
            .axiom(&AxiomReport::new(
                CheckId::C5,
                Verdict::fail([("a", Witness::Note("x".into()))]),
            ))
            .info("note", "hello");
        let t = r.to_text();
        assert!(t.contains("seed: 7\n"));
        assert!(t.contains("[pass] C1\n"));
        assert!(t.contains("[FAIL] C5: at a=x\n"));
        assert!(t.ends_with("summary: 2 checks, 1 failed\n"));
        assert!(!r.passed());
        assert!(r.to_json().contains("\"status\": \"fail\""));
    }
}
