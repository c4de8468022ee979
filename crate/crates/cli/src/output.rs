//! Rendering of results as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use bredon_core::verify::Report;
use bredon_core::FinAbGroup;

const PERIODIC_NOTE: &str = "remaining groups by Bott periodicity";
const AMBIGUOUS_SUFFIX: &str = " (up to extension)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// `K0 = A, K1 = B` on one line.
    Inline,
    /// One `label = group` line per entry.
    Lines,
}

#[derive(Clone, Debug)]
pub struct Section {
    layout: Layout,
    entries: Vec<(String, FinAbGroup)>,
    periodic: bool,
    ambiguous: Vec<usize>,
}

impl Section {
    pub fn new(layout: Layout, entries: Vec<(String, FinAbGroup)>) -> Self {
        Section {
            layout,
            entries,
            periodic: false,
            ambiguous: Vec::new(),
        }
    }

    pub fn periodic(mut self) -> Self {
        self.periodic = true;
        self
    }

    /// Indices into the entries whose group is only known up to extension.
    pub fn ambiguous(mut self, degrees: Vec<usize>) -> Self {
        self.ambiguous = degrees;
        self
    }

    fn render(&self, out: &mut Vec<String>) {
        let entry = |i: usize, (label, g): &(String, FinAbGroup)| {
            let suffix = if self.ambiguous.contains(&i) { AMBIGUOUS_SUFFIX } else { "" };
            format!("{label} = {g}{suffix}")
        };
        match self.layout {
            Layout::Inline => out.push(
                self.entries
                    .iter()
                    .enumerate()
                    .map(|(i, e)| entry(i, e))
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
            Layout::Lines => out.extend(self.entries.iter().enumerate().map(|(i, e)| entry(i, e))),
        }
        if self.periodic {
            out.push(PERIODIC_NOTE.to_string());
        }
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    anchor: &'a str,
    passed: bool,
    detail: &'a str,
}

#[derive(Serialize)]
struct Json<'a> {
    command: &'a str,
    inputs: &'a BTreeMap<String, String>,
    labels: Vec<&'a str>,
    groups: Vec<String>,
    extension_ambiguous: bool,
    extension_degrees: Vec<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckJson<'a>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
}

/// Everything a subcommand reports.
pub struct Output {
    command: String,
    inputs: BTreeMap<String, String>,
    notes: Vec<String>,
    sections: Vec<Section>,
    report: Option<Report>,
}

impl Output {
    pub fn new(command: &str) -> Self {
        Output {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            notes: Vec::new(),
            sections: Vec::new(),
            report: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Display) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    /// A text-only line printed before the groups.
    pub fn note(mut self, line: String) -> Self {
        self.notes.push(line);
        self
    }

    pub fn add_note(&mut self, line: String) {
        self.notes.push(line);
    }

    pub fn with(mut self, s: Section) -> Self {
        self.sections.push(s);
        self
    }

    pub fn push(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn checks(mut self, report: &Report) -> Self {
        self.report = Some(report.clone());
        self
    }

    pub fn to_text(&self) -> String {
        let mut lines = self.notes.clone();
        for s in &self.sections {
            s.render(&mut lines);
        }
        if let Some(r) = &self.report {
            lines.push(r.to_string().trim_end().to_string());
        }
        lines.join("\n")
    }

    pub fn to_json(&self) -> String {
        let mut labels = Vec::new();
        let mut groups = Vec::new();
        let mut degrees = Vec::new();
        for s in &self.sections {
            for (i, (label, g)) in s.entries.iter().enumerate() {
                labels.push(label.as_str());
                groups.push(g.to_string());
                if s.ambiguous.contains(&i) {
                    degrees.push(label.as_str());
                }
            }
        }
        let json = Json {
            command: &self.command,
            inputs: &self.inputs,
            labels,
            groups,
            extension_ambiguous: !degrees.is_empty(),
            extension_degrees: degrees,
            checks: self.report.as_ref().map(|r| {
                r.checks
                    .iter()
                    .map(|c| CheckJson {
                        anchor: c.anchor,
                        passed: c.passed,
                        detail: &c.detail,
                    })
                    .collect()
            }),
            passed: self.report.as_ref().map(Report::all_passed),
        };
        serde_json::to_string_pretty(&json).expect("plain data serialises")
    }
}
