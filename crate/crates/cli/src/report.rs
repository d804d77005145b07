//! Run reports: one document per invocation, rendered as text or as a
//! machine-readable JSON value with a schema that is stable across commands.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

/// One named verification check; `name` states the claim being tested.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyDoc {
    pub betti: Vec<u64>,
    /// invariant factors > 1 per dimension, as decimal strings
    pub torsion: Vec<Vec<String>>,
}

/// One row of a bounds table; exact integers as decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsRow {
    pub n: u32,
    pub lower_product: String,
    pub lower_r: String,
    pub exact_count: Option<String>,
    pub upper_tree_identity: String,
    pub upper_cube_matching: String,
    /// `<`, `=`, or `>`: the tree-identity bound against the cube bound
    pub comparison: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facet_count: Option<usize>,
    /// original vertex ids by dense id, reported when the input was sparse
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_map: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundsRow>>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            params: BTreeMap::new(),
            f_vector: None,
            dim: None,
            pure: None,
            facet_count: None,
            vertex_map: None,
            homology: None,
            counts: None,
            bounds: None,
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Structured => {
                serde_json::to_string_pretty(self).expect("report serializes")
            }
            OutputFormat::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        if !self.params.is_empty() {
            let rendered: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k} = {v}"))
                .collect();
            line(format!("params: {}", rendered.join(", ")));
        }
        if let Some(f) = &self.f_vector {
            let joined: Vec<String> = f.iter().map(|x| x.to_string()).collect();
            let mut desc = format!("f = ({})", joined.join(", "));
            if let Some(d) = self.dim {
                desc.push_str(&format!(", dim {d}"));
            }
            if let Some(p) = self.pure {
                desc.push_str(if p { ", pure" } else { ", not pure" });
            }
            if let Some(fc) = self.facet_count {
                desc.push_str(&format!(", {fc} facets"));
            }
            line(desc);
        }
        if let Some(map) = &self.vertex_map {
            let rendered: Vec<String> = map
                .iter()
                .enumerate()
                .map(|(dense, orig)| format!("{dense}<-{orig}"))
                .collect();
            line(format!("vertex ids remapped: {}", rendered.join(" ")));
        }
        if let Some(h) = &self.homology {
            line("homology (reduced):".to_string());
            for (k, b) in h.betti.iter().enumerate() {
                let mut parts = Vec::new();
                match b {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    _ => parts.push(format!("Z^{b}")),
                }
                for t in &h.torsion[k] {
                    parts.push(format!("Z/{t}"));
                }
                let group = if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" (+) ")
                };
                line(format!("  H~_{k} = {group}"));
            }
        }
        if let Some(counts) = &self.counts {
            line("counts:".to_string());
            for (k, v) in counts {
                line(format!("  {k} = {v}"));
            }
        }
        if let Some(rows) = &self.bounds {
            line("bounds (per n):".to_string());
            for r in rows {
                line(format!(
                    "  n = {}: product {} < r {} <= f {} <= tree-identity {} {} cube-matching {}",
                    r.n,
                    r.lower_product,
                    r.lower_r,
                    r.exact_count.as_deref().unwrap_or("?"),
                    r.upper_tree_identity,
                    r.comparison,
                    r.upper_cube_matching,
                ));
            }
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            if c.details.is_empty() {
                line(format!("{}: {verdict}", c.name));
            } else {
                line(format!("{}: {verdict} ({})", c.name, c.details));
            }
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.passed).count();
            line(format!("checks passed: {passed}/{}", self.checks.len()));
        }
        line(format!("elapsed: {} ms", self.elapsed_ms));
        out
    }
}

pub fn check(checks: &mut Vec<Check>, name: impl Into<String>, passed: bool, details: impl Into<String>) {
    checks.push(Check {
        name: name.into(),
        passed,
        details: details.into(),
    });
}
