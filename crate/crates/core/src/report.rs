//! Check results shared by every verification suite.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Level at which an identity was compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    /// Exact equality of operators or rational functions.
    #[serde(rename = "plain")]
    Plain,
    /// Equality after right multiplication by the idempotent.
    #[serde(rename = "e-sided")]
    ESided,
    /// Neither level holds.
    #[serde(rename = "none")]
    Neither,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Plain => "plain",
            Level::ESided => "e-sided",
            Level::Neither => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub level: Level,
    pub pass: bool,
    /// Number of terms left in `lhs - rhs` at the reported level; zero for a
    /// holding identity.
    pub lhs_minus_rhs_term_count: usize,
    pub millis: u128,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, level: Level, pass: bool, residual_terms: usize) -> Check {
        Check { id: id.into(), level, pass, lhs_minus_rhs_term_count: residual_terms, millis: 0, detail: String::new() }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = detail.into();
        self
    }

    /// Runs `f` and records its wall time in the returned check.
    pub fn timed(f: impl FnOnce() -> Check) -> Check {
        let start = Instant::now();
        let mut c = f();
        c.millis = start.elapsed().as_millis();
        c
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
}

impl Report {
    pub fn new(mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report { checks }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Sets every timing to zero so that repeated runs serialize identically.
    pub fn without_timing(mut self) -> Report {
        for c in &mut self.checks {
            c.millis = 0;
        }
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "checks": self.checks,
            "summary": Summary { total: self.total(), passed: self.passed() },
        })
    }

    pub fn render_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<4}  {:<7}  {:>8}  {:>6}  detail", "id", "pass", "level", "residual", "ms");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:<4}  {:<7}  {:>8}  {:>6}  {}",
                c.id,
                if c.pass { "ok" } else { "FAIL" },
                c.level.as_str(),
                c.lhs_minus_rhs_term_count,
                c.millis,
                c.detail
            );
        }
        let _ = writeln!(out, "{} of {} checks passed", self.passed(), self.total());
        out
    }
}
