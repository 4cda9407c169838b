//! Named pass/fail checks with optional witnesses.

use serde::Serialize;

/// Where a failed identity was observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A basis multi-index of the domain at which both sides differ.
    Basis(Vec<usize>),
    /// Free-form description, e.g. a failing level or a solver outcome.
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Witness>) -> Self {
        Check { name: name.into(), passed: false, witness }
    }

    /// Passes iff `diff` is `None`; otherwise the difference is the witness.
    pub fn from_difference(name: impl Into<String>, diff: Option<Vec<usize>>) -> Self {
        match diff {
            None => Check::pass(name),
            Some(idx) => Check::fail(name, Some(Witness::Basis(idx))),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        Check { name: name.into(), passed: ok, witness: None }
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Appends another report with every check name prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{prefix}{}", c.name);
            c
        }));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the named check exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
