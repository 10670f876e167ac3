//! Per-axiom verdicts with re-checkable counterexamples.

use std::fmt;

use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: u32 = 1;

/// How thoroughly the quantifiers were discharged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every tuple of a finite carrier was checked.
    Exhaustive,
    /// Only tuples drawn from a finite window of an infinite carrier.
    Bounded,
}

impl Mode {
    pub fn label(&self) -> &'static str {
        match self {
            Mode::Exhaustive => "proof by exhaustion",
            Mode::Bounded => "bounded verification",
        }
    }
}

/// Parameters of the window a bounded check ran on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    /// Bound on every value coordinate.
    pub bound: i64,
    /// Bound on rational numerators and denominators, when relevant.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coeff_bound: Option<i64>,
    /// Number of carrier elements in the window.
    pub elements: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub holds: bool,
    /// Number of tuples examined.
    pub checked: u64,
    /// Elements of a failing tuple, in the order the axiom quantifies them.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
}

impl AxiomVerdict {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomVerdict { axiom: axiom.into(), holds: true, checked: 0, witness: None }
    }

    /// Records one instance; the first failure is kept as the witness.
    pub fn record<W>(&mut self, ok: bool, witness: W)
    where
        W: FnOnce() -> Vec<String>,
    {
        self.checked += 1;
        if !ok && self.holds {
            self.holds = false;
            self.witness = Some(witness());
        }
    }

    pub fn failed(&self) -> bool {
        !self.holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub report_version: u32,
    pub subject: String,
    pub mode: Mode,
    pub mode_label: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<Window>,
    pub verdicts: Vec<AxiomVerdict>,
}

impl ValidationReport {
    pub fn exhaustive(subject: impl Into<String>) -> Self {
        Self::with_mode(subject, Mode::Exhaustive, None)
    }

    pub fn bounded(subject: impl Into<String>, window: Window) -> Self {
        Self::with_mode(subject, Mode::Bounded, Some(window))
    }

    fn with_mode(subject: impl Into<String>, mode: Mode, window: Option<Window>) -> Self {
        ValidationReport {
            report_version: REPORT_VERSION,
            subject: subject.into(),
            mode_label: mode.label().to_string(),
            mode,
            window,
            verdicts: Vec::new(),
        }
    }

    pub fn push(&mut self, verdict: AxiomVerdict) {
        self.verdicts.push(verdict);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    /// Verdict for `axiom`; panics if the axiom was not checked.
    pub fn holds(&self, axiom: &str) -> bool {
        self.get(axiom).unwrap_or_else(|| panic!("axiom {axiom} not in report")).holds
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    /// Appends the verdicts of `other`, keeping this report's header.
    pub fn extend(&mut self, other: ValidationReport) {
        self.verdicts.extend(other.verdicts);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({})", self.subject, self.mode_label)?;
        if let Some(w) = &self.window {
            match w.coeff_bound {
                Some(c) => writeln!(f, "window: bound {}, coefficient bound {}, {} elements", w.bound, c, w.elements)?,
                None => writeln!(f, "window: bound {}, {} elements", w.bound, w.elements)?,
            }
        }
        let width = self.verdicts.iter().map(|v| v.axiom.chars().count()).max().unwrap_or(0).max(8);
        for v in &self.verdicts {
            let status = if v.holds { "pass" } else { "FAIL" };
            write!(f, "  {:<width$} {:<5} {:>10} checked", v.axiom, status, v.checked)?;
            if let Some(w) = &v.witness {
                write!(f, "  witness ({})", w.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
