use serde::Serialize;

/// Outcome of checking one claim over a finite range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub witnesses: usize,
    pub pass: bool,
    /// First failing instance, if any.
    pub counterexample: Option<String>,
    /// Free-form remarks, e.g. degenerate parameter cases.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, range: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            range: range.into(),
            witnesses: 0,
            pass: true,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    /// Records one checked instance. Only the first failure is kept.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.witnesses += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(describe());
        }
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }
}
