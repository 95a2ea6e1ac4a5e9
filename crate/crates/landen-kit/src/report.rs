//! Verification records shared by the identity harness and the CLI.

/// Outcome of numerically checking one identity or relation.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    /// Which identity or relation was checked.
    pub check: String,
    /// Order p the check ran at.
    pub p: u32,
    /// Parameter m the check ran at.
    pub m: f64,
    /// Cyclic shift index, where applicable.
    pub r: Option<u32>,
    /// Sample points that were evaluated.
    pub samples: Vec<f64>,
    /// Sample points skipped for pole proximity.
    pub skipped: usize,
    /// max |LHS - RHS| over the evaluated samples.
    pub max_residual: f64,
    /// Pass threshold the residual was compared against.
    pub threshold: f64,
    /// Whether the check passed.
    pub passed: bool,
    /// Free-form annotation (e.g. which of two printed readings validated).
    pub note: Option<String>,
}

impl ResidualReport {
    pub fn new(check: impl Into<String>, p: u32, m: f64, threshold: f64) -> Self {
        Self {
            check: check.into(),
            p,
            m,
            r: None,
            samples: Vec::new(),
            skipped: 0,
            max_residual: 0.0,
            threshold,
            passed: true,
            note: None,
        }
    }

    /// Record a residual observed at sample point `x`.
    pub fn record(&mut self, x: f64, residual: f64) {
        self.samples.push(x);
        if residual > self.max_residual {
            self.max_residual = residual;
        }
        self.passed = self.max_residual < self.threshold;
    }

    /// Record a pole-proximity skip.
    pub fn record_skip(&mut self) {
        self.skipped += 1;
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_worst_residual_and_verdict() {
        let mut rep = ResidualReport::new("demo", 3, 0.5, 1e-9);
        rep.record(0.1, 1e-12);
        rep.record(0.2, 3e-11);
        assert!(rep.passed);
        assert_eq!(rep.max_residual, 3e-11);
        rep.record(0.3, 2e-9);
        assert!(!rep.passed);
        assert_eq!(rep.samples.len(), 3);
    }
}
