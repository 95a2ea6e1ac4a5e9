//! The elliptic modulus parameter m = k^2 and derived quantities.

use crate::error::{Error, Result};

/// Elliptic modulus parameter m = k^2, restricted to [0, 1].
///
/// The complement 1 - m is stored alongside m so that evaluations near
/// m = 1 keep full precision: `complement()` swaps the two fields exactly
/// instead of recomputing 1 - m in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusParameter {
    m: f64,
    m_complement: f64,
}

impl ModulusParameter {
    /// Construct from m, rejecting non-finite values and values outside [0, 1].
    pub fn new(m: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::Domain(format!("modulus parameter must be finite, got {m}")));
        }
        if !(0.0..=1.0).contains(&m) {
            return Err(Error::Domain(format!("modulus parameter must lie in [0,1], got {m}")));
        }
        Ok(Self { m, m_complement: 1.0 - m })
    }

    /// Construct from a pair (m, 1 - m) that is already consistent.
    ///
    /// Used where the complement is known more accurately than `1.0 - m`
    /// (ascending maps that produce m close to 1).
    pub(crate) fn from_parts(m: f64, m_complement: f64) -> Result<Self> {
        if !m.is_finite() || !m_complement.is_finite() {
            return Err(Error::Domain("modulus parts must be finite".into()));
        }
        if !(0.0..=1.0).contains(&m) || !(0.0..=1.0).contains(&m_complement) {
            return Err(Error::Domain(format!(
                "modulus parts must lie in [0,1], got m={m}, m'={m_complement}"
            )));
        }
        if (m + m_complement - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "inconsistent modulus parts: m={m}, m'={m_complement}"
            )));
        }
        Ok(Self { m, m_complement })
    }

    /// The parameter m itself.
    pub fn m(&self) -> f64 {
        self.m
    }

    /// The modulus k = sqrt(m).
    pub fn k(&self) -> f64 {
        self.m.sqrt()
    }

    /// The complementary modulus k' = sqrt(1 - m).
    pub fn k_prime(&self) -> f64 {
        self.m_complement.sqrt()
    }

    /// The complementary parameter 1 - m.
    pub fn m_complement(&self) -> f64 {
        self.m_complement
    }

    /// The complementary parameter as a `ModulusParameter` (exact field swap).
    pub fn complement(&self) -> Self {
        Self { m: self.m_complement, m_complement: self.m }
    }
}
