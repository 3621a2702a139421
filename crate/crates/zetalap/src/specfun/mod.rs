//! Classical special-function kernels: Bernoulli numbers, log-gamma,
//! polygamma orders 0–2, and the Riemann zeta function with derivatives up
//! to order three, all for complex arguments.
//!
//! Everything here is a pure function; precision is governed by
//! [`PrecisionConfig`], whose defaults keep relative error near the
//! binary64 floor for |Im s| up to the documented ceiling of 200.

mod bernoulli;
mod gamma;
mod zeta;

pub use bernoulli::bernoulli;
pub(crate) use bernoulli::bernoulli_even;
pub(crate) use gamma::polygamma_any;
pub use gamma::{log_gamma, log_gamma_with, polygamma, polygamma_with};
pub(crate) use zeta::zeta_em_jet;
pub use zeta::{zeta, zeta_eta, zeta_jet, zeta_jet_with_err};

use crate::{Error, Result};

/// Tuning knobs for the Euler–Maclaurin and asymptotic kernels.
///
/// `euler_maclaurin_terms` is the floor on the cut-off N; the effective N
/// grows with |Im s| (see [`PrecisionConfig::term_count`]).
#[derive(Clone, Debug)]
pub struct PrecisionConfig {
    /// Minimum number of direct summation terms N.
    pub euler_maclaurin_terms: usize,
    /// Number of Bernoulli tail corrections M.
    pub tail_terms: usize,
    /// Minimum |z| before the polygamma/log-gamma asymptotic series is used.
    pub polygamma_shift_threshold: f64,
    /// Requested relative error (binary64 floor is 1e-13).
    pub target_rel_error: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            euler_maclaurin_terms: 24,
            tail_terms: 12,
            polygamma_shift_threshold: 12.0,
            target_rel_error: 1e-12,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tail_terms > 30 {
            return Err(Error::Config(
                "tail_terms must be <= 30 (Bernoulli table bound)".into(),
            ));
        }
        if self.euler_maclaurin_terms < 2 * self.tail_terms {
            return Err(Error::Config(
                "euler_maclaurin_terms must be at least twice tail_terms".into(),
            ));
        }
        if self.target_rel_error < 1e-13 {
            return Err(Error::Config(
                "target_rel_error below the binary64 floor 1e-13".into(),
            ));
        }
        Ok(())
    }

    /// Effective summation cut-off for a given |Im s|.
    pub fn term_count(&self, im_abs: f64) -> usize {
        self.euler_maclaurin_terms
            .max((1.3 * im_abs).ceil() as usize + 8)
    }
}
