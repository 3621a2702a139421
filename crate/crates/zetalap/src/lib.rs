//! Numerical machinery for the Riemann zeta function on and around the
//! critical line.
//!
//! The crate is organised bottom-up:
//!
//! - [`jet`] — fixed-degree truncated Taylor (jet) arithmetic over complex
//!   scalars, the carrier for derivative chains.
//! - [`specfun`] — from-scratch kernels: Bernoulli numbers, log-gamma,
//!   polygamma, and the zeta function with derivatives via Euler–Maclaurin
//!   summation evaluated in jet arithmetic.
//! - [`hardy`] — the Riemann–Siegel theta function, Hardy's Z, the
//!   logarithmic derivative Q = Z'/Z with its derivative chain, the
//!   continuous-branch argument machinery behind S(t), the Bäcklund
//!   counting formula N(t), and the integrated log-derivative R(t).
//! - [`laplacian`] — the curvature functions G = -pi/Q', H = G', and the
//!   Möbius-transformed spectral functions nu and chi on the real axis,
//!   together with their shifted/rescaled families and closed-form limits.
//! - [`zeros`] — bracketed root location of H with minimum/maximum
//!   classification and a deterministic parallel sweep.
//! - [`verify`] — machine-checkable reproduction of the reference values
//!   (table rows, limits, integrals, residues, symmetries).
//!
//! All operations are pure functions of their inputs; the only stateful
//! object is [`hardy::UnwindState`], which caches branch-tracking
//! checkpoints and must not be shared across threads without cloning.

pub mod fd;
pub mod hardy;
pub mod jet;
pub mod laplacian;
pub mod quad;
pub mod specfun;
pub mod verify;
pub mod zeros;

/// Working real scalar. Algorithms are written against this alias (and
/// [`ComplexValue`]) so a wider scalar can be substituted in one place.
pub type Real = f64;

/// Complex scalar at working precision.
pub type ComplexValue = num_complex::Complex<Real>;

pub(crate) fn c64(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// Crate-wide error type. The CLI maps `Usage` to exit code 2 and every
/// other variant to exit code 1.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole encountered: {0}")]
    Pole(String),
    #[error("singularity: {0}")]
    Singularity(String),
    #[error("zero-adjacent evaluation near t = {0}")]
    ZeroAdjacent(f64),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI assigns to this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}
