//! Log-gamma and polygamma for complex arguments.
//!
//! Both use the same strategy: shift the argument upward with the exact
//! recurrence until it is safely inside the Stirling region, then apply the
//! Bernoulli asymptotic series. Arguments with negative real part are
//! handled by the same upward recurrence, so no reflection formula is
//! needed anywhere.

use super::bernoulli_even;
use super::PrecisionConfig;
use crate::{c64, ComplexValue, Error, Result};

/// Terms of the Stirling/asymptotic series (B_2 .. B_20).
const ASYMP_TERMS: usize = 10;

fn is_nonpositive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal log-gamma, continuous on Re z > 0.
///
/// lnGamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum B_2k / (2k(2k-1) z^(2k-1)),
/// after shifting z upward until |z| clears the asymptotic threshold.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    log_gamma_with(z, &PrecisionConfig::default())
}

pub fn log_gamma_with(z: ComplexValue, cfg: &PrecisionConfig) -> Result<ComplexValue> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("log_gamma at pole z = {z}")));
    }
    let thr = cfg.polygamma_shift_threshold;
    let mut w = z;
    let mut shift = c64(0.0, 0.0);
    while !(w.re > 0.0 && w.norm() >= thr) {
        shift += w.ln();
        w += 1.0;
    }
    let ln_w = w.ln();
    let mut acc = (w - 0.5) * ln_w - w + 0.5 * (2.0 * std::f64::consts::PI).ln();
    let w2 = w * w;
    let mut wpow = w; // w^(2k-1)
    for k in 1..=ASYMP_TERMS {
        let tk = 2.0 * k as f64;
        acc += bernoulli_even(k) / (tk * (tk - 1.0)) / wpow;
        wpow *= w2;
    }
    Ok(acc - shift)
}

/// Polygamma of order 0, 1 or 2 at a complex argument.
///
/// Uses the recurrence psi_m(z) = psi_m(z+1) - (-1)^m m! / z^(m+1) to move
/// the argument into the asymptotic region, then the Bernoulli series.
pub fn polygamma(order: u32, z: ComplexValue) -> Result<ComplexValue> {
    polygamma_with(order, z, &PrecisionConfig::default())
}

pub fn polygamma_with(order: u32, z: ComplexValue, cfg: &PrecisionConfig) -> Result<ComplexValue> {
    if order > 2 {
        return Err(Error::Domain(format!(
            "polygamma order must be 0, 1 or 2, got {order}"
        )));
    }
    polygamma_any(order as usize, z, cfg)
}

/// Polygamma for any order up to 3. Order 3 backs the fourth-derivative
/// chain of ln Z and is not part of the public surface.
pub(crate) fn polygamma_any(
    m: usize,
    z: ComplexValue,
    cfg: &PrecisionConfig,
) -> Result<ComplexValue> {
    debug_assert!(m <= 3);
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("polygamma at pole z = {z}")));
    }
    // psi_m(z) = psi_m(z+1) + s_m / z^(m+1) with s_m = (-1)^(m+1) m!.
    let s_m = [-1.0, 1.0, -2.0, 6.0][m];
    let thr = cfg.polygamma_shift_threshold;
    let mut w = z;
    let mut acc = c64(0.0, 0.0);
    while !(w.re > 0.0 && w.norm() >= thr) {
        acc += s_m / w.powu(m as u32 + 1);
        w += 1.0;
    }
    Ok(acc + polygamma_asymptotic(m, w))
}

fn polygamma_asymptotic(m: usize, w: ComplexValue) -> ComplexValue {
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    if m == 0 {
        // psi(w) ~ ln w - 1/(2w) - sum B_2k / (2k w^2k)
        let mut acc = w.ln() - 0.5 * inv;
        let mut p = inv2;
        for k in 1..=ASYMP_TERMS {
            acc -= bernoulli_even(k) / (2.0 * k as f64) * p;
            p *= inv2;
        }
        return acc;
    }
    // psi_m(w) ~ (-1)^(m-1) [ (m-1)!/w^m + m!/(2 w^(m+1))
    //                          + sum B_2k (2k+m-1)!/(2k)! / w^(2k+m) ]
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let fact_m1 = [1.0, 1.0, 2.0][m - 1]; // (m-1)! for m = 1..3
    let fact_m = fact_m1 * m as f64;
    let wm = inv.powu(m as u32);
    let mut acc = fact_m1 * wm + 0.5 * fact_m * wm * inv;
    let mut p = wm * inv2;
    for k in 1..=ASYMP_TERMS {
        // (2k+m-1)!/(2k)! = (2k+1)(2k+2)...(2k+m-1)
        let mut ratio = 1.0;
        for j in 1..m {
            ratio *= (2 * k + j) as f64;
        }
        acc += bernoulli_even(k) * ratio * p;
        p *= inv2;
    }
    sign * acc
}
