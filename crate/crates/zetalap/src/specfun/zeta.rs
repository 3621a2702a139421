//! Riemann zeta via Euler–Maclaurin summation, evaluated in jet arithmetic
//! so that one pass yields the value together with up to four derivatives:
//!
//!   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//!           + sum_{k=1..M} B_2k/(2k)! (s)_{2k-1} N^(1-s-2k)
//!
//! with (s)_m the rising factorial. The cut-off N scales with |Im s|; the
//! formula analytically continues well left of the critical strip for the
//! default tail depth.
//!
//! `zeta_eta` is the independent alternating-series route (eta function with
//! convergence acceleration); it is the cross-check oracle, not a kernel.

// TODO: switch to a Riemann-Siegel expansion above t ~ 200 to lift the
// height ceiling of the direct Euler-Maclaurin policy.

use super::{bernoulli_even, PrecisionConfig};
use crate::jet::{Jet, Jet3};
use crate::{c64, ComplexValue, Error, Result};

const IM_CEILING: f64 = 200.0;

fn check_argument(s: ComplexValue) -> Result<()> {
    if (s - c64(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    if s.im.abs() > IM_CEILING {
        return Err(Error::Domain(format!(
            "zeta: |Im s| = {} exceeds the validity ceiling {IM_CEILING}",
            s.im.abs()
        )));
    }
    Ok(())
}

/// Euler–Maclaurin evaluation carrying K-1 derivatives. K = 1 degenerates
/// to a plain value computation.
pub(crate) fn zeta_em_jet<const K: usize>(
    s: ComplexValue,
    cfg: &PrecisionConfig,
) -> Result<Jet<K>> {
    check_argument(s)?;
    let n = cfg.term_count(s.im.abs());
    let sj = Jet::<K>::variable(s);

    // Direct sum over n < N; the n = 1 term is the constant 1.
    let mut sum = Jet::<K>::constant(c64(1.0, 0.0));
    for q in 2..n {
        sum += sj.scale_re(-(q as f64).ln()).exp();
    }

    let nf = n as f64;
    let npow = sj.scale_re(-nf.ln()).exp(); // N^-s as a jet
    let t_int = npow.scale_re(nf) / (sj - 1.0); // N^(1-s)/(s-1)
    let t_half = npow.scale_re(0.5);

    let mut tail = Jet::<K>::zero();
    let mut rising = sj; // (s)_1
    let mut fact = 2.0; // (2k)!
    let mut nshift = 1.0 / nf; // N^(1-2k)
    for k in 1..=cfg.tail_terms {
        if k > 1 {
            let a = 2.0 * k as f64 - 3.0;
            rising = rising * (sj + a) * (sj + a + 1.0);
            fact *= (2.0 * k as f64 - 1.0) * (2.0 * k as f64);
            nshift /= nf * nf;
        }
        let coeff = bernoulli_even(k) / fact * nshift;
        tail += (rising * npow).scale_re(coeff);
    }

    let out = sum + t_int + t_half + tail;
    if !out.is_finite() {
        return Err(Error::Range(format!("zeta jet overflow at s = {s}")));
    }
    Ok(out)
}

/// Magnitude of the first omitted Bernoulli correction, relative to the
/// result: a cheap truncation-error estimate.
fn tail_error_estimate(s: ComplexValue, cfg: &PrecisionConfig, value: ComplexValue) -> f64 {
    let n = cfg.term_count(s.im.abs()) as f64;
    let m = cfg.tail_terms;
    let k = m + 1;
    let mut rising: f64 = s.norm();
    for j in 1..(2 * k - 1) {
        rising *= (s + j as f64).norm();
    }
    let mut fact = 1.0;
    for j in 2..=(2 * k) {
        fact *= j as f64;
    }
    let term = bernoulli_even(k).abs() / fact * rising * n.powf(1.0 - s.re - 2.0 * k as f64);
    let scale = value.norm().max(f64::MIN_POSITIVE);
    (term / scale).max(f64::EPSILON)
}

/// zeta(s) and its first three derivatives.
pub fn zeta_jet(s: ComplexValue, cfg: &PrecisionConfig) -> Result<Jet3> {
    zeta_em_jet::<4>(s, cfg)
}

/// Like [`zeta_jet`], additionally returning the relative truncation-error
/// estimate of the underlying summation.
pub fn zeta_jet_with_err(s: ComplexValue, cfg: &PrecisionConfig) -> Result<(Jet3, f64)> {
    let jet = zeta_em_jet::<4>(s, cfg)?;
    let est = tail_error_estimate(s, cfg, jet.d0());
    Ok((jet, est))
}

/// Value-only zeta via the same kernel.
pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    Ok(zeta_em_jet::<1>(s, &PrecisionConfig::default())?.d[0])
}

/// zeta via the alternating (eta) series with Chebyshev convergence
/// acceleration: eta(s) = (1 - 2^(1-s)) zeta(s). Valid for Re s > 0; used
/// as the independent cross-check of the Euler–Maclaurin route.
pub fn zeta_eta(s: ComplexValue, terms: usize) -> Result<ComplexValue> {
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "zeta_eta requires Re s > 0, got {}",
            s.re
        )));
    }
    if (s - c64(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    let factor = 1.0 - c64(2.0, 0.0).powc(c64(1.0, 0.0) - s);
    if factor.norm() < 1e-8 {
        return Err(Error::Domain(format!(
            "zeta_eta: 1 - 2^(1-s) vanishes at s = {s}"
        )));
    }
    let eta = alternating_sum(terms, |k| (-s * ((k + 1) as f64).ln()).exp());
    Ok(eta / factor)
}

/// Accelerated sum of an alternating series sum_{k>=0} (-1)^k a_k with the
/// Chebyshev-weight scheme; error decays like (3 + sqrt 8)^-n for
/// well-behaved terms.
pub(crate) fn alternating_sum<F>(n: usize, a: F) -> ComplexValue
where
    F: Fn(usize) -> ComplexValue,
{
    let mut d = (3.0 + 8.0_f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut acc = c64(0.0, 0.0);
    for k in 0..n {
        c = b - c;
        acc += c * a(k);
        let kf = k as f64;
        let nf = n as f64;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    acc / d
}
