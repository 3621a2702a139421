//! The critical-line chain: Riemann–Siegel theta, Hardy's Z, the continuous
//! branch of ln zeta(1/2 + it) behind S(t), the Bäcklund counting formula
//! N(t), the logarithmic derivative Q = Z'/Z with two derivatives, the
//! integrated log-derivative R(t), and contour residues of Q.
//!
//! Branch tracking: the argument of zeta(1/2 + it) is continued along the
//! two-segment path 2 -> 2 + it -> 1/2 + it. On the vertical leg Re zeta
//! stays positive (|zeta(2 + iu) - 1| <= zeta(2) - 1), so the principal
//! argument is already the continuous one; the horizontal leg is marched
//! with adaptive steps that keep each increment below pi/2. This matches
//! the classical normalisation: the tracked argument tends to -pi as
//! t -> 0+, so S(0+) = -1 and N(t) = theta(t)/pi + 1 + S(t) counts zeros
//! exactly.

use crate::jet::Jet;
use crate::specfun::{self, log_gamma, polygamma_any, PrecisionConfig};
use crate::{c64, ComplexValue, Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};

const I: ComplexValue = ComplexValue::new(0.0, 1.0);
const LN_PI: f64 = 1.1447298858494002;

/// Riemann–Siegel theta. Real-valued for real t.
pub fn theta(t: ComplexValue) -> Result<ComplexValue> {
    if t.im == 0.0 {
        return Ok(c64(theta_real(t.re)?, 0.0));
    }
    let zp = c64(0.25, 0.0) + 0.5 * I * t;
    let zm = c64(0.25, 0.0) - 0.5 * I * t;
    let lg = log_gamma(zp)? - log_gamma(zm)?;
    Ok(-0.5 * I * lg - 0.5 * LN_PI * t)
}

/// theta on the real line, computed so the result is exactly real.
pub fn theta_real(t: f64) -> Result<f64> {
    let lg = log_gamma(c64(0.25, 0.5 * t))?;
    Ok(lg.im - 0.5 * LN_PI * t)
}

/// Hardy Z: Z(t) = e^{i theta(t)} zeta(1/2 + it). Real for real t.
pub fn hardy_z(t: ComplexValue) -> Result<ComplexValue> {
    let th = theta(t)?;
    let z = specfun::zeta(c64(0.5, 0.0) + I * t)?;
    Ok((I * th).exp() * z)
}

/// Z on the real line as a real scalar (the imaginary part is discarded;
/// it is at rounding level by construction).
pub fn hardy_z_real(t: f64) -> Result<f64> {
    Ok(hardy_z(c64(t, 0.0))?.re)
}

/// Maps Z back to zeta: e^{-i theta(i/2 - is)} Z(i/2 - is) = zeta(s).
pub fn mobius_roundtrip(s: ComplexValue) -> Result<ComplexValue> {
    let w = c64(0.0, 0.5) - I * s;
    let th = theta(w)?;
    Ok((-I * th).exp() * hardy_z(w)?)
}

/// Branch-tracking state for the continuous argument of zeta(1/2 + it).
///
/// Single-writer: clone per thread for concurrent use. The cache stores
/// previously computed (t, arg) pairs so repeated queries are free.
#[derive(Clone, Debug)]
pub struct UnwindState {
    /// Anchor abscissa (t = 0).
    pub anchor_t: f64,
    /// Tracked argument at the anchor: -pi, the classical limit as t -> 0+.
    pub anchor_arg: f64,
    /// Initial step of the horizontal branch march.
    pub max_step: f64,
    cache: Vec<(f64, f64)>,
}

impl Default for UnwindState {
    fn default() -> Self {
        UnwindState::new()
    }
}

impl UnwindState {
    pub fn new() -> Self {
        UnwindState {
            anchor_t: 0.0,
            anchor_arg: -PI,
            max_step: 0.25,
            cache: Vec::new(),
        }
    }

    fn lookup(&self, t: f64) -> Option<f64> {
        self.cache.iter().find(|p| p.0 == t).map(|p| p.1)
    }

    fn store(&mut self, t: f64, arg: f64) {
        if self.cache.len() < 8192 {
            self.cache.push((t, arg));
        }
    }
}

/// Continuous argument of zeta(1/2 + it) for real t >= 0.
fn continuous_arg(t: f64, state: &mut UnwindState) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::Domain(format!(
            "argument tracking needs t >= 0, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(state.anchor_arg);
    }
    if let Some(arg) = state.lookup(t) {
        return Ok(arg);
    }
    // Vertical leg: principal value suffices since Re zeta(2 + iu) > 0.
    let top = specfun::zeta(c64(2.0, t))?;
    let mut arg = top.arg();
    // Horizontal leg 2 -> 1/2 at height t, unwrapping adaptively.
    let mut sigma = 2.0;
    let mut prev = top;
    let mut step = state.max_step.min(0.75);
    while sigma > 0.5 {
        let next = (sigma - step).max(0.5);
        let z = specfun::zeta(c64(next, t))?;
        if z.norm() == 0.0 {
            return Err(Error::ZeroAdjacent(t));
        }
        let dphi = (z / prev).arg();
        if dphi.abs() >= FRAC_PI_2 {
            step *= 0.5;
            if step < 1e-12 {
                return Err(Error::ZeroAdjacent(t));
            }
            continue;
        }
        arg += dphi;
        prev = z;
        sigma = next;
        step = (step * 1.6).min(state.max_step);
    }
    state.store(t, arg);
    Ok(arg)
}

/// ln zeta(1/2 + it) on the continuous branch: ln|Z(t)| + i * pi * S(t).
pub fn log_zeta_continuous(t: f64, state: &mut UnwindState) -> Result<ComplexValue> {
    let arg = continuous_arg(t, state)?;
    let z = specfun::zeta(c64(0.5, t))?;
    let m = z.norm();
    if m == 0.0 {
        return Err(Error::ZeroAdjacent(t));
    }
    Ok(c64(m.ln(), arg))
}

/// S(t): the continuously tracked argument of zeta(1/2 + it) over pi.
pub fn s_function(t: f64, state: &mut UnwindState) -> Result<f64> {
    Ok(continuous_arg(t, state)? / PI)
}

/// Bäcklund counting formula N(t) = theta(t)/pi + 1 + S(t); within 1e-6 of
/// an integer away from zero ordinates, and equal to the number of zeros
/// with ordinate below t.
pub fn backlund_n(t: f64, state: &mut UnwindState) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain("backlund_n needs t > 0".into()));
    }
    Ok(theta_real(t)? / PI + 1.0 + s_function(t, state)?)
}

/// R(t) = (ln zeta(1/2 + it) + i theta(t)) / pi on the continuous branch.
pub fn r_function(t: f64, state: &mut UnwindState) -> Result<ComplexValue> {
    let lz = log_zeta_continuous(t, state)?;
    Ok((lz + I * theta_real(t)?) / PI)
}

/// Derivatives of ln Z(t) up to order K-1, assembled from the zeta jet and
/// the digamma chain of the gamma factor.
pub(crate) fn ln_z_jet<const K: usize>(t: ComplexValue) -> Result<Jet<K>> {
    let cfg = PrecisionConfig::default();
    let s = c64(0.5, 0.0) + I * t;
    let zj = specfun::zeta_em_jet::<K>(s, &cfg)?;
    // Convert d/ds to d/dt (ds/dt = i), then take the jet logarithm.
    let mut f = Jet::<K>::zero();
    for k in 0..K {
        f.d[k] = I.powu(k as u32) * zj.d[k];
    }
    if f.d[0].norm() == 0.0 {
        return Err(Error::ZeroAdjacent(t.re));
    }
    let ln_zeta = f.ln();

    let zp = c64(0.25, 0.0) + 0.5 * I * t;
    let zm = c64(0.25, 0.0) - 0.5 * I * t;
    let mut gp = Jet::<K>::zero();
    let mut gm = Jet::<K>::zero();
    gp.d[0] = log_gamma(zp)?;
    gm.d[0] = log_gamma(zm)?;
    let half_i = 0.5 * I;
    for k in 1..K {
        gp.d[k] = half_i.powu(k as u32) * polygamma_any(k - 1, zp, &cfg)?;
        gm.d[k] = (-half_i).powu(k as u32) * polygamma_any(k - 1, zm, &cfg)?;
    }
    // i theta = (lnGamma(z+) - lnGamma(z-))/2 - i ln(pi) t / 2.
    let mut itheta = (gp - gm).scale(c64(0.5, 0.0));
    itheta.d[0] -= 0.5 * I * LN_PI * t;
    if K > 1 {
        itheta.d[1] -= 0.5 * I * LN_PI;
    }
    Ok(ln_zeta + itheta)
}

/// Q(t) = d/dt ln Z(t) with two t-derivatives.
#[derive(Clone, Copy, Debug)]
pub struct QJet {
    pub q: ComplexValue,
    pub q_dot: ComplexValue,
    pub q_ddot: ComplexValue,
}

/// Logarithmic derivative of Z with its first two derivatives, from exact
/// differentiation of the zeta and digamma chains.
pub fn q_jet(t: ComplexValue) -> Result<QJet> {
    let lz = ln_z_jet::<4>(t)?;
    Ok(QJet {
        q: lz.d[1],
        q_dot: lz.d[2],
        q_ddot: lz.d[3],
    })
}

/// Q value only (used on residue contours).
fn q_value(t: ComplexValue) -> Result<ComplexValue> {
    let cfg = PrecisionConfig::default();
    let s = c64(0.5, 0.0) + I * t;
    let zj = specfun::zeta_em_jet::<2>(s, &cfg)?;
    if zj.d[0].norm() == 0.0 {
        return Err(Error::ZeroAdjacent(t.re));
    }
    let zp = c64(0.25, 0.0) + 0.5 * I * t;
    let zm = c64(0.25, 0.0) - 0.5 * I * t;
    let psi_sum = polygamma_any(0, zp, &cfg)? + polygamma_any(0, zm, &cfg)?;
    Ok(I * (zj.d[1] / zj.d[0] + 0.25 * (psi_sum - 2.0 * c64(LN_PI, 0.0))))
}

/// Contour residue of Q at sign * (i/2)(4n - 3) with the default circle
/// (radius 0.3, 256 trapezoid nodes).
pub fn q_residue(n: u32, sign: i32) -> Result<ComplexValue> {
    q_residue_with(n, sign, 0.3, 256)
}

/// Residue with explicit contour parameters.
pub fn q_residue_with(n: u32, sign: i32, radius: f64, nodes: usize) -> Result<ComplexValue> {
    if n == 0 || n > 3 {
        return Err(Error::Domain(format!(
            "q_residue: n must be in 1..=3, got {n}"
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Domain("q_residue: sign must be +1 or -1".into()));
    }
    // Neighbouring singularities sit 2 apart on the imaginary axis; a
    // radius near or above that spacing would enclose more than one.
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::Config(format!(
            "q_residue: contour radius {radius} reaches a neighbouring singularity"
        )));
    }
    if nodes < 16 {
        return Err(Error::Config(
            "q_residue: need at least 16 contour nodes".into(),
        ));
    }
    let center = c64(0.0, sign as f64 * (4.0 * n as f64 - 3.0) / 2.0);
    let mut acc = c64(0.0, 0.0);
    for j in 0..nodes {
        let phi = 2.0 * PI * j as f64 / nodes as f64;
        let e = c64(phi.cos(), phi.sin());
        acc += q_value(center + radius * e)? * e;
    }
    Ok(acc * radius / nodes as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn theta_vanishes_at_origin() {
        assert!(theta_real(0.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn theta_first_gram_point() {
        // Root of theta near the classical first Gram point.
        let g = 17.8455995405;
        assert!(theta_real(g).unwrap().abs() < 1e-8);
        let mut lo = 17.0;
        let mut hi = 19.0;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if theta_real(lo).unwrap() * theta_real(mid).unwrap() <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert_relative_eq!(0.5 * (lo + hi), g, epsilon = 1e-8);
    }

    #[test]
    fn theta_matches_asymptotic_expansion() {
        // The three-term form is good to its first omitted term 1/(48 t);
        // adding that term pins theta to well below 1e-7.
        let t: f64 = 100.0;
        let asym = 0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0;
        assert!((theta_real(t).unwrap() - asym).abs() < 3e-4);
        let asym2 = asym + 1.0 / (48.0 * t);
        assert!((theta_real(t).unwrap() - asym2).abs() < 1e-7);
    }

    #[test]
    fn z_at_origin_is_zeta_half() {
        let z = hardy_z(c64(0.0, 0.0)).unwrap();
        assert_relative_eq!(z.re, -1.4603545088095868, max_relative = 1e-11);
        assert!(z.im.abs() < 1e-12);
    }

    #[test]
    fn z_is_even_and_nearly_real() {
        for &t in &[3.7, 11.2, 29.5] {
            let a = hardy_z(c64(t, 0.0)).unwrap();
            let b = hardy_z(c64(-t, 0.0)).unwrap();
            assert_relative_eq!(a.re, b.re, max_relative = 1e-10);
            assert!(a.im.abs() <= 1e-10 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn z_changes_sign_once_in_first_window() {
        let mut changes = 0;
        let mut prev = hardy_z_real(14.0).unwrap();
        let mut t = 14.0;
        while t < 14.2 {
            t += 0.005;
            let cur = hardy_z_real(t).unwrap();
            if prev.signum() != cur.signum() {
                changes += 1;
            }
            prev = cur;
        }
        assert_eq!(changes, 1);
    }

    #[test]
    fn s_anchor_and_gram_value() {
        let mut st = UnwindState::new();
        // Classical anchor: S -> -1 as t -> 0+.
        assert_relative_eq!(s_function(0.0, &mut st).unwrap(), -1.0, epsilon = 1e-12);
        let s_small = s_function(1e-4, &mut st).unwrap();
        assert_relative_eq!(s_small, -1.0, epsilon = 1e-3);
        // At the first Gram point, N = 1 and theta = 0, so S = 0.
        let s_gram = s_function(17.8455995405, &mut st).unwrap();
        assert!(s_gram.abs() < 1e-6, "S(g0) = {s_gram}");
    }

    #[test]
    fn s_is_bounded_and_jumps_at_zeros() {
        let mut st = UnwindState::new();
        let mut t = 0.25;
        while t <= 60.0 {
            let s = s_function(t, &mut st).unwrap();
            assert!(s.abs() < 2.0, "S({t}) = {s}");
            t += 0.25;
        }
        // Jump of +1 across the first zero.
        let before = s_function(14.10, &mut st).unwrap();
        let after = s_function(14.17, &mut st).unwrap();
        assert!(
            (after - before - 1.0).abs() < 0.05,
            "jump {}",
            after - before
        );
    }

    #[test]
    fn backlund_counts() {
        let mut st = UnwindState::new();
        assert_relative_eq!(backlund_n(20.0, &mut st).unwrap(), 1.0, epsilon = 1e-6);
        assert_relative_eq!(backlund_n(30.0, &mut st).unwrap(), 3.0, epsilon = 1e-6);
        assert_relative_eq!(backlund_n(100.0, &mut st).unwrap(), 29.0, epsilon = 1e-6);
    }

    #[test]
    fn log_zeta_modulus_at_origin() {
        let mut st = UnwindState::new();
        let lz = log_zeta_continuous(0.0, &mut st).unwrap();
        assert_relative_eq!(lz.re, 1.4603545088095868_f64.ln(), max_relative = 1e-11);
        assert_relative_eq!(lz.im, -PI, epsilon = 1e-12);
    }

    #[test]
    fn log_zeta_exponentiates_back() {
        let mut st = UnwindState::new();
        for t in 1..=50 {
            let t = t as f64;
            let lz = log_zeta_continuous(t, &mut st).unwrap();
            let direct = specfun::zeta(c64(0.5, t)).unwrap();
            let diff = (lz.exp() - direct).norm();
            assert!(
                diff <= 1e-9 * (1.0 + direct.norm()),
                "t = {t}, residual {diff}"
            );
        }
    }

    #[test]
    fn log_zeta_real_part_is_log_abs_z() {
        // ln zeta(1/2 + it) = ln|Z(t)| + i pi S(t) with a consistent branch.
        let mut st = UnwindState::new();
        let lz = log_zeta_continuous(10.0, &mut st).unwrap();
        let z_abs = hardy_z(c64(10.0, 0.0)).unwrap().norm();
        assert!((lz.re - z_abs.ln()).abs() <= 1e-10);
        let s = s_function(10.0, &mut st).unwrap();
        assert!((lz.im - PI * s).abs() <= 1e-12);
    }

    #[test]
    fn r_is_consistent_with_counting() {
        let mut st = UnwindState::new();
        let r = r_function(20.0, &mut st).unwrap();
        assert_relative_eq!(r.im + 1.0, 1.0, epsilon = 1e-6);
        let r0 = r_function(0.0, &mut st).unwrap();
        assert_relative_eq!(
            r0.re,
            1.4603545088095868_f64.ln() / PI,
            max_relative = 1e-10
        );
    }

    #[test]
    fn mobius_identity_points() {
        let cfg = PrecisionConfig::default();
        for &s in &[c64(2.0, 0.0), c64(0.5, 0.0), c64(3.0, 1.0)] {
            let round = mobius_roundtrip(s).unwrap();
            let direct = specfun::zeta_jet(s, &cfg).unwrap().d0();
            assert!(
                (round - direct).norm() <= 1e-9 * direct.norm().max(1e-3),
                "s = {s}: {round} vs {direct}"
            );
        }
    }

    #[test]
    fn q_dot_matches_finite_differences() {
        let h = 1e-4;
        let j = q_jet(c64(5.0, 0.0)).unwrap();
        let qp = q_jet(c64(5.0 + h, 0.0)).unwrap().q;
        let qm = q_jet(c64(5.0 - h, 0.0)).unwrap().q;
        let fd = (qp - qm) / (2.0 * h);
        assert!((j.q_dot - fd).norm() <= 1e-6 * j.q_dot.norm());
    }

    #[test]
    fn q_matches_log_z_slope() {
        // Q(10) against numerical differentiation of ln|Z| + i(arg) built
        // from the continuous-branch machinery.
        let mut st = UnwindState::new();
        let h = 1e-4;
        let t = 10.0;
        let f = |x: f64, st: &mut UnwindState| -> ComplexValue {
            log_zeta_continuous(x, st).unwrap() + I * theta_real(x).unwrap()
        };
        let fd = (f(t + h, &mut st) - f(t - h, &mut st)) / (2.0 * h);
        let q = q_jet(c64(t, 0.0)).unwrap().q;
        assert!((q - fd).norm() <= 1e-6 * q.norm().max(1.0), "{q} vs {fd}");
    }

    #[test]
    fn q_dot_is_real_on_the_line() {
        let mut t = 1.0;
        while t <= 40.0 {
            let near_zero = [
                14.134725, 21.022040, 25.010858, 30.424876, 32.935062, 37.586178,
            ]
            .iter()
            .any(|z: &f64| (t - z).abs() < 0.5);
            if !near_zero {
                let j = q_jet(c64(t, 0.0)).unwrap();
                let delta_r_im = (j.q_dot / PI).im;
                assert!(delta_r_im.abs() <= 1e-9, "Im dR({t}) = {delta_r_im}");
            }
            t += 0.5;
        }
    }
}
