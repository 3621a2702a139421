//! Adaptive Simpson quadrature with a Richardson error estimate.

use crate::{Error, Result};

/// Integrate `f` over [a, b] to the requested absolute tolerance. Returns
/// the value and an error estimate.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(b > a) {
        return Err(Error::Usage("integration bounds must satisfy a < b".into()));
    }
    let fa = f(a)?;
    let fb = f(b)?;
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = simpson(a, b, fa, fm, fb);
    let mut err_acc = 0.0;
    let v = recurse(&f, a, b, fa, fm, fb, whole, tol, 48, &mut err_acc)?;
    Ok((v, err_acc))
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    err_acc: &mut f64,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 {
        return Err(Error::NonConvergence(format!(
            "adaptive Simpson: depth exhausted on [{a}, {b}]"
        )));
    }
    if delta.abs() <= 15.0 * tol {
        *err_acc += delta.abs() / 15.0;
        return Ok(left + right + delta / 15.0);
    }
    let lv = recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_acc)?;
    let rv = recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_acc)?;
    Ok(lv + rv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        let (v, _) = adaptive_simpson(|x| Ok(x * x * x), 0.0, 2.0, 1e-12).unwrap();
        assert_relative_eq!(v, 4.0, epsilon = 1e-12);
    }

    #[test]
    fn sine_squared_integral() {
        let (v, e) = adaptive_simpson(|x| Ok((PI * x).sin().powi(2)), 0.0, 1.0, 1e-13).unwrap();
        assert!((v - 0.5).abs() <= 1e-12, "value {v}, est {e}");
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(adaptive_simpson(|_| Ok(0.0), 1.0, 0.0, 1e-6).is_err());
    }
}
