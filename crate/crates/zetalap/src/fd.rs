//! Fourth-order central finite-difference stencils (with an optional
//! Richardson step). These are the independent oracles the derivative
//! chains are checked against, and the production route for the slope
//! limits of chi.

use crate::{ComplexValue, Result};

/// f'(x) by the 5-point fourth-order central stencil.
pub fn d1<F>(f: F, x: f64, h: f64) -> Result<ComplexValue>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    Ok((-f(x + 2.0 * h)? + 8.0 * f(x + h)? - 8.0 * f(x - h)? + f(x - 2.0 * h)?) / (12.0 * h))
}

/// f''(x) by the 5-point fourth-order central stencil.
pub fn d2<F>(f: F, x: f64, h: f64) -> Result<ComplexValue>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    Ok(
        (-f(x + 2.0 * h)? + 16.0 * f(x + h)? - 30.0 * f(x)? + 16.0 * f(x - h)? - f(x - 2.0 * h)?)
            / (12.0 * h * h),
    )
}

/// f'''(x) by the 7-point fourth-order central stencil.
pub fn d3<F>(f: F, x: f64, h: f64) -> Result<ComplexValue>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    Ok(
        (f(x - 3.0 * h)? / 8.0 - f(x - 2.0 * h)? + 13.0 / 8.0 * f(x - h)? - 13.0 / 8.0 * f(x + h)?
            + f(x + 2.0 * h)?
            - f(x + 3.0 * h)? / 8.0)
            / (h * h * h),
    )
}

/// First derivative with one Richardson extrapolation step on top of the
/// fourth-order stencil (effective order six).
pub fn d1_richardson<F>(f: F, x: f64, h: f64) -> Result<ComplexValue>
where
    F: Fn(f64) -> Result<ComplexValue> + Copy,
{
    let coarse = d1(f, x, h)?;
    let fine = d1(f, x, 0.5 * h)?;
    Ok((16.0 * fine - coarse) / 15.0)
}
