//! Value formatting: shortest round-trip floats for human output, fixed
//! 17-significant-digit scientific notation for CSV cells (both re-parse
//! bit-exactly).

use num_complex::Complex64;

/// CSV cell: 17 significant digits, always scientific.
pub fn csv_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Shortest decimal that round-trips (Rust's default float formatting).
pub fn fmt_real(x: f64) -> String {
    format!("{x}")
}

/// Complex value for eval output; collapses to the real part when the
/// imaginary part is at rounding level.
pub fn fmt_value(z: Complex64) -> String {
    if z.im.abs() <= 1e-12 * (1.0 + z.norm()) {
        fmt_real(z.re)
    } else if z.im >= 0.0 {
        format!("{} + {}i", fmt_real(z.re), fmt_real(z.im))
    } else {
        format!("{} - {}i", fmt_real(z.re), fmt_real(-z.im))
    }
}
