//! Shared oracles for the integration suites. Everything here is kept
//! independent of the kernels it checks: the zeta cross-check goes through
//! the alternating (eta) series with its own acceleration loop, and the
//! derivative oracles differentiate that series term by term.

#![allow(dead_code)]

use num_complex::Complex64;
use std::path::PathBuf;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Accelerated alternating sum, written here from scratch so the oracle
/// does not share code with the library kernel.
fn alt_sum<F: Fn(usize) -> Complex64>(n: usize, a: F) -> Complex64 {
    let mut d = (3.0 + 8.0_f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut cc = -d;
    let mut acc = c(0.0, 0.0);
    for k in 0..n {
        cc = b - cc;
        acc += cc * a(k);
        let (kf, nf) = (k as f64, n as f64);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    acc / d
}

/// j-th derivative of eta(s) = sum (-1)^(k-1) k^-s, term-differentiated:
/// each term picks up (-ln k)^j.
pub fn eta_derivative(s: Complex64, order: u32, terms: usize) -> Complex64 {
    alt_sum(terms, |k| {
        let lk = ((k + 1) as f64).ln();
        let w = (-lk).powi(order as i32);
        w * (-s * lk).exp()
    })
}

/// zeta and derivatives through eta via Leibniz on zeta * (1 - 2^(1-s)) = eta.
pub fn zeta_derivative_via_eta(s: Complex64, order: u32, terms: usize) -> Complex64 {
    let ln2 = 2.0_f64.ln();
    let p = c(2.0, 0.0).powc(c(1.0, 0.0) - s); // 2^(1-s)
    let cv = c(1.0, 0.0) - p; // c
    let c1 = ln2 * p; // c'
    let c2 = -ln2 * ln2 * p; // c''
    let c3 = ln2 * ln2 * ln2 * p; // c'''
    let z0 = eta_derivative(s, 0, terms) / cv;
    if order == 0 {
        return z0;
    }
    let z1 = (eta_derivative(s, 1, terms) - c1 * z0) / cv;
    if order == 1 {
        return z1;
    }
    let z2 = (eta_derivative(s, 2, terms) - c2 * z0 - 2.0 * c1 * z1) / cv;
    if order == 2 {
        return z2;
    }
    let z3 = (eta_derivative(s, 3, terms) - c3 * z0 - 3.0 * c2 * z1 - 3.0 * c1 * z2) / cv;
    assert!(order == 3, "oracle carries derivatives up to order 3");
    z3
}

/// Plain Euler-transform partial sum of eta: a second, cruder independent
/// route used to spot-check the accelerated one.
pub fn eta_euler_transform(s: Complex64, rows: usize) -> Complex64 {
    let term = |k: usize| (-s * ((k + 1) as f64).ln()).exp();
    // Forward differences of the term sequence at 0.
    let mut diff: Vec<Complex64> = (0..rows).map(term).collect();
    let mut acc = c(0.0, 0.0);
    let mut pow = 0.5;
    for _ in 0..rows {
        acc += pow * diff[0];
        for i in 0..diff.len() - 1 {
            diff[i] = diff[i] - diff[i + 1];
        }
        diff.pop();
        pow *= 0.5;
        if diff.is_empty() {
            break;
        }
    }
    acc
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

/// Published zero ordinates from the checked-in table.
pub fn published_zeros() -> Vec<f64> {
    zetalap::zeros::read_zeros_file(&data_path("zeros100.txt")).expect("zeros table readable")
}

/// Finite difference of a complex-valued function of a complex argument
/// along a direction (1 for real, i for imaginary), fourth order.
pub fn directional_derivative<F>(
    f: F,
    s: Complex64,
    dir: Complex64,
    order: u32,
    h: f64,
) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
{
    let g = |x: f64| Ok(f(s + dir * x));
    let raw = match order {
        1 => zetalap::fd::d1(g, 0.0, h),
        2 => zetalap::fd::d2(g, 0.0, h),
        3 => zetalap::fd::d3(g, 0.0, h),
        _ => unreachable!(),
    }
    .expect("finite difference");
    raw / dir.powu(order)
}
