//! Fixed-degree truncated Taylor (jet) arithmetic over complex scalars.
//!
//! A [`Jet<N>`] carries a value and its first `N - 1` derivatives with
//! respect to a single complex variable; arithmetic propagates derivatives
//! exactly through the Leibniz/Faà di Bruno rules truncated at degree
//! `N - 1`. [`Jet3`] (= `Jet<4>`) is the public carrier used for the zeta
//! derivative chain; degree-4 jets are used internally where a fourth
//! derivative is required.

use crate::ComplexValue;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

// Pascal rows, enough for every jet degree used in the crate.
const BINOM: [[f64; 8]; 8] = [
    [1., 0., 0., 0., 0., 0., 0., 0.],
    [1., 1., 0., 0., 0., 0., 0., 0.],
    [1., 2., 1., 0., 0., 0., 0., 0.],
    [1., 3., 3., 1., 0., 0., 0., 0.],
    [1., 4., 6., 4., 1., 0., 0., 0.],
    [1., 5., 10., 10., 5., 1., 0., 0.],
    [1., 6., 15., 20., 15., 6., 1., 0.],
    [1., 7., 21., 35., 35., 21., 7., 1.],
];

const ZERO: ComplexValue = ComplexValue::new(0.0, 0.0);

/// Value plus first `N - 1` derivatives: `d[k]` is the k-th derivative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<const N: usize> {
    pub d: [ComplexValue; N],
}

/// Value and first three derivatives — the carrier for the zeta chain.
pub type Jet3 = Jet<4>;

impl<const N: usize> Jet<N> {
    pub fn zero() -> Self {
        Jet { d: [ZERO; N] }
    }

    /// Jet of a constant: all derivatives vanish.
    pub fn constant(c: ComplexValue) -> Self {
        let mut d = [ZERO; N];
        d[0] = c;
        Jet { d }
    }

    /// Jet of the independent variable seeded at `x`: d0 = x, d1 = 1.
    pub fn variable(x: ComplexValue) -> Self {
        let mut d = [ZERO; N];
        d[0] = x;
        if N > 1 {
            d[1] = ComplexValue::new(1.0, 0.0);
        }
        Jet { d }
    }

    pub fn value(&self) -> ComplexValue {
        self.d[0]
    }

    /// Multiply every slot by a complex scalar.
    pub fn scale(&self, k: ComplexValue) -> Self {
        let mut d = self.d;
        for v in d.iter_mut() {
            *v *= k;
        }
        Jet { d }
    }

    /// Multiply every slot by a real scalar.
    pub fn scale_re(&self, k: f64) -> Self {
        let mut d = self.d;
        for v in d.iter_mut() {
            *v *= k;
        }
        Jet { d }
    }

    /// exp(self), propagated via w' = u' w.
    pub fn exp(&self) -> Self {
        let mut w = [ZERO; N];
        w[0] = self.d[0].exp();
        for n in 1..N {
            let mut acc = ZERO;
            for j in 0..n {
                acc += BINOM[n - 1][j] * self.d[n - j] * w[j];
            }
            w[n] = acc;
        }
        Jet { d: w }
    }

    /// ln(self) with the principal value in slot 0. Requires d0 != 0; the
    /// derivative slots are branch-independent.
    pub fn ln(&self) -> Self {
        let mut out = [ZERO; N];
        out[0] = self.d[0].ln();
        // L' = f'/f: solve q * f = f' by Leibniz, one derivative order at a time.
        let mut q = [ZERO; N];
        for n in 0..N.saturating_sub(1) {
            let mut acc = self.d[n + 1];
            for k in 0..n {
                acc -= BINOM[n][k] * q[k] * self.d[n - k];
            }
            q[n] = acc / self.d[0];
        }
        for n in 1..N {
            out[n] = q[n - 1];
        }
        Jet { d: out }
    }

    pub fn is_finite(&self) -> bool {
        self.d.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

impl Jet3 {
    pub fn d0(&self) -> ComplexValue {
        self.d[0]
    }
    pub fn d1(&self) -> ComplexValue {
        self.d[1]
    }
    pub fn d2(&self) -> ComplexValue {
        self.d[2]
    }
    pub fn d3(&self) -> ComplexValue {
        self.d[3]
    }
}

impl<const N: usize> Add for Jet<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut d = self.d;
        for (a, b) in d.iter_mut().zip(rhs.d.iter()) {
            *a += b;
        }
        Jet { d }
    }
}

impl<const N: usize> AddAssign for Jet<N> {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.d.iter_mut().zip(rhs.d.iter()) {
            *a += b;
        }
    }
}

impl<const N: usize> Sub for Jet<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut d = self.d;
        for (a, b) in d.iter_mut().zip(rhs.d.iter()) {
            *a -= b;
        }
        Jet { d }
    }
}

impl<const N: usize> Neg for Jet<N> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut d = self.d;
        for a in d.iter_mut() {
            *a = -*a;
        }
        Jet { d }
    }
}

impl<const N: usize> Add<ComplexValue> for Jet<N> {
    type Output = Self;
    fn add(self, rhs: ComplexValue) -> Self {
        let mut d = self.d;
        d[0] += rhs;
        Jet { d }
    }
}

impl<const N: usize> Sub<ComplexValue> for Jet<N> {
    type Output = Self;
    fn sub(self, rhs: ComplexValue) -> Self {
        let mut d = self.d;
        d[0] -= rhs;
        Jet { d }
    }
}

impl<const N: usize> Add<f64> for Jet<N> {
    type Output = Self;
    fn add(self, rhs: f64) -> Self {
        let mut d = self.d;
        d[0] += rhs;
        Jet { d }
    }
}

impl<const N: usize> Sub<f64> for Jet<N> {
    type Output = Self;
    fn sub(self, rhs: f64) -> Self {
        let mut d = self.d;
        d[0] -= rhs;
        Jet { d }
    }
}

impl<const N: usize> Mul for Jet<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [ZERO; N];
        for (n, o) in out.iter_mut().enumerate() {
            let mut acc = ZERO;
            for k in 0..=n {
                acc += BINOM[n][k] * self.d[k] * rhs.d[n - k];
            }
            *o = acc;
        }
        Jet { d: out }
    }
}

impl<const N: usize> Div for Jet<N> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        // q with q * rhs = self, solved order by order.
        let mut q = [ZERO; N];
        for n in 0..N {
            let mut acc = self.d[n];
            for k in 0..n {
                acc -= BINOM[n][k] * q[k] * rhs.d[n - k];
            }
            q[n] = acc / rhs.d[0];
        }
        Jet { d: q }
    }
}

impl<const N: usize> Mul<ComplexValue> for Jet<N> {
    type Output = Self;
    fn mul(self, rhs: ComplexValue) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> Div<ComplexValue> for Jet<N> {
    type Output = Self;
    fn div(self, rhs: ComplexValue) -> Self {
        self.scale(1.0 / rhs)
    }
}
