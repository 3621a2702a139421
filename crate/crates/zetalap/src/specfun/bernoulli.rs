//! Bernoulli numbers B_0..B_60 (even indices; odd ones vanish beyond B_1).
//!
//! The table is rendered from the exact rationals; a test regenerates it
//! with the Akiyama–Tanigawa recurrence in big-rational arithmetic.

use crate::{Error, Result};

/// B_{2k} for k = 0..=30, written as exact rational quotients.
#[rustfmt::skip]
pub(crate) const BERNOULLI_EVEN: [f64; 31] = [
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
    -27833269579301024235023.0 / 690.0,
    596451111593912163277961.0 / 282.0,
    -5609403368997817686249127547.0 / 46410.0,
    495057205241079648212477525.0 / 66.0,
    -801165718135489957347924991853.0 / 1590.0,
    29149963634884862421418123812691.0 / 798.0,
    -2479392929313226753685415739663229.0 / 870.0,
    84483613348880041862046775994036021.0 / 354.0,
    -1215233140483755572040304994079820246041491.0 / 56786730.0,
];

/// B_{2k} by even-index lookup; `k` is the half-index (B_{2k}).
pub(crate) fn bernoulli_even(k: usize) -> f64 {
    BERNOULLI_EVEN[k]
}

/// Bernoulli number B_k for even k with 0 <= k <= 60.
pub fn bernoulli(k: u32) -> Result<f64> {
    if k % 2 != 0 || k > 60 {
        return Err(Error::Domain(format!(
            "bernoulli: k must be even and <= 60, got {k}"
        )));
    }
    Ok(BERNOULLI_EVEN[(k / 2) as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert_eq!(bernoulli(2).unwrap(), 1.0 / 6.0);
        assert_eq!(bernoulli(4).unwrap(), -1.0 / 30.0);
        assert_eq!(bernoulli(12).unwrap(), -691.0 / 2730.0);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(62).is_err());
    }
}
