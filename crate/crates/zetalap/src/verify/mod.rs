//! Machine-checkable reproduction of the reference results: the even-value
//! table, the 8/pi limiting maximum, the sine-squared convergence, the
//! normalised lobe integral, the slope limits of chi, the pole location,
//! the contour residues, and the functional-equation suite.
//!
//! Every check yields a [`VerifyReport`]; suites are deterministic given
//! the recorded seed and are assembled in name order.

pub mod constants;

use crate::laplacian::{self, GridFunction};
use crate::quad::adaptive_simpson;
use crate::{c64, fd, hardy, Error, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Where a reference value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

/// How `pass` is decided for a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum TolerancePolicy {
    /// |computed - reference| <= tolerance.
    AbsLe,
    /// |computed - reference| / |reference| <= tolerance.
    RelLe,
    /// computed < reference (strict).
    StrictBelow,
    /// computed > reference (strict).
    Exceeds,
    /// Informational: recorded, never failing.
    Info,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct VerifyReport {
    #[serde(rename = "check")]
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    #[serde(rename = "tol")]
    pub tolerance: f64,
    pub pass: bool,
    pub provenance: Provenance,
    pub policy: TolerancePolicy,
}

impl VerifyReport {
    pub fn new(
        name: impl Into<String>,
        computed: f64,
        reference: f64,
        tolerance: f64,
        policy: TolerancePolicy,
        provenance: Provenance,
    ) -> Self {
        let abs_err = (computed - reference).abs();
        let rel_err = abs_err / reference.abs().max(f64::MIN_POSITIVE);
        let pass = match policy {
            TolerancePolicy::AbsLe => abs_err <= tolerance,
            TolerancePolicy::RelLe => rel_err <= tolerance,
            TolerancePolicy::StrictBelow => computed < reference,
            TolerancePolicy::Exceeds => computed > reference,
            TolerancePolicy::Info => true,
        };
        VerifyReport {
            name: name.into(),
            computed,
            reference,
            abs_err,
            rel_err,
            tolerance,
            pass,
            provenance,
            policy,
        }
    }
}

fn nu_real(u: f64) -> Result<f64> {
    Ok(laplacian::nu(c64(u, 0.0))?.re)
}

fn chi_real(u: f64) -> Result<f64> {
    Ok(laplacian::chi(c64(u, 0.0))?.re)
}

/// nu(2n) and chi(2n) for n = 1..n_max against the embedded table rows.
/// Row 1 is checked at 1e-6 relative (the denominator loses digits next to
/// the pole at s0), later rows at 1e-8.
pub fn reproduce_table1(n_max: usize) -> Result<Vec<VerifyReport>> {
    if n_max == 0 || n_max > 7 {
        return Err(Error::Usage("reproduce_table1: n_max must be 1..=7".into()));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let tol = if n == 1 { 1e-6 } else { 1e-8 };
        let nu_ref = constants::parse("table1_nu", constants::TABLE1_NU[n - 1]);
        let chi_ref = constants::parse("table1_chi", constants::TABLE1_CHI[n - 1]);
        out.push(VerifyReport::new(
            format!("table1_nu_{n}"),
            nu_real(2.0 * n as f64)?,
            nu_ref,
            tol,
            TolerancePolicy::RelLe,
            Provenance::Paper,
        ));
        out.push(VerifyReport::new(
            format!("table1_chi_{n}"),
            chi_real(2.0 * n as f64)?,
            chi_ref,
            tol,
            TolerancePolicy::RelLe,
            Provenance::Paper,
        ));
    }
    Ok(out)
}

/// Regression constant: nu(120) as first computed by this build.
const NU_120_FROZEN: f64 = 2.5551448229298268;

/// The even nu sequence: strict decrease toward 8/pi, with the far end
/// pinned both to the limit and to a frozen regression value.
pub fn limiting_maximum(n_list: &[u32]) -> Result<Vec<VerifyReport>> {
    if n_list.len() < 2 {
        return Err(Error::Usage(
            "limiting_maximum: need at least two indices".into(),
        ));
    }
    let limit = constants::parse("limit_max", constants::LIMIT_MAX);
    let seq: Vec<f64> = n_list
        .iter()
        .map(|&n| nu_real(2.0 * n as f64))
        .collect::<Result<_>>()?;
    let max_step = seq
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::NEG_INFINITY, f64::max);
    let mut out = vec![
        VerifyReport::new(
            "limiting_max_monotone_decrease",
            max_step,
            0.0,
            0.0,
            TolerancePolicy::StrictBelow,
            Provenance::Paper,
        ),
        VerifyReport::new(
            "limiting_max_tail_vs_8_over_pi",
            *seq.last().unwrap(),
            limit,
            5e-2,
            TolerancePolicy::AbsLe,
            Provenance::Paper,
        ),
    ];
    if *n_list.last().unwrap() == 60 {
        out.push(VerifyReport::new(
            "limiting_max_nu120_regression",
            *seq.last().unwrap(),
            NU_120_FROZEN,
            1e-9,
            TolerancePolicy::AbsLe,
            Provenance::Derived,
        ));
    }
    // The on-interval lobe peak sits one even step further out than the
    // tabulated midpoint sample; reported, not asserted.
    let n_probe = n_list[n_list.len() / 2];
    let mut peak = f64::NEG_INFINITY;
    for i in 0..=200 {
        let t = i as f64 / 200.0;
        peak = peak.max(laplacian::nu_n(n_probe as i32, t)?);
    }
    out.push(VerifyReport::new(
        format!("limiting_max_lobe_peak_n{n_probe}"),
        peak,
        nu_real(2.0 * n_probe as f64 + 2.0)?,
        f64::INFINITY,
        TolerancePolicy::Info,
        Provenance::Derived,
    ));
    Ok(out)
}

/// Convergence of the rescaled families to the sine-squared profile.
pub struct ConvergenceOutcome {
    /// (n, (pi/8) nu_n sampled on [0, 1]).
    pub profiles: Vec<(u32, GridFunction)>,
    /// (n, sup-norm for nu, sup-norm for |chi|).
    pub sup_norms: Vec<(u32, f64, f64)>,
    pub reports: Vec<VerifyReport>,
}

/// Regression constant: (pi/8) nu_20(1/2) as first computed by this build.
const NU20_HALF_FROZEN: f64 = 1.0098617287491096;

pub fn convergence_report(n_list: &[u32], grid_points: usize) -> Result<ConvergenceOutcome> {
    if n_list.len() < 2 || grid_points < 3 {
        return Err(Error::Usage(
            "convergence_report: need two indices and at least 3 grid points".into(),
        ));
    }
    let scale = PI / 8.0;
    let step = 1.0 / (grid_points - 1) as f64;
    let mut profiles = Vec::new();
    let mut sup_norms = Vec::new();
    for &n in n_list {
        let mut vals = Vec::with_capacity(grid_points);
        let mut sup_nu = 0.0_f64;
        let mut sup_chi = 0.0_f64;
        for i in 0..grid_points {
            let t = i as f64 * step;
            let nu_n = laplacian::nu_n(n as i32, t)?;
            let chi_n = laplacian::chi_n(n as i32, t)?;
            vals.push(scale * nu_n);
            sup_nu = sup_nu.max((scale * nu_n - laplacian::nu_limit(t)).abs());
            sup_chi = sup_chi.max(scale * (chi_n.abs() - laplacian::chi_limit(t).abs()).abs());
        }
        profiles.push((n, GridFunction::new(0.0, step, vals)?));
        sup_norms.push((n, sup_nu, sup_chi));
    }
    let mut reports = Vec::new();
    for w in sup_norms.windows(2) {
        let (na, sa, ca) = w[0];
        let (nb, sb, cb) = w[1];
        reports.push(VerifyReport::new(
            format!("convergence_nu_sup_n{nb}_below_n{na}"),
            sb,
            sa,
            0.0,
            TolerancePolicy::StrictBelow,
            Provenance::Paper,
        ));
        reports.push(VerifyReport::new(
            format!("convergence_chi_sup_n{nb}_below_n{na}"),
            cb,
            ca,
            0.0,
            TolerancePolicy::StrictBelow,
            Provenance::Paper,
        ));
    }
    if n_list.contains(&20) {
        let mid = scale * laplacian::nu_n(20, 0.5)?;
        reports.push(VerifyReport::new(
            "convergence_nu20_midpoint_near_one",
            mid,
            1.0,
            1e-2,
            TolerancePolicy::AbsLe,
            Provenance::Derived,
        ));
        reports.push(VerifyReport::new(
            "convergence_nu20_midpoint_regression",
            mid,
            NU20_HALF_FROZEN,
            1e-9,
            TolerancePolicy::AbsLe,
            Provenance::Derived,
        ));
    }
    let worst_endpoint = n_list
        .iter()
        .map(|&n| laplacian::nu_n(n as i32, 0.0).map(f64::abs))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    reports.push(VerifyReport::new(
        "convergence_nu_n_vanishes_at_0",
        worst_endpoint,
        0.0,
        1e-8,
        TolerancePolicy::AbsLe,
        Provenance::Trivial,
    ));
    // Raw, unnormalised distance to sin^2 for the deepest family member;
    // recorded as written, not asserted.
    let n_last = *n_list.last().unwrap();
    let mut raw_sup = 0.0_f64;
    for i in 0..grid_points {
        let t = i as f64 * step;
        raw_sup = raw_sup.max((laplacian::nu_n(n_last as i32, t)? - laplacian::nu_limit(t)).abs());
    }
    reports.push(VerifyReport::new(
        format!("convergence_raw_unnormalised_sup_n{n_last}"),
        raw_sup,
        0.0,
        f64::INFINITY,
        TolerancePolicy::Info,
        Provenance::Paper,
    ));
    Ok(ConvergenceOutcome {
        profiles,
        sup_norms,
        reports,
    })
}

/// The lobe integral of nu normalised by nu(1/2), and the sine-squared
/// integral through the same quadrature.
pub fn integral_nu() -> Result<Vec<VerifyReport>> {
    let nu_half = nu_real(0.5)?;
    let (ratio_integral, _) = adaptive_simpson(|t| Ok(nu_real(t)? / nu_half), 0.0, 1.0, 1e-11)?;
    let (sin2_integral, _) = adaptive_simpson(|t| Ok(laplacian::nu_limit(t)), 0.0, 1.0, 1e-13)?;
    Ok(vec![
        VerifyReport::new(
            "integral_nu_normalised",
            ratio_integral,
            constants::parse("integral_nu", constants::INTEGRAL_NU),
            1e-8,
            TolerancePolicy::AbsLe,
            Provenance::Paper,
        ),
        VerifyReport::new(
            "integral_sin_squared",
            sin2_integral,
            constants::parse("integral_sin2", constants::INTEGRAL_SIN2),
            1e-12,
            TolerancePolicy::AbsLe,
            Provenance::Paper,
        ),
        // The lobe scale itself: finite and well away from zero. The sign
        // is informational (the first lobe is negative; only the ratio
        // enters the integral above).
        VerifyReport::new(
            "integral_nu_half_magnitude",
            nu_half.abs(),
            0.1,
            0.0,
            TolerancePolicy::Exceeds,
            Provenance::Derived,
        ),
        VerifyReport::new(
            "integral_nu_half_value",
            nu_half,
            0.0,
            f64::INFINITY,
            TolerancePolicy::Info,
            Provenance::Derived,
        ),
    ])
}

/// Slope of chi at 0 and 1 against 4 pi, by Richardson-extrapolated
/// fourth-order differences.
pub fn chi_prime_limits() -> Result<Vec<VerifyReport>> {
    let four_pi = constants::parse("chi_prime_limit", constants::CHI_PRIME_LIMIT);
    let chi_c = |x: f64| laplacian::chi(c64(x, 0.0));
    let d0 = fd::d1_richardson(|x| chi_c(x), 0.0, 0.01)?.re;
    let d1 = fd::d1_richardson(|x| chi_c(x), 1.0, 0.01)?.re;
    Ok(vec![
        VerifyReport::new(
            "chi_prime_at_0",
            d0,
            four_pi,
            1e-5,
            TolerancePolicy::AbsLe,
            Provenance::Paper,
        ),
        VerifyReport::new(
            "chi_prime_at_1",
            d1,
            four_pi,
            1e-5,
            TolerancePolicy::AbsLe,
            Provenance::Paper,
        ),
        VerifyReport::new(
            "chi_prime_symmetry",
            d0 - d1,
            0.0,
            1e-8,
            TolerancePolicy::AbsLe,
            Provenance::Trivial,
        ),
    ])
}

/// Root of the nu denominator in [1.9, 2.0] and the blow-up of chi next
/// to it.
pub fn locate_singularity() -> Result<Vec<VerifyReport>> {
    let s0 = laplacian::nu_pole();
    let blow = chi_real(s0 + 1e-3)?.abs().min(chi_real(s0 - 1e-3)?.abs());
    Ok(vec![
        VerifyReport::new(
            "singularity_location",
            s0,
            constants::parse("s0", constants::S0),
            1e-6,
            TolerancePolicy::AbsLe,
            Provenance::Paper,
        ),
        VerifyReport::new(
            "singularity_chi_blowup",
            blow,
            1e3,
            0.0,
            TolerancePolicy::Exceeds,
            Provenance::Paper,
        ),
    ])
}

/// Contour residues of Q at +-(i/2)(4n-3), n in {1, 2}, against the
/// published claims (-1/2 positive side, +1/2 negative side).
pub fn residue_report() -> Result<Vec<VerifyReport>> {
    let pos_ref = constants::parse("residue_pos", constants::RESIDUE_POS);
    let neg_ref = constants::parse("residue_neg", constants::RESIDUE_NEG);
    let mut out = Vec::new();
    for n in 1..=2u32 {
        for (sign, reference) in [(1, pos_ref), (-1, neg_ref)] {
            let r = hardy::q_residue(n, sign)?;
            let tag = if sign > 0 { "pos" } else { "neg" };
            out.push(VerifyReport::new(
                format!("residue_n{n}_{tag}"),
                r.re,
                reference,
                1e-6,
                TolerancePolicy::AbsLe,
                Provenance::Paper,
            ));
            out.push(VerifyReport::new(
                format!("residue_n{n}_{tag}_imag"),
                r.im,
                0.0,
                1e-6,
                TolerancePolicy::AbsLe,
                Provenance::Trivial,
            ));
        }
    }
    Ok(out)
}

/// Symmetry identities of nu, chi, mu, psi and the rescaled families at
/// seeded random points, plus the zero ladder.
pub fn functional_equation_suite(seed: u64) -> Result<Vec<VerifyReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s0 = laplacian::nu_pole();
    let draw = |rng: &mut ChaCha8Rng| -> f64 {
        loop {
            let u: f64 = rng.gen_range(-1.0..2.0);
            let near_pole = (u - s0).abs() < 0.1 || (u - (1.0 - s0)).abs() < 0.1;
            let near_ladder = [0.0, 1.0, -1.0].iter().any(|p| (u - p).abs() < 1e-3);
            if !near_pole && !near_ladder {
                return u;
            }
        }
    };

    let mut nu_res = 0.0_f64;
    let mut chi_res = 0.0_f64;
    for _ in 0..20 {
        let u = draw(&mut rng);
        let scale_nu = nu_real(u)?.abs().max(1.0);
        nu_res = nu_res.max((nu_real(u)? - nu_real(1.0 - u)?).abs() / scale_nu);
        let scale_chi = chi_real(u)?.abs().max(1.0);
        chi_res = chi_res.max((chi_real(u)? + chi_real(1.0 - u)?).abs() / scale_chi);
    }

    let mut mu_res = 0.0_f64;
    let mut psi_res = 0.0_f64;
    for _ in 0..10 {
        let t = 0.5 * draw(&mut rng);
        let m = laplacian::mu(c64(t, 0.0))?;
        let m2 = laplacian::mu(c64(-t, 0.0))?;
        mu_res = mu_res.max((m - m2).norm() / m.norm().max(1.0));
        let p = laplacian::psi_fn(c64(t, 0.0))?;
        let p2 = laplacian::psi_fn(c64(-t, 0.0))?;
        psi_res = psi_res.max((p + p2).norm() / p.norm().max(1.0));
    }

    // Rescaling identities: half-shift collapse and the even-argument
    // sampling of the families.
    let t = 0.8;
    let collapse_chi = (chi_real(1.0 + 2.0 * (-0.5) + t)? - chi_real(t)?).abs();
    let collapse_nu = (nu_real(1.0 + 2.0 * (-0.5) + t)? - nu_real(t)?).abs();
    let fam_chi = (laplacian::chi_n(3, -0.5)? - chi_real(6.0)?).abs();
    let fam_nu = (laplacian::nu_n(3, -0.5)? - nu_real(6.0)?).abs();

    let mut ladder_nu = 0.0_f64;
    let mut ladder_chi = 0.0_f64;
    for &u in &[0.0, 1.0, 3.0, 5.0, 7.0, -2.0, -4.0] {
        ladder_nu = ladder_nu.max(nu_real(u)?.abs());
        ladder_chi = ladder_chi.max(chi_real(u)?.abs());
    }
    // Near-ladder probes keep the removable-limit path honest: the direct
    // formula itself must already be tiny just off the lattice points.
    for &u in &[3.0 + 1e-4, 5.0 - 1e-4, -2.0 + 1e-4] {
        ladder_nu = ladder_nu.max(nu_real(u)?.abs());
    }

    let mk = |name: &str, computed: f64, tol: f64, prov: Provenance| {
        VerifyReport::new(name, computed, 0.0, tol, TolerancePolicy::AbsLe, prov)
    };
    Ok(vec![
        mk(
            "symmetry_nu_even_about_half",
            nu_res,
            1e-9,
            Provenance::Paper,
        ),
        mk(
            "symmetry_chi_odd_about_half",
            chi_res,
            1e-9,
            Provenance::Paper,
        ),
        mk("symmetry_mu_even", mu_res, 1e-9, Provenance::Paper),
        mk("symmetry_psi_odd", psi_res, 1e-9, Provenance::Paper),
        mk(
            "symmetry_half_shift_collapse_chi",
            collapse_chi,
            1e-10,
            Provenance::Paper,
        ),
        mk(
            "symmetry_half_shift_collapse_nu",
            collapse_nu,
            1e-10,
            Provenance::Paper,
        ),
        mk(
            "symmetry_family_even_sample_chi",
            fam_chi,
            1e-10,
            Provenance::Paper,
        ),
        mk(
            "symmetry_family_even_sample_nu",
            fam_nu,
            1e-10,
            Provenance::Paper,
        ),
        mk("ladder_nu_max_residual", ladder_nu, 1e-6, Provenance::Paper),
        mk(
            "ladder_chi_max_residual",
            ladder_chi,
            1e-6,
            Provenance::Paper,
        ),
    ])
}

/// Suite selector mirrored by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Table1,
    Convergence,
    Integral,
    Residues,
    Singularity,
    Limits,
    Symmetry,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "table1" => Suite::Table1,
            "convergence" => Suite::Convergence,
            "integral" => Suite::Integral,
            "residues" => Suite::Residues,
            "singularity" => Suite::Singularity,
            "limits" => Suite::Limits,
            "symmetry" => Suite::Symmetry,
            other => return Err(Error::Usage(format!("unknown suite: {other}"))),
        })
    }
}

/// Run a suite; reports come back sorted by check name.
pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Table1 {
        out.extend(reproduce_table1(7)?);
    }
    if all || suite == Suite::Convergence {
        let ns: Vec<u32> = (2..=60).collect();
        out.extend(limiting_maximum(&ns)?);
        out.extend(convergence_report(&[2, 5, 10, 20], 201)?.reports);
    }
    if all || suite == Suite::Integral {
        out.extend(integral_nu()?);
    }
    if all || suite == Suite::Residues {
        out.extend(residue_report()?);
    }
    if all || suite == Suite::Singularity {
        out.extend(locate_singularity()?);
    }
    if all || suite == Suite::Limits {
        out.extend(chi_prime_limits()?);
    }
    if all || suite == Suite::Symmetry {
        out.extend(functional_equation_suite(seed)?);
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policies() {
        let r = VerifyReport::new(
            "x",
            1.0,
            1.0 + 1e-9,
            1e-8,
            TolerancePolicy::AbsLe,
            Provenance::Trivial,
        );
        assert!(r.pass);
        let r = VerifyReport::new(
            "x",
            2.0,
            1.0,
            0.0,
            TolerancePolicy::StrictBelow,
            Provenance::Trivial,
        );
        assert!(!r.pass);
        let r = VerifyReport::new(
            "x",
            2.0,
            1.0,
            0.0,
            TolerancePolicy::Exceeds,
            Provenance::Trivial,
        );
        assert!(r.pass);
        let r = VerifyReport::new(
            "x",
            f64::MAX,
            0.0,
            0.0,
            TolerancePolicy::Info,
            Provenance::Trivial,
        );
        assert!(r.pass);
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("table1".parse::<Suite>().unwrap(), Suite::Table1);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn suite_is_deterministic() {
        let a = functional_equation_suite(42).unwrap();
        let b = functional_equation_suite(42).unwrap();
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.computed.to_bits(), y.computed.to_bits(), "{}", x.name);
        }
    }
}
