//! Reference constants for the verification suite, kept verbatim as
//! strings so a transcription test can compare them character-for-character
//! against the checked-in `data/reference_values.txt`.

/// Table rows: nu at even arguments 2n, n = 1..7.
pub const TABLE1_NU: [&str; 7] = [
    "117.43532857805377782",
    "3.03320654562255410",
    "2.77176105375846239",
    "2.69653220844944185",
    "2.66095375057354766",
    "2.63970550787458574",
    "2.62532107269483772",
];

/// Table rows: chi at even arguments 2n, n = 1..7.
pub const TABLE1_CHI: [&str; 7] = [
    "9447.7593604718560",
    "0.2816402783351",
    "0.0589526080385",
    "0.0240373109008",
    "0.0132398305603",
    "0.0088555925215",
    "0.0060558883634",
];

/// Limiting maximum of the even nu sequence: 8/pi.
pub const LIMIT_MAX: &str = "2.546479089470";

/// Normalised integral of nu over its first lobe.
pub const INTEGRAL_NU: &str = "0.46693755153559653755";

/// Integral of the limiting sine-squared kernel.
pub const INTEGRAL_SIN2: &str = "0.5";

/// Location of the real pole of nu in [1.9, 2.0].
pub const S0: &str = "1.98757823";

/// Slope of chi at 0 and 1: 4 pi.
pub const CHI_PRIME_LIMIT: &str = "12.566370614359172";

/// Claimed residues of Q at the positive and negative imaginary poles.
pub const RESIDUE_POS: &str = "-0.5";
pub const RESIDUE_NEG: &str = "0.5";

/// All named constants, as (name, verbatim value) pairs; the transcription
/// test checks this list against the data file.
pub fn all() -> Vec<(String, &'static str)> {
    let mut out = Vec::new();
    for (i, v) in TABLE1_NU.iter().enumerate() {
        out.push((format!("table1_nu_{}", i + 1), *v));
    }
    for (i, v) in TABLE1_CHI.iter().enumerate() {
        out.push((format!("table1_chi_{}", i + 1), *v));
    }
    out.push(("limit_max".into(), LIMIT_MAX));
    out.push(("integral_nu".into(), INTEGRAL_NU));
    out.push(("integral_sin2".into(), INTEGRAL_SIN2));
    out.push(("s0".into(), S0));
    out.push(("chi_prime_limit".into(), CHI_PRIME_LIMIT));
    out.push(("residue_pos".into(), RESIDUE_POS));
    out.push(("residue_neg".into(), RESIDUE_NEG));
    out
}

pub fn parse(name: &str, s: &str) -> f64 {
    s.parse()
        .unwrap_or_else(|_| panic!("reference constant {name} is not a number: {s}"))
}
