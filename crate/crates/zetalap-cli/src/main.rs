//! zetalap: evaluate critical-line zeta machinery, sweep for zeros, run the
//! verification suite, and emit figure-reproduction data.
//!
//! Exit codes: 0 on success, 1 on numerical/tolerance failure, 2 on usage
//! errors.

mod config;
mod output;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use std::path::PathBuf;
use zetalap::hardy::{self, UnwindState};
use zetalap::laplacian::{self, ExtremumKind};
use zetalap::specfun::{self, PrecisionConfig};
use zetalap::verify::{self, Suite};
use zetalap::zeros::{self, SweepConfig};
use zetalap::{Error, Result};

#[derive(Parser)]
#[command(
    name = "zetalap",
    version,
    about = "Riemann zeta critical-line toolkit"
)]
struct Cli {
    /// Optional key=value configuration file (flags take precedence).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for randomized checks; recorded in report headers.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a named function at a point (complex literals as `a+bi`).
    Eval {
        /// One of: zeta zeta1 zeta2 zeta3 digamma trigamma tetragamma
        /// theta Z Q R S N G H nu chi mu psi
        function: String,
        /// Evaluation point, e.g. `2`, `0.5+14.1i`, `-3.2-0.5i`.
        at: String,
    },
    /// Sweep an interval for roots of H and classify them.
    Zeros {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Coarse grid spacing.
        #[arg(long)]
        step: Option<f64>,
        #[arg(long)]
        workers: Option<usize>,
        /// Published-zeros file for cross-checking (one ordinate per line).
        #[arg(long)]
        zeros_file: Option<PathBuf>,
        /// Output format: csv or json.
        #[arg(long)]
        format: Option<String>,
    },
    /// Run a verification suite and report pass/fail per check.
    Verify {
        /// all, table1, convergence, integral, residues, singularity,
        /// limits or symmetry.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit figure-reproduction data as CSV.
    Plotdata {
        /// Figure number: 1 (R and G), 2 (G, H, H'), 3 (nu/chi profiles).
        figure: u32,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        /// Number of grid rows.
        #[arg(long)]
        grid: Option<usize>,
        /// Family indices for figure 3.
        #[arg(long, value_delimiter = ',')]
        ns: Option<Vec<u32>>,
        /// Output path (defaults to fig<N>.csv).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let cfg = match config::FileConfig::load(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    let seed = cli.seed.or(cfg.seed).unwrap_or(42);
    let code = match run(cli.command, &cfg, seed) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

fn run(cmd: Command, cfg: &config::FileConfig, seed: u64) -> Result<i32> {
    match cmd {
        Command::Eval { function, at } => cmd_eval(&function, &at),
        Command::Zeros {
            from,
            to,
            step,
            workers,
            zeros_file,
            format,
        } => {
            let step = step.or(cfg.step).unwrap_or(0.05);
            let workers = workers.or(cfg.workers).unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(|n| n.get())
                    .unwrap_or(1)
            });
            let format = format
                .or_else(|| cfg.format.clone())
                .unwrap_or_else(|| "csv".into());
            cmd_zeros(from, to, step, workers, zeros_file.as_deref(), &format)
        }
        Command::Verify { suite, json } => {
            let suite: Suite = suite.parse()?;
            cmd_verify(suite, seed, json.as_deref())
        }
        Command::Plotdata {
            figure,
            from,
            to,
            grid,
            ns,
            out,
        } => {
            let grid = grid.or(cfg.grid);
            let ns = ns
                .or_else(|| cfg.ns.clone())
                .unwrap_or_else(|| vec![2, 5, 10, 20]);
            cmd_plotdata(figure, from, to, grid, &ns, out)
        }
    }
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Usage(format!("cannot parse complex literal: {s}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some(body) = t.strip_suffix('i') {
        // Split into real and imaginary parts at the last +/- that is not
        // an exponent sign and not the leading sign.
        let chars: Vec<char> = body.chars().collect();
        let mut split = None;
        for k in (1..chars.len()).rev() {
            if (chars[k] == '+' || chars[k] == '-') && chars[k - 1] != 'e' && chars[k - 1] != 'E' {
                split = Some(k);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse().map_err(|_| bad())?,
        };
        let re = if re_str.is_empty() {
            0.0
        } else {
            re_str.parse().map_err(|_| bad())?
        };
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(t.parse().map_err(|_| bad())?, 0.0))
    }
}

fn real_arg(z: Complex64, what: &str) -> Result<f64> {
    if z.im != 0.0 {
        return Err(Error::Usage(format!("{what} takes a real argument")));
    }
    Ok(z.re)
}

fn cmd_eval(function: &str, at: &str) -> Result<i32> {
    let z = parse_complex(at)?;
    let cfg = PrecisionConfig::default();
    let fmt = output::fmt_value;
    match function {
        "zeta" | "zeta1" | "zeta2" | "zeta3" => {
            let (jet, est) = specfun::zeta_jet_with_err(z, &cfg)?;
            let order = match function {
                "zeta" => 0,
                "zeta1" => 1,
                "zeta2" => 2,
                _ => 3,
            };
            println!("{function}({at}) = {}", fmt(jet.d[order]));
            for (label, v) in [("d1", jet.d1()), ("d2", jet.d2()), ("d3", jet.d3())] {
                println!("  {label} = {}", fmt(v));
            }
            println!("  est_rel_err = {est:.2e}");
        }
        "digamma" | "trigamma" | "tetragamma" => {
            let order = match function {
                "digamma" => 0,
                "trigamma" => 1,
                _ => 2,
            };
            let v = specfun::polygamma(order, z)?;
            println!("{function}({at}) = {}", fmt(v));
            println!("  est_rel_err = 1e-13");
        }
        "theta" => {
            println!("theta({at}) = {}", fmt(hardy::theta(z)?));
            println!("  est_rel_err = 1e-13");
        }
        "Z" => {
            println!("Z({at}) = {}", fmt(hardy::hardy_z(z)?));
            println!("  est_rel_err = 1e-12");
        }
        "Q" => {
            let q = hardy::q_jet(z)?;
            println!("Q({at}) = {}", fmt(q.q));
            println!("  q_dot = {}", fmt(q.q_dot));
            println!("  q_ddot = {}", fmt(q.q_ddot));
            println!("  est_rel_err = 1e-11");
        }
        "R" | "S" | "N" => {
            let t = real_arg(z, function)?;
            let mut st = UnwindState::new();
            match function {
                "R" => println!("R({at}) = {}", fmt(hardy::r_function(t, &mut st)?)),
                "S" => println!(
                    "S({at}) = {}",
                    output::fmt_real(hardy::s_function(t, &mut st)?)
                ),
                _ => println!(
                    "N({at}) = {}",
                    output::fmt_real(hardy::backlund_n(t, &mut st)?)
                ),
            }
            println!("  est_rel_err = 1e-10");
        }
        "G" => {
            println!("G({at}) = {}", fmt(laplacian::g_function(z)?));
            println!("  est_rel_err = 1e-11");
        }
        "H" => {
            println!("H({at}) = {}", fmt(laplacian::h_function(z)?));
            println!("  est_rel_err = 1e-10");
        }
        "nu" => {
            println!("nu({at}) = {}", fmt(laplacian::nu(z)?));
            println!("  est_rel_err = 1e-11");
        }
        "chi" => {
            println!("chi({at}) = {}", fmt(laplacian::chi(z)?));
            println!("  est_rel_err = 1e-10");
        }
        "mu" => {
            println!("mu({at}) = {}", fmt(laplacian::mu(z)?));
            println!("  est_rel_err = 1e-11");
        }
        "psi" => {
            println!("psi({at}) = {}", fmt(laplacian::psi_fn(z)?));
            println!("  est_rel_err = 1e-10");
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown function: {other} (see `zetalap eval --help`)"
            )));
        }
    }
    Ok(0)
}

fn cmd_zeros(
    from: f64,
    to: f64,
    step: f64,
    workers: usize,
    zeros_file: Option<&std::path::Path>,
    format: &str,
) -> Result<i32> {
    let cfg = SweepConfig {
        coarse_step: step,
        workers,
        ..SweepConfig::new(from, to)
    };
    let out = zeros::sweep(&cfg)?;
    match format {
        "csv" => {
            println!("index,kind,t,h_residual,hdot_sign,z_match");
            for r in &out.records {
                let kind = match r.point.kind {
                    ExtremumKind::ZetaZeroMinimum => "zeta_zero_minimum",
                    ExtremumKind::MidpointMaximum => "midpoint_maximum",
                };
                println!(
                    "{},{},{},{},{},{}",
                    r.index,
                    kind,
                    output::csv_f64(r.point.t),
                    output::csv_f64(r.point.h_residual),
                    if r.point.hdot >= 0.0 { 1 } else { -1 },
                    r.z_signchange_match
                        .map(output::csv_f64)
                        .unwrap_or_default(),
                );
            }
        }
        "json" => {
            println!(
                "{}",
                serde_json::to_string_pretty(&out.records).expect("serializable")
            );
        }
        other => return Err(Error::Usage(format!("unknown format: {other}"))),
    }
    for (lo, hi) in &out.excluded {
        eprintln!("warning: excluded band [{lo}, {hi}] around an evaluation singularity");
    }
    if let Some(path) = zeros_file {
        let table = zeros::read_zeros_file(path)?;
        for (idx, dist) in zeros::crosscheck_minima(&out.records, &table) {
            if dist > 1e-5 {
                eprintln!(
                    "warning: minimum #{idx} is {dist:.2e} from the nearest published ordinate"
                );
            }
        }
    }
    Ok(0)
}

fn cmd_verify(suite: Suite, seed: u64, json: Option<&std::path::Path>) -> Result<i32> {
    println!("# seed = {seed}");
    let reports = verify::run_suite(suite, seed)?;
    println!(
        "{:<42} {:>24} {:>24} {:>10} {:>9} {:>6}",
        "check", "computed", "reference", "rel_err", "tol", "pass"
    );
    let mut passed = 0usize;
    for r in &reports {
        if r.pass {
            passed += 1;
        }
        println!(
            "{:<42} {:>24} {:>24} {:>10.2e} {:>9.1e} {:>6}",
            r.name,
            output::csv_f64(r.computed),
            output::csv_f64(r.reference),
            r.rel_err,
            r.tolerance,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    println!("# passed {passed}/{} checks", reports.len());
    if let Some(path) = json {
        let doc = serde_json::json!({
            "seed": seed,
            "checks": reports,
        });
        std::fs::write(
            path,
            serde_json::to_string_pretty(&doc).expect("serializable"),
        )
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(if passed == reports.len() { 0 } else { 1 })
}

fn linspace(from: f64, to: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 {
        (to - from) / (n - 1) as f64
    } else {
        0.0
    };
    (0..n).map(move |i| from + step * i as f64)
}

fn cmd_plotdata(
    figure: u32,
    from: Option<f64>,
    to: Option<f64>,
    grid: Option<usize>,
    ns: &[u32],
    out: Option<PathBuf>,
) -> Result<i32> {
    let path = out.unwrap_or_else(|| PathBuf::from(format!("fig{figure}.csv")));
    let mut rows = Vec::new();
    match figure {
        1 => {
            let (a, b) = (from.unwrap_or(0.0), to.unwrap_or(50.0));
            let n = grid.unwrap_or(1000);
            rows.push("t,re_r,im_r,g".to_string());
            let mut st = UnwindState::new();
            for t in linspace(a, b, n) {
                let r = hardy::r_function(t, &mut st)?;
                let g = laplacian::g_function(Complex64::new(t, 0.0))?;
                rows.push(format!(
                    "{},{},{},{}",
                    output::csv_f64(t),
                    output::csv_f64(r.re),
                    output::csv_f64(r.im),
                    output::csv_f64(g.re)
                ));
            }
        }
        2 => {
            let (a, b) = (from.unwrap_or(10.0), to.unwrap_or(30.0));
            let n = grid.unwrap_or(2000);
            rows.push("t,g,h,hdot".to_string());
            for t in linspace(a, b, n) {
                let z = Complex64::new(t, 0.0);
                rows.push(format!(
                    "{},{},{},{}",
                    output::csv_f64(t),
                    output::csv_f64(laplacian::g_function(z)?.re),
                    output::csv_f64(laplacian::h_function(z)?.re),
                    output::csv_f64(laplacian::h_dot(z)?.re)
                ));
            }
        }
        3 => {
            let n = grid.unwrap_or(401);
            let nu_half = laplacian::nu(Complex64::new(0.5, 0.0))?.re;
            let mut header = "t,nu_norm,sin2,diff".to_string();
            for fam in ns {
                header.push_str(&format!(",nu{fam}_scaled,chi{fam}"));
            }
            rows.push(header);
            let scale = std::f64::consts::PI / 8.0;
            for t in linspace(from.unwrap_or(0.0), to.unwrap_or(1.0), n) {
                let nu_norm = laplacian::nu(Complex64::new(t, 0.0))?.re / nu_half;
                let sin2 = laplacian::nu_limit(t);
                let mut row = format!(
                    "{},{},{},{}",
                    output::csv_f64(t),
                    output::csv_f64(nu_norm),
                    output::csv_f64(sin2),
                    output::csv_f64(sin2 - nu_norm)
                );
                for &fam in ns {
                    row.push_str(&format!(
                        ",{},{}",
                        output::csv_f64(scale * laplacian::nu_n(fam as i32, t)?),
                        output::csv_f64(laplacian::chi_n(fam as i32, t)?)
                    ));
                }
                rows.push(row);
            }
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown figure: {other} (use 1, 2 or 3)"
            )))
        }
    }
    let mut text = rows.join("\n");
    text.push('\n');
    std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(0)
}
