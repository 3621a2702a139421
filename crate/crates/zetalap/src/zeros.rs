//! Root location and classification for H on a real interval.
//!
//! The sweep walks a fixed coarse grid, brackets every sign change of H,
//! refines each bracket with a safeguarded Brent iteration, and classifies
//! the root by the sign of H': positive marks a minimum of G coinciding
//! with a critical-line zeta zero, negative marks the maximum midway
//! between consecutive zeros.
//!
//! Parallelism is deterministic: grid cells are partitioned into worker
//! chunks by index, every evaluation is a pure function, and results are
//! concatenated in chunk order, so the output is bit-identical for any
//! worker count.

use crate::laplacian::{h_and_hdot, ClassifiedPoint, ExtremumKind};
use crate::{c64, hardy, Error, Result};
use std::io::BufRead;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub t_min: f64,
    pub t_max: f64,
    /// Grid spacing for sign-change detection; must stay below the minimum
    /// observed root gap at desk heights.
    pub coarse_step: f64,
    /// Bracket width at which refinement stops.
    pub refine_tol: f64,
    pub workers: usize,
    /// Exclusion radius reported around detected G-singularities.
    pub guard_band: f64,
}

impl SweepConfig {
    pub fn new(t_min: f64, t_max: f64) -> Self {
        SweepConfig {
            t_min,
            t_max,
            coarse_step: 0.05,
            refine_tol: 1e-10,
            workers: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
            guard_band: 0.01,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_min < self.t_max) {
            return Err(Error::Usage(format!(
                "sweep interval must satisfy t_min < t_max, got [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        if self.t_max > 200.0 || self.t_min < 0.0 {
            return Err(Error::Domain(
                "sweep interval must lie inside [0, 200]".into(),
            ));
        }
        if !(self.coarse_step > 0.0 && self.coarse_step < 0.5) {
            return Err(Error::Config("coarse_step must be in (0, 0.5)".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be positive".into()));
        }
        Ok(())
    }
}

/// One refined, classified root of H.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct ZeroRecord {
    /// Ordinal within the sweep (0-based, ascending t).
    pub index: usize,
    #[serde(flatten)]
    pub point: ClassifiedPoint,
    /// Bracket the root was refined from.
    pub bracket: (f64, f64),
    /// Distance to the nearest Z sign change (minima only).
    pub z_signchange_match: Option<f64>,
    /// Set when refinement or classification degraded; never silently dropped.
    pub note: Option<String>,
}

/// Sweep result: records plus any sub-intervals excluded around evaluation
/// singularities.
#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub records: Vec<ZeroRecord>,
    pub excluded: Vec<(f64, f64)>,
}

/// H(t) with local step-shrink retries (factor 4, at most 3 times) so an
/// isolated evaluation failure does not abort a whole chunk.
fn h_resilient(t: f64, step: f64) -> Option<(f64, f64)> {
    if let Ok(v) = h_value(t) {
        return Some((t, v));
    }
    let mut offset = step / 4.0;
    for _ in 0..3 {
        for cand in [t + offset, t - offset] {
            if let Ok(v) = h_value(cand) {
                return Some((cand, v));
            }
        }
        offset /= 4.0;
    }
    None
}

fn h_value(t: f64) -> Result<f64> {
    Ok(crate::laplacian::h_function(c64(t, 0.0))?.re)
}

/// Refine a sign-change bracket of H to a root, Brent-style: bisection
/// safeguards with secant/inverse-quadratic steps accepted only inside the
/// bracket.
pub fn refine_root(lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::Usage(format!(
            "refine_root: invalid bracket [{lo}, {hi}]"
        )));
    }
    let f = |x: f64| h_value(x);
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::Usage(format!(
            "refine_root: no sign change on [{lo}, {hi}] (H = {fa}, {fb})"
        )));
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b)?;
    }
    Err(Error::NonConvergence(format!(
        "refine_root: no convergence on [{lo}, {hi}]"
    )))
}

/// Classify a root of H by the sign of H'. Errors if |H| is not small
/// (precondition: the point is a root) or H' is degenerate.
pub fn classify(t: f64) -> Result<ClassifiedPoint> {
    let (h, hdot) = h_and_hdot(t)?;
    if h.abs() > 1e-3 * (1.0 + hdot.abs()) {
        return Err(Error::Usage(format!(
            "classify: |H({t})| = {} is not at root scale",
            h.abs()
        )));
    }
    if hdot.abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "classify: degenerate critical point at t = {t} (H' ~ 0)"
        )));
    }
    let kind = if hdot > 0.0 {
        ExtremumKind::ZetaZeroMinimum
    } else {
        ExtremumKind::MidpointMaximum
    };
    Ok(ClassifiedPoint {
        t,
        kind,
        h_residual: h.abs(),
        hdot,
    })
}

/// Locate the Z sign change nearest to a refined minimum and return the
/// distance. The bisection uses the independent Z route, not H.
fn z_signchange_distance(t: f64) -> Option<f64> {
    let w = 0.02;
    let mut lo = t - w;
    let mut hi = t + w;
    let mut flo = hardy::hardy_z_real(lo).ok()?;
    let fhi = hardy::hardy_z_real(hi).ok()?;
    if flo * fhi > 0.0 {
        return None;
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        let fm = hardy::hardy_z_real(mid).ok()?;
        if flo * fm <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    Some((0.5 * (lo + hi) - t).abs())
}

struct ChunkResult {
    records: Vec<(f64, ZeroRecordSeed)>,
    excluded: Vec<(f64, f64)>,
}

struct ZeroRecordSeed {
    point: ClassifiedPoint,
    bracket: (f64, f64),
    note: Option<String>,
}

fn scan_cells(cfg: &SweepConfig, cell_lo: usize, cell_hi: usize) -> ChunkResult {
    let mut out = ChunkResult {
        records: Vec::new(),
        excluded: Vec::new(),
    };
    let step = cfg.coarse_step;
    let mut prev: Option<(f64, f64)> = None;
    for cell in cell_lo..cell_hi {
        // Canonical grid coordinates: identical bits for any chunking.
        let t0 = cfg.t_min + step * cell as f64;
        let t1 = (cfg.t_min + step * (cell + 1) as f64).min(cfg.t_max);
        let left = match prev {
            Some(p) if p.0 == t0 => Some(p),
            _ => h_resilient(t0, step),
        };
        let right = h_resilient(t1, step);
        prev = right;
        let (Some((ta, ha)), Some((tb, hb))) = (left, right) else {
            out.excluded
                .push((t0 - cfg.guard_band, t1 + cfg.guard_band));
            continue;
        };
        if ha == 0.0 || ha.signum() == hb.signum() {
            continue;
        }
        let seed = match refine_root(ta, tb, cfg.refine_tol) {
            Ok(root) => match classify(root) {
                Ok(point) => ZeroRecordSeed {
                    point,
                    bracket: (ta, tb),
                    note: None,
                },
                Err(e) => ZeroRecordSeed {
                    point: ClassifiedPoint {
                        t: root,
                        kind: ExtremumKind::MidpointMaximum,
                        h_residual: f64::NAN,
                        hdot: f64::NAN,
                    },
                    bracket: (ta, tb),
                    note: Some(format!("unclassified: {e}")),
                },
            },
            Err(e) => ZeroRecordSeed {
                point: ClassifiedPoint {
                    t: 0.5 * (ta + tb),
                    kind: ExtremumKind::MidpointMaximum,
                    h_residual: f64::NAN,
                    hdot: f64::NAN,
                },
                bracket: (ta, tb),
                note: Some(format!("refinement failed: {e}")),
            },
        };
        out.records.push((seed.point.t, seed));
    }
    out
}

/// Sweep the configured interval: bracket, refine, classify and cross-match
/// every root of H.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    cfg.validate()?;
    let cells = ((cfg.t_max - cfg.t_min) / cfg.coarse_step).ceil() as usize;
    let workers = cfg.workers.min(cells.max(1));
    let chunk = cells.div_ceil(workers);

    let chunks: Vec<ChunkResult> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(cells);
            if lo >= hi {
                continue;
            }
            let cfg_ref = &*cfg;
            handles.push(scope.spawn(move || scan_cells(cfg_ref, lo, hi)));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });

    let mut outcome = SweepOutcome::default();
    let mut seeds: Vec<(f64, ZeroRecordSeed)> = Vec::new();
    for c in chunks {
        seeds.extend(c.records);
        outcome.excluded.extend(c.excluded);
    }
    seeds.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("non-finite root"));
    seeds.dedup_by(|a, b| (a.0 - b.0).abs() <= cfg.refine_tol);

    for (i, (_, seed)) in seeds.into_iter().enumerate() {
        let z_match = if seed.note.is_none() && seed.point.kind == ExtremumKind::ZetaZeroMinimum {
            z_signchange_distance(seed.point.t)
        } else {
            None
        };
        outcome.records.push(ZeroRecord {
            index: i,
            point: seed.point,
            bracket: seed.bracket,
            z_signchange_match: z_match,
            note: seed.note,
        });
    }
    Ok(outcome)
}

/// Parse a published-zeros file: one decimal ordinate per line, `#` starts
/// a comment.
pub fn read_zeros_file(path: &std::path::Path) -> Result<Vec<f64>> {
    let file =
        std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::Io(e.to_string()))?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let v: f64 = body.parse().map_err(|_| {
            Error::Io(format!(
                "{}:{}: not a number: {body}",
                path.display(),
                lineno + 1
            ))
        })?;
        out.push(v);
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(out)
}

/// Distance from every minimum record to the nearest published ordinate.
/// Mismatches are reported, never fatal.
pub fn crosscheck_minima(records: &[ZeroRecord], published: &[f64]) -> Vec<(usize, f64)> {
    records
        .iter()
        .filter(|r| r.point.kind == ExtremumKind::ZetaZeroMinimum && r.note.is_none())
        .map(|r| {
            let nearest = published
                .iter()
                .map(|z| (z - r.point.t).abs())
                .fold(f64::INFINITY, f64::min);
            (r.index, nearest)
        })
        .collect()
}
