//! Full-interval sweep checks: completeness against the counting formula,
//! agreement with the published table, alternation, and determinism across
//! worker counts.

mod common;

use common::published_zeros;
use zetalap::hardy::{backlund_n, UnwindState};
use zetalap::laplacian::ExtremumKind;
use zetalap::zeros::{crosscheck_minima, sweep, SweepConfig};

fn minima_of(records: &[zetalap::zeros::ZeroRecord]) -> Vec<f64> {
    records
        .iter()
        .filter(|r| r.point.kind == ExtremumKind::ZetaZeroMinimum)
        .map(|r| r.point.t)
        .collect()
}

#[test]
fn sweep_to_100_finds_all_29_zeros() {
    let cfg = SweepConfig {
        workers: 4,
        ..SweepConfig::new(0.0, 100.0)
    };
    let out = sweep(&cfg).unwrap();
    assert!(
        out.excluded.is_empty(),
        "unexpected excluded bands: {:?}",
        out.excluded
    );
    for r in &out.records {
        assert!(r.note.is_none(), "flagged record: {:?}", r);
    }

    let minima = minima_of(&out.records);
    assert_eq!(minima.len(), 29, "minima found: {minima:?}");

    // Records strictly ascending with disjoint brackets, kinds alternating.
    for pair in out.records.windows(2) {
        assert!(pair[0].point.t < pair[1].point.t);
        assert!(pair[0].bracket.1 <= pair[1].bracket.0 + 1e-12);
        assert_ne!(pair[0].point.kind, pair[1].point.kind);
    }

    // Each minimum coincides with a Z sign change.
    for r in &out.records {
        if r.point.kind == ExtremumKind::ZetaZeroMinimum {
            let d = r.z_signchange_match.expect("minimum has a Z match");
            assert!(d <= 1e-6, "Z match distance {d} at t = {}", r.point.t);
        }
    }

    // And with the published table.
    let table = published_zeros();
    for (idx, dist) in crosscheck_minima(&out.records, &table) {
        assert!(dist <= 1e-5, "record {idx}: distance to table {dist}");
    }

    // Counting consistency at T in {30, 60, 100}.
    let mut st = UnwindState::new();
    for t_end in [30.0, 60.0, 100.0] {
        let n = backlund_n(t_end, &mut st).unwrap();
        let count = minima.iter().filter(|&&z| z < t_end).count() as f64;
        assert!(
            (n - count).abs() <= 1e-6,
            "N({t_end}) = {n} vs sweep count {count}"
        );
    }
}

#[test]
fn sweep_is_deterministic_across_worker_counts() {
    let base = SweepConfig::new(10.0, 44.0);
    let one = sweep(&SweepConfig {
        workers: 1,
        ..base.clone()
    })
    .unwrap();
    let eight = sweep(&SweepConfig { workers: 8, ..base }).unwrap();
    assert_eq!(one.records.len(), eight.records.len());
    for (a, b) in one.records.iter().zip(eight.records.iter()) {
        assert_eq!(
            a.point.t.to_bits(),
            b.point.t.to_bits(),
            "t differs at {}",
            a.index
        );
        assert_eq!(a.point.kind, b.point.kind);
        assert_eq!(a.point.hdot.to_bits(), b.point.hdot.to_bits());
        assert_eq!(a.bracket.0.to_bits(), b.bracket.0.to_bits());
        assert_eq!(a.index, b.index);
    }
}
