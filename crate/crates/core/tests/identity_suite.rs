//! The full identity catalog at suite scale: n ≤ 12 over the default grid.

use dowling_core::dowling::{check_dowling_identities, DowlingIdentity};
use dowling_core::gbell::{check_bell_identities, BellIdentity};
use dowling_core::gstirling::check_unfair_identities;
use dowling_core::report::{GridConfig, Verdict};

#[test]
fn bell_catalog_passes_at_full_scale() {
    let report = check_bell_identities(&BellIdentity::ALL, &GridConfig::default());
    for check in &report.checks {
        assert_eq!(
            check.verdict(),
            Verdict::Pass,
            "{}: {:?}",
            check.id,
            check.mismatches.first()
        );
        assert!(check.cells > 0);
    }
}

#[test]
fn dowling_catalog_passes_at_full_scale_with_d9_recorded() {
    let report = check_dowling_identities(&DowlingIdentity::ALL, &GridConfig::default());
    for check in &report.checks {
        if check.flagged {
            continue;
        }
        assert_eq!(
            check.verdict(),
            Verdict::Pass,
            "{}: {:?}",
            check.id,
            check.mismatches.first()
        );
    }
    let d9 = report.find("D9").unwrap();
    assert!(d9.flagged);
    assert_eq!(d9.verdict(), Verdict::Mismatch);
    // grid consistency: every D9 residual is exactly r(l-1)D(n)
    assert_eq!(
        report.find("D9-consistency").unwrap().verdict(),
        Verdict::Pass
    );
    // the mismatch set is exactly the r >= 1 portion of the grid
    assert!(d9
        .mismatches
        .iter()
        .all(|cell| !cell.params.contains("r=0")));
    assert!(report.all_unflagged_pass());
}

#[test]
fn unfair_identities_pass_over_the_grid() {
    for alpha in 0..=2i64 {
        for m in 1..=3i64 {
            for r in 0..=2i64 {
                let report = check_unfair_identities(12, alpha, m, r).unwrap();
                assert!(
                    report.all_unflagged_pass(),
                    "unfair at (alpha={alpha}, m={m}, r={r})"
                );
            }
        }
    }
}

#[test]
fn empty_grid_yields_an_empty_passing_report() {
    let grid = GridConfig {
        ms: vec![],
        ..GridConfig::default()
    };
    let report = check_dowling_identities(&DowlingIdentity::ALL, &grid);
    assert!(report.all_unflagged_pass());
    for check in &report.checks {
        assert_eq!(check.cells, 0);
    }
}
