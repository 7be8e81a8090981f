//! Enumeration oracles vs the algebraic routes on their full exhaustive
//! ranges.

use dowling_core::dowling::{dowling_poly, DowlingParams};
use dowling_core::exact::{int, to_integer, Integer};
use dowling_core::gstirling::{gstirling_table, special_case, GStirlingParams, SpecialKind};
use dowling_core::hurwitz::HurwitzSeries;
use dowling_core::oracle;

#[test]
fn stirling2_matches_set_partition_enumeration_to_n_10() {
    let table = gstirling_table(&GStirlingParams::from_i64(0, 1, 0).unwrap(), 10);
    for n in 0..=10u32 {
        let mut by_blocks = vec![Integer::from(0); n as usize + 1];
        for p in oracle::enum_set_partitions(n).unwrap() {
            by_blocks[p.num_blocks()] += 1;
        }
        for k in 0..=n {
            assert_eq!(
                table.value(n, k as i64),
                by_blocks[k as usize],
                "S({n},{k})"
            );
        }
    }
}

#[test]
fn stirling2_row_sums_are_bell_numbers() {
    let table = gstirling_table(&GStirlingParams::from_i64(0, 1, 0).unwrap(), 10);
    for n in 0..=10u32 {
        let row_sum: Integer = (0..=n).map(|k| table.value(n, k as i64)).sum();
        let bell = Integer::from(oracle::enum_set_partitions(n).unwrap().count() as i64);
        assert_eq!(row_sum, bell, "row {n}");
    }
}

#[test]
fn rwhitney_special_case_matches_colored_partition_oracle() {
    for beta in 1..=3i64 {
        for r in 0..=2i64 {
            let kind = SpecialKind::RWhitney { beta, r };
            for n in 0..=7u32 {
                for k in 0..=n {
                    let algebraic = special_case(&kind, n, k as i64);
                    let counted = oracle::count_rwhitney(n, k, beta, r).unwrap();
                    assert_eq!(algebraic, counted, "W_{{{beta},{r}}}({n},{k})");
                }
            }
        }
    }
}

#[test]
fn dowling_matches_weighted_partition_oracle() {
    for m in 1..=3i64 {
        for r in 0..=2i64 {
            let params = DowlingParams::from_i64(m, r, 0).unwrap();
            for n in 0..=7u32 {
                let poly = dowling_poly(n, &params);
                for x0 in 1..=3i64 {
                    for l0 in 1..=3i64 {
                        let algebraic = poly.eval(&int(x0), &int(l0));
                        let counted = oracle::count_rmxl(n, m, r, x0, l0).unwrap();
                        assert_eq!(algebraic, counted, "D({n}) at (m={m},r={r},x={x0},l={l0})");
                    }
                }
            }
        }
    }
}

#[test]
fn bpa_enumeration_matches_generating_function() {
    for bars in 0..=4u32 {
        let series = HurwitzSeries::bpa(bars, 8);
        for n in 0..=8u32 {
            let coeff = to_integer(series.coeff(n as usize).unwrap(), "bpa").unwrap();
            let counted = oracle::enum_bpa_count(n, bars).unwrap();
            assert_eq!(coeff, counted, "P({n},{bars})");
        }
    }
}

#[test]
fn bpa_closed_form_adjudication_records_the_printed_mismatch() {
    let adj = oracle::bpa_eq2_adjudication(8, 4).unwrap();
    assert!(
        adj.finding.contains("printed C(l+k-1,k) reading: MISMATCH"),
        "{}",
        adj.finding
    );
    assert!(adj.finding.contains("corrected C(l+k,k) reading matches"));
    assert!(adj.finding.ends_with("PASS"));
    assert_eq!(adj.evidence.len(), 1);
}
