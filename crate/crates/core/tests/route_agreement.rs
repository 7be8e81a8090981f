//! The three independent routes to S(n,k;α,β,r) (recurrence, explicit
//! alternating sum, EGF coefficients) agree exactly for n ≤ 16 over the
//! full parameter grid, and the Dowling routes agree at integer points.

use dowling_core::dowling::{dowling_poly, dowling_via_egf, DowlingParams};
use dowling_core::exact::int;
use dowling_core::gbell::{bell_egf_values, gbell_poly};
use dowling_core::gstirling::{
    gstirling_explicit, gstirling_table, gstirling_via_egf, stirling2_via_egf, GStirlingParams,
};

const N_MAX: u32 = 16;

#[test]
fn recurrence_explicit_and_egf_agree_on_the_full_grid() {
    for alpha in 0..=2i64 {
        for beta in 1..=3i64 {
            for r in 0..=2i64 {
                let params = GStirlingParams::from_i64(alpha, beta, r).unwrap();
                let table = gstirling_table(&params, N_MAX);
                for k in 0..=N_MAX {
                    let egf = gstirling_via_egf(&params, k, N_MAX).unwrap();
                    for n in 0..=N_MAX {
                        let by_table = table.value(n, k as i64);
                        let by_explicit = gstirling_explicit(n, k, &params).unwrap();
                        assert_eq!(by_table, by_explicit, "explicit ({n},{k},{params})");
                        assert_eq!(by_table, egf[n as usize], "egf ({n},{k},{params})");
                    }
                }
            }
        }
    }
}

#[test]
fn stirling2_egf_reproduces_the_triangle() {
    // Hurwitz coefficients of (e^z-1)^k / k!
    let table = gstirling_table(&GStirlingParams::from_i64(0, 1, 0).unwrap(), 12);
    for k in 0..=6u32 {
        let seq = stirling2_via_egf(k, 12).unwrap();
        for n in 0..=12u32 {
            assert_eq!(seq[n as usize], table.value(n, k as i64), "S({n},{k})");
        }
    }
}

#[test]
fn dowling_routes_agree_at_integer_points() {
    for m in 1..=3i64 {
        for r in 0..=2i64 {
            for alpha in 0..=2i64 {
                let params = DowlingParams::from_i64(m, r, alpha).unwrap();
                let polys: Vec<_> = (0..=N_MAX).map(|n| dowling_poly(n, &params)).collect();
                for x0 in 0..=3i64 {
                    for l0 in 0..=3i64 {
                        let seq = dowling_via_egf(N_MAX, &params, &int(x0), &int(l0)).unwrap();
                        for n in 0..=N_MAX {
                            assert_eq!(
                                seq[n as usize],
                                polys[n as usize].eval(&int(x0), &int(l0)),
                                "D({n}) at {params}, x={x0}, l={l0}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn bell_egf_consistency_at_specialized_x() {
    for alpha in 0..=2i64 {
        for beta in 1..=3i64 {
            for r in 0..=2i64 {
                let params = GStirlingParams::from_i64(alpha, beta, r).unwrap();
                for x0 in 0..=4i64 {
                    let seq = bell_egf_values(16, &params, &int(x0)).unwrap();
                    for n in 0..=16u32 {
                        assert_eq!(
                            seq[n as usize],
                            gbell_poly(n, &params).eval(&int(x0)),
                            "B({n}) at {params}, x={x0}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn polynomial_coefficients_match_the_triangles() {
    for alpha in 0..=2i64 {
        for beta in 1..=3i64 {
            for r in 0..=2i64 {
                let sp = GStirlingParams::from_i64(alpha, beta, r).unwrap();
                let dp = DowlingParams::from_i64(beta, r, alpha).unwrap();
                let table = gstirling_table(&sp, 12);
                for n in 0..=12u32 {
                    let bell = gbell_poly(n, &sp);
                    let dowl = dowling_poly(n, &dp);
                    assert!(bell.poly.total_degree() <= n);
                    for k in 0..=n {
                        assert_eq!(bell.coeff(k), table.value(n, k as i64));
                        assert_eq!(dowl.poly.coeff(k, k), table.value(n, k as i64));
                    }
                }
            }
        }
    }
}
