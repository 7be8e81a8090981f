//! `dowling-kit`: tables, identity reports, oracle diffs, asymptotic and
//! quadrature reports over the exact Dowling-polynomial toolkit.
//!
//! Every command is deterministic: no randomness, ordered grids, fixed
//! formatting. Identical invocations produce byte-identical output.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use dowling_core::asymptotics;
use dowling_core::dowling::{
    check_dowling_identities, dowling_poly, DowlingIdentity, DowlingParams,
};
use dowling_core::exact::int;
use dowling_core::gbell::{check_bell_identities, gbell_poly, BellIdentity};
use dowling_core::gstirling::{
    check_unfair_identities, gstirling_table, rstirling_sign_adjudication,
    rwhitney_sign_adjudication, special_case, GStirlingParams, SpecialKind,
};
use dowling_core::hurwitz::HurwitzSeries;
use dowling_core::oracle;
use dowling_core::quadrature;
use dowling_core::report::{GridConfig, IdentityReport};
use output::{emit, json_string, Format, Table};

#[derive(Parser)]
#[command(
    name = "dowling-kit",
    version,
    about = "Exact generalized Stirling numbers, Bell polynomials and higher-order r-Dowling \
             polynomials: tables, identity reports, oracle diffs, asymptotics, quadrature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Maximum n (per-command default applies when omitted)
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    /// Comma-separated values of the block parameter m (beta)
    #[arg(long, value_delimiter = ',', num_args = 0.., allow_negative_numbers = true)]
    m: Option<Vec<i64>>,
    /// Comma-separated values of r
    #[arg(long, value_delimiter = ',', num_args = 0.., allow_negative_numbers = true)]
    r: Option<Vec<i64>>,
    /// Comma-separated degeneracy values alpha (0 = non-degenerate)
    #[arg(long, value_delimiter = ',', num_args = 0.., allow_negative_numbers = true)]
    alpha: Option<Vec<i64>>,
    /// Comma-separated x evaluation points
    #[arg(long, value_delimiter = ',', num_args = 0.., allow_negative_numbers = true)]
    x: Option<Vec<i64>>,
    /// Comma-separated lambda values
    #[arg(long = "lambda", value_delimiter = ',', num_args = 0.., allow_negative_numbers = true)]
    lambda: Option<Vec<i64>>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn grid(&self, n_max_default: u32) -> GridConfig {
        let d = GridConfig::default();
        GridConfig {
            n_max: self.n_max.unwrap_or(n_max_default),
            ms: self.m.clone().unwrap_or(d.ms),
            rs: self.r.clone().unwrap_or(d.rs),
            alphas: self.alpha.clone().unwrap_or(d.alphas),
            xs: self.x.clone().unwrap_or(d.xs),
            lambdas: self.lambda.clone().unwrap_or(d.lambdas),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Gstirling,
    Gbell,
    Dowling,
    Bpa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bell,
    Dowling,
    Unfair,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Render a value table for one polynomial family
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        /// Bar counts for the bpa table
        #[arg(long, value_delimiter = ',')]
        bars: Option<Vec<u32>>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run an identity suite; exit 0 iff every non-flagged identity passes
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Asymptotic estimates against exact Hurwitz-power references
    Asymptotic {
        /// Largest number of correction terms minus one
        #[arg(long = "e-max", default_value_t = 4)]
        e_max: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Validate the integral representations by quadrature
    Quad {
        /// Base node count (doubled once for the error estimate)
        #[arg(long, default_value_t = 256)]
        nodes: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Diff algebraic routes against enumeration oracles; exit 0 iff all-zero
    OracleDiff {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Table { kind, bars, common } => cmd_table(kind, bars, &common),
        Command::Check { suite, common } => cmd_check(suite, &common),
        Command::Asymptotic { e_max, common } => cmd_asymptotic(e_max, &common),
        Command::Quad { nodes, common } => cmd_quad(nodes, &common),
        Command::OracleDiff { common } => cmd_oracle_diff(&common),
    }
}

fn render(common: &CommonArgs, table: &Table, json_value: serde_json::Value) -> Result<()> {
    let content = match common.format {
        Format::Csv => table.to_csv(),
        Format::Pretty => table.to_pretty(),
        Format::Json => json_string(&json_value),
    };
    emit(common.out.as_deref(), &content)
}

fn table_rows_json(table: &Table) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: serde_json::Map<String, serde_json::Value> = table
                .headers
                .iter()
                .zip(row)
                .map(|(h, v)| (h.to_string(), json!(v)))
                .collect();
            serde_json::Value::Object(obj)
        })
        .collect();
    json!(rows)
}

fn cmd_table(kind: TableKind, bars: Option<Vec<u32>>, common: &CommonArgs) -> Result<u8> {
    let grid = common.grid(8);
    let mut table;
    match kind {
        TableKind::Gstirling => {
            table = Table::new(vec!["alpha", "beta", "r", "n", "k", "value"]);
            for &a in &grid.alphas {
                for &b in &grid.ms {
                    for &r in &grid.rs {
                        let params = GStirlingParams::from_i64(a, b, r)?;
                        let t = gstirling_table(&params, grid.n_max);
                        for n in 0..=grid.n_max {
                            for k in 0..=n {
                                table.push(vec![
                                    a.to_string(),
                                    b.to_string(),
                                    r.to_string(),
                                    n.to_string(),
                                    k.to_string(),
                                    t.value(n, k as i64).to_string(),
                                ]);
                            }
                        }
                    }
                }
            }
        }
        TableKind::Gbell => {
            table = Table::new(vec!["alpha", "beta", "r", "n", "poly"]);
            for &a in &grid.alphas {
                for &b in &grid.ms {
                    for &r in &grid.rs {
                        let params = GStirlingParams::from_i64(a, b, r)?;
                        for n in 0..=grid.n_max {
                            table.push(vec![
                                a.to_string(),
                                b.to_string(),
                                r.to_string(),
                                n.to_string(),
                                gbell_poly(n, &params).poly.render(),
                            ]);
                        }
                    }
                }
            }
        }
        TableKind::Dowling => {
            table = Table::new(vec!["m", "r", "alpha", "n", "poly"]);
            for &m in &grid.ms {
                for &r in &grid.rs {
                    for &a in &grid.alphas {
                        let params = DowlingParams::from_i64(m, r, a)?;
                        for n in 0..=grid.n_max {
                            table.push(vec![
                                m.to_string(),
                                r.to_string(),
                                a.to_string(),
                                n.to_string(),
                                dowling_poly(n, &params).poly.render(),
                            ]);
                        }
                    }
                }
            }
        }
        TableKind::Bpa => {
            table = Table::new(vec!["bars", "n", "count"]);
            let bars = bars.unwrap_or_else(|| vec![0]);
            for &l in &bars {
                let series = HurwitzSeries::bpa(l, grid.n_max as usize);
                for n in 0..=grid.n_max {
                    let v =
                        dowling_core::exact::to_integer(series.coeff(n as usize)?, "bpa table")?;
                    table.push(vec![l.to_string(), n.to_string(), v.to_string()]);
                }
            }
        }
    }
    let json_value = json!({
        "schema": "1",
        "command": "table",
        "kind": format!("{kind:?}").to_lowercase(),
        "rows": table_rows_json(&table),
    });
    render(common, &table, json_value)?;
    Ok(0)
}

/// Aggregate the per-point unfair reports into one two-row report.
fn unfair_report(grid: &GridConfig) -> Result<IdentityReport> {
    let mut agg: Option<IdentityReport> = None;
    if grid.n_max == 0 {
        return Ok(IdentityReport::default());
    }
    for &a in &grid.alphas {
        for &m in &grid.ms {
            for &r in &grid.rs {
                let rep = check_unfair_identities(grid.n_max, a, m, r)?;
                match agg {
                    None => agg = Some(rep),
                    Some(ref mut base) => {
                        for (bc, rc) in base.checks.iter_mut().zip(rep.checks) {
                            bc.cells += rc.cells;
                            bc.mismatches.extend(rc.mismatches);
                        }
                    }
                }
            }
        }
    }
    Ok(agg.unwrap_or_default())
}

fn cmd_check(suite: Suite, common: &CommonArgs) -> Result<u8> {
    let grid = common.grid(12);
    if let Some(m) = grid.ms.iter().find(|&&m| m < 1) {
        anyhow::bail!("check requires m >= 1, got m = {m}");
    }
    if let Some(r) = grid.rs.iter().find(|&&r| r < 0) {
        anyhow::bail!("check requires r >= 0, got r = {r}");
    }
    if let Some(a) = grid.alphas.iter().find(|&&a| a < 0) {
        anyhow::bail!("check requires alpha >= 0, got alpha = {a}");
    }
    let mut report = IdentityReport::default();
    if matches!(suite, Suite::Bell | Suite::All) {
        report.merge(check_bell_identities(&BellIdentity::ALL, &grid));
    }
    if matches!(suite, Suite::Dowling | Suite::All) {
        report.merge(check_dowling_identities(&DowlingIdentity::ALL, &grid));
    }
    if matches!(suite, Suite::Unfair | Suite::All) {
        report.merge(unfair_report(&grid)?);
        report
            .adjudications
            .push(rstirling_sign_adjudication(grid.n_max.min(6)));
        report.adjudications.push(rwhitney_sign_adjudication());
    }
    if matches!(suite, Suite::All) {
        report
            .adjudications
            .push(oracle::bpa_eq2_adjudication(8, 4)?);
        report
            .adjudications
            .push(asymptotics::w_transcription_adjudication(10));
        report
            .adjudications
            .push(quadrature::integrand_adjudication());
    }

    let mut table = Table::new(vec![
        "record", "id", "verdict", "flagged", "cells", "detail",
    ]);
    for check in &report.checks {
        let detail = check
            .mismatches
            .first()
            .map(|mm| format!("first mismatch at n={} {}", mm.n, mm.params))
            .unwrap_or_default();
        table.push(vec![
            "check".to_string(),
            check.id.clone(),
            check.verdict().to_string(),
            check.flagged.to_string(),
            check.cells.to_string(),
            detail.replace(',', ";"),
        ]);
    }
    for adj in &report.adjudications {
        let summary = adj
            .finding
            .split([':', ' '])
            .next()
            .unwrap_or("")
            .to_string();
        table.push(vec![
            "adjudication".to_string(),
            adj.id.clone(),
            summary,
            "true".to_string(),
            adj.evidence.len().to_string(),
            String::new(),
        ]);
    }

    let suite_name = format!("{suite:?}").to_lowercase();
    let json_value = json!({
        "schema": "1",
        "command": "check",
        "suite": suite_name,
        "grid": {
            "n_max": grid.n_max,
            "m": grid.ms,
            "r": grid.rs,
            "alpha": grid.alphas,
            "x": grid.xs,
            "lambda": grid.lambdas,
        },
        "checks": report.checks.iter().map(|c| json!({
            "id": c.id,
            "statement": c.statement,
            "flagged": c.flagged,
            "verdict": c.verdict().to_string(),
            "cells": c.cells,
            "mismatches": c.mismatches.iter().map(|mm| json!({
                "n": mm.n,
                "params": mm.params,
                "residual": mm.residual,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "adjudications": report.adjudications.iter().map(|a| json!({
            "id": a.id,
            "finding": a.finding,
            "evidence": a.evidence,
        })).collect::<Vec<_>>(),
        "all_unflagged_pass": report.all_unflagged_pass(),
    });
    render(common, &table, json_value)?;
    Ok(if report.all_unflagged_pass() { 0 } else { 1 })
}

fn cmd_asymptotic(e_max: u32, common: &CommonArgs) -> Result<u8> {
    let mut grid = common.grid(5);
    if common.m.is_none() {
        grid.ms = vec![1];
    }
    if common.r.is_none() {
        grid.rs = vec![0];
    }
    if common.alpha.is_none() {
        grid.alphas = vec![0];
    }
    if common.x.is_none() {
        grid.xs = vec![1];
    }
    if common.lambda.is_none() {
        grid.lambdas = vec![100, 1000, 10000];
    }
    let mut table = Table::new(vec![
        "m",
        "r",
        "alpha",
        "x",
        "n",
        "lambda",
        "e_max",
        "estimate",
        "exact",
        "rel_error",
    ]);
    for &m in &grid.ms {
        for &r in &grid.rs {
            for &a in &grid.alphas {
                for &x0 in &grid.xs {
                    let params = DowlingParams::from_i64(m, r, a)?;
                    for n in 0..=grid.n_max {
                        for &lam in &grid.lambdas {
                            if lam <= n as i64 {
                                continue;
                            }
                            for e in 0..=e_max {
                                let est = asymptotics::dowling_asymptotic(
                                    n,
                                    lam as u64,
                                    e,
                                    &params,
                                    &int(x0),
                                )?;
                                table.push(vec![
                                    m.to_string(),
                                    r.to_string(),
                                    a.to_string(),
                                    x0.to_string(),
                                    n.to_string(),
                                    lam.to_string(),
                                    e.to_string(),
                                    est.value_decimal.clone(),
                                    est.exact_decimal.clone(),
                                    est.rel_error_decimal.clone(),
                                ]);
                            }
                        }
                    }
                }
            }
        }
    }
    let json_value = json!({
        "schema": "1",
        "command": "asymptotic",
        "note": asymptotics::lambda_role_note(),
        "rows": table_rows_json(&table),
    });
    render(common, &table, json_value)?;
    Ok(0)
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.12e}")
}

fn cmd_quad(nodes: usize, common: &CommonArgs) -> Result<u8> {
    let mut grid = common.grid(8);
    if grid.n_max > 12 {
        anyhow::bail!("quad n-max {} exceeds the quadrature cap 12", grid.n_max);
    }
    if common.m.is_none() {
        grid.ms = vec![1, 2];
    }
    if common.r.is_none() {
        grid.rs = vec![0, 1];
    }
    if common.x.is_none() {
        grid.xs = vec![1, 2];
    }
    if common.lambda.is_none() {
        grid.lambdas = vec![1];
    }
    let mut table = Table::new(vec![
        "kind",
        "j",
        "n",
        "x",
        "lambda",
        "m",
        "r",
        "nodes",
        "value",
        "exact",
        "rel_error",
        "est_abs_error",
    ]);
    let rel = |value: f64, exact: f64| {
        if exact == 0.0 {
            value.abs()
        } else {
            ((value - exact) / exact).abs()
        }
    };
    for j in 0..=6u32 {
        for n in 1..=grid.n_max.min(8) {
            let q = quadrature::casado_check_with_nodes(j, n, nodes)?;
            let exact = quadrature::casado_exact(j, n);
            table.push(vec![
                "casado".into(),
                j.to_string(),
                n.to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                q.nodes_used.to_string(),
                fmt_f64(q.value),
                fmt_f64(exact),
                fmt_f64(rel(q.value, exact)),
                fmt_f64(q.est_abs_error),
            ]);
        }
    }
    for &m in &grid.ms {
        for &r in &grid.rs {
            for &x0 in &grid.xs {
                let params = GStirlingParams::from_i64(0, m, r)?;
                for n in 0..=grid.n_max.min(6) {
                    let q = quadrature::bell_integral_with_nodes(n, x0 as f64, m as f64, r, nodes)?;
                    let exact: f64 = gbell_poly(n, &params)
                        .eval(&int(x0))
                        .to_string()
                        .parse()
                        .expect("integer parses as f64");
                    table.push(vec![
                        "bell".into(),
                        String::new(),
                        n.to_string(),
                        x0.to_string(),
                        String::new(),
                        m.to_string(),
                        r.to_string(),
                        q.nodes_used.to_string(),
                        fmt_f64(q.value),
                        fmt_f64(exact),
                        fmt_f64(rel(q.value, exact)),
                        fmt_f64(q.est_abs_error),
                    ]);
                }
                for &l0 in &grid.lambdas {
                    let dp = DowlingParams::from_i64(m, r, 0)?;
                    for n in 0..=grid.n_max.min(6) {
                        let q = quadrature::dowling_integral_with_nodes(
                            n, x0 as f64, l0 as f64, m as f64, r, nodes,
                        )?;
                        let exact: f64 = dowling_poly(n, &dp)
                            .eval(&int(x0), &int(l0))
                            .to_string()
                            .parse()
                            .expect("integer parses as f64");
                        table.push(vec![
                            "dowling".into(),
                            String::new(),
                            n.to_string(),
                            x0.to_string(),
                            l0.to_string(),
                            m.to_string(),
                            r.to_string(),
                            q.nodes_used.to_string(),
                            fmt_f64(q.value),
                            fmt_f64(exact),
                            fmt_f64(rel(q.value, exact)),
                            fmt_f64(q.est_abs_error),
                        ]);
                    }
                }
            }
        }
    }
    let adj = quadrature::integrand_adjudication();
    let json_value = json!({
        "schema": "1",
        "command": "quad",
        "rows": table_rows_json(&table),
        "adjudications": [{
            "id": adj.id,
            "finding": adj.finding,
            "evidence": adj.evidence,
        }],
    });
    render(common, &table, json_value)?;
    Ok(0)
}

fn cmd_oracle_diff(common: &CommonArgs) -> Result<u8> {
    let grid = common.grid(6);
    if grid.n_max > 10 {
        anyhow::bail!(
            "oracle-diff n-max {} exceeds the exhaustive enumeration cap 10",
            grid.n_max
        );
    }
    let mut table = Table::new(vec![
        "kind",
        "n",
        "k",
        "m",
        "r",
        "x",
        "lambda",
        "bars",
        "algebraic",
        "oracle",
        "diff",
    ]);
    let mut all_zero = true;
    let mut push = |kind: &str,
                    n: u32,
                    k: String,
                    m: String,
                    r: String,
                    x: String,
                    lambda: String,
                    bars: String,
                    algebraic: dowling_core::exact::Integer,
                    oracle_v: dowling_core::exact::Integer,
                    table: &mut Table| {
        let diff = &algebraic - &oracle_v;
        if diff != int(0) {
            all_zero = false;
        }
        table.push(vec![
            kind.to_string(),
            n.to_string(),
            k,
            m,
            r,
            x,
            lambda,
            bars,
            algebraic.to_string(),
            oracle_v.to_string(),
            diff.to_string(),
        ]);
    };

    // Stirling-2 vs plain set-partition enumeration
    let s2 = gstirling_table(&GStirlingParams::from_i64(0, 1, 0)?, grid.n_max.min(10));
    for n in 0..=grid.n_max.min(10) {
        let mut by_blocks = vec![int(0); n as usize + 1];
        for p in oracle::enum_set_partitions(n)? {
            by_blocks[p.num_blocks()] += 1;
        }
        for k in 0..=n {
            push(
                "stirling2",
                n,
                k.to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                s2.value(n, k as i64),
                by_blocks[k as usize].clone(),
                &mut table,
            );
        }
    }

    // r-Whitney special case vs colored-partition oracle
    for &beta in &grid.ms {
        for &r in &grid.rs {
            if beta < 1 || r < 0 {
                continue;
            }
            for n in 0..=grid.n_max.min(7) {
                for k in 0..=n {
                    let algebraic = special_case(&SpecialKind::RWhitney { beta, r }, n, k as i64);
                    let counted = oracle::count_rwhitney(n, k, beta, r)?;
                    push(
                        "rwhitney",
                        n,
                        k.to_string(),
                        beta.to_string(),
                        r.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        algebraic,
                        counted,
                        &mut table,
                    );
                }
            }
        }
    }

    // Dowling polynomial vs weighted colored-partition oracle
    for &m in &grid.ms {
        for &r in &grid.rs {
            let params = DowlingParams::from_i64(m, r, 0)?;
            for n in 0..=grid.n_max.min(7) {
                let poly = dowling_poly(n, &params);
                for &x0 in &grid.xs {
                    if x0 < 1 {
                        continue;
                    }
                    for &l0 in &grid.lambdas {
                        if l0 < 1 {
                            continue;
                        }
                        push(
                            "dowling",
                            n,
                            String::new(),
                            m.to_string(),
                            r.to_string(),
                            x0.to_string(),
                            l0.to_string(),
                            String::new(),
                            poly.eval(&int(x0), &int(l0)),
                            oracle::count_rmxl(n, m, r, x0, l0)?,
                            &mut table,
                        );
                    }
                }
            }
        }
    }

    // barred preferential arrangements vs the generating function
    for bars in 0..=4u32 {
        let series = HurwitzSeries::bpa(bars, grid.n_max.min(8) as usize);
        for n in 0..=grid.n_max.min(8) {
            let egf = dowling_core::exact::to_integer(series.coeff(n as usize)?, "bpa")?;
            push(
                "bpa",
                n,
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                bars.to_string(),
                egf,
                oracle::enum_bpa_count(n, bars)?,
                &mut table,
            );
        }
    }

    let adjudications = [
        oracle::bpa_eq2_adjudication(8, 4)?,
        rstirling_sign_adjudication(grid.n_max.min(6)),
        rwhitney_sign_adjudication(),
    ];
    let json_value = json!({
        "schema": "1",
        "command": "oracle-diff",
        "all_zero": all_zero,
        "rows": table_rows_json(&table),
        "adjudications": adjudications.iter().map(|a| json!({
            "id": a.id,
            "finding": a.finding,
            "evidence": a.evidence,
        })).collect::<Vec<_>>(),
    });
    render(common, &table, json_value)?;
    Ok(if all_zero { 0 } else { 1 })
}
