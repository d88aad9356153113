use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use lrdcov::asymptotics::{c_param, gamma_param, iid_autocov, reduction_residual, sigma_sq_cov, QuadratureGrid};
use lrdcov::dcov::PairedSample;
use lrdcov::fgn::{fgn_autocov, generate_fgn, FgnGenerator, HurstSpec};
use lrdcov::montecarlo::{
    reproduce_table, rejection_rate, simulate_scenario, table_spec, Scenario, ScenarioFamily, ScenarioKind,
    TableCell,
};
use lrdcov::pipeline::{ingest_csv, small_trend_decompose, station_fixture, write_monthly_csv};
use lrdcov::rng::derive_seed;
use lrdcov::subordination::transform_uniform;
use lrdcov::subsampling::{block_len_for, independence_test, Statistic, SubsamplingConfig, TestReport};

use crate::io::{csv_with_header, emit, json_bytes, read_pair_csv};
use crate::{DiagArgs, Diagnostic, FixtureArgs, Format, GenArgs, McArgs, ScenarioArg, StatisticArg, TestArgs, Transform};

const SCHEMA_VERSION: u32 = 1;

fn transform_name(t: Option<Transform>) -> Option<&'static str> {
    t.map(|t| match t {
        Transform::Uniform => "uniform",
        Transform::Parabolic => "parabolic",
        Transform::Wavy => "wavy",
        Transform::Rotation => "rotation",
    })
}

pub fn gen(a: GenArgs) -> Result<()> {
    let n = a.n as usize;
    let spec = HurstSpec::new(a.hurst, n).context("--hurst/--n")?;
    let need_v = || a.v.ok_or_else(|| anyhow!("--v is required with --transform {}", transform_name(a.transform).unwrap()));
    if a.v.is_some() && !matches!(a.transform, Some(Transform::Parabolic | Transform::Wavy | Transform::Rotation)) {
        bail!("--v only applies to --transform parabolic, wavy or rotation");
    }
    if a.cross_corr.is_some() && matches!(a.transform, Some(Transform::Parabolic | Transform::Wavy | Transform::Rotation)) {
        bail!("--cross-corr only combines with --transform uniform or no transform");
    }
    let scenario = |kind| simulate_scenario(Scenario { kind, hurst: a.hurst, n }, a.seed);
    let (columns, rows): (Vec<&str>, Vec<Vec<f64>>) = match (a.transform, a.cross_corr) {
        (None, None) => {
            let x = generate_fgn(spec, a.seed)?;
            (vec!["x"], x.values().iter().map(|v| vec![*v]).collect())
        }
        (Some(Transform::Uniform), None) => {
            let x = transform_uniform(&generate_fgn(spec, a.seed)?);
            (vec!["x"], x.values().iter().map(|v| vec![*v]).collect())
        }
        (None, Some(r)) => {
            let (x, y) = FgnGenerator::new(spec)?.sample_pair(r, a.seed).context("--cross-corr")?;
            (vec!["x", "y"], pair_rows(x.values(), y.values()))
        }
        (Some(t), r) => {
            let kind = match t {
                Transform::Uniform => ScenarioKind::Linear(r.unwrap_or(0.0)),
                Transform::Parabolic => ScenarioKind::Parabolic(need_v()?),
                Transform::Wavy => ScenarioKind::Wavy(need_v()?),
                Transform::Rotation => ScenarioKind::Rectangular(need_v()?),
            };
            let s = scenario(kind).context("--v")?;
            (vec!["x", "y"], pair_rows(s.x(), s.y()))
        }
    };
    let header = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "gen",
        "hurst": a.hurst,
        "n": n,
        "seed": a.seed,
        "cross_corr": a.cross_corr,
        "transform": transform_name(a.transform),
        "v": a.v,
    });
    emit(a.output.as_deref(), &csv_with_header(&header, &columns, &rows)?)
}

fn pair_rows(x: &[f64], y: &[f64]) -> Vec<Vec<f64>> {
    x.iter().zip(y).map(|(a, b)| vec![*a, *b]).collect()
}

fn statistic_from(arg: StatisticArg, d: Option<f64>) -> Result<Statistic> {
    Ok(match arg {
        StatisticArg::DcovSqrtN => Statistic::DcovSqrtN,
        StatisticArg::Pearson => Statistic::PearsonAbsCov,
        StatisticArg::DcovNPowD => Statistic::DcovNPowD(d.ok_or_else(|| anyhow!("--statistic dcov-n-pow-d requires --d"))?),
    })
}

#[derive(Serialize)]
struct TestOutput<'a> {
    schema_version: u32,
    #[serde(flatten)]
    report: &'a TestReport,
    input: serde_json::Value,
}

/// Returns whether the hypothesis was rejected.
pub fn test(a: TestArgs) -> Result<bool> {
    let (sample, input) = if let Some(path) = &a.input {
        let (x, y) = read_pair_csv(path)?;
        (PairedSample::new(x, y)?, json!({ "pair": path }))
    } else {
        let (px, py) = (a.x.as_ref().unwrap(), a.y.as_ref().unwrap());
        let sx = ingest_csv(px).with_context(|| format!("--x {}", px.display()))?;
        let sy = ingest_csv(py).with_context(|| format!("--y {}", py.display()))?;
        let (x, y) = if a.deseasonalize {
            (
                small_trend_decompose(&sx).context("--x")?.residual,
                small_trend_decompose(&sy).context("--y")?.residual,
            )
        } else {
            (sx.values().to_vec(), sy.values().to_vec())
        };
        let input = json!({ "x": px, "y": py, "deseasonalize": a.deseasonalize });
        (PairedSample::new(x, y)?, input)
    };
    let n = sample.len();
    let cfg = SubsamplingConfig {
        block_len: a.block_len.map_or_else(|| block_len_for(n, 0.5).max(1), |l| l as usize),
        lag: a.lag.map_or(n / 10, |d| d as usize),
        statistic: statistic_from(a.statistic, a.d)?,
        alpha: a.alpha,
    };
    let report = independence_test(&sample, &cfg).context("--block-len/--lag")?;
    let out = TestOutput { schema_version: SCHEMA_VERSION, report: &report, input };
    emit(a.output.as_deref(), &json_bytes(&out)?)?;
    Ok(report.reject)
}

fn kind_for(family: ScenarioFamily, param: f64) -> ScenarioKind {
    match family {
        ScenarioFamily::Linear => ScenarioKind::Linear(param),
        ScenarioFamily::Parabolic => ScenarioKind::Parabolic(param),
        ScenarioFamily::Wavy => ScenarioKind::Wavy(param),
        ScenarioFamily::Rectangular => ScenarioKind::Rectangular(param),
    }
}

fn family_of(arg: ScenarioArg) -> ScenarioFamily {
    match arg {
        ScenarioArg::Linear => ScenarioFamily::Linear,
        ScenarioArg::Parabolic => ScenarioFamily::Parabolic,
        ScenarioArg::Wavy => ScenarioFamily::Wavy,
        ScenarioArg::Rectangular => ScenarioFamily::Rectangular,
    }
}

/// `√n` for `D = 2 − 2H > 1/2`, `n^D` below.
fn regime_statistic(hurst: f64) -> Result<Statistic> {
    Ok(table_spec(1)?.statistic_for(hurst)?)
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(String::new, |v| format!("{v}"))
}

pub fn mc(a: McArgs) -> Result<()> {
    let reps = a.reps as usize;
    let (cells, family, params, table): (Vec<TableCell>, ScenarioFamily, Vec<f64>, Option<u8>) = match a.table {
        Some(id) => {
            let spec = table_spec(id).context("--table")?;
            let cells = reproduce_table(id, reps, a.gamma, a.seed)?;
            (cells, spec.family, spec.params.to_vec(), Some(id))
        }
        None => {
            let family = family_of(a.scenario.expect("clap enforces --table or --scenario"));
            let mut cells = Vec::new();
            let mut index = 0u64;
            for &n in &a.n {
                for &hurst in &a.hurst {
                    for &param in &a.param {
                        let statistic = match a.statistic {
                            Some(StatisticArg::DcovNPowD) => Statistic::DcovNPowD(2.0 - 2.0 * hurst),
                            Some(s) => statistic_from(s, None)?,
                            None => regime_statistic(hurst)?,
                        };
                        let cfg = SubsamplingConfig::with_gamma(n, a.gamma, statistic);
                        let sc = Scenario { kind: kind_for(family, param), hurst, n };
                        let result = rejection_rate(sc, &cfg, reps, derive_seed(a.seed, index))
                            .with_context(|| format!("scenario n={n}, H={hurst}, param={param}"))?;
                        index += 1;
                        cells.push(TableCell { n, hurst, param, result, published: None, flagged: false });
                    }
                }
            }
            (cells, family, a.param.clone(), None)
        }
    };
    let bytes = match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "H", "param", "rate", "paper_value", "abs_diff"])?;
            for c in &cells {
                w.write_record([
                    c.n.to_string(),
                    c.hurst.to_string(),
                    c.param.to_string(),
                    c.result.rejection_rate.to_string(),
                    fmt_opt(c.published),
                    fmt_opt(c.abs_diff()),
                ])?;
            }
            w.into_inner().map_err(|e| anyhow!("{e}"))?
        }
        Format::Json => json_bytes(&json!({
            "schema_version": SCHEMA_VERSION,
            "table": table,
            "gamma": a.gamma,
            "reps": reps,
            "seed": a.seed,
            "cells": cells.iter().map(|c| json!({
                "n": c.n,
                "H": c.hurst,
                "param": c.param,
                "rate": c.result.rejection_rate,
                "paper_value": c.published,
                "abs_diff": c.abs_diff(),
                "flagged": c.flagged,
                "result": c.result,
            })).collect::<Vec<_>>(),
        }))?,
    };
    emit(a.output.as_deref(), &bytes)?;
    if let Some(path) = &a.scatter {
        write_scatter(path, family, &params, a.scatter_n, a.scatter_hurst, a.seed)?;
    }
    Ok(())
}

fn write_scatter(path: &Path, family: ScenarioFamily, params: &[f64], n: usize, hurst: f64, seed: u64) -> Result<()> {
    let mut rows = Vec::new();
    for (i, &param) in params.iter().enumerate() {
        let s = simulate_scenario(Scenario { kind: kind_for(family, param), hurst, n }, derive_seed(seed, i as u64))
            .context("--scatter")?;
        rows.extend(s.x().iter().zip(s.y()).map(|(x, y)| vec![param, *x, *y]));
    }
    let header = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "mc --scatter",
        "family": family,
        "hurst": hurst,
        "n": n,
        "seed": seed,
    });
    emit(Some(path), &csv_with_header(&header, &["param", "x", "y"], &rows)?)
}

type Autocov = Box<dyn Fn(u64) -> f64>;

fn autocovariances(a: &DiagArgs) -> Result<(Autocov, Autocov, serde_json::Value)> {
    if a.iid {
        return Ok((Box::new(iid_autocov), Box::new(iid_autocov), json!("iid")));
    }
    let hx = a.hurst.ok_or_else(|| anyhow!("pass --iid or --hurst"))?;
    let hy = a.hurst_y.unwrap_or(hx);
    Ok((
        Box::new(move |k| fgn_autocov(k, hx)),
        Box::new(move |k| fgn_autocov(k, hy)),
        json!({ "hurst_x": hx, "hurst_y": hy }),
    ))
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len();
    if m % 2 == 1 {
        v[m / 2]
    } else {
        0.5 * (v[m / 2 - 1] + v[m / 2])
    }
}

pub fn diag(a: DiagArgs) -> Result<()> {
    use rayon::prelude::*;
    let out = match a.name {
        Diagnostic::Sigma | Diagnostic::Gamma | Diagnostic::Cparam => {
            let (rx, ry, model) = autocovariances(&a)?;
            let (name, series) = match a.name {
                Diagnostic::Sigma => ("sigma", sigma_sq_cov(&rx, &ry, a.kmax)),
                Diagnostic::Gamma => ("gamma", gamma_param(a.s, a.t, &rx, &ry, a.kmax)),
                _ => ("cparam", c_param(a.s, a.t, &rx, &ry, a.kmax)),
            };
            let mut out = json!({
                "schema_version": SCHEMA_VERSION,
                "diagnostic": name,
                "model": model,
                "kmax": a.kmax,
                "value": series.value,
                "tail_estimate": if series.tail.is_finite() { json!(series.tail) } else { json!(null) },
            });
            if !matches!(a.name, Diagnostic::Sigma) {
                out["s"] = json!(a.s);
                out["t"] = json!(a.t);
            }
            out
        }
        Diagnostic::Reduction => {
            let h = a.hurst.ok_or_else(|| anyhow!("reduction requires --hurst"))?;
            if a.iid {
                bail!("reduction requires --hurst, not --iid");
            }
            let d = 2.0 - 2.0 * h;
            let grid = QuadratureGrid::default_1d();
            let mut rows = Vec::new();
            for (j, &n) in a.ns.iter().enumerate() {
                let g = FgnGenerator::new(HurstSpec::new(h, n).context("--ns")?)?;
                let seed = derive_seed(a.seed, j as u64);
                let vals: Vec<f64> = (0..a.reps)
                    .into_par_iter()
                    .map(|i| {
                        let x = g.sample(derive_seed(seed, i));
                        reduction_residual(x.values(), &grid).map(|r| (n as f64).powf(d / 2.0) * r)
                    })
                    .collect::<lrdcov::Result<_>>()?;
                rows.push(json!({ "n": n, "median_scaled_residual": median(vals) }));
            }
            let medians: Vec<f64> = rows.iter().map(|r| r["median_scaled_residual"].as_f64().unwrap()).collect();
            let decreasing = medians.windows(2).all(|w| w[1] < w[0]);
            json!({
                "schema_version": SCHEMA_VERSION,
                "diagnostic": "reduction",
                "hurst": h,
                "d": d,
                "reps": a.reps,
                "seed": a.seed,
                "medians": rows,
                "monotone_decreasing": decreasing,
                "status": if decreasing { "pass" } else { "fail" },
            })
        }
    };
    emit(a.output.as_deref(), &json_bytes(&out)?)
}

pub fn fixtures(a: FixtureArgs) -> Result<()> {
    std::fs::create_dir_all(&a.out_dir).with_context(|| format!("--out-dir {}", a.out_dir.display()))?;
    for (name, series) in station_fixture(a.seed)? {
        let mut buf = Vec::new();
        write_monthly_csv(&series, &mut buf)?;
        emit(Some(&a.out_dir.join(format!("{name}.csv"))), &buf)?;
    }
    Ok(())
}
