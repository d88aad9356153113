//! Monte Carlo checks of the scenario generators and the subsampling test.

use rayon::prelude::*;

use lrdcov::dcov::{pearson_r, PairedSample};
use lrdcov::montecarlo::{rejection_rate, simulate_scenario, table_spec, Scenario, ScenarioKind, ScenarioSimulator};
use lrdcov::rng::derive_seed;
use lrdcov::subsampling::{block_len_for, independence_test, Statistic, SubsamplingConfig};

const SEED: u64 = 0x3c_0ffe_e000;

fn cfg(n: usize, statistic: Statistic) -> SubsamplingConfig {
    SubsamplingConfig { block_len: block_len_for(n, 0.5), lag: n / 10, statistic, alpha: 0.05 }
}

fn rate(kind: ScenarioKind, hurst: f64, n: usize, statistic: Statistic, seed: u64) -> f64 {
    rejection_rate(Scenario { kind, hurst, n }, &cfg(n, statistic), 500, seed).unwrap().rejection_rate
}

#[test]
fn size_for_independent_copies() {
    let r = rate(ScenarioKind::Linear(0.0), 0.6, 300, Statistic::DcovSqrtN, derive_seed(SEED, 1));
    assert!((r - 0.089).abs() <= 0.05, "{r}");
}

#[test]
fn identical_series_always_reject() {
    let n = 300;
    let sim = ScenarioSimulator::new(Scenario { kind: ScenarioKind::Linear(0.0), hurst: 0.6, n }).unwrap();
    let c = cfg(n, Statistic::DcovSqrtN);
    let rejections = (0..500u64)
        .into_par_iter()
        .filter(|&i| {
            let s = sim.simulate(derive_seed(SEED, 100 + i)).unwrap();
            let same = PairedSample::new(s.x().to_vec(), s.x().to_vec()).unwrap();
            independence_test(&same, &c).unwrap().reject
        })
        .count();
    assert!(rejections as f64 / 500.0 >= 0.99, "{rejections}");
}

#[test]
fn parabolic_dependence_is_nonlinear() {
    let s = simulate_scenario(Scenario { kind: ScenarioKind::Parabolic(1.0), hurst: 0.6, n: 100_000 }, SEED).unwrap();
    let r = pearson_r(&s).unwrap();
    assert!(r.abs() < 0.02, "{r}");
    let sq: Vec<f64> = s.x().iter().map(|v| v * v).collect();
    let r2 = pearson_r(&PairedSample::new(sq, s.y().to_vec()).unwrap()).unwrap();
    assert!(r2 > 0.3, "{r2}");
}

#[test]
fn linear_power_is_monotone_in_r() {
    let rates: Vec<f64> = [0.0, 0.25, 0.5]
        .iter()
        .enumerate()
        .map(|(i, &r)| rate(ScenarioKind::Linear(r), 0.6, 300, Statistic::DcovSqrtN, derive_seed(SEED, 10 + i as u64)))
        .collect();
    assert!(rates[2] >= 0.98, "{rates:?}");
    assert!(rates[2] > rates[1] && rates[1] > rates[0], "{rates:?}");
}

#[test]
fn pearson_parabolic_cell() {
    let r = rate(ScenarioKind::Parabolic(1.0), 0.7, 500, Statistic::PearsonAbsCov, derive_seed(SEED, 20));
    assert!((r - 0.385).abs() <= 0.06, "{r}");
}

#[test]
fn dcov_rectangular_cell() {
    let spec = table_spec(7).unwrap();
    let st = spec.statistic_for(0.6).unwrap();
    let r = rate(ScenarioKind::Rectangular(1.0), 0.6, 500, st, derive_seed(SEED, 21));
    assert!((r - 0.932).abs() <= 0.05, "{r}");
}

#[test]
fn scenario_marginal_variance() {
    // the mean is zero by construction, so Σx²/n is unbiased for the variance
    for kind in [ScenarioKind::Linear(0.5), ScenarioKind::Parabolic(1.0)] {
        let sim = ScenarioSimulator::new(Scenario { kind, hurst: 0.7, n: 2000 }).unwrap();
        let reps = 300u64;
        let vars: Vec<(f64, f64)> = (0..reps)
            .into_par_iter()
            .map(|i| {
                let s = sim.simulate(derive_seed(SEED, 1000 + i)).unwrap();
                let m = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>() / v.len() as f64;
                (m(s.x()), m(s.y()))
            })
            .collect();
        for pick in [0usize, 1] {
            let v: Vec<f64> = vars.iter().map(|p| if pick == 0 { p.0 } else { p.1 }).collect();
            let mean = v.iter().sum::<f64>() / reps as f64;
            let sd = (v.iter().map(|a| (a - mean).powi(2)).sum::<f64>() / (reps - 1) as f64).sqrt();
            let se = sd / (reps as f64).sqrt();
            assert!((mean - 1.0 / 3.0).abs() <= 3.0 * se, "{kind:?} component {pick}: {mean} ± {se}");
        }
    }
}
