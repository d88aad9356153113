//! The sampling-window method: statistics on lagged overlapping blocks
//! estimate the null distribution of the full-sample statistic.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dcov::{abs_cov_slices, dcov_squared_slices, normalized_dcov, Normalization, PairedSample};
use crate::error::{Error, Result};

/// Which statistic is computed on the full sample and on every block.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "d", rename_all = "snake_case")]
pub enum Statistic {
    /// `√n · V_n`.
    DcovSqrtN,
    /// `n^D · V_n`.
    DcovNPowD(f64),
    /// `n^{-1/2} |Σ (X_i − X̄)(Y_i − Ȳ)|`.
    PearsonAbsCov,
}

impl Statistic {
    pub fn validate(&self) -> Result<()> {
        match self {
            Statistic::DcovNPowD(d) => Normalization::NPowD(*d).validate(),
            _ => Ok(()),
        }
    }

    /// Evaluates the statistic on `x` and `y`, which must have equal length.
    pub fn evaluate_slices(&self, x: &[f64], y: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), y.len());
        match *self {
            Statistic::DcovSqrtN => normalized_dcov(dcov_squared_slices(x, y), x.len(), Normalization::SqrtN),
            Statistic::DcovNPowD(d) => normalized_dcov(dcov_squared_slices(x, y), x.len(), Normalization::NPowD(d)),
            Statistic::PearsonAbsCov => abs_cov_slices(x, y),
        }
    }

    pub fn evaluate(&self, s: &PairedSample) -> f64 {
        self.evaluate_slices(s.x(), s.y())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubsamplingConfig {
    pub block_len: usize,
    pub lag: usize,
    pub statistic: Statistic,
    pub alpha: f64,
}

/// `⌊n^γ⌋`, guarded against `powf` landing just below an integer.
pub fn block_len_for(n: usize, gamma: f64) -> usize {
    ((n as f64).powf(gamma) + 1e-9).floor() as usize
}

impl SubsamplingConfig {
    /// `l = ⌊n^γ⌋`, `d = ⌊0.1 n⌋`, `α = 0.05`.
    pub fn with_gamma(n: usize, gamma: f64, statistic: Statistic) -> Self {
        SubsamplingConfig {
            block_len: block_len_for(n, gamma).max(1),
            lag: n / 10,
            statistic,
            alpha: 0.05,
        }
    }

    /// `γ = 1/2` with the `√n` distance-covariance statistic.
    pub fn default_for(n: usize) -> Self {
        Self::with_gamma(n, 0.5, Statistic::DcovSqrtN)
    }

    pub fn validate(&self) -> Result<()> {
        if self.block_len == 0 {
            return Err(Error::param("block_len", "must be positive"));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::param("alpha", format!("must lie in (0, 1), got {}", self.alpha)));
        }
        self.statistic.validate()
    }

    /// Number of blocks `m = n − l − d` available for a sample of length `n`.
    pub fn block_count(&self, n: usize) -> Result<usize> {
        let needed = self.block_len + self.lag + 1;
        if n < needed {
            return Err(Error::SampleTooSmall { needed, got: n });
        }
        Ok(n - self.block_len - self.lag)
    }
}

/// Block statistics `T_{l,k}`, `k = 1..m`, in block order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsamplingDistribution {
    values: Vec<f64>,
    #[serde(skip)]
    sorted: Vec<f64>,
}

impl SubsamplingDistribution {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::DegenerateSample("non-finite block statistic"));
        }
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        Ok(SubsamplingDistribution { values, sorted })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn sorted(&self) -> std::borrow::Cow<'_, [f64]> {
        // deserialized values arrive without the cached order
        if self.sorted.len() == self.values.len() {
            std::borrow::Cow::Borrowed(&self.sorted)
        } else {
            let mut v = self.values.clone();
            v.sort_by(f64::total_cmp);
            std::borrow::Cow::Owned(v)
        }
    }

    /// `F̂(t) = m^{-1} #{k : T_{l,k} ≤ t}`.
    pub fn empirical_cdf(&self, t: f64) -> f64 {
        let sorted = self.sorted();
        sorted.partition_point(|&v| v <= t) as f64 / sorted.len() as f64
    }

    /// The `⌈p m⌉`-th order statistic (1-based); `p` is clamped so that the
    /// index lies in `1..=m`.
    pub fn quantile(&self, p: f64) -> f64 {
        let sorted = self.sorted();
        let m = sorted.len();
        let rank = (p * m as f64 - 1e-9).ceil();
        let rank = if rank.is_nan() { 1 } else { (rank.max(1.0) as usize).min(m) };
        sorted[rank - 1]
    }
}

/// Computes `T_l(X_k..X_{k+l−1}, Y_{k+d}..Y_{k+d+l−1})` for every `k`.
pub fn block_statistics(s: &PairedSample, cfg: &SubsamplingConfig) -> Result<SubsamplingDistribution> {
    cfg.validate()?;
    let m = cfg.block_count(s.len())?;
    let (l, d) = (cfg.block_len, cfg.lag);
    let (x, y) = (s.x(), s.y());
    let values: Vec<f64> = (0..m)
        .into_par_iter()
        .map(|k| cfg.statistic.evaluate_slices(&x[k..k + l], &y[k + d..k + d + l]))
        .collect();
    SubsamplingDistribution::new(values)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub statistic: f64,
    /// Empirical `(1 − α)`-quantile of the block statistics.
    pub threshold: f64,
    /// Fraction of block statistics at or above the full-sample statistic.
    pub p_analogue: f64,
    pub reject: bool,
    pub n: usize,
    pub blocks: usize,
    pub config: SubsamplingConfig,
}

/// Rejects independence when the full-sample statistic strictly exceeds the
/// subsampling quantile.
pub fn independence_test(s: &PairedSample, cfg: &SubsamplingConfig) -> Result<TestReport> {
    let dist = block_statistics(s, cfg)?;
    let statistic = cfg.statistic.evaluate(s);
    if !statistic.is_finite() {
        return Err(Error::DegenerateSample("non-finite test statistic"));
    }
    let threshold = dist.quantile(1.0 - cfg.alpha);
    let exceed = dist.values().iter().filter(|&&v| v >= statistic).count();
    Ok(TestReport {
        statistic,
        threshold,
        p_analogue: exceed as f64 / dist.len() as f64,
        reject: statistic > threshold,
        n: s.len(),
        blocks: dist.len(),
        config: *cfg,
    })
}

/// `l ≤ n^{(1 + min(D_X, D_Y))/2 − ε}`, the block-length rate under which the
/// method is consistent.
pub fn check_blocklength_condition(n: usize, l: usize, d_x: f64, d_y: f64, eps: f64) -> bool {
    let exponent = 0.5 * (1.0 + d_x.min(d_y)) - eps;
    l as f64 <= (n as f64).powf(exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(l: usize, d: usize, statistic: Statistic) -> SubsamplingConfig {
        SubsamplingConfig { block_len: l, lag: d, statistic, alpha: 0.05 }
    }

    #[test]
    fn block_geometry() {
        // x_i = i and y_i = 100 i: the Pearson block statistic identifies the windows
        let x: Vec<f64> = (0..10).map(f64::from).collect();
        let y: Vec<f64> = x.iter().map(|v| 100.0 * v).collect();
        let s = PairedSample::new(x.clone(), y.clone()).unwrap();
        let c = cfg(3, 2, Statistic::PearsonAbsCov);
        let dist = block_statistics(&s, &c).unwrap();
        assert_eq!(dist.len(), 5);
        for k in 0..5 {
            let want = abs_cov_slices(&x[k..k + 3], &y[k + 2..k + 5]);
            assert_eq!(dist.values()[k], want);
        }
        let edge = cfg(10 - 2 - 1, 2, Statistic::DcovSqrtN);
        assert_eq!(block_statistics(&s, &edge).unwrap().len(), 1);
        let too_long = cfg(8, 2, Statistic::DcovSqrtN);
        assert!(matches!(block_statistics(&s, &too_long), Err(Error::SampleTooSmall { needed: 11, got: 10 })));
    }

    #[test]
    fn constant_y_gives_zero_blocks() {
        let x: Vec<f64> = (0..40).map(|i| (i as f64 * 0.37).sin()).collect();
        let s = PairedSample::new(x, vec![2.0; 40]).unwrap();
        let dist = block_statistics(&s, &cfg(6, 4, Statistic::DcovSqrtN)).unwrap();
        assert!(dist.values().iter().all(|&v| v == 0.0));
        let report = independence_test(&s, &cfg(6, 4, Statistic::DcovSqrtN)).unwrap();
        assert_eq!(report.statistic, 0.0);
        assert!(!report.reject);
        assert_eq!(report.p_analogue, 1.0);
    }

    #[test]
    fn cdf_and_quantile_examples() {
        let d = SubsamplingDistribution::new(vec![4.0, 2.0, 1.0, 3.0]).unwrap();
        assert_eq!(d.empirical_cdf(0.5), 0.0);
        assert_eq!(d.empirical_cdf(2.5), 0.5);
        assert_eq!(d.empirical_cdf(2.0), 0.5);
        assert_eq!(d.empirical_cdf(4.0), 1.0);
        let q = SubsamplingDistribution::new(vec![5.0, 1.0, 3.0]).unwrap();
        assert_eq!(q.quantile(0.95), 5.0);
        assert_eq!(q.quantile(1e-12), 1.0);
        assert_eq!(q.quantile(2.0 / 3.0), 3.0);
        let flat = SubsamplingDistribution::new(vec![7.0; 9]).unwrap();
        assert_eq!(flat.quantile(0.3), 7.0);
        assert!(SubsamplingDistribution::new(vec![]).is_err());
    }

    #[test]
    fn single_block_threshold() {
        let x: Vec<f64> = (0..12).map(|i| (i as f64).cos()).collect();
        let y: Vec<f64> = (0..12).map(|i| (i as f64 * 1.7).sin()).collect();
        let s = PairedSample::new(x.clone(), y.clone()).unwrap();
        let c = cfg(9, 2, Statistic::DcovSqrtN);
        let r = independence_test(&s, &c).unwrap();
        assert_eq!(r.blocks, 1);
        let want = Statistic::DcovSqrtN.evaluate_slices(&x[0..9], &y[2..11]);
        assert_eq!(r.threshold, want);
    }

    #[test]
    fn defaults() {
        let c = SubsamplingConfig::default_for(300);
        assert_eq!((c.block_len, c.lag), (17, 30));
        assert_eq!(SubsamplingConfig::default_for(96).block_len, 9);
        assert_eq!(SubsamplingConfig::default_for(100).block_len, 10);
        assert_eq!(block_len_for(1000, 0.4), 15);
        assert_eq!(block_len_for(1000, 0.6), 63);
        let bad = SubsamplingConfig { alpha: 1.0, ..c };
        assert!(bad.validate().is_err());
        let bad = SubsamplingConfig { statistic: Statistic::DcovNPowD(1.5), ..c };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn blocklength_condition() {
        assert!(check_blocklength_condition(1000, 31, 0.8, 0.8, 0.05));
        assert!(check_blocklength_condition(1000, 354, 0.8, 0.9, 0.05));
        assert!(!check_blocklength_condition(1000, 355, 0.8, 0.9, 0.05));
        assert!(!check_blocklength_condition(1000, 1000, 0.8, 0.8, 0.05));
        assert!(check_blocklength_condition(1000, 1, 0.2, 0.2, 0.05));
    }

    #[test]
    fn statistic_serde_shape() {
        let json = serde_json::to_string(&Statistic::DcovNPowD(0.4)).unwrap();
        assert_eq!(json, r#"{"kind":"dcov_n_pow_d","d":0.4}"#);
        let back: Statistic = serde_json::from_str(r#"{"kind":"dcov_sqrt_n"}"#).unwrap();
        assert_eq!(back, Statistic::DcovSqrtN);
    }
}
