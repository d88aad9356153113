//! Distance covariance, distance correlation and Pearson-type statistics of
//! paired samples.
//!
//! The weight is `ω(s, t) = (π² s² t²)^{-1}`. With this constant the
//! characteristic-function integral equals the double-centered distance
//! form, so [`dcov_squared_pairwise`] and [`dcov_squared_ecf_grid`] compute
//! the same quantity along unrelated routes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgn::TimeSeries;
use crate::quadrature::QuadratureGrid;
use crate::special::cosine_tail_over_s2;

/// Aligned observations `(X_i, Y_i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairedSample {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl PairedSample {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: y.len(),
            });
        }
        if x.iter().chain(&y).any(|v| !v.is_finite()) {
            return Err(Error::param("sample", "contains non-finite values"));
        }
        Ok(Self { x, y })
    }

    pub fn from_series(x: &TimeSeries, y: &TimeSeries) -> Result<Self> {
        Self::new(x.values().to_vec(), y.values().to_vec())
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            Err(Error::SampleTooSmall {
                needed,
                got: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

fn distance_row_means(v: &[f64]) -> (Vec<f64>, f64) {
    let n = v.len() as f64;
    let rows: Vec<f64> = v
        .iter()
        .map(|a| v.iter().map(|b| (a - b).abs()).sum::<f64>() / n)
        .collect();
    let grand = rows.iter().sum::<f64>() / n;
    (rows, grand)
}

/// `V_n²` of two equally long slices. Callers guarantee `x.len() == y.len() ≥ 1`.
pub(crate) fn dcov_squared_slices(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    let n = x.len();
    let (ax, gx) = distance_row_means(x);
    let (by, gy) = distance_row_means(y);
    let mut total = 0.0;
    for k in 0..n {
        let (xk, yk) = (x[k], y[k]);
        let (ak, bk) = (ax[k] - gx, by[k] - gy);
        let mut row = 0.0;
        for l in 0..n {
            let a = (xk - x[l]).abs() - ak - ax[l];
            let b = (yk - y[l]).abs() - bk - by[l];
            row += a * b;
        }
        total += row;
    }
    let v = total / (n * n) as f64;
    // negative values are rounding noise of a nonnegative quantity
    v.max(0.0)
}

/// Empirical distance covariance `V_n² = n^{-2} Σ_{k,l} A_{kl} B_{kl}` with
/// `A`, `B` the double-centered distance matrices. `O(n²)` time, `O(n)` space.
pub fn dcov_squared_pairwise(s: &PairedSample) -> Result<f64> {
    s.require(2)?;
    Ok(dcov_squared_slices(&s.x, &s.y))
}

/// Result of the characteristic-function quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EcfGridEstimate {
    /// Integral over `ℝ²`.
    pub value: f64,
    /// Tensor-product quadrature over `[-S, S]²` alone.
    pub grid_part: f64,
    /// Contribution of `|s| > S` or `|t| > S`, integrated exactly.
    pub tail_part: f64,
}

/// Per-observation weighted Gram matrix
/// `M_jk = ∫ a_j(s) conj(a_k(s)) / (π s²) ds`, with
/// `a_j(s) = e^{i s x_j} − φ_X^{(n)}(s)`, split into the part over the grid
/// `|s| ≤ S` and the exactly integrated remainder `|s| > S`.
fn ecf_gram(v: &[f64], grid: &QuadratureGrid) -> (Vec<f64>, Vec<f64>) {
    let n = v.len();
    let mut inner = vec![0.0; n * n];
    let mut re = vec![0.0; n];
    let mut im = vec![0.0; n];
    let pi = std::f64::consts::PI;
    for (&s, &w) in grid.nodes().iter().zip(grid.weights()) {
        let (mut mr, mut mi) = (0.0, 0.0);
        for (j, x) in v.iter().enumerate() {
            let (sin, cos) = (s * x).sin_cos();
            re[j] = cos;
            im[j] = sin;
            mr += cos;
            mi += sin;
        }
        mr /= n as f64;
        mi /= n as f64;
        for j in 0..n {
            re[j] -= mr;
            im[j] -= mi;
        }
        // both signs of s: a_j(−s) conj(a_k(−s)) is the conjugate
        let c = 2.0 * w / (pi * s * s);
        for j in 0..n {
            let (rj, ij) = (c * re[j], c * im[j]);
            let row = &mut inner[j * n..(j + 1) * n];
            for k in j..n {
                row[k] += rj * re[k] + ij * im[k];
            }
        }
    }
    for j in 0..n {
        for k in 0..j {
            inner[j * n + k] = inner[k * n + j];
        }
    }

    // Tail: a_j = Σ_p (δ_jp − 1/n) e^{i s x_p}, so the remainder is the
    // double-centered matrix of (2/π) ∫_S^∞ cos((x_p − x_q) s) / s² ds.
    let upper = grid.upper();
    let mut tail = vec![0.0; n * n];
    for p in 0..n {
        for q in p..n {
            let t = 2.0 / pi * cosine_tail_over_s2(v[p] - v[q], upper);
            tail[p * n + q] = t;
            tail[q * n + p] = t;
        }
    }
    double_center(&mut tail, n);
    (inner, tail)
}

fn double_center(m: &mut [f64], n: usize) {
    let rows: Vec<f64> = (0..n)
        .map(|i| m[i * n..(i + 1) * n].iter().sum::<f64>() / n as f64)
        .collect();
    let grand = rows.iter().sum::<f64>() / n as f64;
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] += grand - rows[i] - rows[j];
        }
    }
}

/// `∫∫ |φ_{X,Y}^{(n)}(s,t) − φ_X^{(n)}(s) φ_Y^{(n)}(t)|² / (π² s² t²) ds dt`
/// by tensor-product quadrature on `grid × grid`, plus the exact remainder
/// outside `[-S, S]²`.
///
/// The ECF difference factorizes as `n^{-1} Σ_j a_j(s) b_j(t)`, so the
/// tensor quadrature of its squared modulus is `n^{-2} Σ_{jk} A_jk B_jk` with
/// one-dimensional Gram matrices `A`, `B`; the sum is evaluated in that form
/// (`O(|grid| n²)` instead of `O(|grid|² n)`).
pub fn dcov_squared_ecf_grid(s: &PairedSample, grid: &QuadratureGrid) -> Result<EcfGridEstimate> {
    s.require(1)?;
    grid.validate()?;
    let n = s.len();
    let (ax, at) = ecf_gram(&s.x, grid);
    let (bx, bt) = ecf_gram(&s.y, grid);
    let nn = (n * n) as f64;
    let mut grid_part = 0.0;
    let mut value = 0.0;
    for i in 0..n * n {
        grid_part += ax[i] * bx[i];
        value += (ax[i] + at[i]) * (bx[i] + bt[i]);
    }
    grid_part /= nn;
    value /= nn;
    if !value.is_finite() {
        return Err(Error::NonFiniteQuadrature);
    }
    Ok(EcfGridEstimate {
        value,
        grid_part,
        tail_part: value - grid_part,
    })
}

/// Panel grid resolving the sample's oscillations: with `spread` the larger
/// marginal range, panels of width `1 / spread` (at most one radian of phase
/// per panel) up to `S = 20 / spread`, 10 Gauss–Legendre nodes each.
pub fn default_ecf_grid(s: &PairedSample) -> QuadratureGrid {
    let range = |v: &[f64]| {
        let (lo, hi) = v
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(*x), hi.max(*x)));
        hi - lo
    };
    let spread = range(&s.x).max(range(&s.y)).max(1e-3);
    QuadratureGrid::panels(20.0 / spread, 1.0 / spread, 10)
        .expect("positive grid parameters")
}

/// Distance correlation `V²(X,Y) / sqrt(V²(X,X) V²(Y,Y))`; 0 when either
/// marginal distance variance vanishes.
pub fn dcorr(s: &PairedSample) -> Result<f64> {
    s.require(2)?;
    let vxy = dcov_squared_slices(&s.x, &s.y);
    let vxx = dcov_squared_slices(&s.x, &s.x);
    let vyy = dcov_squared_slices(&s.y, &s.y);
    let denom = (vxx * vyy).sqrt();
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok((vxy / denom).clamp(0.0, 1.0))
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn centered_cross(x: &[f64], y: &[f64]) -> f64 {
    let (mx, my) = (mean(x), mean(y));
    x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum()
}

/// Pearson's sample correlation coefficient.
pub fn pearson_r(s: &PairedSample) -> Result<f64> {
    s.require(2)?;
    let sxy = centered_cross(&s.x, &s.y);
    let sxx = centered_cross(&s.x, &s.x);
    let syy = centered_cross(&s.y, &s.y);
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::DegenerateSample("constant marginal in Pearson correlation"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Scaling applied to the distance covariance `V_n = sqrt(V_n²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "d", rename_all = "snake_case")]
pub enum Normalization {
    None,
    /// `√n · V_n`, the regime `D_X, D_Y ∈ (1/2, 1)`.
    SqrtN,
    /// `n^D · V_n`, the regime `D_X = D_Y = D ∈ (0, 1/2)`.
    NPowD(f64),
}

impl Normalization {
    pub fn validate(&self) -> Result<()> {
        if let Normalization::NPowD(d) = *self {
            if !(d > 0.0 && d < 0.5) {
                return Err(Error::param("D", format!("must lie in (0, 1/2), got {d}")));
            }
        }
        Ok(())
    }

    pub fn factor(&self, n: usize) -> f64 {
        let n = n as f64;
        match *self {
            Normalization::None => 1.0,
            Normalization::SqrtN => n.sqrt(),
            Normalization::NPowD(d) => n.powf(d),
        }
    }

    /// Regime for two series of LRD parameter `D`: `√n` if `D > 1/2`,
    /// otherwise `n^D`.
    pub fn for_lrd_param(d: f64) -> Result<Self> {
        if !(d > 0.0 && d <= 1.0) {
            return Err(Error::param("D", format!("must lie in (0, 1], got {d}")));
        }
        if d > 0.5 {
            Ok(Normalization::SqrtN)
        } else if d < 0.5 {
            Ok(Normalization::NPowD(d))
        } else {
            Err(Error::param("D", "D = 1/2 lies on the boundary between regimes"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DcovEstimate {
    pub v_squared: f64,
    pub normalization: Normalization,
    /// `factor(n) · sqrt(v_squared)`.
    pub statistic: f64,
}

pub(crate) fn normalized_dcov(v_squared: f64, n: usize, normalization: Normalization) -> f64 {
    normalization.factor(n) * v_squared.sqrt()
}

pub fn test_stat_dcov(s: &PairedSample, normalization: Normalization) -> Result<DcovEstimate> {
    normalization.validate()?;
    let v_squared = dcov_squared_pairwise(s)?;
    Ok(DcovEstimate {
        v_squared,
        normalization,
        statistic: normalized_dcov(v_squared, s.len(), normalization),
    })
}

/// `n^{-1/2} Σ (X_i − X̄)(Y_i − Ȳ)`.
pub fn cov_stat_signed(s: &PairedSample) -> Result<f64> {
    s.require(2)?;
    Ok(centered_cross(&s.x, &s.y) / (s.len() as f64).sqrt())
}

pub(crate) fn abs_cov_slices(x: &[f64], y: &[f64]) -> f64 {
    (centered_cross(x, y) / (x.len() as f64).sqrt()).abs()
}

/// `n^{-1/2} |Σ (X_i − X̄)(Y_i − Ȳ)|`.
pub fn test_stat_cov(s: &PairedSample) -> Result<f64> {
    Ok(cov_stat_signed(s)?.abs())
}
