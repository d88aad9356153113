//! Empirical characteristic functions, weighted `L²` norms, the reduction
//! diagnostic, and the parameters of the complex-Gaussian and covariance
//! limits.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dcov::PairedSample;
use crate::error::{Error, Result};
pub use crate::quadrature::QuadratureGrid;
pub use crate::subordination::TruncatedSeries;

use std::f64::consts::PI;

/// `φ^{(n)}(s) = n^{-1} Σ_j e^{i s x_j}`.
pub fn ecf(x: &[f64], s: f64) -> Complex64 {
    if x.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    let (mut re, mut im) = (0.0, 0.0);
    for v in x {
        let (sin, cos) = (s * v).sin_cos();
        re += cos;
        im += sin;
    }
    let n = x.len() as f64;
    Complex64::new(re / n, im / n)
}

/// `n^{-1} Σ_j e^{i(u x_j + v y_j)}`.
pub fn joint_ecf(s: &PairedSample, u: f64, v: f64) -> Complex64 {
    if s.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    let (mut re, mut im) = (0.0, 0.0);
    for (x, y) in s.x().iter().zip(s.y()) {
        let (sin, cos) = (u * x + v * y).sin_cos();
        re += cos;
        im += sin;
    }
    let n = s.len() as f64;
    Complex64::new(re / n, im / n)
}

/// `φ_{X,Y}^{(n)}(u, v) − φ_X^{(n)}(u) φ_Y^{(n)}(v)`.
pub fn ecf_difference(s: &PairedSample, u: f64, v: f64) -> Complex64 {
    joint_ecf(s, u, v) - ecf(s.x(), u) * ecf(s.y(), v)
}

fn check_len(values: usize, grid: &QuadratureGrid) -> Result<()> {
    if values != grid.len() {
        return Err(Error::InvalidGrid(format!(
            "{values} samples for a grid of {} nodes",
            grid.len()
        )));
    }
    Ok(())
}

/// `∫_ℝ |f(s)|² / (π s²) ds` for `f` sampled at the positive grid nodes.
///
/// `f` must satisfy `f(−s) = conj f(s)` (true for characteristic functions
/// of real variables), so the negative half-line mirrors the positive one.
/// The region `|s| > upper` is not included.
pub fn weighted_l2_norm_sq(values: &[Complex64], grid: &QuadratureGrid) -> Result<f64> {
    check_len(values.len(), grid)?;
    let sum: f64 = values
        .iter()
        .zip(grid.nodes().iter().zip(grid.weights()))
        .map(|(f, (s, w))| w * f.norm_sqr() / (PI * s * s))
        .sum();
    Ok(2.0 * sum)
}

/// A function of `(s, t)` sampled on the upper half of a tensor grid:
/// `upper[i * m + j] = f(s_i, t_j)` and `lower[i * m + j] = f(s_i, −t_j)`.
/// The other half follows from `f(−s, −t) = conj f(s, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfPlaneSamples {
    pub upper: Vec<Complex64>,
    pub lower: Vec<Complex64>,
}

pub fn sample_ecf_difference(s: &PairedSample, grid: &QuadratureGrid) -> HalfPlaneSamples {
    let nodes = grid.nodes();
    let mut upper = Vec::with_capacity(nodes.len() * nodes.len());
    let mut lower = Vec::with_capacity(nodes.len() * nodes.len());
    for &u in nodes {
        for &v in nodes {
            upper.push(ecf_difference(s, u, v));
            lower.push(ecf_difference(s, u, -v));
        }
    }
    HalfPlaneSamples { upper, lower }
}

/// `∫∫ |f(s,t)|² / (π² s² t²) ds dt` over `[-S, S]²` by tensor quadrature.
pub fn weighted_l2_norm_sq_2d(f: &HalfPlaneSamples, grid: &QuadratureGrid) -> Result<f64> {
    let m = grid.len();
    if f.upper.len() != m * m || f.lower.len() != m * m {
        return Err(Error::InvalidGrid(format!(
            "expected {} samples per half-plane, got {} and {}",
            m * m,
            f.upper.len(),
            f.lower.len()
        )));
    }
    let (nodes, weights) = (grid.nodes(), grid.weights());
    let mut sum = 0.0;
    for i in 0..m {
        let wi = weights[i] / (PI * nodes[i] * nodes[i]);
        for j in 0..m {
            let wj = weights[j] / (PI * nodes[j] * nodes[j]);
            let k = i * m + j;
            sum += wi * wj * (f.upper[k].norm_sqr() + f.lower[k].norm_sqr());
        }
    }
    Ok(2.0 * sum)
}

/// `‖(φ^{(n)} − φ) − J₁ x̄‖₂` for a standard Gaussian model, where
/// `φ(s) = e^{−s²/2}` and `J₁(s) = i s e^{−s²/2}`.
pub fn reduction_residual(x: &[f64], grid: &QuadratureGrid) -> Result<f64> {
    if x.is_empty() {
        return Err(Error::Empty);
    }
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    let values: Vec<Complex64> = grid
        .nodes()
        .iter()
        .map(|&s| {
            let g = (-0.5 * s * s).exp();
            ecf(x, s) - g - Complex64::new(0.0, s * g * mean)
        })
        .collect();
    Ok(weighted_l2_norm_sq(&values, grid)?.sqrt())
}

/// Default truncation lag for the limit-parameter series.
pub const DEFAULT_KMAX: u64 = 100_000;

/// Autocovariance of an i.i.d. unit-variance sequence.
pub fn iid_autocov(k: u64) -> f64 {
    if k == 0 {
        1.0
    } else {
        0.0
    }
}

/// Two-sided sum `Σ_{|k| ≤ kmax} term(|k|)` with a power-law estimate of the
/// remainder fitted to the terms at `kmax/2` and `kmax`.
fn symmetric_series(kmax: u64, term: impl Fn(u64) -> f64) -> TruncatedSeries {
    let mut value = term(0);
    for k in 1..=kmax {
        value += 2.0 * term(k);
    }
    let tail = if kmax < 4 {
        0.0
    } else {
        let (mid, last) = (term(kmax / 2), term(kmax));
        if last == 0.0 || mid == 0.0 {
            0.0
        } else if mid.signum() != last.signum() {
            f64::NAN
        } else {
            let ratio = kmax as f64 / (kmax / 2) as f64;
            let p = (mid / last).ln() / ratio.ln();
            if p > 1.0 {
                2.0 * last * kmax as f64 / (p - 1.0)
            } else {
                f64::INFINITY.copysign(last)
            }
        }
    };
    TruncatedSeries { value, tail }
}

fn check_rho(rho: f64) -> f64 {
    debug_assert!(rho.abs() <= 1.0 + 1e-12, "autocovariance {rho} outside [-1, 1]");
    rho
}

/// `Γ_{s,t} = Σ_k (e^{−s²(1−ρ_X(k))} − e^{−s²})(e^{−t²(1−ρ_Y(k))} − e^{−t²})`.
pub fn gamma_param(
    s: f64,
    t: f64,
    rho_x: impl Fn(u64) -> f64,
    rho_y: impl Fn(u64) -> f64,
    kmax: u64,
) -> TruncatedSeries {
    let (s2, t2) = (s * s, t * t);
    let (es, et) = ((-s2).exp(), (-t2).exp());
    symmetric_series(kmax, |k| {
        let (rx, ry) = (check_rho(rho_x(k)), check_rho(rho_y(k)));
        ((-s2 * (1.0 - rx)).exp() - es) * ((-t2 * (1.0 - ry)).exp() - et)
    })
}

/// `C_{s,t}`: as [`gamma_param`] with `1 + ρ` in place of `1 − ρ`.
pub fn c_param(
    s: f64,
    t: f64,
    rho_x: impl Fn(u64) -> f64,
    rho_y: impl Fn(u64) -> f64,
    kmax: u64,
) -> TruncatedSeries {
    let (s2, t2) = (s * s, t * t);
    let (es, et) = ((-s2).exp(), (-t2).exp());
    symmetric_series(kmax, |k| {
        let (rx, ry) = (check_rho(rho_x(k)), check_rho(rho_y(k)));
        ((-s2 * (1.0 + rx)).exp() - es) * ((-t2 * (1.0 + ry)).exp() - et)
    })
}

/// `σ² = Σ_k ρ_X(k) ρ_Y(k)`, the limit variance of `n^{-1/2} Σ X_i Y_i`;
/// converges when `D_X + D_Y > 1`.
pub fn sigma_sq_cov(rho_x: impl Fn(u64) -> f64, rho_y: impl Fn(u64) -> f64, kmax: u64) -> TruncatedSeries {
    symmetric_series(kmax, |k| rho_x(k) * rho_y(k))
}

/// Variances of the real and imaginary parts of `Z ~ CN(0, Γ, C)` with real
/// `C`: `((Γ + C)/2, (Γ − C)/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComponentVariances {
    pub real: f64,
    pub imag: f64,
}

pub fn complex_gaussian_component_variances(gamma: f64, relation: f64) -> ComponentVariances {
    ComponentVariances {
        real: 0.5 * (gamma + relation),
        imag: 0.5 * (gamma - relation),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgn::fgn_autocov;

    fn pair(x: &[f64], y: &[f64]) -> PairedSample {
        PairedSample::new(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn ecf_examples() {
        let x = [0.3, -1.2, 2.5];
        assert_eq!(ecf(&x, 0.0), Complex64::new(1.0, 0.0));
        let z = ecf(&[0.0], PI);
        assert_eq!(z, Complex64::new(1.0, 0.0));
        let a = 0.8;
        for s in [0.1, 1.0, 3.7] {
            let z = ecf(&[-a, a], s);
            assert!((z.re - (a * s).cos()).abs() < 1e-15 && z.im.abs() < 1e-15);
        }
        for s in [0.2, 1.3, -4.0] {
            let z = ecf(&x, s);
            assert!(z.norm() <= 1.0 + 1e-15);
            assert_eq!(ecf(&x, -s), z.conj());
        }
    }

    #[test]
    fn joint_ecf_examples() {
        let s = pair(&[0.5, -0.3], &[1.0, 2.0]);
        assert_eq!(joint_ecf(&s, 0.0, 0.0), Complex64::new(1.0, 0.0));
        let (u, v) = (0.7, -1.1);
        let want = (Complex64::from_polar(1.0, u * 0.5 + v * 1.0)
            + Complex64::from_polar(1.0, u * -0.3 + v * 2.0))
            / 2.0;
        assert!((joint_ecf(&s, u, v) - want).norm() < 1e-15);
        let c = 2.5;
        let sc = pair(&[0.5, -0.3, 1.4], &[c; 3]);
        let want = Complex64::from_polar(1.0, v * c) * ecf(sc.x(), u);
        assert!((joint_ecf(&sc, u, v) - want).norm() < 1e-15);
        assert!(ecf_difference(&sc, u, v).norm() < 1e-15);
    }

    #[test]
    fn weighted_norm_examples() {
        let grid = QuadratureGrid::default_1d();
        let zero = vec![Complex64::new(0.0, 0.0); grid.len()];
        assert_eq!(weighted_l2_norm_sq(&zero, &grid).unwrap(), 0.0);
        let f = |g: &QuadratureGrid| -> Vec<Complex64> {
            g.nodes().iter().map(|s| Complex64::new(s * (-0.5 * s * s).exp(), 0.0)).collect()
        };
        let got = weighted_l2_norm_sq(&f(&grid), &grid).unwrap();
        let want = 1.0 / PI.sqrt();
        assert!((got - want).abs() < 1e-4, "{got} vs {want}");
        let fine = grid.refined();
        let got_fine = weighted_l2_norm_sq(&f(&fine), &fine).unwrap();
        assert!((got - got_fine).abs() < 1e-4);
        assert!(weighted_l2_norm_sq(&zero[1..], &grid).is_err());
    }

    #[test]
    fn tensor_norm_matches_separable_evaluation() {
        let x = [0.1, -0.4, 0.9, 1.3, -1.1, 0.05, 0.6];
        let y = [1.0, 0.2, -0.3, 0.8, 0.4, -0.9, 0.0];
        let s = pair(&x, &y);
        let grid = crate::dcov::default_ecf_grid(&s);
        let direct = weighted_l2_norm_sq_2d(&sample_ecf_difference(&s, &grid), &grid).unwrap();
        let separable = crate::dcov::dcov_squared_ecf_grid(&s, &grid).unwrap().grid_part;
        assert!((direct - separable).abs() <= 1e-10 * separable.abs().max(1e-12), "{direct} {separable}");
    }

    #[test]
    fn residual_of_degenerate_sample_is_finite() {
        let grid = QuadratureGrid::default_1d();
        let r = reduction_residual(&[0.0; 16], &grid).unwrap();
        // ∫ (1 − e^{−s²/2})² / (π s²) ds = 2(√2 − 1)/√π, less the |s| > 25 tail
        let full = 2.0 * (2f64.sqrt() - 1.0) / PI.sqrt();
        assert!(r.is_finite() && r > 0.0);
        assert!(r * r < full && r * r > full - 2.0 / (PI * 25.0) - 1e-3);
        assert!(reduction_residual(&[], &grid).is_err());
    }

    #[test]
    fn gamma_and_c_iid() {
        for (s, t) in [(1.0, 1.0), (0.5, 2.0), (1.3, 0.2)] {
            let g = gamma_param(s, t, iid_autocov, iid_autocov, 50);
            let want = (1.0 - (-s * s).exp()) * (1.0 - (-t * t).exp());
            assert!((g.value - want).abs() < 1e-15);
            assert_eq!(g.tail, 0.0);
            let c = c_param(s, t, iid_autocov, iid_autocov, 50);
            let want = ((-2.0 * s * s).exp() - (-s * s).exp()) * ((-2.0 * t * t).exp() - (-t * t).exp());
            assert!((c.value - want).abs() < 1e-15);
            let c_neg = c_param(-s, t, iid_autocov, iid_autocov, 50);
            assert_eq!(c.value, c_neg.value);
        }
        let g = gamma_param(0.0, 1.0, |k| fgn_autocov(k, 0.7), |k| fgn_autocov(k, 0.7), 100);
        assert_eq!(g.value, 0.0);
        let c = c_param(1.0, 0.0, |k| fgn_autocov(k, 0.7), |k| fgn_autocov(k, 0.7), 100);
        assert_eq!(c.value, 0.0);
    }

    #[test]
    fn gamma_fgn_converges() {
        let rho = |k| fgn_autocov(k, 0.6);
        let a = gamma_param(1.0, 1.0, rho, rho, 10_000);
        let b = gamma_param(1.0, 1.0, rho, rho, 20_000);
        assert!((a.value - b.value).abs() < 1e-5, "{a:?} {b:?}");
        assert!(a.value >= 0.0);
        // the fitted remainder accounts for most of the change
        assert!((a.value + a.tail - b.value - b.tail).abs() < (a.value - b.value).abs());
    }

    #[test]
    fn gamma_nonnegative_for_nonnegative_autocov() {
        for h in [0.55, 0.7, 0.9] {
            let rho = |k| fgn_autocov(k, h);
            for (s, t) in [(0.3, 0.3), (1.0, 2.0), (2.5, 0.7)] {
                assert!(gamma_param(s, t, rho, rho, 2000).value >= 0.0);
            }
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_sq_cov(iid_autocov, iid_autocov, 100).value, 1.0);
        let rho = |k| fgn_autocov(k, 0.6);
        assert_eq!(sigma_sq_cov(rho, iid_autocov, 100).value, 1.0);
        let a = sigma_sq_cov(rho, rho, 10_000);
        let b = sigma_sq_cov(rho, rho, 100_000);
        assert!(a.value > 1.0 && b.value > a.value);
        assert!((b.value - a.value) < 1e-3);
        assert!(a.tail > 0.0 && a.tail.is_finite());
    }

    #[test]
    fn component_variances() {
        let v = complex_gaussian_component_variances(0.4, 0.1);
        assert!((v.real - 0.25).abs() < 1e-15 && (v.imag - 0.15).abs() < 1e-15);
    }
}
