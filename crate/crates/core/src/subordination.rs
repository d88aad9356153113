//! Hermite expansions of transforms of a standard normal variable, and the
//! marginal/dependence transforms used by the simulation scenarios.

use std::sync::OnceLock;

use rand_distr::{Distribution, Uniform};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgn::TimeSeries;
use crate::quadrature::gauss_hermite;
use crate::rng::stream;
use crate::special::normal_cdf;

pub const MAX_HERMITE_ORDER: usize = 60;
pub const GAUSS_HERMITE_NODES: usize = 128;
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Probabilists' Hermite polynomial `H_q(x)`.
pub fn hermite_poly(q: usize, x: f64) -> Result<f64> {
    if q > MAX_HERMITE_ORDER {
        return Err(Error::HermiteOrderTooLarge(q));
    }
    Ok(hermite_unchecked(q, x))
}

fn hermite_unchecked(q: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..q {
        let next = x * cur - k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Nodes `x_i = sqrt(2) u_i` and weights `w_i / sqrt(π)` so that
/// `E g(X) ≈ Σ_i weight_i g(x_i)` for `X ~ N(0, 1)`.
fn normal_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let (u, w) = gauss_hermite(GAUSS_HERMITE_NODES);
        let norm = std::f64::consts::PI.sqrt();
        (
            u.iter().map(|u| std::f64::consts::SQRT_2 * u).collect(),
            w.iter().map(|w| w / norm).collect(),
        )
    })
}

/// `E g(X)` for `X ~ N(0, 1)` by 128-node Gauss–Hermite quadrature.
pub fn gaussian_expectation(g: impl Fn(f64) -> f64) -> Result<f64> {
    let (x, w) = normal_rule();
    let sum: f64 = x.iter().zip(w).map(|(x, w)| w * g(*x)).sum();
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::NonFiniteQuadrature)
    }
}

/// Hermite coefficient `J_q(G) = E[G(X) H_q(X)]`.
pub fn hermite_coefficient(g: impl Fn(f64) -> f64, q: usize) -> Result<f64> {
    if q > MAX_HERMITE_ORDER {
        return Err(Error::HermiteOrderTooLarge(q));
    }
    gaussian_expectation(|x| g(x) * hermite_unchecked(q, x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermiteExpansion {
    /// `J_0, …, J_qmax`.
    pub coefficients: Vec<f64>,
    /// Smallest `q ≥ 1` with `|J_q| > rank_tol`; `None` if no such `q ≤ qmax`.
    pub rank: Option<usize>,
    pub rank_tol: f64,
    /// `E G(X)²`, used for the Parseval tail bound.
    pub second_moment: f64,
}

impl HermiteExpansion {
    pub fn compute(g: impl Fn(f64) -> f64, qmax: usize, rank_tol: f64) -> Result<Self> {
        if qmax > MAX_HERMITE_ORDER {
            return Err(Error::HermiteOrderTooLarge(qmax));
        }
        let (x, w) = normal_rule();
        let gx: Vec<f64> = x.iter().map(|x| g(*x)).collect();
        let mut coefficients = Vec::with_capacity(qmax + 1);
        for q in 0..=qmax {
            let c: f64 = x
                .iter()
                .zip(w)
                .zip(&gx)
                .map(|((x, w), g)| w * g * hermite_unchecked(q, *x))
                .sum();
            if !c.is_finite() {
                return Err(Error::NonFiniteQuadrature);
            }
            coefficients.push(c);
        }
        let second_moment: f64 = w.iter().zip(&gx).map(|(w, g)| w * g * g).sum();
        if !second_moment.is_finite() {
            return Err(Error::NonFiniteQuadrature);
        }
        let rank = (1..=qmax).find(|&q| coefficients[q].abs() > rank_tol);
        Ok(Self {
            coefficients,
            rank,
            rank_tol,
            second_moment,
        })
    }

    pub fn qmax(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `Σ_{q=1}^{qmax} J_q² / q!`.
    pub fn explained_variance(&self) -> f64 {
        let mut fact = 1.0;
        let mut sum = 0.0;
        for (q, c) in self.coefficients.iter().enumerate().skip(1) {
            fact *= q as f64;
            sum += c * c / fact;
        }
        sum
    }

    /// `Var G(X) − Σ_{q≤qmax} J_q²/q!`, clamped at zero.
    pub fn unexplained_variance(&self) -> f64 {
        let j0 = self.coefficients[0];
        (self.second_moment - j0 * j0 - self.explained_variance()).max(0.0)
    }
}

pub fn hermite_rank(g: impl Fn(f64) -> f64, qmax: usize, rank_tol: f64) -> Result<usize> {
    if qmax == 0 {
        return Err(Error::param("qmax", "must be at least 1"));
    }
    HermiteExpansion::compute(g, qmax, rank_tol)?
        .rank
        .ok_or(Error::RankUndetected { qmax })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    pub value: f64,
    /// Bound (or estimate) of the omitted remainder.
    pub tail: f64,
}

/// `Cov(G(ξ_0), G(ξ_k)) = Σ_{r≥1} J_r²/r! ρ^r` where `ρ = Cov(ξ_0, ξ_k)`.
///
/// The remainder after `qmax` is bounded by the unexplained variance times
/// `|ρ|^{qmax+1}`.
pub fn subordinated_autocov(expansion: &HermiteExpansion, rho: f64) -> Result<TruncatedSeries> {
    if rho.is_nan() || rho.abs() > 1.0 {
        return Err(Error::param("rho", format!("must lie in [-1, 1], got {rho}")));
    }
    let mut fact = 1.0;
    let mut power = 1.0;
    let mut value = 0.0;
    for (q, c) in expansion.coefficients.iter().enumerate().skip(1) {
        fact *= q as f64;
        power *= rho;
        value += c * c / fact * power;
    }
    let tail = expansion.unexplained_variance() * rho.abs().powi(expansion.qmax() as i32 + 1);
    Ok(TruncatedSeries { value, tail })
}

/// Elementwise `2Φ(z) − 1`; uniform on `[-1, 1]` for standard normal input.
pub fn transform_uniform(z: &TimeSeries) -> TimeSeries {
    let values = z.values().iter().map(|v| 2.0 * normal_cdf(*v) - 1.0).collect();
    TimeSeries::from_finite(values, z.meta().cloned())
}

fn uniform_noise(len: usize, seed: u64) -> Vec<f64> {
    let dist = Uniform::new_inclusive(-1.0, 1.0).expect("static bounds");
    let mut rng = stream(seed);
    (0..len).map(|_| dist.sample(&mut rng)).collect()
}

/// Largest admissible `v²` for [`transform_parabolic`].
pub const PARABOLIC_V2_MAX: f64 = 15.0 / 4.0;
/// Largest admissible `v²` for [`transform_wavy`].
pub const WAVY_V2_MAX: f64 = 4725.0 / 242.0;

/// `Y = v (X² − 1/3) + w ξ`, `w = sqrt(1 − 4v²/15)`, `ξ` i.i.d. `U[-1, 1]`.
///
/// For `X ~ U[-1, 1]` this keeps mean 0 and variance 1/3.
pub fn transform_parabolic(x: &TimeSeries, v: f64, seed: u64) -> Result<TimeSeries> {
    if !(v.is_finite() && v * v <= PARABOLIC_V2_MAX * (1.0 + 1e-12)) {
        return Err(Error::param("v", format!("need v² ≤ 15/4, got v = {v}")));
    }
    let w = (1.0 - 4.0 / 15.0 * v * v).max(0.0).sqrt();
    let noise = uniform_noise(x.len(), seed);
    let values = x
        .values()
        .iter()
        .zip(&noise)
        .map(|(x, xi)| v * (x * x - 1.0 / 3.0) + w * xi)
        .collect();
    Ok(TimeSeries::from_finite(values, None))
}

/// `Y = v ((X² − 1/3)² − 3/45) + w ξ`, `w = sqrt(1 − 242 v²/4725)`.
///
/// The constants are used exactly as published. For `X ~ U[-1, 1]`,
/// `E(X² − 1/3)² = 4/45`, so `E Y = v/45` and
/// `Var Y = 128 v²/14175 + w²/3`; neither equals the nominal 0 and 1/3
/// unless `v = 0`.
pub fn transform_wavy(x: &TimeSeries, v: f64, seed: u64) -> Result<TimeSeries> {
    if !(v.is_finite() && v * v <= WAVY_V2_MAX * (1.0 + 1e-12)) {
        return Err(Error::param("v", format!("need v² ≤ 4725/242, got v = {v}")));
    }
    let w = (1.0 - 242.0 / 4725.0 * v * v).max(0.0).sqrt();
    let noise = uniform_noise(x.len(), seed);
    let values = x
        .values()
        .iter()
        .zip(&noise)
        .map(|(x, xi)| {
            let c = x * x - 1.0 / 3.0;
            v * (c * c - 3.0 / 45.0) + w * xi
        })
        .collect();
    Ok(TimeSeries::from_finite(values, None))
}

/// Rotates each row `(ξ_i, η_i)` by `θ = πv/12` (row vector times the
/// rotation matrix): `(ξ cosθ + η sinθ, −ξ sinθ + η cosθ)`.
pub fn transform_rotation(
    xi: &TimeSeries,
    eta: &TimeSeries,
    v: f64,
) -> Result<(TimeSeries, TimeSeries)> {
    if xi.len() != eta.len() {
        return Err(Error::LengthMismatch {
            left: xi.len(),
            right: eta.len(),
        });
    }
    if !v.is_finite() {
        return Err(Error::param("v", "must be finite"));
    }
    let theta = std::f64::consts::PI * v / 12.0;
    let (sin, cos) = theta.sin_cos();
    let (x, y): (Vec<f64>, Vec<f64>) = xi
        .values()
        .iter()
        .zip(eta.values())
        .map(|(a, b)| (a * cos + b * sin, -a * sin + b * cos))
        .unzip();
    Ok((TimeSeries::from_finite(x, None), TimeSeries::from_finite(y, None)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_distr::StandardNormal;

    fn ts(v: Vec<f64>) -> TimeSeries {
        TimeSeries::new(v).unwrap()
    }

    fn uniform_cdf_transform(x: f64) -> f64 {
        2.0 * normal_cdf(x) - 1.0
    }

    #[test]
    fn hermite_poly_examples() {
        for x in [-2.0, 0.3, 1.7] {
            assert_eq!(hermite_poly(1, x).unwrap(), x);
            assert_eq!(hermite_poly(0, x).unwrap(), 1.0);
        }
        assert_eq!(hermite_poly(2, 1.0).unwrap(), 0.0);
        assert_eq!(hermite_poly(3, 2.0).unwrap(), 2.0);
        assert!(matches!(hermite_poly(61, 1.0), Err(Error::HermiteOrderTooLarge(61))));
    }

    #[test]
    fn hermite_coefficient_examples() {
        assert!((hermite_coefficient(|x| x, 1).unwrap() - 1.0).abs() < 1e-12);
        for q in 2..8 {
            assert!(hermite_coefficient(|x| x, q).unwrap().abs() < 1e-10);
        }
        assert!((hermite_coefficient(|x| x * x, 2).unwrap() - 2.0).abs() < 1e-12);
        let j1 = hermite_coefficient(uniform_cdf_transform, 1).unwrap();
        assert!((j1 - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!((j1 - 0.564190).abs() < 1e-6);
    }

    #[test]
    fn hermite_coefficient_matches_fine_riemann_oracle() {
        // independent check of E[X Φ(X)] with a plain Riemann sum
        let h = 1e-4;
        let mut sum = 0.0;
        let mut x: f64 = -12.0;
        while x < 12.0 {
            let dens = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
            sum += x * normal_cdf(x) * dens * h;
            x += h;
        }
        let j1 = hermite_coefficient(uniform_cdf_transform, 1).unwrap();
        assert!((j1 - 2.0 * sum).abs() < 1e-8);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(hermite_rank(|x| x, 10, DEFAULT_RANK_TOL).unwrap(), 1);
        assert_eq!(hermite_rank(|x| x * x - 1.0, 10, DEFAULT_RANK_TOL).unwrap(), 2);
        assert_eq!(hermite_rank(uniform_cdf_transform, 10, DEFAULT_RANK_TOL).unwrap(), 1);
        assert_eq!(hermite_rank(|x| x.powi(3) - 3.0 * x, 10, DEFAULT_RANK_TOL).unwrap(), 3);
        assert!(matches!(
            hermite_rank(|_| 1.0, 5, DEFAULT_RANK_TOL),
            Err(Error::RankUndetected { qmax: 5 })
        ));
        assert!(hermite_rank(|x| x, 0, DEFAULT_RANK_TOL).is_err());
    }

    #[test]
    fn orthogonality() {
        for p in 0..=10 {
            for q in 0..=10 {
                let got = gaussian_expectation(|x| {
                    hermite_unchecked(p, x) * hermite_unchecked(q, x)
                })
                .unwrap();
                let want = if p == q {
                    (1..=p).map(|k| k as f64).product::<f64>()
                } else {
                    0.0
                };
                assert!((got - want).abs() < 1e-8 * want.max(1.0), "p={p} q={q}: {got}");
            }
        }
    }

    #[test]
    fn parseval_for_uniform_transform() {
        let exp = HermiteExpansion::compute(uniform_cdf_transform, 30, DEFAULT_RANK_TOL).unwrap();
        let total = exp.explained_variance();
        let eg2 = 1.0 / 3.0;
        assert!((exp.second_moment - eg2).abs() < 1e-12);
        assert!(total <= eg2 + 1e-12 && total >= eg2 - 1e-6, "{total}");
        assert_eq!(exp.rank, Some(1));
    }

    #[test]
    fn subordinated_autocov_examples() {
        let id = HermiteExpansion::compute(|x| x, 10, DEFAULT_RANK_TOL).unwrap();
        assert!((subordinated_autocov(&id, 0.3).unwrap().value - 0.3).abs() < 1e-12);
        assert_eq!(subordinated_autocov(&id, 0.0).unwrap().value, 0.0);
        let sq = HermiteExpansion::compute(|x| x * x - 1.0, 10, DEFAULT_RANK_TOL).unwrap();
        assert!((subordinated_autocov(&sq, 0.5).unwrap().value - 0.5).abs() < 1e-12);
        assert!(subordinated_autocov(&sq, 1.5).is_err());

        // Cov(2Φ(ξ0)−1, 2Φ(ξk)−1) = (2/π) asin(ρ/2) for a Gaussian pair
        let u = HermiteExpansion::compute(uniform_cdf_transform, 40, DEFAULT_RANK_TOL).unwrap();
        let rho = 0.6;
        let got = subordinated_autocov(&u, rho).unwrap();
        let want = 2.0 / std::f64::consts::PI * (rho / 2.0).asin();
        assert!((got.value - want).abs() < 1e-9 + got.tail);
    }

    #[test]
    fn uniform_transform_moments() {
        let z = ts(vec![0.0]);
        assert_eq!(transform_uniform(&z).values()[0], 0.0);
        assert_eq!(transform_uniform(&ts(vec![40.0])).values()[0], 1.0);
        let mut rng = stream(11);
        let draws: Vec<f64> = (0..100_000).map(|_| StandardNormal.sample(&mut rng)).collect();
        let u = transform_uniform(&ts(draws));
        let var = sample_var(u.values());
        assert!((var - 1.0 / 3.0).abs() < 0.01);
    }

    fn sample_var(v: &[f64]) -> f64 {
        let n = v.len() as f64;
        let m = v.iter().sum::<f64>() / n;
        v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0)
    }

    fn uniform_sample(n: usize, seed: u64) -> TimeSeries {
        ts(uniform_noise(n, seed))
    }

    #[test]
    fn parabolic_transform() {
        let x = uniform_sample(100_000, 1);
        let y0 = transform_parabolic(&x, 0.0, 2).unwrap();
        assert!((sample_var(y0.values()) - 1.0 / 3.0).abs() < 0.01);
        let y1 = transform_parabolic(&x, 1.0, 2).unwrap();
        // Var of Y is 1/3; its sample variance has sd about 0.0011 at this n
        let var = sample_var(y1.values());
        assert!((var - 1.0 / 3.0).abs() < 0.01, "{var}");
        let vmax = 15f64.sqrt() / 2.0;
        let yb = transform_parabolic(&x, vmax, 2).unwrap();
        let yc = transform_parabolic(&x, vmax, 99).unwrap();
        assert_eq!(yb.values(), yc.values());
        assert!(transform_parabolic(&x, 2.0, 2).is_err());
    }

    #[test]
    fn wavy_transform_moments_as_printed() {
        let x = uniform_sample(100_000, 3);
        let y0 = transform_wavy(&x, 0.0, 4).unwrap();
        assert!((sample_var(y0.values()) - 1.0 / 3.0).abs() < 0.01);
        let y2 = transform_wavy(&x, 2.0, 4).unwrap();
        let mean = y2.values().iter().sum::<f64>() / y2.len() as f64;
        assert!((mean - 2.0 / 45.0).abs() < 0.01, "{mean}");
        let v: f64 = 2.0;
        let want_var = 128.0 / 14175.0 * v * v + (1.0 - 242.0 / 4725.0 * v * v) / 3.0;
        assert!((sample_var(y2.values()) - want_var).abs() < 0.01);
        assert!(transform_wavy(&x, 4.5, 4).is_err());
    }

    #[test]
    fn rotation_examples() {
        let a = ts(vec![0.1, -0.4, 0.9]);
        let b = ts(vec![0.5, 0.2, -0.7]);
        let (x, y) = transform_rotation(&a, &b, 0.0).unwrap();
        assert_eq!(x.values(), a.values());
        assert_eq!(y.values(), b.values());
        let (x, y) = transform_rotation(&a, &b, 6.0).unwrap();
        for i in 0..3 {
            assert!((x.values()[i] - b.values()[i]).abs() < 1e-15);
            assert!((y.values()[i] + a.values()[i]).abs() < 1e-15);
        }
        let (x, y) = transform_rotation(&a, &b, 1.7).unwrap();
        for i in 0..3 {
            let before = a.values()[i].powi(2) + b.values()[i].powi(2);
            let after = x.values()[i].powi(2) + y.values()[i].powi(2);
            assert!((before - after).abs() < 1e-15);
        }
        assert!(transform_rotation(&a, &ts(vec![1.0]), 1.0).is_err());
    }
}
