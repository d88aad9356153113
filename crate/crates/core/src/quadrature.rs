//! Gauss rules and one-sided quadrature grids on `(0, S]`.

use crate::error::{Error, Result};

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1);
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp;
        loop {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) as f64 * z * p2 - j as f64 * p3) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / dp;
            if (z - z1).abs() <= 1e-15 {
                break;
            }
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss–Hermite nodes and weights for `∫ e^{-u²} g(u) du` (physicists' weight).
pub fn gauss_hermite(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1);
    const PIM4: f64 = 0.751_125_544_464_942_5; // π^{-1/4}
    let n = order;
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mut z = 0.0;
    for i in 0..n.div_ceil(2) {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-14 * z.abs().max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    // ascending order
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// Nodes and weights for `∫_0^S g(s) ds`, where `g` is bounded near 0.
///
/// Used for even integrands over the real line: nodes are mirrored to
/// negative values by [`QuadratureGrid::integrate_even`]. No node sits at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    upper: f64,
    kind: GridKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum GridKind {
    Geometric { lower: f64, count: usize },
    Panels { width: f64, order: usize },
}

impl QuadratureGrid {
    /// `count` geometrically spaced nodes on `[lower, upper]`, trapezoid rule
    /// in `ln s`.
    ///
    /// The interval `[0, lower]` is covered by constant extrapolation of the
    /// integrand from the first node, so the first weight carries an extra
    /// `lower`.
    pub fn geometric(lower: f64, upper: f64, count: usize) -> Result<Self> {
        if !(lower > 0.0 && upper > lower && upper.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "need 0 < lower < upper, got [{lower}, {upper}]"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidGrid("need at least two nodes".into()));
        }
        let step = (upper / lower).ln() / (count - 1) as f64;
        let nodes: Vec<f64> = (0..count)
            .map(|i| {
                if i == count - 1 {
                    upper
                } else {
                    lower * (step * i as f64).exp()
                }
            })
            .collect();
        let mut weights: Vec<f64> = nodes.iter().map(|s| s * step).collect();
        weights[0] *= 0.5;
        weights[count - 1] *= 0.5;
        weights[0] += lower;
        Ok(Self {
            nodes,
            weights,
            upper,
            kind: GridKind::Geometric { lower, count },
        })
    }

    /// Default one-dimensional grid: 600 geometric nodes on `[1e-3, 25]`.
    pub fn default_1d() -> Self {
        Self::geometric(1e-3, 25.0, 600).expect("static grid parameters are valid")
    }

    /// Composite Gauss–Legendre rule on `[0, upper]` with panels of
    /// (at most) `width` and `order` nodes each. Suited to oscillatory
    /// integrands such as products of empirical characteristic functions.
    pub fn panels(upper: f64, width: f64, order: usize) -> Result<Self> {
        if !(upper > 0.0 && upper.is_finite() && width > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "need positive finite upper bound and panel width, got {upper}, {width}"
            )));
        }
        if order == 0 {
            return Err(Error::InvalidGrid("panel order must be positive".into()));
        }
        let count = (upper / width).ceil() as usize;
        let h = upper / count as f64;
        let (gx, gw) = gauss_legendre(order);
        let mut nodes = Vec::with_capacity(count * order);
        let mut weights = Vec::with_capacity(count * order);
        for p in 0..count {
            let left = p as f64 * h;
            for (x, w) in gx.iter().zip(&gw) {
                nodes.push(left + 0.5 * h * (x + 1.0));
                weights.push(0.5 * h * w);
            }
        }
        Ok(Self {
            nodes,
            weights,
            upper,
            kind: GridKind::Panels { width, order },
        })
    }

    /// Same construction with twice the resolution.
    pub fn refined(&self) -> Self {
        match self.kind {
            GridKind::Geometric { lower, count } => {
                Self::geometric(lower, self.upper, 2 * count - 1).expect("refinement of a valid grid")
            }
            GridKind::Panels { width, order } => {
                Self::panels(self.upper, width / 2.0, order).expect("refinement of a valid grid")
            }
        }
    }

    /// Same construction with a different upper cut-off.
    pub fn with_upper(&self, upper: f64) -> Result<Self> {
        match self.kind {
            GridKind::Geometric { lower, count } => Self::geometric(lower, upper, count),
            GridKind::Panels { width, order } => Self::panels(upper, width, order),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes.len() != self.weights.len() || self.nodes.is_empty() {
            return Err(Error::InvalidGrid("nodes and weights disagree".into()));
        }
        if self.nodes[0] <= 0.0 {
            return Err(Error::InvalidGrid("grid contains a node at or below 0".into()));
        }
        if self.nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid("nodes are not strictly increasing".into()));
        }
        if self.weights.iter().any(|w| !(*w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidGrid("weights must be positive and finite".into()));
        }
        Ok(())
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Largest node; the grid covers `(0, upper]`.
    pub fn upper(&self) -> f64 {
        self.upper
    }

    /// `∫_{-S}^{S} g(s) ds` for an even `g`.
    pub fn integrate_even(&self, g: impl Fn(f64) -> f64) -> f64 {
        2.0 * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&s, &w)| w * g(s))
            .sum::<f64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(8);
        // exact through degree 15
        for deg in 0..=15 {
            let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg)).sum();
            let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
            assert!((got - want).abs() < 1e-14, "degree {deg}: {got}");
        }
    }

    #[test]
    fn hermite_moments() {
        let (u, w) = gauss_hermite(128);
        let sq_pi = std::f64::consts::PI.sqrt();
        assert!(u.windows(2).all(|p| p[1] > p[0]));
        let total: f64 = w.iter().sum();
        assert!((total - sq_pi).abs() < 1e-13);
        // E X^4 = 3 and E X^6 = 15 for X standard normal, via x = sqrt(2) u
        let moment = |p: i32| -> f64 {
            u.iter()
                .zip(&w)
                .map(|(u, w)| w * (std::f64::consts::SQRT_2 * u).powi(p))
                .sum::<f64>()
                / sq_pi
        };
        assert!((moment(4) - 3.0).abs() < 1e-12);
        assert!((moment(6) - 15.0).abs() < 1e-11);
    }

    #[test]
    fn geometric_grid_is_valid_and_refines() {
        let g = QuadratureGrid::default_1d();
        g.validate().unwrap();
        assert_eq!(g.len(), 600);
        let r = g.refined();
        r.validate().unwrap();
        assert_eq!(r.len(), 1199);
        assert!(QuadratureGrid::geometric(0.0, 1.0, 10).is_err());
        assert!(QuadratureGrid::geometric(2.0, 1.0, 10).is_err());
    }

    #[test]
    fn panel_grid_integrates_gaussian() {
        let g = QuadratureGrid::panels(12.0, 0.5, 8).unwrap();
        g.validate().unwrap();
        let got = g.integrate_even(|s| (-s * s).exp());
        assert!((got - std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }
}
