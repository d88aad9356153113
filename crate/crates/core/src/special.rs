//! Scalar special functions used across the crate.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64;

/// Standard normal distribution function.
#[inline]
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Sine integral `Si(x) = ∫_0^x sin(u)/u du`.
pub fn sine_integral(x: f64) -> f64 {
    if x < 0.0 {
        return -sine_integral(-x);
    }
    if x == 0.0 {
        return 0.0;
    }
    if x <= 2.0 {
        // power series, alternating and rapidly convergent on [0, 2]
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        let mut k = 1usize;
        loop {
            let kk = (2 * k) as f64;
            term *= -x2 / (kk * (kk + 1.0));
            let contrib = term / (kk + 1.0);
            sum += contrib;
            if contrib.abs() < 1e-17 * sum.abs() {
                break;
            }
            k += 1;
        }
        return sum;
    }
    // Continued fraction for E1(ix) evaluated with the modified Lentz method.
    const TINY: f64 = 1e-300;
    let one = Complex64::new(1.0, 0.0);
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = one / b;
    let mut h = d;
    for i in 2..10_000 {
        let a = -((i - 1) * (i - 1)) as f64;
        b += 2.0;
        d = one / (d * a + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(x.cos(), -x.sin());
    FRAC_PI_2 + h.im
}

/// `∫_S^∞ cos(Δ s) / s² ds` for `S > 0`.
pub fn cosine_tail_over_s2(delta: f64, lower: f64) -> f64 {
    let delta = delta.abs();
    if delta == 0.0 {
        return 1.0 / lower;
    }
    (delta * lower).cos() / lower - delta * (FRAC_PI_2 - sine_integral(delta * lower))
}
