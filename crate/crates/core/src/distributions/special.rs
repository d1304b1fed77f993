//! Scalar special functions backing the distribution laws: standard normal
//! CDF/density/partial moment and the regularized lower incomplete gamma.

use std::f64::consts::PI;

pub(crate) const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Standard normal cumulative distribution function.
///
/// Computed as `0.5 * erfc(-x / sqrt(2))`; exact at `±inf`.
pub fn normal_cdf(x: f64) -> f64 {
    if x.is_infinite() {
        return if x > 0.0 { 1.0 } else { 0.0 };
    }
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    if x.is_infinite() {
        return 0.0;
    }
    (-0.5 * x * x).exp() / SQRT_2PI
}

/// First partial moment of the standard normal, `E[Z 1{Z <= x}] = -phi(x)`.
pub fn normal_partial_moment(x: f64) -> f64 {
    -normal_pdf(x)
}

/// `x^k * phi(x)` with the correct zero limit at `±inf`.
pub(crate) fn xk_pdf(x: f64, k: u32) -> f64 {
    if x.is_infinite() {
        return 0.0;
    }
    x.powi(k as i32) * normal_pdf(x)
}

/// Natural log of the gamma function.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Regularized lower incomplete gamma `P(a, x) = gamma(a, x) / Gamma(a)`.
///
/// Series expansion for `x < a + 1`, Lentz continued fraction for the
/// complementary function otherwise; relative error below 1e-13 over the
/// parameter ranges used here.
pub fn reg_lower_gamma(a: f64, x: f64) -> f64 {
    assert!(a > 0.0, "shape must be positive, got {a}");
    if x <= 0.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return 1.0;
    }
    if x < a + 1.0 {
        lower_gamma_series(a, x)
    } else {
        1.0 - upper_gamma_cf(a, x)
    }
}

fn lower_gamma_series(a: f64, x: f64) -> f64 {
    // P(a,x) = x^a e^-x / Gamma(a) * sum_{n>=0} x^n / (a (a+1) ... (a+n))
    let mut ap = a;
    let mut sum = 1.0 / a;
    let mut del = sum;
    for _ in 0..500 {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if del.abs() < sum.abs() * 1e-16 {
            break;
        }
    }
    sum * (a * x.ln() - x - ln_gamma(a)).exp()
}

fn upper_gamma_cf(a: f64, x: f64) -> f64 {
    // Q(a,x) via modified Lentz on the standard continued fraction.
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..500 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (a * x.ln() - x - ln_gamma(a)).exp()
}

/// Truncated raw moments of the standard normal,
/// `M_k = E[Z^k 1{a <= Z <= b}]` for `k = 0..=4`.
///
/// Recursion `M_k = (k-1) M_{k-2} + a^{k-1} phi(a) - b^{k-1} phi(b)`.
pub(crate) fn truncated_normal_moments(a: f64, b: f64) -> [f64; 5] {
    let m0 = normal_cdf(b) - normal_cdf(a);
    let m1 = normal_pdf(a) - normal_pdf(b);
    let m2 = m0 + xk_pdf(a, 1) - xk_pdf(b, 1);
    let m3 = 2.0 * m1 + xk_pdf(a, 2) - xk_pdf(b, 2);
    let m4 = 3.0 * m2 + xk_pdf(a, 3) - xk_pdf(b, 3);
    [m0, m1, m2, m3, m4]
}

pub(crate) fn two_pi() -> f64 {
    2.0 * PI
}
