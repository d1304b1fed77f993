//! Closed-form distribution laws (CDF, first and second partial moments)
//! driving every quadrature, Lloyd iteration and transition computation:
//! normal, Gamma, the noncentral-square law of the Milstein volatility step,
//! finite mixtures, and the correlated bivariate normal.

mod bivariate;
mod special;

pub use bivariate::{bivariate_normal_cdf, bivariate_normal_rectangle};
pub use special::{ln_gamma, normal_cdf, normal_partial_moment, normal_pdf, reg_lower_gamma};

use serde::{Deserialize, Serialize};
use special::{truncated_normal_moments, SQRT_2PI};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistError {
    #[error("invalid rectangle: [{a}, {b}] x [{c}, {d}]")]
    InvalidRectangle { a: f64, b: f64, c: f64, d: f64 },
    #[error("invalid distribution parameters: {0}")]
    InvalidParameters(String),
}

/// A one-dimensional law exposing everything Lloyd's method and the cell
/// integrations need in closed form.
///
/// All implementations are pure and immutable after construction.
pub trait Law1D {
    /// `P(X <= x)`; exact at `±inf`.
    fn cdf(&self, x: f64) -> f64;
    /// First partial moment `E[X 1{X <= x}]`.
    fn partial_moment(&self, x: f64) -> f64;
    /// Second partial moment `E[X^2 1{X <= x}]`.
    fn second_partial_moment(&self, x: f64) -> f64;
    fn mean(&self) -> f64;
    /// Left endpoint of the support (`-inf` when unbounded below).
    fn support_left(&self) -> f64;
}

/// Gamma law with shape `alpha` and rate `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaLaw {
    alpha: f64,
    beta: f64,
}

impl GammaLaw {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, DistError> {
        if !(alpha > 0.0) || !(beta > 0.0) || !alpha.is_finite() || !beta.is_finite() {
            return Err(DistError::InvalidParameters(format!(
                "gamma law requires alpha > 0 and beta > 0, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn variance(&self) -> f64 {
        self.alpha / (self.beta * self.beta)
    }

    pub fn density(&self, x: f64) -> f64 {
        if x <= 0.0 || x.is_infinite() {
            return 0.0;
        }
        (self.alpha * self.beta.ln() + (self.alpha - 1.0) * x.ln()
            - self.beta * x
            - ln_gamma(self.alpha))
            .exp()
    }

    /// `x^alpha e^{-x} / Gamma(alpha)` for the unit-rate partial moment.
    fn unit_density_tail(alpha: f64, x: f64) -> f64 {
        if x <= 0.0 || x.is_infinite() {
            return 0.0;
        }
        (alpha * x.ln() - x - ln_gamma(alpha)).exp()
    }
}

impl Law1D for GammaLaw {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        reg_lower_gamma(self.alpha, self.beta * x)
    }

    fn partial_moment(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        // Unit rate: K(x) = alpha F(x) - x^alpha e^{-x} / Gamma(alpha);
        // rate beta by rescaling: K_beta(x) = K_1(beta x) / beta.
        let u = self.beta * x;
        (self.alpha * reg_lower_gamma(self.alpha, u) - Self::unit_density_tail(self.alpha, u))
            / self.beta
    }

    fn second_partial_moment(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        // E[X^2 1{X<=x}] = alpha (alpha+1) / beta^2 * P(alpha+2, beta x)
        self.alpha * (self.alpha + 1.0) / (self.beta * self.beta)
            * reg_lower_gamma(self.alpha + 2.0, self.beta * x)
    }

    fn mean(&self) -> f64 {
        self.alpha / self.beta
    }

    fn support_left(&self) -> f64 {
        0.0
    }
}

/// Law of `U = mu + kappa (Z + lambda)^2` with `Z ~ N(0,1)`: the exact
/// one-step law of the Milstein scheme on the boosted volatility.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoncentralSquareLaw {
    mu: f64,
    kappa: f64,
    lambda: f64,
}

impl NoncentralSquareLaw {
    pub fn new(mu: f64, kappa: f64, lambda: f64) -> Result<Self, DistError> {
        if !(kappa > 0.0) || !(lambda >= 0.0) || !mu.is_finite() {
            return Err(DistError::InvalidParameters(format!(
                "noncentral square law requires kappa > 0 and lambda >= 0, \
                 got mu={mu}, kappa={kappa}, lambda={lambda}"
            )));
        }
        Ok(Self { mu, kappa, lambda })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Standardized band `(x_-, x_+) = (-s - lambda, s - lambda)` with
    /// `s = sqrt((x - mu) / kappa)`.
    fn band(&self, x: f64) -> (f64, f64) {
        if x.is_infinite() {
            return (f64::NEG_INFINITY, f64::INFINITY);
        }
        let s = ((x - self.mu) / self.kappa).sqrt();
        (-s - self.lambda, s - self.lambda)
    }
}

impl Law1D for NoncentralSquareLaw {
    fn cdf(&self, x: f64) -> f64 {
        if x <= self.mu {
            return 0.0;
        }
        let (lo, hi) = self.band(x);
        normal_cdf(hi) - normal_cdf(lo)
    }

    fn partial_moment(&self, x: f64) -> f64 {
        if x <= self.mu {
            return 0.0;
        }
        if x.is_infinite() {
            return self.mean();
        }
        let (lo, hi) = self.band(x);
        let f = normal_cdf(hi) - normal_cdf(lo);
        f * self.mean()
            + self.kappa / SQRT_2PI
                * (lo * (-0.5 * hi * hi).exp() - hi * (-0.5 * lo * lo).exp())
    }

    fn second_partial_moment(&self, x: f64) -> f64 {
        if x <= self.mu {
            return 0.0;
        }
        let (a, b) = self.band(x);
        let m = truncated_normal_moments(a, b);
        let l = self.lambda;
        // (Z + lambda)^2 and (Z + lambda)^4 expanded over truncated moments.
        let t2 = m[2] + 2.0 * l * m[1] + l * l * m[0];
        let t4 = m[4] + 4.0 * l * m[3] + 6.0 * l * l * m[2] + 4.0 * l * l * l * m[1]
            + l * l * l * l * m[0];
        self.mu * self.mu * m[0] + 2.0 * self.mu * self.kappa * t2 + self.kappa * self.kappa * t4
    }

    fn mean(&self) -> f64 {
        self.mu + self.kappa * (self.lambda * self.lambda + 1.0)
    }

    fn support_left(&self) -> f64 {
        self.mu
    }
}

/// Normal law, possibly degenerate (`sigma = 0` is the point mass at `mu`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalLaw {
    mu: f64,
    sigma: f64,
}

impl NormalLaw {
    pub fn new(mu: f64, sigma: f64) -> Result<Self, DistError> {
        if !mu.is_finite() || !(sigma >= 0.0) || !sigma.is_finite() {
            return Err(DistError::InvalidParameters(format!(
                "normal law requires finite mu and sigma >= 0, got mu={mu}, sigma={sigma}"
            )));
        }
        Ok(Self { mu, sigma })
    }

    pub fn standard() -> Self {
        Self { mu: 0.0, sigma: 1.0 }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    fn z(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return x;
        }
        (x - self.mu) / self.sigma
    }
}

impl Law1D for NormalLaw {
    fn cdf(&self, x: f64) -> f64 {
        if self.sigma == 0.0 {
            return if x >= self.mu { 1.0 } else { 0.0 };
        }
        normal_cdf(self.z(x))
    }

    fn partial_moment(&self, x: f64) -> f64 {
        if self.sigma == 0.0 {
            return if x >= self.mu { self.mu } else { 0.0 };
        }
        let z = self.z(x);
        self.mu * normal_cdf(z) - self.sigma * normal_pdf(z)
    }

    fn second_partial_moment(&self, x: f64) -> f64 {
        if self.sigma == 0.0 {
            return if x >= self.mu { self.mu * self.mu } else { 0.0 };
        }
        let z = self.z(x);
        let head = (self.mu * self.mu + self.sigma * self.sigma) * normal_cdf(z);
        if z.is_infinite() {
            return head;
        }
        head - self.sigma * normal_pdf(z) * (2.0 * self.mu + self.sigma * z)
    }

    fn mean(&self) -> f64 {
        self.mu
    }

    fn support_left(&self) -> f64 {
        if self.sigma == 0.0 {
            self.mu
        } else {
            f64::NEG_INFINITY
        }
    }
}

/// Finite mixture of laws of a common family; weights sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct Mixture<L: Law1D> {
    components: Vec<(f64, L)>,
}

impl<L: Law1D> Mixture<L> {
    pub fn new(components: Vec<(f64, L)>) -> Result<Self, DistError> {
        if components.is_empty() {
            return Err(DistError::InvalidParameters(
                "mixture needs at least one component".into(),
            ));
        }
        if components.iter().any(|(w, _)| !(*w >= 0.0)) {
            return Err(DistError::InvalidParameters(
                "mixture weights must be nonnegative".into(),
            ));
        }
        let total: f64 = components.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(DistError::InvalidParameters(format!(
                "mixture weights must sum to 1 within 1e-12, got {total}"
            )));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[(f64, L)] {
        &self.components
    }
}

impl<L: Law1D> Law1D for Mixture<L> {
    fn cdf(&self, x: f64) -> f64 {
        self.components.iter().map(|(w, l)| w * l.cdf(x)).sum()
    }

    fn partial_moment(&self, x: f64) -> f64 {
        self.components
            .iter()
            .map(|(w, l)| w * l.partial_moment(x))
            .sum()
    }

    fn second_partial_moment(&self, x: f64) -> f64 {
        self.components
            .iter()
            .map(|(w, l)| w * l.second_partial_moment(x))
            .sum()
    }

    fn mean(&self) -> f64 {
        self.components.iter().map(|(w, l)| w * l.mean()).sum()
    }

    fn support_left(&self) -> f64 {
        self.components
            .iter()
            .map(|(_, l)| l.support_left())
            .fold(f64::INFINITY, f64::min)
    }
}
