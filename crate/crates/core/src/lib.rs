//! Pricing and calibration engine for the Heston model started from the
//! invariant law of its variance process.
//!
//! The crate covers:
//! - closed-form distribution laws and the bivariate normal ([`distributions`]),
//! - one-dimensional quadratic optimal quantization ([`quantization`]),
//! - semi-closed-form European pricing and implied volatility ([`heston`]),
//! - surface calibration by penalized simplex search ([`calibration`]),
//! - the hybrid product recursive quantization tree ([`tree`]),
//! - backward pricers for Bermudan and barrier options ([`exotic`]),
//! - a seeded Monte Carlo reference pricer ([`mc`]).

pub mod distributions;

pub use distributions::{Law1D, Mixture};
