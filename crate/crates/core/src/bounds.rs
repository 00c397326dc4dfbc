//! Closed-form two-sided estimates for members with starlike analytic part
//! and `|g'(0)| = alpha`, evaluated at `r = |z|`.
//!
//! All lower bounds are clamped at zero. Where a lower estimate carries an
//! explicit zero branch for `r >= alpha` the branch is applied as stated.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::DEFAULT_R_MAX;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("alpha = {0} must lie in [0, 1)")]
    Alpha(f64),
    #[error("r = {r} must lie in [0, {r_max}]")]
    Radius { r: f64, r_max: f64 },
    #[error("coefficient index {0} must be at least 2")]
    Index(usize),
    #[error("unknown quantity `{0}`")]
    UnknownQuantity(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Quantity {
    /// `|h'(z)|`
    HDeriv,
    /// `|g'(z)|`
    GDeriv,
    /// `|omega(z)|`
    Dilatation,
    /// `|h(z)|`
    HGrowth,
    /// `|g(z)|`
    GGrowth,
    /// `|f(z)|`
    FGrowth,
    /// `J_f(z) = |h'|^2 - |g'|^2`
    Jacobian,
}

impl Quantity {
    pub const ALL: [Quantity; 7] = [
        Quantity::HDeriv,
        Quantity::GDeriv,
        Quantity::Dilatation,
        Quantity::HGrowth,
        Quantity::GGrowth,
        Quantity::FGrowth,
        Quantity::Jacobian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::HDeriv => "h_deriv",
            Quantity::GDeriv => "g_deriv",
            Quantity::Dilatation => "dilatation",
            Quantity::HGrowth => "h_growth",
            Quantity::GGrowth => "g_growth",
            Quantity::FGrowth => "f_growth",
            Quantity::Jacobian => "jacobian",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == key)
            .ok_or_else(|| BoundsError::UnknownQuantity(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub quantity: Quantity,
    pub alpha: f64,
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    /// The raw lower formula was negative and has been replaced by 0.
    pub lower_clamped: bool,
}

fn check_alpha(alpha: f64) -> Result<(), BoundsError> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(BoundsError::Alpha(alpha))
    }
}

fn check_params(alpha: f64, r: f64) -> Result<(), BoundsError> {
    check_alpha(alpha)?;
    if (0.0..=DEFAULT_R_MAX).contains(&r) {
        Ok(())
    } else {
        Err(BoundsError::Radius { r, r_max: DEFAULT_R_MAX })
    }
}

/// Raw envelope formulas, without range checks or clamping.
fn raw(quantity: Quantity, a: f64, r: f64) -> (f64, f64) {
    match quantity {
        Quantity::HDeriv => ((1.0 - r) / (1.0 + r).powi(3), (1.0 + r) / (1.0 - r).powi(3)),
        Quantity::GDeriv => {
            let lower = if r < a {
                (a - r) * (1.0 - r) / ((1.0 - a * r) * (1.0 + r).powi(3))
            } else {
                0.0
            };
            (lower, (a + r) * (1.0 + r) / ((1.0 + a * r) * (1.0 - r).powi(3)))
        }
        Quantity::Dilatation => ((a - r) / (1.0 - a * r), (a + r) / (1.0 + a * r)),
        Quantity::HGrowth => (r / (1.0 + r).powi(2), r / (1.0 - r).powi(2)),
        Quantity::GGrowth => {
            let lower = if r < a {
                r * (a - r) / ((1.0 - a * r) * (1.0 + r).powi(2))
            } else {
                0.0
            };
            (lower, r * (a + r) / ((1.0 + a * r) * (1.0 - r).powi(2)))
        }
        Quantity::FGrowth => (
            (1.0 - a) * r * (1.0 - r) / ((1.0 + a * r) * (1.0 + r).powi(2)),
            (1.0 + a) * r * (1.0 + r) / ((1.0 + a * r) * (1.0 - r).powi(2)),
        ),
        Quantity::Jacobian => {
            let s = 1.0 - a * a;
            let lower = s * (1.0 - r).powi(3) / ((1.0 + a * r).powi(2) * (1.0 + r).powi(5));
            let upper = if r < a {
                s * (1.0 + r).powi(3) / ((1.0 - a * r).powi(2) * (1.0 - r).powi(5))
            } else {
                (1.0 + r).powi(2) / (1.0 - r).powi(6)
            };
            (lower, upper)
        }
    }
}

/// Two-sided estimate of `quantity` at radius `r` for the class parameter `alpha`.
///
/// For `G_GROWTH` and `F_GROWTH` the upper value is the rational (loose) form;
/// the logarithmic forms are [`g_growth_upper_tight`] and [`f_growth_upper_tight`].
pub fn envelope(quantity: Quantity, alpha: f64, r: f64) -> Result<Envelope, BoundsError> {
    check_params(alpha, r)?;
    let (lower, upper) = raw(quantity, alpha, r);
    Ok(Envelope {
        quantity,
        alpha,
        r,
        lower: lower.max(0.0),
        upper,
        lower_clamped: lower < 0.0,
    })
}

/// The `JACOBIAN` upper formula on the `r < alpha` side, evaluated at any `r`.
/// Used to probe the seam at `r = alpha`.
pub fn jacobian_upper_inner_branch(alpha: f64, r: f64) -> f64 {
    (1.0 - alpha * alpha) * (1.0 + r).powi(3) / ((1.0 - alpha * r).powi(2) * (1.0 - r).powi(5))
}

/// The `JACOBIAN` upper formula on the `r >= alpha` side.
pub fn jacobian_upper_outer_branch(r: f64) -> f64 {
    (1.0 + r).powi(2) / (1.0 - r).powi(6)
}

// ((1 - a) / (1 + a))^2 log((1 + a r) / (1 - r)) - ((1 - a) / (1 + a)) 2r / (1 - r)
fn log_part(a: f64, r: f64) -> f64 {
    let beta = (1.0 - a) / (1.0 + a);
    let log = (a * r).ln_1p() - (-r).ln_1p();
    beta * beta * log - beta * 2.0 * r / (1.0 - r)
}

/// Logarithmic upper estimate of `|g(z)|`; attained on the real axis by the
/// extremal family.
pub fn g_growth_upper_tight(alpha: f64, r: f64) -> Result<f64, BoundsError> {
    check_params(alpha, r)?;
    Ok(log_part(alpha, r) + r / (1.0 - r).powi(2))
}

/// Logarithmic upper estimate of `|f(z)|`.
pub fn f_growth_upper_tight(alpha: f64, r: f64) -> Result<f64, BoundsError> {
    check_params(alpha, r)?;
    Ok(log_part(alpha, r) + 2.0 * r / (1.0 - r).powi(2))
}

/// `|a_n| <= n` for starlike `h`.
pub fn coeff_bound_a(n: usize) -> Result<f64, BoundsError> {
    if n < 2 {
        return Err(BoundsError::Index(n));
    }
    Ok(n as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffBoundB {
    /// Bound on `|b_n|` depending on `alpha`.
    pub bound: f64,
    /// The `alpha`-free strict cap `|b_n| < n`.
    pub strict_cap: f64,
}

pub fn coeff_bound_b(n: usize, alpha: f64) -> Result<CoeffBoundB, BoundsError> {
    if n < 2 {
        return Err(BoundsError::Index(n));
    }
    check_alpha(alpha)?;
    let nf = n as f64;
    let bound = if n == 2 {
        2.0 * alpha + (1.0 - alpha * alpha) / 2.0
    } else {
        alpha + ((nf - alpha * alpha) * (nf - 1.0)).sqrt()
    };
    Ok(CoeffBoundB { bound, strict_cap: nf })
}
