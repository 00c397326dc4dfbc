//! Members of the class of normalized sense-preserving harmonic maps with
//! starlike analytic part, and the constructions around them.

mod dilatation;
mod harmonic;
mod recipe;
mod starlike;

use num_complex::Complex64;
use thiserror::Error;

use crate::series::{SeriesError, DEFAULT_R_MAX};

pub use dilatation::{blaschke_omega, moebius_omega, DiskMoebius};
pub use harmonic::{
    alexander_down, alexander_lift, alexander_up, build_harmonic, build_harmonic_on,
    extremal_g_value, extremal_map, HarmonicMap, PointSample,
};
pub use recipe::{member_rng, DilatationRecipe, MemberRecipe};
pub use starlike::{koebe, starlike_from_measure, starlikeness_check, HerglotzMeasure, StarlikeCheck};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MapError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("normalization violated: {what} = {found}")]
    NotNormalized { what: &'static str, found: Complex64 },
    #[error("dilatation modulus {modulus} >= 1 at z = {z}")]
    DilatationTooLarge { z: Complex64, modulus: f64 },
    #[error("not sense-preserving at z = {z}: |g'| = {g_deriv}, |h'| = {h_deriv}")]
    NotSensePreserving { z: Complex64, g_deriv: f64, h_deriv: f64 },
    #[error("Alexander lift violates |G'| < |H'| at z = {z}: |G'| = {g_deriv}, |H'| = {h_deriv}")]
    AlexanderViolation { z: Complex64, g_deriv: f64, h_deriv: f64 },
    #[error("invalid measure: {0}")]
    Measure(String),
    #[error("zero {0} does not lie in the open unit disc")]
    ZeroOutsideDisc(Complex64),
    #[error("parameter {name} = {value} out of range {range}")]
    Parameter { name: &'static str, value: f64, range: &'static str },
    #[error("truncation order {0} is too small")]
    Order(usize),
    #[error("could not draw an admissible member after {0} attempts")]
    Sampling(usize),
}

/// Polar sampling grid `r_i = r_max * i / radii` (i = 1..=radii) by
/// `theta_j = 2 pi j / angles`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarGrid {
    pub radii: usize,
    pub angles: usize,
    pub r_max: f64,
}

impl Default for PolarGrid {
    fn default() -> Self {
        Self { radii: 24, angles: 72, r_max: DEFAULT_R_MAX }
    }
}

impl PolarGrid {
    pub fn new(radii: usize, angles: usize, r_max: f64) -> Self {
        Self { radii, angles, r_max }
    }

    pub fn points(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.radii * self.angles);
        for i in 1..=self.radii {
            let r = self.r_max * i as f64 / self.radii as f64;
            for j in 0..self.angles {
                let theta = std::f64::consts::TAU * j as f64 / self.angles as f64;
                out.push(Complex64::from_polar(r, theta));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let g = PolarGrid::default();
        let pts = g.points();
        assert_eq!(pts.len(), 24 * 72);
        let rmax = pts.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((rmax - 0.9).abs() < 1e-15);
        assert!(pts.iter().all(|z| z.norm() > 0.0));
    }
}
