use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    blaschke_omega, build_harmonic_on, extremal_map, koebe, moebius_omega, starlike_from_measure,
    DiskMoebius, HarmonicMap, HerglotzMeasure, MapError, PolarGrid,
};
use crate::series::TruncatedSeries;

const MAX_ATTEMPTS: usize = 64;

/// Generator for the stream of member `index` under `seed`. Streams are
/// independent, so members can be drawn in any order.
pub fn member_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DilatationRecipe {
    Moebius { zeta: f64, phi: f64, psi: f64 },
    Blaschke { zeros: Vec<[f64; 2]>, rotation: f64, shrink: f64 },
}

impl DilatationRecipe {
    pub fn series(&self, order: usize) -> Result<TruncatedSeries, MapError> {
        match *self {
            DilatationRecipe::Moebius { zeta, phi, psi } => {
                Ok(moebius_omega(&DiskMoebius::new(zeta, phi, psi)?, order))
            }
            DilatationRecipe::Blaschke { ref zeros, rotation, shrink } => {
                let zeros: Vec<Complex64> = zeros.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
                blaschke_omega(&zeros, rotation, shrink, order)
            }
        }
    }

    fn draw(rng: &mut impl Rng) -> Self {
        if rng.gen_bool(0.5) {
            DilatationRecipe::Moebius {
                zeta: rng.gen_range(-0.95..0.95),
                phi: rng.gen_range(0.0..TAU),
                psi: rng.gen_range(0.0..TAU),
            }
        } else {
            let count = rng.gen_range(0..=3);
            let zeros = (0..count)
                .map(|_| {
                    let r = 0.95 * rng.gen::<f64>().sqrt();
                    let z = Complex64::from_polar(r, rng.gen_range(0.0..TAU));
                    [z.re, z.im]
                })
                .collect();
            DilatationRecipe::Blaschke {
                zeros,
                rotation: rng.gen_range(0.0..TAU),
                shrink: rng.gen_range(0.2..1.0),
            }
        }
    }
}

/// How a member was produced; serialized as provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MemberRecipe {
    /// Closed-form extremal map with real parameter.
    Extremal { zeta: f64 },
    /// Koebe analytic part with dilatation `omega(z) = z`.
    KoebeIdentity,
    /// Starlike part from an atomic measure, with an admissible dilatation.
    Random { atoms: Vec<(f64, f64)>, dilatation: DilatationRecipe },
}

impl MemberRecipe {
    pub fn build(&self, order: usize, grid: &PolarGrid) -> Result<HarmonicMap, MapError> {
        match self {
            MemberRecipe::Extremal { zeta } => extremal_map(*zeta, order),
            MemberRecipe::KoebeIdentity => {
                build_harmonic_on(&koebe(order)?, &TruncatedSeries::identity(order), grid)
            }
            MemberRecipe::Random { atoms, dilatation } => {
                let h = starlike_from_measure(&HerglotzMeasure::new(atoms.clone())?, order);
                build_harmonic_on(&h, &dilatation.series(order)?, grid)
            }
        }
    }

    /// One to eight atoms with uniform angles and normalized positive weights,
    /// plus a Möbius or Blaschke dilatation.
    pub fn draw(rng: &mut impl Rng) -> Self {
        let count = rng.gen_range(1..=8);
        let raw: Vec<(f64, f64)> = (0..count)
            .map(|_| (rng.gen_range(0.0..TAU), rng.gen_range(0.05..1.0)))
            .collect();
        let total: f64 = raw.iter().map(|a| a.1).sum();
        let mut atoms: Vec<(f64, f64)> = raw.into_iter().map(|(t, w)| (t, w / total)).collect();
        // absorb the rounding of the normalization into the last weight
        let drift: f64 = 1.0 - atoms.iter().map(|a| a.1).sum::<f64>();
        if let Some(last) = atoms.last_mut() {
            last.1 += drift;
        }
        MemberRecipe::Random { atoms, dilatation: DilatationRecipe::draw(rng) }
    }

    /// Draws until the construction is admitted on the grid.
    pub fn draw_member(
        rng: &mut impl Rng,
        order: usize,
        grid: &PolarGrid,
    ) -> Result<(Self, HarmonicMap), MapError> {
        for _ in 0..MAX_ATTEMPTS {
            let recipe = Self::draw(rng);
            if let Ok(map) = recipe.build(order, grid) {
                return Ok((recipe, map));
            }
        }
        Err(MapError::Sampling(MAX_ATTEMPTS))
    }
}
