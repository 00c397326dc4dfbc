use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{MapError, PolarGrid};
use crate::series::{TruncatedSeries, ABS_FLOOR};

/// Finite atomic probability measure on the unit circle.
///
/// The associated Carathéodory function
/// `p(z) = sum_k w_k (1 + e^{-i t_k} z) / (1 - e^{-i t_k} z)`
/// has positive real part and generates a starlike `h` through `z h'/h = p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HerglotzMeasure {
    atoms: Vec<(f64, f64)>,
}

impl HerglotzMeasure {
    /// Atoms as `(angle, weight)`; weights must be positive and sum to 1.
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self, MapError> {
        if atoms.is_empty() {
            return Err(MapError::Measure("no atoms".into()));
        }
        if let Some(&(_, w)) = atoms.iter().find(|(t, w)| !(*w > 0.0) || !w.is_finite() || !t.is_finite()) {
            return Err(MapError::Measure(format!("weight {w} is not a positive finite number")));
        }
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(MapError::Measure(format!("weights sum to {total}, not 1")));
        }
        Ok(Self {
            atoms: atoms.into_iter().map(|(t, w)| (t.rem_euclid(TAU), w)).collect(),
        })
    }

    /// Rescales positive weights to total mass one.
    pub fn normalized(atoms: Vec<(f64, f64)>) -> Result<Self, MapError> {
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if !(total > 0.0) {
            return Err(MapError::Measure("total mass must be positive".into()));
        }
        Self::new(atoms.into_iter().map(|(t, w)| (t, w / total)).collect())
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// Taylor coefficients of `p`: `p_0 = 1`, `p_k = 2 sum_j w_j e^{-i k t_j}`.
    pub fn caratheodory(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| {
            if k == 0 {
                return Complex64::new(1.0, 0.0);
            }
            self.atoms
                .iter()
                .map(|&(t, w)| Complex64::from_polar(2.0 * w, -(k as f64) * t))
                .sum()
        })
    }
}

/// Starlike `h` with `z h'(z) / h(z) = p(z)`, from the recursion
/// `(n - 1) a_n = sum_{j=1}^{n-1} p_{n-j} a_j`, `a_1 = 1`.
pub fn starlike_from_measure(measure: &HerglotzMeasure, order: usize) -> TruncatedSeries {
    let p = measure.caratheodory(order);
    let p = p.coeffs();
    let mut a = vec![Complex64::new(0.0, 0.0); order + 1];
    if order >= 1 {
        a[1] = Complex64::new(1.0, 0.0);
    }
    for n in 2..=order {
        let acc: Complex64 = (1..n).map(|j| p[n - j] * a[j]).sum();
        a[n] = acc / (n - 1) as f64;
    }
    TruncatedSeries::from_fn(order, |n| a[n])
}

/// Koebe function `z / (1 - z)^2`.
pub fn koebe(order: usize) -> Result<TruncatedSeries, MapError> {
    if order < 1 {
        return Err(MapError::Order(order));
    }
    Ok(TruncatedSeries::from_fn(order, |n| Complex64::new(n as f64, 0.0)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarlikeCheck {
    pub ok: bool,
    /// Minimum of `Re(z h'(z) / h(z))` over the grid; `-inf` when `h`
    /// vanishes at a grid point away from the origin.
    pub min_value: f64,
}

pub fn starlikeness_check(h: &TruncatedSeries, grid: &PolarGrid) -> StarlikeCheck {
    let dh = h.derivative();
    let mut min_value = f64::INFINITY;
    let pts = grid.points();
    // removable singularity: z h'/h -> 1 at the origin
    let values = std::iter::once(1.0).chain(pts.iter().map(|&z| {
        let hz = h.horner(z);
        if hz.norm() <= ABS_FLOOR {
            f64::NEG_INFINITY
        } else {
            (z * dh.horner(z) / hz).re
        }
    }));
    for v in values {
        if v.is_nan() {
            min_value = f64::NEG_INFINITY;
        } else {
            min_value = min_value.min(v);
        }
    }
    StarlikeCheck { ok: min_value > 0.0, min_value }
}
