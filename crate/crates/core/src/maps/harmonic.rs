use num_complex::Complex64;

use super::{koebe, moebius_omega, DiskMoebius, MapError, PolarGrid};
use crate::series::{Evaluation, TruncatedSeries, DEFAULT_R_MAX};

const NORMALIZATION_TOL: f64 = 1e-10;

/// `f = h + conj(g)` with `h(0) = 0`, `h'(0) = 1`, `g(0) = 0`.
///
/// `alpha` is `|g'(0)| = |b_1|`. The derivative series are kept alongside the
/// parts so that repeated point evaluation costs two Horner passes per part.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap {
    h: TruncatedSeries,
    g: TruncatedSeries,
    dh: TruncatedSeries,
    dg: TruncatedSeries,
    omega: Option<TruncatedSeries>,
    alpha: f64,
    r_max: f64,
}

/// Values of `h, h', g, g'` at one point, each with its tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointSample {
    pub z: Complex64,
    pub h: Evaluation,
    pub dh: Evaluation,
    pub g: Evaluation,
    pub dg: Evaluation,
}

impl PointSample {
    pub fn f(&self) -> Evaluation {
        Evaluation {
            value: self.h.value + self.g.value.conj(),
            tail_bound: self.h.tail_bound + self.g.tail_bound,
        }
    }

    /// `g'(z) / h'(z)` with a first-order propagated tail.
    pub fn dilatation(&self) -> Evaluation {
        let w = self.dg.value / self.dh.value;
        let denom = (self.dh.value.norm() - self.dh.tail_bound).max(f64::MIN_POSITIVE);
        let tail = if self.dh.tail_bound == 0.0 && self.dg.tail_bound == 0.0 {
            0.0
        } else {
            (self.dg.tail_bound + w.norm() * self.dh.tail_bound) / denom
        };
        Evaluation { value: w, tail_bound: tail }
    }

    /// `|h'|^2 - |g'|^2`, returned in the real part.
    pub fn jacobian(&self) -> Evaluation {
        let (a, ta) = (self.dh.value.norm(), self.dh.tail_bound);
        let (b, tb) = (self.dg.value.norm(), self.dg.tail_bound);
        Evaluation {
            value: Complex64::new(a * a - b * b, 0.0),
            tail_bound: 2.0 * a * ta + ta * ta + 2.0 * b * tb + tb * tb,
        }
    }
}

fn check_normalized(h: &TruncatedSeries, g: &TruncatedSeries) -> Result<(), MapError> {
    if h.order() < 1 {
        return Err(MapError::Order(h.order()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    if (h.coeff(0) - zero).norm() > NORMALIZATION_TOL {
        return Err(MapError::NotNormalized { what: "h(0)", found: h.coeff(0) });
    }
    if (h.coeff(1) - one).norm() > NORMALIZATION_TOL {
        return Err(MapError::NotNormalized { what: "h'(0)", found: h.coeff(1) });
    }
    if g.coeff(0).norm() > NORMALIZATION_TOL {
        return Err(MapError::NotNormalized { what: "g(0)", found: g.coeff(0) });
    }
    Ok(())
}

impl HarmonicMap {
    /// Wraps a normalized pair `(h, g)`. Sense preservation is not checked
    /// here; see [`build_harmonic`] and [`HarmonicMap::check_sense_preserving`].
    pub fn new(h: TruncatedSeries, g: TruncatedSeries) -> Result<Self, MapError> {
        check_normalized(&h, &g)?;
        let b1 = g.coeff(1);
        let alpha = b1.norm();
        if !(alpha < 1.0) {
            return Err(MapError::Parameter { name: "|b_1|", value: alpha, range: "[0, 1)" });
        }
        Ok(Self {
            dh: h.derivative(),
            dg: g.derivative(),
            h,
            g,
            omega: None,
            alpha,
            r_max: DEFAULT_R_MAX,
        })
    }

    pub fn with_r_max(mut self, r_max: f64) -> Self {
        self.r_max = r_max;
        self
    }

    fn with_omega(mut self, omega: TruncatedSeries) -> Self {
        self.omega = Some(omega);
        self
    }

    pub fn h(&self) -> &TruncatedSeries {
        &self.h
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn h_deriv(&self) -> &TruncatedSeries {
        &self.dh
    }

    pub fn g_deriv(&self) -> &TruncatedSeries {
        &self.dg
    }

    /// The dilatation series the map was built from, when known.
    pub fn omega(&self) -> Option<&TruncatedSeries> {
        self.omega.as_ref()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn order(&self) -> usize {
        self.h.order().min(self.g.order())
    }

    pub fn sample(&self, z: Complex64) -> Result<PointSample, MapError> {
        Ok(PointSample {
            z,
            h: self.h.evaluate(z, self.r_max)?,
            dh: self.dh.evaluate(z, self.r_max)?,
            g: self.g.evaluate(z, self.r_max)?,
            dg: self.dg.evaluate(z, self.r_max)?,
        })
    }

    pub fn eval_f(&self, z: Complex64) -> Result<Complex64, MapError> {
        let h = self.h.evaluate(z, self.r_max)?;
        let g = self.g.evaluate(z, self.r_max)?;
        Ok(h.value + g.value.conj())
    }

    pub fn eval_dilatation(&self, z: Complex64) -> Result<Complex64, MapError> {
        Ok(self.sample(z)?.dilatation().value)
    }

    pub fn eval_jacobian(&self, z: Complex64) -> Result<f64, MapError> {
        Ok(self.sample(z)?.jacobian().value.re)
    }

    /// Strict `|g'| < |h'|` at every grid point.
    pub fn check_sense_preserving(&self, grid: &PolarGrid) -> Result<(), MapError> {
        for z in grid.points() {
            let r = z.norm();
            // reject only violations that truncation cannot explain
            let a = self.dh.horner(z).norm() + self.dh.tail_bound(r);
            let b = self.dg.horner(z).norm() - self.dg.tail_bound(r);
            if !(b < a) {
                return Err(MapError::NotSensePreserving { z, g_deriv: b, h_deriv: a });
            }
        }
        Ok(())
    }
}

pub fn build_harmonic(h: &TruncatedSeries, omega: &TruncatedSeries) -> Result<HarmonicMap, MapError> {
    build_harmonic_on(h, omega, &PolarGrid::default())
}

/// `g = integral_0^z omega h'`, admitted only if `|omega| < 1` on the grid
/// and the result is sense-preserving there.
pub fn build_harmonic_on(
    h: &TruncatedSeries,
    omega: &TruncatedSeries,
    grid: &PolarGrid,
) -> Result<HarmonicMap, MapError> {
    check_normalized(h, &TruncatedSeries::zero(0))?;
    for z in std::iter::once(Complex64::default()).chain(grid.points()) {
        let modulus = omega.horner(z).norm();
        if !(modulus < 1.0) {
            return Err(MapError::DilatationTooLarge { z, modulus });
        }
    }
    let g = omega.mul(&h.derivative()).antiderivative0();
    let map = HarmonicMap::new(h.clone(), g)?.with_omega(omega.clone());
    map.check_sense_preserving(grid)?;
    Ok(map)
}

/// Koebe function paired with
/// `g = beta^2 log((1 + zeta z)/(1 - z)) + z/(1 - z)^2 - beta 2z/(1 - z)`,
/// `beta = (1 - zeta)/(1 + zeta)`, whose dilatation is `(z + zeta)/(1 + zeta z)`.
pub fn extremal_map(zeta: f64, order: usize) -> Result<HarmonicMap, MapError> {
    if !(0.0..1.0).contains(&zeta) {
        return Err(MapError::Parameter { name: "zeta", value: zeta, range: "[0, 1)" });
    }
    let h = koebe(order)?;
    let beta = (1.0 - zeta) / (1.0 + zeta);
    let g = TruncatedSeries::from_fn(order, |n| {
        let b = match n {
            0 => 0.0,
            // b_1 = beta^2 (1 + zeta) + 1 - 2 beta simplifies to zeta
            1 => zeta,
            _ => {
                let nf = n as f64;
                beta * beta * (1.0 - (-zeta).powi(n as i32)) / nf + nf - 2.0 * beta
            }
        };
        Complex64::new(b, 0.0)
    });
    let omega = moebius_omega(&DiskMoebius::real(zeta)?, order);
    Ok(HarmonicMap::new(h, g)?.with_omega(omega))
}

/// Closed-form `g_zeta(z)` on the principal branch of the logarithm.
pub fn extremal_g_value(zeta: f64, z: Complex64) -> Complex64 {
    let beta = (1.0 - zeta) / (1.0 + zeta);
    let one = Complex64::new(1.0, 0.0);
    let log = (one + zeta * z).ln() - (one - z).ln();
    beta * beta * log + z / ((one - z) * (one - z)) - beta * 2.0 * z / (one - z)
}

/// `H` with `h = z H'`, `H(0) = 0`: `A_n = a_n / n`.
pub fn alexander_up(h: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::from_fn(h.order(), |n| {
        if n == 0 {
            Complex64::default()
        } else {
            h.coeff(n) / n as f64
        }
    })
}

/// `h = z H'`: `a_n = n A_n`.
pub fn alexander_down(big_h: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::from_fn(big_h.order(), |n| big_h.coeff(n) * n as f64)
}

/// `F = H + conj(G)` with `h = z H'` and `g = z G'`. The conclusion
/// `|G'| < |H'|` is checked on the grid and a violation is returned as an error.
pub fn alexander_lift(m: &HarmonicMap, grid: &PolarGrid) -> Result<HarmonicMap, MapError> {
    let lifted = HarmonicMap::new(alexander_up(m.h()), alexander_up(m.g()))?.with_r_max(m.r_max());
    match lifted.check_sense_preserving(grid) {
        Err(MapError::NotSensePreserving { z, g_deriv, h_deriv }) => {
            Err(MapError::AlexanderViolation { z, g_deriv, h_deriv })
        }
        other => other.map(|_| lifted),
    }
}
