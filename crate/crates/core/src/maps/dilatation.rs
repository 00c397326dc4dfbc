use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::MapError;
use crate::series::TruncatedSeries;

/// Disc automorphism `e^{i phi} (e^{i psi} z + zeta) / (1 + zeta e^{i psi} z)`
/// with real `zeta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskMoebius {
    pub zeta: f64,
    pub phi: f64,
    pub psi: f64,
}

impl DiskMoebius {
    pub fn new(zeta: f64, phi: f64, psi: f64) -> Result<Self, MapError> {
        if !(zeta.abs() < 1.0) || !phi.is_finite() || !psi.is_finite() {
            return Err(MapError::Parameter { name: "zeta", value: zeta, range: "(-1, 1)" });
        }
        Ok(Self { zeta, phi, psi })
    }

    /// The real-axis family `(z + zeta) / (1 + zeta z)`.
    pub fn real(zeta: f64) -> Result<Self, MapError> {
        Self::new(zeta, 0.0, 0.0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let u = Complex64::from_polar(1.0, self.psi) * z;
        Complex64::from_polar(1.0, self.phi) * (u + self.zeta) / (1.0 + self.zeta * u)
    }
}

pub fn moebius_omega(p: &DiskMoebius, order: usize) -> TruncatedSeries {
    let rot = Complex64::from_polar(1.0, p.psi);
    let u = TruncatedSeries::identity(order).scale(rot);
    let zeta = Complex64::new(p.zeta, 0.0);
    let one = TruncatedSeries::constant(Complex64::new(1.0, 0.0), order);
    let num = u.add(&TruncatedSeries::constant(zeta, order));
    let den = one.add(&u.scale(zeta));
    let inv = den.reciprocal().expect("1 + zeta u has unit constant term");
    num.mul(&inv).scale(Complex64::from_polar(1.0, p.phi))
}

/// Finite Blaschke product `shrink e^{i rotation} prod_j (z - a_j) / (1 - conj(a_j) z)`.
pub fn blaschke_omega(
    zeros: &[Complex64],
    rotation: f64,
    shrink: f64,
    order: usize,
) -> Result<TruncatedSeries, MapError> {
    if !(shrink > 0.0 && shrink <= 1.0) {
        return Err(MapError::Parameter { name: "shrink", value: shrink, range: "(0, 1]" });
    }
    if let Some(&a) = zeros.iter().find(|a| !(a.norm() < 1.0)) {
        return Err(MapError::ZeroOutsideDisc(a));
    }
    let one = Complex64::new(1.0, 0.0);
    let mut acc = TruncatedSeries::constant(Complex64::from_polar(shrink, rotation), order);
    for &a in zeros {
        let num = TruncatedSeries::from_fn(order, |n| match n {
            0 => -a,
            1 => one,
            _ => Complex64::default(),
        });
        // 1 / (1 - conj(a) z) = sum conj(a)^n z^n
        let conj = a.conj();
        let mut pow = one;
        let inv = TruncatedSeries::from_fn(order, |_| {
            let c = pow;
            pow *= conj;
            c
        });
        acc = acc.mul(&num.mul(&inv));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn moebius_identity() {
        let w = moebius_omega(&DiskMoebius::real(0.0).unwrap(), 10);
        assert!(w.max_coeff_diff(&TruncatedSeries::identity(10)) < 1e-15);
    }

    #[test]
    fn moebius_half_values() {
        let p = DiskMoebius::real(0.5).unwrap();
        let w = moebius_omega(&p, 256);
        let v = w.evaluate(c(0.5, 0.0), 0.9).unwrap();
        assert!((v.value - c(0.8, 0.0)).norm() < 1e-12);
        assert!((w.coeff(0) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((w.coeff(1) - c(0.75, 0.0)).norm() < 1e-15);
        assert!((w.coeff(2) - c(-0.375, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn moebius_matches_geometric_expansion() {
        // c_0 = e^{i phi} zeta, c_n = e^{i phi} e^{i n psi} (1 - zeta^2) (-zeta)^{n-1}
        let p = DiskMoebius::new(-0.6, 0.4, 1.3).unwrap();
        let w = moebius_omega(&p, 60);
        let ephi = Complex64::from_polar(1.0, p.phi);
        assert!((w.coeff(0) - ephi * p.zeta).norm() < 1e-15);
        for n in 1..=60 {
            let want = ephi
                * Complex64::from_polar(1.0, n as f64 * p.psi)
                * (1.0 - p.zeta * p.zeta)
                * (-p.zeta).powi(n as i32 - 1);
            assert!((w.coeff(n) - want).norm() < 1e-13, "n = {n}");
        }
        let z = Complex64::from_polar(0.7, 2.0);
        assert!((w.horner(z) - p.eval(z)).norm() < 1e-10);
        assert!((w.coeff(0).norm() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn moebius_rejects_boundary_zeta() {
        assert!(DiskMoebius::real(1.0).is_err());
        assert!(DiskMoebius::real(-1.2).is_err());
    }

    #[test]
    fn blaschke_simple_cases() {
        let w = blaschke_omega(&[], 0.3, 0.5, 8).unwrap();
        assert!((w.coeff(0) - Complex64::from_polar(0.5, 0.3)).norm() < 1e-15);
        assert!(w.coeffs()[1..].iter().all(|a| a.norm() == 0.0));

        let w = blaschke_omega(&[c(0.0, 0.0)], 1.1, 0.7, 8).unwrap();
        assert!((w.coeff(1) - Complex64::from_polar(0.7, 1.1)).norm() < 1e-15);
        assert!(w.coeffs().iter().enumerate().all(|(n, a)| n == 1 || a.norm() == 0.0));
    }

    #[test]
    fn blaschke_stays_inside_disc() {
        let zeros = [c(0.3, 0.0), c(0.0, -0.2)];
        let w = blaschke_omega(&zeros, 0.0, 1.0, 256).unwrap();
        let max = (0..720)
            .map(|j| {
                let z = Complex64::from_polar(0.9, std::f64::consts::TAU * j as f64 / 720.0);
                w.horner(z).norm()
            })
            .fold(0.0, f64::max);
        assert!(max < 1.0, "max |omega| = {max}");
        // agrees with the closed product
        let z = c(0.4, 0.5);
        let direct = zeros
            .iter()
            .fold(c(1.0, 0.0), |acc, &a| acc * (z - a) / (1.0 - a.conj() * z));
        assert!((w.horner(z) - direct).norm() < 1e-12);
    }

    #[test]
    fn blaschke_rejects_bad_input() {
        assert!(matches!(
            blaschke_omega(&[c(1.0, 0.0)], 0.0, 1.0, 8),
            Err(MapError::ZeroOutsideDisc(_))
        ));
        assert!(blaschke_omega(&[], 0.0, 0.0, 8).is_err());
        assert!(blaschke_omega(&[], 0.0, 1.5, 8).is_err());
    }
}
