//! Truncated complex power series about the origin.
//!
//! A [`TruncatedSeries`] of order `N` keeps the Taylor coefficients of
//! `z^0, ..., z^N`. Binary operations truncate to the smaller operand order.
//! Evaluation is restricted to `|z| <= r_max < 1` and returns a tail bound
//! obtained from the majorant `|c_n| <= C n^2`, where `C` is the largest
//! ratio `|c_n| / n^2` over the retained coefficients with `n >= 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 256;

/// Default evaluation radius.
pub const DEFAULT_R_MAX: f64 = 0.9;

/// Absolute floor used whenever a "numerically zero" decision is needed.
pub const ABS_FLOOR: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("point |z| = {radius} lies outside the evaluation disc |z| <= {r_max}")]
    OutsideDomain { radius: f64, r_max: f64 },
    #[error("evaluation radius {0} must lie in [0, 1)")]
    BadRadius(f64),
    #[error("{op}: constant term must vanish, found {found}")]
    NonzeroConstant { op: &'static str, found: Complex64 },
    #[error("reciprocal of a series with vanishing constant term")]
    ZeroConstant,
    #[error("a series needs at least one coefficient")]
    Empty,
}

/// Value of a series at a point with a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub tail_bound: f64,
}

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    majorant: f64,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<_> = self.coeffs.iter().take(6).collect();
        write!(f, "TruncatedSeries(order {}, {:?}", self.order(), shown)?;
        if self.coeffs.len() > 6 {
            write!(f, ", ...")?;
        }
        write!(f, ")")
    }
}

/// `sum_{n > order} n^2 r^n`, in closed form.
/// `|z|`, checked against `r_max`. Points such as `from_polar(r_max, t)` whose
/// modulus overshoots by a few ulps are admitted and reported as `r_max`.
pub fn domain_radius(z: Complex64, r_max: f64) -> Result<f64, SeriesError> {
    let radius = z.norm();
    if !radius.is_finite() || radius > r_max * (1.0 + 4.0 * f64::EPSILON) {
        return Err(SeriesError::OutsideDomain { radius, r_max });
    }
    Ok(radius.min(r_max))
}

pub fn quadratic_tail(order: usize, r: f64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let m = (order + 1) as f64;
    let bracket = m * m - (2.0 * m * m - 2.0 * m - 1.0) * r + (m - 1.0) * (m - 1.0) * r * r;
    (r.powf(m) * bracket / (1.0 - r).powi(3)).max(0.0)
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self::from_vec(coeffs))
    }

    fn from_vec(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        let majorant = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.norm() / (n * n) as f64)
            .fold(0.0, f64::max);
        Self { coeffs, majorant }
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, SeriesError> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Series of order `order` whose `n`-th coefficient is `f(n)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self::from_vec((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s.majorant = 0.0;
        s
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        if order >= 1 {
            coeffs[1] = Complex64::new(1.0, 0.0);
        }
        Self::from_vec(coeffs)
    }

    /// `1 / (1 - z)`.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order, |_| Complex64::new(1.0, 0.0))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// The constant `C` of the tail majorant `|c_n| <= C n^2`.
    pub fn majorant(&self) -> f64 {
        self.majorant
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self::from_vec(self.coeffs[..=keep].to_vec())
    }

    /// Horner evaluation without domain check or tail estimate.
    pub fn horner(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn tail_bound(&self, r: f64) -> f64 {
        self.majorant * quadratic_tail(self.order(), r)
    }

    pub fn evaluate(&self, z: Complex64, r_max: f64) -> Result<Evaluation, SeriesError> {
        if !(0.0..1.0).contains(&r_max) {
            return Err(SeriesError::BadRadius(r_max));
        }
        let radius = domain_radius(z, r_max)?;
        Ok(Evaluation {
            value: self.horner(z),
            tail_bound: self.tail_bound(radius),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n] + other.coeffs[n])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n] - other.coeffs[n])
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            (0..=n).map(|k| self.coeffs[k] * other.coeffs[n - k]).sum()
        })
    }

    /// Termwise derivative; the order drops by one (an order-0 series gives
    /// the zero series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |n| self.coeffs[n + 1] * (n + 1) as f64)
    }

    /// Antiderivative vanishing at 0; the order grows by one.
    pub fn antiderivative0(&self) -> Self {
        Self::from_fn(self.order() + 1, |n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                self.coeffs[n - 1] / n as f64
            }
        })
    }

    /// Taylor coefficients of `outer(inner(z))`; `inner(0)` must vanish.
    pub fn compose0(&self, inner: &Self) -> Result<Self, SeriesError> {
        let c0 = inner.coeffs[0];
        if c0.norm() > ABS_FLOOR {
            return Err(SeriesError::NonzeroConstant { op: "compose0", found: c0 });
        }
        let order = self.order().min(inner.order());
        let mut inner = inner.truncate(order);
        inner.coeffs[0] = Complex64::new(0.0, 0.0);
        let mut acc = Self::constant(self.coeffs[order], order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(Self::from_vec(acc.coeffs))
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if a0.norm() <= ABS_FLOOR {
            return Err(SeriesError::ZeroConstant);
        }
        let inv = a0.inv();
        let mut out: Vec<Complex64> = Vec::with_capacity(self.coeffs.len());
        out.push(inv);
        for n in 1..=self.order() {
            let acc: Complex64 = (1..=n).map(|k| self.coeffs[k] * out[n - k]).sum();
            out.push(-acc * inv);
        }
        Ok(Self::from_vec(out))
    }

    /// `exp(s)` for a series with `s(0) = 0`, via `n e_n = sum_k k s_k e_{n-k}`.
    pub fn exp0(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.norm() > ABS_FLOOR {
            return Err(SeriesError::NonzeroConstant { op: "exp0", found: c0 });
        }
        let mut out: Vec<Complex64> = Vec::with_capacity(self.coeffs.len());
        out.push(Complex64::new(1.0, 0.0));
        for n in 1..=self.order() {
            let acc: Complex64 = (1..=n)
                .map(|k| self.coeffs[k] * k as f64 * out[n - k])
                .sum();
            out.push(acc / n as f64);
        }
        Ok(Self::from_vec(out))
    }

    /// Largest coefficient-wise distance to `other` over the common orders.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn koebe(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |n| c(n as f64))
    }

    #[test]
    fn geometric_at_origin() {
        let s = TruncatedSeries::geometric(64);
        let e = s.evaluate(c(0.0), DEFAULT_R_MAX).unwrap();
        assert_eq!(e.value, c(1.0));
        assert_eq!(e.tail_bound, 0.0);
    }

    #[test]
    fn koebe_at_half_within_tail() {
        let s = koebe(DEFAULT_ORDER);
        let e = s.evaluate(c(0.5), DEFAULT_R_MAX).unwrap();
        assert!((e.value - c(2.0)).norm() <= e.tail_bound + 1e-12);
        assert!((e.value.re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn outside_domain_is_rejected() {
        let s = TruncatedSeries::geometric(8);
        let err = s.evaluate(Complex64::new(0.0, 0.95), 0.9).unwrap_err();
        assert!(matches!(err, SeriesError::OutsideDomain { .. }));
    }

    #[test]
    fn quadratic_tail_matches_direct_sum() {
        for &(order, r) in &[(10usize, 0.5f64), (64, 0.8), (256, 0.9), (32, 0.3)] {
            let direct: f64 = (order + 1..20_000)
                .map(|n| (n * n) as f64 * r.powi(n as i32))
                .sum();
            let closed = quadratic_tail(order, r);
            assert!(
                (direct - closed).abs() <= 1e-10 * direct.max(1e-300),
                "order {order}, r {r}: {direct} vs {closed}"
            );
        }
    }

    #[test]
    fn tail_bound_covers_closed_forms() {
        let geo = TruncatedSeries::geometric(40);
        let k = koebe(40);
        for i in 0..=18 {
            let r = 0.05 * i as f64;
            for j in 0..8 {
                let z = Complex64::from_polar(r, j as f64 * 0.785);
                let eg = geo.evaluate(z, 0.9).unwrap();
                let closed = (c(1.0) - z).inv();
                assert!((eg.value - closed).norm() <= eg.tail_bound + 1e-12);
                let ek = k.evaluate(z, 0.9).unwrap();
                let closed = z / ((c(1.0) - z) * (c(1.0) - z));
                assert!((ek.value - closed).norm() <= ek.tail_bound + 1e-12 * closed.norm().max(1.0));
            }
        }
    }

    #[test]
    fn add_scale_basics() {
        let p = TruncatedSeries::from_real(&[1.0, 1.0]).unwrap();
        let q = TruncatedSeries::from_real(&[1.0, -1.0]).unwrap();
        assert_eq!((&p + &q).coeffs(), &[c(2.0), c(0.0)]);
        assert!(p.scale(c(0.0)).coeffs().iter().all(|x| x.norm() == 0.0));
        let s = koebe(10);
        assert!(s.add(&s.scale(c(-1.0))).coeffs().iter().all(|x| x.norm() == 0.0));
        assert_eq!((&s - &s).max_coeff_diff(&TruncatedSeries::zero(10)), 0.0);
    }

    #[test]
    fn add_truncates_to_smaller_order() {
        let a = TruncatedSeries::geometric(5);
        let b = TruncatedSeries::geometric(3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn mul_examples() {
        let p = TruncatedSeries::from_real(&[1.0, 1.0, 0.0]).unwrap();
        let q = TruncatedSeries::from_real(&[1.0, -1.0, 0.0]).unwrap();
        assert_eq!(p.mul(&q).coeffs(), &[c(1.0), c(0.0), c(-1.0)]);

        // 1/(1-z)^2 = sum (n+1) z^n; hand convolution for n <= 5: sum_{k=0}^n 1 = n + 1.
        let g = TruncatedSeries::geometric(5);
        let sq = g.mul(&g);
        let expected = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        for (a, e) in sq.coeffs().iter().zip(expected) {
            assert_eq!(*a, c(e));
        }

        let s = koebe(12);
        assert_eq!(s.mul(&TruncatedSeries::constant(c(1.0), 12)), s);
    }

    #[test]
    fn derivative_and_antiderivative() {
        let z2 = TruncatedSeries::from_real(&[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(z2.derivative().coeffs(), &[c(0.0), c(2.0)]);
        let one = TruncatedSeries::constant(c(1.0), 0);
        assert_eq!(one.antiderivative0().coeffs(), &[c(0.0), c(1.0)]);

        let k = koebe(32);
        let back = k.derivative().antiderivative0();
        assert_eq!(back.order(), 32);
        assert!(back.max_coeff_diff(&k) <= 1e-12);
    }

    #[test]
    fn compose_examples() {
        // z/(1-z) with z -> z^2 gives z^2/(1-z^2): ones at even powers >= 2.
        let order = 20;
        let outer = TruncatedSeries::from_fn(order, |n| c(if n >= 1 { 1.0 } else { 0.0 }));
        let inner = TruncatedSeries::from_fn(order, |n| c(if n == 2 { 1.0 } else { 0.0 }));
        let comp = outer.compose0(&inner).unwrap();
        for (n, a) in comp.coeffs().iter().enumerate() {
            let want = if n >= 2 && n % 2 == 0 { 1.0 } else { 0.0 };
            assert!((a - c(want)).norm() < 1e-14, "n = {n}");
        }

        let id = TruncatedSeries::identity(order);
        assert!(outer.compose0(&id).unwrap().max_coeff_diff(&outer) < 1e-14);

        let bad = TruncatedSeries::from_real(&[0.1, 1.0]).unwrap();
        assert!(matches!(
            outer.compose0(&bad),
            Err(SeriesError::NonzeroConstant { .. })
        ));
    }

    #[test]
    fn reciprocal_and_exp() {
        let one_minus_z = TruncatedSeries::from_real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let r = one_minus_z.reciprocal().unwrap();
        assert!(r.coeffs().iter().all(|&a| a == c(1.0)));

        let e = TruncatedSeries::identity(6).exp0().unwrap();
        let mut fact = 1.0;
        for (n, a) in e.coeffs().iter().enumerate() {
            if n > 0 {
                fact *= n as f64;
            }
            assert!((a - c(1.0 / fact)).norm() < 1e-15);
        }

        // exp(-log(1 - z)) = 1/(1 - z)
        let order = 128;
        let neg_log = TruncatedSeries::from_fn(order, |n| {
            c(if n == 0 { 0.0 } else { 1.0 / n as f64 })
        });
        let g = neg_log.exp0().unwrap();
        assert!(g.max_coeff_diff(&TruncatedSeries::geometric(order)) <= 1e-12);

        assert_eq!(
            TruncatedSeries::identity(3).reciprocal(),
            Err(SeriesError::ZeroConstant)
        );
        assert!(matches!(
            TruncatedSeries::geometric(3).exp0(),
            Err(SeriesError::NonzeroConstant { .. })
        ));
    }

    #[test]
    fn reciprocal_inverts() {
        let s = TruncatedSeries::from_fn(40, |n| Complex64::new(1.0 / (n + 1) as f64, 0.3 * n as f64 / 40.0));
        let prod = s.mul(&s.reciprocal().unwrap());
        assert!(prod.max_coeff_diff(&TruncatedSeries::constant(c(1.0), 40)) < 1e-9);
    }

    #[test]
    fn empty_series_rejected() {
        assert_eq!(TruncatedSeries::new(vec![]), Err(SeriesError::Empty));
    }
}
