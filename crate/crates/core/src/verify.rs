//! Verification harness: pointwise envelope checks, coefficient audits,
//! sharpness scans, a quadrature cross-check of the reconstructed `g`, and
//! seeded sweeps over random class members.

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroUsize;
use std::str::FromStr;

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    coeff_bound_a, coeff_bound_b, envelope, f_growth_upper_tight, g_growth_upper_tight, BoundsError,
    Quantity,
};
use crate::maps::{
    alexander_lift, extremal_map, member_rng, HarmonicMap, MapError, MemberRecipe, PolarGrid,
};
use crate::series::{domain_radius, ABS_FLOOR, DEFAULT_ORDER, DEFAULT_R_MAX};

/// Radius limit for the quadrature cross-check.
pub const QUADRATURE_R_MAX: f64 = 0.8;
const QUADRATURE_NODES: usize = 32;
const QUADRATURE_SEGMENTS: usize = 4;
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("coefficient index {n_max} exceeds the series order {order}")]
    CoefficientRange { n_max: usize, order: usize },
    #[error("point |z| = {radius} exceeds {limit}")]
    Radius { radius: f64, limit: f64 },
    #[error("at least one member is required")]
    NoMembers,
    #[error("unknown sharpness target `{0}`")]
    UnknownTarget(String),
    #[error("coefficient index {0} must be an integer >= 2")]
    CoefficientIndex(f64),
}

/// What a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Check {
    HDeriv,
    GDeriv,
    Dilatation,
    HGrowth,
    GGrowth,
    FGrowth,
    Jacobian,
    /// `|a_n| <= n`
    CoeffA,
    /// `|b_n|` against the alpha-dependent bound
    CoeffB,
    /// `|b_n| < n`
    CoeffStrict,
    /// `|b_1| = alpha`
    CoeffB1,
    /// `|g(z)| < |h(z)|`
    GBelowH,
    /// `|G'(z)| < |H'(z)|` for the Alexander lift
    AlexanderLift,
    /// The member could not be constructed.
    Build,
}

impl From<Quantity> for Check {
    fn from(q: Quantity) -> Self {
        match q {
            Quantity::HDeriv => Check::HDeriv,
            Quantity::GDeriv => Check::GDeriv,
            Quantity::Dilatation => Check::Dilatation,
            Quantity::HGrowth => Check::HGrowth,
            Quantity::GGrowth => Check::GGrowth,
            Quantity::FGrowth => Check::FGrowth,
            Quantity::Jacobian => Check::Jacobian,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Location {
    Point { re: f64, im: f64 },
    Index { n: usize },
}

impl From<Complex64> for Location {
    fn from(z: Complex64) -> Self {
        Location::Point { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Tolerances applied to every report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlackPolicy {
    pub rel: f64,
    pub abs_floor: f64,
    /// A report whose tail bound exceeds `tail_budget * max(1, |upper|)`
    /// is failed, since the value is not resolved well enough to judge.
    pub tail_budget: f64,
}

impl Default for SlackPolicy {
    fn default() -> Self {
        Self { rel: 1e-7, abs_floor: ABS_FLOOR, tail_budget: 1e-3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slack {
    pub rel: f64,
    pub abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub check: Check,
    pub at: Location,
    pub alpha: f64,
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub slack: Slack,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundReport {
    /// PASS iff `lower - abs <= value <= upper (1 + rel) + abs`, where `abs` is
    /// the absolute floor plus the evaluation tail bound.
    #[allow(clippy::too_many_arguments)]
    pub fn judge(
        check: Check,
        at: Location,
        alpha: f64,
        lower: f64,
        value: f64,
        upper: f64,
        tail: f64,
        policy: &SlackPolicy,
    ) -> Self {
        let slack = Slack { rel: policy.rel, abs: policy.abs_floor + tail };
        let mut report = BoundReport {
            check,
            at,
            alpha,
            lower,
            value,
            upper,
            slack,
            verdict: Verdict::Pass,
            reason: None,
        };
        if tail > policy.tail_budget * upper.abs().max(1.0) {
            report.verdict = Verdict::Fail;
            report.reason = Some(format!("tail bound {tail:e} exceeds the evaluation budget"));
        } else if !(report.margin() >= 0.0) {
            report.verdict = Verdict::Fail;
            report.reason = Some(if value < lower - slack.abs {
                "below lower bound".to_string()
            } else {
                "above upper bound".to_string()
            });
        }
        report
    }

    fn failed(check: Check, at: Location, alpha: f64, reason: String) -> Self {
        BoundReport {
            check,
            at,
            alpha,
            lower: f64::NAN,
            value: f64::NAN,
            upper: f64::NAN,
            slack: Slack { rel: 0.0, abs: 0.0 },
            verdict: Verdict::Fail,
            reason: Some(reason),
        }
    }

    /// Slack-inclusive distance to the nearer bound, scaled by `max(1, |upper|)`;
    /// nonnegative exactly when the inequality holds.
    pub fn margin(&self) -> f64 {
        let below = self.value - (self.lower - self.slack.abs);
        let above = self.upper * (1.0 + self.slack.rel) + self.slack.abs - self.value;
        below.min(above) / self.upper.abs().max(1.0)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// One report per envelope quantity at `z`. The growth checks for `g` and `f`
/// use the logarithmic upper bounds.
pub fn check_point(m: &HarmonicMap, z: Complex64, policy: &SlackPolicy) -> Result<Vec<BoundReport>, VerifyError> {
    let s = m.sample(z)?;
    let r = domain_radius(z, m.r_max()).map_err(MapError::from)?;
    let alpha = m.alpha();
    let mut out = Vec::with_capacity(Quantity::ALL.len());
    for q in Quantity::ALL {
        let env = envelope(q, alpha, r)?;
        let (value, tail, upper) = match q {
            Quantity::HDeriv => (s.dh.value.norm(), s.dh.tail_bound, env.upper),
            Quantity::GDeriv => (s.dg.value.norm(), s.dg.tail_bound, env.upper),
            Quantity::Dilatation => {
                let w = s.dilatation();
                (w.value.norm(), w.tail_bound, env.upper)
            }
            Quantity::HGrowth => (s.h.value.norm(), s.h.tail_bound, env.upper),
            Quantity::GGrowth => (s.g.value.norm(), s.g.tail_bound, g_growth_upper_tight(alpha, r)?),
            Quantity::FGrowth => {
                let f = s.f();
                (f.value.norm(), f.tail_bound, f_growth_upper_tight(alpha, r)?)
            }
            Quantity::Jacobian => {
                let j = s.jacobian();
                (j.value.re, j.tail_bound, env.upper)
            }
        };
        out.push(BoundReport::judge(q.into(), z.into(), alpha, env.lower, value, upper, tail, policy));
    }
    Ok(out)
}

/// `|g(z)| < |h(z)|` for `z != 0`.
pub fn g_below_h(m: &HarmonicMap, z: Complex64, policy: &SlackPolicy) -> Result<BoundReport, VerifyError> {
    let s = m.sample(z)?;
    let tail = s.g.tail_bound + s.h.tail_bound;
    Ok(BoundReport::judge(
        Check::GBelowH,
        z.into(),
        m.alpha(),
        0.0,
        s.g.value.norm(),
        s.h.value.norm(),
        tail,
        policy,
    ))
}

/// `|G'(z)| < |H'(z)|` for an Alexander lift.
pub fn alexander_point(
    lifted: &HarmonicMap,
    z: Complex64,
    policy: &SlackPolicy,
) -> Result<BoundReport, VerifyError> {
    let s = lifted.sample(z)?;
    Ok(BoundReport::judge(
        Check::AlexanderLift,
        z.into(),
        lifted.alpha(),
        0.0,
        s.dg.value.norm(),
        s.dh.value.norm(),
        s.dg.tail_bound + s.dh.tail_bound,
        policy,
    ))
}

/// `|b_1| = alpha`, and for `2 <= n <= n_max`: `|a_n| <= n`, the `b_n` bound,
/// and `|b_n| < n`.
pub fn coefficient_audit(
    m: &HarmonicMap,
    n_max: usize,
    policy: &SlackPolicy,
) -> Result<Vec<BoundReport>, VerifyError> {
    if n_max > m.order() {
        return Err(VerifyError::CoefficientRange { n_max, order: m.order() });
    }
    let alpha = m.alpha();
    let mut out = Vec::with_capacity(3 * n_max);
    let b1 = m.g().coeff(1).norm();
    out.push(BoundReport::judge(Check::CoeffB1, Location::Index { n: 1 }, alpha, alpha, b1, alpha, 0.0, policy));
    for n in 2..=n_max {
        let at = Location::Index { n };
        let a = m.h().coeff(n).norm();
        let b = m.g().coeff(n).norm();
        let bound_b = coeff_bound_b(n, alpha)?;
        out.push(BoundReport::judge(Check::CoeffA, at, alpha, 0.0, a, coeff_bound_a(n)?, 0.0, policy));
        out.push(BoundReport::judge(Check::CoeffB, at, alpha, 0.0, b, bound_b.bound, 0.0, policy));
        out.push(BoundReport::judge(Check::CoeffStrict, at, alpha, 0.0, b, bound_b.strict_cap, 0.0, policy));
    }
    Ok(out)
}

/// A bound whose attainment is probed on the extremal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharpnessTarget {
    /// Envelope upper bound, probed at `z = r`.
    Upper(Quantity),
    /// Envelope lower bound, probed at `z = -r`.
    Lower(Quantity),
    GGrowthTight,
    FGrowthTight,
    /// `|a_n| <= n`; abscissae are coefficient indices.
    CoeffA,
    /// `|b_n|` bound; abscissae are coefficient indices.
    CoeffB,
}

impl SharpnessTarget {
    pub fn is_coefficient(self) -> bool {
        matches!(self, SharpnessTarget::CoeffA | SharpnessTarget::CoeffB)
    }
}

impl fmt::Display for SharpnessTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SharpnessTarget::Upper(q) => write!(f, "{q}_upper"),
            SharpnessTarget::Lower(q) => write!(f, "{q}_lower"),
            SharpnessTarget::GGrowthTight => f.write_str("g_growth_tight"),
            SharpnessTarget::FGrowthTight => f.write_str("f_growth_tight"),
            SharpnessTarget::CoeffA => f.write_str("coeff_a"),
            SharpnessTarget::CoeffB => f.write_str("coeff_b"),
        }
    }
}

impl FromStr for SharpnessTarget {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        let unknown = || VerifyError::UnknownTarget(s.to_string());
        Ok(match key.as_str() {
            "g_growth_tight" => SharpnessTarget::GGrowthTight,
            "f_growth_tight" => SharpnessTarget::FGrowthTight,
            "coeff_a" => SharpnessTarget::CoeffA,
            "coeff_b" => SharpnessTarget::CoeffB,
            _ => {
                if let Some(q) = key.strip_suffix("_lower") {
                    SharpnessTarget::Lower(q.parse().map_err(|_| unknown())?)
                } else {
                    let q = key.strip_suffix("_upper").unwrap_or(&key);
                    SharpnessTarget::Upper(q.parse().map_err(|_| unknown())?)
                }
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SharpnessPoint {
    /// Radius, or coefficient index for coefficient targets.
    pub x: f64,
    pub value: f64,
    pub bound: f64,
    /// `value / bound`, absent when the bound vanishes.
    pub ratio: Option<f64>,
}

/// Ratio of what `extremal_map(alpha)` achieves to the bound.
pub fn sharpness_scan(
    target: SharpnessTarget,
    alpha: f64,
    xs: &[f64],
    order: usize,
) -> Result<Vec<SharpnessPoint>, VerifyError> {
    let m = extremal_map(alpha, order)?;
    xs.iter()
        .map(|&x| {
            let (value, bound) = if target.is_coefficient() {
                if !(x >= 2.0 && x.fract() == 0.0) {
                    return Err(VerifyError::CoefficientIndex(x));
                }
                let n = x as usize;
                if n > m.order() {
                    return Err(VerifyError::CoefficientRange { n_max: n, order: m.order() });
                }
                match target {
                    SharpnessTarget::CoeffA => (m.h().coeff(n).norm(), coeff_bound_a(n)?),
                    _ => (m.g().coeff(n).norm(), coeff_bound_b(n, alpha)?.bound),
                }
            } else {
                let z = match target {
                    SharpnessTarget::Lower(_) => Complex64::new(-x, 0.0),
                    _ => Complex64::new(x, 0.0),
                };
                let s = m.sample(z)?;
                let value_of = |q: Quantity| match q {
                    Quantity::HDeriv => s.dh.value.norm(),
                    Quantity::GDeriv => s.dg.value.norm(),
                    Quantity::Dilatation => s.dilatation().value.norm(),
                    Quantity::HGrowth => s.h.value.norm(),
                    Quantity::GGrowth => s.g.value.norm(),
                    Quantity::FGrowth => s.f().value.norm(),
                    Quantity::Jacobian => s.jacobian().value.re,
                };
                match target {
                    SharpnessTarget::Upper(q) => (value_of(q), envelope(q, alpha, x)?.upper),
                    SharpnessTarget::Lower(q) => (value_of(q), envelope(q, alpha, x)?.lower),
                    SharpnessTarget::GGrowthTight => (s.g.value.norm(), g_growth_upper_tight(alpha, x)?),
                    SharpnessTarget::FGrowthTight => (s.f().value.norm(), f_growth_upper_tight(alpha, x)?),
                    _ => unreachable!("coefficient targets handled above"),
                }
            };
            let ratio = (bound > 0.0).then(|| value / bound);
            Ok(SharpnessPoint { x, value, bound, ratio })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureCheck {
    pub series_value: Complex64,
    pub quadrature_value: Complex64,
    pub diff: f64,
}

/// Compares `g(z)` from the series with composite Gauss-Legendre quadrature
/// of `omega h'` along `[0, z]` (of `g'` when the dilatation series is unknown).
pub fn quadrature_cross_check(m: &HarmonicMap, z: Complex64) -> Result<QuadratureCheck, VerifyError> {
    let radius = z.norm();
    if radius > QUADRATURE_R_MAX {
        return Err(VerifyError::Radius { radius, limit: QUADRATURE_R_MAX });
    }
    let rule = GaussLegendre::new(NonZeroUsize::new(QUADRATURE_NODES).expect("nonzero"));
    let integrand = |w: Complex64| match m.omega() {
        Some(omega) => omega.horner(w) * m.h_deriv().horner(w),
        None => m.g_deriv().horner(w),
    };
    let seg = 1.0 / QUADRATURE_SEGMENTS as f64;
    let mut total = Complex64::default();
    for k in 0..QUADRATURE_SEGMENTS {
        let (a, b) = (k as f64 * seg, (k + 1) as f64 * seg);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for &(node, weight) in rule.as_node_weight_pairs() {
            total += integrand(z * (mid + half * node)) * (weight * half);
        }
    }
    let quadrature_value = total * z;
    let series_value = m.g().horner(z);
    Ok(QuadratureCheck {
        series_value,
        quadrature_value,
        diff: (series_value - quadrature_value).norm(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub member_count: usize,
    pub points_per_member: usize,
    pub order: usize,
    pub r_max: f64,
    #[serde(skip)]
    pub grid: PolarGrid,
    pub slack: SlackPolicy,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            member_count: 200,
            points_per_member: 50,
            order: DEFAULT_ORDER,
            r_max: DEFAULT_R_MAX,
            grid: PolarGrid::default(),
            slack: SlackPolicy::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SharpnessStat {
    /// Largest `value / upper` seen.
    pub max_upper_ratio: Option<f64>,
    /// Smallest `value / lower` seen where `lower > 0`.
    pub min_lower_ratio: Option<f64>,
}

impl SharpnessStat {
    fn merge(&mut self, other: &SharpnessStat) {
        self.max_upper_ratio = max_opt(self.max_upper_ratio, other.max_upper_ratio, f64::max);
        self.min_lower_ratio = max_opt(self.min_lower_ratio, other.min_lower_ratio, f64::min);
    }
}

fn max_opt(a: Option<f64>, b: Option<f64>, pick: fn(f64, f64) -> f64) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(pick(x, y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub seed: u64,
    pub member_count: usize,
    pub points_per_member: usize,
    pub order: usize,
    pub reports_total: usize,
    pub reports_failed: usize,
    pub worst_margin: f64,
    pub sharpness: BTreeMap<Check, SharpnessStat>,
    /// The first few failing reports, in member/point order.
    pub failures: Vec<BoundReport>,
}

/// Aggregate of one member's reports.
#[derive(Debug, Clone, Default)]
struct Tally {
    total: usize,
    failed: usize,
    worst_margin: f64,
    sharpness: BTreeMap<Check, SharpnessStat>,
    failures: Vec<BoundReport>,
}

impl Tally {
    fn new() -> Self {
        Self { worst_margin: f64::INFINITY, ..Default::default() }
    }

    fn push(&mut self, report: BoundReport) {
        self.total += 1;
        let margin = report.margin();
        if !margin.is_nan() {
            self.worst_margin = self.worst_margin.min(margin);
        }
        let stat = SharpnessStat {
            max_upper_ratio: (report.upper > 0.0).then(|| report.value / report.upper),
            min_lower_ratio: (report.lower > 0.0).then(|| report.value / report.lower),
        };
        if stat.max_upper_ratio.is_some() || stat.min_lower_ratio.is_some() {
            self.sharpness
                .entry(report.check)
                .or_insert(SharpnessStat { max_upper_ratio: None, min_lower_ratio: None })
                .merge(&stat);
        }
        if !report.passed() {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(report);
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.total += other.total;
        self.failed += other.failed;
        self.worst_margin = self.worst_margin.min(other.worst_margin);
        for (k, v) in other.sharpness {
            self.sharpness
                .entry(k)
                .or_insert(SharpnessStat { max_upper_ratio: None, min_lower_ratio: None })
                .merge(&v);
        }
        let room = MAX_LISTED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

fn verify_member(recipe: &MemberRecipe, points: &[Complex64], cfg: &SweepConfig) -> Tally {
    let mut tally = Tally::new();
    let policy = &cfg.slack;
    let here = Location::Point { re: 0.0, im: 0.0 };
    let m = match recipe.build(cfg.order, &cfg.grid) {
        Ok(m) => m.with_r_max(cfg.r_max),
        Err(e) => {
            tally.push(BoundReport::failed(Check::Build, here, f64::NAN, e.to_string()));
            return tally;
        }
    };
    let lifted = match alexander_lift(&m, &cfg.grid) {
        Ok(l) => Some(l),
        Err(e) => {
            tally.push(BoundReport::failed(Check::AlexanderLift, here, m.alpha(), e.to_string()));
            None
        }
    };
    for &z in points {
        match check_point(&m, z, policy) {
            Ok(reports) => reports.into_iter().for_each(|r| tally.push(r)),
            Err(e) => tally.push(BoundReport::failed(Check::Build, z.into(), m.alpha(), e.to_string())),
        }
        if z.norm() > 0.0 {
            match g_below_h(&m, z, policy) {
                Ok(r) => tally.push(r),
                Err(e) => tally.push(BoundReport::failed(Check::GBelowH, z.into(), m.alpha(), e.to_string())),
            }
        }
        if let Some(l) = &lifted {
            match alexander_point(l, z, policy) {
                Ok(r) => tally.push(r),
                Err(e) => {
                    tally.push(BoundReport::failed(Check::AlexanderLift, z.into(), m.alpha(), e.to_string()))
                }
            }
        }
    }
    match coefficient_audit(&m, m.order(), policy) {
        Ok(reports) => reports.into_iter().for_each(|r| tally.push(r)),
        Err(e) => tally.push(BoundReport::failed(Check::CoeffB, Location::Index { n: 0 }, m.alpha(), e.to_string())),
    }
    tally
}

/// Sweep an explicit list of members with their evaluation points. Members
/// are verified in parallel and merged in list order.
pub fn sweep_members(cfg: &SweepConfig, members: &[(MemberRecipe, Vec<Complex64>)]) -> SweepSummary {
    let tallies: Vec<Tally> = members
        .par_iter()
        .map(|(recipe, points)| verify_member(recipe, points, cfg))
        .collect();
    let mut all = Tally::new();
    for t in tallies {
        all.absorb(t);
    }
    SweepSummary {
        seed: cfg.seed,
        member_count: members.len(),
        points_per_member: cfg.points_per_member,
        order: cfg.order,
        reports_total: all.total,
        reports_failed: all.failed,
        worst_margin: all.worst_margin,
        sharpness: all.sharpness,
        failures: all.failures,
    }
}

/// Member `index` and its evaluation points, drawn from the stream `(seed, index)`.
/// Points have radius uniform in `[0, r_max]` and uniform angle.
pub fn draw_member_with_points(
    cfg: &SweepConfig,
    index: u64,
) -> Result<(MemberRecipe, Vec<Complex64>), VerifyError> {
    let mut rng = member_rng(cfg.seed, index);
    let (recipe, _) = MemberRecipe::draw_member(&mut rng, cfg.order, &cfg.grid)?;
    let points = (0..cfg.points_per_member)
        .map(|_| {
            let r = rng.gen_range(0.0..=cfg.r_max);
            Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect();
    Ok((recipe, points))
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepSummary, VerifyError> {
    if cfg.member_count == 0 {
        return Err(VerifyError::NoMembers);
    }
    let members = (0..cfg.member_count as u64)
        .into_par_iter()
        .map(|i| draw_member_with_points(cfg, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(sweep_members(cfg, &members))
}
