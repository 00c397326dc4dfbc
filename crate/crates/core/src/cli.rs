//! The `harmonic` command-line front end.
//!
//! Subcommands: `gen`, `eval`, `verify`, `sharpness`, `render`. Exit codes are
//! 0 on success, 1 when verification failures are present, 2 on usage or
//! parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::Quantity;
use crate::maps::{member_rng, HarmonicMap, MapError, MemberRecipe, PolarGrid};
use crate::series::{TruncatedSeries, DEFAULT_ORDER, DEFAULT_R_MAX};
use crate::verify::{
    check_point, run_sweep, sharpness_scan, BoundReport, SharpnessTarget, SlackPolicy, SweepConfig,
    VerifyError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse map record {path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("invalid map record {path}: {reason}")]
    Record { path: String, reason: String },
    #[error("{0}")]
    Map(#[from] MapError),
    #[error("{0}")]
    Verify(#[from] VerifyError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// `RxA`: radii by angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub radii: usize,
    pub angles: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (r, a) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("grid `{s}` must look like RxA, e.g. 24x72"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("grid `{s}`: {e}"));
        Ok(GridSpec { radii: parse(r)?, angles: parse(a)? })
    }
}

fn parse_point(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    let re = re.trim().parse::<f64>().map_err(|e| format!("point `{s}`: {e}"))?;
    let im = im.trim().parse::<f64>().map_err(|e| format!("point `{s}`: {e}"))?;
    Ok(Complex64::new(re, im))
}

#[derive(Debug, Parser)]
#[command(name = "harmonic", version, about = "Harmonic maps with starlike analytic part: generate, evaluate, verify")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Truncation order of all series.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Largest evaluation radius.
    #[arg(long, global = true, default_value_t = DEFAULT_R_MAX)]
    pub rmax: f64,
    /// Relative slack for verdicts.
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub slack: f64,
    /// Polar grid as RADIIxANGLES.
    #[arg(long, global = true, default_value = "24x72")]
    pub grid: GridSpec,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a class member and write its map record.
    #[command(group(ArgGroup::new("kind").required(true).args(["extremal", "random", "koebe_identity"])))]
    Gen {
        /// Extremal member with real parameter in [0, 1).
        #[arg(long, value_name = "ZETA", allow_negative_numbers = true)]
        extremal: Option<f64>,
        /// Random member drawn from --seed.
        #[arg(long)]
        random: bool,
        /// Koebe analytic part with dilatation z.
        #[arg(long)]
        koebe_identity: bool,
    },
    /// Evaluate a map record against the envelopes at given points.
    Eval {
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        /// Quantity name (h_deriv, g_deriv, dilatation, h_growth, g_growth, f_growth, jacobian) or `all`.
        #[arg(long, default_value = "all")]
        quantity: String,
        /// Point as RE,IM; repeatable.
        #[arg(long = "point", value_name = "RE,IM", required = true, value_parser = parse_point, allow_hyphen_values = true)]
        points: Vec<Complex64>,
    },
    /// Run a seeded verification sweep over random members.
    Verify {
        #[arg(long, default_value_t = 200)]
        members: usize,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
    /// Ratio of what the extremal family achieves to a bound.
    Sharpness {
        /// Target: <quantity>[_upper|_lower], g_growth_tight, f_growth_tight, coeff_a, coeff_b.
        #[arg(long)]
        quantity: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Radii to probe (comma separated).
        #[arg(long, value_delimiter = ',')]
        r: Vec<f64>,
        /// Coefficient indices to probe (comma separated).
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
    },
    /// Image of concentric circles and radial spokes, as CSV.
    Render {
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
        #[arg(long, default_value_t = 12)]
        spokes: usize,
    },
}

/// Validated global settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub order: usize,
    pub r_max: f64,
    pub slack_rel: f64,
    pub grid: GridSpec,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self, CliError> {
        if g.order < 32 {
            return Err(CliError::Usage(format!("--order {} must be at least 32", g.order)));
        }
        if !(g.rmax > 0.0 && g.rmax <= DEFAULT_R_MAX) {
            return Err(CliError::Usage(format!("--rmax {} must lie in (0, {DEFAULT_R_MAX}]", g.rmax)));
        }
        if !(g.slack >= 0.0 && g.slack.is_finite()) {
            return Err(CliError::Usage(format!("--slack {} must be a nonnegative number", g.slack)));
        }
        if g.grid.radii == 0 || g.grid.angles == 0 {
            return Err(CliError::Usage("grid counts must be at least 1".into()));
        }
        Ok(Self {
            seed: g.seed,
            order: g.order,
            r_max: g.rmax,
            slack_rel: g.slack,
            grid: g.grid,
            format: g.format,
        })
    }

    pub fn polar_grid(&self) -> PolarGrid {
        PolarGrid::new(self.grid.radii, self.grid.angles, self.r_max)
    }

    pub fn slack_policy(&self) -> SlackPolicy {
        SlackPolicy { rel: self.slack_rel, ..SlackPolicy::default() }
    }
}

/// Generator parameters recorded with every map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: MemberRecipe,
    pub seed: Option<u64>,
}

/// On-disk map record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapRecord {
    pub format_version: u32,
    pub alpha: f64,
    pub order: usize,
    pub h_coeffs: Vec<[f64; 2]>,
    pub g_coeffs: Vec<[f64; 2]>,
    #[serde(default)]
    pub provenance: serde_json::Value,
}

fn pairs(s: &TruncatedSeries) -> Vec<[f64; 2]> {
    s.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

impl MapRecord {
    pub fn from_map(m: &HarmonicMap, provenance: &Provenance) -> Result<Self, CliError> {
        Ok(Self {
            format_version: FORMAT_VERSION,
            alpha: m.alpha(),
            order: m.order(),
            h_coeffs: pairs(&m.h().truncate(m.order())),
            g_coeffs: pairs(&m.g().truncate(m.order())),
            provenance: serde_json::to_value(provenance)?,
        })
    }

    pub fn to_map(&self, path: &str) -> Result<HarmonicMap, CliError> {
        let bad = |reason: String| CliError::Record { path: path.to_string(), reason };
        if self.format_version != FORMAT_VERSION {
            return Err(bad(format!("format_version {} is not supported", self.format_version)));
        }
        for (field, v) in [("h_coeffs", &self.h_coeffs), ("g_coeffs", &self.g_coeffs)] {
            if v.len() != self.order + 1 {
                return Err(bad(format!("{field} has {} entries, expected order + 1 = {}", v.len(), self.order + 1)));
            }
        }
        let series = |v: &[[f64; 2]]| {
            TruncatedSeries::new(v.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                .map_err(|e| bad(e.to_string()))
        };
        let m = HarmonicMap::new(series(&self.h_coeffs)?, series(&self.g_coeffs)?)
            .map_err(|e| bad(e.to_string()))?;
        if (m.alpha() - self.alpha).abs() > 1e-12 {
            return Err(bad(format!("field alpha = {} disagrees with |b_1| = {}", self.alpha, m.alpha())));
        }
        Ok(m)
    }

    pub fn parse(text: &str, path: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|source| CliError::Parse { path: path.to_string(), source })
    }
}

fn load_map(path: &PathBuf, cfg: &RunConfig) -> Result<HarmonicMap, CliError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {name}: {e}")))?;
    Ok(MapRecord::parse(&text, &name)?.to_map(&name)?.with_r_max(cfg.r_max))
}

fn num(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        format!("{x}")
    }
}

pub fn cmd_gen(cfg: &RunConfig, recipe: &MemberRecipe, seed: Option<u64>) -> Result<String, CliError> {
    let m = recipe.build(cfg.order, &cfg.polar_grid())?;
    let record = MapRecord::from_map(&m, &Provenance { generator: recipe.clone(), seed })?;
    match cfg.format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&record)? + "\n"),
        OutputFormat::Csv => {
            let mut out = String::from("part,n,re,im\n");
            for (part, coeffs) in [("h", &record.h_coeffs), ("g", &record.g_coeffs)] {
                for (n, [re, im]) in coeffs.iter().enumerate() {
                    writeln!(out, "{part},{n},{re},{im}").expect("string write");
                }
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub re_z: f64,
    pub im_z: f64,
    pub quantity: Quantity,
    pub value: Option<f64>,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// `PASS`, `FAIL` or `DOMAIN_ERROR`.
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub fn cmd_eval(
    cfg: &RunConfig,
    m: &HarmonicMap,
    quantity: Option<Quantity>,
    points: &[Complex64],
) -> Result<Vec<EvalRow>, CliError> {
    let policy = cfg.slack_policy();
    let wanted: Vec<Quantity> = quantity.map_or_else(|| Quantity::ALL.to_vec(), |q| vec![q]);
    let mut rows = Vec::new();
    for &z in points {
        match check_point(m, z, &policy) {
            Ok(reports) => {
                for q in &wanted {
                    let r: &BoundReport = reports
                        .iter()
                        .find(|r| r.check == (*q).into())
                        .expect("one report per quantity");
                    rows.push(EvalRow {
                        re_z: z.re,
                        im_z: z.im,
                        quantity: *q,
                        value: Some(r.value),
                        lower: Some(r.lower),
                        upper: Some(r.upper),
                        verdict: r.verdict.to_string(),
                        reason: r.reason.clone(),
                    });
                }
            }
            Err(e) => {
                for q in &wanted {
                    rows.push(EvalRow {
                        re_z: z.re,
                        im_z: z.im,
                        quantity: *q,
                        value: None,
                        lower: None,
                        upper: None,
                        verdict: "DOMAIN_ERROR".into(),
                        reason: Some(e.to_string()),
                    });
                }
            }
        }
    }
    Ok(rows)
}

fn eval_table(rows: &[EvalRow], format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        OutputFormat::Csv => {
            let mut out = String::from("re_z,im_z,quantity,value,lower,upper,verdict\n");
            let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.re_z,
                    r.im_z,
                    r.quantity,
                    opt(r.value),
                    opt(r.lower),
                    opt(r.upper),
                    r.verdict
                )
                .expect("string write");
            }
            Ok(out)
        }
    }
}

pub fn sweep_config(cfg: &RunConfig, members: usize, points: usize) -> SweepConfig {
    SweepConfig {
        seed: cfg.seed,
        member_count: members,
        points_per_member: points,
        order: cfg.order,
        r_max: cfg.r_max,
        grid: cfg.polar_grid(),
        slack: cfg.slack_policy(),
    }
}

/// Serialized sweep summary and whether any report failed.
pub fn cmd_verify(cfg: &RunConfig, members: usize, points: usize) -> Result<(String, bool), CliError> {
    if members == 0 {
        return Err(CliError::Usage("--members must be at least 1".into()));
    }
    let summary = run_sweep(&sweep_config(cfg, members, points))?;
    let failed = summary.reports_failed > 0;
    let text = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&summary)? + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("key,value\n");
            for (k, v) in [
                ("seed", summary.seed.to_string()),
                ("member_count", summary.member_count.to_string()),
                ("points_per_member", summary.points_per_member.to_string()),
                ("order", summary.order.to_string()),
                ("reports_total", summary.reports_total.to_string()),
                ("reports_failed", summary.reports_failed.to_string()),
                ("worst_margin", num(summary.worst_margin)),
            ] {
                writeln!(out, "{k},{v}").expect("string write");
            }
            for (check, stat) in &summary.sharpness {
                let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
                writeln!(out, "max_upper_ratio.{check},{}", opt(stat.max_upper_ratio)).expect("string write");
                writeln!(out, "min_lower_ratio.{check},{}", opt(stat.min_lower_ratio)).expect("string write");
            }
            out
        }
    };
    Ok((text, failed))
}

pub fn cmd_sharpness(
    cfg: &RunConfig,
    target: &str,
    alpha: f64,
    r: &[f64],
    n: &[usize],
) -> Result<String, CliError> {
    let target: SharpnessTarget = target.parse().map_err(|e: VerifyError| CliError::Usage(e.to_string()))?;
    if !(0.0..1.0).contains(&alpha) {
        return Err(CliError::Usage(format!("--alpha {alpha} must lie in [0, 1)")));
    }
    let xs: Vec<f64> = if target.is_coefficient() {
        if n.is_empty() {
            (2..=10).map(|k| k as f64).collect()
        } else {
            n.iter().map(|&k| k as f64).collect()
        }
    } else if r.is_empty() {
        (1..=8).map(|k| k as f64 / 10.0).collect()
    } else {
        r.to_vec()
    };
    let points = sharpness_scan(target, alpha, &xs, cfg.order)?;
    match cfg.format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&points)? + "\n"),
        OutputFormat::Csv => {
            let abscissa = if target.is_coefficient() { "n" } else { "r" };
            let mut out = format!("{abscissa},value,bound,ratio\n");
            for p in &points {
                let ratio = p.ratio.map(num).unwrap_or_default();
                writeln!(out, "{},{},{},{}", p.x, p.value, p.bound, ratio).expect("string write");
            }
            Ok(out)
        }
    }
}

/// Rows `curve_id,re_z,im_z,re_f,im_f`: `radii` circles sampled at `angles`
/// points, then `spokes` rays from 0 to `r_max`, each sampled at `angles` points.
pub fn cmd_render(cfg: &RunConfig, m: &HarmonicMap, spokes: usize) -> Result<String, CliError> {
    let GridSpec { radii, angles } = cfg.grid;
    let mut out = String::from("curve_id,re_z,im_z,re_f,im_f\n");
    let mut row = |id: &str, z: Complex64| -> Result<(), CliError> {
        let f = m.eval_f(z)?;
        writeln!(out, "{id},{},{},{},{}", z.re, z.im, f.re, f.im).expect("string write");
        Ok(())
    };
    for i in 1..=radii {
        let r = cfg.r_max * i as f64 / radii as f64;
        let id = format!("circle_{i}");
        for j in 0..angles {
            let theta = std::f64::consts::TAU * j as f64 / angles as f64;
            row(&id, Complex64::from_polar(r, theta))?;
        }
    }
    for s in 0..spokes {
        let theta = std::f64::consts::TAU * s as f64 / spokes as f64;
        let id = format!("spoke_{s}");
        for k in 0..angles {
            let t = if angles > 1 { k as f64 / (angles - 1) as f64 } else { 0.0 };
            row(&id, Complex64::from_polar(cfg.r_max * t, theta))?;
        }
    }
    Ok(out)
}

fn dispatch(cli: Cli) -> Result<(String, i32), CliError> {
    let cfg = RunConfig::from_args(&cli.global)?;
    match cli.command {
        Command::Gen { extremal, random, koebe_identity: _ } => {
            let (recipe, seed) = if let Some(zeta) = extremal {
                if !(0.0..1.0).contains(&zeta) {
                    return Err(CliError::Usage(format!("--extremal {zeta} must lie in [0, 1)")));
                }
                (MemberRecipe::Extremal { zeta }, None)
            } else if random {
                let mut rng = member_rng(cfg.seed, 0);
                let (recipe, _) = MemberRecipe::draw_member(&mut rng, cfg.order, &cfg.polar_grid())?;
                (recipe, Some(cfg.seed))
            } else {
                (MemberRecipe::KoebeIdentity, None)
            };
            Ok((cmd_gen(&cfg, &recipe, seed)?, EXIT_OK))
        }
        Command::Eval { map, quantity, points } => {
            let q = if quantity.eq_ignore_ascii_case("all") {
                None
            } else {
                Some(quantity.parse::<Quantity>().map_err(|e| CliError::Usage(e.to_string()))?)
            };
            let m = load_map(&map, &cfg)?;
            let rows = cmd_eval(&cfg, &m, q, &points)?;
            let code = if rows.iter().any(|r| r.verdict == "FAIL") { EXIT_FAILURES } else { EXIT_OK };
            Ok((eval_table(&rows, cfg.format)?, code))
        }
        Command::Verify { members, points } => {
            let (text, failed) = cmd_verify(&cfg, members, points)?;
            Ok((text, if failed { EXIT_FAILURES } else { EXIT_OK }))
        }
        Command::Sharpness { quantity, alpha, r, n } => {
            Ok((cmd_sharpness(&cfg, &quantity, alpha, &r, &n)?, EXIT_OK))
        }
        Command::Render { map, spokes } => {
            let m = load_map(&map, &cfg)?;
            Ok((cmd_render(&cfg, &m, spokes)?, EXIT_OK))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Output goes to `--out` or `stdout`; diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(stdout, "{}", e.render());
            } else {
                let _ = write!(stderr, "{}", e.render());
            }
            return code;
        }
    };
    let out_path = cli.global.out.clone();
    match dispatch(cli) {
        Ok((text, code)) => {
            let written = match &out_path {
                Some(p) => fs::write(p, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_spec_parsing() {
        assert_eq!("24x72".parse::<GridSpec>().unwrap(), GridSpec { radii: 24, angles: 72 });
        assert_eq!("3X5".parse::<GridSpec>().unwrap(), GridSpec { radii: 3, angles: 5 });
        assert!("24".parse::<GridSpec>().is_err());
        assert!("ax2".parse::<GridSpec>().is_err());
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("0.5,-0.25").unwrap(), Complex64::new(0.5, -0.25));
        assert_eq!(parse_point("0.3").unwrap(), Complex64::new(0.3, 0.0));
        assert!(parse_point("x,1").is_err());
    }

    #[test]
    fn config_validation() {
        let cli = Cli::try_parse_from(["harmonic", "--order", "16", "verify"]).unwrap();
        assert!(RunConfig::from_args(&cli.global).is_err());
        let cli = Cli::try_parse_from(["harmonic", "--rmax", "0.95", "verify"]).unwrap();
        assert!(RunConfig::from_args(&cli.global).is_err());
        let cli = Cli::try_parse_from(["harmonic", "--grid", "0x4", "verify"]).unwrap();
        assert!(RunConfig::from_args(&cli.global).is_err());
        let cli = Cli::try_parse_from(["harmonic", "verify"]).unwrap();
        let cfg = RunConfig::from_args(&cli.global).unwrap();
        assert_eq!((cfg.order, cfg.r_max, cfg.seed), (256, 0.9, 42));
    }

    #[test]
    fn record_round_trips_exactly() {
        let cli = Cli::try_parse_from(["harmonic", "--seed", "5", "gen", "--random"]).unwrap();
        let cfg = RunConfig::from_args(&cli.global).unwrap();
        let (recipe, m) = MemberRecipe::draw_member(&mut member_rng(5, 0), cfg.order, &cfg.polar_grid()).unwrap();
        let text = cmd_gen(&cfg, &recipe, Some(5)).unwrap();
        let back = MapRecord::parse(&text, "m.json").unwrap().to_map("m.json").unwrap();
        assert_eq!(back.h().coeffs(), m.h().coeffs());
        assert_eq!(back.g().coeffs(), m.g().coeffs());
    }

    #[test]
    fn record_rejects_inconsistent_alpha() {
        let text = r#"{"format_version":1,"alpha":0.3,"order":1,"h_coeffs":[[0,0],[1,0]],"g_coeffs":[[0,0],[0.2,0]]}"#;
        let rec = MapRecord::parse(text, "m.json").unwrap();
        let err = rec.to_map("m.json").unwrap_err();
        assert!(err.to_string().contains("alpha"));
    }

    #[test]
    fn record_reports_missing_field() {
        let text = "{\n\"format_version\": 1,\n\"order\": 1\n}";
        let err = MapRecord::parse(text, "m.json").unwrap_err().to_string();
        assert!(err.contains("missing field"), "{err}");
        assert!(err.contains("line"), "{err}");
    }
}
