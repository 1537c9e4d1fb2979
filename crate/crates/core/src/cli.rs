//! The `shx` command line.
//!
//! [`run`] parses arguments and returns what the binary should print and the
//! exit code, so every command can be driven and tested in process.
//!
//! Exit codes: 0 pass, 1 mathematical failure, 2 parse or configuration
//! error, 3 scale mismatch.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{mul_table, Basis, Hypercomplex, MulTable};
use crate::calculus::{check, partial, finite_difference, sweep, CheckMode, Point4, Verdict, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::function::{HFunction, PolySpec};
use crate::hyperbolic::{polar_decompose, HyperbolicNumber};
use crate::regular::{expand, max_degree, MultiIndex, DEFAULT_EXPAND_DEGREE};
use crate::sampling::{Region, DEFAULT_SEED};
use crate::scale::Scale;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

/// Largest allowed residual of an expansion before `expand` reports failure.
pub const EXPAND_RESIDUAL_TOL: f64 = 1e-8;
/// Default tolerance for the jet vs finite-difference comparison.
pub const ORACLE_TOL: f64 = 1e-6;
/// Central-difference step of the oracle.
pub const ORACLE_STEP: f64 = 1e-5;

#[derive(Debug, Parser)]
#[command(name = "shx", version, about = "Arithmetic and regularity calculus in the scaled hypercomplex rings H_t")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// The scale t. Taken from the spec file when omitted.
    #[arg(long = "t", allow_negative_numbers = true)]
    pub t: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_EXPAND_DEGREE)]
    pub maxdeg: usize,
    /// Region spec file, or inline JSON.
    #[arg(long)]
    pub region: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the multiplication table of the basis {1, i, j_t, k_t}.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a function at a point, or multiply two elements.
    Eval {
        #[command(flatten)]
        common: Common,
        /// Builtin name, spec file, or inline JSON spec.
        #[arg(long = "fn")]
        function: Option<String>,
        /// Comma-separated x1,x2,x3,x4.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Two comma-separated elements.
        #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["H1", "H2"])]
        mul: Option<Vec<String>>,
    },
    /// Check left/right regularity or harmonicity on sampled points.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long = "fn")]
        function: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Left)]
        mode: ModeArg,
    },
    /// Expand a left regular function about 0.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long = "fn")]
        function: String,
    },
    /// Polar form of x + u j_t.
    Polar {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        u: f64,
    },
    /// Compare jet partials with central differences.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long = "fn")]
        function: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Left,
    Right,
    Harmonic,
}

impl From<ModeArg> for CheckMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Left => CheckMode::Left,
            ModeArg::Right => CheckMode::Right,
            ModeArg::Harmonic => CheckMode::Harmonic,
        }
    }
}

/// What a command run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Outcome { stdout, stderr: String::new(), code: if pass { EXIT_PASS } else { EXIT_FAIL } }
    }
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub t: Option<f64>,
    pub tolerance: Option<f64>,
    pub seed: u64,
    pub samples: usize,
    pub maxdeg: usize,
    pub region: Region,
    pub output: OutputFormat,
}

impl RunConfig {
    pub fn from_common(c: &Common) -> Result<Self> {
        if let Some(tol) = c.tol {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Error::InvalidArgument(format!("--tol must be positive, got {tol}")));
            }
        }
        if c.samples == 0 {
            return Err(Error::InvalidArgument("--samples must be at least 1".into()));
        }
        let cap = max_degree();
        if c.maxdeg == 0 || c.maxdeg > cap {
            return Err(Error::InvalidArgument(format!("--maxdeg must be in 1..={cap}, got {}", c.maxdeg)));
        }
        let region = match &c.region {
            None => Region::default(),
            Some(arg) => {
                let text = read_inline_or_file(arg)?;
                let r: Region = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("region: {e}")))?;
                r.validate()?;
                r
            }
        };
        Ok(RunConfig {
            t: c.t,
            tolerance: c.tol,
            seed: c.seed,
            samples: c.samples,
            maxdeg: c.maxdeg,
            region,
            output: c.output,
        })
    }

    /// `--t`, which must be present when no spec file names a scale.
    pub fn scale(&self) -> Result<Scale> {
        match self.t {
            Some(t) => Scale::new(t),
            None => Err(Error::InvalidArgument("--t is required".into())),
        }
    }

    pub fn points(&self) -> Vec<Point4> {
        self.region.sample(self.samples, self.seed)
    }
}

fn read_inline_or_file(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
    }
}

/// Resolves `--fn` to a function and its scale. Builtins: `x1`..`x4`,
/// `eta2`..`eta4`, `zeta2`..`zeta4`, `etapow:n1,n2,n3`. Anything else is a
/// polynomial spec, inline or from a file; its `t` must agree with `--t`.
pub fn resolve_function(name: &str, config: &RunConfig) -> Result<(Scale, HFunction)> {
    if let Some(f) = builtin(name)? {
        return Ok((config.scale()?, f));
    }
    let text = read_inline_or_file(name)?;
    let (scale, f) = PolySpec::from_json(&text)?.into_function()?;
    if let Some(t) = config.t {
        scale.ensure_same(Scale::new(t)?)?;
    }
    Ok((scale, f))
}

fn builtin(name: &str) -> Result<Option<HFunction>> {
    let name = name.trim();
    let indexed = |prefix: &str, lo: usize| -> Option<usize> {
        let l: usize = name.strip_prefix(prefix)?.parse().ok()?;
        (lo..=4).contains(&l).then_some(l)
    };
    if let Some(l) = indexed("x", 1) {
        return Ok(Some(HFunction::coord(l)));
    }
    if let Some(l) = indexed("eta", 2) {
        return Ok(Some(HFunction::eta(l)));
    }
    if let Some(l) = indexed("zeta", 2) {
        return Ok(Some(HFunction::zeta(l)));
    }
    if let Some(rest) = name.strip_prefix("etapow").map(|r| r.trim_start_matches([':', ' '])) {
        let parts: Vec<u32> = rest
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad multi-index {rest:?}"))))
            .collect::<Result<_>>()?;
        let n: [u32; 3] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("multi-index needs three entries, got {rest:?}")))?;
        let n = MultiIndex(n);
        let cap = max_degree();
        if n.total() > cap {
            return Err(Error::DegreeTooLarge { degree: n.total(), cap });
        }
        return Ok(Some(HFunction::eta_power(n)));
    }
    Ok(None)
}

fn parse_coords(s: &str) -> Result<[f64; 4]> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number in {s:?}"))))
        .collect::<Result<_>>()?;
    let x: [f64; 4] = v.try_into().map_err(|_| Error::Parse(format!("expected four coordinates, got {s:?}")))?;
    if x.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite("coordinate"));
    }
    Ok(x)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ScaleMismatch { .. } => EXIT_SCALE,
        Error::Singular { .. }
        | Error::NullCone { .. }
        | Error::NoBranch { .. }
        | Error::NotLeftRegular { .. }
        | Error::PatternViolation { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ScaleMismatch { .. } => "ScaleMismatch",
        Error::NonFinite(_) => "NonFinite",
        Error::ZeroScaleSign => "ZeroScaleSign",
        Error::Singular { .. } => "Singular",
        Error::PatternViolation { .. } => "PatternViolation",
        Error::NullCone { .. } => "NullCone",
        Error::NoBranch { .. } => "NoBranch",
        Error::DegreeTooLarge { .. } => "DegreeTooLarge",
        Error::ScaleConstraint { .. } => "ScaleConstraint",
        Error::NotLeftRegular { .. } => "NotLeftRegular",
        Error::InvalidArgument(_) => "InvalidArgument",
        Error::Parse(_) => "ParseError",
    }
}

/// Mathematical failures print a JSON payload on stdout; usage errors only
/// a message on stderr.
fn error_outcome(e: Error) -> Outcome {
    let code = exit_code(&e);
    let stdout = if code == EXIT_FAIL {
        let mut v = json!({ "error": error_kind(&e), "message": e.to_string() });
        match &e {
            Error::NotLeftRegular { witness, residual } => {
                v["witness"] = json!(witness);
                v["residual"] = json!(residual);
            }
            Error::NullCone { seminorm } => v["seminorm"] = json!(seminorm),
            Error::NoBranch { residual } | Error::PatternViolation { residual } => v["residual"] = json!(residual),
            Error::Singular { det } => v["det"] = json!(det),
            _ => {}
        }
        format!("{v}\n")
    } else {
        String::new()
    };
    Outcome { stdout, stderr: format!("error: {e}\n"), code }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    execute(&cli.command).unwrap_or_else(error_outcome)
}

pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Table { common } => cmd_table(&RunConfig::from_common(common)?),
        Command::Eval { common, function, point, mul } => {
            let config = RunConfig::from_common(common)?;
            match (function, point, mul) {
                (_, _, Some(pair)) => cmd_eval_mul(&config, &pair[0], &pair[1]),
                (Some(f), Some(p), None) => cmd_eval(&config, f, p),
                _ => Err(Error::InvalidArgument("eval needs --fn with --point, or --mul H1 H2".into())),
            }
        }
        Command::Check { common, function, mode } => {
            cmd_check(&RunConfig::from_common(common)?, function, (*mode).into())
        }
        Command::Expand { common, function } => cmd_expand(&RunConfig::from_common(common)?, function),
        Command::Polar { common, x, u } => cmd_polar(&RunConfig::from_common(common)?, *x, *u),
        Command::Oracle { common, function } => cmd_oracle(&RunConfig::from_common(common)?, function),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_row(fields: &[String]) -> String {
    let mut s = fields.join(",");
    s.push('\n');
    s
}

/// `c · unit` after substituting `t`, e.g. `-2.5i`, `0`, `k`.
fn render_entry(c: f64, unit: Basis) -> String {
    if c == 0.0 {
        return "0".into();
    }
    if unit == Basis::One {
        return format!("{c}");
    }
    match c {
        1.0 => unit.symbol().to_string(),
        -1.0 => format!("-{}", unit.symbol()),
        _ => format!("{c}{}", unit.symbol()),
    }
}

pub fn cmd_table(config: &RunConfig) -> Result<Outcome> {
    let scale = config.scale()?;
    let table = MulTable::symbolic();
    let numeric = mul_table(scale);
    let rendered: Vec<Vec<String>> = Basis::ALL
        .iter()
        .map(|&l| {
            Basis::ALL
                .iter()
                .map(|&r| {
                    let e = table.get(l, r);
                    render_entry(e.coef.eval(scale.t()), e.unit)
                })
                .collect()
        })
        .collect();
    let out = match config.output {
        OutputFormat::Json => {
            let symbolic: Vec<Vec<String>> =
                table.entries.iter().map(|row| row.iter().map(|e| e.to_string()).collect()).collect();
            let entries: Vec<Vec<[f64; 4]>> =
                numeric.iter().map(|row| row.iter().map(|h| h.coords()).collect()).collect();
            to_json(&json!({ "t": scale.t(), "symbolic": symbolic, "rendered": rendered, "entries": entries }))
        }
        OutputFormat::Csv => {
            let mut s = csv_row(&["left", "right", "symbolic", "x1", "x2", "x3", "x4"].map(String::from));
            for l in Basis::ALL {
                for r in Basis::ALL {
                    let x = numeric[l.index()][r.index()].coords();
                    let mut row = vec![l.symbol().into(), r.symbol().into(), table.get(l, r).to_string()];
                    row.extend(x.iter().map(|v| v.to_string()));
                    s.push_str(&csv_row(&row));
                }
            }
            s
        }
        OutputFormat::Pretty => {
            let width = rendered.iter().flatten().map(String::len).max().unwrap_or(1).max(2);
            let mut s = format!("t = {}\n{:>3} |", scale.t(), "·");
            for r in Basis::ALL {
                let _ = write!(s, " {:>width$}", r.symbol());
            }
            s.push('\n');
            for (l, row) in Basis::ALL.iter().zip(&rendered) {
                let _ = write!(s, "{:>3} |", l.symbol());
                for e in row {
                    let _ = write!(s, " {e:>width$}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(out, true))
}

fn render_element(h: &Hypercomplex, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(h),
        OutputFormat::Csv => {
            let mut s = csv_row(&["t", "x1", "x2", "x3", "x4"].map(String::from));
            let mut row = vec![h.t().to_string()];
            row.extend(h.coords().iter().map(|v| v.to_string()));
            s.push_str(&csv_row(&row));
            s
        }
        OutputFormat::Pretty => format!("{h}\n"),
    }
}

pub fn cmd_eval(config: &RunConfig, function: &str, point: &str) -> Result<Outcome> {
    let (scale, f) = resolve_function(function, config)?;
    let p = Point4::new(parse_coords(point)?)?;
    Ok(Outcome::ok(render_element(&f.eval(scale, &p)?, config.output), true))
}

pub fn cmd_eval_mul(config: &RunConfig, h1: &str, h2: &str) -> Result<Outcome> {
    let scale = config.scale()?;
    let a = Hypercomplex::new(scale, parse_coords(h1)?)?;
    let b = Hypercomplex::new(scale, parse_coords(h2)?)?;
    Ok(Outcome::ok(render_element(&a.checked_mul(&b)?, config.output), true))
}

fn render_verdict(v: &Verdict, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(v),
        OutputFormat::Csv => {
            let mut s = csv_row(&["pass", "residual", "w1", "w2", "w3", "w4"].map(String::from));
            let mut row = vec![v.pass.to_string(), v.residual.to_string()];
            row.extend(v.worst_point.0.iter().map(|c| c.to_string()));
            s.push_str(&csv_row(&row));
            s
        }
        OutputFormat::Pretty => {
            let [a, b, c, d] = v.worst_point.0;
            format!(
                "{}: residual {:e} at ({a}, {b}, {c}, {d})\n",
                if v.pass { "PASS" } else { "FAIL" },
                v.residual
            )
        }
    }
}

pub fn cmd_check(config: &RunConfig, function: &str, mode: CheckMode) -> Result<Outcome> {
    let (scale, f) = resolve_function(function, config)?;
    let tol = config.tolerance.unwrap_or(DEFAULT_TOL);
    let v = check(&f, scale, mode, &config.points(), tol)?;
    Ok(Outcome::ok(render_verdict(&v, config.output), v.pass))
}

pub fn cmd_expand(config: &RunConfig, function: &str) -> Result<Outcome> {
    let (scale, f) = resolve_function(function, config)?;
    let tol = config.tolerance.unwrap_or(DEFAULT_TOL);
    let e = expand(&f, scale, config.maxdeg, &config.points(), tol)?;
    let out = match config.output {
        OutputFormat::Json => to_json(&e),
        OutputFormat::Csv => {
            let mut s = csv_row(&["n1", "n2", "n3", "c1", "c2", "c3", "c4"].map(String::from));
            let mut row = vec!["-".to_string(), "-".into(), "-".into()];
            row.extend(e.series.constant.coords().iter().map(|v| v.to_string()));
            s.push_str(&csv_row(&row));
            for (n, c) in &e.series.coefficients {
                let mut row: Vec<String> = n.0.iter().map(|v| v.to_string()).collect();
                row.extend(c.coords().iter().map(|v| v.to_string()));
                s.push_str(&csv_row(&row));
            }
            s
        }
        OutputFormat::Pretty => {
            let mut s = format!("f(0) = {}\n", e.series.constant);
            for (n, c) in &e.series.coefficients {
                let _ = writeln!(s, "f_{n} = {c}");
            }
            let _ = writeln!(s, "residual = {:e}", e.residual);
            s
        }
    };
    Ok(Outcome::ok(out, e.residual <= EXPAND_RESIDUAL_TOL))
}

pub fn cmd_polar(config: &RunConfig, x: f64, u: f64) -> Result<Outcome> {
    let d = HyperbolicNumber::new(config.scale()?, x, u)?;
    let p = polar_decompose(&d)?;
    let out = match config.output {
        OutputFormat::Json => to_json(&p),
        OutputFormat::Csv => {
            let mut s = csv_row(&["r", "theta", "sign", "residual"].map(String::from));
            s.push_str(&csv_row(&[p.r.to_string(), p.theta.to_string(), p.sign.to_string(), p.residual.to_string()]));
            s
        }
        OutputFormat::Pretty => format!(
            "{} = {} · {} · e^(j_{} · {})\nresidual = {:e}\neuclidean arg = {}\n",
            d.embed(),
            p.sign,
            p.r,
            d.scale.t(),
            p.theta,
            p.residual,
            d.euclidean_arg()
        ),
    };
    Ok(Outcome::ok(out, true))
}

pub fn cmd_oracle(config: &RunConfig, function: &str) -> Result<Outcome> {
    let (scale, f) = resolve_function(function, config)?;
    let tol = config.tolerance.unwrap_or(ORACLE_TOL);
    let v = sweep(&config.points(), tol, |p| {
        let mut worst: f64 = 0.0;
        for l in 1..=4 {
            let jet = partial(&f, scale, l, p)?;
            let fd = finite_difference(&f, scale, l, p, ORACLE_STEP)?;
            worst = worst.max(jet.max_abs_diff(&fd));
        }
        Ok(worst)
    })?;
    Ok(Outcome::ok(render_verdict(&v, config.output), v.pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("shx").chain(args.iter().copied()))
    }

    #[test]
    fn table_zero_scale() {
        let o = go(&["table", "--t", "0"]);
        assert_eq!(o.code, 0);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["rendered"][2][3], "0");
        assert_eq!(v["rendered"][3][2], "0");
        assert_eq!(v["symbolic"][2][3], "-ti");
    }

    #[test]
    fn eval_builtin_and_mul() {
        let o = go(&["eval", "--t", "1", "--fn", "eta3", "--point", "1,0,2,0"]);
        assert_eq!(o.stdout, "{\"t\":1.0,\"x\":[2.0,0.0,1.0,0.0]}\n");
        let o = go(&["eval", "--t", "-1", "--mul", "0,1,0,0", "0,0,1,0"]);
        assert_eq!(o.stdout, "{\"t\":-1.0,\"x\":[0.0,0.0,0.0,1.0]}\n");
    }

    #[test]
    fn check_exit_codes() {
        assert_eq!(go(&["check", "--t", "1", "--fn", "eta2"]).code, 0);
        let o = go(&["check", "--t", "1", "--fn", "zeta3", "--mode", "left"]);
        assert_eq!(o.code, 1);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["residual"], 2.0);
    }

    #[test]
    fn usage_and_scale_errors() {
        assert_eq!(go(&["check", "--t", "1", "--fn", "nonsense{"]).code, 2);
        assert_eq!(go(&["frobnicate"]).code, 2);
        let spec = r#"{"t":2,"terms":[{"exp":[0,0,0,0],"coef":[1,0,0,0]}]}"#;
        assert_eq!(go(&["eval", "--t", "1", "--fn", spec, "--point", "0,0,0,0"]).code, 3);
        assert_eq!(go(&["eval", "--fn", spec, "--point", "0,0,0,0"]).code, 0);
        assert_eq!(go(&["check", "--t", "1", "--fn", "eta2", "--tol", "0"]).code, 2);
    }

    #[test]
    fn polar_null_cone_fails() {
        let o = go(&["polar", "--t", "1", "--x", "1", "--u", "1"]);
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("NullCone"));
        assert_eq!(go(&["polar", "--t", "-1", "--x", "0", "--u", "1"]).code, 0);
    }

    #[test]
    fn expand_rejects_zeta3() {
        let o = go(&["expand", "--t", "1", "--fn", "zeta3", "--samples", "10"]);
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("NotLeftRegular"));
    }
}
