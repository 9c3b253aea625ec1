//! Command-line front end. Every command produces a [`Report`] that renders
//! as aligned text, JSON or CSV; numbers that are results of the computation
//! are always exact strings.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::{json, Value};

use crate::cohomology::WeightSpec;
use crate::error::{Error, Result};
use crate::exact::rational_string;
use crate::hypergeom::{i_series, i_series_equivariant, verify_ode};
use crate::instanton::instanton_numbers;
use crate::mirror::{apply_mirror, build_mirror_map, yukawa};
use crate::recursion::{
    anchors_of, check_theorem_f, extract_recursion, minimal_z_order, reconstruct, solve_unique, validate_weights,
    verify_polynomiality,
};
use crate::schubert::lines_on_hypersurface;
use crate::sigma_model::verify_theorem_a;

#[derive(Parser, Debug, Clone)]
#[command(name = "quintic", version, about = "Exact mirror-theorem computations for the quintic threefold")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit the result rows as CSV.
    #[arg(long, global = true)]
    pub csv: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Instanton numbers n_d through the multiple-cover formula.
    Instantons {
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
    },
    /// Coefficients of f₀, g = f₁/f₀ and the inverse shift ĝ.
    MirrorMap {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// The Yukawa coupling as a series in the mirror coordinate Q.
    Yukawa {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Rebuild the mirror-transformed equivariant series from its recursion
    /// coefficients, polynomiality and two anchors per degree.
    Reconstruct(EquivariantArgs),
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verify {
    /// The Picard–Fuchs equation for the I-series.
    Ode {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Residue side against pairing side of the two-point series.
    SigmaModel {
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        z_order: usize,
    },
    /// Polynomiality of the equivariant two-point series.
    Polynomiality(EquivariantArgs),
    /// Recursion extraction, reconstruction and mirror covariance.
    Recursion(EquivariantArgs),
}

#[derive(Subcommand, Debug, Clone)]
pub enum Oracle {
    /// Lines on a quintic threefold by Schubert calculus.
    Lines,
}

#[derive(Args, Debug, Clone)]
pub struct EquivariantArgs {
    /// Five distinct rational weights summing to zero.
    #[arg(long, value_parser = parse_weights, default_value = "6,7,13,-10,-16", allow_hyphen_values = true)]
    pub lambdas: WeightSpec,
    #[arg(long, default_value_t = 3)]
    pub q_order: usize,
    /// Defaults to q-order for polynomiality and to the smallest sufficient
    /// order for reconstruction.
    #[arg(long)]
    pub z_order: Option<usize>,
}

fn parse_weights(s: &str) -> std::result::Result<WeightSpec, String> {
    WeightSpec::parse(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub output: OutputFormat,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let output = if cli.json {
            OutputFormat::Json
        } else if cli.csv {
            OutputFormat::Csv
        } else {
            OutputFormat::Pretty
        };
        RunConfig { command: cli.command, output }
    }
}

/// Key-value pairs that serialize as a JSON object in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Row(pub Vec<(String, Value)>);

impl Row {
    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

fn row() -> Row {
    Row::default()
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Report {
    pub command: String,
    pub params: Row,
    pub results: Vec<Row>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            OutputFormat::Csv => {
                let mut out = String::new();
                if let Some(first) = self.results.first() {
                    let header: Vec<String> = first.0.iter().map(|(k, _)| csv_field(k)).collect();
                    out.push_str(&header.join(","));
                    out.push('\n');
                }
                for r in &self.results {
                    let fields: Vec<String> = r.0.iter().map(|(_, v)| csv_field(&plain(v))).collect();
                    out.push_str(&fields.join(","));
                    out.push('\n');
                }
                out
            }
            OutputFormat::Pretty => {
                let mut out = String::new();
                let params: Vec<String> = self.params.0.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
                let _ = writeln!(out, "{} ({})", self.command, params.join(", "));
                for r in &self.results {
                    let fields: Vec<String> = r.0.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
                    let _ = writeln!(out, "  {}", fields.join("  "));
                }
                let _ = writeln!(out, "{} in {} ms", if self.pass { "PASS" } else { "FAIL" }, self.elapsed_ms);
                out
            }
        }
    }
}

/// Outcome of [`run`]: the text to print and the process exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Option<Report>,
    pub output: String,
    pub exit_code: i32,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Instantons { .. } => "instantons",
        Command::MirrorMap { .. } => "mirror-map",
        Command::Yukawa { .. } => "yukawa",
        Command::Verify(Verify::Ode { .. }) => "verify-ode",
        Command::Verify(Verify::SigmaModel { .. }) => "verify-sigma-model",
        Command::Verify(Verify::Polynomiality(_)) => "verify-polynomiality",
        Command::Verify(Verify::Recursion(_)) => "verify-recursion",
        Command::Reconstruct(_) => "reconstruct",
        Command::Oracle(Oracle::Lines) => "oracle-lines",
    }
}

fn weights_value(w: &WeightSpec) -> Value {
    Value::Array(w.to_strings().into_iter().map(Value::String).collect())
}

type Computed = (Row, Vec<Row>, bool);

fn instantons(max_degree: usize) -> Result<Computed> {
    let table = instanton_numbers(max_degree)?;
    let mut pass = true;
    if max_degree >= 1 {
        // n₁ must agree with the classical count of lines.
        pass = table.rows[0].n == lines_on_hypersurface(5);
    }
    let rows = table
        .rows
        .iter()
        .map(|r| row().with("d", r.d).with("N_d", rational_string(&r.gw)).with("n_d", r.n.to_string()))
        .collect();
    Ok((row().with("max_degree", max_degree), rows, pass))
}

fn mirror_map(order: usize) -> Result<Computed> {
    let m = build_mirror_map(order);
    let shift = m.inverse_shift();
    let rows = (0..=order)
        .map(|d| {
            row()
                .with("d", d)
                .with("f0_d", rational_string(&m.f0.q_coeff(d)))
                .with("g_d", rational_string(&m.g.q_coeff(d)))
                .with("ghat_d", rational_string(&shift.q_coeff(d)))
        })
        .collect();
    Ok((row().with("order", order), rows, true))
}

fn yukawa_series(order: usize) -> Result<Computed> {
    let j = apply_mirror(&i_series(order), &build_mirror_map(order))?;
    let k = yukawa(&j, order)?;
    let rows = (0..=order).map(|d| row().with("d", d).with("K_d", rational_string(&k.q_coeff(d)))).collect();
    Ok((row().with("order", order).with("coordinate", "Q"), rows, true))
}

fn ode(order: usize) -> Result<Computed> {
    let report = verify_ode(&i_series(order), order);
    let rows = report.checks.iter().map(|c| row().with("d", c.degree).with("vanishes", c.vanishes)).collect();
    Ok((row().with("order", order), rows, report.pass))
}

fn sigma_model(max_degree: usize, z_order: usize) -> Result<Computed> {
    let report = verify_theorem_a(max_degree, z_order)?;
    let rows = report
        .coefficients
        .iter()
        .map(|c| {
            row()
                .with("q", c.q)
                .with("z", c.z)
                .with("agree", c.agree)
                .with("residue_side", c.residue_side.clone())
                .with("pairing_side", c.pairing_side.clone())
        })
        .collect();
    Ok((row().with("max_degree", max_degree).with("z_order", z_order), rows, report.pass))
}

fn equivariant_params(a: &EquivariantArgs, z_order: usize) -> Row {
    row().with("lambdas", weights_value(&a.lambdas)).with("q_order", a.q_order).with("z_order", z_order)
}

fn polynomiality(a: &EquivariantArgs) -> Result<Computed> {
    let z_order = a.z_order.unwrap_or(a.q_order);
    let z = i_series_equivariant(a.q_order, &a.lambdas);
    let report = verify_polynomiality(&z, &a.lambdas, a.q_order, z_order);
    let rows = report
        .cells
        .iter()
        .map(|c| {
            row()
                .with("q", c.q)
                .with("z", c.z)
                .with("vanishes", c.vanishes)
                .with("negative_part", c.negative_part.clone())
        })
        .collect();
    Ok((equivariant_params(a, z_order), rows, report.pass))
}

fn check_row(check: &str, key: String, value: String, pass: bool) -> Row {
    row().with("check", check).with("key", key).with("value", value).with("pass", pass)
}

fn recursion(a: &EquivariantArgs) -> Result<Computed> {
    let w = &a.lambdas;
    let d = a.q_order;
    let z_order = a.z_order.unwrap_or(d);
    let cert = validate_weights(w, d)?;
    let z = i_series_equivariant(d, w);
    let data = extract_recursion(&z, &cert, d)?;
    let mut rows = Vec::new();
    for ((al, be, m), c) in &data.c {
        rows.push(check_row("C", format!("{},{},{}", al + 1, be + 1, m), rational_string(c), true));
    }
    for ((al, deg), r) in &data.r {
        rows.push(check_row("R", format!("{},{}", al + 1, deg), r.to_string(), r.degree().unwrap_or(0) <= *deg));
    }
    let round_trip = reconstruct(&data, d)? == z;
    rows.push(check_row("reconstruct", format!("q^{d}"), round_trip.to_string(), round_trip));
    let covariance = match check_theorem_f(&z, &build_mirror_map(d), &cert, d, z_order) {
        Ok((_, report)) => check_row(
            "mirror-covariance",
            format!("q^{d} z^{z_order}"),
            format!("{} coefficients unchanged", report.coefficients_compared),
            true,
        ),
        Err(Error::TheoremViolation(msg)) => check_row("mirror-covariance", format!("q^{d} z^{z_order}"), msg, false),
        Err(e) => return Err(e),
    };
    rows.push(covariance);
    let pass = rows.iter().all(|r| r.get("pass") == Some(&Value::Bool(true)));
    Ok((equivariant_params(a, z_order), rows, pass))
}

fn reconstruct_cmd(a: &EquivariantArgs) -> Result<Computed> {
    let w = &a.lambdas;
    let d = a.q_order;
    let z_order = a.z_order.unwrap_or_else(|| minimal_z_order(d));
    let cert = validate_weights(w, d)?;
    let z = i_series_equivariant(d, w);
    let data = extract_recursion(&z, &cert, d)?;
    let (target, _) = check_theorem_f(&z, &build_mirror_map(d), &cert, d, d)?;
    let solution = solve_unique(&data.c, &anchors_of(&target, d), w, d, z_order)?;
    let mut pass = true;
    let rows = solution
        .degrees
        .iter()
        .map(|s| {
            let matches = (0..5).all(|al| solution.series.coeff(al, s.degree) == target.coeff(al, s.degree));
            pass &= matches && s.nullity_per_alpha == [2; 5] && s.top_two_only;
            let per_alpha: Vec<String> = s.nullity_per_alpha.iter().map(|n| n.to_string()).collect();
            row()
                .with("d", s.degree)
                .with("unknowns", s.unknowns)
                .with("equations", s.equations)
                .with("nullity", s.nullity)
                .with("nullity_per_alpha", per_alpha.join(" "))
                .with("top_two_only", s.top_two_only)
                .with("matches", matches)
        })
        .collect();
    Ok((equivariant_params(a, z_order), rows, pass))
}

fn oracle_lines() -> Result<Computed> {
    let rows = vec![
        row()
            .with("variety", "quintic threefold")
            .with("grassmannian", "G(2,5)")
            .with("lines", lines_on_hypersurface(5).to_string()),
        row()
            .with("variety", "cubic surface")
            .with("grassmannian", "G(2,4)")
            .with("lines", lines_on_hypersurface(4).to_string()),
    ];
    Ok((row(), rows, true))
}

fn compute(c: &Command) -> Result<Computed> {
    match c {
        Command::Instantons { max_degree } => instantons(*max_degree),
        Command::MirrorMap { order } => mirror_map(*order),
        Command::Yukawa { order } => yukawa_series(*order),
        Command::Verify(Verify::Ode { order }) => ode(*order),
        Command::Verify(Verify::SigmaModel { max_degree, z_order }) => sigma_model(*max_degree, *z_order),
        Command::Verify(Verify::Polynomiality(a)) => polynomiality(a),
        Command::Verify(Verify::Recursion(a)) => recursion(a),
        Command::Reconstruct(a) => reconstruct_cmd(a),
        Command::Oracle(Oracle::Lines) => oracle_lines(),
    }
}

/// Runs one command. Failed checks and computation errors give exit code 1.
pub fn run(config: &RunConfig) -> Outcome {
    let start = Instant::now();
    let name = command_name(&config.command);
    match compute(&config.command) {
        Ok((params, results, pass)) => {
            let report = Report {
                command: name.to_string(),
                params,
                results,
                pass,
                elapsed_ms: start.elapsed().as_millis() as u64,
            };
            Outcome { output: report.render(config.output), exit_code: if pass { 0 } else { 1 }, report: Some(report) }
        }
        Err(e) => {
            let output = match config.output {
                OutputFormat::Json => {
                    let body = json!({ "command": name, "error": e.to_string(), "pass": false });
                    serde_json::to_string_pretty(&body).expect("error serializes") + "\n"
                }
                _ => format!("{name}: error: {e}\n"),
            };
            Outcome { report: None, output, exit_code: 1 }
        }
    }
}

/// Parses `args` (without the program name) and runs them; parse errors give
/// exit code 2 and the usage text.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("quintic")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli.into()),
        Err(e) => Outcome { report: None, output: e.to_string(), exit_code: e.exit_code() },
    }
}

/// Caps the global thread pool from `QUINTIC_THREADS`.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var("QUINTIC_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("QUINTIC_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}
