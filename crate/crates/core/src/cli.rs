//! Command-line front end: parameter ingestion, dispatch and
//! machine-readable reports.
//!
//! Exit codes: 0 success, 1 validation error (malformed flags or
//! parameters), 2 check failure (positivity violation, residual above
//! tolerance, no admissible representation).

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::fock::{build_fock, casimir_check, verify_bracket_identity, verify_relations, ResidualReport};
use crate::params::{from_preset, DeformationParams, DeformationPreset, RegimeInfo};
use crate::positivity::{check_positivity, PositivityReport, Verdict};
use crate::representations::{
    build_rep_matrices, classify_representation, lambda_sequence, RepClass, RepParams,
    RepresentationDescriptor, Support,
};
use crate::spectrum::{energy, energy_table, reparametrize, EnergyTable, SpectrumConfig};
use crate::structure::f_closed;
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "defosc", version, about = "deformed oscillator algebra toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    Undeformed,
    Burban,
    ChakrabartyJagannathan,
    Quesne,
}

/// Deformation parameters from flags, a preset, or a JSON object.
#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 0.0)]
    pub nu: f64,
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
    /// Use a known deformation instead of raw parameters.
    #[arg(long, value_enum)]
    pub preset: Option<PresetName>,
    /// First base parameter of the preset.
    #[arg(long)]
    pub p0: Option<f64>,
    /// Second base parameter of the preset.
    #[arg(long)]
    pub q0: Option<f64>,
    /// JSON object {"p":..,"q":..,"alpha":..,"beta":..,"nu":..,"gamma":..}.
    #[arg(long)]
    pub params_json: Option<String>,
}

impl ParamArgs {
    pub fn resolve(&self) -> Result<DeformationParams> {
        if let Some(json) = &self.params_json {
            let params: DeformationParams = serde_json::from_str(json)
                .map_err(|e| Error::InvalidParameter { name: "params-json", reason: e.to_string() })?;
            params.validate()?;
            return Ok(params);
        }
        if let Some(preset) = self.preset {
            let preset = match preset {
                PresetName::Undeformed => DeformationPreset::Undeformed,
                PresetName::Burban => DeformationPreset::Burban {
                    q0: self.q0.ok_or(Error::MissingParameter("q0 (required by --preset burban)"))?,
                    nu: self.nu,
                    alpha: self.alpha,
                    beta: self.beta,
                    gamma: self.gamma,
                },
                PresetName::ChakrabartyJagannathan => DeformationPreset::ChakrabartyJagannathan {
                    p0: self.p0.ok_or(Error::MissingParameter("p0"))?,
                    q0: self.q0.ok_or(Error::MissingParameter("q0"))?,
                },
                PresetName::Quesne => DeformationPreset::Quesne {
                    p0: self.p0.ok_or(Error::MissingParameter("p0"))?,
                    q0: self.q0.ok_or(Error::MissingParameter("q0"))?,
                },
            };
            return from_preset(&preset);
        }
        DeformationParams::new(self.p, self.q, self.alpha, self.beta, self.nu, self.gamma)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the structure function f(n).
    #[command(allow_negative_numbers = true)]
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Admissible γ-interval and positivity scan.
    #[command(allow_negative_numbers = true)]
    Positivity {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 40)]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Classify the irreducible representation seeded by (ν₀, c₀, λ₀).
    #[command(allow_negative_numbers = true)]
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0.0)]
        nu0: f64,
        #[arg(long, default_value_t = 1.0)]
        c0: f64,
        #[arg(long)]
        lambda0: Option<f64>,
        /// λ-table window as LO..HI (defaults per class).
        #[arg(long)]
        window: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Energy spectrum of the deformed harmonic oscillator.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        n_max: i64,
        #[arg(long, default_value_t = 1.0)]
        hbar_omega: f64,
        /// Include the (τ,ρ,k,μ) block in the report.
        #[arg(long)]
        parametrized: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Build the truncated Fock realization and verify all relations.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 16)]
        dim: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Also check the degree-n commutator identity.
        #[arg(long)]
        bracket_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Self-check the known-deformation and harmonic limits.
    #[command(allow_negative_numbers = true)]
    Limits {
        #[arg(long, default_value_t = 30)]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct EvalRow {
    n: i64,
    f: f64,
    branch: crate::params::Regime,
}

#[derive(Debug, Serialize)]
struct EvalReport {
    params: DeformationParams,
    regime: RegimeInfo,
    rows: Vec<EvalRow>,
}

#[derive(Debug, Serialize)]
struct PositivityOutput {
    params: DeformationParams,
    regime: RegimeInfo,
    report: PositivityReport,
}

#[derive(Debug, Serialize)]
struct ClassifyReport {
    params: DeformationParams,
    regime: RegimeInfo,
    descriptor: RepresentationDescriptor,
    lambda_table: Vec<(i64, f64)>,
    residuals: Option<ResidualReport>,
}

#[derive(Debug, Serialize)]
struct SpectrumReport {
    params: DeformationParams,
    regime: RegimeInfo,
    hbar_omega: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum_params: Option<crate::spectrum::SpectrumParams>,
    table: EnergyTable,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    params: DeformationParams,
    regime: RegimeInfo,
    dim: usize,
    relations: ResidualReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket_identity: Option<ResidualReport>,
    casimirs: ResidualReport,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct LimitCheck {
    name: String,
    max_relative_deviation: f64,
    tol: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct LimitsReport {
    checks: Vec<LimitCheck>,
    pass: bool,
}

/// Exit status for an error: 1 for malformed input, 2 for a failed check.
fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidParameter { .. }
        | Error::Domain(_)
        | Error::MissingParameter(_)
        | Error::SingularK => 1,
        Error::Overflow { .. } | Error::Positivity { .. } | Error::NoRepresentation(_) => 2,
    }
}

fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization");
    s.push('\n');
    s
}

fn run_eval(params: &DeformationParams, n_max: i64, format: OutputFormat) -> Result<(i32, String)> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let sv = f_closed(params, n)?;
        rows.push(EvalRow { n, f: sv.value, branch: sv.branch });
    }
    let out = match format {
        OutputFormat::Csv => {
            let mut s = String::from("n,f,branch\n");
            for row in &rows {
                let branch = match row.branch {
                    crate::params::Regime::Generic => "generic",
                    crate::params::Regime::Degenerate => "degenerate",
                };
                writeln!(s, "{},{},{}", row.n, row.f, branch).unwrap();
            }
            s
        }
        OutputFormat::Json => to_json(&EvalReport { params: *params, regime: params.regime(), rows }),
        OutputFormat::Text => {
            let mut s = format!("params: {params:?}\nregime: {:?}\n", params.regime());
            for row in &rows {
                writeln!(s, "f({}) = {}", row.n, row.f).unwrap();
            }
            s
        }
    };
    Ok((0, out))
}

fn run_positivity(params: &DeformationParams, n_max: i64, format: OutputFormat) -> Result<(i32, String)> {
    let report = check_positivity(params, n_max)?;
    let code = match report.verdict {
        Verdict::PositiveOnScan => 0,
        Verdict::ViolationAt(_) => 2,
    };
    let output = PositivityOutput { params: *params, regime: params.regime(), report };
    let out = match format {
        OutputFormat::Json | OutputFormat::Csv => to_json(&output),
        OutputFormat::Text => format!("{output:#?}\n"),
    };
    Ok((code, out))
}

fn default_window(support: Support) -> (i64, i64) {
    match support {
        Support::NonNegative => (0, 15),
        Support::NonPositive => (-15, 0),
        Support::PairZeroMinusOne => (-1, 0),
        Support::PairZeroOne => (0, 1),
        Support::Singleton => (0, 0),
        Support::AllIntegers => (-8, 8),
    }
}

fn parse_window(spec: &str) -> Result<(i64, i64)> {
    let parts: Vec<&str> = spec.split("..").collect();
    if parts.len() != 2 {
        return Err(Error::Domain(format!("window must be LO..HI, got {spec}")));
    }
    let lo = parts[0]
        .parse()
        .map_err(|_| Error::InvalidParameter { name: "window", reason: format!("bad LO in {spec}") })?;
    let hi = parts[1]
        .parse()
        .map_err(|_| Error::InvalidParameter { name: "window", reason: format!("bad HI in {spec}") })?;
    Ok((lo, hi))
}

fn run_classify(
    params: &DeformationParams,
    rep: &RepParams,
    window: Option<&str>,
    format: OutputFormat,
) -> Result<(i32, String)> {
    let descriptor = classify_representation(params, rep)?;
    let (lo, hi) = match window {
        Some(w) => parse_window(w)?,
        None => default_window(descriptor.support),
    };
    let lambda_table = lambda_sequence(&descriptor, lo, hi)?;
    // residuals on the interior columns; edges with nonzero λ are cut off
    let residuals = if descriptor.class == RepClass::OneDimensional && params.gamma == 0.0 {
        None
    } else {
        let ops = build_rep_matrices(&descriptor, lo, hi)?;
        if ops.dim >= 3 {
            let lo_col = if lambda_table[0].1 == 0.0 { 0 } else { 1 };
            Some(crate::fock::verify_relations_on(&ops, params, 1e-10, lo_col, ops.dim - 1))
        } else {
            None
        }
    };
    let pass = residuals.as_ref().map(|r| r.pass).unwrap_or(true);
    let report = ClassifyReport {
        params: *params,
        regime: params.regime(),
        descriptor,
        lambda_table,
        residuals,
    };
    let out = match format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => {
            let mut s = String::from("n,lambda\n");
            for (n, l) in &report.lambda_table {
                writeln!(s, "{n},{l}").unwrap();
            }
            s
        }
        OutputFormat::Text => format!("{report:#?}\n"),
    };
    Ok((if pass { 0 } else { 2 }, out))
}

fn run_spectrum(
    params: &DeformationParams,
    n_max: i64,
    hbar_omega: f64,
    parametrized: bool,
    format: OutputFormat,
) -> Result<(i32, String)> {
    let cfg = SpectrumConfig::new(*params, hbar_omega)?;
    let table = energy_table(&cfg, n_max)?;
    let out = match format {
        OutputFormat::Csv => {
            let mut s = String::from("n,e_n,e_n_parametrized,spacing\n");
            for row in &table.entries {
                let next = energy(&cfg, row.n + 1)?;
                writeln!(s, "{},{},{},{}", row.n, row.e, row.e_parametrized, next - row.e).unwrap();
            }
            s
        }
        OutputFormat::Json => to_json(&SpectrumReport {
            params: *params,
            regime: params.regime(),
            hbar_omega,
            spectrum_params: parametrized.then(|| reparametrize(params)),
            table,
        }),
        OutputFormat::Text => {
            let mut s = format!("params: {params:?}\n");
            if parametrized {
                writeln!(s, "spectrum params: {:?}", reparametrize(params)).unwrap();
            }
            for row in &table.entries {
                writeln!(s, "e_{} = {}", row.n, row.e).unwrap();
            }
            s
        }
    };
    Ok((0, out))
}

fn run_verify(
    params: &DeformationParams,
    dim: usize,
    tol: f64,
    bracket_n: Option<usize>,
    format: OutputFormat,
) -> Result<(i32, String)> {
    let ops = build_fock(params, dim)?;
    let relations = verify_relations(&ops, params, tol);
    let bracket_identity = match bracket_n {
        Some(n) => Some(verify_bracket_identity(&ops, params, n, tol)?),
        None => None,
    };
    let casimirs = casimir_check(&ops, tol);
    let pass = relations.pass
        && casimirs.pass
        && bracket_identity.as_ref().map(|r| r.pass).unwrap_or(true);
    let report = VerifyReport {
        params: *params,
        regime: params.regime(),
        dim,
        relations,
        bracket_identity,
        casimirs,
        pass,
    };
    let out = match format {
        OutputFormat::Json | OutputFormat::Csv => to_json(&report),
        OutputFormat::Text => format!("{report:#?}\n"),
    };
    Ok((if pass { 0 } else { 2 }, out))
}

fn run_limits(n_max: i64, format: OutputFormat) -> Result<(i32, String)> {
    let tol = 1e-10;
    let mut checks = Vec::new();
    let mut push = |name: String, dev: f64| {
        checks.push(LimitCheck { name, max_relative_deviation: dev, tol, pass: dev <= tol });
    };

    for (p0, q0) in [(2.0, 3.0), (1.5, 0.8)] {
        let params = from_preset(&DeformationPreset::ChakrabartyJagannathan { p0, q0 })?;
        let mut dev = 0.0_f64;
        for n in 0..=n_max {
            let textbook = (p0.powi(-(n as i32)) - q0.powi(n as i32)) / (p0.recip() - q0);
            let got = f_closed(&params, n)?.value;
            dev = dev.max((got - textbook).abs() / textbook.abs().max(1.0));
        }
        push(format!("chakrabarty_jagannathan_p0_{p0}_q0_{q0}"), dev);
    }
    for (p0, q0) in [(2.0, 3.0), (1.5, 0.8)] {
        let params = from_preset(&DeformationPreset::Quesne { p0, q0 })?;
        let mut dev = 0.0_f64;
        for n in 0..=n_max {
            let textbook = (p0.powi(n as i32) - q0.powi(-(n as i32))) / (q0 - p0.recip());
            let got = f_closed(&params, n)?.value;
            dev = dev.max((got - textbook).abs() / textbook.abs().max(1.0));
        }
        push(format!("quesne_p0_{p0}_q0_{q0}"), dev);
    }
    {
        let params = from_preset(&DeformationPreset::Burban {
            q0: 1.7,
            nu: 0.6,
            alpha: 0.6,
            beta: 0.2,
            gamma: 0.1,
        })?;
        let mut dev = 0.0_f64;
        for n in 0..=n_max {
            let sv = f_closed(&params, n)?;
            if sv.branch != crate::params::Regime::Degenerate {
                dev = f64::INFINITY;
                break;
            }
            let odd = if n % 2 == 0 { 0.0 } else { 1.0 };
            let want = (n as f64 + 2.0 * params.gamma * odd)
                * (((n - 1) as f64 * params.alpha + params.beta) * params.q.ln()).exp();
            dev = dev.max((sv.value - want).abs() / want.abs().max(1.0));
        }
        push("burban_degenerate_branch".to_string(), dev);
    }
    {
        let params = from_preset(&DeformationPreset::Undeformed)?;
        let cfg = SpectrumConfig::new(params, 1.0)?;
        let mut dev = 0.0_f64;
        for n in 0..=20 {
            let e = energy(&cfg, n)?;
            dev = dev.max((e - (n as f64 + 0.5)).abs());
        }
        push("harmonic_oscillator_limit".to_string(), dev);
    }

    let pass = checks.iter().all(|c| c.pass);
    let report = LimitsReport { checks, pass };
    let out = match format {
        OutputFormat::Json | OutputFormat::Csv => to_json(&report),
        OutputFormat::Text => format!("{report:#?}\n"),
    };
    Ok((if pass { 0 } else { 2 }, out))
}

/// Dispatches a parsed command; returns (exit code, report text).
pub fn run(cli: &Cli) -> Result<(i32, String, Option<std::path::PathBuf>)> {
    let (code, out, path) = match &cli.command {
        Command::Eval { params, n_max, format, out } => {
            let p = params.resolve()?;
            let (code, text) = run_eval(&p, *n_max, *format)?;
            (code, text, out.clone())
        }
        Command::Positivity { params, n_max, format, out } => {
            let p = params.resolve()?;
            let (code, text) = run_positivity(&p, *n_max, *format)?;
            (code, text, out.clone())
        }
        Command::Classify { params, nu0, c0, lambda0, window, format, out } => {
            let p = params.resolve()?;
            let rep = RepParams { nu0: *nu0, c0: *c0, lambda0: *lambda0 };
            let (code, text) = run_classify(&p, &rep, window.as_deref(), *format)?;
            (code, text, out.clone())
        }
        Command::Spectrum { params, n_max, hbar_omega, parametrized, format, out } => {
            let p = params.resolve()?;
            let (code, text) = run_spectrum(&p, *n_max, *hbar_omega, *parametrized, *format)?;
            (code, text, out.clone())
        }
        Command::Verify { params, dim, tol, bracket_n, format, out } => {
            let p = params.resolve()?;
            let (code, text) = run_verify(&p, *dim, *tol, *bracket_n, *format)?;
            (code, text, out.clone())
        }
        Command::Limits { n_max, format, out } => {
            let (code, text) = run_limits(*n_max, *format)?;
            (code, text, out.clone())
        }
    };
    Ok((code, out, path))
}

/// Full entry point: parse, dispatch, emit, map errors to exit codes.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    match run(&cli) {
        Ok((code, text, out_path)) => {
            match out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("failed to write {}: {e}", path.display());
                        return 1;
                    }
                }
                None => print!("{text}"),
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
