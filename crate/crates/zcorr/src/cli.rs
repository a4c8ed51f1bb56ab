//! Command-line front end used by the thin `zcorr` binary
//!
//! Six subcommands: `construct`, `verify`, `classify`, `bell`, `random-test`,
//! `classical`. Payload flags accept inline JSON or `@path`. Exit codes: 0 on
//! success, 1 when a verification gate fails, 2 on usage or input errors.
//!
//! JSON output is byte-identical across runs for a fixed subcommand, flag set,
//! and seed; wall-clock timing only ever appears in table output.

use crate::bell::BellState;
use crate::classical::{ClassicalReport, JointDist2x2};
use crate::construction::{
    construct, verify_construction, CaseLabel, ConstructionOptions, FreeChoices, PreferOption,
};
use crate::observables::{assemble, covariance, CorrelationReport, ObservableParams};
use crate::sampling::{
    random_canonical_state, random_dependent_dist, random_independent_dist, random_signed_state,
    trial_rng, MIN_VALUE_SEPARATION,
};
use crate::state::{from_amplitudes, separability, Amplitudes, StateParams, SEPARABILITY_TOL};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Default gate on |covariance| for all verification paths. The ZCORR_TOL
/// environment variable overrides it; an explicit --tol overrides both.
pub const VERIFY_TOL_DEFAULT: f64 = 1e-10;

/// Determinant floor for the dependent draws of `random-test --mode classical`.
pub const CLASSICAL_DET_FLOOR: f64 = 1e-3;

const MAX_FAILURE_DETAILS: usize = 5;

#[derive(Parser)]
#[command(
    name = "zcorr",
    version,
    about = "Zero-covariance local observable pairs for two-qubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CampaignMode {
    Amplitudes,
    Signed,
    Mixed,
    Classical,
}

impl CampaignMode {
    fn as_str(&self) -> &'static str {
        match self {
            CampaignMode::Amplitudes => "amplitudes",
            CampaignMode::Signed => "signed",
            CampaignMode::Mixed => "mixed",
            CampaignMode::Classical => "classical",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a state and construct a verified zero-covariance pair
    Construct {
        /// State as inline JSON or @file, parameter or amplitude form
        #[arg(long)]
        state: String,
        /// Magnitude assigned to the free observable parameters
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Center of Q_A (coefficient of the identity)
        #[arg(long, default_value_t = 0.0)]
        q0: f64,
        /// Center of R_B
        #[arg(long, default_value_t = 0.0)]
        r0: f64,
        /// Solution family inside branch 3.1.2(i): auto, A or B
        #[arg(long, default_value = "auto")]
        prefer_option: String,
        #[arg(long, env = "ZCORR_TOL", default_value_t = VERIFY_TOL_DEFAULT)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a given observable pair against a state
    Verify {
        #[arg(long)]
        state: String,
        /// Q_A parameters as inline JSON or @file
        #[arg(long)]
        qa: String,
        /// R_B parameters as inline JSON or @file
        #[arg(long)]
        rb: String,
        #[arg(long, env = "ZCORR_TOL", default_value_t = VERIFY_TOL_DEFAULT)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Report the case-tree branch and separability of a state
    Classify {
        #[arg(long)]
        state: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Construct the explicit pair for a Bell state: phi+, phi-, psi+ or psi-
    Bell {
        /// Which Bell state
        #[arg(long)]
        state: String,
        /// Operator strength m
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long, default_value_t = 0.0)]
        q0: f64,
        #[arg(long, default_value_t = 0.0)]
        r0: f64,
        /// Use the canonical parametrization instead of signed amplitudes
        #[arg(long)]
        canonical: bool,
        #[arg(long, env = "ZCORR_TOL", default_value_t = VERIFY_TOL_DEFAULT)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Seeded campaign: construct and verify on random inputs
    RandomTest {
        /// Number of trials
        #[arg(long, default_value_t = 1000)]
        n: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = CampaignMode::Amplitudes)]
        mode: CampaignMode,
        #[arg(long, env = "ZCORR_TOL", default_value_t = VERIFY_TOL_DEFAULT)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Analyze a classical 2x2 joint distribution
    Classical {
        /// Distribution as inline JSON or @file: {"p":[p11,p12,p21,p22],"x":[x1,x2],"y":[y1,y2]}
        #[arg(long)]
        dist: String,
        #[arg(long, env = "ZCORR_TOL", default_value_t = VERIFY_TOL_DEFAULT)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn read_payload(arg: &str) -> Result<String, String> {
    match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
        }
        None => Ok(arg.to_string()),
    }
}

fn parse_state(arg: &str) -> Result<StateParams, String> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum StateInput {
        Params(StateParams),
        Amps(Amplitudes),
    }
    let text = read_payload(arg)?;
    let input: StateInput = serde_json::from_str(&text)
        .map_err(|e| format!("state must be parameter or amplitude JSON: {e}"))?;
    match input {
        StateInput::Params(p) => p.validate().map_err(|e| format!("invalid state: {e}")),
        StateInput::Amps(a) => from_amplitudes(&a).map_err(|e| format!("invalid state: {e}")),
    }
}

fn parse_observable(arg: &str, name: &str) -> Result<ObservableParams, String> {
    let text = read_payload(arg)?;
    serde_json::from_str(&text).map_err(|e| format!("{name} must be observable JSON: {e}"))
}

fn parse_prefer(arg: &str) -> Result<PreferOption, String> {
    match arg {
        "auto" => Ok(PreferOption::Auto),
        "A" | "a" => Ok(PreferOption::A),
        "B" | "b" => Ok(PreferOption::B),
        other => Err(format!("--prefer-option must be auto, A or B, got {other:?}")),
    }
}

fn check_tol(tol: f64) -> Result<(), String> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(format!("--tol must be a positive finite number, got {tol}"))
    }
}

/// Flatten a JSON value into dotted key paths and print one aligned row each.
fn print_table(value: &serde_json::Value) {
    fn walk(prefix: &str, v: &serde_json::Value, rows: &mut Vec<(String, String)>) {
        match v {
            serde_json::Value::Object(map) => {
                for (k, inner) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, inner, rows);
                }
            }
            serde_json::Value::Array(items) => {
                for (i, inner) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), inner, rows);
                }
            }
            serde_json::Value::String(s) => rows.push((prefix.to_string(), s.clone())),
            other => rows.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut rows = Vec::new();
    walk("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        println!("{k:<width$}  {v}");
    }
}

fn emit<T: Serialize>(output: &T, format: Format) -> Result<(), String> {
    let value = serde_json::to_value(output).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?
        ),
        Format::Table => print_table(&value),
    }
    Ok(())
}

#[derive(Serialize)]
struct ConstructOutput {
    case: CaseLabel,
    xi: f64,
    numerically_sensitive: bool,
    state: StateParams,
    qa: ObservableParams,
    rb: ObservableParams,
    free_choices: FreeChoices,
    correlation: CorrelationReport,
    tol: f64,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyOutput {
    correlation: CorrelationReport,
    tol: f64,
    passed: bool,
}

#[derive(Serialize)]
struct ClassifyOutput {
    case: CaseLabel,
    xi: f64,
    numerically_sensitive: bool,
    is_separable: bool,
    determinant_magnitude: f64,
    state: StateParams,
}

#[derive(Serialize)]
struct BellOutput {
    bell: String,
    representation: &'static str,
    case: CaseLabel,
    state: StateParams,
    qa: ObservableParams,
    rb: ObservableParams,
    correlation: CorrelationReport,
    tol: f64,
    passed: bool,
}

#[derive(Serialize)]
pub struct CampaignSummary {
    pub mode: String,
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
    pub failures: u64,
    pub sensitive: u64,
    pub max_abs_covariance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_dependence_gap: Option<f64>,
    pub per_case_counts: BTreeMap<String, u64>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
struct ClassicalOutput {
    #[serde(flatten)]
    report: ClassicalReport,
    dependence_gap: Option<f64>,
}

fn execute(command: Command) -> Result<i32, String> {
    match command {
        Command::Construct {
            state,
            scale,
            q0,
            r0,
            prefer_option,
            tol,
            format,
        } => {
            check_tol(tol)?;
            let params = parse_state(&state)?;
            let options = ConstructionOptions {
                scale,
                q0,
                r0,
                prefer_option: parse_prefer(&prefer_option)?,
                ..ConstructionOptions::default()
            };
            let result = construct(&params, &options).map_err(|e| e.to_string())?;
            let correlation = verify_construction(&params, &result).map_err(|e| e.to_string())?;
            let passed = correlation.covariance.abs() <= tol;
            emit(
                &ConstructOutput {
                    case: result.case,
                    xi: result.xi,
                    numerically_sensitive: result.numerically_sensitive,
                    state: params,
                    qa: result.qa_params,
                    rb: result.rb_params,
                    free_choices: result.free_choices,
                    correlation,
                    tol,
                    passed,
                },
                format,
            )?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Verify {
            state,
            qa,
            rb,
            tol,
            format,
        } => {
            check_tol(tol)?;
            let params = parse_state(&state)?;
            let qa = parse_observable(&qa, "--qa")?;
            let rb = parse_observable(&rb, "--rb")?;
            let correlation = covariance(
                &params.to_amplitudes(),
                &assemble(&qa).map_err(|e| format!("--qa: {e}"))?,
                &assemble(&rb).map_err(|e| format!("--rb: {e}"))?,
            )
            .map_err(|e| e.to_string())?;
            let passed = correlation.covariance.abs() <= tol;
            emit(
                &VerifyOutput {
                    correlation,
                    tol,
                    passed,
                },
                format,
            )?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Classify { state, format } => {
            let params = parse_state(&state)?;
            let result = construct(&params, &ConstructionOptions::default())
                .map_err(|e| e.to_string())?;
            let sep = separability(&params, SEPARABILITY_TOL);
            emit(
                &ClassifyOutput {
                    case: result.case,
                    xi: result.xi,
                    numerically_sensitive: result.numerically_sensitive,
                    is_separable: sep.is_separable,
                    determinant_magnitude: sep.determinant_magnitude,
                    state: params,
                },
                format,
            )?;
            Ok(0)
        }
        Command::Bell {
            state,
            scale,
            q0,
            r0,
            canonical,
            tol,
            format,
        } => {
            check_tol(tol)?;
            if !(scale.is_finite() && scale != 0.0) {
                return Err(format!("--scale must be finite and nonzero, got {scale}"));
            }
            let bell: BellState = state.parse()?;
            let params = if canonical {
                bell.params_canonical()
            } else {
                bell.params_signed()
            }
            .validate()
            .map_err(|e| e.to_string())?;
            let (qa, rb) = bell.operator_pair(scale, q0, r0);
            let correlation = covariance(
                &params.to_amplitudes(),
                &assemble(&qa).map_err(|e| e.to_string())?,
                &assemble(&rb).map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let case = construct(&params, &ConstructionOptions::default())
                .map_err(|e| e.to_string())?
                .case;
            let passed = correlation.covariance.abs() <= tol;
            emit(
                &BellOutput {
                    bell: bell.as_str().to_string(),
                    representation: if canonical { "canonical" } else { "signed" },
                    case,
                    state: params,
                    qa,
                    rb,
                    correlation,
                    tol,
                    passed,
                },
                format,
            )?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::RandomTest {
            n,
            seed,
            mode,
            tol,
            format,
        } => {
            check_tol(tol)?;
            let summary = run_campaign(mode, n, seed, tol);
            emit(&summary, format)?;
            if format == Format::Table {
                println!("elapsed_ms  {}", summary.elapsed_ms);
            }
            Ok(if summary.failures == 0 { 0 } else { 1 })
        }
        Command::Classical { dist, tol, format } => {
            check_tol(tol)?;
            let text = read_payload(&dist)?;
            let dist: JointDist2x2 = serde_json::from_str(&text)
                .map_err(|e| format!("--dist must be joint distribution JSON: {e}"))?;
            let report = dist.analyze(tol);
            emit(
                &ClassicalOutput {
                    report,
                    dependence_gap: dist.dependence_gap().ok(),
                },
                format,
            )?;
            Ok(0)
        }
    }
}

/// Seeded sweep. Quantum modes construct and verify a pair per trial; classical
/// mode checks that dependent draws keep a covariance floor and independent
/// draws stay at zero.
pub fn run_campaign(mode: CampaignMode, n: u64, seed: u64, tol: f64) -> CampaignSummary {
    let start = Instant::now();
    let mut failures = 0u64;
    let mut sensitive = 0u64;
    let mut max_abs_covariance = 0.0f64;
    let mut min_dependence_gap: Option<f64> = None;
    let mut per_case_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut detailed = 0usize;
    let detail = |line: String, detailed: &mut usize| {
        if *detailed < MAX_FAILURE_DETAILS {
            eprintln!("{line}");
            *detailed += 1;
        }
    };

    for trial in 0..n {
        let mut rng = trial_rng(seed, trial);
        if mode == CampaignMode::Classical {
            let dep = random_dependent_dist(&mut rng, CLASSICAL_DET_FLOOR);
            let floor =
                MIN_VALUE_SEPARATION * MIN_VALUE_SEPARATION * CLASSICAL_DET_FLOOR - 1e-12;
            match dep.dependence_gap() {
                Ok(gap) => {
                    min_dependence_gap =
                        Some(min_dependence_gap.map_or(gap, |m: f64| m.min(gap)));
                    if gap < floor {
                        failures += 1;
                        detail(
                            format!("trial {trial}: dependence gap {gap:.3e} below {floor:.3e}"),
                            &mut detailed,
                        );
                    }
                }
                Err(e) => {
                    failures += 1;
                    detail(format!("trial {trial}: {e}"), &mut detailed);
                }
            }
            let ind = random_independent_dist(&mut rng).analyze(tol);
            let c = ind.covariance.abs();
            max_abs_covariance = max_abs_covariance.max(c);
            if c > tol {
                failures += 1;
                detail(
                    format!("trial {trial}: independent covariance {c:.3e} above {tol:.3e}"),
                    &mut detailed,
                );
            }
            continue;
        }

        let params = match mode {
            CampaignMode::Amplitudes => random_canonical_state(&mut rng),
            CampaignMode::Signed => random_signed_state(&mut rng),
            CampaignMode::Mixed => {
                if trial % 2 == 0 {
                    random_canonical_state(&mut rng)
                } else {
                    random_signed_state(&mut rng)
                }
            }
            CampaignMode::Classical => unreachable!(),
        };
        match construct(&params, &ConstructionOptions::default()) {
            Ok(result) => {
                *per_case_counts.entry(result.case.to_string()).or_insert(0) += 1;
                if result.numerically_sensitive {
                    sensitive += 1;
                }
                match verify_construction(&params, &result) {
                    Ok(report) => {
                        let c = report.covariance.abs();
                        max_abs_covariance = max_abs_covariance.max(c);
                        if c > tol {
                            failures += 1;
                            detail(
                                format!(
                                    "trial {trial}: covariance {c:.3e} above {tol:.3e} in case {} for {params:?}",
                                    result.case
                                ),
                                &mut detailed,
                            );
                        }
                    }
                    Err(e) => {
                        failures += 1;
                        detail(format!("trial {trial}: {e}"), &mut detailed);
                    }
                }
            }
            Err(e) => {
                failures += 1;
                detail(format!("trial {trial}: {e} for {params:?}"), &mut detailed);
            }
        }
    }

    CampaignSummary {
        mode: mode.as_str().to_string(),
        trials: n,
        seed,
        tol,
        failures,
        sensitive,
        max_abs_covariance,
        min_dependence_gap,
        per_case_counts,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
