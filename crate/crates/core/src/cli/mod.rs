//! The `genus-calc` command line.
//!
//! Exit codes: 0 success, 1 a check reported failures (`oracle`, `verify`),
//! 2 validation failure, 3 hypothesis violation, 4 I/O or schema error.

pub mod sweep;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::gen;
use crate::genus::{EngineError, Extension, ExtensionDescriptor, ValidationReport, SCHEMA};
use crate::lattice::{analyse, cohomology, fixed_dims_chain, GLattice};
use crate::tower::{self, TowerError};
use crate::verify;

pub use sweep::{run_grid, to_csv, SweepGrid, SweepRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check a descriptor against every structural rule.
    Validate { input: PathBuf },
    /// Evaluate the λ parameter translations.
    Translate {
        input: PathBuf,
        /// Comma-separated place names of S.
        #[arg(long, value_delimiter = ',')]
        s: Vec<String>,
        /// Comma-separated place names of T.
        #[arg(long, value_delimiter = ',')]
        t: Vec<String>,
    },
    /// Transfer λ from K to L and evaluate the classical formulas.
    Transfer {
        input: PathBuf,
        /// Include the prime-step tower trace.
        #[arg(long)]
        trace: bool,
        /// Include the bare-χ_p transfer and per-place data.
        #[arg(long)]
        verbose: bool,
    },
    /// Herbrand characters and the four cohomology characters.
    Cohomology {
        input: PathBuf,
        /// Override δ (must be admissible).
        #[arg(long)]
        delta: Option<u8>,
    },
    /// Exact lattice cohomology: a single lattice file, or seeded random cases.
    Oracle {
        #[arg(long, default_value_t = 3)]
        ell: u64,
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        /// Analyse this lattice instead of random ones.
        #[arg(long)]
        lattice: Option<PathBuf>,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Run only these suite ids.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Evaluate the transfer over a parameter grid.
    Sweep { grid: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Translate { .. } => "translate",
            Command::Transfer { .. } => "transfer",
            Command::Cohomology { .. } => "cohomology",
            Command::Oracle { .. } => "oracle",
            Command::Verify { .. } => "verify",
            Command::Sweep { .. } => "sweep",
        }
    }

    fn input_path(&self) -> Option<&Path> {
        match self {
            Command::Validate { input }
            | Command::Translate { input, .. }
            | Command::Transfer { input, .. }
            | Command::Cohomology { input, .. } => Some(input),
            Command::Oracle { lattice, .. } => lattice.as_deref(),
            Command::Sweep { grid } => Some(grid),
            Command::Verify { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "genus-calc", version, about = "Lambda-invariant transfer and lattice cohomology")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Progress on standard error; repeat for more.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose_level: u8,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            output: None,
            format: None,
            seed: DEFAULT_SEED,
            verbose_level: 0,
        }
    }

    pub fn input_path(&self) -> Option<&Path> {
        self.command.input_path()
    }

    fn format(&self) -> Format {
        match (self.format, &self.command) {
            (Some(f), _) => f,
            (None, Command::Sweep { .. }) => Format::Csv,
            (None, _) => Format::Json,
        }
    }
}

/// Parses `args` (program name first) and runs. Usage errors exit 4.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_IO
            } else {
                EXIT_OK
            }
        }
    }
}

/// A finished command: rendered output and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

enum Failure {
    /// Printed on standard error.
    Message(i32, String),
    /// Rendered like a normal result.
    Report(i32, String),
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::MuNonZero | EngineError::NeedsDelta | EngineError::Regime(_) => EXIT_HYPOTHESIS,
            EngineError::UnknownPlace(_) | EngineError::Precondition(_) => EXIT_INVALID,
        };
        Failure::Message(code, e.to_string())
    }
}

impl From<TowerError> for Failure {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::Engine(e) => e.into(),
            other => Failure::Message(EXIT_INVALID, other.to_string()),
        }
    }
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Message(EXIT_IO, format!("{}: {e}", path.display()))
}

/// Runs a command and writes its output; returns the exit code.
pub fn run(config: &RunConfig) -> i32 {
    let Outcome { code, output } = match execute(config) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("genus-calc {}: {}", config.command.name(), f.message);
            return f.code;
        }
    };
    let written = match &config.output {
        Some(path) => fs::write(path, &output).map_err(|e| (path.clone(), e)),
        None => std::io::stdout()
            .lock()
            .write_all(output.as_bytes())
            .map_err(|e| (PathBuf::from("<stdout>"), e)),
    };
    match written {
        Ok(()) => code,
        Err((path, e)) => {
            eprintln!("genus-calc: {}: {e}", path.display());
            EXIT_IO
        }
    }
}

/// A run that produced no output, only a message for standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureView {
    pub code: i32,
    pub message: String,
}

/// Runs a command without touching the output destination. Validation
/// reports come back as an [`Outcome`] with exit code 2.
pub fn execute(config: &RunConfig) -> Result<Outcome, FailureView> {
    match execute_inner(config) {
        Ok(o) => Ok(o),
        Err(Failure::Report(code, output)) => Ok(Outcome { code, output }),
        Err(Failure::Message(code, message)) => Err(FailureView { code, message }),
    }
}

fn execute_inner(config: &RunConfig) -> Result<Outcome, Failure> {
    let format = config.format();
    if config.verbose_level > 0 {
        eprintln!("genus-calc {} (seed {})", config.command.name(), config.seed);
    }
    match &config.command {
        Command::Validate { input } => validate(input, format),
        Command::Translate { input, s, t } => {
            let ext = load(input, format)?;
            let p4 = ext.translate_p4();
            let t1 = ext.translate_t1(s, t)?;
            render(
                format,
                &json!({
                    "schema": SCHEMA,
                    "id": ext.id(),
                    "command": "translate",
                    "S": s,
                    "T": t,
                    "lambda_ell_decomposed": p4.lambda_ell_decomposed,
                    "lambda_ell_infinitesimal": p4.lambda_ell_infinitesimal,
                    "lambda_S_T": t1,
                    "warnings": p4.warnings,
                }),
            )
        }
        Command::Transfer { input, trace, verbose } => transfer(&load(input, format)?, format, *trace, *verbose),
        Command::Cohomology { input, delta } => {
            let mut ext = load(input, format)?;
            if let Some(d) = delta {
                ext = ext.with_delta(*d).map_err(|r| report_failure(&r, format))?;
            }
            let report = ext.cohomology_report()?;
            render(
                format,
                &json!({
                    "schema": SCHEMA,
                    "id": ext.id(),
                    "command": "cohomology",
                    "herbrand_cl": ext.herbrand_cl()?,
                    "herbrand_c": ext.herbrand_c()?,
                    "report": report,
                }),
            )
        }
        Command::Oracle {
            ell,
            max_rank,
            cases,
            lattice,
        } => match lattice {
            Some(path) => oracle_file(path, format),
            None => oracle_random(*ell, *max_rank, *cases, config.seed, format),
        },
        Command::Verify { cases, suite } => verify_command(*cases, suite, config.seed, format),
        Command::Sweep { grid } => {
            let text = fs::read_to_string(grid).map_err(|e| io_error(grid, e))?;
            let grid_spec: SweepGrid = serde_json::from_str(&text).map_err(|e| io_error(grid, e))?;
            grid_spec
                .check()
                .map_err(|e| Failure::Message(EXIT_IO, format!("{}: {e}", grid.display())))?;
            let rows = run_grid(&grid_spec).map_err(Failure::from)?;
            match format {
                Format::Csv => Ok(Outcome {
                    code: EXIT_OK,
                    output: sweep::to_csv(&rows),
                }),
                Format::Json => render(format, &json!({ "schema": SCHEMA, "command": "sweep", "rows": rows })),
            }
        }
    }
}

fn read_descriptor(path: &Path) -> Result<ExtensionDescriptor, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    ExtensionDescriptor::from_json(&text).map_err(|e| io_error(path, e))
}

fn load(path: &Path, format: Format) -> Result<Extension, Failure> {
    Extension::new(read_descriptor(path)?).map_err(|r| report_failure(&r, format))
}

fn report_failure(report: &ValidationReport, format: Format) -> Failure {
    Failure::Report(EXIT_INVALID, render_report(report, format))
}

fn render_report(report: &ValidationReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "command": "validate",
            "report": report,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["descriptor-id", "valid", "rule", "message"]).expect("in memory");
            if report.violations.is_empty() {
                w.write_record([report.id.as_str(), "true", "", ""]).expect("in memory");
            }
            for v in &report.violations {
                w.write_record([report.id.as_str(), "false", &v.rule, &v.message])
                    .expect("in memory");
            }
            String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8")
        }
    }
}

fn validate(path: &Path, format: Format) -> Result<Outcome, Failure> {
    let report = Extension::validate(&read_descriptor(path)?);
    Ok(Outcome {
        code: if report.valid { EXIT_OK } else { EXIT_INVALID },
        output: render_report(&report, format),
    })
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// JSON renders the value; CSV flattens it to `key,value` lines.
fn render(format: Format, value: &Value) -> Result<Outcome, Failure> {
    let output = match format {
        Format::Json => pretty(value),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["key", "value"]).expect("in memory");
            let mut flat = Vec::new();
            flatten("", value, &mut flat);
            for (k, v) in flat {
                w.write_record([k, v]).expect("in memory");
            }
            String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8")
        }
    };
    Ok(Outcome { code: EXIT_OK, output })
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn transfer(ext: &Extension, format: Format, trace: bool, verbose: bool) -> Result<Outcome, Failure> {
    let t3 = ext.transfer_t3()?;
    let projection = ext.project_c1(&t3.chi_l);
    let t3p = ext.transfer_t3prime()?;
    let mut warnings = t3.warnings.clone();
    let hyp = ext.hypotheses();
    if !hyp.leopoldt {
        warnings.push(json_warning("LEOPOLDT_NOT_ASSERTED", "the real-field value assumes Leopoldt's conjecture"));
    }
    if !hyp.gross_kuzmin {
        warnings.push(json_warning(
            "GROSS_KUZMIN_NOT_ASSERTED",
            "the decomposed variant assumes the Gross-Kuzmin conjecture",
        ));
    }
    if !projection.bare_claim_holds {
        warnings.push(json_warning(
            "BARE_PAIRING",
            "the pairing with the bare place character is not the split indicator; the imaginary part is used",
        ));
    }
    let mut out = json!({
        "schema": SCHEMA,
        "id": ext.id(),
        "command": "transfer",
        "hypotheses": hyp,
        "chi_L": t3.chi_l,
        "lambda_L": t3.lambda_l,
        "lambda_L_degree": t3.lambda_l_degree,
        "projection": projection,
        "kida_A1": ext.kida_a1()?,
        "wingberg_A2": ext.wingberg_a2()?,
        "T3_prime": {
            "chi_L": t3p.chi_l,
            "lambda_L": t3p.lambda_l,
            "lambda_L_degree": t3p.lambda_l_degree,
        },
        "kuzmin_A3": ext.kuzmin_a3()?,
        "tilde_consistent": ext.tilde_l(&t3.chi_l) == t3p.chi_l,
        "warnings": warnings,
    });
    let obj = out.as_object_mut().expect("object literal");
    if verbose {
        let bare = ext.transfer_t3_bare()?;
        obj.insert("T3_bare".into(), json!({ "chi_L": bare.chi_l, "lambda_L": bare.lambda_l }));
        let places: Vec<Value> = ext
            .places()
            .iter()
            .map(|p| {
                json!({
                    "name": p.name,
                    "above_ell": p.above_ell,
                    "j": p.j,
                    "split_in_K": p.split_in_k,
                    "chi_p": p.chi,
                    "chi_p_minus": p.chi_minus,
                })
            })
            .collect();
        obj.insert("places".into(), Value::Array(places));
    }
    if trace {
        let chain = tower::transfer_chain(ext)?;
        obj.insert("trace".into(), serde_json::to_value(&chain.steps).expect("serializable"));
        obj.insert("chain_value".into(), json!(chain.chain_value));
        obj.insert("chain_agrees".into(), json!(chain.agrees));
    }
    render(format, &out)
}

fn json_warning(code: &str, message: &str) -> crate::genus::Warning {
    crate::genus::Warning {
        code: code.to_string(),
        message: message.to_string(),
    }
}

fn oracle_file(path: &Path, format: Format) -> Result<Outcome, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let lattice: GLattice = serde_json::from_str(&text).map_err(|e| io_error(path, e))?;
    let mut out = json!({
        "schema": SCHEMA,
        "command": "oracle",
        "ell": lattice.ell(),
        "k": lattice.k(),
        "rank": lattice.rank(),
        "cohomology": cohomology(&lattice),
        "fixed_dims": fixed_dims_chain(&lattice),
    });
    let obj = out.as_object_mut().expect("object literal");
    let found = analyse(&lattice).and_then(|a| Ok((a.decomposition()?, a.character()?, a.divisible_character()?)));
    match found {
        Ok((d, chi, chi_div)) => {
            obj.insert("decomposition".into(), json!(d));
            obj.insert("character".into(), json!(chi));
            obj.insert("divisible_character".into(), json!(chi_div));
        }
        Err(e) => {
            obj.insert("decomposition_error".into(), json!(e.to_string()));
        }
    }
    render(format, &out)
}

#[derive(Serialize)]
struct OracleCase {
    case: usize,
    built: [usize; 3],
    recovered: Option<[usize; 3]>,
    rank: usize,
    herbrand_q: Option<i64>,
    divisible_agrees: bool,
    ok: bool,
}

fn oracle_random(ell: u64, max_rank: usize, cases: usize, seed: u64, format: Format) -> Result<Outcome, Failure> {
    if crate::gee_chars::CyclicGroupSpec::new(ell, 1).is_err() {
        return Err(Failure::Message(EXIT_INVALID, format!("ell = {ell} is not an odd prime")));
    }
    if max_rank == 0 {
        return Err(Failure::Message(EXIT_INVALID, "max-rank must be positive".into()));
    }
    let results = crate::par::par_map((0..cases).collect(), |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let ((a, b, c), x) = gen::random_lattice(&mut rng, ell, max_rank);
        let analysis = analyse(&x).ok();
        let recovered = analysis
            .as_ref()
            .and_then(|a| a.decomposition().ok())
            .map(|d| [d.alpha, d.beta, d.gamma]);
        let q = analysis.as_ref().and_then(|a| a.cohomology.herbrand_q);
        let divisible_agrees = analysis.as_ref().is_some_and(|a| {
            matches!((a.character(), a.divisible_character()), (Ok(p), Ok(q)) if p == q)
        });
        OracleCase {
            case: i,
            built: [a, b, c],
            ok: recovered == Some([a, b, c]) && q == Some(c as i64 - b as i64) && divisible_agrees,
            recovered,
            rank: x.rank(),
            herbrand_q: q,
            divisible_agrees,
        }
    });
    let recovered = results.iter().filter(|c| c.ok).count();
    let out = json!({
        "schema": SCHEMA,
        "command": "oracle",
        "ell": ell,
        "max_rank": max_rank,
        "seed": seed,
        "cases": cases,
        "recovered": recovered,
        "results": results,
    });
    let mut o = render(format, &out)?;
    if recovered != cases {
        o.code = EXIT_CHECK_FAILED;
    }
    Ok(o)
}

fn verify_command(cases: usize, only: &[String], seed: u64, format: Format) -> Result<Outcome, Failure> {
    let ids = verify::suite_ids();
    if let Some(bad) = only.iter().find(|s| !ids.contains(&s.as_str())) {
        return Err(Failure::Message(EXIT_INVALID, format!("unknown suite {bad:?}")));
    }
    let outcomes: Vec<verify::Outcome> = verify::SUITES
        .iter()
        .filter(|(id, _)| only.is_empty() || only.iter().any(|s| s == id))
        .map(|&(id, check)| verify::run_suite(id, check, seed, cases))
        .collect();
    let all = outcomes.iter().all(|o| o.passed);
    let output = match format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA,
            "command": "verify",
            "seed": seed,
            "passed": all,
            "suites": outcomes,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "cases", "failures", "passed", "first_failure"])
                .expect("in memory");
            for o in &outcomes {
                w.write_record([
                    o.id.to_string(),
                    o.cases.to_string(),
                    o.failures.to_string(),
                    o.passed.to_string(),
                    o.first_failure.clone().unwrap_or_default(),
                ])
                .expect("in memory");
            }
            String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8")
        }
    };
    Ok(Outcome {
        code: if all { EXIT_OK } else { EXIT_CHECK_FAILED },
        output,
    })
}
