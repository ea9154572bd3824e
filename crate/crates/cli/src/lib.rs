//! Command-line front end: argument types, scheme loading and the five
//! subcommands. `main.rs` only parses arguments and writes the output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or configuration
//! error, 3 `⟨z⟩` is not an A-subgroup (from `classify`).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use schur_core::analysis::{
    classify, quotient_scheme, reflection_criteria_report, stab_table, traditionality_evidence,
    AnalysisError, Classification, ClassifyError, QuotientReport, ReflectionCriteriaReport, StabEntry,
    TraditionalityEvidence,
};
use schur_core::report::VerificationReport;
use schur_core::scheme::{parse_scheme, print_scheme, FormatError};
use schur_core::{builtin_scheme, verify_axioms, BasicSet, Builtin, GroupKind, PartitionScheme};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NOT_A_SUBGROUP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "schur", version, about = "Exact Schur-ring verification over Z and D-infinity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check partition, star closure and product closure on a window.
    Verify(CommonArgs),
    /// Classify a scheme whose rotation subgroup is a union of classes.
    Classify(CommonArgs),
    /// Combined report: constants, Stab table, criteria, traditionality.
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        /// Also verify the image over D-infinity / <z^n>.
        #[arg(long, value_name = "N")]
        quotient: Option<u64>,
    },
    /// Print the scheme in canonical JSON (or text with --format text).
    PrintScheme(CommonArgs),
    /// Verify the image of the scheme over D-infinity / <z^n>.
    Quotient {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_name = "N")]
        quotient: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Parameter for a built-in, e.g. i=3. Repeatable.
    #[arg(long = "param", value_name = "K=V", value_parser = parse_param)]
    pub params: Vec<(String, String)>,
    #[arg(long, default_value_t = 32)]
    pub radius: u64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exactly one scheme source.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Built-in scheme: discrete-Z, symmetric-Z, discrete-D, orbit-D,
    /// half-shift-D, nontraditional-2305b (or orbit-D(3) style).
    #[arg(long)]
    pub builtin: Option<String>,
    /// Scheme file in JSON format.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => Err(format!("expected K=V, got {s:?}")),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Scheme { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Config(String),
}

/// What a command produced: the rendered report and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub fn load_scheme(args: &CommonArgs) -> Result<PartitionScheme, CliError> {
    match (&args.source.builtin, &args.source.file) {
        (Some(name), None) => {
            let which = Builtin::from_name(name, &args.params).map_err(|e| CliError::Config(e.to_string()))?;
            builtin_scheme(&which).map_err(|e| CliError::Config(e.to_string()))
        }
        (None, Some(path)) => {
            if !args.params.is_empty() {
                return Err(CliError::Config("--param only applies to --builtin".into()));
            }
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            parse_scheme(&text).map_err(|source| CliError::Scheme {
                path: path.clone(),
                source,
            })
        }
        _ => Err(CliError::Config("give exactly one of --builtin or --file".into())),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

fn cmd_verify(scheme: &PartitionScheme, args: &CommonArgs) -> Outcome {
    let report = verify_axioms(scheme, args.radius);
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    let output = match args.format.unwrap_or(Format::Text) {
        Format::Json => json(&VerifyOutput {
            passed: report.passed(),
            report: &report,
        }),
        Format::Text => format!("{report}\n"),
    };
    Outcome { code, output }
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum ClassificationSection {
    Classified {
        result: String,
        #[serde(flatten)]
        detail: Classification,
    },
    NotApplicable {
        message: String,
        detail: ClassifyError,
    },
}

impl ClassificationSection {
    fn new(result: Result<Classification, ClassifyError>) -> Self {
        match result {
            Ok(c) => ClassificationSection::Classified {
                result: c.to_string(),
                detail: c,
            },
            Err(e) => ClassificationSection::NotApplicable {
                message: e.to_string(),
                detail: e,
            },
        }
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    scheme: String,
    radius: u64,
    classification: ClassificationSection,
    #[serde(rename = "prop1136a", skip_serializing_if = "Option::is_none")]
    criteria: Option<ReflectionCriteriaReport>,
}

fn criteria_text(out: &mut String, rep: &ReflectionCriteriaReport) {
    let _ = writeln!(out, "class of z: {}", rep.class_of_z);
    let _ = writeln!(out, "  inside <z>: {}", rep.class_in_translations);
    let _ = writeln!(out, "  reflections: {} {:?}", rep.reflection_count, rep.reflection_exponents);
    match &rep.t {
        Some(t) => {
            let _ = writeln!(out, "t = {} (attained by {})", t.value, t.class);
        }
        None => {
            let _ = writeln!(out, "t: no class holds two reflections");
        }
    }
    if let Some(l) = &rep.l_window {
        let _ = writeln!(
            out,
            "l_window = {} (window-bounded, attained by {}){}",
            l.value,
            l.class,
            if rep.l_unbounded { ", l unbounded overall" } else { "" }
        );
    }
    let _ = writeln!(out, "class criterion:      {}", criterion_text(&rep.class_criterion));
    let _ = writeln!(out, "reflection count:     {}", criterion_text(&rep.reflection_count_criterion));
    let _ = writeln!(out, "spread criterion:     {}", criterion_text(&rep.spread_criterion));
    let _ = write!(out, "<z> is an A-subgroup: {}", rep.translations.holds);
    if let Some(w) = &rep.translations.witness {
        let _ = write!(out, " ({w})");
    }
    out.push('\n');
}

fn criterion_text(c: &schur_core::analysis::Criterion) -> String {
    use schur_core::analysis::Criterion::*;
    match c {
        NotApplicable { reason } => format!("not applicable ({reason})"),
        Fires { confirmed: true } => "fires, <z> is an A-subgroup (confirmed)".into(),
        Fires { confirmed: false } => "fires, but <z> is NOT an A-subgroup".into(),
        Satisfied => "satisfied".into(),
        Violated { reason } => format!("VIOLATED ({reason})"),
    }
}

fn cmd_classify(scheme: &PartitionScheme, args: &CommonArgs) -> Result<Outcome, CliError> {
    let result = classify(scheme, args.radius);
    let (code, criteria) = match &result {
        Ok(_) => (EXIT_OK, None),
        Err(ClassifyError::TranslationsNotASubgroup { .. }) => {
            let rep = reflection_criteria_report(scheme, args.radius).map_err(|e| CliError::Config(e.to_string()))?;
            (EXIT_NOT_A_SUBGROUP, Some(rep))
        }
        Err(_) => (EXIT_FAILED, None),
    };
    let output = match args.format.unwrap_or(Format::Text) {
        Format::Json => json(&ClassifyOutput {
            scheme: scheme.name().to_string(),
            radius: args.radius,
            classification: ClassificationSection::new(result),
            criteria,
        }),
        Format::Text => {
            let mut out = String::new();
            match &result {
                Ok(c) => {
                    let _ = writeln!(out, "{c}");
                    if let Classification::OrbitFamily {
                        singleton_reflection: Some(g),
                        ..
                    } = c
                    {
                        let _ = writeln!(out, "unique singleton reflection class: {{{g}}}");
                    }
                }
                Err(e) => {
                    let _ = writeln!(out, "not classified: {e}");
                }
            }
            if let Some(rep) = &criteria {
                criteria_text(&mut out, rep);
            }
            out
        }
    };
    Ok(Outcome { code, output })
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum QuotientSection {
    Computed(Box<QuotientReport>),
    KernelNotASubgroup { error: AnalysisError },
}

#[derive(Serialize)]
struct AnalyzeOutput {
    scheme: String,
    group: GroupKind,
    radius: u64,
    passed: bool,
    classes: Vec<BasicSet>,
    verification: VerificationReport,
    stab: Vec<StabEntry>,
    #[serde(rename = "prop1136a", skip_serializing_if = "Option::is_none")]
    criteria: Option<ReflectionCriteriaReport>,
    classification: ClassificationSection,
    traditionality: TraditionalityEvidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<QuotientSection>,
}

fn analysis_error(e: AnalysisError) -> CliError {
    CliError::Config(e.to_string())
}

fn quotient_section(scheme: &PartitionScheme, n: u64, radius: u64) -> Result<QuotientSection, CliError> {
    match quotient_scheme(scheme, n, radius) {
        Ok(r) => Ok(QuotientSection::Computed(Box::new(r))),
        Err(e @ AnalysisError::KernelNotASubgroup { .. }) => Ok(QuotientSection::KernelNotASubgroup { error: e }),
        Err(e) => Err(analysis_error(e)),
    }
}

fn quotient_text(out: &mut String, q: &QuotientSection) {
    match q {
        QuotientSection::Computed(r) => {
            let _ = writeln!(out, "{r}");
        }
        QuotientSection::KernelNotASubgroup { error } => {
            let _ = write!(out, "quotient: {error}");
            if let AnalysisError::KernelNotASubgroup { evidence, .. } = error {
                if let Some(w) = &evidence.witness {
                    let _ = write!(out, " ({w})");
                }
            }
            out.push('\n');
        }
    }
}

fn quotient_passed(q: &QuotientSection) -> bool {
    matches!(q, QuotientSection::Computed(r) if r.passed())
}

fn cmd_analyze(scheme: &PartitionScheme, args: &CommonArgs, quotient: Option<u64>) -> Result<Outcome, CliError> {
    let radius = args.radius;
    let verification = verify_axioms(scheme, radius);
    if !verification.passed() {
        return Ok(cmd_verify(scheme, args));
    }
    let classes = scheme
        .enumerate_classes(radius)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let stab = stab_table(scheme, radius).map_err(analysis_error)?;
    let criteria = match scheme.group() {
        GroupKind::DihedralInfinite => Some(reflection_criteria_report(scheme, radius).map_err(analysis_error)?),
        GroupKind::IntegerLine => None,
    };
    let classification = ClassificationSection::new(classify(scheme, radius));
    let traditionality = traditionality_evidence(scheme, radius).map_err(analysis_error)?;
    let quotient = quotient.map(|n| quotient_section(scheme, n, radius)).transpose()?;
    let passed = quotient.as_ref().is_none_or(quotient_passed);
    let code = if passed { EXIT_OK } else { EXIT_FAILED };

    let output = match args.format.unwrap_or(Format::Text) {
        Format::Json => json(&AnalyzeOutput {
            scheme: scheme.name().to_string(),
            group: scheme.group(),
            radius,
            passed,
            classes,
            verification,
            stab,
            criteria,
            classification,
            traditionality,
            quotient,
        }),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{verification}");
            let _ = writeln!(out, "\nclasses ({} meet the window):", classes.len());
            for c in &classes {
                let _ = writeln!(out, "  {c}");
            }
            let _ = writeln!(out, "\nStab of window classes:");
            for s in &stab {
                let _ = writeln!(out, "  {} -> {}", s.class, s.stab);
            }
            if let Some(rep) = &criteria {
                out.push('\n');
                criteria_text(&mut out, rep);
            }
            let _ = writeln!(out);
            match &classification {
                ClassificationSection::Classified { result, .. } => {
                    let _ = writeln!(out, "classification: {result}");
                }
                ClassificationSection::NotApplicable { message, .. } => {
                    let _ = writeln!(out, "classification: not applicable ({message})");
                }
            }
            let _ = writeln!(out, "\n{traditionality}");
            if let Some(q) = &quotient {
                out.push('\n');
                quotient_text(&mut out, q);
            }
            out
        }
    };
    Ok(Outcome { code, output })
}

fn cmd_quotient(scheme: &PartitionScheme, args: &CommonArgs, n: u64) -> Result<Outcome, CliError> {
    let section = quotient_section(scheme, n, args.radius)?;
    let code = if quotient_passed(&section) { EXIT_OK } else { EXIT_FAILED };
    let output = match args.format.unwrap_or(Format::Text) {
        Format::Json => json(&section),
        Format::Text => {
            let mut out = String::new();
            quotient_text(&mut out, &section);
            out
        }
    };
    Ok(Outcome { code, output })
}

fn cmd_print_scheme(scheme: &PartitionScheme, args: &CommonArgs) -> Outcome {
    let output = match args.format.unwrap_or(Format::Json) {
        Format::Json => print_scheme(scheme),
        Format::Text => format!("{scheme}\n"),
    };
    Outcome { code: EXIT_OK, output }
}

pub fn common_args(command: &Command) -> &CommonArgs {
    match command {
        Command::Verify(c) | Command::Classify(c) | Command::PrintScheme(c) => c,
        Command::Analyze { common, .. } | Command::Quotient { common, .. } => common,
    }
}

/// Runs one command. Errors map to exit code 2.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let args = common_args(&cli.command);
    let scheme = load_scheme(args)?;
    match &cli.command {
        Command::Verify(_) => Ok(cmd_verify(&scheme, args)),
        Command::Classify(_) => cmd_classify(&scheme, args),
        Command::Analyze { quotient, .. } => cmd_analyze(&scheme, args, *quotient),
        Command::PrintScheme(_) => Ok(cmd_print_scheme(&scheme, args)),
        Command::Quotient { quotient, .. } => cmd_quotient(&scheme, args, *quotient),
    }
}
