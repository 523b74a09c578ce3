//! `dlie`: build twisted forms, run the verification suites and the
//! non-cube oracle.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 unparseable input,
//! 3 ineligible parameters.

use std::fmt::Display;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dlie::descent::{verify_descent, DescentError, GroupKind};
use dlie::export::FormDocument;
use dlie::field_tower::{
    check_s3_extension, noncube_certify, parse_element, parse_ratfunc, FieldError,
    NonCubeCertificate, NonCubeVerdict, ParseError, RatFunc, TowerElement, TowerSpec,
    DEFAULT_SPECIALIZATION_LIMIT,
};
use dlie::forms::{certify_form, eigen_check, EigenData, FormConfig, Suite};
use dlie::report::VerificationReport;

#[derive(Parser)]
#[command(
    name = "dlie",
    version,
    about = "Twisted forms of differential Lie algebras over k(t)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the explicit basis of a form.
    Form(FormArgs),
    /// Compare the explicit basis with the computed fixed points.
    Verify(VerifyArgs),
    /// Non-cube certification and extension checks.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum FormType {
    A,
    D,
    D4,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum Group {
    Z2,
    Z3,
    S3,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_SPECIALIZATION_LIMIT, env = "DLIE_SPECIALIZATION_LIMIT")]
    limit: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Clone)]
struct FormArgs {
    #[arg(long = "type", value_enum)]
    kind: FormType,
    /// Matrix size for type A.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Matrix size for type D.
    #[arg(long, default_value_t = 8)]
    m: usize,
    /// Group for D4; Z2 for A and D.
    #[arg(long, value_enum)]
    group: Option<Group>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "type", value_enum, required_unless_present = "all")]
    kind: Option<FormType>,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 8)]
    m: usize,
    #[arg(long, value_enum)]
    group: Option<Group>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long, value_enum, default_value_t = SuiteArg::Full)]
    suite: SuiteArg,
    /// Run every default configuration concurrently.
    #[arg(long, conflicts_with = "kind")]
    all: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Full,
    Fast,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Try to certify that beta is not a cube in K(r2).
    Noncube {
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check conditions (a)-(c) for an S3 tower.
    S3check {
        #[arg(long, default_value = "1 - t^3")]
        alpha: String,
        #[arg(long, default_value = "1 + r2")]
        beta: String,
        #[arg(long, default_value = "t")]
        gamma: String,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Parse(String),
    Ineligible(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<DescentError> for Failure {
    fn from(e: DescentError) -> Self {
        Failure::Ineligible(e.to_string())
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Self {
        Failure::Ineligible(e.to_string())
    }
}

fn ratfunc(what: &str, s: &str) -> Result<RatFunc, Failure> {
    parse_ratfunc(s).map_err(|e| Failure::Parse(format!("--{what}: {e}")))
}

fn element(what: &str, s: &str, spec: &Arc<TowerSpec>) -> Result<TowerElement, Failure> {
    parse_element(s, spec).map_err(|e| Failure::Parse(format!("--{what}: {e}")))
}

/// β as a pair of K-coordinates over K(√α).
fn beta_pair(s: &str, alpha: &RatFunc) -> Result<[RatFunc; 2], Failure> {
    let b = element("beta", s, &TowerSpec::quadratic(alpha.clone())?)?;
    let c = b.coords();
    Ok([c[0].clone(), c[1].clone()])
}

struct Params<'a> {
    kind: FormType,
    n: usize,
    m: usize,
    group: Option<Group>,
    alpha: Option<&'a str>,
    beta: Option<&'a str>,
    gamma: Option<&'a str>,
}

fn build_config(p: &Params) -> Result<FormConfig, Failure> {
    let group = p.group.unwrap_or(match p.kind {
        FormType::D4 => Group::Z3,
        _ => Group::Z2,
    });
    if p.kind != FormType::D4 && group != Group::Z2 {
        return Err(Failure::Ineligible(format!(
            "type {:?} only has the group Z2",
            p.kind
        )));
    }
    Ok(match (p.kind, group) {
        (FormType::A, _) => FormConfig::A {
            n: p.n,
            alpha: ratfunc("alpha", p.alpha.unwrap_or("t"))?,
        },
        (FormType::D, _) => FormConfig::D {
            m: p.m,
            alpha: ratfunc("alpha", p.alpha.unwrap_or("t"))?,
        },
        (FormType::D4, Group::Z2) => {
            let alpha = ratfunc("alpha", p.alpha.unwrap_or("t"))?;
            FormConfig::D4 {
                group: GroupKind::Z2,
                spec: TowerSpec::quadratic(alpha)?,
            }
        }
        (FormType::D4, Group::Z3) => {
            let beta = ratfunc("beta", p.beta.unwrap_or("t"))?;
            FormConfig::D4 {
                group: GroupKind::Z3,
                spec: TowerSpec::cubic(beta)?,
            }
        }
        (FormType::D4, Group::S3) => {
            let alpha = ratfunc("alpha", p.alpha.unwrap_or("1 - t^3"))?;
            let beta = beta_pair(p.beta.unwrap_or("1 + r2"), &alpha)?;
            let gamma = ratfunc("gamma", p.gamma.unwrap_or("t"))?;
            FormConfig::D4 {
                group: GroupKind::S3,
                spec: TowerSpec::new(Some(alpha), Some(beta), Some(gamma))?,
            }
        }
    })
}

fn emit<T: Serialize + ?Sized>(value: &T, text: impl Display, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Format::Text => println!("{text}"),
    }
}

fn form_text(doc: &FormDocument) -> String {
    let mut out = format!(
        "{} form of {} with group {}, dimension {}\n",
        match doc.construction {
            dlie::descent::Construction::Explicit => "explicit",
            dlie::descent::Construction::Descent => "computed",
        },
        doc.algebra,
        doc.group,
        doc.dimension
    );
    for (k, v) in [
        ("alpha", &doc.tower.alpha),
        ("beta", &doc.tower.beta),
        ("gamma", &doc.tower.gamma),
    ] {
        if let Some(v) = v {
            out.push_str(&format!("  {k} = {v}\n"));
        }
    }
    for (i, b) in doc.basis.iter().enumerate() {
        let terms: Vec<String> = b.iter().map(|(l, c)| format!("({c})*{l}")).collect();
        out.push_str(&format!("  b{i} = {}\n", terms.join(" + ")));
    }
    out.trim_end().to_string()
}

fn run_form(a: &FormArgs) -> Result<bool, Failure> {
    let config = build_config(&Params {
        kind: a.kind,
        n: a.n,
        m: a.m,
        group: a.group,
        alpha: a.alpha.as_deref(),
        beta: a.beta.as_deref(),
        gamma: a.gamma.as_deref(),
    })?;
    config.validate(a.common.limit)?;
    let f = config.explicit()?;
    let report = verify_descent(&f, Some(&config.action()?))?;
    let passed = report.passed();
    let doc = FormDocument::new(&f, Some(report));
    emit(&doc, form_text(&doc), a.common.format);
    Ok(passed)
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Full => Suite::Full,
        SuiteArg::Fast => Suite::Fast,
    }
}

fn default_configs() -> Vec<(FormType, Option<Group>, usize, usize)> {
    vec![
        (FormType::A, None, 3, 8),
        (FormType::A, None, 4, 8),
        (FormType::D, None, 3, 8),
        (FormType::D, None, 3, 10),
        (FormType::D4, Some(Group::Z2), 3, 8),
        (FormType::D4, Some(Group::Z3), 3, 8),
        (FormType::D4, Some(Group::S3), 3, 8),
    ]
}

fn run_verify(a: &VerifyArgs) -> Result<bool, Failure> {
    let s = suite(a.suite);
    let limit = a.common.limit;
    if a.all {
        let configs = default_configs()
            .into_iter()
            .map(|(kind, group, n, m)| {
                build_config(&Params {
                    kind,
                    n,
                    m,
                    group,
                    alpha: None,
                    beta: None,
                    gamma: None,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let results: Vec<Result<VerificationReport, DescentError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = configs
                .iter()
                .map(|c| scope.spawn(move || certify_form(c, s, limit)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification thread"))
                .collect()
        });
        let mut reports = vec![eigen_check(&EigenData::standard())];
        for r in results {
            reports.push(r?);
        }
        let passed = reports.iter().all(VerificationReport::passed);
        let text = reports
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n");
        emit(&reports, text, a.common.format);
        return Ok(passed);
    }
    let config = build_config(&Params {
        kind: a.kind.expect("clap requires --type without --all"),
        n: a.n,
        m: a.m,
        group: a.group,
        alpha: a.alpha.as_deref(),
        beta: a.beta.as_deref(),
        gamma: a.gamma.as_deref(),
    })?;
    let report = certify_form(&config, s, limit)?;
    emit(&report, &report, a.common.format);
    Ok(report.passed())
}

fn run_oracle(o: &OracleCommand) -> Result<bool, Failure> {
    match o {
        OracleCommand::Noncube {
            alpha,
            beta,
            common,
        } => {
            let alpha = alpha.as_deref().map(|s| ratfunc("alpha", s)).transpose()?;
            let spec = match &alpha {
                Some(a) => TowerSpec::quadratic(a.clone())?,
                None => TowerSpec::base(),
            };
            let b = element("beta", beta, &spec)?;
            let verdict = noncube_certify(&b, common.limit)?;
            let text = match &verdict {
                NonCubeVerdict::Certified { certificate } => {
                    format!("certified: {}", certificate_text(certificate))
                }
                NonCubeVerdict::Cube { root, constant } => {
                    format!("cube: ({root})^3 times the constant {constant}")
                }
                NonCubeVerdict::Unknown { tried, reason } => {
                    format!("unknown after {} points: {reason}", tried.len())
                }
            };
            emit(&verdict, text, common.format);
            Ok(verdict.is_certified())
        }
        OracleCommand::S3check {
            alpha,
            beta,
            gamma,
            common,
        } => {
            let alpha = ratfunc("alpha", alpha)?;
            let gamma = ratfunc("gamma", gamma)?;
            let m = TowerSpec::quadratic(alpha.clone())?;
            let b = element("beta", beta, &m)?;
            let r = check_s3_extension(&alpha, &b, &gamma, common.limit);
            let text = format!(
                "(a) alpha not a square: {}\n(b) beta not a cube: {}\n(c) gamma^3 = beta*bar(beta): {}{}",
                r.alpha_not_square,
                r.beta_not_cube,
                r.gamma_cubed_is_norm,
                r.notes.iter().map(|n| format!("\nnote: {n}")).collect::<String>()
            );
            emit(&r, text, common.format);
            Ok(r.passed())
        }
    }
}

fn certificate_text(c: &NonCubeCertificate) -> String {
    match c {
        NonCubeCertificate::BaseField { beta } => format!("{beta} is not a cube in C(t)"),
        NonCubeCertificate::Norm { norm } => format!("the norm {norm} is not a cube in C(t)"),
        NonCubeCertificate::Specialization {
            t0,
            d,
            normalizer,
            value,
            reason,
        } => format!(
            "at t0 = {t0}, beta/({normalizer})^2 specializes to {value} in Q(sqrt({d})): {reason}"
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Form(a) => run_form(a),
        Command::Verify(a) => run_verify(a),
        Command::Oracle { which } => run_oracle(which),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Ineligible(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
