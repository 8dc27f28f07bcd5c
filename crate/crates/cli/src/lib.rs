//! Command-line front end: spec files in, JSON or markdown reports out.

pub mod render;
pub mod specfile;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use npreproj_core::acceptance;
use npreproj_core::checks::{
    analyze_timed, cy_spot_check, is_n_rep_finite, is_self_injective, is_tau_n_finite, iwanaga_gorenstein_dim, rigidity,
    vosnex, Caps, Outcome, Verdict,
};
use npreproj_core::derived::{amiot_hom, ProjComplex};
use npreproj_core::families::{
    auslander_algebra, canonical_2222, canonical_2222_spec, dynkin_a_spec, dynkin_orientation, dynkin_path_algebra,
    higher_auslander_chain, linear_nakayama_spec, thm39_type2_spec, Choice, QuiverSpec,
};
use npreproj_core::field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
use npreproj_core::preproj::{preprojective_algebra, preprojective_module, stable_endomorphism};
use npreproj_core::quivalg::{quiver_presentation, Algebra, Quiver};
use npreproj_core::repmod::Representation;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::specfile::{parse_field, parse_spec, to_text, ParseError, SpecFile};

/// Version of the JSON envelope layout.
pub const SCHEMA: u32 = 1;
pub const DEFAULT_CLI_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(name = "npreproj", version, about = "Preprojective algebras of bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// The `n` of n-representation-finiteness.
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Sets every iteration cap (tau iterates, resolutions, orbit windows).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_CLI_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// `Q` or `GF(p)`; overrides the spec file.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Add wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every check and the full report.
    Analyze { input: Option<PathBuf> },
    /// Quiver presentation and grading of the preprojective algebra.
    Preprojective { input: Option<PathBuf> },
    /// A single verdict; exit 1 on false, 3 on unknown.
    Check {
        name: CheckName,
        input: Option<PathBuf>,
        /// Test the input algebra itself instead of its preprojective algebra.
        #[arg(long)]
        direct: bool,
    },
    /// Stable endomorphism algebra of the projective-free part.
    Gamma { input: Option<PathBuf> },
    /// Graded pieces of the orbit Hom of the regular module.
    AmiotHom { input: Option<PathBuf> },
    /// Emit a spec file for a named family.
    Family { name: String, params: Vec<String> },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    TauNFinite,
    NRepFinite,
    SelfInjective,
    Vosnex,
    Rigidity,
    Cy,
    Gorenstein,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Preprojective { .. } => "preprojective",
            Command::Check { .. } => "check",
            Command::Gamma { .. } => "gamma",
            Command::AmiotHom { .. } => "amiot-hom",
            Command::Family { .. } => "family",
            Command::Selftest => "selftest",
        }
    }

    fn input(&self) -> Option<Option<&PathBuf>> {
        match self {
            Command::Analyze { input }
            | Command::Preprojective { input }
            | Command::Check { input, .. }
            | Command::Gamma { input }
            | Command::AmiotHom { input } => Some(input.as_ref()),
            _ => None,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Core(npreproj_core::Error),
    Io(String),
    Usage(String),
}

impl From<npreproj_core::Error> for CliError {
    fn from(e: npreproj_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn to_json(&self) -> Value {
        match self {
            CliError::Parse(p) => json!({"kind": "parse", "detail": p, "message": p.to_string()}),
            CliError::Core(e) => {
                let debug = format!("{e:?}");
                let variant: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
                json!({"kind": "computation", "variant": variant, "message": e.to_string()})
            }
            CliError::Io(m) => json!({"kind": "io", "message": m}),
            CliError::Usage(m) => json!({"kind": "usage", "message": m}),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parse(p) => format!("parse error at {p}"),
            CliError::Core(e) => e.to_string(),
            CliError::Io(m) | CliError::Usage(m) => m.clone(),
        }
    }
}

/// What `main` prints and exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Run a parsed command line. `stdin` is read only when the command needs
/// an input spec and no file was given.
pub fn run(cli: &Cli, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Output {
    let format = cli.format.unwrap_or(Format::Json);
    match execute(cli, stdin) {
        Ok(done) => done,
        Err(e) => match format {
            Format::Json => {
                let v = json!({
                    "tool": "npreproj",
                    "version": env!("CARGO_PKG_VERSION"),
                    "schema": SCHEMA,
                    "command": cli.command.name(),
                    "error": e.to_json(),
                });
                Output { code: EXIT_ERROR, stdout: pretty(&v), stderr: String::new() }
            }
            Format::Md => Output { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {}\n", e.message()) },
        },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn caps(cli: &Cli) -> Caps {
    match cli.cap {
        Some(c) => Caps { tau: c, resolution: c, window: c },
        None => Caps::default(),
    }
}

/// Everything a subcommand needs besides the algebra.
struct Ctx<'a> {
    cli: &'a Cli,
    caps: Caps,
    format: Format,
    file: SpecFile,
    digest: String,
}

fn execute(cli: &Cli, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Result<Output, CliError> {
    let field_flag = cli.field.as_deref().map(parse_field).transpose().map_err(|e| CliError::Usage(format!("--field: {}", e.message)))?;
    match &cli.command {
        Command::Family { name, params } => return family(cli, field_flag, name, params),
        Command::Selftest => return Ok(selftest(cli)),
        _ => {}
    }
    let text = match cli.command.input().flatten() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        _ => stdin().map_err(|e| CliError::Io(format!("stdin: {e}")))?,
    };
    let mut file = parse_spec(&text).map_err(CliError::Parse)?;
    file.field = Some(field_flag.or(file.field).unwrap_or(FieldSpec::PrimeField { p: DEFAULT_PRIME }));
    let digest = format!("sha256:{}", hex(&Sha256::digest(to_text(&file).as_bytes())));
    let ctx = Ctx { cli, caps: caps(cli), format: cli.format.unwrap_or(Format::Json), file, digest };
    match ctx.file.field.expect("resolved above") {
        FieldSpec::Rationals => dispatch(&ctx, &Rationals),
        FieldSpec::PrimeField { p } => dispatch(&ctx, &PrimeField::new(p).map_err(|_| CliError::Usage(format!("{p} is not prime")))?),
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl Ctx<'_> {
    fn algebra_id(&self) -> String {
        let meta = |k: &str| self.file.spec.metadata.iter().find(|(x, _)| x == k).map(|(_, v)| v.clone());
        meta("name").or_else(|| meta("family")).unwrap_or_else(|| self.digest.chars().take(19).collect())
    }

    fn envelope(&self, report: Value, verdict: Option<Verdict>, timings: Option<Value>) -> Value {
        let mut v = json!({
            "tool": "npreproj",
            "version": env!("CARGO_PKG_VERSION"),
            "schema": SCHEMA,
            "command": self.cli.command.name(),
            "input_digest": self.digest,
            "field": self.file.field.map(|f| f.to_string()),
            "seed": self.cli.seed,
            "n": self.cli.n,
            "caps": to_value(&self.caps),
            "report": report,
        });
        if let Some(vd) = verdict {
            v["verdict"] = to_value(&vd);
        }
        if let (true, Some(t)) = (self.cli.timings, timings) {
            v["timings_ms"] = t;
        }
        v
    }

    fn emit(&self, json: Value, md: impl FnOnce() -> String, code: i32) -> Output {
        let stdout = match self.format {
            Format::Json => pretty(&json),
            Format::Md => md(),
        };
        Output { code, stdout, stderr: String::new() }
    }
}

fn dispatch<F: Field>(ctx: &Ctx, field: &F) -> Result<Output, CliError> {
    let a = ctx.file.spec.build(field)?;
    if a.num_vertices() == 0 && !matches!(ctx.cli.command, Command::Analyze { .. }) {
        return Err(CliError::Usage("the algebra has no vertices".into()));
    }
    let n = ctx.cli.n;
    let caps = ctx.caps;
    match &ctx.cli.command {
        Command::Analyze { .. } => {
            let (report, laps) = analyze_timed(&ctx.algebra_id(), &a, n, caps)?;
            let timings: serde_json::Map<String, Value> = laps.iter().map(|(k, ms)| (k.to_string(), json!(ms))).collect();
            let json = ctx.envelope(to_value(&report), None, Some(Value::Object(timings)));
            Ok(ctx.emit(json, || render::analysis(&report, a.quiver(), &ctx.digest), EXIT_OK))
        }
        Command::Preprojective { .. } => {
            let t = preprojective_algebra(&a, n, caps.tau)?;
            let p = quiver_presentation(&t.algebra)?;
            let spec = SpecFile { field: Some(field.spec()), spec: QuiverSpec::of(&p.algebra) };
            let report = json!({
                "dim": t.algebra.dim(),
                "graded_dims": t.graded_dims,
                "quiver": to_value(p.algebra.quiver()),
                "arrow_degrees": p.algebra.arrow_degrees(),
                "relation_counts": p.relation_counts,
                "spec": to_text(&spec),
            });
            let md = || render::preprojective(n, t.algebra.dim(), &t.graded_dims, p.algebra.quiver(), &to_text(&spec));
            Ok(ctx.emit(ctx.envelope(report, None, None), md, EXIT_OK))
        }
        Command::Check { name, direct, .. } => {
            let (verdict, detail) = check(&a, *name, *direct, n, caps)?;
            let code = match verdict {
                Verdict::True => EXIT_OK,
                Verdict::False => EXIT_FALSE,
                Verdict::Unknown => EXIT_UNKNOWN,
            };
            let label = name.to_possible_value().expect("no skipped variants").get_name().to_string();
            let target = if *direct || !acts_on_preprojective(*name) { "input" } else { "preprojective" };
            let report = json!({"check": label, "target": target, "detail": detail});
            let md = || render::verdict(&label, target, verdict, &detail);
            Ok(ctx.emit(ctx.envelope(report, Some(verdict), None), md, code))
        }
        Command::Gamma { .. } => {
            let s = stable_endomorphism(&a, n, caps.tau)?;
            let (quiver, relation_counts) = if s.algebra.dim() == 0 {
                (Quiver::new(Vec::new(), Vec::new())?, Vec::new())
            } else {
                let p = quiver_presentation(&s.algebra)?;
                (p.algebra.quiver().clone(), p.relation_counts)
            };
            let maps = quiver.opposite();
            let report = json!({
                "dim": s.algebra.dim(),
                "summands": s.summands.len(),
                "quiver": to_value(&quiver),
                "relation_counts": relation_counts,
                "maps_quiver": to_value(&maps),
                "maps_shape": render::line_shape(&maps),
                "p_free_hom_vanishes": s.p_free_hom_vanishes,
            });
            let md = || render::gamma(s.algebra.dim(), &quiver, &maps);
            Ok(ctx.emit(ctx.envelope(report, None, None), md, EXIT_OK))
        }
        Command::AmiotHom { .. } => {
            let reg = ProjComplex::regular(&a).to_complex();
            let h = amiot_hom(n, &reg, &reg, caps.window)?;
            let report = json!({"pieces": to_value(&h.pieces), "total": h.total(), "scanned": h.scanned});
            let md = || render::amiot(&h.pieces, h.total());
            Ok(ctx.emit(ctx.envelope(report, None, None), md, EXIT_OK))
        }
        Command::Family { .. } | Command::Selftest => unreachable!("handled before parsing input"),
    }
}

fn acts_on_preprojective(name: CheckName) -> bool {
    matches!(name, CheckName::SelfInjective | CheckName::Cy | CheckName::Gorenstein)
}

/// The presented preprojective algebra.
fn preprojective_presented<F: Field>(a: &Algebra<F>, n: usize, caps: Caps) -> Result<Outcome<Algebra<F>>, CliError> {
    Ok(match Outcome::from_result(preprojective_algebra(a, n, caps.tau))? {
        Outcome::Ok { value } => Outcome::Ok { value: quiver_presentation(&value.algebra)?.algebra },
        Outcome::Unknown { reason } => Outcome::Unknown { reason },
        Outcome::Skipped { reason } => Outcome::Skipped { reason },
    })
}

/// A verdict from an outcome; skipped counts as unknown.
fn from_outcome<T: Serialize>(o: Outcome<T>, verdict: impl Fn(&T) -> Verdict) -> (Verdict, Value) {
    let v = o.value().map_or(Verdict::Unknown, verdict);
    (v, to_value(&o))
}

fn check<F: Field>(a: &Algebra<F>, name: CheckName, direct: bool, n: usize, caps: Caps) -> Result<(Verdict, Value), CliError> {
    let target = if direct || !acts_on_preprojective(name) {
        Outcome::Ok { value: a.clone() }
    } else {
        preprojective_presented(a, n, caps)?
    };
    Ok(match name {
        CheckName::TauNFinite => from_outcome(Outcome::from_result(is_tau_n_finite(a, n, caps.tau))?, |t| t.verdict),
        CheckName::NRepFinite => from_outcome(Outcome::from_result(is_n_rep_finite(a, n, caps.tau))?, |t| t.verdict),
        CheckName::Vosnex => from_outcome(Outcome::from_result(vosnex(a, n, caps.window))?, |t| t.verdict),
        CheckName::Rigidity => {
            let o = match Outcome::from_result(preprojective_module(a, n, caps.tau))? {
                Outcome::Ok { value } => Outcome::Ok { value: rigidity(&Representation::direct_sum(&value.basic_summands()?), n)? },
                Outcome::Unknown { reason } => Outcome::Unknown { reason },
                Outcome::Skipped { reason } => Outcome::Skipped { reason },
            };
            from_outcome(o, |&b| Verdict::from_bool(b))
        }
        CheckName::SelfInjective => {
            let o = match target {
                Outcome::Ok { value } => Outcome::Ok { value: is_self_injective(&value) },
                Outcome::Unknown { reason } => Outcome::Unknown { reason },
                Outcome::Skipped { reason } => Outcome::Skipped { reason },
            };
            from_outcome(o, |s| s.verdict)
        }
        CheckName::Cy => {
            let o = match target {
                Outcome::Ok { value } if is_self_injective(&value).verdict.is_true() => Outcome::from_result(cy_spot_check(&value, n))?,
                Outcome::Ok { .. } => Outcome::skipped("the algebra is not self-injective"),
                Outcome::Unknown { reason } => Outcome::Unknown { reason },
                Outcome::Skipped { reason } => Outcome::Skipped { reason },
            };
            from_outcome(o, |per_simple| Verdict::from_bool(per_simple.iter().all(|&b| b)))
        }
        CheckName::Gorenstein => {
            let o = match target {
                Outcome::Ok { value } => Outcome::from_result(iwanaga_gorenstein_dim(&value, caps.resolution))?,
                Outcome::Unknown { reason } => Outcome::Unknown { reason },
                Outcome::Skipped { reason } => Outcome::Skipped { reason },
            };
            from_outcome(o, |_| Verdict::True)
        }
    })
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, CliError> {
    let raw = params.get(i).ok_or_else(|| CliError::Usage(format!("missing parameter <{what}>")))?;
    raw.parse().map_err(|_| CliError::Usage(format!("bad <{what}> `{raw}`")))
}

fn with_meta(mut spec: QuiverSpec, pairs: &[(&str, String)]) -> QuiverSpec {
    let mut meta: Vec<(String, String)> = pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    meta.extend(spec.metadata.into_iter().filter(|(k, _)| !pairs.iter().any(|(p, _)| p == k)));
    spec.metadata = meta;
    spec
}

/// Field element from an integer or a fraction `p/q`.
fn scalar<F: Field>(field: &F, raw: &str) -> Result<F::Elem, CliError> {
    let bad = || CliError::Usage(format!("bad scalar `{raw}`"));
    let (num, den) = raw.split_once('/').unwrap_or((raw, "1"));
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    let inv = field.inv(&field.from_i64(den)).ok_or_else(bad)?;
    Ok(field.mul(&field.from_i64(num), &inv))
}

fn family_spec<F: Field>(field: &F, name: &str, params: &[String]) -> Result<QuiverSpec, CliError> {
    Ok(match name {
        "linear_nakayama" => {
            let v: usize = param(params, 0, "vertices")?;
            with_meta(linear_nakayama_spec(v)?, &[("family", name.into()), ("vertices", v.to_string())])
        }
        "thm39_type2" => {
            let v: usize = param(params, 0, "vertices")?;
            let raw: String = param(params, 1, "choices")?;
            let choices = raw
                .chars()
                .map(|c| match c {
                    'g' => Ok(Choice::Gamma),
                    'd' => Ok(Choice::Delta),
                    _ => Err(CliError::Usage(format!("choices are letters g or d, got `{raw}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            with_meta(thm39_type2_spec(v, &choices)?, &[("family", name.into()), ("vertices", v.to_string())])
        }
        "canonical_2222" => {
            let raw: String = param(params, 0, "lambda")?;
            let lambda = scalar(field, &raw)?;
            canonical_2222(field, &lambda)?;
            canonical_2222_spec(&field.format(&lambda))
        }
        "dynkin" => {
            let ty: String = param(params, 0, "type")?;
            with_meta(dynkin_a_spec(&dynkin_orientation(&ty)?), &[("type", ty)])
        }
        "auslander" => {
            let ty: String = param(params, 0, "type")?;
            let a = auslander_algebra(&dynkin_path_algebra(field, &dynkin_orientation(&ty)?)?)?;
            with_meta(QuiverSpec::of(&a), &[("family", name.into()), ("type", ty)])
        }
        "higher_auslander_chain" => {
            let s: usize = param(params, 0, "s")?;
            let m: usize = param(params, 1, "m")?;
            let last = higher_auslander_chain(field, s, m)?.pop().expect("chain is never empty");
            with_meta(QuiverSpec::of(&last), &[("family", name.into()), ("s", s.to_string()), ("m", m.to_string())])
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown family `{other}` (linear_nakayama, thm39_type2, canonical_2222, dynkin, auslander, higher_auslander_chain)"
            )))
        }
    })
}

/// Spec text by default; `--format json` wraps it in an envelope.
fn family(cli: &Cli, field_flag: Option<FieldSpec>, name: &str, params: &[String]) -> Result<Output, CliError> {
    let field = field_flag.unwrap_or(FieldSpec::PrimeField { p: DEFAULT_PRIME });
    let spec = match field {
        FieldSpec::Rationals => family_spec(&Rationals, name, params)?,
        FieldSpec::PrimeField { p } => family_spec(&PrimeField::new(p).map_err(|_| CliError::Usage(format!("{p} is not prime")))?, name, params)?,
    };
    let text = to_text(&SpecFile { field: Some(field), spec: spec.clone() });
    let stdout = match cli.format {
        Some(Format::Json) => pretty(&json!({
            "tool": "npreproj",
            "version": env!("CARGO_PKG_VERSION"),
            "schema": SCHEMA,
            "command": "family",
            "family": name,
            "params": params,
            "spec": text,
            "quiver_spec": to_value(&spec),
        })),
        _ => text,
    };
    Ok(Output { code: EXIT_OK, stdout, stderr: String::new() })
}

fn selftest(cli: &Cli) -> Output {
    let results = acceptance::run_all(cli.seed);
    let passed = results.iter().all(|r| r.passed);
    let stdout = match cli.format.unwrap_or(Format::Json) {
        Format::Md => results.iter().map(|r| format!("- {}\n", r.line())).collect(),
        Format::Json => {
            let mut rs = to_value(&results);
            if !cli.timings {
                for r in rs.as_array_mut().expect("list") {
                    r.as_object_mut().expect("object").remove("millis");
                }
            }
            pretty(&json!({
                "tool": "npreproj",
                "version": env!("CARGO_PKG_VERSION"),
                "schema": SCHEMA,
                "command": "selftest",
                "seed": cli.seed,
                "passed": passed,
                "criteria": rs,
            }))
        }
    };
    Output { code: if passed { EXIT_OK } else { EXIT_FALSE }, stdout, stderr: String::new() }
}
