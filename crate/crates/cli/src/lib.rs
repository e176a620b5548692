//! Command-line front end for `tpcalc-core`.
//!
//! [`run`] parses arguments, dispatches to the engine and returns the exit
//! code together with everything that would go to stdout and stderr, so the
//! binary and the tests share one code path.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use tpcalc_core::classes::{expand_in_ab, mod2_reduce};
use tpcalc_core::fixtures::{
    codim_contact, codim_tb, descriptor, verify_all, verify_fixture, Basis as StoredBasis, Ell, FixtureRecord,
    FixtureStore, Theory,
};
use tpcalc_core::interpolation::tp_interpolate;
use tpcalc_core::parse::{parse_labelled, parse_poly};
use tpcalc_core::residue::{kts_gf_laurent, localization_tp_a2, ts_residue_preset, KRegion, Preset};
use tpcalc_core::symmetric::{
    groth_normalize, gtp, schur_contract, schur_expand, GrothExpansion, Partition, SchurExpansion,
};
use tpcalc_core::thom_series::{r_to_d_width2, specialize_d, specialize_r, DSeries, RSeries};
use tpcalc_core::{F2Poly, Family, Poly, QPoly, Rat};

pub const FIXTURES_ENV: &str = "TPCALC_FIXTURES";

#[derive(Parser, Debug)]
#[command(name = "tpcalc", version, about = "Exact Thom polynomial and Thom series calculator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Thom polynomial of a singularity at relative dimension l.
    Tp(TpArgs),
    /// Stored Thom series of a singularity.
    Ts(TsArgs),
    /// Solve the interpolation system for a singularity (l = 0 only).
    Interpolate(InterpArgs),
    /// Thom series from the iterated residue formula, or the K-theory
    /// generating function expanded in one regime.
    Residue(ResidueArgs),
    /// The A2 localization sum in source/target classes a_i, b_j.
    Localize(LocalizeArgs),
    /// Convert an expression between the Chern monomial, Schur and
    /// Grothendieck bases.
    Convert(ConvertArgs),
    /// Write a Chern polynomial in source/target classes a_1..a_m, b_1..b_n.
    Evaluate(EvaluateArgs),
    /// Reduce a Chern polynomial mod 2 (c_i -> w_i).
    Mod2(Mod2Args),
    /// Codimension of a contact or order-one Thom-Boardman singularity.
    Codim(CodimArgs),
    /// Run the fixture checks.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Chern,
    Schur,
    Groth,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write the result to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FixtureArgs {
    /// Fixture file to use instead of the embedded one.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TpArgs {
    #[arg(long)]
    pub sing: String,
    #[arg(long = "l", default_value_t = 0)]
    pub ell: u32,
    #[arg(long, value_enum, default_value_t = BasisArg::Chern)]
    pub basis: BasisArg,
    /// Width bound for the Schur expansion.
    #[arg(long)]
    pub width: Option<usize>,
    /// Solve by interpolation with these prototypes.
    #[arg(long, value_delimiter = ',')]
    pub protos: Option<Vec<String>>,
    #[command(flatten)]
    pub fixtures: FixtureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct TsArgs {
    #[arg(long)]
    pub sing: String,
    /// chern gives the d-form, schur the r-form, groth the K-theory series.
    #[arg(long, value_enum, default_value_t = BasisArg::Chern)]
    pub basis: BasisArg,
    #[command(flatten)]
    pub fixtures: FixtureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct InterpArgs {
    #[arg(long)]
    pub sing: String,
    #[arg(long = "l", default_value_t = 0)]
    pub ell: i64,
    #[arg(long, value_delimiter = ',')]
    pub protos: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = BasisArg::Chern)]
    pub basis: BasisArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ResidueArgs {
    #[arg(long, value_parser = parse_preset, conflicts_with = "region", required_unless_present = "region")]
    pub preset: Option<Preset>,
    /// Expansion regime of the K-theory generating function.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
    pub region: Option<u32>,
    /// Index floor for a preset; expansion depth for a region.
    #[arg(long, allow_hyphen_values = true)]
    pub floor: Option<i32>,
    /// Specialize the series at this l.
    #[arg(long = "l", conflicts_with = "region")]
    pub ell: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Args, Debug)]
pub struct LocalizeArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// A Chern polynomial, a sum of s-labels or a sum of g-labels.
    #[arg(allow_hyphen_values = true)]
    pub expr: String,
    #[arg(long, value_enum)]
    pub basis: BasisArg,
    #[arg(long)]
    pub width: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A polynomial given either as text or as a Thom polynomial.
#[derive(Args, Debug)]
pub struct PolySource {
    #[arg(allow_hyphen_values = true, required_unless_present = "sing", conflicts_with = "sing")]
    pub expr: Option<String>,
    #[arg(long)]
    pub sing: Option<String>,
    #[arg(long = "l", default_value_t = 0)]
    pub ell: u32,
    #[command(flatten)]
    pub fixtures: FixtureArgs,
}

#[derive(Args, Debug)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub source: PolySource,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct Mod2Args {
    #[command(flatten)]
    pub source: PolySource,
    /// Expand in a_1..a_m, b_1..b_n before reducing.
    #[arg(long, requires = "n")]
    pub m: Option<u32>,
    #[arg(long, requires = "m")]
    pub n: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CodimArgs {
    #[arg(long, required_unless_present = "tb", conflicts_with = "tb")]
    pub sing: Option<String>,
    #[arg(long)]
    pub tb: Option<u32>,
    #[arg(long = "l")]
    pub ell: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Restrict to one fixture or check id.
    pub id: Option<String>,
    #[command(flatten)]
    pub fixtures: FixtureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

fn math<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Math(e.to_string())
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// What a command produced.
#[derive(Debug)]
pub enum Output {
    Poly(QPoly),
    F2(F2Poly),
    Schur(SchurExpansion),
    Groth(GrothExpansion),
    DSeries(DSeries),
    RSeries(RSeries),
    Laurent(BTreeMap<(i32, i32), Rat>),
    Int(i64),
    Verify { text: String, json: Value },
}

/// Result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run the command.
/// `env_fixtures` is the value of `TPCALC_FIXTURES`, if set.
pub fn run<I, T>(args: I, env_fixtures: Option<PathBuf>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut notes = Vec::new();
    let result = execute(&cli.command, env_fixtures, &mut notes);
    let mut out = Outcome::default();
    for n in notes {
        out.stderr.push_str(&format!("note: {n}\n"));
    }
    match result {
        Ok((output, gate_ok)) => {
            let opts = output_args(&cli.command);
            let mut text = render(&output, opts.format);
            text.push('\n');
            match &opts.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        out.stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                        out.code = 2;
                        return out;
                    }
                }
                None => out.stdout = text,
            }
            out.code = if gate_ok { 0 } else { 1 };
        }
        Err(e) => {
            out.stderr.push_str(&format!("error: {e}\n"));
            out.code = e.exit_code();
        }
    }
    out
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Tp(a) => &a.output,
        Command::Ts(a) => &a.output,
        Command::Interpolate(a) => &a.output,
        Command::Residue(a) => &a.output,
        Command::Localize(a) => &a.output,
        Command::Convert(a) => &a.output,
        Command::Evaluate(a) => &a.output,
        Command::Mod2(a) => &a.output,
        Command::Codim(a) => &a.output,
        Command::Verify(a) => &a.output,
    }
}

fn load_store(flag: &FixtureArgs, env: Option<PathBuf>) -> Result<FixtureStore, CliError> {
    match flag.fixtures.clone().or(env) {
        Some(path) => FixtureStore::load(&path).map_err(usage),
        None => Ok(FixtureStore::embedded()),
    }
}

// The bool is false when the command ran but reports a failure (verify).
fn execute(cmd: &Command, env: Option<PathBuf>, notes: &mut Vec<String>) -> Result<(Output, bool), CliError> {
    let out = match cmd {
        Command::Tp(a) => {
            if a.basis == BasisArg::Groth {
                let store = load_store(&a.fixtures, env)?;
                return Ok((Output::Groth(ktp(&store, &a.sing, a.ell, notes)?), true));
            }
            let p = match &a.protos {
                Some(names) => interpolate(&a.sing, a.ell as i64, Some(names))?,
                None => {
                    let store = load_store(&a.fixtures, env)?;
                    tp(&store, &a.sing, a.ell, notes)?
                }
            };
            in_basis(p, a.basis, a.width)?
        }
        Command::Ts(a) => {
            let store = load_store(&a.fixtures, env)?;
            ts(&store, &a.sing, a.basis, notes)?
        }
        Command::Interpolate(a) => {
            let p = interpolate(&a.sing, a.ell, a.protos.as_deref())?;
            in_basis(p, a.basis, None)?
        }
        Command::Residue(a) => residue(a)?,
        Command::Localize(a) => Output::Poly(localization_tp_a2(a.m, a.n).map_err(math)?),
        Command::Convert(a) => convert(&a.expr, a.basis, a.width)?,
        Command::Evaluate(a) => {
            let p = source_poly(&a.source, env, notes)?;
            Output::Poly(expand_in_ab(&p, a.m, a.n).map_err(math)?)
        }
        Command::Mod2(a) => {
            let mut p = source_poly(&a.source, env, notes)?;
            if let (Some(m), Some(n)) = (a.m, a.n) {
                p = expand_in_ab(&p, m, n).map_err(math)?;
            }
            Output::F2(mod2_reduce(&p).map_err(math)?)
        }
        Command::Codim(a) => match (&a.sing, a.tb) {
            (_, Some(i)) => Output::Int(codim_tb(i, a.ell) as i64),
            (Some(name), None) => {
                let d = descriptor(name).ok_or_else(|| CliError::Math(format!("no codimension data for {name}")))?;
                Output::Int(codim_contact(&d, a.ell as i64).map_err(math)?)
            }
            (None, None) => return Err(CliError::Usage("give --sing or --tb".into())),
        },
        Command::Verify(a) => {
            let store = load_store(&a.fixtures, env)?;
            let checks = match &a.id {
                Some(id) => verify_fixture(&store, id).map_err(usage)?,
                None => verify_all(&store).checks,
            };
            let gating_failures = checks.iter().filter(|c| c.gating && !c.passed).count();
            let mut text: Vec<String> = checks.iter().map(|c| c.to_string()).collect();
            text.push(format!("{} checks, {} gating failures", checks.len(), gating_failures));
            let json = Value::Array(
                checks
                    .iter()
                    .map(|c| json!({"id": c.id, "passed": c.passed, "gating": c.gating, "detail": c.detail}))
                    .collect(),
            );
            return Ok((
                Output::Verify {
                    text: text.join("\n"),
                    json,
                },
                gating_failures == 0,
            ));
        }
    };
    Ok((out, true))
}

fn in_basis(p: QPoly, basis: BasisArg, width: Option<usize>) -> Result<Output, CliError> {
    match basis {
        BasisArg::Chern => Ok(Output::Poly(p)),
        BasisArg::Schur => Ok(Output::Schur(schur_expand(&p, width).map_err(math)?)),
        BasisArg::Groth => Err(CliError::Usage("no Grothendieck form for this result".into())),
    }
}

fn interpolate<S: AsRef<str>>(sing: &str, ell: i64, protos: Option<&[S]>) -> Result<QPoly, CliError> {
    let names: Option<Vec<&str>> = protos.map(|v| v.iter().map(|s| s.as_ref()).collect());
    tp_interpolate(sing, ell, names.as_deref()).map_err(math)
}

fn sigma_rank(sing: &str) -> Option<u32> {
    sing.strip_prefix("Sigma")?.parse().ok().filter(|&r| r > 0)
}

fn find<'a>(
    store: &'a FixtureStore,
    sing: &str,
    ell: Option<u32>,
    theory: Theory,
    bases: &[StoredBasis],
) -> Option<&'a FixtureRecord> {
    store.records().find(|r| {
        r.singularity == sing
            && r.theory == theory
            && bases.contains(&r.basis)
            && match (&r.ell, ell) {
                (Ell::Value(v), Some(l)) => *v == l,
                (Ell::Series(_), None) => true,
                _ => false,
            }
    })
}

fn note_truncation(r: &FixtureRecord, notes: &mut Vec<String>) {
    if let Some(d) = r.truncation_degree {
        notes.push(format!("{} is known only through degree {d}", r.id));
    }
}

/// Cohomological Thom polynomial, from whichever source covers `sing`.
pub fn tp(store: &FixtureStore, sing: &str, ell: u32, notes: &mut Vec<String>) -> Result<QPoly, CliError> {
    if let Some(r) = sigma_rank(sing) {
        return Ok(gtp(r, ell));
    }
    match sing {
        "A1" => return Ok(gtp(1, ell)),
        "A2" => {
            if ell > 2 {
                return Err(CliError::Math("the stored A2 series covers l <= 2".into()));
            }
            let r = store.get("Ts.A2").map_err(math)?;
            let series = r.to_rseries().map_err(math)?;
            return Ok(schur_contract(&specialize_r(&series, ell).map_err(math)?));
        }
        "A3" | "A4" => {
            if sing == "A4" && ell == 0 {
                return interpolate::<&str>(sing, 0, None);
            }
            let preset: Preset = sing.parse().map_err(math)?;
            let series = ts_residue_preset(preset, -(ell as i32) - 1).map_err(math)?;
            return specialize_d(&series, ell).map_err(math);
        }
        _ => {}
    }
    let rec = find(store, sing, Some(ell), Theory::H, &[StoredBasis::ChernMonomial, StoredBasis::Schur])
        .ok_or_else(|| CliError::Math(format!("no Thom polynomial known for {sing} at l = {ell}")))?;
    note_truncation(rec, notes);
    match rec.basis {
        StoredBasis::Schur => Ok(schur_contract(&rec.to_schur().map_err(math)?)),
        _ => rec.to_chern_poly().map_err(math),
    }
}

fn ktp(store: &FixtureStore, sing: &str, ell: u32, notes: &mut Vec<String>) -> Result<GrothExpansion, CliError> {
    if let Some(r) = sigma_rank(sing) {
        let label = vec![(r + ell) as i32; r as usize];
        return groth_normalize([(label.as_slice(), Rat::from_integer(1.into()))]).map_err(math);
    }
    let rec = find(store, sing, Some(ell), Theory::K, &[StoredBasis::Groth])
        .ok_or_else(|| CliError::Math(format!("no K-theory Thom polynomial known for {sing} at l = {ell}")))?;
    note_truncation(rec, notes);
    rec.to_groth().map_err(math)
}

fn ts(store: &FixtureStore, sing: &str, basis: BasisArg, notes: &mut Vec<String>) -> Result<Output, CliError> {
    let theory = if basis == BasisArg::Groth { Theory::K } else { Theory::H };
    let rec = find(store, sing, None, theory, &[StoredBasis::DSeries, StoredBasis::RSeries])
        .ok_or_else(|| CliError::Math(format!("no stored Thom series for {sing}")))?;
    note_truncation(rec, notes);
    match (rec.basis, basis) {
        (StoredBasis::DSeries, BasisArg::Chern) => Ok(Output::DSeries(rec.to_dseries().map_err(math)?)),
        (StoredBasis::RSeries, BasisArg::Schur | BasisArg::Groth) => Ok(Output::RSeries(rec.to_rseries().map_err(math)?)),
        (StoredBasis::RSeries, BasisArg::Chern) => {
            let r = rec.to_rseries().map_err(math)?;
            let d = r_to_d_width2(&r).map_err(math)?;
            // keys below the stored window are incomplete
            Ok(Output::DSeries(match rec.index_floor() {
                Some(f) => d.truncate_below(f),
                None => d,
            }))
        }
        _ => Err(CliError::Usage(format!("{} is stored in d-form only", rec.id))),
    }
}

fn residue(a: &ResidueArgs) -> Result<Output, CliError> {
    if let Some(k) = a.region {
        let region = KRegion::from_index(k).expect("clap restricts the range");
        let depth = a.floor.unwrap_or(3);
        if depth < 0 {
            return Err(CliError::Usage("the expansion depth must be nonnegative".into()));
        }
        return Ok(Output::Laurent(kts_gf_laurent(region, depth as u32)));
    }
    let preset = a.preset.expect("clap requires --preset or --region");
    let floor = a.floor.unwrap_or(match a.ell {
        Some(l) => -(l as i32) - 1,
        None => -3,
    });
    let series = ts_residue_preset(preset, floor).map_err(math)?;
    match a.ell {
        Some(l) => Ok(Output::Poly(specialize_d(&series, l).map_err(math)?)),
        None => Ok(Output::DSeries(series)),
    }
}

fn labelled_input(text: &str, prefix: u8) -> Option<Vec<(Vec<i32>, Rat)>> {
    let trimmed = text.trim_start().trim_start_matches(['+', '-']).trim_start();
    let starts = trimmed.bytes().find(|b| !b.is_ascii_digit() && *b != b'/' && *b != b'*' && !b.is_ascii_whitespace());
    if starts != Some(prefix) {
        return None;
    }
    parse_labelled(text, prefix).ok()
}

fn convert(expr: &str, basis: BasisArg, width: Option<usize>) -> Result<Output, CliError> {
    if let Some(terms) = labelled_input(expr, b'g') {
        if basis != BasisArg::Groth {
            return Err(CliError::Usage("Grothendieck input converts only to --basis groth".into()));
        }
        return groth_normalize(terms.iter().map(|(l, c)| (l.as_slice(), c.clone())))
            .map(Output::Groth)
            .map_err(math);
    }
    if let Some(terms) = labelled_input(expr, b's') {
        let mut e = SchurExpansion::new();
        for (l, c) in terms {
            e.add(Partition::from_entries(&l).map_err(usage)?, c);
        }
        return match basis {
            BasisArg::Chern => Ok(Output::Poly(schur_contract(&e))),
            BasisArg::Schur => Ok(Output::Schur(e)),
            BasisArg::Groth => Err(CliError::Usage("no conversion from Schur to Grothendieck form".into())),
        };
    }
    let p = parse_poly(expr).map_err(usage)?;
    in_basis(p, basis, width)
}

fn source_poly(src: &PolySource, env: Option<PathBuf>, notes: &mut Vec<String>) -> Result<QPoly, CliError> {
    match (&src.expr, &src.sing) {
        (Some(text), _) => parse_poly(text).map_err(usage),
        (None, Some(sing)) => {
            let store = load_store(&src.fixtures, env)?;
            tp(&store, sing, src.ell, notes)
        }
        (None, None) => Err(CliError::Usage("give an expression or --sing".into())),
    }
}

fn laurent_text(map: &BTreeMap<(i32, i32), Rat>, latex: bool) -> String {
    if map.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    // Reverse so that the highest x1 powers come first.
    for (&(i, j), c) in map.iter().rev() {
        let mut factors = String::new();
        for (v, e) in [(1, i), (2, j)] {
            match (e, latex) {
                (0, _) => {}
                (1, false) => factors.push_str(&format!("x{v}")),
                (1, true) => factors.push_str(&format!("x_{{{v}}}")),
                (e, false) => factors.push_str(&format!("x{v}^{e}")),
                (e, true) => factors.push_str(&format!("x_{{{v}}}^{{{e}}}")),
            }
        }
        let neg = c < &Rat::default();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let unit = abs == Rat::from_integer(1.into());
        if !unit || factors.is_empty() {
            if latex && !abs.is_integer() {
                out.push_str(&format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()));
            } else {
                out.push_str(&abs.to_string());
            }
        }
        out.push_str(&factors);
    }
    out
}

fn terms_json<'a, I>(basis: &str, terms: I) -> Value
where
    I: IntoIterator<Item = (Value, &'a Rat)>,
{
    let terms: Vec<Value> = terms.into_iter().map(|(l, c)| json!([l, c.to_string()])).collect();
    json!({"basis": basis, "terms": terms})
}

fn poly_json<C: tpcalc_core::scalar::Coeff + std::fmt::Display>(p: &Poly<C>) -> Value {
    let families: std::collections::BTreeSet<Family> = p.variables().into_iter().map(|v| v.family).collect();
    let only = |fs: &[Family]| families.iter().all(|f| fs.contains(f));
    let (basis, label): (&str, Box<dyn Fn(&tpcalc_core::Mono) -> Value>) = if only(&[Family::C]) {
        ("chern-monomial", Box::new(|m| json!(m.index_multiset())))
    } else if only(&[Family::W]) {
        ("stiefel-whitney-monomial", Box::new(|m| json!(m.index_multiset())))
    } else if only(&[Family::A, Family::B]) {
        (
            "ab-variables",
            Box::new(|m| {
                let mut l = Vec::new();
                for &(v, e) in m.exps() {
                    let i = if v.family == Family::A { v.index } else { -v.index };
                    l.extend(std::iter::repeat(i).take(e as usize));
                }
                json!(l)
            }),
        )
    } else {
        ("monomial", Box::new(|m| json!(m.to_string())))
    };
    let terms: Vec<Value> = p.terms().map(|(m, c)| json!([label(m), c.to_string()])).collect();
    json!({"basis": basis, "terms": terms})
}

/// Render an output in the requested format, without a trailing newline.
pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Plain => match out {
            Output::Poly(p) => p.to_string(),
            Output::F2(p) => p.to_string(),
            Output::Schur(e) => e.to_string(),
            Output::Groth(e) => e.to_string(),
            Output::DSeries(s) => s.to_string(),
            Output::RSeries(s) => s.to_string(),
            Output::Laurent(m) => laurent_text(m, false),
            Output::Int(n) => n.to_string(),
            Output::Verify { text, .. } => text.clone(),
        },
        Format::Latex => match out {
            Output::Poly(p) => p.to_latex(),
            Output::F2(p) => p.to_latex(),
            Output::Schur(e) => e.to_latex(),
            Output::Groth(e) => e.to_latex(),
            Output::DSeries(s) => s.to_poly().to_latex(),
            Output::RSeries(s) => s.to_latex(),
            Output::Laurent(m) => laurent_text(m, true),
            Output::Int(n) => n.to_string(),
            Output::Verify { text, .. } => text.clone(),
        },
        Format::Json => {
            let v = match out {
                Output::Poly(p) => poly_json(p),
                Output::F2(p) => poly_json(p),
                Output::Schur(e) => terms_json("schur", e.terms().map(|(l, c)| (json!(l.entries()), c))),
                Output::Groth(e) => terms_json("groth", e.terms().map(|(l, c)| (json!(l.entries()), c))),
                Output::DSeries(s) => terms_json("d-series", s.terms().map(|(k, c)| (json!(k), c))),
                Output::RSeries(s) => terms_json("r-series", s.terms().map(|(z, c)| (json!(z.entries()), c))),
                Output::Laurent(m) => terms_json("laurent", m.iter().rev().map(|(&(i, j), c)| (json!([i, j]), c))),
                Output::Int(n) => json!(n),
                Output::Verify { json, .. } => json.clone(),
            };
            v.to_string()
        }
    }
}
