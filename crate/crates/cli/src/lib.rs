//! Argument parsing and dispatch for the `icanon` binary. `run` returns the rendered output
//! and exit code so it can be tested without spawning a process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::{json, Value};

use icanon::canonical::{
    canonical_table, coincide_a, coincide_b, coincide_d, quasi_r_consistency, verify_upsilon_intertwine,
    CanKind, CanTable, CanonicalError, Flavor,
};
use icanon::flaggeo::{
    enumerate_partial_flags, iwahori_check, partial_flag_duality_check, FlagError, FlagTable,
};
use icanon::hecke::{
    kl_basis_in_order, parabolic_table, type_d_kl_embedding, Basis, HeckeError, HeckeParams, KlTable,
};
use icanon::io::{can_latex, can_text, kl_latex, kl_text, CanDoc, KlDoc, QuasiKDoc, SCHEMA};
use icanon::iqg::{quasi_k_rank1, verify_ischur_commute, verify_quasi_k, verify_serre_i, IParams, IqgError};
use icanon::laurent::LaurentPoly;
use icanon::qtensor::{
    verify_jimbo, verify_quantum_relations, verify_quasi_r, verify_schur_commute, verify_serre_example,
    LetterDisplay, TensorError,
};
use icanon::report::Report;
use icanon::weyl::{self, parse_group, Kind, WeylError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "icanon",
    version,
    about = "Kazhdan-Lusztig, canonical and i-canonical bases in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// How tensor letters are printed.
    #[arg(long, global = true, value_enum, default_value_t = Display::Half)]
    pub display: Display,
    /// Cap on N^m; same effect as ICANON_MAX_DIM.
    #[arg(long, global = true)]
    pub max_dim: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Display {
    Half,
    Int,
    Classic,
}

impl From<Display> for LetterDisplay {
    fn from(d: Display) -> Self {
        match d {
            Display::Half => LetterDisplay::Half,
            Display::Int => LetterDisplay::Int,
            Display::Classic => LetterDisplay::Classic,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kazhdan-Lusztig basis {C_w}.
    Kl(KlArgs),
    /// Dual Kazhdan-Lusztig basis {L_w}.
    DualKl(KlArgs),
    /// Parabolic KL basis on the module induced from the trivial module of W_J.
    ParabolicKl(ParabolicArgs),
    /// Canonical basis of V^(x)m (type A), or the i-canonical basis with --k.
    Canonical(CanArgs),
    /// i-canonical basis of V^(x)m.
    Icanonical(ICanArgs),
    /// Rank-one quasi K-matrix coefficients c_0..c_d.
    QuasiK(QuasiKArgs),
    /// Run a verification suite and emit a report.
    Verify(VerifyArgs),
    /// Flag counts and convolution constants over F_q.
    Geometry(GeometryArgs),
}

#[derive(Debug, Args)]
pub struct KlArgs {
    /// Weyl group, e.g. S3, B2, D3.
    #[arg(long)]
    pub group: String,
    /// p = q^k for type B.
    #[arg(long)]
    pub k: Option<i32>,
    /// Fail unless every coefficient has non-negative integer coefficients.
    #[arg(long)]
    pub strict_positivity: bool,
}

#[derive(Debug, Args)]
pub struct ParabolicArgs {
    #[command(flatten)]
    pub kl: KlArgs,
    /// Generators of W_J, comma separated.
    #[arg(long = "J", value_delimiter = ',')]
    pub j: Vec<usize>,
    /// Emit the dual basis {L^J}.
    #[arg(long)]
    pub dual: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TensorType {
    A,
    B,
    D,
}

#[derive(Debug, Args)]
pub struct CanArgs {
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Switch to the i-canonical basis with p = q^k.
    #[arg(long)]
    pub k: Option<i32>,
    /// A: canonical; B: i-canonical (k defaults to 1); D: i-canonical at k = 0.
    #[arg(long = "type", value_enum)]
    pub ty: Option<TensorType>,
    /// Emit the dual basis.
    #[arg(long)]
    pub dual: bool,
    #[arg(long)]
    pub strict_positivity: bool,
}

#[derive(Debug, Args)]
pub struct ICanArgs {
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub k: i32,
    #[arg(long)]
    pub dual: bool,
    #[arg(long)]
    pub strict_positivity: bool,
}

#[derive(Debug, Args)]
pub struct QuasiKArgs {
    #[arg(long, default_value_t = 1)]
    pub k: i32,
    /// Highest coefficient index.
    #[arg(long, default_value_t = 6)]
    pub d: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Jimbo,
    Ischur,
    CoincideA,
    CoincideB,
    CoincideD,
    QuasiR,
    QuasiK,
    Geometry,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Reduced grid.
    #[arg(long)]
    pub quick: bool,
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<i32>,
    /// Field size for the geometry suite.
    #[arg(long)]
    pub q: Option<u32>,
    /// Highest quasi K-matrix coefficient checked.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GeometryArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Also count N-step partial flags.
    #[arg(long = "N")]
    pub n: Option<usize>,
}

/// What the binary prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(code: i32, msg: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: msg.into(), code }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Capacity(String),
    Compute(String),
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn from_tensor(e: TensorError) -> CliError {
    match e {
        TensorError::Capacity { .. } => CliError::Capacity(e.to_string()),
        TensorError::BadLabel { .. } | TensorError::BadIndex(_) | TensorError::Empty => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Compute(e.to_string()),
    }
}

fn from_weyl(e: WeylError) -> CliError {
    match e {
        WeylError::Capacity { .. } => CliError::Capacity(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn from_hecke(e: HeckeError) -> CliError {
    match e {
        HeckeError::Weyl(w) => from_weyl(w),
        HeckeError::Invalid(s) => CliError::Usage(s),
        e => CliError::Compute(e.to_string()),
    }
}

fn from_iqg(e: IqgError) -> CliError {
    match e {
        IqgError::Tensor(t) => from_tensor(t),
        IqgError::DegreeTooLarge(_) => CliError::Capacity(e.to_string()),
        IqgError::BadLabel(..) => CliError::Usage(e.to_string()),
        e => CliError::Compute(e.to_string()),
    }
}

fn from_canonical(e: CanonicalError) -> CliError {
    match e {
        CanonicalError::Tensor(t) => from_tensor(t),
        CanonicalError::Hecke(h) => from_hecke(h),
        CanonicalError::Weyl(w) => from_weyl(w),
        CanonicalError::Iqg(i) => from_iqg(i),
        e => CliError::Compute(e.to_string()),
    }
}

fn from_flag(e: FlagError) -> CliError {
    match e {
        FlagError::Capacity { .. } => CliError::Capacity(e.to_string()),
        e => CliError::Usage(e.to_string()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::error(code, text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Kl(a) => run_kl(cli, a, Basis::C, &[], false),
        Command::DualKl(a) => run_kl(cli, a, Basis::L, &[], false),
        Command::ParabolicKl(a) => {
            let basis = if a.dual { Basis::L } else { Basis::C };
            run_kl(cli, &a.kl, basis, &a.j, true)
        }
        Command::Canonical(a) => {
            canonical_kind(a).and_then(|kind| run_canonical(cli, kind, a.n, a.m, a.strict_positivity))
        }
        Command::Icanonical(a) => {
            let kind = if a.dual { CanKind::DualICanonical(a.k) } else { CanKind::ICanonical(a.k) };
            run_canonical(cli, kind, a.n, a.m, a.strict_positivity)
        }
        Command::QuasiK(a) => run_quasi_k(cli, a).map(Outcome::ok),
        Command::Verify(a) => run_verify(cli, a),
        Command::Geometry(a) => run_geometry(cli, a).map(Outcome::ok),
    };
    match result {
        Ok(out) => out,
        Err(CliError::Usage(m)) => Outcome::error(EXIT_USAGE, format!("error: {m}\n")),
        Err(CliError::Capacity(m)) => Outcome::error(EXIT_CAPACITY, format!("error: {m}\n")),
        Err(CliError::Compute(m)) => Outcome::error(EXIT_FAIL, format!("error: {m}\n")),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

fn is_nonnegative(p: &LaurentPoly) -> bool {
    p.terms().iter().all(|(_, c)| !c.is_negative())
}

fn hecke_params(group: &str, k: Option<i32>) -> CliResult<HeckeParams> {
    let (kind, rank) = parse_group(group).map_err(from_weyl)?;
    match (kind, k) {
        (Kind::B, k) => Ok(HeckeParams::new(kind, rank, k.unwrap_or(1))),
        (_, Some(_)) => Err(usage("--k only applies to type B groups")),
        (_, None) => Ok(HeckeParams::equal(kind, rank)),
    }
}

fn run_kl(cli: &Cli, a: &KlArgs, basis: Basis, j: &[usize], parabolic: bool) -> CliResult<Outcome> {
    let params = hecke_params(&a.group, a.k)?;
    if a.strict_positivity && basis == Basis::L {
        return Err(usage("--strict-positivity applies to the C basis only"));
    }
    let gens = params.generators();
    if let Some(bad) = j.iter().find(|i| !gens.contains(i)) {
        return Err(usage(format!("{bad} is not a generator of {}", params.name())));
    }
    let table = if parabolic {
        parabolic_table(params, j, basis).map_err(from_hecke)?
    } else {
        let order = weyl::enumerate(params.kind, params.rank).map_err(from_weyl)?;
        let table = kl_basis_in_order(params, basis, order).map_err(from_hecke)?;
        if params.kind == Kind::D && basis == Basis::C {
            // the image in the type B algebra at p = 1 must stay bar-invariant
            type_d_kl_embedding(params.rank).map_err(from_hecke)?;
        }
        table
    };
    if a.strict_positivity {
        if let Some(e) = table.entries.iter().find(|e| !e.coeffs.values().all(is_nonnegative)) {
            return Ok(Outcome {
                stdout: String::new(),
                stderr: format!("negative coefficient in {}_{{{}}}\n", basis.letter(), e.index.word_string()),
                code: EXIT_FAIL,
            });
        }
    }
    Ok(Outcome::ok(render_kl(cli.format, &table)))
}

fn render_kl(format: Format, table: &KlTable) -> String {
    match format {
        Format::Text => kl_text(table),
        Format::Latex => kl_latex(table),
        Format::Json => to_json(&KlDoc::from_table(table)),
    }
}

fn canonical_kind(a: &CanArgs) -> CliResult<CanKind> {
    let dual = a.dual;
    let flavor = match (a.ty, a.k) {
        (None, None) | (Some(TensorType::A), None) => Flavor::A,
        (Some(TensorType::A), Some(_)) => return Err(usage("--k conflicts with --type A")),
        (None, Some(k)) | (Some(TensorType::B), Some(k)) => Flavor::Iota(k),
        (Some(TensorType::B), None) => Flavor::Iota(1),
        (Some(TensorType::D), None) | (Some(TensorType::D), Some(0)) => Flavor::Iota(0),
        (Some(TensorType::D), Some(_)) => return Err(usage("--type D fixes k = 0")),
    };
    let basis = if dual { Basis::L } else { Basis::C };
    Ok(CanKind::new(flavor, basis))
}

fn run_canonical(cli: &Cli, kind: CanKind, n: usize, m: usize, strict: bool) -> CliResult<Outcome> {
    if strict && matches!(kind, CanKind::DualCanonical | CanKind::DualICanonical(_)) {
        return Err(usage("--strict-positivity applies to the canonical basis only"));
    }
    let table = canonical_table(kind, n, m).map_err(from_canonical)?;
    if strict {
        if let Some(e) = table.entries.iter().find(|e| !e.element.terms().values().all(is_nonnegative)) {
            let label = e.index.display(n, LetterDisplay::Half);
            return Ok(Outcome {
                stdout: String::new(),
                stderr: format!("negative coefficient in b{label}\n"),
                code: EXIT_FAIL,
            });
        }
    }
    Ok(Outcome::ok(render_can(cli.format, cli.display.into(), &table)))
}

fn render_can(format: Format, mode: LetterDisplay, table: &CanTable) -> String {
    match format {
        Format::Text => can_text(table, mode),
        Format::Latex => can_latex(table, mode),
        Format::Json => to_json(&CanDoc::from_table(table, mode)),
    }
}

fn run_quasi_k(cli: &Cli, a: &QuasiKArgs) -> CliResult<String> {
    let coeffs = quasi_k_rank1(a.k, a.d).map_err(from_iqg)?;
    let doc = QuasiKDoc::new(a.k, &coeffs);
    Ok(match cli.format {
        Format::Text => doc.text(),
        Format::Latex => doc.latex(),
        Format::Json => to_json(&doc),
    })
}

/// Parameter grid of a suite: explicit values win over the default range.
fn grid<T: Copy>(explicit: Option<T>, full: &[T], quick: &[T], is_quick: bool) -> Vec<T> {
    match explicit {
        Some(v) => vec![v],
        None if is_quick => quick.to_vec(),
        None => full.to_vec(),
    }
}

fn run_suite(suite: Suite, a: &VerifyArgs, out: &mut Vec<Report>) -> CliResult<()> {
    let quick = a.quick;
    let ns = |full: &[usize], q: &[usize]| grid(a.n, full, q, quick);
    let ms = |full: &[usize], q: &[usize]| grid(a.m, full, q, quick);
    let ks = |full: &[i32], q: &[i32]| grid(a.k, full, q, quick);
    match suite {
        Suite::Relations => {
            for n in ns(&[1, 2, 3, 4], &[2, 3]) {
                for m in ms(&[1, 2, 3], &[1, 2]) {
                    out.push(verify_quantum_relations(n, m).map_err(from_tensor)?);
                    out.push(verify_schur_commute(n, m).map_err(from_tensor)?);
                    if n == 3 {
                        out.push(verify_serre_example(m).map_err(from_tensor)?);
                    }
                }
            }
        }
        Suite::Jimbo => {
            for n in ns(&[1, 2, 3, 4], &[2, 3]) {
                for m in ms(&[1, 2, 3], &[2]) {
                    out.push(verify_jimbo(n, m).map_err(from_tensor)?);
                }
            }
        }
        Suite::Ischur => {
            for n in ns(&[3, 4, 5], &[3, 4]) {
                for m in ms(&[1, 2, 3], &[1, 2]) {
                    for k in ks(&[0, 1, 2], &[0, 1]) {
                        let p = IParams::new(n, k);
                        out.push(verify_ischur_commute(p, m).map_err(from_iqg)?);
                        out.push(verify_serre_i(p, m).map_err(from_iqg)?);
                    }
                }
            }
        }
        Suite::CoincideA => {
            for n in ns(&[1, 2, 3, 4], &[2, 3]) {
                for m in ms(&[1, 2, 3, 4], &[1, 2, 3]) {
                    out.push(coincide_a(n, m).map_err(from_canonical)?);
                }
            }
        }
        Suite::CoincideB | Suite::CoincideD => {
            for n in ns(&[1, 2, 3, 4], &[2, 3]) {
                for m in ms(&[1, 2, 3], &[1, 2]) {
                    let r = if suite == Suite::CoincideB { coincide_b(n, m) } else { coincide_d(n, m) };
                    out.push(r.map_err(from_canonical)?);
                }
            }
        }
        Suite::QuasiR => {
            for n in ns(&[1, 2, 3], &[2]) {
                for m in ms(&[2, 3], &[2]) {
                    out.push(verify_quasi_r(n, m).map_err(from_tensor)?);
                    out.push(quasi_r_consistency(n, m).map_err(from_canonical)?);
                }
            }
        }
        Suite::QuasiK => {
            let d = a.d.unwrap_or(if quick { 4 } else { 8 });
            for k in ks(&[0, 1, 2], &[0, 1]) {
                out.push(verify_quasi_k(k, d).map_err(from_iqg)?);
            }
            let (n, m) = (a.n.unwrap_or(3), a.m.unwrap_or(2));
            let k = a.k.unwrap_or(1);
            out.push(verify_upsilon_intertwine(n, m, k).map_err(from_canonical)?);
        }
        Suite::Geometry => {
            for m in ms(&[1, 2, 3], &[1, 2]) {
                for q in grid(a.q, &[2, 3], &[2], quick) {
                    out.push(iwahori_check(m, q).map_err(from_flag)?);
                }
            }
            let (n, m, q) = (a.n.unwrap_or(2), a.m.unwrap_or(2), a.q.unwrap_or(2));
            out.push(partial_flag_duality_check(n, m, q).map_err(from_flag)?);
        }
        Suite::All => {
            for s in [
                Suite::Relations,
                Suite::Jimbo,
                Suite::Ischur,
                Suite::CoincideA,
                Suite::CoincideB,
                Suite::CoincideD,
                Suite::QuasiR,
                Suite::QuasiK,
                Suite::Geometry,
            ] {
                run_suite(s, a, out)?;
            }
        }
    }
    Ok(())
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn run_verify(cli: &Cli, a: &VerifyArgs) -> CliResult<Outcome> {
    if a.q.is_some() && !matches!(a.suite, Suite::Geometry | Suite::All) {
        return Err(usage("--q only applies to the geometry suite"));
    }
    if a.k.is_some() && !matches!(a.suite, Suite::Ischur | Suite::QuasiK | Suite::All) {
        return Err(usage("--k only applies to the ischur and quasi-k suites"));
    }
    if a.d.is_some() && !matches!(a.suite, Suite::QuasiK | Suite::All) {
        return Err(usage("--d only applies to the quasi-k suite"));
    }
    let mut reports = Vec::new();
    run_suite(a.suite, a, &mut reports)?;
    let passed = reports.iter().all(Report::passed);
    let stdout = match cli.format {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "suite": suite_name(a.suite),
            "quick": a.quick,
            "status": if passed { "ok" } else { "fail" },
            "reports": reports.iter().map(Report::to_json).collect::<Vec<Value>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(s, "{}", r.summary_line()).unwrap();
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            writeln!(s, "suite {}: {} reports, {failed} failed", suite_name(a.suite), reports.len()).unwrap();
            s
        }
        Format::Latex => return Err(usage("verify supports text and json output")),
    };
    Ok(Outcome { stdout, stderr: String::new(), code: if passed { EXIT_OK } else { EXIT_FAIL } })
}

fn run_geometry(cli: &Cli, a: &GeometryArgs) -> CliResult<String> {
    let table = FlagTable::new(a.m, a.q).map_err(from_flag)?;
    let elts = weyl::enumerate(Kind::A, a.m).map_err(from_weyl)?;
    let cells: Vec<(String, usize)> =
        elts.iter().map(|w| (w.word_string(), table.pos[0].iter().filter(|x| *x == w).count())).collect();
    let mut products = Vec::new();
    for i in weyl::generators(Kind::A, a.m) {
        let s = weyl::WeylElt::from_word(Kind::A, a.m, &[i]).map_err(from_weyl)?;
        for w in &elts {
            let Some(k) = table.convolution(&s, w) else {
                return Err(CliError::Compute(format!("convolution of s{i} and {w} is ill-defined")));
            };
            let terms: Vec<(String, u64)> = k.into_iter().map(|(v, c)| (v.word_string(), c)).collect();
            products.push((i, w.word_string(), terms));
        }
    }
    let partial = match a.n {
        Some(n) => Some(enumerate_partial_flags(n, a.m, a.q).map_err(from_flag)?.len()),
        None => None,
    };
    Ok(match cli.format {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "kind": "geometry",
            "m": a.m,
            "q": a.q,
            "flags": table.flags.len(),
            "partial_flags": partial.map(|p| json!({"N": a.n, "count": p})),
            "cells": cells.iter().map(|(w, c)| json!({"w": w, "size": c})).collect::<Vec<_>>(),
            "generator_products": products.iter().map(|(i, w, t)| json!({
                "s": i, "w": w, "terms": t.iter().map(|(v, c)| json!([v, c])).collect::<Vec<_>>()
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!("# complete flags in F_{}^{}: {}\n", a.q, a.m, table.flags.len());
            if let (Some(n), Some(p)) = (a.n, partial) {
                writeln!(s, "# {n}-step partial flags: {p}").unwrap();
            }
            for (w, c) in &cells {
                writeln!(s, "|O_{{{w}}}| = {c}").unwrap();
            }
            for (i, w, t) in &products {
                let rhs: Vec<String> = t.iter().map(|(v, c)| format!("{c} T_{{{v}}}")).collect();
                writeln!(s, "T_{{s{i}}} * T_{{{w}}} = {}", rhs.join(" + ")).unwrap();
            }
            s
        }
        Format::Latex => return Err(usage("geometry supports text and json output")),
    })
}
