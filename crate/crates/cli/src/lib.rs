//! The `spincc` command line: argument parsing, dispatch to the core
//! library and output rendering.

mod emit;
pub mod golden;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value;
use spincc_core::chern::UcModel;
use spincc_core::geometry::{
    a_hat, eells_kuiper, ek_numbers, ek_p_form, ek_q_form, l_genus, signature_in_q, string_congruence,
    wall_classify, Classes, SmoothabilityReport, WallPair,
};
use spincc_core::spin::{quillen_h, spin8_check, torsion_product, TransitionTable};
use spincc_core::steenrod::BsoModel;
use spincc_core::{Error, Format};

use emit::Output;

/// Exit status and emitted text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unparsable input; exit code 2.
    Input(String),
    /// A computed identity did not hold; exit code 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

type CmdResult = Result<(i32, String), Failure>;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Plain,
    Latex,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Latex => Format::Latex,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "spincc", version, about = "Exact characteristic-class computations for SO, Spin and Spin^c")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: FormatArg,
    /// Largest cohomological degree kept in H*(B_SO(n); Z/2).
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    /// Seed for the randomized property runs of `selftest --prop`.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    P2q,
    Q2p,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenusType {
    Ahat,
    #[value(name = "L")]
    L,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Steenrod square Sq^I of a polynomial in w2..wn.
    Sq {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
        /// Polynomial text, or @FILE to read it from a file.
        #[arg(long)]
        poly: String,
    },
    /// Transgressions sigma(x1), ..., sigma(xK) in H*(B_SO(n); Z/2).
    Sigma {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// The derived sequence w2, w2^(1), ..., w2^(R).
    DerivedW2 {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        steps: u32,
    },
    /// Integral lift of a mod 2 class to Z[p1, ..., e_n] and its torsion part.
    FFree {
        #[arg(long)]
        n: u32,
        /// Polynomial text, or @FILE.
        #[arg(long)]
        poly: String,
    },
    /// delta^r(2y - c1) in Z[y, c1..cK].
    DeltaSeq {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 3)]
        steps: u32,
        /// Also print psi(delta^r) in the P_j notation.
        #[arg(long)]
        pontryagin_view: bool,
    },
    /// Weyl-invariant generators g_r, alpha_r, f_r of Spin(n) and their relation residues.
    Weyl {
        #[arg(long)]
        n: u32,
    },
    /// Pullback of theta_n to Z[y, c1, ..., c_{n/2}].
    Theta {
        #[arg(long)]
        n: u32,
    },
    /// Pontryagin <-> Spin class transition; without --poly prints the rows.
    Transition {
        #[arg(long, default_value_t = 16)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "p2q")]
        direction: Direction,
        /// Polynomial text, or @FILE.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Expands the Spin^c(8) relation in Z[y, c1..c4].
    Spin8Check,
    /// Q_k times delta2(x) in the torsion ideal.
    TorsionMul {
        #[arg(long, default_value_t = 16)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Mod 2 polynomial in w2..wn, or @FILE.
        #[arg(long)]
        x: String,
    },
    /// A-hat or L genus in p1..pm.
    Genus {
        #[arg(long)]
        m: u32,
        #[arg(long = "type", value_enum)]
        kind: GenusType,
    },
    /// Signature of a spin 4m-manifold in q1..qm and the A-hat number alpha_m.
    SignatureQ {
        #[arg(long)]
        m: u32,
        /// Also print the congruence for string manifolds (q1 = 0).
        #[arg(long)]
        string: bool,
    },
    /// Eells-Kuiper invariant mu_k from characteristic numbers of a spin coboundary.
    #[command(group(ArgGroup::new("numbers").required(true).args(["q", "p"])))]
    Ek {
        #[arg(long)]
        k: u32,
        /// Signature of the coboundary.
        #[arg(long, allow_hyphen_values = true)]
        sigma: BigInt,
        /// Numbers in Spin classes, e.g. "q1^2[W]=4".
        #[arg(long)]
        q: Option<String>,
        /// Numbers in Pontryagin classes, e.g. "p1^2[W]=16".
        #[arg(long)]
        p: Option<String>,
    },
    /// Wall pairs (A, b) of 3-connected 8-manifolds.
    Wall {
        #[command(subcommand)]
        action: WallAction,
    },
    /// Runs the golden corpus and the cross-checks.
    Selftest {
        /// Only run corpus entries whose id or group contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Also run the seeded randomized properties.
        #[arg(long)]
        prop: bool,
        /// Cases per property.
        #[arg(long, default_value_t = spincc_core::properties::DEFAULT_CASES)]
        cases: usize,
        /// Use this corpus file instead of the built-in one.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum WallAction {
    /// Smoothability, psc and total Spin class of Wall pairs read from JSON.
    Classify {
        /// JSON file with {"A": [[..]], "b": [..]}.
        #[arg(long)]
        file: PathBuf,
        /// The file holds an array of pairs.
        #[arg(long)]
        batch: bool,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure::Input(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Internal(msg)) => {
            Outcome { code: 1, stdout: String::new(), stderr: format!("internal error: {msg}\n") }
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

/// Inline text, or the contents of a file for `@path`.
fn source_text(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => read_file(Path::new(path)),
        None => Ok(arg.to_string()),
    }
}

fn bso(cli: &Cli, n: u32) -> Result<BsoModel, Failure> {
    Ok(match cli.degree_bound {
        Some(bound) => BsoModel::with_degree_bound(n, bound)?,
        None => BsoModel::new(n)?,
    })
}

fn dispatch(cli: &Cli) -> CmdResult {
    let format: Format = cli.format.into();
    let mut out = Output::new(format, command_name(&cli.command));
    let mut code = 0;
    match &cli.command {
        Command::Sq { n, i, poly } => {
            let m = bso(cli, *n)?;
            let u = m.parse(&source_text(poly)?)?;
            out.poly(format!("Sq^{i}"), &m.sq(*i, &u)?);
        }
        Command::Sigma { n, k } => {
            let m = bso(cli, *n)?;
            for (j, s) in m.sigma(*k)?.iter().enumerate() {
                out.poly(format!("sigma(x{})", j + 1), s);
            }
        }
        Command::DerivedW2 { n, steps } => {
            let m = bso(cli, *n)?;
            let d = m.derived_w2(*steps)?;
            for step in &d.steps {
                let name = if step.index == 0 { "w2".to_string() } else { format!("w2^({})", step.index) };
                out.poly(name, &step.value);
            }
            if let Some(bad) = d.steps.iter().find(|s| !s.certified()) {
                return Err(Failure::Internal(format!("w2^({}) leaves residue {}", bad.index, bad.residue)));
            }
            out.text("certified", true);
        }
        Command::FFree { n, poly } => {
            let m = bso(cli, *n)?;
            let u = m.parse(&source_text(poly)?)?;
            let f = m.f_free(&u)?;
            out.poly("free", &f.free);
            out.poly("torsion", &f.torsion);
        }
        Command::DeltaSeq { k, steps, pontryagin_view } => {
            let m = UcModel::new(*k)?;
            let s = m.delta_sequence(*steps)?;
            for step in &s.steps {
                out.poly(format!("delta^{}", step.index), &step.value);
                if *pontryagin_view {
                    out.poly(format!("psi(delta^{})", step.index), &step.psi);
                }
            }
            if !s.certified() {
                return Err(Failure::Internal("delta recurrence check failed".into()));
            }
            out.text("certified", true);
        }
        Command::Weyl { n } => {
            if *n < 4 || n % 2 != 0 {
                return Err(Failure::Input(format!("weyl needs even n >= 4, got {n}")));
            }
            let m = UcModel::new(n / 2)?;
            let r_max = quillen_h(*n).saturating_sub(1).clamp(1, 3);
            let w = m.weyl_generators(r_max)?;
            for (i, g) in w.g.iter().enumerate() {
                out.poly(format!("g{}", i + 1), g);
            }
            for (i, a) in w.alpha.iter().enumerate() {
                out.poly(format!("alpha{}", i + 1), a);
            }
            for (i, f) in w.f.iter().enumerate() {
                out.poly(format!("f{}", i + 1), f);
            }
            out.poly("2alpha1 - g1", &w.initial_relation);
            for (i, rel) in w.relations.iter().enumerate() {
                out.poly(format!("2alpha{} + alpha{}^2 - f{}", i + 2, i + 1, i + 1), rel);
            }
            if !w.initial_relation.is_zero() || w.relations.iter().any(|r| !r.is_zero()) || w.f != w.f_via_g {
                code = 1;
            }
        }
        Command::Theta { n } => {
            let m = UcModel::new(n / 2)?;
            out.poly(format!("theta{n}"), &m.theta_pullback(*n)?);
        }
        Command::Transition { max_degree, direction, poly } => {
            let t = TransitionTable::new(*max_degree)?;
            match (poly, direction) {
                (None, _) => {
                    for k in 1..=max_degree / 4 {
                        out.poly(format!("p{k}"), t.p_row(k).expect("row within bound"));
                    }
                    for k in 1..=max_degree / 4 {
                        out.poly(format!("q{k}"), t.q_row(k).expect("row within bound"));
                    }
                }
                (Some(text), Direction::P2q) => {
                    let u = spincc_core::QPoly::parse(t.p_ring(), &source_text(text)?)?;
                    let v = t.p_to_q_rational(&u)?;
                    match v.to_integer() {
                        Some(int) => out.poly("result", &int),
                        None => out.poly("result", &v),
                    }
                }
                (Some(text), Direction::Q2p) => {
                    let u = spincc_core::QPoly::parse(t.q_ring(), &source_text(text)?)?;
                    let v = t.q_to_p_rational(&u)?;
                    match v.to_integer() {
                        Some(int) => out.poly("result", &int),
                        None => out.poly("result", &v),
                    }
                }
            }
        }
        Command::Spin8Check => {
            let r = spin8_check(None, None)?;
            out.poly("theta8", &r.theta);
            out.poly("a8", &r.a8);
            out.poly("4theta8 - q2^2 - a8", &r.relation);
            out.poly("-4theta8 + q2^2 - a8", &r.signed_relation);
            out.text("relation holds", r.relation_holds());
            out.text("signed relation holds", r.signed_relation_holds());
            if !r.relation_holds() {
                code = 1;
            }
        }
        Command::TorsionMul { n, k, x } => {
            let m = bso(cli, *n)?;
            let u = m.parse(&source_text(x)?)?;
            let t = torsion_product(&m, *k, &u)?;
            let name = format!("Q{k}*delta2(x)");
            if format == Format::Json {
                out.data(name, t.to_json());
            } else {
                out.text(name, t.render(format));
            }
        }
        Command::Genus { m, kind } => match kind {
            GenusType::Ahat => out.poly(format!("ahat{m}"), &a_hat(*m)?),
            GenusType::L => out.poly(format!("L{m}"), &l_genus(*m)?),
        },
        Command::SignatureQ { m, string } => {
            out.poly("sigma", &signature_in_q(*m)?);
            if m % 2 == 1 {
                out.text("note", format!("alpha{m} is even on a closed spin manifold; assumed, not checked"));
            }
            if *string {
                let (rest, modulus) = string_congruence(*m)?;
                out.poly("string residue", &rest);
                out.text("string modulus", modulus);
                if *m == 4 {
                    out.text("note", "assumes q2 is divisible by 3 when q1 = 0");
                }
            }
        }
        Command::Ek { k, sigma, q, p } => {
            let (classes, text) = match (q, p) {
                (Some(q), None) => (Classes::Q, q),
                (None, Some(p)) => (Classes::P, p),
                _ => unreachable!("clap enforces exactly one of --q and --p"),
            };
            let numbers = ek_numbers(*k, classes, &source_text(text)?)?;
            let form = match classes {
                Classes::P => ek_p_form(*k)?,
                Classes::Q => ek_q_form(*k)?,
            };
            out.poly(format!("mu{k}"), &form);
            out.text(format!("mu{k} mod 1"), eells_kuiper(*k, classes, &numbers, sigma)?);
        }
        Command::Wall { action: WallAction::Classify { file, batch } } => {
            let text = read_file(file)?;
            let pairs = if *batch { WallPair::batch_from_json_str(&text)? } else { vec![WallPair::from_json_str(&text)?] };
            let reports = pairs.iter().map(wall_classify).collect::<Result<Vec<_>, _>>()?;
            if format == Format::Json {
                // the report itself, without the name/value wrapper
                let doc = if *batch { serde_json::to_value(&reports) } else { serde_json::to_value(&reports[0]) };
                let mut s = serde_json::to_string(&doc.expect("report json")).expect("report json");
                s.push('\n');
                return Ok((0, s));
            }
            emit_reports(&mut out, &reports, *batch);
        }
        Command::Selftest { filter, prop, cases, corpus } => {
            let corpus_text = match corpus {
                Some(path) => read_file(path)?,
                None => golden::BUILTIN.to_string(),
            };
            let options = golden::Options { filter: filter.clone(), prop: *prop, cases: *cases, seed: cli.seed };
            let report = golden::selftest(&corpus_text, &options)?;
            return Ok((i32::from(!report.passed()), report.render()));
        }
    }
    Ok((code, out.render()))
}

fn emit_reports(out: &mut Output, reports: &[SmoothabilityReport], batch: bool) {
    for (i, report) in reports.iter().enumerate() {
        let value = serde_json::to_value(report).expect("report json");
        let prefix = if batch { format!("pair{i}.") } else { String::new() };
        if let Value::Object(fields) = value {
            for (key, v) in fields {
                match v {
                    Value::String(s) => out.text(format!("{prefix}{key}"), s),
                    other => out.data(format!("{prefix}{key}"), other),
                }
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Sq { .. } => "sq",
        Command::Sigma { .. } => "sigma",
        Command::DerivedW2 { .. } => "derived-w2",
        Command::FFree { .. } => "f-free",
        Command::DeltaSeq { .. } => "delta-seq",
        Command::Weyl { .. } => "weyl",
        Command::Theta { .. } => "theta",
        Command::Transition { .. } => "transition",
        Command::Spin8Check => "spin8-check",
        Command::TorsionMul { .. } => "torsion-mul",
        Command::Genus { .. } => "genus",
        Command::SignatureQ { .. } => "signature-q",
        Command::Ek { .. } => "ek",
        Command::Wall { .. } => "wall classify",
        Command::Selftest { .. } => "selftest",
    }
}
