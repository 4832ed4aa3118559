//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on invalid input (including unparseable
//! arguments), 3 when an internal consistency check fails or a verification
//! suite reports failures. Output is a single JSON document per run unless
//! `--format text` is given; identical arguments give byte-identical output.

use crate::affine;
use crate::cache::{cache_key, ResultCache};
use crate::coproduct::{self, CoeffTable};
use crate::error::Error;
use crate::permutations::{AffinePermutation, Partition, Permutation, Triple};
use crate::polyring::Poly;
use crate::schubert::{self, EnrichedSchubert};
use crate::suites::{self, SuiteReport};
use crate::typec;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "schubcalc", version, about = "Exact Schubert calculus on infinite flag varieties")]
pub struct Cli {
    /// Largest polynomial degree a job may produce or consume.
    #[arg(long, global = true, default_value_t = 12)]
    pub degree_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for the on-disk result cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enriched Schubert polynomials.
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Coproduct and co-module coefficients.
    #[command(subcommand)]
    Coproduct(CoproductCmd),
    /// Type C presentation.
    #[command(subcommand)]
    Typec(TypecCmd),
    /// Affine presentation.
    #[command(subcommand)]
    Affine(AffineCmd),
    /// Identity suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
pub struct PermArg {
    /// Permutation window, e.g. "[1,0]@0".
    #[arg(long, allow_hyphen_values = true)]
    pub perm: String,
}

#[derive(Args, Debug)]
pub struct LambdaArg {
    /// Partition, e.g. 3,1.
    #[arg(long)]
    pub lambda: String,
}

#[derive(Subcommand, Debug)]
pub enum SchubertCmd {
    /// ∑_w by back-stabilization.
    Compute(PermArg),
    /// Stanley symmetric function F_w(c;y).
    Stanley(PermArg),
    /// Kempf–Laksov determinant for a partition.
    KempfLaksov(LambdaArg),
    /// Vexillary determinant for a triple (k, p, q).
    Vexillary {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        p: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        q: Vec<i64>,
    },
    /// ∑_w by the interpolation oracle.
    Interpolate(PermArg),
}

#[derive(Subcommand, Debug)]
pub enum CoproductCmd {
    /// Dual Littlewood–Richardson polynomials of a partition.
    DualLr(LambdaArg),
    /// Double Edelman–Greene coefficients of a permutation.
    Comodule(PermArg),
    /// Two-torus dual Littlewood–Richardson polynomials.
    TwoTorus(LambdaArg),
}

#[derive(Subcommand, Debug)]
pub enum TypecCmd {
    /// The relation C_pp.
    Relation {
        #[arg(short)]
        p: usize,
    },
    /// Coordinates over z^a c_λ, λ strict, of a polynomial in c and z.
    NormalForm {
        /// File holding the polynomial as text or JSON; "-" reads stdin.
        #[arg(long)]
        input: PathBuf,
    },
    /// Check that C_pp maps to zero under the embedding.
    EmbedCheck {
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        nx: usize,
        #[arg(long, default_value_t = 3)]
        ny: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum AffineCmd {
    /// Bott relations m_λ(ξ|ȳ), λ_1 ≥ n.
    Relations {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
    },
    /// Check the relations at affine fixed points.
    Verify {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        degree: usize,
    },
    /// The series c^w at an affine permutation given by w(1..n).
    Localize {
        #[arg(short)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Vec<i64>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct WindowBounds {
    #[arg(long, default_value_t = 3)]
    pub max_length: usize,
    #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
    pub hi: i64,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Cauchy formula.
    Cauchy(WindowBounds),
    /// Inverse formula.
    Inverse(WindowBounds),
    /// ω-equivariance.
    Duality(WindowBounds),
    /// γ-equivariance.
    Shift(WindowBounds),
    /// Graham certificates for dual Littlewood–Richardson polynomials.
    Graham {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Bott relations at affine fixed points.
    Localization {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// back_stabilize = interpolation = Kempf–Laksov on Grassmannian classes.
    Oracle {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
}

/// Parse `args` (including the program name), run, and write to `out`/`err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    run_cli(&cli, out, err)
}

pub fn run_cli(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(cli)),
            Err(e) => Err(Failure::Input(format!("thread pool: {e}"))),
        },
        None => dispatch(cli),
    };
    match result {
        Ok(Outcome { body, ok }) => {
            let _ = out.write_all(body.as_bytes());
            if ok {
                0
            } else {
                3
            }
        }
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Input(m) => (2, "invalid_input", m),
                Failure::Internal(m) => (3, "internal", m),
            };
            let _ = writeln!(err, "{}", json!({ "error": kind, "message": msg }));
            code
        }
    }
}

struct Outcome {
    body: String,
    ok: bool,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Job = std::result::Result<Outcome, Failure>;

fn perm(s: &str) -> std::result::Result<Permutation, Failure> {
    Ok(Permutation::parse(s)?)
}

fn partition(s: &str) -> std::result::Result<Partition, Failure> {
    Ok(Partition::parse(s)?)
}

fn require_degree(cli: &Cli, needed: usize) -> std::result::Result<(), Failure> {
    if needed > cli.degree_cap {
        return Err(Error::CapExceeded { needed, cap: cli.degree_cap }.into());
    }
    Ok(())
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Text => "text",
    }
}

/// Compute the output of a deterministic job, going through the cache when one
/// is configured. Only successful outputs are cached.
fn cached(cli: &Cli, op: &str, input: &str, f: impl FnOnce() -> std::result::Result<String, Failure>) -> Job {
    let canonical = format!("{input};format={}", format_name(cli.format));
    let body = match &cli.cache_dir {
        Some(dir) => {
            let cache = ResultCache::open(dir).map_err(|e| Failure::Input(format!("cache directory: {e}")))?;
            cache.get_or_insert_with(&cache_key(op, &canonical), f)?
        }
        None => f()?,
    };
    Ok(Outcome { body, ok: true })
}

fn line(s: String) -> String {
    s + "\n"
}

fn schubert_out(cli: &Cli, e: &EnrichedSchubert) -> String {
    match cli.format {
        Format::Json => line(serde_json::to_string(e).expect("serializable")),
        Format::Text => format!("{}: {}\n", e.w, e.poly),
    }
}

fn poly_out(cli: &Cli, p: &Poly) -> String {
    match cli.format {
        Format::Json => line(p.to_json()),
        Format::Text => line(p.to_text()),
    }
}

fn table_out(cli: &Cli, t: &CoeffTable) -> String {
    match cli.format {
        Format::Json => line(t.to_json()),
        Format::Text => t.to_text(),
    }
}

fn report_out(cli: &Cli, reports: &[SuiteReport]) -> Outcome {
    let ok = reports.iter().all(|r| r.ok());
    let body = match cli.format {
        Format::Json => line(serde_json::to_string(reports).expect("serializable")),
        Format::Text => reports.iter().map(|r| r.to_text()).collect(),
    };
    Outcome { body, ok }
}

fn dispatch(cli: &Cli) -> Job {
    match &cli.command {
        Command::Schubert(c) => schubert_cmd(cli, c),
        Command::Coproduct(c) => coproduct_cmd(cli, c),
        Command::Typec(c) => typec_cmd(cli, c),
        Command::Affine(c) => affine_cmd(cli, c),
        Command::Verify(c) => verify_cmd(cli, c),
    }
}

fn schubert_cmd(cli: &Cli, c: &SchubertCmd) -> Job {
    match c {
        SchubertCmd::Compute(a) => {
            let w = perm(&a.perm)?;
            require_degree(cli, w.length())?;
            cached(cli, "schubert.compute", &w.to_string(), || Ok(schubert_out(cli, &schubert::back_stabilize(&w)?)))
        }
        SchubertCmd::Interpolate(a) => {
            let w = perm(&a.perm)?;
            require_degree(cli, w.length())?;
            cached(cli, "schubert.interpolate", &w.to_string(), || {
                Ok(schubert_out(cli, &schubert::interpolation_solve(&w, None)?))
            })
        }
        SchubertCmd::Stanley(a) => {
            let w = perm(&a.perm)?;
            require_degree(cli, w.length())?;
            cached(cli, "schubert.stanley", &w.to_string(), || Ok(poly_out(cli, &schubert::stanley(&w)?)))
        }
        SchubertCmd::KempfLaksov(a) => {
            let lam = partition(&a.lambda)?;
            require_degree(cli, lam.size())?;
            cached(cli, "schubert.kempf-laksov", &lam.to_string(), || {
                Ok(schubert_out(cli, &schubert::kempf_laksov(&lam)))
            })
        }
        SchubertCmd::Vexillary { k, p, q } => {
            let t = Triple::new(k.clone(), p.clone(), q.clone())?;
            require_degree(cli, t.lambda()?.size())?;
            let key = serde_json::to_string(&t).expect("serializable");
            cached(cli, "schubert.vexillary", &key, || Ok(schubert_out(cli, &schubert::vexillary_det(&t)?)))
        }
    }
}

fn coproduct_cmd(cli: &Cli, c: &CoproductCmd) -> Job {
    match c {
        CoproductCmd::DualLr(a) => {
            let lam = partition(&a.lambda)?;
            require_degree(cli, lam.size())?;
            cached(cli, "coproduct.dual-lr", &lam.to_string(), || Ok(table_out(cli, &coproduct::dual_lr(&lam))))
        }
        CoproductCmd::TwoTorus(a) => {
            let lam = partition(&a.lambda)?;
            require_degree(cli, lam.size())?;
            cached(cli, "coproduct.two-torus", &lam.to_string(), || {
                Ok(table_out(cli, &coproduct::two_torus_dual_lr(&lam)))
            })
        }
        CoproductCmd::Comodule(a) => {
            let w = perm(&a.perm)?;
            require_degree(cli, w.length())?;
            cached(cli, "coproduct.comodule", &w.to_string(), || {
                Ok(table_out(cli, &coproduct::expand_comodule(&w)?))
            })
        }
    }
}

fn read_input(path: &PathBuf) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_poly(s: &str) -> std::result::Result<Poly, Failure> {
    let s = s.trim();
    Ok(if s.starts_with('{') { Poly::from_json(s)? } else { Poly::parse(s)? })
}

fn typec_cmd(cli: &Cli, c: &TypecCmd) -> Job {
    match c {
        TypecCmd::Relation { p } => {
            require_degree(cli, 2 * p)?;
            if *p == 0 {
                return Err(Failure::Input("p must be positive".into()));
            }
            cached(cli, "typec.relation", &p.to_string(), || Ok(poly_out(cli, &typec::cpp_relation(*p))))
        }
        TypecCmd::NormalForm { input } => {
            let f = parse_poly(&read_input(input)?)?;
            require_degree(cli, f.degree().unwrap_or(0) as usize)?;
            cached(cli, "typec.normal-form", &f.to_json(), || {
                let nf = typec::gamma_normal_form(&f, cli.degree_cap as u32)?;
                Ok(match cli.format {
                    Format::Json => {
                        let terms: Vec<_> = nf
                            .iter()
                            .map(|(l, c)| json!({ "z": l.z, "lambda": l.lambda, "coeff": c.to_string() }))
                            .collect();
                        line(serde_json::to_string(&terms).expect("serializable"))
                    }
                    Format::Text => nf.iter().map(|(l, c)| format!("z^{} c{} : {}\n", l.z, l.lambda, c)).collect(),
                })
            })
        }
        TypecCmd::EmbedCheck { p, nx, ny } => {
            require_degree(cli, 2 * p)?;
            let res = typec::gamma_embed_check(*p, *nx, *ny);
            let ok = res.is_ok();
            let body = match (cli.format, &res) {
                (Format::Json, Ok(())) => line(json!({ "p": p, "passed": true }).to_string()),
                (Format::Json, Err(w)) => {
                    line(json!({ "p": p, "passed": false, "witness": w.to_json_value() }).to_string())
                }
                (Format::Text, Ok(())) => format!("C_{p}{p}: passed\n"),
                (Format::Text, Err(w)) => format!("C_{p}{p}: FAILED, image {w}\n"),
            };
            Ok(Outcome { body, ok })
        }
    }
}

fn affine_cmd(cli: &Cli, c: &AffineCmd) -> Job {
    match c {
        AffineCmd::Relations { n, max_degree } => {
            require_degree(cli, *max_degree)?;
            if *n == 0 {
                return Err(Failure::Input("n must be positive".into()));
            }
            cached(cli, "affine.relations", &format!("{n};{max_degree}"), || {
                let rels = affine::bott_relations(*n, *max_degree)?;
                Ok(match cli.format {
                    Format::Json => {
                        let v: Vec<_> =
                            rels.iter().map(|(l, r)| json!({ "lambda": l, "relation": r.to_json_value() })).collect();
                        line(serde_json::to_string(&v).expect("serializable"))
                    }
                    Format::Text => rels.iter().map(|(l, r)| format!("m{l} = {r}\n")).collect(),
                })
            })
        }
        AffineCmd::Verify { n, length, degree } => {
            require_degree(cli, *degree)?;
            let r = suites::localization(*n, *length, *degree)?;
            Ok(report_out(cli, &[r]))
        }
        AffineCmd::Localize { n, values } => {
            let w = AffinePermutation::new(*n, values.clone())?;
            let cap = cli.degree_cap;
            cached(cli, "affine.localize", &format!("{n};{values:?};{cap}"), || {
                let s = affine::affine_localize(&w, cap);
                Ok(match cli.format {
                    Format::Json => {
                        let v: Vec<_> = s.components().iter().map(|p| p.to_json_value()).collect();
                        line(serde_json::to_string(&v).expect("serializable"))
                    }
                    Format::Text => s.components().iter().enumerate().map(|(k, p)| format!("c{k} = {p}\n")).collect(),
                })
            })
        }
    }
}

fn window(b: &WindowBounds) -> std::result::Result<Vec<Permutation>, Failure> {
    if b.lo > b.hi {
        return Err(Failure::Input(format!("empty window [{}, {}]", b.lo, b.hi)));
    }
    Ok(suites::exhaustive(b.lo, b.hi, b.max_length))
}

fn verify_cmd(cli: &Cli, c: &VerifyCmd) -> Job {
    let reports = match c {
        VerifyCmd::Cauchy(b) => vec![suites::cauchy(&window(b)?)],
        VerifyCmd::Inverse(b) => vec![suites::inverse(&window(b)?)],
        VerifyCmd::Duality(b) => vec![suites::duality(&window(b)?)],
        VerifyCmd::Shift(b) => vec![suites::shift(&window(b)?)],
        VerifyCmd::Graham { max_size } => {
            require_degree(cli, *max_size)?;
            vec![suites::graham(*max_size)]
        }
        VerifyCmd::Localization { n, length, degree } => {
            require_degree(cli, *degree)?;
            vec![suites::localization(*n, *length, *degree)?]
        }
        VerifyCmd::Oracle { max_size } => {
            require_degree(cli, *max_size)?;
            vec![suites::oracle(*max_size)]
        }
    };
    Ok(report_out(cli, &reports))
}
