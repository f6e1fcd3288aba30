//! Command-line front end. Reports go to the returned `stdout` text, the
//! certificate (if any) to the `--cert-out` path.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::cert::{self, CertificateFile};
use crate::corpus::{self, run_all};
use crate::definability::tbc::{tbc_verify, ObstructionKind};
use crate::definability::{definability_oracle, supersolvable_test, tbc_find, Supersolvable, TbcOutcome};
use crate::lie::{parse_algebra, AlgebraData, GroupPresentation, LieAlgebra, PresentationKind};
use crate::linalg::mat::Mat;
use crate::linalg::scalar::{format_rat, parse_rat, GaussRat, Rat};
use crate::linalg::subspace::Subspace;
use crate::reps::{
    extend_rep, nilpotent_ado, quotient_rep, supersolvable_triangular_rep, torus_zariski_closure, GroupRepData,
    RepError, Representation,
};
use crate::structure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "liedef", version, about = "Exact definability decisions for connected Lie groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Algebra JSON file.
    pub algebra: PathBuf,
    /// Write the certificate JSON here.
    #[arg(long)]
    pub cert_out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresentationArg {
    SimplyConnected,
    Linear,
    Abstract,
}

impl From<PresentationArg> for PresentationKind {
    fn from(p: PresentationArg) -> Self {
        match p {
            PresentationArg::SimplyConnected => PresentationKind::SimplyConnected,
            PresentationArg::Linear => PresentationKind::LinearMatrix,
            PresentationArg::Abstract => PresentationKind::AbstractConnected,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and check antisymmetry and the Jacobi identity.
    Validate(Common),
    /// Derived and lower central series.
    Series(Common),
    /// Solvable radical, as the Killing-orthogonal complement of `[g, g]`.
    Radical(Common),
    /// Largest nilpotent ideal.
    Nilradical(Common),
    /// Levi decomposition into radical and semisimple subalgebra.
    Levi(Common),
    /// Levi subalgebra commuting with a compact torus `k` (default: the
    /// torus part found for the radical).
    CommutingLevi {
        #[command(flatten)]
        common: Common,
        /// Basis vector of k, comma separated; repeat for more.
        #[arg(long = "k")]
        k: Vec<String>,
    },
    /// Complete flag of ideals with real weights, or the obstruction.
    Supersolvable(Common),
    /// Check a triangular-by-compact certificate against the algebra.
    TbcCheck {
        #[command(flatten)]
        common: Common,
        /// Certificate file of kind `tbc`.
        cert: PathBuf,
    },
    /// Find a triangular-by-compact splitting of a solvable algebra.
    TbcFind(Common),
    /// Decide definability of a connected group with this Lie algebra.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "simply-connected")]
        presentation: PresentationArg,
        /// Assert that the Levi factor has finite center.
        #[arg(long)]
        finite_center_levi: bool,
    },
    /// Faithful unipotent representation of a nilpotent algebra.
    Ado(Common),
    /// Faithful triangular representation of a supersolvable algebra.
    TriangularRep(Common),
    /// Extend a faithful representation of an ideal to the whole algebra.
    ExtendRep {
        #[command(flatten)]
        common: Common,
        /// Basis vector of the ideal, comma separated; repeat for more.
        #[arg(long = "ideal", required = true)]
        ideal: Vec<String>,
        /// Representation of the ideal on its echelon basis, as
        /// `{"dim": d, "images": [...]}`; defaults to Ado's construction.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Representation with kernel exactly a central subgroup of order 2.
    QuotientRep {
        /// `{"generators": [...], "center": [...], "order": 2}`.
        input: PathBuf,
        /// Accepted for uniformity; this command produces no certificate.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Equations of the Zariski closure of a torus `{"weights": [[...]]}`.
    TorusClosure {
        /// Weight file: one row per rotation block, one column per torus generator.
        input: PathBuf,
        /// Write the certificate JSON here.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Verify a certificate against its subject file.
    VerifyCert {
        /// Algebra or torus weight file the certificate was issued for.
        subject: PathBuf,
        /// Certificate JSON.
        cert: PathBuf,
    },
    /// Built-in corpus of algebras with known answers.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand, Debug)]
pub enum CorpusCommand {
    /// Entry names with the provenance of their known answers.
    List,
    /// Reproduce known answers; all entries unless names are given.
    Run {
        names: Vec<String>,
    },
    /// Write every corpus algebra as `<name>.json` into a directory.
    Export {
        dir: PathBuf,
    },
}

/// Result of one invocation.
#[derive(Debug, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    msg: String,
}

fn input(msg: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INPUT, msg: msg.to_string() }
}

fn unknown(msg: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_UNKNOWN, msg: msg.to_string() }
}

fn rep_failure(e: RepError) -> Failure {
    match e {
        RepError::Precondition(_)
        | RepError::SourceMismatch
        | RepError::NotNilpotent
        | RepError::NotSupersolvable(_) => Failure { code: EXIT_NEGATIVE, msg: e.to_string() },
        _ => unknown(e),
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Output {
                code,
                stdout: if code == 0 { e.to_string() } else { String::new() },
                stderr: if code == 0 { String::new() } else { e.to_string() },
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(code) => Output { code, stdout: out, stderr: String::new() },
        Err(f) => Output { code: f.code, stdout: out, stderr: format!("error: {}\n", f.msg) },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AlgebraData, Failure> {
    parse_algebra(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write_cert(path: &Option<PathBuf>, c: &CertificateFile, out: &mut String) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, c.to_json()).map_err(|e| input(format!("{}: {e}", p.display())))?;
        let _ = writeln!(out, "certificate ({}) written to {}", kind_name(c), p.display());
    }
    Ok(())
}

fn no_cert(path: &Option<PathBuf>, out: &mut String) {
    if path.is_some() {
        let _ = writeln!(out, "note: this command produces no certificate; --cert-out ignored");
    }
}

fn kind_name(c: &CertificateFile) -> String {
    serde_json::to_value(c.kind).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

/// `2*X - 1/2*Y`, or `0`.
pub fn fmt_element(labels: &[String], v: &[Rat]) -> String {
    let mut s = String::new();
    for (l, c) in labels.iter().zip(v) {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let neg = c < &Rat::from_integer(0.into());
        let a = if neg { -c.clone() } else { c.clone() };
        let coeff = if num_traits::One::is_one(&a) { String::new() } else { format!("{}*", format_rat(&a)) };
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
            _ => {}
        }
        s.push_str(&coeff);
        s.push_str(l);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn fmt_space(labels: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis().iter().map(|v| fmt_element(labels, v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn fmt_weight(labels: &[String], w: &[GaussRat]) -> String {
    labels.iter().zip(w).map(|(l, x)| format!("{l} -> {x}")).collect::<Vec<_>>().join(", ")
}

fn parse_vectors(raw: &[String], n: usize, what: &str) -> Result<Vec<Vec<Rat>>, Failure> {
    raw.iter()
        .map(|s| {
            let v: Vec<Rat> = s
                .split(',')
                .map(|x| parse_rat(x.trim()).map_err(|e| input(format!("--{what} {s}: {e}"))))
                .collect::<Result<_, _>>()?;
            if v.len() != n {
                return Err(input(format!("--{what} {s}: expected {n} entries, found {}", v.len())));
            }
            Ok(v)
        })
        .collect()
}

fn mat_from_strings(rows: &[Vec<String>], what: &str) -> Result<Mat<Rat>, Failure> {
    let n = rows.len();
    let parsed: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            if r.len() != n {
                return Err(input(format!("{what}: matrices must be square")));
            }
            r.iter().map(|x| parse_rat(x).map_err(|e| input(format!("{what}: {e}")))).collect()
        })
        .collect::<Result<_, _>>()?;
    Ok(Mat::from_rows_with_cols(parsed, n))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    dim: usize,
    images: Vec<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    generators: Vec<Vec<Vec<String>>>,
    center: Vec<Vec<Vec<String>>>,
    order: u32,
}

fn solvable_or_input(g: &LieAlgebra) -> Result<bool, Failure> {
    g.is_solvable().map_err(input)
}

fn dispatch(cmd: Command, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        Command::Validate(c) => validate(&c, out),
        Command::Series(c) => series(&c, out),
        Command::Radical(c) => {
            let d = load(&c.algebra)?;
            let r = structure::radical(&d.algebra).map_err(input)?;
            let _ = writeln!(out, "radical (dim {}): {}", r.dim(), fmt_space(d.algebra.labels(), &r));
            no_cert(&c.cert_out, out);
            Ok(EXIT_OK)
        }
        Command::Nilradical(c) => {
            let d = load(&c.algebra)?;
            let r = structure::nilradical(&d.algebra).map_err(input)?;
            let _ = writeln!(out, "nilradical (dim {}): {}", r.dim(), fmt_space(d.algebra.labels(), &r));
            no_cert(&c.cert_out, out);
            Ok(EXIT_OK)
        }
        Command::Levi(c) => {
            let d = load(&c.algebra)?;
            let g = &d.algebra;
            let l = structure::levi_subalgebra(g).map_err(input)?;
            structure::verify_levi(g, &l.radical, &l.levi).map_err(|e| unknown(format!("Levi check failed: {e}")))?;
            let _ = writeln!(out, "radical (dim {}): {}", l.radical.dim(), fmt_space(g.labels(), &l.radical));
            let _ = writeln!(out, "levi subalgebra (dim {}): {}", l.levi.dim(), fmt_space(g.labels(), &l.levi));
            let _ = writeln!(out, "checked: Killing form nondegenerate on levi, zero intersection, spanning");
            no_cert(&c.cert_out, out);
            Ok(EXIT_OK)
        }
        Command::CommutingLevi { common, k } => commuting_levi(&common, &k, out),
        Command::Supersolvable(c) => supersolvable(&c, out),
        Command::TbcCheck { common, cert } => tbc_check(&common, &cert, out),
        Command::TbcFind(c) => tbc(&c, out),
        Command::Oracle { common, presentation, finite_center_levi } => {
            oracle(&common, presentation.into(), finite_center_levi, out)
        }
        Command::Ado(c) => {
            let d = load(&c.algebra)?;
            let r = nilpotent_ado(&d.algebra).map_err(rep_failure)?;
            report_rep(&d, &r, &c.cert_out, out)
        }
        Command::TriangularRep(c) => {
            let d = load(&c.algebra)?;
            if !solvable_or_input(&d.algebra)? {
                return Err(Failure { code: EXIT_NEGATIVE, msg: "algebra is not solvable".into() });
            }
            let r = supersolvable_triangular_rep(&d.algebra).map_err(rep_failure)?;
            report_rep(&d, &r, &c.cert_out, out)
        }
        Command::ExtendRep { common, ideal, rep } => extend(&common, &ideal, rep.as_deref(), out),
        Command::QuotientRep { input: path, cert_out } => quotient(&path, &cert_out, out),
        Command::TorusClosure { input: path, cert_out } => torus(&path, &cert_out, out),
        Command::VerifyCert { subject, cert } => verify(&subject, &cert, out),
        Command::Corpus(c) => corpus_cmd(c, out),
    }
}

fn validate(c: &Common, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let g = &d.algebra;
    g.validate().map_err(input)?;
    let _ = writeln!(out, "valid Lie algebra of dimension {} (antisymmetry and Jacobi checked)", g.dim());
    let _ = writeln!(out, "labels: {}", g.labels().join(", "));
    let _ = writeln!(out, "content hash: {}", d.content_hash());
    let solvable = solvable_or_input(g)?;
    let _ = writeln!(out, "solvable: {solvable}, nilpotent: {}, semisimple: {}", g.is_nilpotent(), g.is_semisimple());
    if let Some(m) = &d.matrices {
        let _ = writeln!(out, "matrix presentation in gl_{} (compatible: {})", m.ambient, m.is_compatible(g));
    }
    no_cert(&c.cert_out, out);
    Ok(EXIT_OK)
}

fn series(c: &Common, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let g = &d.algebra;
    let l = g.labels();
    let _ = writeln!(out, "derived series:");
    for (i, s) in g.derived_series().iter().enumerate() {
        let _ = writeln!(out, "  D{i} (dim {}): {}", s.dim(), fmt_space(l, s));
    }
    let _ = writeln!(out, "lower central series:");
    for (i, s) in g.lower_central_series().iter().enumerate() {
        let _ = writeln!(out, "  C{i} (dim {}): {}", s.dim(), fmt_space(l, s));
    }
    let z = g.center();
    let _ = writeln!(out, "center (dim {}): {}", z.dim(), fmt_space(l, &z));
    no_cert(&c.cert_out, out);
    Ok(EXIT_OK)
}

/// `k` inside the radical, lifted to `g`: the compact part of a
/// triangular-by-compact splitting of the radical.
fn default_torus(g: &LieAlgebra) -> Result<Subspace, Failure> {
    let r = structure::radical(g).map_err(input)?;
    let ralg = g.subalgebra(&r).map_err(input)?.algebra;
    match tbc_find(&ralg).map_err(unknown)? {
        TbcOutcome::Certificate(c) => {
            let lifted = c.k.basis().iter().map(|v| {
                r.basis().iter().zip(v).fold(vec![Rat::from_integer(0.into()); g.dim()], |mut acc, (b, x)| {
                    for (a, bi) in acc.iter_mut().zip(b) {
                        *a += bi * x;
                    }
                    acc
                })
            });
            Ok(Subspace::span(g.dim(), lifted.collect()))
        }
        TbcOutcome::NotTbc(o) => Err(Failure {
            code: EXIT_NEGATIVE,
            msg: format!("radical is not triangular by compact: {}", o.explanation()),
        }),
        TbcOutcome::Unknown(r) => Err(unknown(r)),
    }
}

fn commuting_levi(c: &Common, k: &[String], out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let g = &d.algebra;
    let k = if k.is_empty() { default_torus(g)? } else { Subspace::span(g.dim(), parse_vectors(k, g.dim(), "k")?) };
    let l = g.labels();
    let s = structure::commuting_levi(g, &k).map_err(|e| Failure { code: EXIT_NEGATIVE, msg: e.to_string() })?;
    let _ = writeln!(out, "k (dim {}): {}", k.dim(), fmt_space(l, &k));
    let _ = writeln!(out, "levi subalgebra centralizing k (dim {}): {}", s.dim(), fmt_space(l, &s));
    no_cert(&c.cert_out, out);
    Ok(EXIT_OK)
}

fn supersolvable(c: &Common, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let g = &d.algebra;
    let l = g.labels();
    match supersolvable_test(g).map_err(input)? {
        Supersolvable::Yes(flag) => {
            let _ = writeln!(out, "supersolvable: yes");
            let _ = writeln!(out, "flag of ideals (adapted basis):");
            for (i, v) in flag.adapted_basis().iter().enumerate() {
                let _ = writeln!(out, "  v{} = {}", i + 1, fmt_element(l, v));
            }
            write_cert(&c.cert_out, &cert::flag_certificate(&d, &flag), out)?;
            Ok(EXIT_OK)
        }
        Supersolvable::No(w) => {
            let _ = writeln!(out, "supersolvable: no");
            let _ = writeln!(out, "non-real weight: {}", fmt_weight(l, &w.weight));
            let _ = writeln!(out, "non-real at {}", l[w.basis_index]);
            no_cert(&c.cert_out, out);
            Ok(EXIT_NEGATIVE)
        }
        Supersolvable::Indeterminate { reason, sturm } => {
            let _ = writeln!(out, "supersolvable: indeterminate ({reason})");
            for s in sturm {
                let _ = writeln!(out, "  {s:?}");
            }
            no_cert(&c.cert_out, out);
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn tbc(c: &Common, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let g = &d.algebra;
    if !solvable_or_input(g)? {
        return Err(input("tbc-find needs a solvable algebra; run it on the radical"));
    }
    let l = g.labels();
    match tbc_find(g).map_err(unknown)? {
        TbcOutcome::Certificate(cert) => {
            let _ = writeln!(out, "triangular by compact: yes");
            let _ = writeln!(out, "t (dim {}): {}", cert.t.dim(), fmt_space(l, &cert.t));
            let _ = writeln!(out, "k (dim {}): {}", cert.k.dim(), fmt_space(l, &cert.k));
            write_cert(&c.cert_out, &cert::tbc_certificate(&d, &cert), out)?;
            Ok(EXIT_OK)
        }
        TbcOutcome::NotTbc(o) => {
            let _ = writeln!(out, "triangular by compact: no");
            let _ = writeln!(out, "{}", o.explanation());
            if let ObstructionKind::NonInner { regular, .. } = &o.kind {
                let _ = writeln!(out, "regular element: {}", fmt_element(l, regular));
            }
            no_cert(&c.cert_out, out);
            Ok(EXIT_NEGATIVE)
        }
        TbcOutcome::Unknown(r) => {
            let _ = writeln!(out, "triangular by compact: unknown ({r})");
            no_cert(&c.cert_out, out);
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn tbc_check(c: &Common, path: &Path, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let file = CertificateFile::parse(&read(path)?).map_err(input)?;
    if file.kind != cert::CertKind::Tbc {
        return Err(input(format!("expected a certificate of kind tbc, found {}", kind_name(&file))));
    }
    let payload: cert::TbcPayload = serde_json::from_value(file.payload.clone()).map_err(input)?;
    let tc = payload.to_cert(d.algebra.dim()).map_err(input)?;
    match tbc_verify(&d.algebra, &tc) {
        Ok(clauses) => {
            let names: Vec<&str> = clauses.iter().map(|c| c.name()).collect();
            let _ = writeln!(out, "tbc certificate holds; clauses: {}", names.join(", "));
            write_cert(&c.cert_out, &file, out)?;
            Ok(EXIT_OK)
        }
        Err(f) => {
            let _ = writeln!(out, "tbc certificate rejected: clause `{}`: {}", f.clause.name(), f.detail);
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn oracle(c: &Common, kind: PresentationKind, flc: bool, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let mut p = GroupPresentation::new(kind, d.algebra.clone());
    if let Some(m) = &d.matrices {
        p = p.with_matrices(m.clone());
    }
    if flc {
        p = p.with_finite_center_levi(true);
    }
    let v = definability_oracle(&p).map_err(input)?;
    let l = d.algebra.labels();
    let _ = writeln!(out, "verdict: {}", v.outcome.name());
    let _ = writeln!(out, "rule: {} ({})", v.rule.tag(), v.rule.description());
    let _ = writeln!(out, "reason: {}", v.explanation);
    if let Some(rc) = &v.certificate {
        let _ = writeln!(out, "radical (dim {}): {}", rc.radical.dim(), fmt_space(l, &rc.radical));
        let _ = writeln!(out, "tbc certificate: t of dim {}, compact part k of dim {}", rc.tbc.t.dim(), rc.tbc.k.dim());
    }
    if let Some(w) = &v.counter_witness {
        let _ = writeln!(out, "counter-witness element: {}", fmt_element(l, &w.element));
        let _ = writeln!(out, "non-real weight: {}", fmt_weight(l, &w.weight));
        let _ = writeln!(out, "characteristic polynomial of ad: {}", w.char_poly);
    }
    for n in &v.notes {
        let _ = writeln!(out, "note: {n}");
    }
    write_cert(&c.cert_out, &cert::verdict_certificate(&d, &p, &v), out)?;
    Ok(v.outcome.exit_code())
}

fn report_rep(
    d: &AlgebraData,
    r: &Representation,
    cert_out: &Option<PathBuf>,
    out: &mut String,
) -> Result<i32, Failure> {
    let _ = writeln!(out, "representation of dimension {}", r.target_dim);
    let _ = writeln!(out, "verified: {}", r.verified.names().join(", "));
    for (l, m) in d.algebra.labels().iter().zip(&r.images) {
        let _ = writeln!(out, "{l} ->\n{m}");
    }
    write_cert(cert_out, &cert::representation_certificate(d, r), out)?;
    Ok(EXIT_OK)
}

fn extend(c: &Common, ideal: &[String], rep: Option<&Path>, out: &mut String) -> Result<i32, Failure> {
    let d = load(&c.algebra)?;
    let g = &d.algebra;
    let h = Subspace::span(g.dim(), parse_vectors(ideal, g.dim(), "ideal")?);
    let sub = g.subalgebra(&h).map_err(input)?.algebra;
    let rho = match rep {
        Some(path) => {
            let f: RepFile =
                serde_json::from_str(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
            let images = f.images.iter().map(|m| mat_from_strings(m, "rep")).collect::<Result<Vec<_>, _>>()?;
            if images.len() != sub.dim() || images.iter().any(|m| m.nrows() != f.dim) {
                return Err(input("rep: need one dim x dim image per basis vector of the ideal"));
            }
            Representation::new(sub, f.dim, images).verify()
        }
        None => nilpotent_ado(&sub).map_err(rep_failure)?,
    };
    let sigma = extend_rep(g, &h, &rho).map_err(rep_failure)?;
    report_rep(&d, &sigma, &c.cert_out, out)
}

fn quotient(path: &Path, cert_out: &Option<PathBuf>, out: &mut String) -> Result<i32, Failure> {
    let f: GroupFile = serde_json::from_str(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let generators = f.generators.iter().map(|m| mat_from_strings(m, "generators")).collect::<Result<Vec<_>, _>>()?;
    let center = f.center.iter().map(|m| mat_from_strings(m, "center")).collect::<Result<Vec<_>, _>>()?;
    let q = quotient_rep(&GroupRepData { generators, center, order: f.order }).map_err(rep_failure)?;
    let _ = writeln!(out, "W has dimension {}", q.w_dim);
    let _ = writeln!(out, "isotypic components: dims {:?}, exponents {:?}", q.components, q.exponents);
    let _ = writeln!(out, "relations mod 2: {:?}", q.relations);
    let _ = writeln!(out, "kernel check: F acts trivially; {} sampled elements outside F act non-trivially", q.sampled);
    no_cert(cert_out, out);
    Ok(EXIT_OK)
}

fn torus(path: &Path, cert_out: &Option<PathBuf>, out: &mut String) -> Result<i32, Failure> {
    let tw = cert::parse_torus(&read(path)?).map_err(input)?;
    let c = torus_zariski_closure(&tw).map_err(rep_failure)?;
    let _ = write!(out, "{c}");
    write_cert(cert_out, &cert::torus_certificate(&tw, &c), out)?;
    Ok(EXIT_OK)
}

fn verify(subject: &Path, cert_path: &Path, out: &mut String) -> Result<i32, Failure> {
    let text = read(subject)?;
    let c = CertificateFile::parse(&read(cert_path)?).map_err(input)?;
    match cert::verify_certificate(&text, &c) {
        Ok(clauses) => {
            let _ = writeln!(out, "certificate accepted ({}); clauses checked: {}", kind_name(&c), clauses.join(", "));
            Ok(EXIT_OK)
        }
        Err(e) => {
            let _ = writeln!(out, "certificate rejected: {e}");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn corpus_cmd(c: CorpusCommand, out: &mut String) -> Result<i32, Failure> {
    let all = corpus::corpus();
    match c {
        CorpusCommand::List => {
            for e in &all {
                let k = &e.known;
                let opt = |x: Option<crate::corpus::Known<bool>>| x.map_or("-".to_string(), |k| k.value.to_string());
                let _ = writeln!(
                    out,
                    "{:<16} dim {}  solvable {:<5}  supersolvable {:<5}  tbc {:<5}",
                    e.name,
                    e.data.algebra.dim(),
                    k.solvable.value,
                    opt(k.supersolvable),
                    opt(k.tbc)
                );
                for case in &k.definability {
                    let _ = writeln!(
                        out,
                        "    {:<34} {:<13} [{}]",
                        case.label(),
                        case.expected.value.name(),
                        case.expected.provenance.tag()
                    );
                }
            }
            Ok(EXIT_OK)
        }
        CorpusCommand::Run { names } => {
            let selected: Vec<_> = if names.is_empty() {
                all
            } else {
                let mut v = Vec::new();
                for n in &names {
                    v.push(corpus::entry(n).ok_or_else(|| input(format!("no corpus entry named {n}")))?);
                }
                v
            };
            let reports = run_all(&selected);
            let mut failed = 0;
            for r in &reports {
                let _ = writeln!(out, "{} {}", if r.ok() { "PASS" } else { "FAIL" }, r.name);
                for c in r.checks.iter().filter(|c| !c.ok()) {
                    failed += 1;
                    let _ = writeln!(
                        out,
                        "    {}: expected {}, observed {} [{}]",
                        c.property,
                        c.expected,
                        c.observed,
                        c.provenance.tag()
                    );
                }
            }
            let total: usize = reports.iter().map(|r| r.checks.len()).sum();
            let _ = writeln!(out, "{} entries, {} checks, {} failed", reports.len(), total, failed);
            Ok(if failed == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        CorpusCommand::Export { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| input(format!("{}: {e}", dir.display())))?;
            for e in &all {
                let p = dir.join(format!("{}.json", e.name));
                std::fs::write(&p, e.data.to_json() + "\n").map_err(|err| input(format!("{}: {err}", p.display())))?;
            }
            let _ = writeln!(out, "wrote {} algebras to {}", all.len(), dir.display());
            Ok(EXIT_OK)
        }
    }
}
