//! Command-line front end.
//!
//! Exit status: 0 success, 1 verification failure, 2 parse error,
//! 3 capacity exceeded, 4 parameters inconsistent with the family,
//! 5 file I/O.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::anf::AnfPolynomial;
use crate::bits::{BitVector, Capacity};
use crate::constructions::{construct_with, ConstructedFunction, Construction, ConstructionFamily, ConstructionParams};
use crate::error::Error;
use crate::function::BooleanFunction;
use crate::oracle::{
    check_su_conditions, check_table1, fragmentary_lemma_branches, verify_construction,
    verify_function, Check, SuCase, VerificationReport,
};
use crate::reference::{check_worked_example, worked_examples};
use crate::spectra::{dual_from_spectrum, nega_transform_with, walsh_transform, walsh_transform_with};
use crate::subspaces::{orbit_members, orbit_representatives, GammaSpec, ModifierFamily};

pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_SPEC: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "negabent", version, about = "Build and verify bent-negabent Boolean functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; `gen` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest number of variables to accept.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpectrumKind {
    Walsh,
    Nega,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a function and write its function file.
    Gen(ConstructionArgs),
    /// Verify a function file, or a construction given by flags.
    Verify(FunctionArgs),
    /// Dump the Walsh or nega spectrum, one line per point.
    Spectrum {
        #[command(flatten)]
        source: FunctionArgs,
        #[arg(long, value_enum, default_value = "walsh")]
        kind: SpectrumKind,
    },
    /// Convert a truth table to its ANF, or `--poly` to a truth table.
    Anf(FunctionArgs),
    /// The dual of a bent function.
    Dual(FunctionArgs),
    /// Cyclic orbit representatives of F_2^n, or the orbit of one vector.
    Orbits(OrbitArgs),
    /// Check the fragmentary transforms over S1..S4 against their closed forms.
    LemmaCheck(LemmaArgs),
    /// Check the bent/negabent relation table.
    Table1 {
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Check π and φ of four Maiorana-McFarland forms against a subspace L^⊥.
    SuCheck {
        /// One of i, ii, iii, iv; all four when omitted.
        #[arg(long)]
        case: Option<SuCase>,
    },
    /// Rebuild the three worked examples and compare their ANFs.
    ReproExamples,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ConstructionArgs {
    #[arg(long)]
    pub family: Option<ConstructionFamily>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated bit strings, `γ1` then `γ2` within each.
    #[arg(long)]
    pub gamma: Option<String>,
    /// Comma-separated E symbols from {0, 1, B}, aligned with `--gamma`.
    #[arg(long)]
    pub eset: Option<String>,
    /// Orbit representatives for f2rs.
    #[arg(long)]
    pub p: Option<String>,
    /// Orbit representatives for f2rs-set.
    #[arg(long)]
    pub a_set: Option<String>,
    /// The vector for f2rs-orbit, of weight at least 2.
    #[arg(long)]
    pub single_gamma: Option<String>,
    /// Repetition length for g8k and h8k2; only 1 is supported.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Clone, Debug, Default, Args)]
pub struct FunctionArgs {
    /// A function file written by `gen`.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Truth table in hex, with `--n`.
    #[arg(long)]
    pub tt: Option<String>,
    /// ANF such as `x0*x1 + x2`, with `--n`.
    #[arg(long)]
    pub poly: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub construction: ConstructionArgs,
}

#[derive(Clone, Debug, Args)]
pub struct OrbitArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Use `n = 2k`.
    #[arg(long)]
    pub k: Option<usize>,
    /// List the orbit of this vector instead.
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Clone, Debug, Args)]
pub struct LemmaArgs {
    /// s1, s2, s3, s4, or the construction using it (g4k, g8k, h4k2, h8k2).
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// One spec; without it every single-γ spec is checked.
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub eset: Option<String>,
    /// Number of random multi-γ specs to add.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// The JSON file produced by `gen`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<ConstructionFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ConstructionParams>,
    pub tt_hex: String,
    pub anf: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_tt_hex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicts_max_degree: Option<bool>,
}

impl FunctionFile {
    pub fn from_constructed(cf: &ConstructedFunction) -> Self {
        FunctionFile {
            n: cf.function().n(),
            family: Some(cf.family()),
            params: Some(cf.params()),
            tt_hex: cf.function().to_hex(),
            anf: cf.function().anf().to_string(),
            dual_tt_hex: Some(cf.closed_dual().to_hex()),
            predicts_max_degree: Some(cf.predicts_max_degree()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("function file serializes");
        s.push('\n');
        s
    }

    pub fn function(&self) -> Result<BooleanFunction, Error> {
        BooleanFunction::from_hex(self.n, &self.tt_hex)
    }
}

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Capacity(String),
    Spec(String),
    Verification(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification(_) => EXIT_VERIFICATION,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Capacity(_) => EXIT_CAPACITY,
            Failure::Spec(_) => EXIT_SPEC,
            Failure::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (class, msg) = match self {
            Failure::Parse(m) => ("parse", m),
            Failure::Capacity(m) => ("capacity", m),
            Failure::Spec(m) => ("spec", m),
            Failure::Verification(m) => ("verification", m),
            Failure::Io(m) => ("io", m),
        };
        write!(f, "error[{class}]: {}", msg.lines().next().unwrap_or(""))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse(_) => Failure::Parse(msg),
            Error::Capacity { .. } => Failure::Capacity(msg),
            Error::NotBent { .. } | Error::NotNegabent { .. } => Failure::Verification(msg),
            _ => Failure::Spec(msg),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Renders a report as a text table or as JSON.
pub fn emit_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    }
}

fn report_status(report: &VerificationReport) -> i32 {
    if report.passed() {
        0
    } else {
        EXIT_VERIFICATION
    }
}

struct Ctx<'a> {
    format: Option<Format>,
    out_path: Option<PathBuf>,
    cap: Capacity,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn format(&self) -> Format {
        self.format.unwrap_or(Format::Text)
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        match &self.out_path {
            Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string())),
        }
    }

    fn emit_report(&mut self, report: &VerificationReport) -> CmdResult {
        let text = emit_report(report, self.format());
        self.emit(&text)?;
        Ok(report_status(report))
    }
}

impl ConstructionArgs {
    fn is_empty(&self) -> bool {
        self.family.is_none()
    }

    pub fn to_construction(&self) -> Result<Construction, Failure> {
        let family = self
            .family
            .ok_or_else(|| Failure::Parse("--family is required".into()))?;
        let k = self.k.ok_or_else(|| Failure::Parse("--k is required".into()))?;
        let params = ConstructionParams {
            k,
            gamma: self.gamma.clone(),
            eset: self.eset.clone(),
            p: self.p.clone(),
            a_set: self.a_set.clone(),
            single_gamma: self.single_gamma.clone(),
        };
        let c = Construction::from_params(family, &params)?;
        match self.d {
            None => Ok(c),
            Some(d) => Ok(Construction::with_repetition_length(family, d, c.modifier_spec()?)?),
        }
    }
}

/// Where a function came from.
struct Resolved {
    label: String,
    function: BooleanFunction,
    constructed: Option<ConstructedFunction>,
    file: Option<FunctionFile>,
}

fn read_function_file(path: &PathBuf) -> Result<FunctionFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

impl FunctionArgs {
    fn resolve(&self, cap: Capacity) -> Result<Resolved, Failure> {
        let sources = [
            self.input.is_some(),
            self.tt.is_some(),
            self.poly.is_some(),
            !self.construction.is_empty(),
        ];
        match sources.iter().filter(|&&s| s).count() {
            0 => return Err(Failure::Parse("give one of --in, --tt, --poly or --family".into())),
            1 => {}
            _ => return Err(Failure::Parse("--in, --tt, --poly and --family are exclusive".into())),
        }
        let need_n = || {
            let n = self.n.ok_or_else(|| Failure::Parse("--n is required with --tt and --poly".into()))?;
            cap.check(n)?;
            Ok::<usize, Failure>(n)
        };
        if let Some(path) = &self.input {
            let file = read_function_file(path)?;
            cap.check(file.n)?;
            let function = file.function()?;
            let constructed = match (&file.family, &file.params) {
                (Some(family), Some(params)) => {
                    let c = Construction::from_params(*family, params)?;
                    if c.num_vars() != file.n {
                        return Err(Failure::Spec(format!(
                            "file has n={} but {family} with k={} has {} variables",
                            file.n,
                            c.k(),
                            c.num_vars()
                        )));
                    }
                    Some(construct_with(&c, cap)?.with_function(function.clone())?)
                }
                (None, None) => None,
                _ => return Err(Failure::Parse("function file has only one of family and params".into())),
            };
            return Ok(Resolved {
                label: path.display().to_string(),
                function,
                constructed,
                file: Some(file),
            });
        }
        if let Some(tt) = &self.tt {
            let n = need_n()?;
            return Ok(Resolved {
                label: format!("tt n={n}"),
                function: BooleanFunction::from_hex(n, tt)?,
                constructed: None,
                file: None,
            });
        }
        if let Some(poly) = &self.poly {
            let n = need_n()?;
            return Ok(Resolved {
                label: poly.clone(),
                function: AnfPolynomial::parse(n, poly)?.to_function(),
                constructed: None,
                file: None,
            });
        }
        let c = self.construction.to_construction()?;
        let cf = construct_with(&c, cap)?;
        Ok(Resolved {
            label: c.to_string(),
            function: cf.function().clone(),
            constructed: Some(cf),
            file: None,
        })
    }
}

fn gen(ctx: &mut Ctx, args: &ConstructionArgs) -> CmdResult {
    let c = args.to_construction()?;
    let cf = construct_with(&c, ctx.cap)?;
    let file = FunctionFile::from_constructed(&cf);
    match ctx.format.unwrap_or(Format::Json) {
        Format::Json => ctx.emit(&file.to_json())?,
        Format::Text => {
            let text = format!(
                "{c}\nn = {}\ndegree = {} (family maximum {})\npredicts maximal degree = {}\ntt = {}\nanf = {}\n",
                file.n,
                cf.function().algebraic_degree(),
                c.family_max_degree(),
                cf.predicts_max_degree(),
                file.tt_hex,
                file.anf
            );
            ctx.emit(&text)?
        }
    }
    Ok(0)
}

/// Checks that the stored ANF and dual agree with the stored table.
fn file_checks(file: &FunctionFile, f: &BooleanFunction, report: &mut VerificationReport) -> Result<(), Failure> {
    let n = f.n();
    let anf = f.anf();
    let stored = AnfPolynomial::parse(n, &file.anf)?;
    let stray = anf.monomial_set().symmetric_difference(&stored.monomial_set()).next().copied();
    report.push(Check::from_failure(
        "file_anf",
        stray.map(|m| BitVector::new(n, m)),
        "stored ANF matches the truth table",
    ));
    if let Some(hex) = &file.dual_tt_hex {
        let stored = BooleanFunction::from_hex(n, hex)?;
        let check = match dual_from_spectrum(&walsh_transform(f)?) {
            Ok(d) => Check::from_failure(
                "file_dual",
                (0..d.size()).find(|&z| d.value(z) != stored.value(z)).map(|z| BitVector::new(n, z)),
                "stored dual matches the spectral dual",
            ),
            Err(Error::NotBent { point }) => Check::fail("file_dual", point, "function is not bent"),
            Err(e) => return Err(e.into()),
        };
        report.push(check);
    }
    Ok(())
}

fn verify(ctx: &mut Ctx, args: &FunctionArgs) -> CmdResult {
    let r = args.resolve(ctx.cap)?;
    let mut report = match &r.constructed {
        Some(cf) => verify_construction(cf)?,
        None => verify_function(&r.label, &r.function)?,
    };
    report.subject = r.label.clone();
    if let Some(file) = &r.file {
        file_checks(file, &r.function, &mut report)?;
        if let (Some(stored), Some(cf)) = (file.predicts_max_degree, &r.constructed) {
            report.push(Check::from_failure(
                "file_prediction",
                (stored != cf.predicts_max_degree()).then(|| BitVector::zeros(file.n)),
                format!("stored flag {stored}"),
            ));
        }
        report.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }
    ctx.emit_report(&report)
}

#[derive(Serialize)]
struct SpectrumJson<'a, T: Serialize> {
    n: usize,
    kind: &'a str,
    values: &'a [T],
}

fn spectrum(ctx: &mut Ctx, args: &FunctionArgs, kind: SpectrumKind) -> CmdResult {
    let r = args.resolve(ctx.cap)?;
    let f = &r.function;
    let json = ctx.format() == Format::Json;
    let text = match kind {
        SpectrumKind::Walsh => {
            let w = walsh_transform_with(f, ctx.cap)?;
            if json {
                serde_json::to_string(&SpectrumJson { n: f.n(), kind: "walsh", values: w.values() }).unwrap() + "\n"
            } else {
                w.dump()
            }
        }
        SpectrumKind::Nega => {
            let s = nega_transform_with(f, ctx.cap)?;
            if json {
                let pairs: Vec<[i64; 2]> = s.values().iter().map(|v| [v.re, v.im]).collect();
                serde_json::to_string(&SpectrumJson { n: f.n(), kind: "nega", values: &pairs }).unwrap() + "\n"
            } else {
                s.dump()
            }
        }
    };
    ctx.emit(&text)?;
    Ok(0)
}

#[derive(Serialize)]
struct AnfJson {
    n: usize,
    tt_hex: String,
    anf: String,
    degree: u32,
}

fn anf(ctx: &mut Ctx, args: &FunctionArgs) -> CmdResult {
    let r = args.resolve(ctx.cap)?;
    let f = &r.function;
    let anf = f.anf();
    let text = match ctx.format() {
        Format::Json => {
            let j = AnfJson {
                n: f.n(),
                tt_hex: f.to_hex(),
                anf: anf.to_string(),
                degree: anf.degree(),
            };
            serde_json::to_string_pretty(&j).unwrap() + "\n"
        }
        // a polynomial in gives a table out, anything else gives a polynomial
        Format::Text if args.poly.is_some() => f.to_hex() + "\n",
        Format::Text => anf.to_string() + "\n",
    };
    ctx.emit(&text)?;
    Ok(0)
}

#[derive(Serialize)]
struct DualJson {
    n: usize,
    dual_tt_hex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_matches: Option<bool>,
}

fn dual(ctx: &mut Ctx, args: &FunctionArgs) -> CmdResult {
    let r = args.resolve(ctx.cap)?;
    let d = dual_from_spectrum(&walsh_transform_with(&r.function, ctx.cap)?)?;
    let matches = r.constructed.as_ref().map(|cf| cf.closed_dual() == &d);
    let text = match ctx.format() {
        Format::Json => {
            let j = DualJson {
                n: d.n(),
                dual_tt_hex: d.to_hex(),
                closed_form_matches: matches,
            };
            serde_json::to_string_pretty(&j).unwrap() + "\n"
        }
        Format::Text => {
            let mut t = d.to_hex() + "\n";
            if let Some(m) = matches {
                t += &format!("closed form {}\n", if m { "matches" } else { "differs" });
            }
            t
        }
    };
    ctx.emit(&text)?;
    Ok(if matches == Some(false) { EXIT_VERIFICATION } else { 0 })
}

#[derive(Serialize)]
struct OrbitJson {
    representative: String,
    size: usize,
    members: Vec<String>,
}

fn orbit_json(rep: &BitVector) -> OrbitJson {
    let members: Vec<String> = orbit_members(rep).iter().map(|v| v.to_bit_string()).collect();
    OrbitJson {
        representative: rep.to_bit_string(),
        size: members.len(),
        members,
    }
}

fn orbits(ctx: &mut Ctx, args: &OrbitArgs) -> CmdResult {
    let orbits: Vec<OrbitJson> = if let Some(g) = &args.gamma {
        let v = BitVector::parse(g)?;
        vec![orbit_json(&orbit_members(&v)[0])]
    } else {
        let n = match (args.n, args.k) {
            (Some(n), None) => n,
            (None, Some(k)) => 2 * k,
            _ => return Err(Failure::Parse("give exactly one of --n, --k or --gamma".into())),
        };
        ctx.cap.check(n)?;
        orbit_representatives(n)?.iter().map(orbit_json).collect()
    };
    let text = match ctx.format() {
        Format::Json => serde_json::to_string_pretty(&orbits).unwrap() + "\n",
        Format::Text => orbits
            .iter()
            .map(|o| format!("{}\t{}\t{}\n", o.representative, o.size, o.members.join(",")))
            .collect(),
    };
    ctx.emit(&text)?;
    Ok(0)
}

fn lemma_family(name: &str) -> Result<ModifierFamily, Failure> {
    if let Ok(f) = name.parse::<ModifierFamily>() {
        return Ok(f);
    }
    name.parse::<ConstructionFamily>()
        .map(|c| c.modifier_family())
        .map_err(|_| Failure::Parse(format!("unknown family `{name}`")))
}

fn lemma_check(ctx: &mut Ctx, args: &LemmaArgs) -> CmdResult {
    let family = lemma_family(&args.family)?;
    ctx.cap.check(family.num_vars(args.k))?;
    let mut specs = match &args.gamma {
        Some(g) => vec![GammaSpec::parse(family, args.k, g, args.eset.as_deref())?],
        None if args.eset.is_some() => return Err(Failure::Parse("--eset needs --gamma".into())),
        None => GammaSpec::singles(family, args.k)?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for i in 0..args.random {
        specs.push(GammaSpec::random(family, args.k, 2 + i % 3, &mut rng)?);
    }
    let mut report = VerificationReport::new(format!("{family} k={} ({} specs)", args.k, specs.len()));
    let single = specs.len() == 1;
    for spec in &specs {
        let (r, b) = fragmentary_lemma_branches(spec)?;
        let mut r = r;
        for c in &mut r.checks {
            if c.name == "nega_closed_form" {
                c.details = format!(
                    "{}; single {} double {}",
                    c.details, b.nega_single, b.nega_double
                );
            }
        }
        if single {
            r.subject = spec.to_string();
            return ctx.emit_report(&r);
        }
        report.absorb(&spec.to_string(), r);
    }
    ctx.emit_report(&report)
}

fn su_check(ctx: &mut Ctx, case: Option<SuCase>) -> CmdResult {
    let report = match case {
        Some(c) => check_su_conditions(c)?,
        None => {
            let mut all = VerificationReport::new("cases i-iv");
            for c in SuCase::ALL {
                all.absorb(c.name(), check_su_conditions(c)?);
            }
            all
        }
    };
    ctx.emit_report(&report)
}

fn repro_examples(ctx: &mut Ctx) -> CmdResult {
    let mut merged = VerificationReport::new("worked examples");
    let mut lines = String::new();
    for (i, ex) in worked_examples()?.iter().enumerate() {
        let r = check_worked_example(ex)?;
        let status = if r.passed() { "PASS" } else { "FAIL" };
        lines += &format!("{status} example {}: {}\n", i + 1, ex.name);
        for c in r.failures() {
            lines += &format!(
                "    {} at {}: {}\n",
                c.name,
                c.counterexample.as_deref().unwrap_or("-"),
                c.details
            );
        }
        merged.absorb(&format!("example{}", i + 1), r);
    }
    match ctx.format() {
        Format::Text => ctx.emit(&lines)?,
        Format::Json => ctx.emit(&emit_report(&merged, Format::Json))?,
    }
    Ok(report_status(&merged))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let cap = match cli.max_n {
        Some(n) => Capacity::new(n)?,
        None => Capacity::default(),
    };
    let mut ctx = Ctx {
        format: cli.format,
        out_path: cli.out,
        cap,
        out,
    };
    match &cli.command {
        Command::Gen(a) => gen(&mut ctx, a),
        Command::Verify(a) => verify(&mut ctx, a),
        Command::Spectrum { source, kind } => spectrum(&mut ctx, source, *kind),
        Command::Anf(a) => anf(&mut ctx, a),
        Command::Dual(a) => dual(&mut ctx, a),
        Command::Orbits(a) => orbits(&mut ctx, a),
        Command::LemmaCheck(a) => lemma_check(&mut ctx, a),
        Command::Table1 { k } => {
            ctx.cap.check(4 * k + 2)?;
            let r = check_table1(*k)?;
            ctx.emit_report(&r)
        }
        Command::SuCheck { case } => su_check(&mut ctx, *case),
        Command::ReproExamples => repro_examples(&mut ctx),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Diagnostics go to `err`, one line per failure.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ")
                .to_string();
            let _ = writeln!(err, "{}", Failure::Parse(first));
            return EXIT_PARSE;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{f}");
            f.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("negabent").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_writes_function_file() {
        let (code, out, _) = run_args(&["gen", "--family", "g4k", "--k", "1", "--gamma", "01"]);
        assert_eq!(code, 0);
        let file: FunctionFile = serde_json::from_str(&out).unwrap();
        assert_eq!(file.n, 4);
        assert_eq!(file.family, Some(ConstructionFamily::G4k));
        assert_eq!(file.params.unwrap().gamma.as_deref(), Some("01"));
    }

    #[test]
    fn failure_classes() {
        let (code, _, err) = run_args(&["gen", "--family", "g4k", "--k", "1", "--gamma", "0x"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.starts_with("error[parse]"));
        assert_eq!(err.lines().count(), 1);
        let (code, _, err) = run_args(&["gen", "--family", "g4k", "--k", "1", "--gamma", "011"]);
        assert_eq!(code, EXIT_SPEC, "{err}");
        let (code, _, err) = run_args(&["--max-n", "8", "gen", "--family", "g4k", "--k", "3", "--gamma", "000000"]);
        assert_eq!(code, EXIT_CAPACITY, "{err}");
        let (code, _, _) = run_args(&["gen", "--bogus"]);
        assert_eq!(code, EXIT_PARSE);
        let (code, _, err) = run_args(&["verify", "--in", "/nonexistent/f.json"]);
        assert_eq!(code, EXIT_IO, "{err}");
        let (code, _, err) = run_args(&["gen", "--family", "g8k", "--k", "1", "--gamma", "0000", "--d", "2"]);
        assert_eq!(code, EXIT_SPEC, "{err}");
    }

    #[test]
    fn help_exits_cleanly() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        for sub in ["gen", "verify", "spectrum", "anf", "dual", "orbits", "lemma-check", "table1", "su-check", "repro-examples"] {
            assert!(out.contains(sub), "{sub}");
        }
    }

    #[test]
    fn anf_round_trip() {
        let (code, out, _) = run_args(&["anf", "--poly", "x0*x1 + x2*x3", "--n", "4"]);
        assert_eq!(code, 0);
        let hex = out.trim().to_string();
        let (_, out, _) = run_args(&["anf", "--tt", &hex, "--n", "4"]);
        assert_eq!(out.trim(), "x0*x1 + x2*x3");
    }

    #[test]
    fn dual_and_spectrum() {
        let (code, out, _) = run_args(&["dual", "--family", "g4k", "--k", "1", "--gamma", "01"]);
        assert_eq!(code, 0);
        assert!(out.contains("closed form matches"));
        let (code, out, _) = run_args(&["spectrum", "--poly", "x0*x1", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0\t2\n1\t2\n2\t2\n3\t-2\n");
        let (_, out, _) = run_args(&["spectrum", "--kind", "nega", "--poly", "0", "--n", "1"]);
        assert_eq!(out, "0\t1\t1\n1\t1\t-1\n");
        let (code, _, err) = run_args(&["dual", "--poly", "x0", "--n", "2"]);
        assert_eq!(code, EXIT_VERIFICATION, "{err}");
    }

    #[test]
    fn orbit_listing() {
        let (_, out, _) = run_args(&["orbits", "--k", "2"]);
        let reps: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
        assert_eq!(reps, ["0000", "1000", "1100", "1010", "1110", "1111"]);
        let (_, out, _) = run_args(&["orbits", "--gamma", "0100"]);
        assert_eq!(out, "1000\t4\t1000,0100,0010,0001\n");
    }

    #[test]
    fn report_commands() {
        let (code, out, _) = run_args(&["repro-examples"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 3);
        let (code, out, _) = run_args(&["table1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("17/17 passed"));
        let (code, _, _) = run_args(&["su-check", "--case", "iii"]);
        assert_eq!(code, 0);
        let (code, out, _) = run_args(&["lemma-check", "--family", "s1"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_args(&["--format", "json", "lemma-check", "--family", "h4k2", "--gamma", "00,01", "--eset", "B,B"]);
        assert_eq!(code, 0, "{out}");
        let r: VerificationReport = serde_json::from_str(&out).unwrap();
        assert!(r.check("nega_closed_form").unwrap().details.contains("double"));
    }

    #[test]
    fn empty_report_renders_header_only() {
        let r = VerificationReport::new("nothing");
        assert_eq!(emit_report(&r, Format::Text).lines().count(), 2);
        let j = emit_report(&r, Format::Json);
        assert!(j.contains("\"checks\": []"));
    }

    #[test]
    fn synthetic_failure_renders_point() {
        let mut r = VerificationReport::new("synthetic");
        r.push(Check::fail("bent", BitVector::parse("00010110").unwrap(), "flat"));
        let text = emit_report(&r, Format::Text);
        assert!(text.contains("00010110"));
        assert!(text.contains("0/1 passed"));
        assert_eq!(report_status(&r), EXIT_VERIFICATION);
    }

    #[test]
    fn gen_is_deterministic() {
        let args = ["gen", "--family", "f2rs", "--k", "2", "--p", "1000,1100"];
        assert_eq!(run_args(&args).1, run_args(&args).1);
    }
}
