//! Argument parsing and subcommand dispatch. [`run`] is the whole program
//! minus process setup, so it can be driven from tests.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grassembed_core::grassmann::{
    pluecker_coordinates, sym_embed, target_labels, tensor_embed, tensor_power_embed, wedge_embed,
    EmbeddingKind,
};
use grassembed_core::multilinear::{
    check_det_sym_identity, check_det_tensor_identity, check_det_wedge_identity, generic_matrices_with_limit,
    BasisLabel, SYMBOLIC_VARIABLE_LIMIT,
};
use grassembed_core::verify::{
    enumerate_grassmannian, run_counterexample, verify_det_identities, verify_embedding_injectivity,
    verify_functoriality, verify_point_count, verify_sym_image_lemma, verify_sym_invertibility,
    verify_tensor_image_lemma, verify_tensor_image_lemma_sampled, verify_tensor_invertibility,
    verify_wedge_image_lemma, verify_wedge_invertibility, DetIdentityConfig, EnumerationSpec,
};
use grassembed_core::{CheckReport, Error, GrassmannPoint, Matrix, Ring};

use crate::json::{self, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "grassembed", version, about = "Exact Grassmannian embeddings and their verification")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
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
    /// Apply a tensor, tensor-power, wedge or sym embedding to point(s).
    Embed(EmbedArgs),
    /// Normalised Pluecker coordinates of a point.
    Pluecker(InputArgs),
    /// Check a determinant identity on given or generic matrices.
    DetIdentity(DetIdentityArgs),
    /// Stream every point of Gr(n, m) over a finite ring.
    Enumerate(EnumerateArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Reproduce the Sym^r collision over F_p[e]/(e^2) for p | r.
    Counterexample(CounterexampleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingChoice {
    Fp,
    Dual,
    Int,
    Rat,
    Poly,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RingArgs {
    #[arg(long, value_enum)]
    pub ring: Option<RingChoice>,
    /// Prime modulus for fp and dual.
    #[arg(long, visible_alias = "q")]
    pub p: Option<u64>,
    /// Variable names for poly, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
}

impl RingArgs {
    fn resolve(&self, default: RingChoice) -> Result<Ring, CliError> {
        let choice = self.ring.unwrap_or(default);
        let modular = matches!(choice, RingChoice::Fp | RingChoice::Dual);
        if self.p.is_some() && !modular {
            return Err(CliError::Usage("--p applies only to --ring fp and --ring dual".into()));
        }
        if !self.vars.is_empty() && choice != RingChoice::Poly {
            return Err(CliError::Usage("--vars applies only to --ring poly".into()));
        }
        let p = || self.p.ok_or_else(|| CliError::Usage("this ring needs --p".into()));
        Ok(match choice {
            RingChoice::Fp => Ring::prime_field(p()?)?,
            RingChoice::Dual => Ring::dual_numbers(p()?)?,
            RingChoice::Int => Ring::integer(),
            RingChoice::Rat => Ring::rational(),
            RingChoice::Poly => Ring::polynomial(self.vars.clone())?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmbedKind {
    Tensor,
    TensorPower,
    Wedge,
    Sym,
}

#[derive(Args, Debug)]
pub struct EmbedArgs {
    pub kind: EmbedKind,
    /// Point JSON file, `-` for stdin. Repeat for tensor factors; a file may
    /// also hold a list of points.
    #[arg(long, required = true)]
    pub input: Vec<String>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Point JSON file, `-` for stdin.
    #[arg(long)]
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityKind {
    Tensor,
    Sym,
    Wedge,
}

#[derive(Args, Debug)]
pub struct DetIdentityArgs {
    pub kind: IdentityKind,
    /// Matrix JSON file(s), `-` for stdin.
    #[arg(long, conflicts_with = "generic")]
    pub input: Vec<String>,
    /// Use generic matrices of these sizes over ZZ[x...], comma separated.
    #[arg(long, value_delimiter = ',')]
    pub generic: Vec<usize>,
    /// Power for sym and wedge.
    #[arg(long)]
    pub d: Option<usize>,
    /// Cap on generic variables.
    #[arg(long, default_value_t = SYMBOLIC_VARIABLE_LIMIT)]
    pub max_vars: usize,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    DetIdentities,
    Functoriality,
    PointCount,
    TensorLemma,
    WedgeLemma,
    SymLemma,
    Injectivity,
    Corollaries,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "t", alias = "tensor")]
    T,
    #[value(name = "t-r", alias = "tensor-power")]
    TR,
    #[value(name = "a-r", alias = "wedge")]
    AR,
    #[value(name = "s-r", alias = "sym")]
    SR,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Tensor factor as `n,m`; repeat per factor.
    #[arg(long)]
    pub factor: Vec<String>,
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long)]
    pub m1: Option<usize>,
    #[arg(long)]
    pub n2: Option<usize>,
    #[arg(long)]
    pub m2: Option<usize>,
    /// Embedding for the injectivity suite.
    #[arg(long, value_enum)]
    pub which: Option<Which>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random samples instead of exhaustive enumeration, where supported.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    /// Skip the generic-matrix part of det-identities.
    #[arg(long)]
    pub no_symbolic: bool,
    /// The property is expected to fail; a witness makes the run succeed.
    #[arg(long)]
    pub expect_failure: bool,
    #[arg(long)]
    pub allow_large: bool,
    /// Also write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CounterexampleArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Algebra(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Algebra(Error::DegenerateImage) => EXIT_FAILURE,
            _ => EXIT_INVALID,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Algebra(Error::DegenerateImage) => format!(
                "{self}; this can only happen for lines (m = 1) when the characteristic divides r"
            ),
            CliError::Algebra(Error::InvalidParameters(m)) if m.contains("envelope") => {
                format!("{self}; pass --allow-large to lift the limit")
            }
            _ => self.to_string(),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn read_input(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
        }
    }

    fn json_line(&mut self, v: &serde_json::Value) -> Result<(), CliError> {
        writeln!(self.stdout, "{v}")?;
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, stdout, format: cli.format };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match cmd {
        Command::Embed(a) => cmd_embed(a, io),
        Command::Pluecker(a) => cmd_pluecker(a, io),
        Command::DetIdentity(a) => cmd_det_identity(a, io),
        Command::Enumerate(a) => cmd_enumerate(a, io),
        Command::Verify(a) => cmd_verify(a, io),
        Command::Counterexample(a) => {
            let report = run_counterexample(a.p, a.r, a.n)?;
            emit_report(&report, a.out.as_ref(), io)
        }
    }
}

fn write_point(p: &GrassmannPoint, labels: &[BasisLabel], io: &mut Io<'_>) -> Result<(), CliError> {
    match io.format {
        Format::Json => io.json_line(&json::point_to_json(p, Some(labels))),
        Format::Text => {
            writeln!(io.stdout, "Gr({}, {}) over {}", p.ambient_dim(), p.rank(), p.ring())?;
            let basis = p.basis();
            for (i, label) in labels.iter().enumerate() {
                let row: Vec<String> = basis.row(i).iter().map(|x| p.ring().show(x).to_string()).collect();
                writeln!(io.stdout, "{label}\t[{}]", row.join(", "))?;
            }
            Ok(())
        }
    }
}

fn require_r(r: Option<usize>) -> Result<usize, CliError> {
    r.ok_or_else(|| CliError::Usage("this embedding needs --r".into()))
}

fn cmd_embed(a: EmbedArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let mut points = Vec::new();
    for path in &a.input {
        let text = io.read_input(path)?;
        points.extend(json::points_from_str(&text)?);
    }
    let single = || -> Result<&GrassmannPoint, CliError> {
        match points.as_slice() {
            [p] => Ok(p),
            _ => Err(CliError::Usage(format!("expected one input point, got {}", points.len()))),
        }
    };
    let (image, labels) = match a.kind {
        EmbedKind::Tensor => {
            if a.r.is_some() {
                return Err(CliError::Usage("--r does not apply to tensor; pass one point per factor".into()));
            }
            let dims: Vec<usize> = points.iter().map(GrassmannPoint::ambient_dim).collect();
            (tensor_embed(&points)?, target_labels(EmbeddingKind::Tensor, &dims, dims.len()))
        }
        EmbedKind::TensorPower => {
            let (p, r) = (single()?, require_r(a.r)?);
            (tensor_power_embed(p, r)?, target_labels(EmbeddingKind::TensorPower, &[p.ambient_dim()], r))
        }
        EmbedKind::Wedge => {
            let (p, r) = (single()?, require_r(a.r)?);
            (wedge_embed(p, r)?, target_labels(EmbeddingKind::Wedge, &[p.ambient_dim()], r))
        }
        EmbedKind::Sym => {
            let (p, r) = (single()?, require_r(a.r)?);
            (sym_embed(p, r)?, target_labels(EmbeddingKind::Sym, &[p.ambient_dim()], r))
        }
    };
    write_point(&image, &labels, io)?;
    Ok(EXIT_OK)
}

fn cmd_pluecker(a: InputArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let text = io.read_input(&a.input)?;
    let points = json::points_from_str(&text)?;
    let [p] = points.as_slice() else {
        return Err(CliError::Usage("expected one input point".into()));
    };
    let coords = pluecker_coordinates(p)?;
    match io.format {
        Format::Json => {
            let list: Vec<serde_json::Value> = coords
                .iter()
                .map(|(idx, v)| serde_json::json!({"index": idx.entries(), "value": json::value_to_json(v)}))
                .collect();
            io.json_line(&serde_json::Value::Array(list))?;
        }
        Format::Text => {
            for (idx, v) in &coords {
                writeln!(io.stdout, "{}\t{}", BasisLabel::Wedge(idx.clone()), p.ring().show(v))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_det_identity(a: DetIdentityArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let matrices: Vec<Matrix> = if !a.generic.is_empty() {
        generic_matrices_with_limit(&a.generic, a.max_vars)?.1
    } else if !a.input.is_empty() {
        let mut ms = Vec::new();
        for path in &a.input {
            let text = io.read_input(path)?;
            ms.extend(json::matrices_from_str(&text)?);
        }
        ms
    } else {
        return Err(CliError::Usage("pass --input or --generic".into()));
    };
    let report = match a.kind {
        IdentityKind::Tensor => {
            if a.d.is_some() {
                return Err(CliError::Usage("--d does not apply to tensor".into()));
            }
            check_det_tensor_identity(&matrices)?
        }
        IdentityKind::Sym | IdentityKind::Wedge => {
            let [m] = matrices.as_slice() else {
                return Err(CliError::Usage("sym and wedge take one matrix".into()));
            };
            let d = a.d.ok_or_else(|| CliError::Usage("sym and wedge need --d".into()))?;
            if d == 0 {
                return Err(CliError::Usage("--d must be at least 1".into()));
            }
            if a.kind == IdentityKind::Sym {
                check_det_sym_identity(m, d)?
            } else {
                check_det_wedge_identity(m, d)?
            }
        }
    };
    emit_report(&report, None, io)
}

fn cmd_enumerate(a: EnumerateArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let ring = a.ring.resolve(RingChoice::Fp)?;
    let mut spec = EnumerationSpec::grassmannian(ring, a.n, a.m);
    spec.allow_large = a.allow_large;
    let points = enumerate_grassmannian(&spec)?;
    for p in &points {
        match io.format {
            Format::Json => io.json_line(&json::point_to_json(p, None))?,
            Format::Text => {
                let rows: Vec<String> = (0..p.ambient_dim())
                    .map(|i| {
                        let row: Vec<String> = p.basis().row(i).iter().map(|x| p.ring().show(x).to_string()).collect();
                        row.join(" ")
                    })
                    .collect();
                writeln!(io.stdout, "[{}]", rows.join("; "))?;
            }
        }
    }
    if io.format == Format::Text {
        writeln!(io.stdout, "# {} points of Gr({}, {}) over {}", points.len(), a.n, a.m, spec.ring)?;
    }
    Ok(EXIT_OK)
}

fn parse_factor(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--factor takes n,m, got \"{s}\""));
    let (n, m) = s.split_once(',').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?))
}

fn factors(a: &VerifyArgs) -> Result<Vec<(usize, usize)>, CliError> {
    let mut out = a.factor.iter().map(|s| parse_factor(s)).collect::<Result<Vec<_>, _>>()?;
    let numbered = [(a.n1, a.m1), (a.n2, a.m2)];
    if numbered.iter().any(|(n, m)| n.is_some() || m.is_some()) {
        if !out.is_empty() {
            return Err(CliError::Usage("use either --factor or --n1/--m1/--n2/--m2".into()));
        }
        for (n, m) in numbered {
            match (n, m) {
                (Some(n), Some(m)) => out.push((n, m)),
                _ => return Err(CliError::Usage("--n1/--m1/--n2/--m2 must be given together".into())),
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("tensor suites need --factor n,m (twice) or --n1 --m1 --n2 --m2".into()));
    }
    Ok(out)
}

fn grassmannian_spec(a: &VerifyArgs, ring: Ring) -> Result<EnumerationSpec, CliError> {
    let n = a.n.ok_or_else(|| CliError::Usage("this suite needs --n".into()))?;
    let m = a.m.ok_or_else(|| CliError::Usage("this suite needs --m".into()))?;
    let mut spec = EnumerationSpec::grassmannian(ring, n, m).with_power(a.r.unwrap_or(1));
    spec.allow_large = a.allow_large;
    Ok(spec)
}

fn cmd_verify(a: VerifyArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let expect_failure_supported = matches!(a.suite, Suite::SymLemma | Suite::Injectivity);
    if a.expect_failure && !expect_failure_supported {
        return Err(CliError::Usage("--expect-failure applies to sym-lemma and injectivity".into()));
    }
    let report = match a.suite {
        Suite::DetIdentities => {
            let ring = a.ring.resolve(RingChoice::Int)?;
            let cfg = DetIdentityConfig { ring, trials: a.trials, seed: a.seed, symbolic: !a.no_symbolic, ..Default::default() };
            verify_det_identities(&cfg)?
        }
        Suite::Functoriality => {
            let ring = a.ring.resolve(RingChoice::Int)?;
            verify_functoriality(&ring, a.trials, a.max_size, a.seed)?
        }
        Suite::PointCount => verify_point_count(&grassmannian_spec(&a, a.ring.resolve(RingChoice::Fp)?)?)?,
        Suite::TensorLemma => {
            let mut spec = EnumerationSpec::tensor(a.ring.resolve(RingChoice::Fp)?, factors(&a)?);
            spec.allow_large = a.allow_large;
            match a.samples {
                Some(k) => verify_tensor_image_lemma_sampled(&spec, k, a.seed)?,
                None => verify_tensor_image_lemma(&spec)?,
            }
        }
        Suite::WedgeLemma => verify_wedge_image_lemma(&grassmannian_spec(&a, a.ring.resolve(RingChoice::Fp)?)?)?,
        Suite::SymLemma => {
            verify_sym_image_lemma(&grassmannian_spec(&a, a.ring.resolve(RingChoice::Fp)?)?, a.expect_failure)?
        }
        Suite::Injectivity => {
            let which = a.which.ok_or_else(|| CliError::Usage("injectivity needs --which t|t-r|a-r|s-r".into()))?;
            let ring = a.ring.resolve(RingChoice::Fp)?;
            let (spec, kind) = match which {
                Which::T => {
                    let mut spec = EnumerationSpec::tensor(ring, factors(&a)?);
                    spec.allow_large = a.allow_large;
                    (spec, EmbeddingKind::Tensor)
                }
                Which::TR => (grassmannian_spec(&a, ring)?, EmbeddingKind::TensorPower),
                Which::AR => (grassmannian_spec(&a, ring)?, EmbeddingKind::Wedge),
                Which::SR => (grassmannian_spec(&a, ring)?, EmbeddingKind::Sym),
            };
            verify_embedding_injectivity(&spec, kind, a.expect_failure)?
        }
        Suite::Corollaries => {
            let ring = a.ring.resolve(RingChoice::Fp)?;
            let n = a.n.ok_or_else(|| CliError::Usage("corollaries needs --n".into()))?;
            let mut total = verify_wedge_invertibility(&ring, n)?;
            total.name = "corollaries".into();
            for k in 1..=n {
                total.absorb(verify_tensor_invertibility(&ring, k, n)?);
            }
            total.absorb(verify_sym_invertibility(&ring, n, a.max_degree, a.samples.map(|s| (s, a.seed)))?);
            total
        }
    };
    emit_report(&report, a.out.as_ref(), io)
}

fn emit_report(report: &CheckReport, out: Option<&PathBuf>, io: &mut Io<'_>) -> Result<i32, CliError> {
    let value = json::report_to_json(report);
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&value).map_err(FormatError::from)?;
        std::fs::write(path, text + "\n")?;
    }
    match io.format {
        Format::Json => io.json_line(&value)?,
        Format::Text => {
            writeln!(io.stdout, "{}", report.summary_line())?;
            for w in &report.failures {
                writeln!(io.stdout, "  witness: {}", w.description)?;
                for m in &w.matrices {
                    for line in m.to_string().lines() {
                        writeln!(io.stdout, "    {line}")?;
                    }
                    writeln!(io.stdout)?;
                }
            }
        }
    }
    Ok(if report.is_success() { EXIT_OK } else { EXIT_FAILURE })
}
