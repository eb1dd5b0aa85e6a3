//! `evfe` command-line front end. [`run`] is the whole program minus process
//! plumbing, so it can be driven directly from tests.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use evfe::eigensolve::eigenvalues;
use evfe::identity::{
    check_interlacing, cluster_spectrum, magnitude_column, magnitude_table_with_tol, principal_minor,
    resolvent_det_form, resolvent_pf_form,
};
use evfe::io::{
    format_real, generate, parse_document, serialize_document, write_column, write_table, GeneratorKind,
    GeneratorSpec, Layout, MatrixDocument, TableFormat,
};
use evfe::verify::{compare_detailed, INTERLACING_RTOL};
use evfe::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const NUMERICAL: i32 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "evfe", version, about = "Eigenvector component magnitudes from eigenvalues")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Det,
    Pf,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Goe,
    Gue,
    Jacobi,
    Diagonal,
    Clustered,
}

impl From<KindArg> for GeneratorKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Goe => GeneratorKind::Goe,
            KindArg::Gue => GeneratorKind::Gue,
            KindArg::Jacobi => GeneratorKind::Jacobi,
            KindArg::Diagonal => GeneratorKind::Diagonal,
            KindArg::Clustered => GeneratorKind::Clustered,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LayoutArg {
    Dense,
    Coordinate,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Squared eigenvector components of every (or one) coordinate.
    Magnitudes {
        file: PathBuf,
        /// 1-based coordinate; emits only that column.
        #[arg(long)]
        col: Option<usize>,
        /// Absolute cluster tolerance (default 1e-8·max(1, ‖A‖₂)).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Samples f(λ) = ⟨e_J, (A − λI)⁻¹ e_J⟩ on a uniform grid.
    Resolvent {
        file: PathBuf,
        #[arg(long)]
        col: usize,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long, value_enum, default_value = "both")]
        form: FormArg,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compares the identity against a full eigendecomposition.
    Verify {
        file: Option<PathBuf>,
        #[arg(long = "gen", value_enum)]
        kind: Option<KindArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cluster multiplicities for the clustered kind, comma separated.
        #[arg(long, value_delimiter = ',')]
        mult: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        cluster_tol: Option<f64>,
    },
    /// Writes a generated matrix document.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_delimiter = ',')]
        mult: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "dense")]
        layout: LayoutArg,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Checks Cauchy interlacing between A and one principal minor.
    Interlace {
        file: PathBuf,
        #[arg(long)]
        col: usize,
        /// Absolute slack (default 1e-10·‖A‖₂).
        #[arg(long)]
        tol: Option<f64>,
    },
}

/// Exit status with the bytes destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: exit::SUCCESS, stdout: stdout.into_bytes(), stderr: Vec::new() }
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Exit code the CLI uses for a library error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        exit::NUMERICAL
    } else {
        exit::USAGE
    }
}

fn single_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, kind, msg) = match self {
            Failure::Usage(m) => (exit::USAGE, "usage", m),
            Failure::Io(m) => (exit::USAGE, "io", m),
            Failure::Lib(e) => (exit_code(&e), e.kind(), e.to_string()),
        };
        Outcome { code, stdout: Vec::new(), stderr: format!("error:{kind}:{}\n", single_line(&msg)).into_bytes() }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
                    Failure::Usage(first).into_outcome()
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(f) => f.into_outcome(),
    }
}

fn read_document(path: &Path) -> Result<MatrixDocument, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_document(&bytes, path.display().to_string())?)
}

/// 1-based CLI coordinate to 0-based index.
fn coordinate(col: usize, n: usize) -> Result<usize, Failure> {
    if col == 0 || col > n {
        return Err(Failure::Lib(Error::IndexOutOfRange { index: col, n }));
    }
    Ok(col - 1)
}

fn table_format(f: FormatArg) -> TableFormat {
    match f {
        FormatArg::Csv => TableFormat::Csv,
        FormatArg::Json => TableFormat::Json,
    }
}

fn check_tol(tol: Option<f64>) -> Result<(), Failure> {
    match tol {
        Some(t) if !(t >= 0.0 && t.is_finite()) => Err(Failure::Usage(format!("--tol must be a nonnegative number, got {t}"))),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct InterlaceJson {
    coordinate: usize,
    pass: bool,
    worst_slack: Option<f64>,
    /// 1-based index of the minor eigenvalue at the worst slack.
    worst_index: Option<usize>,
    tol: f64,
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Magnitudes { file, col, tol, format } => {
            check_tol(tol)?;
            let doc = read_document(&file)?;
            let a = &doc.matrix;
            let fmt = table_format(format);
            match col {
                None => {
                    let t = magnitude_table_with_tol(a, tol)?;
                    let meta = matches!(fmt, TableFormat::Json).then_some(&t.clustering);
                    Ok(Outcome::ok(write_table(&t, fmt, meta)))
                }
                Some(c) => {
                    let j = coordinate(c, a.n())?;
                    let (spec, weights) = magnitude_column(a, j, tol)?;
                    let clustering = cluster_spectrum(&spec, tol.unwrap_or_else(|| spec.default_cluster_tol()));
                    let meta = matches!(fmt, TableFormat::Json).then_some(&clustering);
                    Ok(Outcome::ok(write_column(spec.values(), &weights, c, fmt, meta)))
                }
            }
        }
        Command::Resolvent { file, col, from, to, samples, form, tol } => {
            check_tol(tol)?;
            if samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            if !(from.is_finite() && to.is_finite()) {
                return Err(Failure::Usage("--from and --to must be finite".into()));
            }
            let doc = read_document(&file)?;
            let a = &doc.matrix;
            let j = coordinate(col, a.n())?;
            let spec_m = eigenvalues(&principal_minor(a, j)?)?;
            let (spec_a, weights) = magnitude_column(a, j, tol)?;
            let skip_below = 1e-9 * spec_a.spread();
            let mut out = String::from("lambda,det_form,pf_form,nearest_pole_gap\n");
            for k in 0..samples {
                let lambda = if k + 1 == samples && samples > 1 {
                    to
                } else if samples == 1 {
                    from
                } else {
                    from + (to - from) * k as f64 / (samples - 1) as f64
                };
                let gap = spec_a.values().iter().map(|&l| (l - lambda).abs()).fold(f64::INFINITY, f64::min);
                if gap < skip_below {
                    continue;
                }
                let det = (form != FormArg::Pf).then(|| resolvent_det_form(&spec_a, &spec_m, lambda)).transpose()?;
                let pf = (form != FormArg::Det).then(|| resolvent_pf_form(&weights, &spec_a, lambda)).transpose()?;
                let cell = |s: Option<evfe::identity::ResolventSample<f64>>| s.map(|s| format_real(s.value)).unwrap_or_default();
                out.push_str(&format!("{},{},{},{}\n", format_real(lambda), cell(det), cell(pf), format_real(gap)));
            }
            Ok(Outcome::ok(out))
        }
        Command::Verify { file, kind, n, seed, mult, tol, cluster_tol } => {
            check_tol(cluster_tol)?;
            if !(tol >= 0.0) {
                return Err(Failure::Usage("--tol must be nonnegative".into()));
            }
            let (a, provenance) = match (file, kind) {
                (Some(_), Some(_)) => {
                    return Err(Failure::Usage("give either FILE or --gen, not both".into()));
                }
                (None, None) => return Err(Failure::Usage("verify needs FILE or --gen KIND --n N".into())),
                (Some(path), None) => {
                    if n.is_some() || mult.is_some() {
                        return Err(Failure::Usage("--n/--mult only apply with --gen".into()));
                    }
                    let doc = read_document(&path)?;
                    (doc.matrix, doc.source)
                }
                (None, Some(k)) => {
                    let n = n.ok_or_else(|| Failure::Usage("--gen requires --n".into()))?;
                    let spec = GeneratorSpec { kind: k.into(), n, seed, cluster_multiplicities: mult };
                    (generate(&spec)?, spec.provenance())
                }
            };
            let c = compare_detailed(&a, tol, cluster_tol, &provenance)?;
            let mut s = serde_json::to_string_pretty(&c.report).expect("finite report");
            s.push('\n');
            let code = if c.report.pass { exit::SUCCESS } else { exit::VERIFICATION_FAILED };
            Ok(Outcome { code, stdout: s.into_bytes(), stderr: Vec::new() })
        }
        Command::Gen { kind, n, seed, mult, layout, output } => {
            let spec = GeneratorSpec { kind: kind.into(), n, seed, cluster_multiplicities: mult };
            let a = generate(&spec)?;
            let layout = match layout {
                LayoutArg::Dense => Layout::Dense,
                LayoutArg::Coordinate => Layout::Coordinate,
            };
            let text = serialize_document(&MatrixDocument::from_matrix(a, spec.provenance()), layout);
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Interlace { file, col, tol } => {
            check_tol(tol)?;
            let doc = read_document(&file)?;
            let a = &doc.matrix;
            let j = coordinate(col, a.n())?;
            let spec_a = eigenvalues(a)?;
            let spec_m = eigenvalues(&principal_minor(a, j)?)?;
            let tol = tol.unwrap_or(INTERLACING_RTOL * spec_a.norm());
            let r = check_interlacing(&spec_a, &spec_m, tol)?;
            let report = InterlaceJson {
                coordinate: col,
                pass: r.pass,
                worst_slack: r.worst_slack,
                worst_index: r.worst_index.map(|k| k + 1),
                tol,
            };
            let mut s = serde_json::to_string_pretty(&report).expect("finite report");
            s.push('\n');
            let code = if r.pass { exit::SUCCESS } else { exit::VERIFICATION_FAILED };
            Ok(Outcome { code, stdout: s.into_bytes(), stderr: Vec::new() })
        }
    }
}
