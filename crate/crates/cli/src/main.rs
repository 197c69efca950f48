use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use acd4::constructions::{fold, lift_binary_lcd, mix, mix_lcd_pair, self_dual_complement_acd, unfold};
use acd4::format::{parse_raw, write_additive, write_binary, write_linear, RawCode};
use acd4::paperdata::{self, DataSource, VerifyOptions};
use acd4::search::{column_scaling_search, random_search_parallel, SearchConfig, SearchResult};
use acd4::{AdditiveCode, BinaryCode, CodeFile, Error, Form, Gf4, LinearForm};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_LIMIT: u8 = 4;
const EXIT_VERIFY: u8 = 5;
const EXIT_EXHAUSTED: u8 = 6;

#[derive(Parser)]
#[command(name = "acd4", version, about = "Additive complementary dual codes over GF(4)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, weight distribution and duality status of a code.
    Info {
        /// Code file, or the id of a built-in reference code.
        code: String,
    },
    /// Dual code under an inner product.
    Dual {
        code: String,
        /// Required for GF(4) codes; binary codes use the standard dot product.
        #[arg(long)]
        form: Option<FormArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a code from binary ingredients.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Random search for an ACD code with given parameters.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value = "trE")]
        form: FormArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_trials: u64,
        /// Trials evaluated in parallel per round.
        #[arg(long, default_value_t = 4096)]
        chunk: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multiply columns by units until the code becomes ACD.
    ScaleSearch {
        #[arg(long = "in")]
        input: String,
        #[arg(long, default_value = "trE")]
        form: FormArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_trials: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the properties of the built-in reference codes.
    VerifyPaper {
        #[arg(long)]
        only: Option<String>,
        /// Read the reference matrices from this directory instead.
        #[arg(long)]
        data_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[arg(long)]
        skip_paut: bool,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// GF(4)-span of a binary LCD code.
    Lift { c: String },
    /// a·C + b·D for binary codes C, D and distinct nonzero scalars a, b.
    Mix {
        a: Gf4,
        c: String,
        b: Gf4,
        d: String,
    },
    /// a·C + b·D where D is a complement of the self-dual code C.
    SelfDual {
        c: String,
        #[arg(long, default_value = "1")]
        a: Gf4,
        #[arg(long, default_value = "w")]
        b: Gf4,
    },
    /// ω·C + ω²·D for binary LCD codes C, D.
    LcdPair { c: String, d: String },
    /// ωA + ω²B for a binary [2n, k] code with generator [A | B].
    Fold { c: String },
    /// [Tr(ωG) | Tr(ω²G)] for an additive code with generator G.
    Unfold { c: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormArg {
    #[value(name = "trH")]
    TrH,
    #[value(name = "trE")]
    TrE,
    #[value(name = "H")]
    H,
    #[value(name = "E")]
    E,
}

impl FormArg {
    fn trace_form(self) -> Result<Form, Failure> {
        match self {
            FormArg::TrH => Ok(Form::TraceHermitian),
            FormArg::TrE => Ok(Form::TraceEuclidean),
            FormArg::H | FormArg::E => Err(Failure::new(
                EXIT_PRECONDITION,
                "the H and E forms apply to GF(4)-linear codes only; use trH or trE",
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Table,
    Lines,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Info { code } => info(&code, out),
        Command::Dual { code, form, out: path } => dual(&code, form, path.as_deref(), out),
        Command::Construct { kind, out: path } => construct(kind, path.as_deref(), out),
        Command::Search {
            n,
            k,
            d,
            form,
            seed,
            max_trials,
            chunk,
            out: path,
        } => {
            let cfg = SearchConfig {
                n,
                k,
                d_min: d,
                form: form.trace_form()?,
                seed,
                max_trials,
            };
            let result = random_search_parallel(&cfg, chunk)?;
            report_search(&result, cfg.form, path.as_deref(), out)
        }
        Command::ScaleSearch {
            input,
            form,
            seed,
            max_trials,
            out: path,
        } => {
            let code = load_additive(&input)?;
            let form = form.trace_form()?;
            let result = column_scaling_search(&code, form, seed, max_trials)?;
            report_search(&result, form, path.as_deref(), out)
        }
        Command::VerifyPaper {
            only,
            data_dir,
            format,
            skip_paut,
        } => {
            let opts = VerifyOptions {
                only,
                data: data_dir.map_or(DataSource::Embedded, DataSource::Dir),
                skip_paut,
                ..Default::default()
            };
            let report = paperdata::verify_all(&opts);
            out.push_str(&match format {
                ReportFormat::Table => report.to_table(),
                ReportFormat::Lines => report.to_lines(),
            });
            if report.passed() {
                Ok(())
            } else {
                let failed: Vec<String> = report.failures().map(|c| format!("{} {}", c.id, c.name)).collect();
                Err(Failure::new(
                    EXIT_VERIFY,
                    format!("{} check(s) failed: {}", failed.len(), failed.join("; ")),
                ))
            }
        }
    }
}

/// Reads a code file, falling back to the built-in reference codes by id.
fn load_raw(arg: &str) -> Result<RawCode, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{arg}: {e}")))?;
        return parse_raw(&text).map_err(|e| {
            let mut f = Failure::from(e);
            f.message = format!("{arg}: {}", f.message);
            f
        });
    }
    match paperdata::catalogue().into_iter().find(|p| p.id == arg) {
        Some(p) => Ok(DataSource::Embedded.load_raw(p.file)?),
        None => Err(Failure::new(
            EXIT_PARSE,
            format!("{arg}: no such file or reference code id ({})", paperdata::IDS.join(", ")),
        )),
    }
}

fn load_binary(arg: &str) -> Result<BinaryCode, Failure> {
    match load_raw(arg)?.into_code() {
        CodeFile::Binary(b) => Ok(b),
        other => Err(Failure::new(
            EXIT_PRECONDITION,
            format!("{arg}: expected a binary code, found {}", other.kind().keyword()),
        )),
    }
}

fn load_additive(arg: &str) -> Result<AdditiveCode, Failure> {
    match load_raw(arg)?.into_code() {
        CodeFile::Additive(a) => Ok(a),
        CodeFile::Linear(l) => Ok(l.to_additive()),
        CodeFile::Binary(_) => Err(Failure::new(
            EXIT_PRECONDITION,
            format!("{arg}: expected a GF(4) code, found binary"),
        )),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn show_distance(d: Option<usize>) -> String {
    d.map_or_else(|| "-".to_owned(), |d| d.to_string())
}

fn additive_summary(c: &AdditiveCode, out: &mut String) -> Result<(), Failure> {
    let wd = c.weight_distribution()?;
    let _ = writeln!(out, "parameters: ({}, 2^{}, {})", c.n(), c.k(), show_distance(wd.min_distance()));
    let _ = writeln!(out, "weight distribution: {wd}");
    let _ = writeln!(out, "linear: {}", yes_no(c.is_linear()));
    let h = c.is_acd(Form::TraceHermitian);
    let odd = if c.k() % 2 == 1 { " (k odd)" } else { "" };
    let _ = writeln!(out, "trace-Hermitian ACD: {}{odd}", yes_no(h));
    let _ = writeln!(out, "trace-Euclidean ACD: {}", yes_no(c.is_acd(Form::TraceEuclidean)));
    Ok(())
}

fn binary_summary(c: &BinaryCode, out: &mut String) -> Result<(), Failure> {
    let weights = c.weight_distribution()?;
    let d = weights.iter().enumerate().skip(1).find(|(_, &a)| a > 0).map(|(w, _)| w);
    let _ = writeln!(out, "parameters: [{}, {}, {}]", c.n(), c.k(), show_distance(d));
    let parts: Vec<String> = weights
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(w, a)| format!("A{w}={a}"))
        .collect();
    let _ = writeln!(out, "weight distribution: {}", parts.join(", "));
    let _ = writeln!(out, "LCD: {}", yes_no(c.is_lcd()));
    let _ = writeln!(out, "self-dual: {}", yes_no(c.is_self_dual()));
    let _ = writeln!(out, "cyclic: {}", yes_no(c.is_cyclic()));
    Ok(())
}

fn info(arg: &str, out: &mut String) -> Result<(), Failure> {
    let raw = load_raw(arg)?;
    let two_rank = raw.matrix().two_rank();
    let _ = writeln!(out, "kind: {}", raw.kind.keyword());
    let _ = writeln!(out, "n: {}", raw.n);
    let _ = writeln!(out, "generator rows: {}", raw.rows.len());
    match raw.into_code() {
        CodeFile::Binary(b) => {
            let _ = writeln!(out, "rank: {}", b.k());
            binary_summary(&b, out)
        }
        CodeFile::Linear(l) => {
            let _ = writeln!(out, "dimension: {}", l.dim());
            let _ = writeln!(out, "2-rank: {}", 2 * l.dim());
            for form in [LinearForm::Hermitian, LinearForm::Euclidean] {
                let _ = writeln!(out, "{} LCD: {}", form.name(), yes_no(l.is_lcd(form)));
            }
            additive_summary(&l.to_additive(), out)
        }
        CodeFile::Additive(a) => {
            let _ = writeln!(out, "2-rank: {two_rank}");
            additive_summary(&a, out)
        }
    }
}

fn emit(text: String, path: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::new(EXIT_PRECONDITION, format!("{}: {e}", p.display()))),
        None => {
            out.push_str(&text);
            Ok(())
        }
    }
}

/// `text` with each line of `summary` prepended as a comment.
fn with_comments(summary: &str, text: String) -> String {
    let mut s = String::new();
    for line in summary.lines() {
        let _ = writeln!(s, "# {line}");
    }
    s + &text
}

fn dual(arg: &str, form: Option<FormArg>, path: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let code = load_raw(arg)?.into_code();
    let text = match (code, form) {
        (CodeFile::Binary(b), None) => write_binary(&b.dual()),
        (CodeFile::Binary(_), Some(_)) => {
            return Err(Failure::new(EXIT_PRECONDITION, "binary codes take no --form"));
        }
        (_, None) => return Err(Failure::new(EXIT_PRECONDITION, "--form is required for GF(4) codes")),
        (CodeFile::Linear(l), Some(FormArg::H)) => write_linear(&l.dual(LinearForm::Hermitian)),
        (CodeFile::Linear(l), Some(FormArg::E)) => write_linear(&l.dual(LinearForm::Euclidean)),
        (CodeFile::Linear(l), Some(f)) => write_additive(&l.to_additive().dual(f.trace_form()?)),
        (CodeFile::Additive(a), Some(f)) => write_additive(&a.dual(f.trace_form()?)),
    };
    emit(text, path, out)
}

fn construct(kind: ConstructKind, path: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let mut summary = String::new();
    let text = match kind {
        ConstructKind::Unfold { c } => {
            let b = unfold(&load_additive(&c)?);
            binary_summary(&b, &mut summary)?;
            write_binary(&b)
        }
        other => {
            let code = match other {
                ConstructKind::Lift { c } => lift_binary_lcd(&load_binary(&c)?)?,
                ConstructKind::Mix { a, c, b, d } => mix(a, &load_binary(&c)?, b, &load_binary(&d)?)?,
                ConstructKind::SelfDual { c, a, b } => self_dual_complement_acd(&load_binary(&c)?, a, b)?,
                ConstructKind::LcdPair { c, d } => mix_lcd_pair(&load_binary(&c)?, &load_binary(&d)?)?,
                ConstructKind::Fold { c } => fold(&load_binary(&c)?)?,
                ConstructKind::Unfold { .. } => unreachable!("handled above"),
            };
            additive_summary(&code, &mut summary)?;
            write_additive(&code)
        }
    };
    let text = with_comments(&summary, text);
    if path.is_some() {
        out.push_str(&summary);
    }
    emit(text, path, out)
}

fn report_search(result: &SearchResult, form: Form, path: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    let Some(code) = &result.found else {
        return Err(Failure::new(
            EXIT_EXHAUSTED,
            format!(
                "search exhausted after {} trials (seed {}, {form})",
                result.trials_used, result.seed
            ),
        ));
    };
    let mut summary = String::new();
    let _ = writeln!(summary, "seed: {}", result.seed);
    let _ = writeln!(summary, "trials: {}", result.trials_used);
    if let Some(scales) = &result.scaling {
        let s: String = scales.iter().map(|x| x.symbol()).collect();
        let _ = writeln!(summary, "column scales: {s}");
    }
    additive_summary(code, &mut summary)?;
    let text = with_comments(&summary, write_additive(code));
    if path.is_some() {
        out.push_str(&summary);
    }
    emit(text, path, out)
}
