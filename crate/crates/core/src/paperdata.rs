//! Reference generator matrices and their expected properties.
//!
//! The matrices live in `data/*.code` (embedded at build time, or read from a
//! directory at run time). [`verify_all`] recomputes every property from the
//! matrices and compares it against the recorded expectation.

use std::fmt::{self, Write as _};
use std::path::PathBuf;

use crate::additive_code::{AdditiveCode, Form};
use crate::binary_code::BinaryCode;
use crate::constructions::{fold, mix};
use crate::error::{Error, Result};
use crate::f2linalg::rank2;
use crate::format::{parse_raw, CodeFile, CodeKind, RawCode};
use crate::gf4::Gf4;
use crate::linear_code::LinearForm;

/// Brute-force permutation search is run for codes up to this length.
pub const DEFAULT_PAUT_LIMIT: usize = 8;

pub const IDS: [&str; 12] = [
    "Hexacode", "Ex2_C", "Ex2_D", "Ex2_C4", "Ex3_C1", "Ex3_C2", "K1", "K2_1", "K2_2", "K2_3", "K3",
    "K4",
];

const EMBEDDED: [(&str, &str); 13] = [
    ("hexacode.code", include_str!("../data/hexacode.code")),
    ("hexacode_additive.code", include_str!("../data/hexacode_additive.code")),
    ("ex2_c.code", include_str!("../data/ex2_c.code")),
    ("ex2_d.code", include_str!("../data/ex2_d.code")),
    ("ex2_c4.code", include_str!("../data/ex2_c4.code")),
    ("ex3_c1.code", include_str!("../data/ex3_c1.code")),
    ("ex3_c2.code", include_str!("../data/ex3_c2.code")),
    ("k1.code", include_str!("../data/k1.code")),
    ("k2_1.code", include_str!("../data/k2_1.code")),
    ("k2_2.code", include_str!("../data/k2_2.code")),
    ("k2_3.code", include_str!("../data/k2_3.code")),
    ("k3.code", include_str!("../data/k3.code")),
    ("k4.code", include_str!("../data/k4.code")),
];

/// Expected properties of one reference code.
#[derive(Clone, Debug)]
pub struct PaperCode {
    pub id: &'static str,
    pub file: &'static str,
    pub kind: CodeKind,
    pub n: usize,
    /// Binary dimension for binary codes, GF(4) dimension for linear codes,
    /// 2-dimension for additive codes.
    pub k: usize,
    pub d: usize,
    pub binary_lcd: Option<bool>,
    pub self_dual: Option<bool>,
    pub hermitian_lcd: Option<bool>,
    pub euclidean_lcd: Option<bool>,
    /// Trace-Hermitian ACD status of the code (as an additive code).
    pub acd_trace_hermitian: Option<bool>,
    pub acd_trace_euclidean: Option<bool>,
    pub linear: Option<bool>,
    pub weights: Option<&'static [(usize, u64)]>,
    pub paut: Option<u64>,
    /// Recorded automorphism group order that is beyond brute force here.
    pub paut_unverified: Option<&'static str>,
}

impl PaperCode {
    const fn new(id: &'static str, file: &'static str, kind: CodeKind, n: usize, k: usize, d: usize) -> Self {
        Self {
            id,
            file,
            kind,
            n,
            k,
            d,
            binary_lcd: None,
            self_dual: None,
            hermitian_lcd: None,
            euclidean_lcd: None,
            acd_trace_hermitian: None,
            acd_trace_euclidean: None,
            linear: None,
            weights: None,
            paut: None,
            paut_unverified: None,
        }
    }
}

/// The reference catalogue.
pub fn catalogue() -> Vec<PaperCode> {
    use CodeKind::*;
    vec![
        PaperCode {
            hermitian_lcd: Some(false),
            acd_trace_hermitian: Some(false),
            linear: Some(true),
            ..PaperCode::new("Hexacode", "hexacode.code", Linear, 6, 3, 4)
        },
        PaperCode {
            binary_lcd: Some(false),
            self_dual: Some(true),
            ..PaperCode::new("Ex2_C", "ex2_c.code", Binary, 4, 2, 2)
        },
        PaperCode::new("Ex2_D", "ex2_d.code", Binary, 4, 2, 2),
        PaperCode {
            acd_trace_hermitian: Some(true),
            ..PaperCode::new("Ex2_C4", "ex2_c4.code", Additive, 4, 4, 2)
        },
        PaperCode {
            binary_lcd: Some(true),
            ..PaperCode::new("Ex3_C1", "ex3_c1.code", Binary, 12, 6, 4)
        },
        PaperCode {
            acd_trace_euclidean: Some(true),
            ..PaperCode::new("Ex3_C2", "ex3_c2.code", Additive, 6, 6, 4)
        },
        PaperCode {
            euclidean_lcd: Some(true),
            acd_trace_euclidean: Some(true),
            ..PaperCode::new("K1", "k1.code", Linear, 6, 2, 4)
        },
        PaperCode {
            acd_trace_euclidean: Some(true),
            acd_trace_hermitian: Some(false),
            weights: Some(&[(0, 1), (4, 17), (5, 8), (6, 6)]),
            paut: Some(4),
            ..PaperCode::new("K2_1", "k2_1.code", Additive, 6, 5, 4)
        },
        PaperCode {
            acd_trace_euclidean: Some(true),
            acd_trace_hermitian: Some(false),
            weights: Some(&[(0, 1), (4, 17), (5, 8), (6, 6)]),
            paut: Some(1),
            ..PaperCode::new("K2_2", "k2_2.code", Additive, 6, 5, 4)
        },
        PaperCode {
            acd_trace_euclidean: Some(true),
            acd_trace_hermitian: Some(false),
            weights: Some(&[(0, 1), (4, 15), (5, 12), (6, 4)]),
            paut: Some(1),
            ..PaperCode::new("K2_3", "k2_3.code", Additive, 6, 5, 4)
        },
        PaperCode {
            acd_trace_euclidean: Some(true),
            weights: Some(&[(0, 1), (26, 105), (28, 15), (30, 7)]),
            paut_unverified: Some("84"),
            ..PaperCode::new("K3", "k3.code", Additive, 35, 7, 26)
        },
        PaperCode {
            acd_trace_euclidean: Some(true),
            weights: Some(&[(0, 1), (72, 118), (80, 9)]),
            paut_unverified: Some("2^44*3^17*7"),
            ..PaperCode::new("K4", "k4.code", Additive, 96, 7, 72)
        },
    ]
}

/// Where code files are read from.
#[derive(Clone, Debug, Default)]
pub enum DataSource {
    #[default]
    Embedded,
    Dir(PathBuf),
}

impl DataSource {
    pub fn read(&self, file: &str) -> Result<String> {
        match self {
            DataSource::Embedded => EMBEDDED
                .iter()
                .find(|(name, _)| *name == file)
                .map(|(_, text)| (*text).to_owned())
                .ok_or_else(|| Error::InvalidInput(format!("no embedded data file {file}"))),
            DataSource::Dir(dir) => std::fs::read_to_string(dir.join(file))
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.join(file).display()))),
        }
    }

    pub fn load_raw(&self, file: &str) -> Result<RawCode> {
        parse_raw(&self.read(file)?)
    }

    pub fn load(&self, file: &str) -> Result<CodeFile> {
        Ok(self.load_raw(file)?.into_code())
    }
}

/// Reads a reference code by id from the embedded data.
pub fn load(id: &str) -> Result<CodeFile> {
    let entry = catalogue()
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| Error::InvalidInput(format!("unknown reference code {id:?}")))?;
    DataSource::Embedded.load(entry.file)
}

/// Embedded text of every data file, keyed by file name.
pub fn embedded_files() -> impl Iterator<Item = (&'static str, &'static str)> {
    EMBEDDED.iter().copied()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded value that is not recomputed.
    Unverified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unverified => "UNVERIFIED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub name: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, id: &str, name: &str, expected: impl fmt::Display, got: impl fmt::Display) {
        let (expected, got) = (expected.to_string(), got.to_string());
        let status = if expected == got { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            id: id.into(),
            name: name.into(),
            expected,
            got,
            status,
        });
    }

    fn push_result<T: fmt::Display>(&mut self, id: &str, name: &str, expected: impl fmt::Display, got: Result<T>) {
        match got {
            Ok(v) => self.push(id, name, expected, v),
            Err(e) => self.push(id, name, expected, format!("error: {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// One tab-separated line per check: id, check, expected, got, status.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", c.id, c.name, c.expected, c.got, c.status);
        }
        out
    }

    /// Aligned human-readable table with a summary line.
    pub fn to_table(&self) -> String {
        let headers = ["code", "check", "expected", "got", "status"];
        let cells: Vec<[String; 5]> = self
            .checks
            .iter()
            .map(|c| {
                [
                    c.id.clone(),
                    c.name.clone(),
                    c.expected.clone(),
                    c.got.clone(),
                    c.status.to_string(),
                ]
            })
            .collect();
        let mut widths = headers.map(str::len);
        for row in &cells {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, row: &[String]| {
            let parts: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &headers.map(String::from));
        line(&mut out, &widths.map(|w| "-".repeat(w)));
        for row in &cells {
            line(&mut out, row);
        }
        let _ = writeln!(
            out,
            "\n{} passed, {} failed, {} unverified",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Unverified)
        );
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Restrict to one code id.
    pub only: Option<String>,
    pub data: DataSource,
    /// Skip the permutation brute force entirely.
    pub skip_paut: bool,
    pub paut_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            only: None,
            data: DataSource::Embedded,
            skip_paut: false,
            paut_limit: DEFAULT_PAUT_LIMIT,
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn show_dist(d: Result<Option<usize>>) -> Result<String> {
    d.map(|d| d.map_or_else(|| "none".to_owned(), |d| d.to_string()))
}

fn show_weights(w: &[(usize, u64)]) -> String {
    let parts: Vec<String> = w.iter().map(|(i, c)| format!("A{i}={c}")).collect();
    parts.join(", ")
}

fn load_binary(data: &DataSource, file: &str) -> Result<BinaryCode> {
    match data.load(file)? {
        CodeFile::Binary(b) => Ok(b),
        other => Err(Error::InvalidInput(format!("{file}: expected binary, found {:?}", other.kind()))),
    }
}

/// Checks one reference code against its expectations.
fn verify_code(p: &PaperCode, opts: &VerifyOptions, report: &mut Report) {
    let id = p.id;
    let raw = match opts.data.load_raw(p.file) {
        Ok(raw) => raw,
        Err(e) => {
            report.push(id, "load", "ok", format!("error: {e}"));
            return;
        }
    };
    report.push(id, "kind", p.kind.keyword(), raw.kind.keyword());
    report.push(id, "generator rows", p.k, raw.rows.len());
    let code = raw.into_code();

    // additive view used for the trace-form checks
    let additive = match &code {
        CodeFile::Binary(b) => {
            report.push(id, "parameters [n,k,d]", format!("[{},{},{}]", p.n, p.k, p.d), {
                match show_dist(b.min_distance()) {
                    Ok(d) => format!("[{},{},{}]", b.n(), b.k(), d),
                    Err(e) => format!("error: {e}"),
                }
            });
            if let Some(lcd) = p.binary_lcd {
                report.push(id, "binary LCD", yes_no(lcd), yes_no(b.is_lcd()));
            }
            if let Some(sd) = p.self_dual {
                report.push(id, "self-dual", yes_no(sd), yes_no(b.is_self_dual()));
            }
            None
        }
        CodeFile::Linear(l) => {
            report.push(id, "parameters [n,k,d]", format!("[{},{},{}]", p.n, p.k, p.d), {
                match show_dist(l.min_distance()) {
                    Ok(d) => format!("[{},{},{}]", l.n(), l.dim(), d),
                    Err(e) => format!("error: {e}"),
                }
            });
            if let Some(h) = p.hermitian_lcd {
                report.push(id, "Hermitian LCD", yes_no(h), yes_no(l.is_lcd(LinearForm::Hermitian)));
            }
            if let Some(e) = p.euclidean_lcd {
                report.push(id, "Euclidean LCD", yes_no(e), yes_no(l.is_lcd(LinearForm::Euclidean)));
            }
            Some(l.to_additive())
        }
        CodeFile::Additive(a) => {
            report.push(id, "parameters (n,2^k,d)", format!("({},2^{},{})", p.n, p.k, p.d), {
                match show_dist(a.min_distance()) {
                    Ok(d) => format!("({},2^{},{})", a.n(), a.k(), d),
                    Err(e) => format!("error: {e}"),
                }
            });
            Some(a.clone())
        }
    };

    if let Some(a) = &additive {
        if let Some(v) = p.linear {
            report.push(id, "GF(4)-linear", yes_no(v), yes_no(a.is_linear()));
        }
        if let Some(v) = p.acd_trace_hermitian {
            report.push(id, "trace-Hermitian ACD", yes_no(v), yes_no(a.is_acd(Form::TraceHermitian)));
        }
        if let Some(v) = p.acd_trace_euclidean {
            report.push(id, "trace-Euclidean ACD", yes_no(v), yes_no(a.is_acd(Form::TraceEuclidean)));
        }
        if let Some(w) = p.weights {
            report.push_result(
                id,
                "weight distribution",
                show_weights(w),
                a.weight_distribution().map(|wd| wd.to_string()),
            );
        }
        if let Some(order) = p.paut {
            if !opts.skip_paut {
                report.push_result(id, "|PAut|", order, a.paut_order(opts.paut_limit));
            }
        }
        if let Some(order) = p.paut_unverified {
            report.checks.push(Check {
                id: id.into(),
                name: "|PAut|".into(),
                expected: order.into(),
                got: format!("not computed (n={} > {})", a.n(), opts.paut_limit),
                status: Status::Unverified,
            });
        }
    }

    verify_relations(id, opts, additive.as_ref(), &code, report);
}

/// Identities linking reference codes to each other.
fn verify_relations(
    id: &str,
    opts: &VerifyOptions,
    additive: Option<&AdditiveCode>,
    code: &CodeFile,
    report: &mut Report,
) {
    let data = &opts.data;
    match (id, code) {
        ("Hexacode", CodeFile::Linear(l)) => {
            let got = data.load("hexacode_additive.code").map(|f| match f {
                CodeFile::Additive(a) => yes_no(a.equals(&l.to_additive())),
                _ => "wrong kind",
            });
            report.push_result(id, "equals 6-row additive generator", "yes", got);
            let self_dual = l.dual(LinearForm::Hermitian).to_additive().equals(&l.to_additive());
            report.push(id, "Hermitian self-dual", "yes", yes_no(self_dual));
        }
        ("Ex2_D", CodeFile::Binary(d)) => {
            let got = load_binary(data, "ex2_c.code").and_then(|c| {
                let stacked = c.generator().vstack(d.generator())?;
                Ok(rank2(&stacked))
            });
            report.push_result(id, "rank of stacked C and D", 4, got);
        }
        ("Ex2_C4", _) => {
            let got = (|| -> Result<&'static str> {
                let c = load_binary(data, "ex2_c.code")?;
                let d = load_binary(data, "ex2_d.code")?;
                let built = mix(Gf4::ONE, &c, Gf4::OMEGA, &d)?;
                Ok(yes_no(additive.is_some_and(|a| a.equals(&built))))
            })();
            report.push_result(id, "equals C + wD", "yes", got);
        }
        ("Ex3_C2", _) => {
            let got = (|| -> Result<&'static str> {
                let folded = fold(&load_binary(data, "ex3_c1.code")?)?;
                Ok(yes_no(additive.is_some_and(|a| a.equals(&folded))))
            })();
            report.push_result(id, "equals fold(Ex3_C1)", "yes", got);
        }
        _ => {}
    }
}

/// Recomputes every recorded property; see [`Report`].
pub fn verify_all(opts: &VerifyOptions) -> Report {
    let mut report = Report::default();
    let entries = catalogue();
    if let Some(only) = &opts.only {
        if !entries.iter().any(|p| p.id == only) {
            report.push(only, "known code id", "one of the reference ids", "unknown");
            return report;
        }
    }
    for p in entries.iter().filter(|p| opts.only.as_deref().is_none_or(|o| o == p.id)) {
        verify_code(p, opts, &mut report);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_covers_every_id() {
        let cat = catalogue();
        assert_eq!(cat.len(), IDS.len());
        for (p, id) in cat.iter().zip(IDS) {
            assert_eq!(p.id, id);
            assert!(DataSource::Embedded.load(p.file).is_ok(), "{id}");
        }
    }

    #[test]
    fn weight_tables_sum_to_code_size() {
        for p in catalogue() {
            if let Some(w) = p.weights {
                assert_eq!(w.iter().map(|(_, c)| c).sum::<u64>(), 1 << p.k, "{}", p.id);
            }
        }
    }

    #[test]
    fn single_code_verification() {
        let report = verify_all(&VerifyOptions {
            only: Some("K2_3".into()),
            ..Default::default()
        });
        assert!(report.passed(), "{}", report.to_table());
        assert!(report.checks.iter().all(|c| c.id == "K2_3"));
        assert!(report.checks.iter().any(|c| c.name == "|PAut|" && c.got == "1"));
    }

    #[test]
    fn k2_1_generator_has_weight_three_words() {
        // The stored generator spans a code with two weight-3 words.
        let report = verify_all(&VerifyOptions {
            only: Some("K2_1".into()),
            ..Default::default()
        });
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["parameters (n,2^k,d)", "weight distribution", "|PAut|"]);
        assert!(report.checks.iter().any(|c| c.name == "trace-Euclidean ACD" && c.status == Status::Pass));
    }

    #[test]
    fn unknown_id_fails() {
        let report = verify_all(&VerifyOptions {
            only: Some("K9".into()),
            ..Default::default()
        });
        assert!(!report.passed());
    }

    #[test]
    fn report_formats() {
        let report = verify_all(&VerifyOptions {
            only: Some("Ex2_C".into()),
            ..Default::default()
        });
        let lines = report.to_lines();
        assert!(lines.lines().all(|l| l.split('\t').count() == 5));
        assert!(lines.contains("Ex2_C\tself-dual\tyes\tyes\tPASS"));
        assert!(report.to_table().contains("0 failed"));
    }
}
