//! Plain-text code files.
//!
//! ```text
//! # comments and blank lines are ignored
//! additive n=6 k=5
//! 10w1Ww
//! w0wW1W
//! ...
//! ```
//!
//! The header kind is `additive`, `linear` (a GF(4)-linear generator) or
//! `binary`; `k` is the number of generator rows that follow, each with `n`
//! symbols from `0 1 w W` (only `0 1` for binary). Whitespace inside a row is
//! ignored. Without a header, a file whose rows use only `0`/`1` is read as
//! binary and anything else as additive; a headerless file with no rows is
//! the zero additive code of length 0.

use std::fmt::Write as _;

use crate::additive_code::AdditiveCode;
use crate::binary_code::BinaryCode;
use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::f2linalg::F4Matrix;
use crate::gf4::{F4Vector, Gf4};
use crate::linear_code::LinearCodeF4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeKind {
    Binary,
    Linear,
    Additive,
}

impl CodeKind {
    pub fn keyword(self) -> &'static str {
        match self {
            CodeKind::Binary => "binary",
            CodeKind::Linear => "linear",
            CodeKind::Additive => "additive",
        }
    }
}

/// A parsed code file. The generator rows are kept verbatim; the code
/// objects drop dependent rows.
#[derive(Clone, Debug)]
pub enum CodeFile {
    Binary(BinaryCode),
    Linear(LinearCodeF4),
    Additive(AdditiveCode),
}

impl CodeFile {
    pub fn kind(&self) -> CodeKind {
        match self {
            CodeFile::Binary(_) => CodeKind::Binary,
            CodeFile::Linear(_) => CodeKind::Linear,
            CodeFile::Additive(_) => CodeKind::Additive,
        }
    }
}

/// A generator as read from a file, before rank reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCode {
    pub kind: CodeKind,
    pub n: usize,
    pub rows: Vec<Vec<Gf4>>,
}

impl RawCode {
    pub fn matrix(&self) -> F4Matrix {
        let rows: Vec<F4Vector> = self.rows.iter().map(|r| F4Vector::from_elements(r)).collect();
        F4Matrix::from_rows(self.n, &rows).expect("rows validated against n")
    }

    pub fn into_code(self) -> CodeFile {
        let m = self.matrix();
        match self.kind {
            CodeKind::Binary => CodeFile::Binary(BinaryCode::from_generator(m.a_plane())),
            CodeKind::Linear => CodeFile::Linear(LinearCodeF4::from_matrix(&m)),
            CodeKind::Additive => CodeFile::Additive(AdditiveCode::from_matrix(&m)),
        }
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<Option<(CodeKind, usize, usize)>> {
    let mut words = line.split_whitespace();
    let kind = match words.next() {
        Some("additive") => CodeKind::Additive,
        Some("linear") => CodeKind::Linear,
        Some("binary") => CodeKind::Binary,
        _ => return Ok(None),
    };
    let (mut n, mut k) = (None, None);
    for w in words {
        let column = line.find(w).map_or(1, |c| c + 1);
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, column, format!("expected key=value, found {w:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| parse_err(line_no, column, format!("bad number in {w:?}")))?;
        match key {
            "n" => n = Some(value),
            "k" => k = Some(value),
            _ => return Err(parse_err(line_no, column, format!("unknown header field {key:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(line_no, 1, "header is missing n="))?;
    let k = k.ok_or_else(|| parse_err(line_no, 1, "header is missing k="))?;
    Ok(Some((kind, n, k)))
}

/// Parses a code file into its raw generator rows.
pub fn parse_raw(text: &str) -> Result<RawCode> {
    let mut header: Option<(CodeKind, usize, usize)> = None;
    let mut rows: Vec<Vec<Gf4>> = Vec::new();
    let mut first_row_line = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        if header.is_none() && rows.is_empty() {
            if let Some(h) = parse_header(line_no, line)? {
                header = Some(h);
                continue;
            }
        }
        let mut row = Vec::new();
        for (col, c) in line.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            let x = Gf4::from_symbol(c).ok_or_else(|| {
                parse_err(line_no, col + 1, format!("unexpected symbol {c:?}; expected 0, 1, w or W"))
            })?;
            if header.is_some_and(|(kind, _, _)| kind == CodeKind::Binary) && x.b() {
                return Err(parse_err(line_no, col + 1, format!("symbol {c:?} in a binary code")));
            }
            row.push(x);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(parse_err(
                    line_no,
                    1,
                    format!("row has {} symbols, expected {}", row.len(), first.len()),
                ));
            }
        } else {
            first_row_line = Some(line_no);
        }
        if let Some((_, n, _)) = header {
            if row.len() != n {
                return Err(parse_err(
                    line_no,
                    1,
                    format!("row has {} symbols, header says n={n}", row.len()),
                ));
            }
        }
        rows.push(row);
    }
    let (kind, n) = match header {
        Some((kind, n, k)) => {
            if rows.len() != k {
                return Err(parse_err(
                    first_row_line.unwrap_or(1),
                    1,
                    format!("header says k={k} but {} rows follow", rows.len()),
                ));
            }
            (kind, n)
        }
        None => {
            let n = rows.first().map_or(0, Vec::len);
            let binary = !rows.is_empty() && rows.iter().flatten().all(|x| !x.b());
            (if binary { CodeKind::Binary } else { CodeKind::Additive }, n)
        }
    };
    Ok(RawCode { kind, n, rows })
}

pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    Ok(parse_raw(text)?.into_code())
}

fn write_rows(out: &mut String, kind: CodeKind, n: usize, rows: &[String]) {
    let _ = writeln!(out, "{} n={n} k={}", kind.keyword(), rows.len());
    for r in rows {
        out.push_str(r);
        out.push('\n');
    }
}

pub fn write_additive(c: &AdditiveCode) -> String {
    let rows: Vec<String> = c.rows().iter().map(|r| r.to_string()).collect();
    let mut out = String::new();
    write_rows(&mut out, CodeKind::Additive, c.n(), &rows);
    out
}

pub fn write_linear(c: &LinearCodeF4) -> String {
    let rows: Vec<String> = c.generator().row_vectors().iter().map(|r| r.to_string()).collect();
    let mut out = String::new();
    write_rows(&mut out, CodeKind::Linear, c.n(), &rows);
    out
}

pub fn write_binary(c: &BinaryCode) -> String {
    let rows: Vec<String> = c.generator().rows().iter().map(BitVec::to_string).collect();
    let mut out = String::new();
    write_rows(&mut out, CodeKind::Binary, c.n(), &rows);
    out
}

pub fn write_code_file(c: &CodeFile) -> String {
    match c {
        CodeFile::Binary(b) => write_binary(b),
        CodeFile::Linear(l) => write_linear(l),
        CodeFile::Additive(a) => write_additive(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_additive_with_comments() {
        let text = "# K21\n\nadditive n=6 k=2\n10w1Ww  # first\nw0wW 1W\n";
        let CodeFile::Additive(c) = parse_code_file(text).unwrap() else {
            panic!("expected additive");
        };
        assert_eq!((c.n(), c.k()), (6, 2));
        assert_eq!(c.rows()[1].to_string(), "w0wW1W");
    }

    #[test]
    fn headerless_kind_inference() {
        assert_eq!(parse_raw("1100\n0011\n").unwrap().kind, CodeKind::Binary);
        assert_eq!(parse_raw("1w00\n").unwrap().kind, CodeKind::Additive);
        let empty = parse_raw("").unwrap();
        assert_eq!((empty.kind, empty.n, empty.rows.len()), (CodeKind::Additive, 0, 0));
        let zero = parse_raw("additive n=5 k=0\n").unwrap();
        assert_eq!((zero.n, zero.rows.len()), (5, 0));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_raw("additive n=3 k=1\n1x0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 2,
                message: "unexpected symbol 'x'; expected 0, 1, w or W".into()
            }
        );
        assert!(matches!(parse_raw("additive n=3 k=2\n100\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_raw("additive n=3 k=1\n1000\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_raw("binary n=2 k=1\n1w\n"), Err(Error::Parse { line: 2, column: 2, .. })));
        assert!(matches!(parse_raw("100\n10\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_raw("additive n=3\n"), Err(Error::Parse { line: 1, .. })));
        // symbols are case-sensitive
        assert!(parse_raw("1Ω0\n").is_err());
    }

    #[test]
    fn writes_headers() {
        let c = AdditiveCode::from_strs(&["1w", "0W"]);
        assert_eq!(write_additive(&c), "additive n=2 k=2\n1w\n0W\n");
        let b = BinaryCode::from_strs(&["1100"]);
        assert_eq!(write_binary(&b), "binary n=4 k=1\n1100\n");
    }

    proptest! {
        #[test]
        fn additive_round_trip(n in 1usize..8, codes in proptest::collection::vec(0u8..4, 0..40)) {
            let rows: Vec<F4Vector> = codes
                .chunks(n)
                .filter(|c| c.len() == n)
                .map(|c| F4Vector::from_elements(&c.iter().map(|&x| Gf4::from_code(x)).collect::<Vec<_>>()))
                .collect();
            let code = AdditiveCode::from_generator(n, &rows).unwrap();
            let text = write_additive(&code);
            let CodeFile::Additive(back) = parse_code_file(&text).unwrap() else {
                panic!("kind changed");
            };
            prop_assert_eq!(back.generator(), code.generator());
        }
    }
}
