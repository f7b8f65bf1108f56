//! The plain-text system description format.
//!
//! ```text
//! # comments run to the end of the line
//! generators: a b c
//! matrix:
//!   1 inf inf
//! inf   1 inf
//! inf inf   1
//! rays:
//! ab = | a b
//! cab = c | a b
//! ```
//!
//! Section headers may carry content on the same line. Rays are written
//! `name = head | period`; the head may be empty and the period may not.

use std::fmt::Write as _;
use std::str::FromStr;

use coxeter_boundary::boundary::{Ray, SimError};
use coxeter_boundary::{CoxeterMatrix, CoxeterSystem, Order, SystemError, Word};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRay {
    pub name: String,
    pub ray: Ray,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub system: CoxeterSystem,
    pub rays: Vec<NamedRay>,
}

/// A whitespace-delimited token with its 1-based position.
#[derive(Clone, Debug)]
struct Token {
    line: usize,
    column: usize,
    text: String,
}

impl Token {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

fn error_at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Splits `text` (which starts at character column `start`) into tokens.
fn tokenize(line: usize, start: usize, text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut current: Option<(usize, String)> = None;
    for (i, c) in text.chars().enumerate() {
        if c.is_whitespace() {
            if let Some((column, text)) = current.take() {
                out.push(Token { line, column, text });
            }
        } else {
            current.get_or_insert_with(|| (start + i, String::new())).1.push(c);
        }
    }
    if let Some((column, text)) = current {
        out.push(Token { line, column, text });
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Generators,
    Matrix,
    Rays,
}

impl Section {
    fn keyword(self) -> &'static str {
        match self {
            Section::Generators => "generators",
            Section::Matrix => "matrix",
            Section::Rays => "rays",
        }
    }
}

/// Ray line before the system is known: the name and the two sides.
struct RawRay {
    name: Token,
    head: Vec<Token>,
    bar: Token,
    period: Vec<Token>,
}

#[derive(Default)]
struct Raw {
    generators: Option<(usize, Vec<Token>)>,
    matrix: Option<(usize, Vec<Vec<Token>>)>,
    rays: Vec<RawRay>,
    last_line: usize,
}

fn split_sections(text: &str) -> Result<Raw, ParseError> {
    let mut raw = Raw::default();
    let mut seen: Vec<Section> = Vec::new();
    let mut section = None;
    for (index, full) in text.lines().enumerate() {
        let line = index + 1;
        raw.last_line = line;
        let content = full.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let indent = content.chars().count() - trimmed.chars().count();

        let header = [Section::Generators, Section::Matrix, Section::Rays]
            .into_iter()
            .find(|s| trimmed.strip_prefix(s.keyword()).is_some_and(|rest| rest.starts_with(':')));
        let (body, body_column) = match header {
            Some(s) => {
                if seen.contains(&s) {
                    return Err(error_at(line, indent + 1, format!("duplicate `{}:` section", s.keyword())));
                }
                seen.push(s);
                section = Some(s);
                match s {
                    Section::Generators => raw.generators = Some((line, Vec::new())),
                    Section::Matrix => raw.matrix = Some((line, Vec::new())),
                    Section::Rays => {}
                }
                let skip = s.keyword().len() + 1;
                (&trimmed[skip..], indent + skip + 1)
            }
            None => (content, 1),
        };
        let tokens = tokenize(line, body_column, body);
        if tokens.is_empty() {
            continue;
        }
        match section {
            None => {
                return Err(tokens[0].error("expected a `generators:`, `matrix:` or `rays:` section header"));
            }
            Some(Section::Generators) => raw.generators.as_mut().unwrap().1.extend(tokens),
            Some(Section::Matrix) => raw.matrix.as_mut().unwrap().1.push(tokens),
            Some(Section::Rays) => raw.rays.push(split_ray(line, body_column, body)?),
        }
    }
    Ok(raw)
}

fn split_ray(line: usize, column: usize, body: &str) -> Result<RawRay, ParseError> {
    let first = tokenize(line, column, body)[0].column;
    let Some(eq) = body.find('=') else {
        return Err(error_at(line, first, "expected `name = head | period`"));
    };
    let eq_column = column + body[..eq].chars().count();
    let names = tokenize(line, column, &body[..eq]);
    let name = match names.as_slice() {
        [name] => name.clone(),
        [] => return Err(error_at(line, eq_column, "missing ray name before `=`")),
        [_, extra, ..] => return Err(extra.error("ray names may not contain whitespace")),
    };
    let rest = &body[eq + 1..];
    let rest_column = eq_column + 1;
    let Some(bar) = rest.find('|') else {
        return Err(error_at(line, rest_column, "expected `|` between head and period"));
    };
    let bar_column = rest_column + rest[..bar].chars().count();
    let period_part = &rest[bar + 1..];
    if let Some(extra) = period_part.find(['|', '=']) {
        let c = bar_column + 1 + period_part[..extra].chars().count();
        return Err(error_at(line, c, "unexpected separator"));
    }
    Ok(RawRay {
        name,
        head: tokenize(line, rest_column, &rest[..bar]),
        bar: Token {
            line,
            column: bar_column,
            text: "|".into(),
        },
        period: tokenize(line, bar_column + 1, period_part),
    })
}

fn parse_word(sys: &CoxeterSystem, tokens: &[Token]) -> Result<Word, ParseError> {
    let mut letters = Vec::new();
    for t in tokens {
        let w = sys.parse_word(&t.text).map_err(|e| t.error(e.to_string()))?;
        letters.extend(w.into_letters());
    }
    Ok(Word::new(letters))
}

impl FromStr for SystemFile {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let raw = split_sections(text)?;
        let eof = raw.last_line.max(1);
        let Some((gen_line, gens)) = raw.generators else {
            return Err(error_at(eof, 1, "missing `generators:` section"));
        };
        let Some((matrix_line, rows)) = raw.matrix else {
            return Err(error_at(eof, 1, "missing `matrix:` section"));
        };
        if gens.is_empty() {
            return Err(error_at(gen_line, 1, "no generator labels given"));
        }
        let rank = gens.len();

        let mut orders = Vec::with_capacity(rank);
        for (i, row) in rows.iter().enumerate() {
            if i >= rank {
                return Err(row[0].error(format!("matrix has more than {rank} rows")));
            }
            if row.len() != rank {
                let t = row.get(rank).unwrap_or(row.last().unwrap());
                return Err(t.error(format!("matrix row {} has {} entries, expected {rank}", i + 1, row.len())));
            }
            let parsed = row
                .iter()
                .map(|t| t.text.parse::<Order>().map_err(|e| t.error(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            orders.push(parsed);
        }
        if rows.len() < rank {
            let line = rows.last().map_or(matrix_line, |r| r[0].line);
            return Err(error_at(line, 1, format!("matrix has {} rows, expected {rank}", rows.len())));
        }

        let matrix = CoxeterMatrix::from_rows(orders).expect("row lengths checked");
        let labels = gens.iter().map(|t| t.text.clone()).collect();
        let system = CoxeterSystem::new(matrix, labels).map_err(|e| {
            let entry = |i: usize, j: usize| &rows[i][j];
            match &e {
                SystemError::BadDiagonal(i) => entry(*i, *i).error(e.to_string()),
                SystemError::AsymmetricMatrix { i, j } => entry(*j, *i).error(e.to_string()),
                SystemError::EntryBelowTwo { i, j } => entry(*i, *j).error(e.to_string()),
                SystemError::DuplicateLabel { second, .. } => gens[*second].error(e.to_string()),
                SystemError::InvalidLabel(label) => gens
                    .iter()
                    .find(|t| &t.text == label)
                    .map_or_else(|| error_at(gen_line, 1, e.to_string()), |t| t.error(e.to_string())),
                _ => error_at(gen_line, 1, e.to_string()),
            }
        })?;

        let mut rays: Vec<NamedRay> = Vec::new();
        for r in raw.rays {
            if rays.iter().any(|n| n.name == r.name.text) {
                return Err(r.name.error(format!("duplicate ray name {:?}", r.name.text)));
            }
            if r.name.text.contains('|') {
                return Err(r.name.error("ray names may not contain `|`"));
            }
            let head = parse_word(&system, &r.head)?;
            let period = parse_word(&system, &r.period)?;
            let at = r.head.first().unwrap_or(&r.bar);
            let ray = Ray::checked(&system, head, period).map_err(|e| match e {
                SimError::EmptyPeriod => r.bar.error("the period after `|` is empty"),
                SimError::NotRightAngled => r.name.error("rays require a right-angled system"),
                other => at.error(other.to_string()),
            })?;
            rays.push(NamedRay {
                name: r.name.text,
                ray,
            });
        }
        Ok(SystemFile { system, rays })
    }
}

impl SystemFile {
    pub fn ray(&self, name: &str) -> Option<&Ray> {
        self.rays.iter().find(|r| r.name == name).map(|r| &r.ray)
    }

    /// Canonical text form; parsing it gives back an equal value.
    pub fn to_text(&self) -> String {
        let sys = &self.system;
        let n = sys.rank();
        let mut out = format!("generators: {}\nmatrix:\n", sys.labels().join(" "));
        let cells: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| sys.m(i, j).to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        if !self.rays.is_empty() {
            out.push_str("rays:\n");
            for r in &self.rays {
                let head = sys.format_word(r.ray.head());
                let period = sys.format_word(r.ray.period());
                if head.is_empty() {
                    writeln!(out, "{} = | {period}", r.name).unwrap();
                } else {
                    writeln!(out, "{} = {head} | {period}", r.name).unwrap();
                }
            }
        }
        out
    }
}
