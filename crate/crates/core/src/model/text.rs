//! The plain-text model format.
//!
//! ```text
//! # comments run to the end of the line
//! 2 3
//! 1 1 3
//! 0 3 1
//! 3 0 1
//! ```
//!
//! The header is `n d`, followed by `n + 1` lines `ν μ c` with `c` an integer
//! or `p/q`. Output is canonical: graded-lex entry order, lowest terms.
//! Catalogs concatenate records separated by a line `---`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::parse_rational;
use crate::error::{Error, Result};
use crate::support::ExponentPair;

use super::ReducedModel;

impl fmt::Display for ReducedModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.degree())?;
        for (p, c) in self.entries() {
            writeln!(f, "{} {} {}", p.nu, p.mu, c)?;
        }
        Ok(())
    }
}

impl FromStr for ReducedModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_record(content_lines(s, 0))
    }
}

/// Parses a catalog of `---`-separated model records. Empty records are skipped.
pub fn parse_models(s: &str) -> Result<Vec<ReducedModel>> {
    let mut models = Vec::new();
    let mut record = Vec::new();
    for (i, raw) in s.lines().enumerate() {
        if raw.trim() == "---" {
            if !record.is_empty() {
                models.push(parse_record(std::mem::take(&mut record))?);
            }
            continue;
        }
        record.extend(content_lines(raw, i));
    }
    if !record.is_empty() {
        models.push(parse_record(record)?);
    }
    Ok(models)
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(s: &str, first: usize) -> Vec<(usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (first + i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn parse_u32(line: usize, tok: &str, what: &str) -> Result<u32> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

fn parse_record(lines: Vec<(usize, &str)>) -> Result<ReducedModel> {
    let mut it = lines.into_iter();
    let (hl, header) = it
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n d` header"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, d] = head[..] else {
        return Err(Error::parse(
            hl,
            format!("expected `n d`, found `{header}`"),
        ));
    };
    let n = parse_u32(hl, n, "n")? as usize;
    let d = parse_u32(hl, d, "degree")?;

    let mut entries = Vec::with_capacity(n + 1);
    let mut last = hl;
    for (ln, line) in it {
        last = ln;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [nu, mu, c] = toks[..] else {
            return Err(Error::parse(
                ln,
                format!("expected `ν μ c`, found `{line}`"),
            ));
        };
        let pair = ExponentPair::new(
            parse_u32(ln, nu, "exponent")?,
            parse_u32(ln, mu, "exponent")?,
        );
        let c =
            parse_rational(c).map_err(|_| Error::parse(ln, format!("bad coefficient `{c}`")))?;
        entries.push((pair, c));
    }
    if entries.len() != n + 1 {
        return Err(Error::parse(
            last,
            format!(
                "header announces {} entries, found {}",
                n + 1,
                entries.len()
            ),
        ));
    }
    let model = ReducedModel::new(entries)?;
    if model.degree() != d {
        return Err(Error::parse(
            hl,
            format!(
                "header announces degree {d}, entries have degree {}",
                model.degree()
            ),
        ));
    }
    Ok(model)
}
