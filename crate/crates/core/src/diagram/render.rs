use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::model::ReducedModel;
use crate::support::ExponentPair;

use super::{find_sinks, NewtonDiagram};

/// A model drawn on the triangle `a + b ≤ d`, with `−1` at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChipConfig {
    pub d: u32,
    pub entries: BTreeMap<ExponentPair, Rational>,
}

impl From<&ReducedModel> for ChipConfig {
    fn from(m: &ReducedModel) -> Self {
        ChipConfig {
            d: m.degree(),
            entries: m.entries().iter().cloned().collect(),
        }
    }
}

impl ChipConfig {
    /// Reads the configuration back as a model, validating every invariant.
    pub fn to_model(&self) -> Result<ReducedModel> {
        let model = ReducedModel::new(self.entries.iter().map(|(p, c)| (*p, c.clone())))?;
        if model.degree() != self.d {
            return Err(Error::InvalidArgument(format!(
                "configuration has size {} but the model has degree {}",
                self.d,
                model.degree()
            )));
        }
        Ok(model)
    }

    /// ASCII triangle, top row `b = d`. With `stars`, non-zero entries print as `*`.
    pub fn render(&self, stars: bool) -> String {
        triangle(self.d, |a, b| {
            if (a, b) == (0, 0) {
                return "-1".to_string();
            }
            match self.entries.get(&ExponentPair::new(a, b)) {
                None => ".".to_string(),
                Some(_) if stars => "*".to_string(),
                Some(c) => c.to_string(),
            }
        })
    }
}

/// Rows `b = d … 0`, row `b` holding cells `a = 0 … d − b`; each column is
/// right-aligned to its widest cell and cells are separated by one space.
fn triangle(d: u32, cell: impl Fn(u32, u32) -> String) -> String {
    let cells: Vec<Vec<String>> = (0..=d)
        .rev()
        .map(|b| (0..=d - b).map(|a| cell(a, b)).collect())
        .collect();
    let mut widths = vec![0; d as usize + 1];
    for row in &cells {
        for (a, c) in row.iter().enumerate() {
            widths[a] = widths[a].max(c.chars().count());
        }
    }
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(a, c)| format!("{c:>w$}", w = widths[a]))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_chips(m: &ReducedModel) -> String {
    ChipConfig::from(m).render(false)
}

/// Letter grid of `P`, `N` and `0`. With `markers`, two legend lines list the
/// sinks and sources.
pub fn render_diagram(diag: &NewtonDiagram, markers: bool) -> String {
    let mut out = triangle(diag.degree(), |a, b| {
        diag.label(a as i64, b as i64).to_string()
    });
    if markers {
        let rep = find_sinks(diag);
        let list = |v: &[ExponentPair]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push_str(&format!(
            "sinks: {}\nsources: {}\n",
            list(&rep.sinks),
            list(&rep.sources)
        ));
    }
    out
}

/// Parses the output of [`ChipConfig::render`] without stars.
pub fn parse_chips(text: &str) -> Result<ChipConfig> {
    let rows: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
        .collect();
    if rows.is_empty() {
        return Err(Error::parse(1, "empty chip configuration"));
    }
    let d = rows.len() as u32 - 1;
    let mut entries = BTreeMap::new();
    for (i, (line, toks)) in rows.iter().enumerate() {
        let b = d - i as u32;
        if toks.len() != i + 1 {
            return Err(Error::parse(
                *line,
                format!(
                    "row for b = {b} needs {} cells, found {}",
                    i + 1,
                    toks.len()
                ),
            ));
        }
        for (a, tok) in toks.iter().enumerate() {
            let a = a as u32;
            if (a, b) == (0, 0) {
                if *tok != "-1" {
                    return Err(Error::parse(
                        *line,
                        format!("origin must read -1, found `{tok}`"),
                    ));
                }
                continue;
            }
            if *tok == "." {
                continue;
            }
            let c = parse_rational(tok)
                .map_err(|_| Error::parse(*line, format!("bad cell `{tok}`")))?;
            if c.is_zero() {
                return Err(Error::parse(*line, "zero cells are written as `.`"));
            }
            entries.insert(ExponentPair::new(a, b), c);
        }
    }
    Ok(ChipConfig { d, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::diagram::diagram_of;
    use crate::model::{binomial_model, compose, one_parameter_family, sharp_model};

    #[test]
    fn chips_of_small_models() {
        assert_eq!(render_chips(&binomial_model(1).unwrap()), " 1\n-1 1\n");
        assert_eq!(
            render_chips(&sharp_model(2).unwrap()),
            " 1\n . .\n . 3 .\n-1 . . 1\n"
        );
        let c = compose(&sharp_model(2).unwrap(), &binomial_model(2).unwrap()).unwrap();
        assert_eq!(
            render_chips(&c),
            " .\n . .\n 1 . .\n . . . 1\n . 3 . . 2\n-1 . . . . 1\n"
        );
    }

    #[test]
    fn fractions_widen_their_column() {
        let fam = one_parameter_family(4, 4).unwrap();
        let m = fam.instantiate(&rat(1, 2)).unwrap();
        assert_eq!(
            render_chips(&m),
            " .\n 1 .\n . . .\n . 3 . 1/2\n-1 . . 1/2 1/2\n"
        );
        assert_eq!(
            ChipConfig::from(&m).render(true),
            " .\n * .\n . . .\n . * . *\n-1 . . * *\n"
        );
    }

    #[test]
    fn chips_round_trip() {
        for m in [
            binomial_model(4).unwrap(),
            sharp_model(3).unwrap(),
            one_parameter_family(5, 6)
                .unwrap()
                .instantiate(&rat(2, 7))
                .unwrap(),
        ] {
            let back = parse_chips(&render_chips(&m)).unwrap().to_model().unwrap();
            assert_eq!(back, m);
        }
        assert!(parse_chips(" 1\n1 1\n").is_err());
        assert!(parse_chips(" 1\n-1\n").is_err());
        assert!(parse_chips("").is_err());
    }

    #[test]
    fn letter_grids() {
        let diag = diagram_of(&binomial_model(3).unwrap()).unwrap();
        assert_eq!(render_diagram(&diag, false), "0\nP 0\nP P 0\nP P P 0\n");
        let diag = diagram_of(&sharp_model(2).unwrap()).unwrap();
        assert_eq!(
            render_diagram(&diag, true),
            "0\nP 0\nP N 0\nP P P 0\nsinks: (1,1) (0,3) (3,0)\nsources: (0,0)\n"
        );
    }
}
