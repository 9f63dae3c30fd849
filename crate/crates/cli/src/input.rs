use std::io::Read;

use anyhow::{Context, Result};

use r1d_core::{ExponentPair, ReducedModel};

/// Reads a file, or standard input for `-`.
pub fn read(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn model(path: &str) -> Result<ReducedModel> {
    read(path)?
        .parse()
        .with_context(|| format!("parsing model from {path}"))
}

/// Pairs `ν,μ;ν,μ;…` in the order given.
pub fn pairs(s: &str) -> Result<Vec<ExponentPair>> {
    s.split(';')
        .map(str::trim)
        .filter(|item| !item.is_empty())
        .map(|item| {
            let item = item.trim_start_matches('(').trim_end_matches(')');
            let (nu, mu) = item
                .split_once(',')
                .with_context(|| format!("expected `ν,μ`, found `{item}`"))?;
            Ok(ExponentPair::new(
                nu.trim()
                    .parse()
                    .with_context(|| format!("bad exponent `{nu}`"))?,
                mu.trim()
                    .parse()
                    .with_context(|| format!("bad exponent `{mu}`"))?,
            ))
        })
        .collect()
}

pub fn rational(s: &str) -> Result<r1d_core::Rational> {
    Ok(r1d_core::algebra::parse_rational(s.trim())?)
}

pub fn rationals(s: &str) -> Result<Vec<r1d_core::Rational>> {
    s.split(',').map(rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_keep_their_order() {
        let p = pairs("3,0; (1,1);0,3").unwrap();
        assert_eq!(
            p,
            vec![
                ExponentPair::new(3, 0),
                ExponentPair::new(1, 1),
                ExponentPair::new(0, 3)
            ]
        );
        assert!(pairs("3;1").is_err());
        assert!(pairs("a,1").is_err());
    }

    #[test]
    fn counts_parse_as_rationals() {
        let u = rationals("1, 2,3/4").unwrap();
        assert_eq!(u[2], r1d_core::algebra::rat(3, 4));
        assert!(rationals("1,x").is_err());
    }
}
