use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponents `(ν, μ)` of one coordinate `t^ν (1−t)^μ`.
///
/// Ordered graded-lexicographically: first by total degree `ν + μ`, then by `ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentPair {
    pub nu: u32,
    pub mu: u32,
}

impl ExponentPair {
    pub const fn new(nu: u32, mu: u32) -> Self {
        ExponentPair { nu, mu }
    }

    pub const fn degree(self) -> u32 {
        self.nu + self.mu
    }

    pub const fn is_origin(self) -> bool {
        self.nu == 0 && self.mu == 0
    }

    /// The pair for the substitution `t ↦ 1 − t`.
    pub const fn swapped(self) -> Self {
        ExponentPair {
            nu: self.mu,
            mu: self.nu,
        }
    }
}

impl Ord for ExponentPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.nu.cmp(&other.nu))
    }
}

impl PartialOrd for ExponentPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.nu, self.mu)
    }
}

impl From<(u32, u32)> for ExponentPair {
    fn from((nu, mu): (u32, u32)) -> Self {
        ExponentPair { nu, mu }
    }
}

/// A finite set of distinct exponent pairs, kept in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Support(Vec<ExponentPair>);

impl Support {
    /// Fails with [`Error::DuplicatePair`] if a pair repeats.
    pub fn new<I, P>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<ExponentPair>,
    {
        let mut pairs: Vec<ExponentPair> = pairs.into_iter().map(Into::into).collect();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePair(w[0]));
        }
        Ok(Support(pairs))
    }

    pub(crate) fn from_sorted_unchecked(pairs: Vec<ExponentPair>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        Support(pairs)
    }

    pub fn pairs(&self) -> &[ExponentPair] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximum total degree; `None` for the empty support.
    pub fn degree(&self) -> Option<u32> {
        self.0.last().map(|p| p.degree())
    }

    pub fn contains(&self, pair: ExponentPair) -> bool {
        self.0.binary_search(&pair).is_ok()
    }

    pub fn swapped(&self) -> Support {
        let mut pairs: Vec<ExponentPair> = self.0.iter().map(|p| p.swapped()).collect();
        pairs.sort_unstable();
        Support(pairs)
    }

    pub fn iter(&self) -> impl Iterator<Item = ExponentPair> + '_ {
        self.0.iter().copied()
    }
}

/// Formats as `ν,μ;ν,μ;…`, the same syntax [`FromStr`] accepts.
impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", p.nu, p.mu)?;
        }
        Ok(())
    }
}

impl FromStr for Support {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in s.split(';').map(str::trim).filter(|item| !item.is_empty()) {
            let item = item.trim_start_matches('(').trim_end_matches(')');
            let (nu, mu) = item
                .split_once(',')
                .ok_or_else(|| Error::parse(1, format!("expected `ν,μ`, found `{item}`")))?;
            let parse = |v: &str| {
                v.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::parse(1, format!("bad exponent `{v}`: {e}")))
            };
            pairs.push(ExponentPair::new(parse(nu)?, parse(mu)?));
        }
        Support::new(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let s = Support::new([(3, 0), (1, 1), (0, 3)]).unwrap();
        assert_eq!(s.to_string(), "1,1;0,3;3,0");
        assert_eq!(s.degree(), Some(3));
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            Support::new([(1, 0), (1, 0)]),
            Err(Error::DuplicatePair(ExponentPair::new(1, 0)))
        );
    }

    #[test]
    fn parse_round_trip() {
        let s: Support = "3,0; 1,1 ;0,3".parse().unwrap();
        assert_eq!(s.to_string().parse::<Support>().unwrap(), s);
        assert!("3;1,1".parse::<Support>().is_err());
        assert_eq!(
            Support::new(Vec::<ExponentPair>::new()).unwrap().degree(),
            None
        );
    }
}
