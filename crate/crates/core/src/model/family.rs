use num_traits::{One, Signed};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::support::{ExponentPair, Support};

use super::{fundamental_model, ReducedModel};

/// A one-parameter family of reduced models in `Δn` of degree `d`.
///
/// Built from a fundamental model `base` in `Δ(n−2)` of degree `d − 1` whose
/// `(d−1, 0)` scaling is one: that state `t^(d−1)` is split into
/// `(1−c)·t^(d−1)`, `c·t^(d−1)(1−t)` and `c·t^d` for `0 < c < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyModel {
    base: ReducedModel,
    n: u32,
    d: u32,
}

impl FamilyModel {
    pub fn base(&self) -> &ReducedModel {
        &self.base
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Shared support of every member.
    pub fn support(&self) -> Support {
        let top = self.d - 1;
        Support::new(
            self.base
                .support()
                .iter()
                .chain([ExponentPair::new(top, 1), ExponentPair::new(self.d, 0)]),
        )
        .expect("new pairs lie outside the base support")
    }

    /// The member for parameter `c`, which must satisfy `0 < c < 1`.
    pub fn instantiate(&self, c: &Rational) -> Result<ReducedModel> {
        if !c.is_positive() || *c >= Rational::one() {
            return Err(Error::InvalidArgument(format!(
                "family parameter must lie in (0, 1), got {c}"
            )));
        }
        let top = ExponentPair::new(self.d - 1, 0);
        let mut entries: Vec<(ExponentPair, Rational)> = self
            .base
            .entries()
            .iter()
            .map(|(p, v)| {
                if *p == top {
                    (*p, Rational::one() - c)
                } else {
                    (*p, v.clone())
                }
            })
            .collect();
        entries.push((ExponentPair::new(self.d - 1, 1), c.clone()));
        entries.push((ExponentPair::new(self.d, 0), c.clone()));
        ReducedModel::new(entries)
    }
}

/// The family in `Δn` of degree `d` for `n ≥ 4` and `n ≤ d ≤ 2n − 4`.
pub fn one_parameter_family(n: u32, d: u32) -> Result<FamilyModel> {
    if n < 4 || d < n || d + 4 > 2 * n {
        return Err(Error::InvalidArgument(format!(
            "one-parameter family needs n ≥ 4 and n ≤ d ≤ 2n − 4, got (n, d) = ({n}, {d})"
        )));
    }
    let base = fundamental_model(n - 2, d - 1)?;
    debug_assert!(base.coefficient(ExponentPair::new(d - 1, 0)).is_one());
    Ok(FamilyModel { base, n, d })
}
