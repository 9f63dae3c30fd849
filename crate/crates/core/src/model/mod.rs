//! Reduced models, their named constructors and the operations on them.

mod compose;
mod constructors;
mod family;
mod mle;
mod scalings;
mod text;

pub use compose::{compose, compose_at, unsplit};
pub use constructors::{binomial_model, fundamental_model, geometric_model, sharp_model};
pub use family::{one_parameter_family, FamilyModel};
pub use mle::{mle_1d, mle_multi, multinomial_model, MultiModel};
pub use scalings::{solve_scalings, FundamentalityReport, ScalingSolution};
pub use text::parse_models;

use num_traits::{One, Zero};

use crate::algebra::{expansion_matrix, BivarPoly, Rational};
use crate::error::{Error, Result};
use crate::support::{ExponentPair, Support};

/// A reduced model: distinct non-origin exponent pairs with strictly positive
/// scalings such that `Σ c·t^ν(1−t)^μ ≡ 1`.
///
/// Entries are stored in graded-lex order of their pairs, which fixes the
/// state indexing used by [`mle_1d`] and the text format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedModel {
    entries: Vec<(ExponentPair, Rational)>,
}

impl ReducedModel {
    /// Validates every model invariant, including the polynomial identity.
    pub fn new<I, P>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (P, Rational)>,
        P: Into<ExponentPair>,
    {
        let mut entries: Vec<(ExponentPair, Rational)> =
            entries.into_iter().map(|(p, c)| (p.into(), c)).collect();
        if entries.is_empty() {
            return Err(Error::EmptyModel);
        }
        entries.sort_by_key(|a| a.0);
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicatePair(w[0].0));
        }
        if entries.iter().any(|(p, _)| p.is_origin()) {
            return Err(Error::OriginPair);
        }
        if let Some((p, _)) = entries.iter().find(|(_, c)| *c <= Rational::zero()) {
            return Err(Error::NonPositiveCoefficient(*p));
        }
        let model = ReducedModel { entries };
        if !model.identity_holds() {
            return Err(Error::IdentityFails);
        }
        Ok(model)
    }

    /// Number of states minus one, i.e. the model lives in `Δn`.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.entries.last().map_or(0, |(p, _)| p.degree())
    }

    pub fn entries(&self) -> &[(ExponentPair, Rational)] {
        &self.entries
    }

    pub fn support(&self) -> Support {
        Support::from_sorted_unchecked(self.entries.iter().map(|(p, _)| *p).collect())
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        self.entries.iter().map(|(_, c)| c.clone()).collect()
    }

    /// Scaling of `pair`, zero if absent.
    pub fn coefficient(&self, pair: ExponentPair) -> Rational {
        self.entries
            .binary_search_by(|(p, _)| p.cmp(&pair))
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// `f = Σ c·x^ν y^μ`, which equals one on the line `x + y = 1`.
    pub fn f_poly(&self) -> BivarPoly {
        BivarPoly::from_terms(self.entries.iter().map(|(p, c)| ((p.nu, p.mu), c.clone())))
    }

    /// Cofactor `g` with `f − 1 = (x + y − 1)·g`.
    pub fn g_poly(&self) -> BivarPoly {
        let division = self.f_poly().divide_by_line();
        debug_assert!(division.is_exact());
        division.quotient
    }

    /// `M·c − e0` for the model's own expansion system; all zero for a valid model.
    pub fn identity_residual(&self) -> Vec<Rational> {
        let pairs: Vec<ExponentPair> = self.entries.iter().map(|(p, _)| *p).collect();
        let sys = expansion_matrix(&pairs, self.degree()).expect("pairs are distinct");
        sys.residual(&self.coefficients())
    }

    fn identity_holds(&self) -> bool {
        self.identity_residual().iter().all(Zero::is_zero)
    }

    /// The model obtained by substituting `t ↦ 1 − t`.
    pub fn swapped(&self) -> ReducedModel {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|(p, c)| (p.swapped(), c.clone()))
            .collect();
        entries.sort_by_key(|a| a.0);
        ReducedModel { entries }
    }

    /// Coordinates `c·t^ν(1−t)^μ` evaluated at `t`.
    pub fn evaluate(&self, t: &Rational) -> Vec<Rational> {
        let s = Rational::one() - t;
        self.entries
            .iter()
            .map(|(p, c)| {
                c * num_traits::pow(t.clone(), p.nu as usize)
                    * num_traits::pow(s.clone(), p.mu as usize)
            })
            .collect()
    }

    /// Builds a model whose invariants the caller has already established.
    pub(crate) fn from_parts_unchecked(mut entries: Vec<(ExponentPair, Rational)>) -> Self {
        entries.sort_by_key(|a| a.0);
        let model = ReducedModel { entries };
        debug_assert!(model.identity_holds());
        model
    }
}
