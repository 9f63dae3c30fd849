use num_traits::Signed;

use crate::algebra::{
    expansion_matrix, solve_exact, strictly_positive_point, Feasibility, SolveResult,
};
use crate::error::{Error, Result};
use crate::support::Support;

use super::ReducedModel;

/// Constraint cap for the positivity search on supports with nullity ≥ 2.
const FEASIBILITY_LIMIT: usize = 20_000;

/// Linear-algebra facts about a support's expansion system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalityReport {
    /// Scalings are uniquely determined (the system has exactly one solution).
    pub fundamental: bool,
    pub rank: usize,
    pub nullity: usize,
    pub consistent: bool,
    /// `false` only when strict positivity could not be decided.
    pub positivity_decided: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingSolution {
    /// A model on this support, present iff strictly positive scalings exist.
    pub model: Option<ReducedModel>,
    pub report: FundamentalityReport,
}

impl ScalingSolution {
    /// The model, if the support carries exactly one and it is positive.
    pub fn fundamental_model(&self) -> Option<&ReducedModel> {
        self.model.as_ref().filter(|_| self.report.fundamental)
    }
}

/// Solves `Σ c_i t^ν_i (1−t)^μ_i ≡ 1` for the scalings of `support`.
///
/// With a unique solution the model exists iff every `c_i > 0`. With a solution
/// space of positive dimension a model is returned when some point of it is
/// strictly positive; that point is found exactly, and for more than one free
/// parameter the search is capped and may report `positivity_decided = false`.
pub fn solve_scalings(support: &Support) -> Result<ScalingSolution> {
    if support.is_empty() {
        return Err(Error::InvalidSupport("empty support".into()));
    }
    if support.iter().any(|p| p.is_origin()) {
        return Err(Error::InvalidSupport("contains (0,0)".into()));
    }
    let d = support.degree().unwrap_or(0);
    let sys = expansion_matrix(support.pairs(), d)?;
    let cols = support.len();
    let result = solve_exact(&sys);
    let rank = result.rank();
    let mut report = FundamentalityReport {
        fundamental: false,
        rank,
        nullity: cols - rank,
        consistent: true,
        positivity_decided: true,
    };
    let build = |c: Vec<crate::algebra::Rational>| {
        ReducedModel::from_parts_unchecked(support.iter().zip(c).collect())
    };
    let model = match result {
        SolveResult::Inconsistent { .. } => {
            report.consistent = false;
            None
        }
        SolveResult::Unique(c) => {
            report.fundamental = true;
            c.iter().all(Signed::is_positive).then(|| build(c))
        }
        SolveResult::Underdetermined {
            particular,
            nullspace,
            ..
        } => match strictly_positive_point(&particular, &nullspace, FEASIBILITY_LIMIT) {
            Feasibility::Point(c) => Some(build(c)),
            Feasibility::Infeasible => None,
            Feasibility::Undecided => {
                report.positivity_decided = false;
                None
            }
        },
    };
    Ok(ScalingSolution { model, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn solve(s: &str) -> ScalingSolution {
        solve_scalings(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn first_example_support() {
        let sol = solve("3,0;1,1;0,3");
        assert!(sol.report.fundamental);
        let m = sol.fundamental_model().unwrap();
        assert_eq!(m.coefficients(), vec![rat(3, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn binomial_two() {
        let sol = solve("2,0;1,1;0,2");
        let m = sol.fundamental_model().unwrap();
        assert_eq!(m.coefficient((1, 1).into()), rat(2, 1));
        assert_eq!(m.coefficient((2, 0).into()), rat(1, 1));
    }

    #[test]
    fn no_state_at_zero() {
        let sol = solve("1,0;2,0");
        assert!(sol.model.is_none());
        assert!(!sol.report.consistent);
    }

    #[test]
    fn family_support() {
        let sol = solve("1,1;0,3;3,0;3,1;4,0");
        assert!(!sol.report.fundamental);
        assert_eq!(sol.report.nullity, 1);
        assert_eq!(sol.report.rank, 4);
        let m = sol.model.clone().expect("positive member exists");
        assert_eq!(m.n(), 4);
        assert!(sol.fundamental_model().is_none());
    }

    #[test]
    fn unique_but_not_positive() {
        // (1−t) + t ≡ 1 already, so the (1,1) scaling is forced to zero
        let sol = solve("0,1;1,0;1,1");
        assert!(sol.report.fundamental);
        assert!(sol.model.is_none());
        let sol = solve("0,2;1,0;2,0");
        // (1−t)^2 + a t + b t^2 ≡ 1 forces a = 2, b = −1
        assert!(sol.report.fundamental);
        assert!(sol.model.is_none());
    }

    #[test]
    fn homogeneous_supports_give_binomial_coefficients() {
        for d in 1..=7u32 {
            let s = Support::new((0..=d).map(|i| (i, d - i))).unwrap();
            let sol = solve_scalings(&s).unwrap();
            let m = sol.fundamental_model().unwrap();
            for (p, c) in m.entries() {
                assert_eq!(c.numer(), &crate::algebra::binomial(d, p.nu));
            }
        }
    }

    #[test]
    fn origin_rejected() {
        assert!(matches!(
            solve_scalings(&"0,0;1,0".parse().unwrap()),
            Err(Error::InvalidSupport(_))
        ));
    }
}
