use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Answer to "is some point of `particular + span(nullspace)` strictly positive?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A strictly positive point of the affine space.
    Point(Vec<Rational>),
    Infeasible,
    /// Elimination grew past the constraint limit.
    Undecided,
}

/// `constant + coeffs · s > 0`
#[derive(Debug, Clone)]
struct Strict {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl Strict {
    fn value_at(&self, s: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(s)
            .fold(self.constant.clone(), |acc, (a, v)| acc + a * v)
    }
}

/// Decides strict positivity by Fourier–Motzkin elimination over the free
/// parameters, then picks a point by back-substitution.
///
/// With a one-dimensional nullspace this is an interval intersection. The
/// number of constraints is capped at `max_constraints` per stage.
pub fn strictly_positive_point(
    particular: &[Rational],
    nullspace: &[Vec<Rational>],
    max_constraints: usize,
) -> Feasibility {
    let k = nullspace.len();
    let base: Vec<Strict> = (0..particular.len())
        .map(|i| Strict {
            coeffs: nullspace.iter().map(|v| v[i].clone()).collect(),
            constant: particular[i].clone(),
        })
        .collect();

    // stages[j] only involves variables s_0 .. s_{j-1}
    let mut stages = vec![base];
    for var in (0..k).rev() {
        let current = stages.last().unwrap();
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in current {
            let a = &c.coeffs[var];
            if a.is_zero() {
                rest.push(trim(c, var));
            } else {
                let scaled = scale(c, &a.abs().recip());
                if a.is_positive() {
                    lower.push(scaled);
                } else {
                    upper.push(scaled);
                }
            }
        }
        for lo in &lower {
            for up in &upper {
                let combined = Strict {
                    coeffs: lo.coeffs[..var]
                        .iter()
                        .zip(&up.coeffs[..var])
                        .map(|(x, y)| x + y)
                        .collect(),
                    constant: &lo.constant + &up.constant,
                };
                rest.push(combined);
            }
        }
        if rest.len() > max_constraints {
            return Feasibility::Undecided;
        }
        stages.push(rest);
    }

    if stages
        .last()
        .unwrap()
        .iter()
        .any(|c| !c.constant.is_positive())
    {
        return Feasibility::Infeasible;
    }

    let mut s: Vec<Rational> = Vec::with_capacity(k);
    for var in 0..k {
        let system = &stages[k - 1 - var];
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for c in system {
            let a = &c.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let rest = Strict {
                coeffs: c.coeffs[..var].to_vec(),
                constant: c.constant.clone(),
            }
            .value_at(&s);
            // a·s_var + rest > 0
            let bound = -rest / a;
            if a.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        let pick = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / Rational::from_integer(2.into()),
            (Some(l), None) => l + Rational::one(),
            (None, Some(h)) => h - Rational::one(),
            (None, None) => Rational::zero(),
        };
        s.push(pick);
    }

    let point: Vec<Rational> = (0..particular.len())
        .map(|i| {
            nullspace
                .iter()
                .zip(&s)
                .fold(particular[i].clone(), |acc, (v, si)| acc + &v[i] * si)
        })
        .collect();
    debug_assert!(point.iter().all(Signed::is_positive));
    Feasibility::Point(point)
}

fn trim(c: &Strict, var: usize) -> Strict {
    Strict {
        coeffs: c.coeffs[..var].to_vec(),
        constant: c.constant.clone(),
    }
}

fn scale(c: &Strict, f: &Rational) -> Strict {
    Strict {
        coeffs: c.coeffs.iter().map(|a| a * f).collect(),
        constant: &c.constant * f,
    }
}
