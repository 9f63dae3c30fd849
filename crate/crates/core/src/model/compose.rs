use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::algebra::{BivarPoly, Rational};
use crate::error::{Error, Result};
use crate::support::ExponentPair;

use super::ReducedModel;

/// Composition at `(d1, 0)` where `d1 = deg(m1)` and `m1` has scaling exactly
/// one there: the `(d1, 0)` state is replaced by a copy of `m2` shifted by
/// `(d1, 0)`. For fundamental inputs the result is fundamental in
/// `Δ(n1+n2)` of degree `d1 + d2`.
pub fn compose(m1: &ReducedModel, m2: &ReducedModel) -> Result<ReducedModel> {
    let at = ExponentPair::new(m1.degree(), 0);
    let c = m1.coefficient(at);
    if c.is_zero() {
        return Err(Error::PreconditionViolated(format!(
            "first model does not contain {at}"
        )));
    }
    if !c.is_one() {
        return Err(Error::PreconditionViolated(format!(
            "scaling at {at} is {c}, expected 1"
        )));
    }
    compose_at(m1, m2, at)
}

/// Composition at an arbitrary pair `at` of `m1` whose scaling is at least one.
///
/// Subtracts one from the scaling at `at` and adds `m2` shifted by `at`. Whether
/// this preserves fundamentality for `at ≠ (d, 0)` is not known in general;
/// only [`compose`] carries that guarantee.
pub fn compose_at(m1: &ReducedModel, m2: &ReducedModel, at: ExponentPair) -> Result<ReducedModel> {
    let c = m1.coefficient(at);
    if c < Rational::one() {
        return Err(Error::PreconditionViolated(format!(
            "scaling at {at} is {c}, composition needs at least 1"
        )));
    }
    let mut h: BTreeMap<ExponentPair, Rational> = m1.entries().iter().cloned().collect();
    *h.get_mut(&at).unwrap() -= Rational::one();
    for (p, c2) in m2.entries() {
        let shifted = ExponentPair::new(p.nu + at.nu, p.mu + at.mu);
        *h.entry(shifted).or_insert_with(Rational::zero) += c2;
    }
    ReducedModel::new(h.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// One unsplitting move: `c·(x^(a+1) y^b + x^a y^(b+1))` becomes `c·x^a y^b`.
///
/// Preserves the value of `f` on the line `x + y = 1`; the cofactor `g` of
/// `f − 1 = (x+y−1)·g` changes by `−c·x^a y^b`.
pub fn unsplit(f: &BivarPoly, a: u32, b: u32, c: &Rational) -> Result<BivarPoly> {
    if !c.is_positive() {
        return Err(Error::PreconditionViolated(format!(
            "unsplitting weight must be positive, got {c}"
        )));
    }
    for (p, q) in [(a + 1, b), (a, b + 1)] {
        let have = f.coeff(p, q);
        if have < *c {
            return Err(Error::PreconditionViolated(format!(
                "coefficient of x^{p}y^{q} is {have}, need at least {c}"
            )));
        }
    }
    let mut out = f.clone();
    out.add_term(a + 1, b, -c.clone());
    out.add_term(a, b + 1, -c.clone());
    out.add_term(a, b, c.clone());
    Ok(out)
}
