use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, Rational};
use crate::error::{Error, Result};

use super::ReducedModel;

fn check_counts(u: &[Rational], states: usize) -> Result<()> {
    if u.len() != states {
        return Err(Error::InvalidArgument(format!(
            "expected {states} counts, got {}",
            u.len()
        )));
    }
    if u.iter().any(Signed::is_negative) {
        return Err(Error::InvalidArgument("counts must be nonnegative".into()));
    }
    if u.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("counts are all zero".into()));
    }
    Ok(())
}

/// Maximum likelihood estimate `t̂ = Σ u_i ν_i / Σ u_i (ν_i + μ_i)`.
///
/// `u` holds one nonnegative count per state, in the model's entry order.
pub fn mle_1d(m: &ReducedModel, u: &[Rational]) -> Result<Rational> {
    check_counts(u, m.entries().len())?;
    let (mut num, mut den) = (Rational::zero(), Rational::zero());
    for ((p, _), ui) in m.entries().iter().zip(u) {
        num += ui * Rational::from_integer(p.nu.into());
        den += ui * Rational::from_integer(p.degree().into());
    }
    if den.is_zero() {
        return Err(Error::InvalidArgument("zero denominator".into()));
    }
    Ok(num / den)
}

/// An `r`-dimensional model `t ↦ (c_i t_1^ν_1i ⋯ t_r^ν_ri (1 − Σt)^ν_(r+1)i)_i`.
///
/// Exponent vectors have length `r + 1`; the last exponent belongs to
/// `1 − t_1 − … − t_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiModel {
    r: usize,
    entries: Vec<(Vec<u32>, Rational)>,
}

type Poly = BTreeMap<Vec<u32>, Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl MultiModel {
    /// Validates shape, distinctness, positivity and that the components sum
    /// to one identically in `t_1, …, t_r`.
    pub fn new(r: usize, entries: Vec<(Vec<u32>, Rational)>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "dimension r must be at least 1".into(),
            ));
        }
        if entries.is_empty() {
            return Err(Error::EmptyModel);
        }
        if let Some((e, _)) = entries.iter().find(|(e, _)| e.len() != r + 1) {
            return Err(Error::InvalidArgument(format!(
                "exponent vector {e:?} should have length {}",
                r + 1
            )));
        }
        if entries.iter().any(|(e, _)| e.iter().all(|&x| x == 0)) {
            return Err(Error::OriginPair);
        }
        let mut seen: Vec<&Vec<u32>> = entries.iter().map(|(e, _)| e).collect();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "exponent vectors must be distinct".into(),
            ));
        }
        if entries.iter().any(|(_, c)| !c.is_positive()) {
            return Err(Error::InvalidArgument(
                "scalings must be strictly positive".into(),
            ));
        }
        let m = MultiModel { r, entries };
        let mut sum = m.expand();
        let one = sum.remove(&vec![0; r]).unwrap_or_else(Rational::zero);
        if !one.is_one() || !sum.is_empty() {
            return Err(Error::IdentityFails);
        }
        Ok(m)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of states minus one.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[(Vec<u32>, Rational)] {
        &self.entries
    }

    /// Largest total exponent over the states.
    pub fn degree(&self) -> u32 {
        self.entries
            .iter()
            .map(|(e, _)| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// The sharp degree bound: `d ≤ 2n − 1` for `r = 1`, `r·d ≤ n` for `r ≥ 2`.
    pub fn satisfies_degree_bound(&self) -> bool {
        let (d, n) = (self.degree() as usize, self.n());
        if self.r == 1 {
            d < 2 * n
        } else {
            self.r * d <= n
        }
    }

    /// `Σ_i c_i t^ν_i (1 − Σt)^ν_(r+1)i` expanded in the monomials of `t_1, …, t_r`.
    fn expand(&self) -> Poly {
        let r = self.r;
        let mut total = Poly::new();
        let mut powers: Vec<Poly> = vec![Poly::from([(vec![0; r], Rational::one())])];
        let mut line = Poly::from([(vec![0; r], Rational::one())]);
        for a in 0..r {
            let mut e = vec![0; r];
            e[a] = 1;
            line.insert(e, -Rational::one());
        }
        for (e, c) in &self.entries {
            let k = e[r] as usize;
            while powers.len() <= k {
                let next = poly_mul(powers.last().unwrap(), &line);
                powers.push(next);
            }
            for (mono, v) in &powers[k] {
                let shifted: Vec<u32> = mono.iter().zip(e).map(|(x, y)| x + y).collect();
                *total.entry(shifted).or_insert_with(Rational::zero) += c * v;
            }
        }
        total.retain(|_, c| !c.is_zero());
        total
    }

    /// The stationarity equations `Σ_i u_i(ν_(r+1)i t_α + ν_αi(t_1+…+t_r − 1))`
    /// evaluated at `t`, one per `α`.
    pub fn stationarity_residual(&self, u: &[Rational], t: &[Rational]) -> Vec<Rational> {
        let s = t.iter().fold(Rational::zero(), |a, b| a + b) - Rational::one();
        (0..self.r)
            .map(|a| {
                self.entries
                    .iter()
                    .zip(u)
                    .map(|((e, _), ui)| {
                        ui * (Rational::from_integer(e[self.r].into()) * &t[a]
                            + Rational::from_integer(e[a].into()) * &s)
                    })
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }
}

impl From<&ReducedModel> for MultiModel {
    fn from(m: &ReducedModel) -> Self {
        MultiModel {
            r: 1,
            entries: m
                .entries()
                .iter()
                .map(|(p, c)| (vec![p.nu, p.mu], c.clone()))
                .collect(),
        }
    }
}

/// The multinomial model of degree `d` in `r` parameters: every exponent
/// vector of total `d` with its multinomial coefficient.
pub fn multinomial_model(r: usize, d: u32) -> Result<MultiModel> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=left).rev() {
            prefix.push(k);
            rec(prefix, left - k, slots - 1, out);
            prefix.pop();
        }
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let mut exps = Vec::new();
    rec(&mut Vec::new(), d, r + 1, &mut exps);
    let entries = exps
        .into_iter()
        .map(|e| {
            let mut rest = d;
            let mut c = num_bigint::BigInt::one();
            for &k in &e {
                c *= binomial(rest, k);
                rest -= k;
            }
            (e, Rational::from_integer(c))
        })
        .collect();
    MultiModel::new(r, entries)
}

/// The critical point `t_α = U_α / (U_1 + … + U_(r+1))`, `U_α = Σ_i u_i ν_αi`.
pub fn mle_multi(m: &MultiModel, u: &[Rational]) -> Result<Vec<Rational>> {
    check_counts(u, m.entries.len())?;
    let big_u: Vec<Rational> = (0..=m.r)
        .map(|a| {
            m.entries
                .iter()
                .zip(u)
                .map(|((e, _), ui)| ui * Rational::from_integer(e[a].into()))
                .fold(Rational::zero(), |x, y| x + y)
        })
        .collect();
    let total = big_u.iter().fold(Rational::zero(), |a, b| a + b);
    if total.is_zero() {
        return Err(Error::InvalidArgument("zero total exponent mass".into()));
    }
    Ok(big_u[..m.r].iter().map(|x| x / &total).collect())
}
