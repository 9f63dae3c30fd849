use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial in `x` and `y` with exact coefficients.
///
/// Keys are exponent pairs `(a, b)` for `x^a y^b`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Result of dividing `f − 1` by the line `x + y − 1`.
///
/// `f − 1 = (x + y − 1)·quotient + remainder` where the remainder contains no
/// power of `x`. The remainder is zero exactly when `f` equals one on the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDivision {
    pub quotient: BivarPoly,
    pub remainder: BivarPoly,
}

impl LineDivision {
    pub fn is_exact(&self) -> bool {
        self.remainder.is_zero()
    }
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `x + y − 1`.
    pub fn line() -> Self {
        let mut p = Self::x() + Self::y();
        p.add_term(0, 0, -Rational::one());
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    /// Adds `c·x^a y^b` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, a: u32, b: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b == k)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swapped(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((b, a), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (&(a, b), c)| {
                acc + c
                    * num_traits::pow(x.clone(), a as usize)
                    * num_traits::pow(y.clone(), b as usize)
            })
    }

    /// Divides `self − 1` by `x + y − 1`, eliminating powers of `x` from the
    /// highest `x`-degree downwards.
    pub fn divide_by_line(&self) -> LineDivision {
        let mut rest = self.clone();
        rest.add_term(0, 0, -Rational::one());
        let mut quotient = BivarPoly::zero();
        let max_a = rest.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        for a in (1..=max_a).rev() {
            let row: Vec<(u32, Rational)> = rest
                .terms
                .range((a, 0)..=(a, u32::MAX))
                .map(|(&(_, b), c)| (b, c.clone()))
                .collect();
            for (b, c) in row {
                // c·x^a y^b = c·x^(a−1) y^b · (x + y − 1) − c·x^(a−1) y^(b+1) + c·x^(a−1) y^b
                rest.terms.remove(&(a, b));
                rest.add_term(a - 1, b + 1, -c.clone());
                rest.add_term(a - 1, b, c.clone());
                quotient.add_term(a - 1, b, c);
            }
        }
        LineDivision {
            quotient,
            remainder: rest,
        }
    }

    /// Terms in descending graded order: total degree first, then `x`-degree.
    fn display_order(&self) -> Vec<((u32, u32), &Rational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(p, _)| std::cmp::Reverse((p.0 + p.1, p.0)));
        terms
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    match a {
        0 => {}
        1 => f.write_str("x")?,
        _ => write!(f, "x^{a}")?,
    }
    match b {
        0 => {}
        1 => f.write_str("y")?,
        _ => write!(f, "y^{b}")?,
    }
    Ok(())
}

/// Writes e.g. `x^3 + 3xy + y^3`, `1 + x − (3/2)xy`; `0` for the zero polynomial.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.display_order().into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = a == 0 && b == 0;
            if constant || !magnitude.is_one() {
                if magnitude.is_integer() || constant {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            write_monomial(f, a, b)?;
        }
        Ok(())
    }
}

/// Parses sums of terms such as `x^3 + 3x^2y - (3/2)xy + 2`.
impl FromStr for BivarPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(1, "empty polynomial"));
        }
        let bad = |msg: &str| Error::parse(1, format!("{msg} in `{s}`"));
        let mut poly = BivarPoly::zero();
        let chars: Vec<char> = compact.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = Rational::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let take_number = |i: &mut usize| -> Option<BigInt> {
                let start = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                (start < *i).then(|| chars[start..*i].iter().collect::<String>().parse().unwrap())
            };
            let mut coeff = Rational::one();
            let mut explicit = false;
            if i < chars.len() && chars[i] == '(' {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| bad("unbalanced parenthesis"))?;
                let inner: String = chars[i + 1..i + close].iter().collect();
                coeff = super::rational::parse_rational(&inner)?;
                i += close + 1;
                explicit = true;
            } else if let Some(num) = take_number(&mut i) {
                coeff = Rational::from_integer(num);
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let den = take_number(&mut i).ok_or_else(|| bad("missing denominator"))?;
                    if den.is_zero() {
                        return Err(bad("zero denominator"));
                    }
                    coeff /= Rational::from_integer(den);
                }
                explicit = true;
            }
            let (mut a, mut b) = (0u32, 0u32);
            let mut has_var = false;
            while i < chars.len() && (chars[i] == 'x' || chars[i] == 'y' || chars[i] == '*') {
                if chars[i] == '*' {
                    i += 1;
                    continue;
                }
                let var = chars[i];
                i += 1;
                let mut e = 1u32;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    e = take_number(&mut i)
                        .ok_or_else(|| bad("missing exponent"))?
                        .try_into()
                        .map_err(|_| bad("exponent too large"))?;
                }
                if var == 'x' {
                    a += e;
                } else {
                    b += e;
                }
                has_var = true;
            }
            if !explicit && !has_var {
                return Err(bad("empty term"));
            }
            poly.add_term(a, b, sign * coeff);
            if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                return Err(bad("unexpected character"));
            }
        }
        Ok(poly)
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: BivarPoly) -> BivarPoly {
        &self + &rhs
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &(-rhs)
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: BivarPoly) -> BivarPoly {
        &self - &rhs
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_identity_and_cancellation() {
        assert_eq!(p("x+y") + BivarPoly::zero(), p("x+y"));
        let sum = p("x^2+2xy+y^2") + p("-2xy");
        assert_eq!(sum, p("x^2+y^2"));
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn geometric_sum_cofactor_of_b3() {
        let z = p("x+y");
        let g = BivarPoly::one() + z.clone() + &z * &z;
        assert_eq!(g, p("1+x+y+x^2+2xy+y^2"));
    }

    #[test]
    fn products() {
        assert_eq!(p("x+y") * p("x+y"), p("x^2+2xy+y^2"));
        assert_eq!(BivarPoly::line() * p("1+x+y"), p("x^2+2xy+y^2-1"));
        assert_eq!(
            BivarPoly::line() * p("1+x+y+x^2-xy+y^2"),
            p("x^3+3xy+y^3-1")
        );
    }

    #[test]
    fn division_examples() {
        let d = p("x^2+2xy+y^2").divide_by_line();
        assert!(d.is_exact());
        assert_eq!(d.quotient, p("1+x+y"));

        let d = p("x^3+3xy+y^3").divide_by_line();
        assert!(d.is_exact());
        assert_eq!(d.quotient, p("1+x+y+x^2-xy+y^2"));
        assert_eq!(d.quotient.degree(), Some(2));

        let d = p("x^2").divide_by_line();
        assert!(!d.is_exact());
        // x^2 − 1 restricted to x = 1 − y
        assert_eq!(d.remainder, p("y^2-2y"));
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(BivarPoly::zero().degree(), None);
        assert_eq!(BivarPoly::one().degree(), Some(0));
    }

    #[test]
    fn display_and_parse() {
        let q = p("1+x+y+x^2-(3/2)xy+y^2");
        assert_eq!(q.to_string(), "x^2 - (3/2)xy + y^2 + x + y + 1");
        assert_eq!(q.to_string().parse::<BivarPoly>().unwrap(), q);
        assert_eq!(
            p("2x^2y+x^2+2xy^2+y^2").to_string(),
            "2x^2y + 2xy^2 + x^2 + y^2"
        );
        assert_eq!(p("7/2x^5y").coeff(5, 1), rat(7, 2));
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert!("x+".parse::<BivarPoly>().is_err());
        assert!("x$y".parse::<BivarPoly>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec(((0u32..6, 0u32..6), -20i64..20, 1i64..5), 0..10)
            .prop_map(|ts| BivarPoly::from_terms(ts.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn division_round_trip(f in arb_poly()) {
            let d = f.divide_by_line();
            let back = &(&BivarPoly::line() * &d.quotient) + &d.remainder;
            prop_assert_eq!(back + BivarPoly::one(), f);
            prop_assert!(d.remainder.terms().all(|((a, _), _)| a == 0));
        }

        #[test]
        fn display_parse_round_trip(f in arb_poly()) {
            prop_assert_eq!(f.to_string().parse::<BivarPoly>().unwrap(), f);
        }
    }
}
