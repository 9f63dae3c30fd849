use crate::algebra::{binomial, Rational};
use crate::error::{Error, Result};
use crate::support::ExponentPair;

use super::{compose, ReducedModel};

fn require_positive(n: u32, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} needs n ≥ 1")));
    }
    Ok(())
}

/// `t ↦ (C(n,i) t^i (1−t)^(n−i))_i`, the binomial model `Bn`.
pub fn binomial_model(n: u32) -> Result<ReducedModel> {
    require_positive(n, "binomial model")?;
    Ok(ReducedModel::from_parts_unchecked(
        (0..=n)
            .map(|i| {
                (
                    ExponentPair::new(i, n - i),
                    Rational::from_integer(binomial(n, i)),
                )
            })
            .collect(),
    ))
}

/// `t ↦ (t, (1−t)t, …, (1−t)^(n−1) t, (1−t)^n)`, all scalings one.
pub fn geometric_model(n: u32) -> Result<ReducedModel> {
    require_positive(n, "geometric model")?;
    let mut entries: Vec<_> = (0..n)
        .map(|k| (ExponentPair::new(1, k), Rational::from_integer(1.into())))
        .collect();
    entries.push((ExponentPair::new(0, n), Rational::from_integer(1.into())));
    Ok(ReducedModel::from_parts_unchecked(entries))
}

/// The sharp model of degree `2n − 1` in `Δn`:
/// `t^(2n−1)` together with `(2n−1)/(2i+1)·C(n+i−1, 2i)·t^(n−i−1)(1−t)^(2i+1)`
/// for `i = 0 … n−1`.
pub fn sharp_model(n: u32) -> Result<ReducedModel> {
    require_positive(n, "sharp model")?;
    let d = 2 * n - 1;
    let mut entries = vec![(ExponentPair::new(d, 0), Rational::from_integer(1.into()))];
    for i in 0..n {
        let c = Rational::new(binomial(n + i - 1, 2 * i) * d, (2 * i + 1).into());
        entries.push((ExponentPair::new(n - i - 1, 2 * i + 1), c));
    }
    Ok(ReducedModel::from_parts_unchecked(entries))
}

/// A fundamental model in `Δn` of degree `d` for any `n ≤ d ≤ 2n − 1`.
///
/// `d = n` gives the binomial model, `d = 2n − 1` the sharp model, and
/// `d = n + k` otherwise composes the sharp model in `Δ(k+1)` with the
/// binomial model in `Δ(n−k−1)`. The result always carries `(d, 0)` with
/// scaling one.
pub fn fundamental_model(n: u32, d: u32) -> Result<ReducedModel> {
    require_positive(n, "fundamental model")?;
    if d < n || d > 2 * n - 1 {
        return Err(Error::InvalidArgument(format!(
            "no fundamental model in Δ{n} has degree {d}"
        )));
    }
    if d == n {
        return binomial_model(n);
    }
    if d == 2 * n - 1 {
        return sharp_model(n);
    }
    let k = d - n;
    compose(&sharp_model(k + 1)?, &binomial_model(n - k - 1)?)
}
