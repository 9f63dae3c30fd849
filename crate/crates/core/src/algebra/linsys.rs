use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{binomial, Rational};
use crate::error::{Error, Result};
use crate::support::ExponentPair;

/// Dense linear system `matrix · c = rhs` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinSystem {
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

impl LinSystem {
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self> {
        if matrix.len() != rhs.len() {
            return Err(Error::InvalidArgument(format!(
                "{} rows but {} right-hand sides",
                matrix.len(),
                rhs.len()
            )));
        }
        if let Some(width) = matrix.first().map(Vec::len) {
            if matrix.iter().any(|row| row.len() != width) {
                return Err(Error::InvalidArgument("ragged matrix".into()));
            }
        }
        Ok(LinSystem { matrix, rhs })
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    /// `matrix · x − rhs`.
    pub fn residual(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                row.iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, v)| acc + a * v)
                    - b
            })
            .collect()
    }
}

/// Outcome of [`solve_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Unique(Vec<Rational>),
    /// Solutions form `particular + span(nullspace)`; free variables of
    /// `particular` are zero.
    Underdetermined {
        rank: usize,
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
    Inconsistent {
        rank: usize,
    },
}

impl SolveResult {
    pub fn rank(&self) -> usize {
        match self {
            SolveResult::Unique(x) => x.len(),
            SolveResult::Underdetermined { rank, .. } | SolveResult::Inconsistent { rank } => *rank,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, SolveResult::Unique(_))
    }
}

/// Coefficient system of `Σ c_i t^ν_i (1−t)^μ_i ≡ 1` in powers `t^0 … t^d`.
///
/// Row `α`, column `i` holds `(−1)^(α−ν_i) C(μ_i, α−ν_i)` when
/// `0 ≤ α − ν_i ≤ μ_i`; the right-hand side is `(1, 0, …, 0)`. Columns follow
/// the order of `pairs`.
pub fn expansion_matrix(pairs: &[ExponentPair], d: u32) -> Result<LinSystem> {
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePair(w[0]));
    }
    if let Some(p) = pairs.iter().find(|p| p.degree() > d) {
        return Err(Error::InvalidArgument(format!(
            "pair {p} exceeds degree {d}"
        )));
    }
    let rows = d as usize + 1;
    let mut matrix = vec![vec![Rational::zero(); pairs.len()]; rows];
    for (col, p) in pairs.iter().enumerate() {
        for k in 0..=p.mu {
            let mut entry = binomial(p.mu, k);
            if k % 2 == 1 {
                entry = -entry;
            }
            matrix[(p.nu + k) as usize][col] = Rational::from_integer(entry);
        }
    }
    let mut rhs = vec![Rational::zero(); rows];
    rhs[0] = Rational::one();
    Ok(LinSystem { matrix, rhs })
}

/// Scales a rational row to a primitive integer row with the same solutions.
fn integer_row(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .chain(std::iter::once(rhs))
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Classifies and solves a system exactly.
///
/// Forward elimination is fraction-free (Bareiss): every intermediate entry is
/// a minor of the integer-scaled augmented matrix, so each division by the
/// previous pivot is exact. Rationals only appear in back-substitution.
pub fn solve_exact(sys: &LinSystem) -> SolveResult {
    let cols = sys.cols();
    let mut a: Vec<Vec<BigInt>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            if row.is_empty() {
                vec![b.numer().clone()]
            } else {
                integer_row(row, b)
            }
        })
        .collect();
    let pivots = bareiss_echelon(&mut a, cols);
    let rank = pivots.len();

    if a[rank..].iter().any(|row| !row[cols].is_zero()) {
        return SolveResult::Inconsistent { rank };
    }

    let back_substitute = |rhs_col: Option<usize>, free: Option<usize>| -> Vec<Rational> {
        let mut x = vec![Rational::zero(); cols];
        if let Some(f) = free {
            x[f] = Rational::one();
        }
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = match rhs_col {
                Some(c) => Rational::from_integer(a[r][c].clone()),
                None => Rational::zero(),
            };
            for j in pc + 1..cols {
                if !a[r][j].is_zero() && !x[j].is_zero() {
                    acc -= Rational::from_integer(a[r][j].clone()) * &x[j];
                }
            }
            x[pc] = acc / Rational::from_integer(a[r][pc].clone());
        }
        x
    };

    let particular = back_substitute(Some(cols), None);
    if rank == cols {
        return SolveResult::Unique(particular);
    }
    let nullspace = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| back_substitute(None, Some(free)))
        .collect();
    SolveResult::Underdetermined {
        rank,
        particular,
        nullspace,
    }
}

/// In-place fraction-free row echelon form over the first `pivot_cols`
/// columns; the remaining columns are carried along. Returns pivot columns.
fn bareiss_echelon(a: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let rows = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        // smallest nonzero pivot keeps the minors small
        let Some(p) = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].abs())
        else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..width {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}
