use std::collections::BTreeSet;

use num_traits::Zero;

use crate::diagram::{check_structure, sharp_support_ok};
use crate::error::Result;
use crate::support::Support;

use super::{enumerate, Catalog, PruneRules, SearchMode, SearchSpec};

/// Known counts of fundamental models as `(n, d, count)`, for every
/// `n ≤ 7` and `n ≤ d ≤ 2n − 1`. Cells outside that window are zero.
pub const TABLE: &[(u32, u32, u64)] = &[
    (1, 1, 1),
    (2, 2, 3),
    (2, 3, 1),
    (3, 3, 12),
    (3, 4, 4),
    (3, 5, 2),
    (4, 4, 82),
    (4, 5, 38),
    (4, 6, 10),
    (4, 7, 4),
    (5, 5, 602),
    (5, 6, 254),
    (5, 7, 88),
    (5, 8, 24),
    (5, 9, 2),
    (6, 6, 6710),
    (6, 7, 2421),
    (6, 8, 643),
    (6, 9, 198),
    (6, 10, 32),
    (6, 11, 4),
    (7, 7, 83906),
    (7, 8, 23285),
    (7, 9, 6445),
    (7, 10, 1442),
    (7, 11, 332),
    (7, 12, 56),
    (7, 13, 8),
];

/// The tabulated count, `Some(0)` outside the window, `None` past the table.
pub fn table_value(n: u32, d: u32) -> Option<u64> {
    if n == 0 || d < n || d + 1 > 2 * n {
        return Some(0);
    }
    TABLE
        .iter()
        .find(|&&(tn, td, _)| (tn, td) == (n, d))
        .map(|&(_, _, c)| c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub n: u32,
    pub d: u32,
    pub expected: u64,
    pub actual: u64,
    /// Searched with the window shortcut disabled.
    pub probe: bool,
}

impl CellCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub cells: Vec<CellCheck>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(CellCheck::pass)
    }
}

/// Largest `n` whose out-of-window cells are searched for real.
const PROBE_MAX_N: u32 = 3;

/// Enumerates every window cell with `n ≤ max_n` and compares with [`TABLE`].
/// With `probes`, the cells `d = n − 1` and `d = 2n` of small `n` are also
/// searched with the window shortcut off and must come out empty.
pub fn verify_table(max_n: u32, probes: bool, workers: usize, budget: u64) -> Result<TableReport> {
    let mut cells = Vec::new();
    for n in 1..=max_n {
        for d in n..=2 * n - 1 {
            let expected = table_value(n, d).ok_or_else(|| {
                crate::Error::InvalidArgument(format!("no tabulated value for ({n}, {d})"))
            })?;
            let spec = SearchSpec::new(n, d)
                .mode(SearchMode::CountOnly)
                .workers(workers)
                .budget(budget);
            let actual = enumerate(&spec)?.count;
            cells.push(CellCheck {
                n,
                d,
                expected,
                actual,
                probe: false,
            });
        }
        if probes && n <= PROBE_MAX_N {
            let mut rules = PruneRules::all();
            rules.window = false;
            for d in [n - 1, 2 * n] {
                if d == 0 {
                    continue;
                }
                let spec = SearchSpec::new(n, d)
                    .mode(SearchMode::CountOnly)
                    .workers(workers)
                    .budget(budget)
                    .rules(rules);
                let actual = enumerate(&spec)?.count;
                cells.push(CellCheck {
                    n,
                    d,
                    expected: 0,
                    actual,
                    probe: true,
                });
            }
        }
    }
    Ok(TableReport { cells })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveReport {
    pub n: u32,
    /// `a_1, …, a_(n−1)`: counts of sharp models.
    pub sharp_counts: Vec<u64>,
    /// `2(a_1 a_(n−1) + … + a_(n−1) a_1)`.
    pub bound: u64,
    /// Count of fundamental models in `Δn` of degree `2n − 2`.
    pub actual: u64,
}

impl RecursiveReport {
    pub fn bound_holds(&self) -> bool {
        self.actual >= self.bound
    }

    pub fn equality(&self) -> bool {
        self.actual == self.bound
    }
}

/// Compares the count in degree `2n − 2` with the composition lower bound
/// built from the sharp counts of smaller simplices.
pub fn verify_recursive(n: u32, workers: usize, budget: u64) -> Result<RecursiveReport> {
    if n < 3 {
        return Err(crate::Error::InvalidArgument(format!(
            "the recursive bound needs n ≥ 3, got {n}"
        )));
    }
    let count = |n: u32, d: u32| -> Result<u64> {
        let spec = SearchSpec::new(n, d)
            .mode(SearchMode::CountOnly)
            .workers(workers)
            .budget(budget);
        Ok(enumerate(&spec)?.count)
    };
    let sharp_counts = (1..n)
        .map(|k| count(k, 2 * k - 1))
        .collect::<Result<Vec<_>>>()?;
    let bound = 2
        * (1..n as usize)
            .map(|k| sharp_counts[k - 1] * sharp_counts[n as usize - k - 1])
            .sum::<u64>();
    let actual = count(n, 2 * n - 2)?;
    Ok(RecursiveReport {
        n,
        sharp_counts,
        bound,
        actual,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub checked: usize,
    /// One line per violated property, naming the model's support.
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the model and diagram invariants over every catalog entry, and checks
/// that supports are distinct and the catalog is closed under the swap.
pub fn catalog_properties(cat: &Catalog) -> PropertyReport {
    let mut report = PropertyReport::default();
    let supports: Vec<Support> = cat.models.iter().map(|m| m.support()).collect();
    let set: BTreeSet<&Support> = supports.iter().collect();
    if set.len() != supports.len() {
        report.failures.push("two models share a support".into());
    }
    let sharp = cat.d + 1 == 2 * cat.n;
    for (m, s) in cat.models.iter().zip(&supports) {
        report.checked += 1;
        let mut fail = |what: &str| report.failures.push(format!("{s}: {what}"));
        if !m.identity_residual().iter().all(Zero::is_zero) {
            fail("identity residual is not zero");
        }
        if (m.n() as u32, m.degree()) != (cat.n, cat.d) {
            fail("wrong size or degree");
        }
        if m.degree() as usize > 2 * m.n() - 1 {
            fail("degree exceeds 2n − 1");
        }
        match check_structure(m) {
            Ok(r) => {
                for f in r.failures() {
                    fail(f);
                }
            }
            Err(e) => fail(&e.to_string()),
        }
        if sharp && !sharp_support_ok(s, cat.d) {
            fail("sharp support conditions");
        }
        if !set.contains(&s.swapped()) {
            fail("swap image missing from catalog");
        }
        let swapped = m.swapped();
        let mut a = m.coefficients();
        let mut b = swapped.coefficients();
        a.sort();
        b.sort();
        if a != b {
            fail("swap changes the coefficient multiset");
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{binomial_model, sharp_model};

    #[test]
    fn table_lookup() {
        assert_eq!(table_value(3, 3), Some(12));
        assert_eq!(table_value(2, 4), Some(0));
        assert_eq!(table_value(3, 2), Some(0));
        assert_eq!(table_value(8, 8), None);
        assert_eq!(TABLE.iter().filter(|c| c.0 <= 4).count(), 10);
    }

    #[test]
    fn small_table() {
        let r = verify_table(3, true, 2, super::super::DEFAULT_BUDGET).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.cells.iter().filter(|c| !c.probe).count(), 6);
        assert!(r.cells.iter().any(|c| c.probe && (c.n, c.d) == (1, 2)));
    }

    #[test]
    fn recursive_three() {
        let r = verify_recursive(3, 2, super::super::DEFAULT_BUDGET).unwrap();
        assert_eq!(r.sharp_counts, vec![1, 1]);
        assert_eq!((r.bound, r.actual), (4, 4));
        assert!(r.equality());
        assert!(verify_recursive(2, 1, 100).is_err());
    }

    #[test]
    fn properties_of_small_catalogs() {
        for (n, d) in [(2, 2), (3, 3), (3, 5)] {
            let cat = enumerate(&SearchSpec::new(n, d)).unwrap();
            let r = catalog_properties(&cat);
            assert!(r.all_pass(), "{:?}", r.failures);
            assert_eq!(r.checked as u64, cat.count);
        }
        let cat = enumerate(&SearchSpec::new(2, 2)).unwrap();
        assert!(cat.models.contains(&binomial_model(2).unwrap()));
    }

    #[test]
    fn broken_catalogs_are_reported() {
        let cat = Catalog {
            n: 3,
            d: 5,
            models: vec![sharp_model(3).unwrap(), sharp_model(3).unwrap()],
            count: 2,
            count_up_to_swap: None,
            nodes: 0,
        };
        let r = catalog_properties(&cat);
        assert!(r.failures.iter().any(|f| f.contains("share a support")));
        assert!(r.failures.iter().any(|f| f.contains("swap image")));
    }
}
