//! Exhaustive search for fundamental models of a given size and degree.

mod echelon;
mod search;
mod table;

pub use table::{
    catalog_properties, table_value, verify_recursive, verify_table, CellCheck, PropertyReport,
    RecursiveReport, TableReport, TABLE,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ReducedModel;

/// Default cap on partial-support extensions per search.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Count only; models are not retained.
    CountOnly,
    Collect,
}

/// Individually switchable pruning rules. None of them changes the result;
/// each only cuts branches that cannot lead to a fundamental model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneRules {
    /// Some pair has degree exactly `d`.
    pub degree_anchor: bool,
    /// Some pair has `ν = 0` and some pair has `μ = 0`.
    pub axis_anchors: bool,
    /// For `d = 2n − 1`, only supports that pass the sharp-support conditions.
    pub sharp_support: bool,
    /// Abandon a branch once its columns are linearly dependent.
    pub incremental_rank: bool,
    /// Abandon a branch when too few candidates remain.
    pub size_feasibility: bool,
    /// Return nothing without searching when `d < n` or `d > 2n − 1`.
    pub window: bool,
}

impl PruneRules {
    pub const fn all() -> Self {
        PruneRules {
            degree_anchor: true,
            axis_anchors: true,
            sharp_support: true,
            incremental_rank: true,
            size_feasibility: true,
            window: true,
        }
    }

    /// Only the degree anchor: the brute-force reference search.
    pub const fn brute_force() -> Self {
        PruneRules {
            degree_anchor: true,
            axis_anchors: false,
            sharp_support: false,
            incremental_rank: false,
            size_feasibility: false,
            window: false,
        }
    }

    /// Switches a rule off by its short name (`P1` … `P5`, `window`).
    pub fn disable(&mut self, name: &str) -> Result<()> {
        let slot = match name.to_ascii_lowercase().as_str() {
            "p1" | "degree" => &mut self.degree_anchor,
            "p2" | "axes" => &mut self.axis_anchors,
            "p3" | "sharp" => &mut self.sharp_support,
            "p4" | "rank" => &mut self.incremental_rank,
            "p5" | "size" => &mut self.size_feasibility,
            "window" => &mut self.window,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown pruning rule `{name}` (expected P1–P5 or window)"
                )))
            }
        };
        *slot = false;
        Ok(())
    }
}

impl Default for PruneRules {
    fn default() -> Self {
        Self::all()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: u32,
    pub d: u32,
    pub mode: SearchMode,
    /// Also count supports fixed by the swap `(ν, μ) ↦ (μ, ν)`.
    pub symmetry_report: bool,
    pub worker_count: usize,
    pub budget: u64,
    pub rules: PruneRules,
}

impl SearchSpec {
    /// Collects all models with every pruning rule on and one worker per CPU.
    pub fn new(n: u32, d: u32) -> Self {
        SearchSpec {
            n,
            d,
            mode: SearchMode::Collect,
            symmetry_report: true,
            worker_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: DEFAULT_BUDGET,
            rules: PruneRules::all(),
        }
    }

    pub fn workers(mut self, k: usize) -> Self {
        self.worker_count = k.max(1);
        self
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn rules(mut self, rules: PruneRules) -> Self {
        self.rules = rules;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

/// Result of a search. `models` is empty in count-only mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub n: u32,
    pub d: u32,
    /// Sorted by support in graded-lex order.
    pub models: Vec<ReducedModel>,
    pub count: u64,
    /// Number of classes under the swap; `None` when not requested.
    pub count_up_to_swap: Option<u64>,
    /// Partial supports visited.
    pub nodes: u64,
}

#[derive(Serialize, Deserialize)]
struct JsonModel {
    n: usize,
    d: u32,
    entries: Vec<(u32, u32, String)>,
}

impl Catalog {
    /// Models in the text format, separated by `---` lines.
    pub fn to_text(&self) -> String {
        self.models
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("---\n")
    }

    /// A JSON array with one object `{n, d, entries: [[ν, μ, "p/q"], …]}` per model.
    pub fn to_json(&self) -> String {
        let records: Vec<JsonModel> = self
            .models
            .iter()
            .map(|m| JsonModel {
                n: m.n(),
                d: m.degree(),
                entries: m
                    .entries()
                    .iter()
                    .map(|(p, c)| (p.nu, p.mu, c.to_string()))
                    .collect(),
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&records).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Reads models back from [`Catalog::to_json`] output.
    pub fn models_from_json(s: &str) -> Result<Vec<ReducedModel>> {
        let records: Vec<JsonModel> =
            serde_json::from_str(s).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        records
            .into_iter()
            .map(|r| {
                let entries = r
                    .entries
                    .into_iter()
                    .map(|(nu, mu, c)| Ok(((nu, mu), crate::algebra::parse_rational(&c)?)))
                    .collect::<Result<Vec<_>>>()?;
                ReducedModel::new(entries)
            })
            .collect()
    }
}

/// All fundamental models in `Δn` of degree exactly `d`.
pub fn enumerate(spec: &SearchSpec) -> Result<Catalog> {
    if spec.n == 0 || spec.d == 0 {
        return Err(Error::InvalidArgument(
            "n and d must both be at least 1".into(),
        ));
    }
    if spec.rules.window && (spec.d < spec.n || spec.d + 1 > 2 * spec.n) {
        return Ok(Catalog {
            n: spec.n,
            d: spec.d,
            models: Vec::new(),
            count: 0,
            count_up_to_swap: spec.symmetry_report.then_some(0),
            nodes: 0,
        });
    }
    search::run(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{binomial_model, sharp_model};

    fn count(n: u32, d: u32) -> u64 {
        enumerate(&SearchSpec::new(n, d).workers(2)).unwrap().count
    }

    #[test]
    fn small_cells() {
        assert_eq!(count(1, 1), 1);
        assert_eq!(count(2, 2), 3);
        assert_eq!(count(2, 3), 1);
        assert_eq!(count(3, 3), 12);
        assert_eq!(count(3, 4), 4);
        assert_eq!(count(3, 5), 2);
        assert_eq!(count(2, 4), 0);
        assert_eq!(count(3, 2), 0);
    }

    #[test]
    fn collected_models() {
        let cat = enumerate(&SearchSpec::new(2, 2)).unwrap();
        assert!(cat.models.contains(&binomial_model(2).unwrap()));
        let cat = enumerate(&SearchSpec::new(2, 3)).unwrap();
        assert_eq!(cat.models, vec![sharp_model(2).unwrap()]);
        assert_eq!(cat.count_up_to_swap, Some(1));
    }

    #[test]
    fn swap_classes_of_the_four_term_cubics() {
        let cat = enumerate(&SearchSpec::new(3, 3)).unwrap();
        assert_eq!((cat.count, cat.count_up_to_swap), (12, Some(7)));
    }

    #[test]
    fn count_only_agrees() {
        let spec = SearchSpec::new(3, 4).mode(SearchMode::CountOnly);
        let cat = enumerate(&spec).unwrap();
        assert_eq!(cat.count, 4);
        assert!(cat.models.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate(&SearchSpec::new(3, 3).budget(10)).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                n: 3,
                d: 3,
                budget: 10
            }
        ));
    }

    #[test]
    fn window_skips_search() {
        let cat = enumerate(&SearchSpec::new(3, 6)).unwrap();
        assert_eq!((cat.count, cat.nodes), (0, 0));
        let mut rules = PruneRules::all();
        rules.disable("window").unwrap();
        let cat = enumerate(&SearchSpec::new(3, 6).rules(rules)).unwrap();
        assert_eq!(cat.count, 0);
        assert!(cat.nodes > 0);
        assert!(PruneRules::all().disable("P9").is_err());
    }

    #[test]
    fn exports_round_trip() {
        let cat = enumerate(&SearchSpec::new(3, 4)).unwrap();
        assert_eq!(
            crate::model::parse_models(&cat.to_text()).unwrap(),
            cat.models
        );
        assert_eq!(
            Catalog::models_from_json(&cat.to_json()).unwrap(),
            cat.models
        );
    }
}
