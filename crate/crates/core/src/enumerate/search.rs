use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::algebra::binomial;
use crate::diagram::sharp_point_allowed;
use crate::error::{Error, Result};
use crate::model::{solve_scalings, ReducedModel};
use crate::support::{ExponentPair, Support};

use super::echelon::{Echelon, Reduced};
use super::{Catalog, SearchMode, SearchSpec};

const DEG_D: u32 = 1;
const NU_ZERO: u32 = 1 << 1;
const MU_ZERO: u32 = 1 << 2;
const CORNER_X: u32 = 1 << 3;
const CORNER_Y: u32 = 1 << 4;
const DEG_D_MINUS_1: u32 = 1 << 5;

/// Nodes counted locally before being published to the shared counter.
const FLUSH_EVERY: u64 = 1 << 12;

struct Problem {
    k: usize,
    d: u32,
    points: Vec<ExponentPair>,
    columns: Vec<Vec<i128>>,
    bits: Vec<u32>,
    /// `suffix[i]` is the union of `bits[i..]`.
    suffix: Vec<u32>,
    need: u32,
    rank: bool,
    size: bool,
    collect: bool,
    budget: u64,
    nodes: AtomicU64,
    abort: AtomicBool,
}

#[derive(Clone)]
struct State {
    chosen: Vec<usize>,
    have: u32,
    echelon: Option<Echelon>,
}

#[derive(Default)]
struct Tally {
    models: Vec<ReducedModel>,
    count: u64,
    symmetric: u64,
    local_nodes: u64,
}

/// The column of `t^ν(1−t)^μ` in the expansion basis `1, t, …, t^d`.
fn column(p: ExponentPair, d: u32) -> Vec<i128> {
    let mut col = vec![0i128; d as usize + 1];
    for j in 0..=p.mu {
        let c: i128 = binomial(p.mu, j).try_into().expect("binomials fit in i128");
        col[(p.nu + j) as usize] = if j % 2 == 0 { c } else { -c };
    }
    col
}

impl Problem {
    fn new(spec: &SearchSpec) -> Self {
        let (n, d) = (spec.n, spec.d);
        let rules = spec.rules;
        let sharp = rules.sharp_support && d + 1 == 2 * n;
        let mut points: Vec<ExponentPair> = (1..=d)
            .rev()
            .flat_map(|k| (0..=k).map(move |nu| ExponentPair::new(nu, k - nu)))
            .filter(|&p| !sharp || sharp_point_allowed(p, d))
            .collect();
        // descending degree, then ascending ν
        points.sort_by(|a, b| b.degree().cmp(&a.degree()).then(a.nu.cmp(&b.nu)));

        let bits: Vec<u32> = points
            .iter()
            .map(|p| {
                let mut b = 0;
                if p.degree() == d {
                    b |= DEG_D;
                }
                if p.nu == 0 {
                    b |= NU_ZERO;
                }
                if p.mu == 0 {
                    b |= MU_ZERO;
                }
                if *p == ExponentPair::new(d, 0) {
                    b |= CORNER_X;
                }
                if *p == ExponentPair::new(0, d) {
                    b |= CORNER_Y;
                }
                if p.degree() + 1 == d {
                    b |= DEG_D_MINUS_1;
                }
                b
            })
            .collect();
        let mut suffix = vec![0u32; points.len() + 1];
        for i in (0..points.len()).rev() {
            suffix[i] = suffix[i + 1] | bits[i];
        }
        let mut need = 0;
        if rules.degree_anchor {
            need |= DEG_D;
        }
        if rules.axis_anchors {
            need |= NU_ZERO | MU_ZERO;
        }
        if sharp {
            need |= CORNER_X | CORNER_Y;
            if d > 1 {
                need |= DEG_D_MINUS_1;
            }
        }
        Problem {
            k: n as usize + 1,
            d,
            columns: points.iter().map(|&p| column(p, d)).collect(),
            points,
            bits,
            suffix,
            need,
            rank: rules.incremental_rank,
            size: rules.size_feasibility,
            collect: spec.mode == SearchMode::Collect,
            budget: spec.budget,
            nodes: AtomicU64::new(0),
            abort: AtomicBool::new(false),
        }
    }

    fn root(&self) -> State {
        State {
            chosen: Vec::with_capacity(self.k),
            have: 0,
            echelon: self.rank.then(|| Echelon::new(self.d as usize + 1)),
        }
    }

    /// Last candidate index worth trying from `s`.
    fn limit(&self, s: &State) -> usize {
        if self.size {
            (self.points.len() + s.chosen.len() + 1).saturating_sub(self.k)
        } else {
            self.points.len()
        }
    }

    fn tick(&self, tally: &mut Tally) -> Result<()> {
        tally.local_nodes += 1;
        if tally.local_nodes.is_multiple_of(FLUSH_EVERY) {
            let total = self.nodes.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
            if total > self.budget {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        if self.abort.load(Ordering::Relaxed) {
            return Err(self.exceeded());
        }
        Ok(())
    }

    fn exceeded(&self) -> Error {
        Error::BudgetExceeded {
            n: self.k as u32 - 1,
            d: self.d,
            budget: self.budget,
        }
    }

    /// `s` extended by candidate `i`, unless a pruning rule rejects it.
    fn extend(&self, s: &State, i: usize) -> Option<State> {
        let have = s.have | self.bits[i];
        if self.need & !(have | self.suffix[i + 1]) != 0 {
            return None;
        }
        let echelon = match &s.echelon {
            Some(e) => match e.reduce(self.columns[i].clone()) {
                Reduced::Zero => return None,
                Reduced::Residue(r) => {
                    let mut e = e.clone();
                    e.insert(r);
                    Some(e)
                }
                Reduced::Overflow => None,
            },
            None => None,
        };
        let mut chosen = s.chosen.clone();
        chosen.push(i);
        Some(State {
            chosen,
            have,
            echelon,
        })
    }

    fn leaf(&self, s: &State, tally: &mut Tally) {
        if let Some(e) = &s.echelon {
            let mut e0 = vec![0i128; self.d as usize + 1];
            e0[0] = 1;
            if let Reduced::Residue(_) = e.reduce(e0) {
                return;
            }
        }
        let support = Support::new(s.chosen.iter().map(|&i| self.points[i]))
            .expect("candidates are distinct");
        if support.degree() != Some(self.d) {
            return;
        }
        let solution = solve_scalings(&support).expect("candidates avoid the origin");
        let Some(model) = solution.fundamental_model() else {
            return;
        };
        tally.count += 1;
        if support.swapped() == support {
            tally.symmetric += 1;
        }
        if self.collect {
            tally.models.push(model.clone());
        }
    }

    fn dfs(&self, s: &State, tally: &mut Tally) -> Result<()> {
        if s.chosen.len() == self.k {
            self.leaf(s, tally);
            return Ok(());
        }
        let start = s.chosen.last().map_or(0, |&i| i + 1);
        for i in start..self.limit(s) {
            if self.need & !(s.have | self.suffix[i]) != 0 {
                break;
            }
            self.tick(tally)?;
            if let Some(child) = self.extend(s, i) {
                self.dfs(&child, tally)?;
            }
        }
        Ok(())
    }

    /// Branches at depth two (or leaves, for tiny `k`), explored in order.
    fn prefixes(&self, tally: &mut Tally) -> Result<Vec<State>> {
        let mut frontier = vec![self.root()];
        for _ in 0..2.min(self.k) {
            let mut next = Vec::new();
            for s in &frontier {
                let start = s.chosen.last().map_or(0, |&i| i + 1);
                for i in start..self.limit(s) {
                    if self.need & !(s.have | self.suffix[i]) != 0 {
                        break;
                    }
                    self.tick(tally)?;
                    next.extend(self.extend(s, i));
                }
            }
            frontier = next;
        }
        Ok(frontier)
    }
}

pub(super) fn run(spec: &SearchSpec) -> Result<Catalog> {
    let problem = Problem::new(spec);
    let mut head = Tally::default();
    let prefixes = problem.prefixes(&mut head)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.worker_count.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start workers: {e}")))?;
    let tallies: Vec<Result<Tally>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|s| {
                let mut t = Tally::default();
                problem.dfs(s, &mut t)?;
                Ok(t)
            })
            .collect()
    });

    let mut total = head;
    for t in tallies {
        let t = t?;
        total.count += t.count;
        total.symmetric += t.symmetric;
        total.local_nodes += t.local_nodes;
        total.models.extend(t.models);
    }
    if total.local_nodes > problem.budget {
        return Err(problem.exceeded());
    }
    total
        .models
        .sort_by(|a, b| a.support().pairs().cmp(b.support().pairs()));
    Ok(Catalog {
        n: spec.n,
        d: spec.d,
        models: total.models,
        count: total.count,
        count_up_to_swap: spec
            .symmetry_report
            .then(|| (total.count + total.symmetric) / 2),
        nodes: total.local_nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_expand_the_basis() {
        assert_eq!(column(ExponentPair::new(1, 2), 3), vec![0, 1, -2, 1]);
        assert_eq!(column(ExponentPair::new(3, 0), 3), vec![0, 0, 0, 1]);
    }

    #[test]
    fn sharp_candidates_are_filtered() {
        let spec = SearchSpec::new(3, 5);
        let p = Problem::new(&spec);
        assert!(p.points.iter().all(|&q| sharp_point_allowed(q, 5)));
        assert_eq!(p.points[0], ExponentPair::new(0, 5));
        let mut rules = spec.rules;
        rules.sharp_support = false;
        let q = Problem::new(&spec.clone().rules(rules));
        assert_eq!(q.points.len(), 20);
    }
}
