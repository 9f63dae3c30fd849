use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use num_traits::Zero;

use r1d_core::diagram::{
    check_structure, diagram_of, render_chips, render_diagram, sharp_support_ok,
};
use r1d_core::enumerate::{enumerate, verify_recursive, verify_table};
use r1d_core::model::{compose, mle_1d, one_parameter_family, solve_scalings, ScalingSolution};
use r1d_core::{BivarPoly, Error, PruneRules, ReducedModel, SearchMode, SearchSpec, Support};

use crate::{input, Command, Search};

/// Largest `n` that `table` runs without `--long-running`.
const DESK_MAX_N: u32 = 5;

/// Environment variable capping the number of worker threads.
const MAX_JOBS_VAR: &str = "R1D_MAX_JOBS";

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn failed_if(stdout: String, failed: bool) -> Self {
        Outcome {
            stdout,
            code: u8::from(failed),
        }
    }
}

/// 3 for an exhausted budget, 1 for a violated precondition, 2 for anything
/// wrong with the input.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::BudgetExceeded { .. }) => 3,
        Some(Error::PreconditionViolated(_)) => 1,
        _ => 2,
    }
}

fn workers(search: &Search) -> Result<usize> {
    let mut k = search
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if let Ok(cap) = std::env::var(MAX_JOBS_VAR) {
        let cap: usize = cap
            .trim()
            .parse()
            .with_context(|| format!("{MAX_JOBS_VAR} must be a positive integer, got `{cap}`"))?;
        k = k.min(cap);
    }
    if k == 0 {
        bail!("the worker count must be at least 1");
    }
    Ok(k)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run(cmd: &Command, verbose: bool) -> Result<Outcome> {
    match cmd {
        Command::Enumerate {
            n,
            d,
            count_only,
            out,
            up_to_swap,
            no_prune,
            search,
        } => {
            let mut rules = PruneRules::all();
            for name in no_prune {
                rules.disable(name)?;
            }
            let mode = if *count_only && out.is_none() {
                SearchMode::CountOnly
            } else {
                SearchMode::Collect
            };
            let mut spec = SearchSpec::new(*n, *d)
                .mode(mode)
                .rules(rules)
                .workers(workers(search)?)
                .budget(search.budget);
            spec.symmetry_report = *up_to_swap;
            let cat = enumerate(&spec)?;
            if verbose {
                eprintln!("nodes: {}, workers: {}", cat.nodes, spec.worker_count);
            }
            if let Some(path) = out {
                let json = path.extension().is_some_and(|e| e == "json");
                let text = if json { cat.to_json() } else { cat.to_text() };
                std::fs::write(path, text)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let mut s = format!("{}\n", cat.count);
            if let Some(k) = cat.count_up_to_swap {
                writeln!(s, "{k} up to swap")?;
            }
            Ok(Outcome::ok(s))
        }
        Command::Table {
            max_n,
            long_running,
            probe,
            search,
        } => {
            if *max_n == 0 {
                bail!("--max-n must be at least 1");
            }
            if *max_n > DESK_MAX_N && !long_running {
                bail!("rows with n > {DESK_MAX_N} take hours or more; pass --long-running to run them");
            }
            let report = verify_table(*max_n, *probe, workers(search)?, search.budget)?;
            let mut s = String::new();
            for c in &report.cells {
                let tag = if c.pass() { "PASS" } else { "FAIL" };
                let note = if c.probe {
                    "  (searched outside the window)"
                } else {
                    ""
                };
                writeln!(
                    s,
                    "{tag} ({},{}) expected {} got {}{note}",
                    c.n, c.d, c.expected, c.actual
                )?;
            }
            Ok(Outcome::failed_if(s, !report.all_pass()))
        }
        Command::Recursive { n, search } => {
            let r = verify_recursive(*n, workers(search)?, search.budget)?;
            let mut s = format!("sharp counts a_1..a_{}: {}\n", n - 1, list(&r.sharp_counts));
            writeln!(
                s,
                "bound {}, actual {}, equality: {}",
                r.bound,
                r.actual,
                yes_no(r.equality())
            )?;
            Ok(Outcome::failed_if(s, !r.bound_holds()))
        }
        Command::Check { path, support } => match (path, support) {
            (Some(path), _) => check_model(&input::model(path)?),
            (None, Some(s)) => check_support(s),
            (None, None) => bail!("give a model file or --support"),
        },
        Command::Solve { support } => {
            let pairs = input::pairs(support)?;
            let sol = solve_scalings(&Support::new(pairs)?)?;
            let mut s = format!(
                "# rank {}, nullity {}\n",
                sol.report.rank, sol.report.nullity
            );
            match &sol.model {
                Some(m) => {
                    if !sol.report.fundamental {
                        s.push_str("# not fundamental: one model among several on this support\n");
                    }
                    s.push_str(&m.to_string());
                    Ok(Outcome::ok(s))
                }
                None => {
                    writeln!(s, "# no model: {}", no_model_reason(&sol))?;
                    Ok(Outcome::failed_if(s, true))
                }
            }
        }
        Command::Compose { first, second } => {
            let m = compose(&input::model(first)?, &input::model(second)?)?;
            Ok(Outcome::ok(m.to_string()))
        }
        Command::Unsplit { path, poly, at, c } => {
            let f: BivarPoly = match (path, poly) {
                (_, Some(p)) => p.parse().context("parsing --poly")?,
                (Some(path), None) => input::model(path)?.f_poly(),
                (None, None) => bail!("give a model file or --poly"),
            };
            let [p] = input::pairs(at)?[..] else {
                bail!("--at takes a single pair `a,b`");
            };
            let g = r1d_core::model::unsplit(&f, p.nu, p.mu, &input::rational(c)?)?;
            Ok(Outcome::ok(format!("{g}\n")))
        }
        Command::Diagram { path, no_markers } => {
            let diag = diagram_of(&input::model(path)?)?;
            Ok(Outcome::ok(render_diagram(&diag, !no_markers)))
        }
        Command::Chips { path, stars } => {
            let m = input::model(path)?;
            let s = if *stars {
                r1d_core::diagram::ChipConfig::from(&m).render(true)
            } else {
                render_chips(&m)
            };
            Ok(Outcome::ok(s))
        }
        Command::Mle { path, counts } => {
            let m = input::model(path)?;
            let t = mle_1d(&m, &input::rationals(counts)?)?;
            Ok(Outcome::ok(format!("{t}\n")))
        }
        Command::Family { n, d, c } => {
            let m = one_parameter_family(*n, *d)?.instantiate(&input::rational(c)?)?;
            Ok(Outcome::ok(m.to_string()))
        }
    }
}

fn no_model_reason(sol: &ScalingSolution) -> &'static str {
    if !sol.report.consistent {
        "the identity has no solution on this support"
    } else if !sol.report.positivity_decided {
        "positivity could not be decided within the search limit"
    } else {
        "no solution has all scalings positive"
    }
}

fn structure_lines(m: &ReducedModel, s: &mut String) -> Result<bool> {
    let r = check_structure(m)?;
    writeln!(s, "sinks: {}", list(&r.sinks.sinks))?;
    writeln!(s, "sources: {}", list(&r.sinks.sources))?;
    let checks = [
        ("sinks in support with positive scaling", r.sinks_in_support),
        ("unique source at (0,0)", r.unique_source),
        ("axis sign pattern", r.axis_pattern),
        ("sink lower bound", r.sink_lower_bound),
        ("support covers sinks", r.support_covers_sinks),
    ];
    for (name, ok) in checks {
        writeln!(s, "{name}: {}", pass_fail(ok))?;
    }
    let mut ok = r.all_pass();
    if 2 * m.n() == m.degree() as usize + 1 {
        let sharp = sharp_support_ok(&m.support(), m.degree());
        writeln!(s, "sharp support conditions: {}", pass_fail(sharp))?;
        ok &= sharp;
    }
    Ok(ok)
}

fn check_model(m: &ReducedModel) -> Result<Outcome> {
    let residual_zero = m.identity_residual().iter().all(Zero::is_zero);
    let sol = solve_scalings(&m.support())?;
    let mut s = format!("n: {}, degree: {}\n", m.n(), m.degree());
    writeln!(
        s,
        "identity residual: {}",
        if residual_zero { "zero" } else { "NONZERO" }
    )?;
    writeln!(
        s,
        "fundamental: {} (rank {}, nullity {})",
        yes_no(sol.report.fundamental),
        sol.report.rank,
        sol.report.nullity
    )?;
    writeln!(
        s,
        "degree bound d ≤ 2n − 1: {}",
        pass_fail((m.degree() as usize) < 2 * m.n())
    )?;
    let ok = structure_lines(m, &mut s)?;
    Ok(Outcome::failed_if(s, !(ok && residual_zero)))
}

fn check_support(text: &str) -> Result<Outcome> {
    let pairs = input::pairs(text)?;
    let support = Support::new(pairs.clone())?;
    let sol = solve_scalings(&support)?;
    let mut s = format!("support: {support}\n");
    writeln!(s, "degree: {}", support.degree().unwrap_or(0))?;
    writeln!(
        s,
        "rank: {}, nullity: {}",
        sol.report.rank, sol.report.nullity
    )?;
    match &sol.model {
        Some(m) => {
            writeln!(s, "fundamental: {}", yes_no(sol.report.fundamental))?;
            let label = if sol.report.fundamental {
                "c"
            } else {
                "one choice of c"
            };
            writeln!(
                s,
                "{label} = {}",
                list(pairs.iter().map(|&p| m.coefficient(p)))
            )?;
            structure_lines(m, &mut s)?;
        }
        None => {
            writeln!(s, "fundamental: no")?;
            writeln!(s, "no model: {}", no_model_reason(&sol))?;
        }
    }
    Ok(Outcome::ok(s))
}
