//! Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{rngs::StdRng, Rng, SeedableRng};

use r1d_core::algebra::rat;
use r1d_core::diagram::{diagram_of, find_sinks, render_chips, render_diagram, sharp_support_ok};
use r1d_core::enumerate::{catalog_properties, enumerate, verify_recursive};
use r1d_core::model::{
    binomial_model, compose, mle_1d, mle_multi, one_parameter_family, sharp_model, solve_scalings,
};
use r1d_core::{
    BivarPoly, ExponentPair, MultiModel, PruneRules, Rational, ReducedModel, SearchSpec,
};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

/// Non-comment, non-blank lines.
fn fixture_lines(name: &str) -> Vec<String> {
    fixture(name)
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs `r1d table` and compares every reported cell with the fixture.
fn table(max_n: u32, limit: Duration) -> Check {
    let expected: BTreeMap<(u32, u32), u64> = fixture_lines("counts.txt")
        .iter()
        .map(|l| {
            let v: Vec<u64> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
            ((v[0] as u32, v[1] as u32), v[2])
        })
        .filter(|&((n, _), _)| n <= max_n)
        .collect();
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_r1d"))
        .args(["table", "--max-n", &max_n.to_string(), "--jobs", "4"])
        .env_remove("R1D_MAX_JOBS")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), format!("exit status {}", out.status))?;
    let mut seen = BTreeMap::new();
    for line in String::from_utf8_lossy(&out.stdout).lines() {
        // PASS (n,d) expected E got G
        let words: Vec<&str> = line.split_whitespace().collect();
        let cell = words[1].trim_matches(|c| c == '(' || c == ')');
        let (n, d) = cell.split_once(',').ok_or(format!("bad line `{line}`"))?;
        let got: u64 = words[5].parse().map_err(|_| format!("bad line `{line}`"))?;
        seen.insert((n.parse::<u32>().unwrap(), d.parse::<u32>().unwrap()), got);
    }
    ensure(seen == expected, format!("got {seen:?}"))?;
    ensure(elapsed < limit, format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} cells in {:.1}s",
        seen.len(),
        elapsed.as_secs_f64()
    ))
}

fn four_term_cubics() -> Check {
    let cat = enumerate(&SearchSpec::new(3, 3)).map_err(|e| e.to_string())?;
    ensure(cat.count == 12, format!("{} labeled models", cat.count))?;
    ensure(
        cat.count_up_to_swap == Some(7),
        format!("{:?} classes", cat.count_up_to_swap),
    )?;
    let classes: BTreeSet<BTreeSet<String>> = cat
        .models
        .iter()
        .map(|m| [m.f_poly().to_string(), m.swapped().f_poly().to_string()].into())
        .collect();
    ensure(
        classes.len() == 7,
        format!("{} distinct classes", classes.len()),
    )?;
    let listed: Vec<String> = fixture_lines("cubic_four_terms.txt")
        .iter()
        .map(|l| l.parse::<BivarPoly>().map(|p| p.to_string()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut matched = BTreeSet::new();
    for p in &listed {
        let class = classes
            .iter()
            .find(|c| c.contains(p))
            .ok_or(format!("`{p}` is not an enumerated polynomial"))?;
        ensure(
            matched.insert(class.clone()),
            format!("`{p}` repeats a class"),
        )?;
    }
    ensure(matched.len() == 7, "not every class is listed")?;
    Ok("12 models, 7 swap classes, all 7 polynomials matched".into())
}

fn recursive() -> Check {
    let mut parts = Vec::new();
    for (n, value) in [(3, 4), (4, 10), (5, 24)] {
        let r = verify_recursive(n, 4, r1d_core::enumerate::DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure(
            r.equality() && r.bound == value,
            format!("n = {n}: bound {}, actual {}", r.bound, r.actual),
        )?;
        parts.push(format!("n={n}: {}", r.actual));
    }
    Ok(parts.join(", "))
}

fn diagram_example() -> Check {
    let m: ReducedModel = fixture("five_sinks.model")
        .parse()
        .map_err(|e: r1d_core::Error| e.to_string())?;
    let diag = diagram_of(&m).map_err(|e| e.to_string())?;
    let r = find_sinks(&diag);
    let sinks: BTreeSet<ExponentPair> = r.sinks.iter().copied().collect();
    let expected: BTreeSet<ExponentPair> = [(7, 0), (5, 1), (1, 1), (1, 5), (0, 7)]
        .into_iter()
        .map(ExponentPair::from)
        .collect();
    ensure(sinks == expected, format!("sinks {sinks:?}"))?;
    ensure(
        r.sources == vec![ExponentPair::new(0, 0)],
        format!("sources {:?}", r.sources),
    )?;
    ensure(
        render_diagram(&diag, false) == fixture("diagram_five_sinks.txt"),
        "rendering differs from the fixture",
    )?;
    Ok("5 sinks, source (0,0), rendering matches".into())
}

fn composition() -> Check {
    let c = compose(&sharp_model(2).unwrap(), &binomial_model(2).unwrap())
        .map_err(|e| e.to_string())?;
    let expected = ReducedModel::new([
        ((0, 3), rat(1, 1)),
        ((3, 2), rat(1, 1)),
        ((5, 0), rat(1, 1)),
        ((1, 1), rat(3, 1)),
        ((4, 1), rat(2, 1)),
    ])
    .unwrap();
    ensure(c == expected, format!("got\n{c}"))?;
    ensure(
        render_chips(&c) == fixture("chips_composed.txt"),
        "chips differ from the fixture",
    )?;
    let sol = solve_scalings(&c.support()).map_err(|e| e.to_string())?;
    ensure(
        sol.report.fundamental && sol.model.as_ref() == Some(&c),
        "not fundamental",
    )?;
    Ok("support, scalings, chips and fundamentality match".into())
}

fn mle() -> Check {
    let m = sharp_model(2).unwrap();
    let multi = MultiModel::from(&m);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let (u0, u1, u2): (i64, i64, i64) = (
            rng.gen_range(0..1000),
            rng.gen_range(0..1000),
            rng.gen_range(1..1000),
        );
        // entry order is (1,1), (0,3), (3,0); u0 counts t^3, u1 counts 3t(1−t), u2 counts (1−t)^3
        let u: Vec<Rational> = [u1, u2, u0].iter().map(|&x| rat(x, 1)).collect();
        let expected = rat(3 * u0 + u1, 3 * u0 + 2 * u1 + 3 * u2);
        let got = mle_1d(&m, &u).map_err(|e| e.to_string())?;
        ensure(
            got == expected,
            format!("u = ({u0},{u1},{u2}): {got} ≠ {expected}"),
        )?;
        let t = mle_multi(&multi, &u).map_err(|e| e.to_string())?;
        ensure(
            t == vec![got],
            format!("u = ({u0},{u1},{u2}): multivariate {t:?}"),
        )?;
    }
    Ok("100 random count vectors, 1-d and r = 1 estimators agree".into())
}

fn invariants() -> Check {
    let mut checked = 0;
    for n in 1..=4 {
        for d in n..2 * n {
            let cat = enumerate(&SearchSpec::new(n, d)).map_err(|e| e.to_string())?;
            let r = catalog_properties(&cat);
            ensure(r.all_pass(), format!("({n},{d}): {:?}", r.failures))?;
            if d == 2 * n - 1 {
                for m in &cat.models {
                    ensure(
                        sharp_support_ok(&m.support(), d),
                        format!("sharp support of {}", m.support()),
                    )?;
                }
            }
            let set: BTreeSet<_> = cat.models.iter().cloned().collect();
            let swapped: BTreeSet<_> = cat.models.iter().map(ReducedModel::swapped).collect();
            ensure(
                set == swapped,
                format!("({n},{d}) not closed under the swap"),
            )?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} models, zero failures"))
}

fn oracle() -> Check {
    let mut cells = 0;
    for n in 1..=3 {
        for d in 1..=2 * n + 1 {
            let run = |rules| -> Result<BTreeSet<ReducedModel>, String> {
                let cat =
                    enumerate(&SearchSpec::new(n, d).rules(rules)).map_err(|e| e.to_string())?;
                Ok(cat.models.into_iter().collect())
            };
            ensure(
                run(PruneRules::all())? == run(PruneRules::brute_force())?,
                format!("({n},{d}) differs"),
            )?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells, pruned = brute force"))
}

fn family() -> Check {
    let fam = one_parameter_family(4, 4).map_err(|e| e.to_string())?;
    let mut supports = BTreeSet::new();
    for c in [rat(1, 4), rat(1, 2), rat(3, 4)] {
        let m = fam.instantiate(&c).map_err(|e| e.to_string())?;
        supports.insert(m.support());
    }
    ensure(supports.len() == 1, "supports differ")?;
    let support = supports.into_iter().next().unwrap();
    let sol = solve_scalings(&support).map_err(|e| e.to_string())?;
    ensure(
        sol.report.nullity == 1 && !sol.report.fundamental,
        format!("{:?}", sol.report),
    )?;
    Ok(format!("support {support}, nullity 1"))
}

fn determinism() -> Check {
    let run = |k| {
        let cat = enumerate(&SearchSpec::new(4, 5).workers(k)).unwrap();
        (cat.to_text(), cat.to_json())
    };
    let one = run(1);
    ensure(run(2) == one && run(8) == one, "catalogs differ")?;
    Ok(format!(
        "{} bytes identical for 1, 2, 8 workers",
        one.0.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("table n ≤ 4", || table(4, Duration::from_secs(5 * 60))),
        ("table n ≤ 5", || {
            table(5, Duration::from_secs(2 * 60 * 60))
        }),
        ("four-term cubics (3,3)", four_term_cubics),
        ("recursive bound", recursive),
        ("diagram example", diagram_example),
        ("composition example", composition),
        ("maximum likelihood", mle),
        ("catalog invariants n ≤ 4", invariants),
        ("pruning oracle n ≤ 3", oracle),
        ("family non-fundamentality", family),
        ("determinism (4,5)", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
