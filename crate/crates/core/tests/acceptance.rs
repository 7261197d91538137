//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_DIVERGENT` fail for reasons analysed in the
//! README ("Known divergences"). They still print FAIL. The process exits
//! nonzero when any other criterion fails, or when a listed one starts
//! passing, so the list has to be kept honest.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use m4cyclic::metrics::SearchLimits;
use m4cyclic::reproduce::{self, Verdict};
use m4cyclic::suites::{self, Suite, SuiteConfig};

const KNOWN_DIVERGENT: [u32; 6] = [2, 3, 4, 5, 7, 8];

struct Outcome {
    passed: bool,
    summary: String,
}

fn factorization() -> Outcome {
    let cat = reproduce::catalog().expect("catalog");
    let mut bad = Vec::new();
    for n in [3, 5, 7] {
        let c = reproduce::check_factors(&cat, n).expect("factor");
        if !c.matches {
            bad.push(format!("n={n}: {:?} vs {:?}", c.computed, c.published));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        summary: if bad.is_empty() { "n = 3, 5, 7 exact".into() } else { bad.join("; ") },
    }
}

fn example(id: &str) -> Outcome {
    let cat = reproduce::catalog().expect("catalog");
    let rep = reproduce::reproduce_example(&cat, id, &SearchLimits::default()).expect("rows build");
    let mut parts = Vec::new();
    let mut certified_diffs = true;
    for r in &rep.rows {
        parts.push(format!("{} {} {}", r.want(), if r.verdict == Verdict::Match { "=" } else { "!=" }, r.got()));
        if r.verdict == Verdict::Mismatch {
            // a mismatch has to come with a witness and an exact certificate
            certified_diffs &= r.distance.witness.is_some() && r.distance.is_exact();
        }
    }
    let matched = rep.rows.iter().filter(|r| r.verdict == Verdict::Match).count();
    let summary = format!(
        "{matched}/{} rows match, diffs {}: {}",
        rep.rows.len(),
        if certified_diffs { "certified" } else { "NOT certified" },
        parts.join(", ")
    );
    Outcome { passed: rep.all_match(), summary }
}

fn suite(s: Suite) -> Outcome {
    let reports = suites::run(s, &SuiteConfig::default());
    let r = &reports[0];
    let checks = r.checks.len();
    let failed: Vec<String> = r.failures().map(|c| format!("{} ({}/{})", c.name, c.failures, c.cases)).collect();
    let summary = if failed.is_empty() {
        format!("{checks} checks")
    } else {
        let head: Vec<&String> = failed.iter().take(3).collect();
        let more = failed.len().saturating_sub(3);
        let tail = if more > 0 { format!(" and {more} more") } else { String::new() };
        format!(
            "{}/{checks} checks fail: {}{tail}",
            failed.len(),
            head.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; ")
        )
    };
    Outcome { passed: r.ok(), summary }
}

fn main() -> ExitCode {
    type Run = Box<dyn Fn() -> Outcome>;
    let criteria: Vec<(u32, &str, u64, Run)> = vec![
        (1, "factorization", 1, Box::new(factorization)),
        (2, "example 1 (n=5, k=1)", 60, Box::new(|| example("ex1"))),
        (3, "example 3 (n=3, k=4)", 300, Box::new(|| example("ex3"))),
        (4, "example 2 (n=5, k=3)", 300, Box::new(|| example("ex2"))),
        (5, "example 4 (n=7, 3, k=1)", 120, Box::new(|| example("ex4"))),
        (6, "isomorphism suite", 30, Box::new(|| suite(Suite::Iso))),
        (7, "cardinality suite", 120, Box::new(|| suite(Suite::Cardinality))),
        (8, "duality suite", 120, Box::new(|| suite(Suite::Duality))),
        (9, "gray/isometry suite", 30, Box::new(|| suite(Suite::Gray))),
        (10, "submodule sampling", 120, Box::new(|| suite(Suite::Submodule))),
    ];
    let mut unexpected = Vec::new();
    let mut fails = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let passed = out.passed && in_time;
        let timing = if in_time {
            format!("{:.2}s", took.as_secs_f64())
        } else {
            format!("{:.2}s > {limit}s", took.as_secs_f64())
        };
        let known = KNOWN_DIVERGENT.contains(&id);
        let note = match (passed, known) {
            (false, true) => " [known divergence]",
            _ => "",
        };
        println!("criterion {id:>2} {} {name} ({timing}): {}{note}", if passed { "PASS" } else { "FAIL" }, out.summary);
        if !passed {
            fails += 1;
        }
        if passed == known {
            unexpected.push(id);
        }
    }
    println!("{} of 10 criteria pass", 10 - fails);
    if unexpected.is_empty() {
        println!("every failure is a listed known divergence");
        ExitCode::SUCCESS
    } else {
        println!("criteria {unexpected:?} disagree with the known-divergence list");
        ExitCode::FAILURE
    }
}
