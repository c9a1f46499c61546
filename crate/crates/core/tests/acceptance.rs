//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_FAILING` are still run and reported as FAIL; they do not fail
//! the process, but an unexpected pass does (so the list cannot go stale). See the README
//! for why each one fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use skeinlab::catalog::Catalog;
use skeinlab::verify::{self, Report};

const SEED: u64 = 1;

/// No diagram for the trivial-Jones link is available; see README "Known gaps".
const KNOWN_FAILING: &[usize] = &[2];

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn(&Catalog) -> Report,
}

fn catalog_links(cat: &Catalog) -> Vec<(String, skeinlab::diagram::LinkDiagram)> {
    verify::sample(cat, 0, SEED)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "Whitehead golden value", limit: Duration::from_secs(1), run: verify::whitehead },
    Criterion {
        id: 2,
        name: "Thistlethwaite link reproduction",
        limit: Duration::from_secs(30),
        run: verify::thistlethwaite,
    },
    Criterion {
        id: 3,
        name: "oracle triangle (catalog + 100 random)",
        limit: Duration::from_secs(300),
        run: |c| verify::oracles(&verify::sample(c, 100, SEED)),
    },
    Criterion {
        id: 4,
        name: "invariance (200 perturbations, 50 triples)",
        limit: Duration::from_secs(300),
        run: |c| verify::isotopy(&catalog_links(c), 200, 50, SEED),
    },
    Criterion {
        id: 5,
        name: "specialization collapse",
        limit: Duration::from_secs(300),
        run: |c| verify::collapse_checks(&catalog_links(c)),
    },
    Criterion {
        id: 6,
        name: "topological equivalence",
        limit: Duration::from_secs(300),
        run: |c| verify::topological_checks(&catalog_links(c)),
    },
    Criterion {
        id: 7,
        name: "Kauffman/Dubrovnik translation",
        limit: Duration::from_secs(300),
        run: |c| verify::translation_checks(&catalog_links(c)),
    },
    Criterion { id: 8, name: "Stirling identity n = 1..6", limit: Duration::from_secs(60), run: |_| verify::stirling_checks(6) },
    Criterion {
        id: 9,
        name: "curly-bracket skein and double state sum",
        limit: Duration::from_secs(300),
        run: |c| verify::curly_checks(&catalog_links(c)),
    },
];

fn main() -> ExitCode {
    let cat = Catalog::builtin();
    let mut bad = 0;
    for c in CRITERIA {
        let t = Instant::now();
        let report = (c.run)(&cat);
        let dt = t.elapsed();
        let pass = report.all_pass() && dt < c.limit;
        let known = KNOWN_FAILING.contains(&c.id);
        let tag = match (pass, known) {
            (true, false) => "PASS",
            (true, true) => "PASS (listed as known failing)",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "{tag} {}. {} — {} checks, {} failed, {:.2?} (limit {:?})",
            c.id,
            c.name,
            report.checks.len(),
            report.failures(),
            dt,
            c.limit
        );
        for ch in report.checks.iter().filter(|ch| !ch.pass) {
            println!("    {} {}", ch.name, ch.detail);
        }
        if pass == known {
            bad += 1;
        }
    }
    if bad == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
