//! Acceptance gate. Runs each criterion, prints one PASS/FAIL line per
//! criterion, and exits nonzero if any fails.

use std::time::{Duration, Instant};

use complementa::bounds::{derived_length_bound, n_of_m, prop1_bound, zeta_bound};
use complementa::complement::{c_separating_subgroups, complements_by_search, is_supercomplemented, Mode};
use complementa::constructions::{example_group, theorem4_group};
use complementa::lattice::{is_elementary_abelian, is_normal, product_set, Subgroup};
use complementa::structure::{derived_length, derived_subgroup};
use complementa::verify::{
    run_catalog_suite, verify_bounds, verify_example, verify_theorem4, Status, VerificationReport,
};
use complementa::SubgroupLattice;
use num_bigint::BigUint;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// No failures among `reports`, and at least one pass.
fn reports_clean<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Outcome {
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    let mut first_fail = None;
    for r in reports {
        match r.status {
            Status::Pass => pass += 1,
            Status::Skipped => skip += 1,
            Status::Fail => {
                fail += 1;
                first_fail.get_or_insert_with(|| r.claim.clone());
            }
        }
    }
    let mut detail = format!("{pass} passed, {fail} failed, {skip} skipped");
    if let Some(c) = first_fail {
        detail.push_str(&format!("; first failure {c}"));
    }
    outcome(fail == 0 && pass > 0, detail)
}

fn within(o: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    let ok = o.ok && elapsed < limit;
    outcome(ok, format!("{} in {:.2}s (limit {}s)", o.detail, elapsed.as_secs_f64(), limit.as_secs()))
}

fn theorem4_reproduction() -> Outcome {
    let start = Instant::now();
    let named = theorem4_group().expect("builds");
    let g = &named.group;
    let lat = SubgroupLattice::build(g).expect("order 32 lattice");
    let whole = Subgroup::whole(g);
    let index2: Vec<&Subgroup> = lat.of_order(16).collect();
    let derived = derived_subgroup(g, &whole);
    let x2 = named.subgroup("x^2").unwrap();
    let (quotient, _) = g.quotient(derived.members()).expect("normal");
    let listed = [
        ("x,a", "b"),
        ("x,b", "a"),
        ("x^2,a,b", "x*a"),
        ("x^2,b,x*a", "x^2*a"),
        ("x,a*b", "a"),
        ("x*b,a", "b"),
        ("x^2,a*b,x*a", "b"),
    ];
    let listed_ok = listed.iter().all(|(h, t)| {
        let h = named.subgroup(h).unwrap();
        let t = named.subgroup(t).unwrap();
        let (prod, _) = product_set(g, &h, &t);
        h.order() == 16 && prod.len() == 32 && h.intersection(g, &t).is_trivial()
    });
    let x = named.handle("x").unwrap();
    let direct = g.order() == 32
        && index2.len() == 7
        && derived == x2
        && derived.order() == 4
        && quotient.order() == 8
        && quotient.exponent() == 2
        && listed_ok
        && is_supercomplemented(g, x).holds
        && c_separating_subgroups(g, &lat).is_empty()
        && g.exponent() == 8;
    let reports = verify_theorem4();
    let suite = reports_clean(&reports);
    within(
        outcome(direct && suite.ok, format!("direct checks {direct}; suite {}", suite.detail)),
        start.elapsed(),
        Duration::from_secs(5),
    )
}

fn example_reproduction() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for p in [2u64, 3] {
        let start = Instant::now();
        let named = example_group(p).expect("builds");
        let g = &named.group;
        let x = named.handle("x").unwrap();
        let b = named.handle("B").unwrap();
        let (prod, _) = product_set(g, x, b);
        let mut direct = prod.len() == g.order()
            && x.intersection(g, b).is_trivial()
            && is_elementary_abelian(g, b)
            && b.order() as u64 == p.pow(3)
            && !is_normal(g, x)
            && !is_normal(g, b)
            && is_supercomplemented(g, x).holds
            && !complements_by_search(g, x, Mode::First).complements.is_empty();
        if p == 3 {
            direct &= derived_length(g, &Subgroup::whole(g)).is_some_and(|d| d <= 2);
        }
        let suite = reports_clean(&verify_example(p));
        let limit = Duration::from_secs(60);
        let elapsed = start.elapsed();
        ok &= direct && suite.ok && elapsed < limit;
        details.push(format!("p={p}: direct {direct}, {} in {:.2}s", suite.detail, elapsed.as_secs_f64()));
    }
    outcome(ok, details.join("; "))
}

fn bound_formulas() -> Outcome {
    let direct = n_of_m(2) == 4
        && n_of_m(8) == 80
        && derived_length_bound(2).floor == 11
        && derived_length_bound(2).value == 11.0
        && derived_length_bound(8).floor == 18
        && zeta_bound(4) == 8
        && zeta_bound(73) == 14
        && [2u64, 3, 5, 7, 101].iter().all(|&q| prop1_bound(q, 1).unwrap() == BigUint::from(q));
    let suite = reports_clean(&verify_bounds());
    outcome(direct && suite.ok, format!("direct checks {direct}; suite {}", suite.detail))
}

fn select<'a>(reports: &'a [VerificationReport], needles: &'a [&str]) -> impl Iterator<Item = &'a VerificationReport> {
    reports
        .iter()
        .filter(move |r| r.claim.starts_with("catalog.") && needles.iter().any(|n| r.claim.contains(n)))
}

fn main() {
    let mut results: Vec<(&str, Outcome)> = vec![
        ("1 theorem4 reproduction", theorem4_reproduction()),
        ("2 example reproduction", example_reproduction()),
        ("3 bound formulas", bound_formulas()),
    ];

    let start = Instant::now();
    let catalog = run_catalog_suite();
    let elapsed = start.elapsed();
    results.push((
        "4 supercomplemented cyclic p-subgroup instances",
        within(reports_clean(select(&catalog, &[".thm1."])), elapsed, Duration::from_secs(300)),
    ));
    results.push(("5 minimal normal subgroup bound", reports_clean(select(&catalog, &[".prop1."]))));
    results.push((
        "6 oracle equivalence",
        reports_clean(select(&catalog, &[".lattice.subset-oracle", ".complement.criterion"])),
    ));
    results.push((
        "7 transport and modular identity",
        reports_clean(select(&catalog, &[".complement.lemma1-transport", ".lattice.dedekind"])),
    ));
    results.push((
        "8 completely factorizable groups are metabelian",
        reports_clean(select(&catalog, &[".complement.completely-factorizable-metabelian"])),
    ));

    let mut all = true;
    for (name, o) in &results {
        all &= o.ok;
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
