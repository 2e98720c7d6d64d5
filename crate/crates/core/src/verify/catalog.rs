//! The catalog suite: every module invariant, run over every catalog group,
//! plus the numeric checks on the bound formulas.

use rayon::prelude::*;

use super::analysis::{Analysis, BATTERY, CATALOG_LATTICE_CAP, METABELIAN_ODD};
use super::oracle::{all_subgroups_by_subsets, SUBSET_ORACLE_CAP};
use super::instances::{theorem3_claims, verify_example, verify_theorem4};
use super::{Outcome, Recorder, VerificationReport, Witness};
use crate::bounds::{
    derived_length_bound, factorial_index_bound, log10, n_of_m, prop1_bound, zeta_bound,
    BoundReport, FLOOR_GUARD,
};
use crate::complement::{self, lemma1_transport_check};
use crate::constructions::{catalog, CatalogEntry, Recipe};
use crate::group::{ActionSpec, FiniteGroup};
use crate::lattice::{self, dedekind_identity_check, product_of_sets, Subgroup};
use crate::structure::{
    chief_series, derived_length, frattini, is_nilpotent, p_part, sylow_subgroups,
};

/// Pairwise product checks run on groups up to this order.
const PAIR_SCAN_CAP: usize = 64;
/// Overgroup cross-checks run on groups up to this order.
const OVERGROUP_SCAN_CAP: usize = 128;
/// The lattice-free supercomplemented check of the trivial subgroup runs
/// on groups up to this order.
const SEARCH_ROUTE_CAP: usize = 256;

/// The default catalog plus the bound checks, sorted by claim id.
pub fn run_catalog_suite() -> Vec<VerificationReport> {
    let mut reports = run_suite(&catalog());
    reports.extend(verify_bounds());
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    reports
}

/// All per-group claims for the given entries, sorted by claim id.
pub fn run_suite(entries: &[CatalogEntry]) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> =
        entries.par_iter().flat_map_iter(entry_claims).collect();
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    reports
}

fn entry_claims(entry: &CatalogEntry) -> Vec<VerificationReport> {
    let mut rec = Recorder::new(format!("catalog.{}", entry.name));
    match entry.recipe {
        Recipe::Theorem4 => rec.extend(verify_theorem4()),
        Recipe::Example(p) => rec.extend(verify_example(p)),
        _ => {}
    }
    let named = match entry.build() {
        Ok(n) => n,
        Err(e) => {
            rec.push("core.build", Outcome::Fail(vec![Witness::note(e.to_string())]), None);
            return rec.finish();
        }
    };
    let g = &named.group;
    group_core_claims(&mut rec, entry, g);
    let an = match Analysis::new(g, CATALOG_LATTICE_CAP) {
        Ok(an) => an,
        Err(e) => {
            rec.push("lattice.build", Outcome::Fail(vec![Witness::note(e.to_string())]), None);
            return rec.finish();
        }
    };
    lattice_claims(&mut rec, &an);
    structure_claims(&mut rec, &an);
    complement_claims(&mut rec, &an);
    theorem_claims(&mut rec, &an);
    rec.finish()
}

fn group_core_claims(rec: &mut Recorder, entry: &CatalogEntry, g: &FiniteGroup) {
    rec.claim("core.fingerprint", || {
        Outcome::Pass(vec![
            Witness::number("order", g.order()),
            Witness::number("exponent", g.exponent()),
        ])
    });
    rec.claim("core.audit", || match g.audit() {
        Ok(()) => Outcome::Pass(vec![]),
        Err(e) => Outcome::Fail(vec![Witness::note(e.to_string())]),
    });
    rec.claim("core.deterministic", || match entry.recipe.build() {
        Ok(again) => Outcome::check(&again.group == g, vec![]),
        Err(e) => Outcome::Fail(vec![Witness::note(e.to_string())]),
    });
    rec.claim("core.trivial-action-is-direct-product", || {
        let c2 = FiniteGroup::cyclic(2).expect("C2");
        let direct = g.direct_product(&c2);
        let semi = ActionSpec::trivial(&c2, g).semidirect_product();
        match (direct, semi) {
            (Ok(d), Ok(s)) => Outcome::check(
                d == s && d.order() == 2 * g.order(),
                vec![Witness::number("order", d.order())],
            ),
            (Err(e), _) | (_, Err(e)) => Outcome::Fail(vec![Witness::note(e.to_string())]),
        }
    });
}

fn lattice_claims(rec: &mut Recorder, an: &Analysis) {
    let g = an.g;
    let lat = &an.lattice;
    let subs = lat.subgroups();
    let n = g.order();
    rec.claim("lattice.lagrange", || {
        match subs.iter().find(|h| !n.is_multiple_of(h.order())) {
            None => Outcome::Pass(vec![Witness::number("subgroups", subs.len())]),
            Some(h) => Outcome::Fail(vec![Witness::subgroup(g, h)]),
        }
    });
    rec.claim("lattice.subset-oracle", || {
        if n > SUBSET_ORACLE_CAP {
            return Outcome::Skipped(format!("order above {SUBSET_ORACLE_CAP}"));
        }
        let oracle = all_subgroups_by_subsets(g);
        let ours: Vec<Vec<usize>> = subs.iter().map(|h| h.members().to_vec()).collect();
        Outcome::check(
            oracle == ours,
            vec![
                Witness::number("oracle", oracle.len()),
                Witness::number("lattice", ours.len()),
            ],
        )
    });
    rec.claim("lattice.conjugation-closed", || {
        for h in subs {
            for &s in g.generators() {
                let c = h.conjugate(g, s);
                if lat.index_of(&c).is_none() {
                    return Outcome::Fail(vec![Witness::subgroup(g, h), Witness::subgroup(g, &c)]);
                }
            }
        }
        Outcome::Pass(vec![])
    });
    rec.claim("lattice.product-formula", || {
        if n > PAIR_SCAN_CAP {
            return Outcome::Skipped(format!("order above {PAIR_SCAN_CAP}"));
        }
        for a in subs {
            for b in subs {
                let ab = product_of_sets(g, a.members(), b.members()).len();
                if ab * a.members().intersection_len(b.members()) != a.order() * b.order() {
                    return Outcome::Fail(vec![Witness::subgroup(g, a), Witness::subgroup(g, b)]);
                }
            }
        }
        Outcome::Pass(vec![Witness::number("pairs", subs.len() * subs.len())])
    });
    rec.claim("lattice.dedekind", || {
        if n > PAIR_SCAN_CAP {
            return Outcome::Skipped(format!("order above {PAIR_SCAN_CAP}"));
        }
        let mut triples = 0usize;
        for t in subs {
            for a in subs {
                if a.order() * t.order() != n * a.members().intersection_len(t.members()) {
                    continue;
                }
                for b in lat.overgroups_of(a) {
                    triples += 1;
                    match dedekind_identity_check(g, a, b, t) {
                        Ok(true) => {}
                        Ok(false) => {
                            return Outcome::Fail(vec![
                                Witness::subgroup(g, a),
                                Witness::subgroup(g, b),
                                Witness::subgroup(g, t),
                            ])
                        }
                        Err(e) => return Outcome::Fail(vec![Witness::note(e.to_string())]),
                    }
                }
            }
        }
        Outcome::Pass(vec![Witness::number("triples", triples)])
    });
    rec.claim("lattice.overgroups-match", || {
        if n > OVERGROUP_SCAN_CAP {
            return Outcome::Skipped(format!("order above {OVERGROUP_SCAN_CAP}"));
        }
        for h in subs {
            let searched = lattice::overgroups(g, h);
            let filtered: Vec<Subgroup> = lat.overgroups_of(h).cloned().collect();
            if searched != filtered {
                return Outcome::Fail(vec![Witness::subgroup(g, h)]);
            }
        }
        Outcome::Pass(vec![])
    });
}

fn structure_claims(rec: &mut Recorder, an: &Analysis) {
    let g = an.g;
    let lat = &an.lattice;
    let whole = Subgroup::whole(g);
    rec.claim("structure.chief-factors-elementary-abelian", || {
        if an.derived_length.is_none() {
            return Outcome::Skipped("group is not solvable".into());
        }
        match chief_series(g) {
            Ok(series) => match series.factors.iter().position(|f| !f.elementary_abelian) {
                None => Outcome::Pass(vec![Witness::number("length", series.factors.len())]),
                Some(i) => Outcome::Fail(vec![
                    Witness::subgroup(g, &series.terms[i]),
                    Witness::subgroup(g, &series.terms[i + 1]),
                ]),
            },
            Err(e) => Outcome::Fail(vec![Witness::note(e.to_string())]),
        }
    });
    rec.claim("structure.quotients", || {
        // projections are homomorphisms and derived length does not grow
        let d = an.derived_length.unwrap_or(usize::MAX);
        for nsub in lat.normal_subgroups() {
            let (q, proj) = match g.quotient(nsub.members()) {
                Ok(r) => r,
                Err(e) => return Outcome::Fail(vec![Witness::subgroup(g, nsub), Witness::note(e.to_string())]),
            };
            let hom = g
                .elements()
                .all(|a| g.elements().all(|b| proj[g.mul(a, b)] == q.mul(proj[a], proj[b])));
            let dq = derived_length(&q, &Subgroup::whole(&q)).unwrap_or(usize::MAX);
            if !hom || dq > d {
                return Outcome::Fail(vec![
                    Witness::subgroup(g, nsub),
                    Witness::number("quotient_derived_length", dq),
                ]);
            }
        }
        Outcome::Pass(vec![Witness::number("normal_subgroups", lat.normal_subgroups().count())])
    });
    let phi = frattini(g, lat);
    rec.claim("structure.frattini-normal", || {
        Outcome::check(lattice::is_normal(g, &phi), vec![Witness::subgroup(g, &phi)])
    });
    rec.claim("structure.frattini-non-generators", || {
        if g.order() > PAIR_SCAN_CAP {
            return Outcome::Skipped(format!("order above {PAIR_SCAN_CAP}"));
        }
        // adding Φ to a proper subgroup never reaches G
        let top = lat.len() - 1;
        match lat.subgroups()[..top]
            .iter()
            .find(|k| k.join(g, &phi).order() == g.order())
        {
            None => Outcome::Pass(vec![Witness::subgroup(g, &phi)]),
            Some(k) => Outcome::Fail(vec![Witness::subgroup(g, k), Witness::subgroup(g, &phi)]),
        }
    });
    rec.claim("structure.sylow", || {
        for p in g.primes() {
            let sylows = match sylow_subgroups(g, lat, p) {
                Ok(s) => s,
                Err(e) => return Outcome::Fail(vec![Witness::note(e.to_string())]),
            };
            let part = p_part(g.order(), p);
            let ok = !sylows.is_empty()
                && sylows.iter().all(|s| s.order() == part)
                && sylows.len() as u64 % p == 1;
            if !ok {
                return Outcome::Fail(vec![
                    Witness::number("p", p),
                    Witness::number("sylow_count", sylows.len()),
                ]);
            }
        }
        Outcome::Pass(vec![])
    });
    rec.claim("structure.p-group-nilpotent", || {
        if g.primes().len() != 1 {
            return Outcome::Skipped("not a p-group".into());
        }
        Outcome::check(is_nilpotent(g, &whole), vec![])
    });
}

fn complement_claims(rec: &mut Recorder, an: &Analysis) {
    let g = an.g;
    let lat = &an.lattice;
    let subs = lat.subgroups();
    let n = g.order();
    let table = &an.table;
    rec.claim("complement.criterion", || {
        if n > PAIR_SCAN_CAP {
            return Outcome::Skipped(format!("order above {PAIR_SCAN_CAP}"));
        }
        let mut pairs = 0usize;
        for h in subs {
            for t in subs {
                if !h.members().meets_only_in_identity(t.members()) {
                    continue;
                }
                pairs += 1;
                let by_product = product_of_sets(g, h.members(), t.members()).len() == n;
                if by_product != (h.order() * t.order() == n) {
                    return Outcome::Fail(vec![Witness::subgroup(g, h), Witness::subgroup(g, t)]);
                }
            }
        }
        Outcome::Pass(vec![Witness::number("pairs", pairs)])
    });
    rec.claim("complement.symmetry", || {
        for (i, h) in subs.iter().enumerate() {
            let Some(j) = table.first_complement(i) else { continue };
            let t = lat.get(j);
            let back = product_of_sets(g, t.members(), h.members()).len() == n;
            if !back || !table.is_complemented(j) {
                return Outcome::Fail(vec![Witness::subgroup(g, h), Witness::subgroup(g, t)]);
            }
        }
        Outcome::Pass(vec![])
    });
    let separating = table.c_separating(lat);
    rec.claim("complement.c-separation-monotone", || {
        let top = lat.len() - 1;
        for &i in &separating {
            let h = lat.get(i);
            for (j, k) in subs[..top].iter().enumerate() {
                if h.is_subgroup_of(k) && separating.binary_search(&j).is_err() {
                    return Outcome::Fail(vec![Witness::subgroup(g, h), Witness::subgroup(g, k)]);
                }
            }
        }
        Outcome::Pass(vec![Witness::number("c_separating", separating.len())])
    });
    let cf = an.is_completely_factorizable();
    rec.claim("complement.completely-factorizable-equivalence", || {
        let by_table = complement::is_completely_factorizable(g, lat).holds;
        let by_search = if n <= SEARCH_ROUTE_CAP {
            complement::is_supercomplemented(g, &Subgroup::trivial(g)).holds
        } else {
            an.is_supercomplemented(&Subgroup::trivial(g))
        };
        Outcome::check(
            cf == by_table && cf == by_search,
            vec![Witness::note(format!("completely factorizable: {cf}"))],
        )
    });
    rec.claim("complement.completely-factorizable-metabelian", || {
        if !cf {
            return Outcome::Skipped("not completely factorizable".into());
        }
        let d = an.derived_length.unwrap_or(usize::MAX);
        Outcome::check(d <= 2, vec![Witness::number("derived_length", d)])
    });
    rec.claim("complement.lemma1-transport", || {
        if n > PAIR_SCAN_CAP {
            return Outcome::Skipped(format!("order above {PAIR_SCAN_CAP}"));
        }
        lemma1_scan(an)
    });
}

/// Runs the homomorphic-image check on every valid `(H, K, N)` with `K`
/// ranging over conjugacy class representatives.
fn lemma1_scan(an: &Analysis) -> Outcome {
    let g = an.g;
    let lat = &an.lattice;
    let mut tuples = 0usize;
    for class in lat.conjugacy_classes() {
        let k = lat.get(class[0]);
        let inside: Vec<&Subgroup> = lat.subgroups_of(k).collect();
        let complemented: Vec<bool> = inside
            .iter()
            .map(|h| {
                inside.iter().any(|t| {
                    h.order() * t.order() == k.order() && h.members().meets_only_in_identity(t.members())
                })
            })
            .collect();
        let supercomplemented: Vec<&Subgroup> = inside
            .iter()
            .filter(|h| {
                inside
                    .iter()
                    .zip(&complemented)
                    .all(|(o, &c)| c || !h.is_subgroup_of(o))
            })
            .copied()
            .collect();
        let normals = inside.iter().filter(|nsub| {
            nsub.generators()
                .iter()
                .all(|&y| k.generators().iter().all(|&x| nsub.contains(g.conj(y, x))))
        });
        for nsub in normals {
            for h in &supercomplemented {
                tuples += 1;
                match lemma1_transport_check(g, h, k, nsub) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Outcome::Fail(vec![
                            Witness::subgroup(g, h),
                            Witness::subgroup(g, k),
                            Witness::subgroup(g, nsub),
                        ])
                    }
                    Err(e) => return Outcome::Fail(vec![Witness::note(e.to_string())]),
                }
            }
        }
    }
    Outcome::Pass(vec![Witness::number("tuples", tuples)])
}

fn theorem_claims(rec: &mut Recorder, an: &Analysis) {
    let g = an.g;
    let xs = an.supercomplemented_cyclic_p_subgroups();
    let instances = vec![Witness::number("instances", xs.len())];

    // consequences of a supercomplemented cyclic p-subgroup, over every such
    // subgroup of the group
    let solvable = an.derived_length.is_some();
    rec.claim("thm1.i.solvable", || {
        Outcome::check(solvable, vec![Witness::number("order", g.order())])
    });
    rec.claim("thm1.ii.derived-length", || {
        for x in &xs {
            let (ok, mut w) = an.derived_length_within_bound(x.order());
            if !ok {
                w.insert(0, Witness::subgroup(g, x));
                return Outcome::Fail(w);
            }
        }
        Outcome::Pass(instances.clone())
    });
    let mut battery_failures: Vec<(&str, Vec<Witness>)> = Vec::new();
    let mut odd_prime_seen = false;
    for x in &xs {
        let primes = an.primes_for(x.order());
        odd_prime_seen |= primes.iter().any(|&p| p != 2);
        for f in an.p_battery(&primes, x.order()) {
            if battery_failures.iter().all(|(c, _)| *c != f.claim) {
                let mut w = vec![Witness::subgroup(g, x)];
                w.extend(f.witnesses);
                battery_failures.push((f.claim, w));
            }
        }
    }
    for claim in BATTERY {
        let outcome = match battery_failures.iter().find(|(c, _)| *c == claim) {
            Some((_, w)) => Outcome::Fail(w.clone()),
            None if claim == METABELIAN_ODD && !odd_prime_seen => {
                Outcome::Skipped("no instance with an odd prime".into())
            }
            None => Outcome::Pass(instances.clone()),
        };
        rec.push(&format!("thm1.{claim}"), outcome, None);
    }

    rec.claim("prop1.minimal-normal-bound", || {
        for x in &xs {
            if let Some(mut w) = an.minimal_normal_bound(x.order()) {
                w.insert(0, Witness::subgroup(g, x));
                return Outcome::Fail(w);
            }
        }
        Outcome::Pass(instances.clone())
    });
    rec.claim("prop1.prime-order-when-completely-factorizable", || {
        if !an.is_completely_factorizable() {
            return Outcome::Skipped("not completely factorizable".into());
        }
        match an.minimal_normal_bound(1) {
            None => Outcome::Pass(vec![Witness::number("minimal_normal_subgroups", an.minimal_normal().len())]),
            Some(w) => Outcome::Fail(w),
        }
    });

    // consequences of each C-separating subgroup
    let separating = an.table.c_separating(&an.lattice);
    if separating.is_empty() {
        rec.push("thm3.hypothesis", Outcome::Skipped("no C-separating subgroup".into()), None);
        return;
    }
    let candidates = an.theorem3_candidates();
    let mut sub = Recorder::new("");
    for &i in &separating {
        theorem3_claims(&mut sub, an, &candidates, an.lattice.get(i));
    }
    // fold the per-subgroup reports into one report per claim
    let reports = sub.finish();
    for id in ["solvable", "iii.cyclic-p-subgroup-outside", "iii.structure"] {
        let same: Vec<&VerificationReport> = reports.iter().filter(|r| r.claim == id).collect();
        let outcome = match same.iter().find(|r| r.is_fail()) {
            Some(r) => Outcome::Fail(r.witnesses.clone()),
            None => Outcome::Pass(vec![Witness::number("c_separating", same.len())]),
        };
        rec.push(&format!("thm3.{id}"), outcome, None);
    }
}

/// Checks on the bound formulas: the quoted values, monotonicity of the
/// `ζ` estimate, stability of every floor under a ±10⁻⁹ perturbation for
/// `m ≤ 10⁶`, and exactness of the big-integer bounds.
pub fn verify_bounds() -> Vec<VerificationReport> {
    const M_MAX: u64 = 1_000_000;
    let mut rec = Recorder::new("bounds");
    rec.claim("quoted-values", || {
        let checks = [
            ("n_of_m(1)", n_of_m(1), 1),
            ("n_of_m(2)", n_of_m(2), 4),
            ("n_of_m(8)", n_of_m(8), 80),
            ("zeta_bound(4)", zeta_bound(4), 8),
            ("zeta_bound(73)", zeta_bound(73), 14),
            ("zeta_bound(80)", zeta_bound(80), 15),
            ("derived_length_bound(1)", derived_length_bound(1).floor, 2),
            ("derived_length_bound(2)", derived_length_bound(2).floor, 11),
            ("derived_length_bound(5)", derived_length_bound(5).floor, 18),
            ("floor derived_length_bound(8)", derived_length_bound(8).floor, 18),
            ("factorial_index_bound(8)", factorial_index_bound(8).try_into().unwrap_or(0u64), 40320),
        ];
        let mut w = Vec::new();
        let mut ok = true;
        for (name, got, want) in checks {
            ok &= got == want;
            w.push(Witness::number(name, got));
        }
        for q in [2u64, 3, 5, 7, 11] {
            let got: u64 = prop1_bound(q, 1).map(|b| b.try_into().unwrap_or(0)).unwrap_or(0);
            ok &= got == q;
        }
        ok &= prop1_bound(3, 2).ok() == Some(36u32.into());
        ok &= prop1_bound(2, 2).ok() == Some(16u32.into());
        Outcome::check(ok, w)
    });
    rec.claim("zeta-nondecreasing", || {
        let mut prev = zeta_bound(1);
        for n in 2..=M_MAX {
            let z = zeta_bound(n);
            if z < prev {
                return Outcome::Fail(vec![Witness::number("n", n)]);
            }
            prev = z;
        }
        Outcome::Pass(vec![Witness::number("checked_up_to", M_MAX)])
    });
    rec.claim("floor-guard-band", || {
        let stable = |x: f64, exact: u64| {
            (x - FLOOR_GUARD).floor() as u64 == exact && (x + FLOOR_GUARD).floor() as u64 == exact
        };
        let ln9 = 9f64.ln();
        for m in 2..=M_MAX {
            let n = n_of_m(m);
            if !m.is_power_of_two() {
                let x = m as f64 * (m as f64).log2();
                if !stable(x, n - m * (m - 1)) {
                    return Outcome::Fail(vec![Witness::number("m", m), Witness::real("m_log2_m", x)]);
                }
            }
            if n > 73 {
                let x = 5.0 * ((n - 2) as f64 / 8.0).ln() / ln9 + 10.0;
                if !stable(x, zeta_bound(n)) {
                    return Outcome::Fail(vec![Witness::number("n", n), Witness::real("zeta_estimate", x)]);
                }
            }
            if m >= 8 {
                let d = derived_length_bound(m);
                if !stable(d.value, d.floor) {
                    return Outcome::Fail(vec![Witness::number("m", m), Witness::real("d_bound", d.value)]);
                }
            }
        }
        Outcome::Pass(vec![Witness::number("checked_up_to", M_MAX)])
    });
    rec.claim("prop1-exact", || {
        let b = prop1_bound(2, 8).expect("2 is prime");
        let digits = b.to_string().len();
        let by_log = (56.0 * 2f64.log10() + 8.0 * 8f64.log10()).floor() as usize + 1;
        Outcome::check(
            digits == by_log && (log10(&b) - 80.0 * 2f64.log10()).abs() < 1e-9,
            vec![Witness::number("digits", digits), Witness::number("digits_by_log", by_log)],
        )
    });
    rec.claim("report-invariants", || {
        for m in 1..=2000u64 {
            let r = BoundReport::new(m, None).expect("m in range");
            let next = zeta_bound(r.n + 1);
            if r.n < 1 || r.d_bound < 2.0 || next < r.zeta {
                return Outcome::Fail(vec![Witness::number("m", m)]);
            }
        }
        Outcome::Pass(vec![])
    });
    rec.finish()
}
