//! Claim suites for the two explicit constructions and for single
//! instances of the structural statements.

use super::analysis::{Analysis, BATTERY};
use super::{Outcome, Recorder, VerificationReport, Witness};
use crate::complement;
use crate::constructions::{example_group, theorem4_group, NamedGroup};
use crate::group::FiniteGroup;
use crate::lattice::{
    self, generated_subgroup, is_elementary_abelian, is_normal, product_set, Subgroup,
    DEFAULT_LATTICE_CAP,
};
use crate::structure::{derived_length, derived_subgroup};

/// The seven index-2 subgroups of the holomorph of `C_8`, each with the
/// complement exhibited for it, as generator words.
pub(crate) const THEOREM4_LISTED: [(&[&str], &str); 7] = [
    (&["x", "a"], "b"),
    (&["x", "b"], "a"),
    (&["x^2", "a", "b"], "x*a"),
    (&["x^2", "b", "x*a"], "x^2*a"),
    (&["x", "a*b"], "a"),
    (&["x*b", "a"], "b"),
    (&["x^2", "a*b", "x*a"], "b"),
];

fn words(t: &NamedGroup, ws: &[&str]) -> Subgroup {
    let elems: Vec<usize> = ws
        .iter()
        .map(|w| t.group.element_by_word(w).expect("word in the generators"))
        .collect();
    generated_subgroup(&t.group, &elems)
}

fn subgroups_witness(g: &FiniteGroup, hs: &[&Subgroup]) -> Vec<Witness> {
    hs.iter().map(|h| Witness::subgroup(g, h)).collect()
}

/// Every finite claim in the argument that the holomorph of `C_8` has a
/// supercomplemented cyclic subgroup but no C-separating subgroup.
pub fn verify_theorem4() -> Vec<VerificationReport> {
    let mut rec = Recorder::new("thm4");
    let t = match theorem4_group() {
        Ok(t) => t,
        Err(e) => {
            rec.push("build", Outcome::Fail(vec![Witness::note(e.to_string())]), None);
            return rec.finish();
        }
    };
    let g = &t.group;
    let an = Analysis::new(g, DEFAULT_LATTICE_CAP).expect("order 32 is within the lattice cap");
    let lat = &an.lattice;
    let index2: Vec<&Subgroup> = lat.of_order(g.order() / 2).collect();
    let x = t.handle("x").expect("handle x");
    let x2 = generated_subgroup(g, &[g.pow(x.generators()[0], 2)]);
    let derived = derived_subgroup(g, &Subgroup::whole(g));

    rec.claim("0.order-32", || {
        Outcome::check(g.order() == 32, vec![Witness::number("order", g.order())])
    });
    rec.claim("1.seven-index-2", || {
        let mut w = vec![Witness::number("count", index2.len())];
        w.extend(subgroups_witness(g, &index2));
        Outcome::check(index2.len() == 7, w)
    });
    rec.claim("2.derived-subgroup-is-x2", || {
        Outcome::check(
            derived == x2 && derived.order() == 4,
            vec![Witness::subgroup(g, &derived), Witness::subgroup(g, &x2)],
        )
    });
    rec.claim("2.index-2-contain-derived", || {
        match index2.iter().find(|h| !derived.is_subgroup_of(h)) {
            None => Outcome::Pass(vec![Witness::subgroup(g, &derived)]),
            Some(h) => Outcome::Fail(vec![Witness::subgroup(g, h), Witness::subgroup(g, &derived)]),
        }
    });
    rec.claim("3.quotient-elementary-abelian-8", || {
        let (q, _) = g.quotient(derived.members()).expect("derived subgroup is normal");
        let whole = Subgroup::whole(&q);
        Outcome::check(
            q.order() == 8 && is_elementary_abelian(&q, &whole),
            vec![Witness::number("order", q.order()), Witness::number("exponent", q.exponent())],
        )
    });

    let listed: Vec<(Subgroup, Subgroup)> = THEOREM4_LISTED
        .iter()
        .map(|(h, c)| (words(&t, h), words(&t, &[c])))
        .collect();
    rec.claim("4.listed-distinct-index-2", || {
        let distinct = listed
            .iter()
            .enumerate()
            .all(|(i, (h, _))| listed[..i].iter().all(|(k, _)| k != h));
        let bad = listed.iter().find(|(h, _)| h.order() * 2 != g.order());
        let mut w: Vec<Witness> = listed.iter().map(|(h, _)| Witness::subgroup(g, h)).collect();
        if let Some((h, _)) = bad {
            w.insert(0, Witness::subgroup(g, h));
        }
        Outcome::check(distinct && bad.is_none(), w)
    });
    for (i, (h, c)) in listed.iter().enumerate() {
        rec.claim(&format!("4.listed-complement-{}", i + 1), || {
            let (prod, _) = product_set(g, h, c);
            Outcome::check(
                prod.len() == g.order() && h.intersection(g, c).is_trivial(),
                vec![Witness::subgroup(g, h), Witness::subgroup(g, c)],
            )
        });
    }

    rec.claim("5.x-supercomplemented", || {
        let d = complement::is_supercomplemented(g, x);
        let agree = d.holds == an.is_supercomplemented(x);
        match d.witness {
            None => Outcome::check(agree, vec![Witness::subgroup(g, x)]),
            Some(k) => Outcome::Fail(vec![Witness::subgroup(g, x), Witness::subgroup(g, &k)]),
        }
    });
    rec.claim("5.x-overgroups-complemented-within-ab", || {
        let ab = t.handle("AB").expect("handle AB");
        let subs_of_ab: Vec<&Subgroup> = lat.subgroups_of(ab).collect();
        let overs: Vec<&Subgroup> = lat.overgroups_of(x).collect();
        for k in &overs {
            let meet = k.intersection(g, ab);
            // every complement of K ∩ AB inside AB must complement K in G
            let ds: Vec<&&Subgroup> = subs_of_ab
                .iter()
                .filter(|d| {
                    d.order() * meet.order() == ab.order() && d.intersection(g, &meet).is_trivial()
                })
                .collect();
            let all_work = ds
                .iter()
                .all(|d| product_set(g, k, d).0.len() == g.order() && k.intersection(g, d).is_trivial());
            if ds.is_empty() || !all_work {
                return Outcome::Fail(vec![Witness::subgroup(g, k)]);
            }
        }
        Outcome::check(overs.len() == 5, vec![Witness::number("overgroups", overs.len())])
    });

    let table = &an.table;
    rec.claim("6.no-c-separating", || {
        let found = table.c_separating(lat);
        if found.is_empty() {
            let obstructions = complement::c_separation_obstructions(g, lat);
            let mut w = vec![Witness::number("maximal_subgroups_obstructed", obstructions.len())];
            w.extend(obstructions.iter().flat_map(|(m, u)| {
                [Witness::subgroup(g, m), Witness::subgroup(g, u)]
            }));
            Outcome::Pass(w)
        } else {
            Outcome::Fail(found.iter().map(|&i| Witness::subgroup(g, lat.get(i))).collect())
        }
    });
    rec.claim("6.no-c-separating-index-2", || {
        let found = complement::c_separating_of_index(g, lat, 2);
        Outcome::check(found.is_empty(), found.iter().map(|h| Witness::subgroup(g, h)).collect())
    });
    rec.claim("7.exponent-8", || {
        Outcome::check(g.exponent() == 8, vec![Witness::number("exponent", g.exponent())])
    });
    rec.finish()
}

/// Claims about `G = A ⋊ F` of order `p⁵` and its subgroups `⟨x⟩` and
/// `B = ⟨a, b, c⟩`.
pub fn verify_example(p: u64) -> Vec<VerificationReport> {
    let mut rec = Recorder::new(format!("example-p{p}"));
    let e = match example_group(p) {
        Ok(e) => e,
        Err(err) => {
            rec.push("build", Outcome::Fail(vec![Witness::note(err.to_string())]), None);
            return rec.finish();
        }
    };
    let g = &e.group;
    let x = e.handle("x").expect("handle x");
    let b = e.handle("B").expect("handle B");
    let p5 = (p as usize).pow(5);

    rec.claim("0.order-p5-relations", || {
        Outcome::check(
            g.order() == p5,
            vec![
                Witness::number("order", g.order()),
                Witness::note("relations audited at construction"),
            ],
        )
    });
    rec.claim("1.factorisation-x-b", || {
        let (prod, _) = product_set(g, x, b);
        Outcome::check(prod.len() == g.order(), vec![Witness::number("product_size", prod.len())])
    });
    rec.claim("2.trivial-intersection", || {
        let meet = x.intersection(g, b);
        Outcome::check(meet.is_trivial(), vec![Witness::subgroup(g, &meet)])
    });
    rec.claim("3.b-elementary-abelian-order-p3", || {
        Outcome::check(
            is_elementary_abelian(g, b) && b.order() == (p as usize).pow(3),
            vec![Witness::subgroup(g, b)],
        )
    });
    rec.claim("4.x-not-normal", || {
        Outcome::check(!is_normal(g, x), vec![Witness::subgroup(g, x)])
    });
    rec.claim("4.b-not-normal", || {
        Outcome::check(!is_normal(g, b), vec![Witness::subgroup(g, b)])
    });
    rec.claim("5.x-supercomplemented", || {
        let overs = lattice::overgroups(g, x);
        match overs.iter().find(|k| !complement::is_complemented(g, k)) {
            None => Outcome::Pass(vec![Witness::number("overgroups", overs.len())]),
            Some(k) => Outcome::Fail(vec![Witness::subgroup(g, k)]),
        }
    });
    rec.claim("6.metabelian", || {
        if p == 2 {
            return Outcome::Skipped("stated for odd p only".into());
        }
        let d = derived_length(g, &Subgroup::whole(g));
        Outcome::check(
            d.is_some_and(|d| d <= 2),
            vec![Witness::number("derived_length", d.unwrap_or(usize::MAX))],
        )
    });
    rec.finish()
}

fn analysis_or_skip<'a>(rec: &mut Recorder, g: &'a FiniteGroup) -> Option<Analysis<'a>> {
    match Analysis::new(g, DEFAULT_LATTICE_CAP) {
        Ok(an) => Some(an),
        Err(e) => {
            rec.push("hypothesis", Outcome::Skipped(format!("not evaluated: {e}")), None);
            None
        }
    }
}

/// Hypothesis check shared by the cyclic-subgroup suites: `⟨x⟩` is a
/// supercomplemented `p`-subgroup. Returns its order on success.
fn cyclic_hypothesis(rec: &mut Recorder, an: &Analysis, x: usize) -> Option<usize> {
    let g = an.g;
    let h = generated_subgroup(g, &[x]);
    let m = h.order();
    if m > 1 && crate::group::prime_factors(m as u64).len() != 1 {
        rec.push(
            "hypothesis",
            Outcome::Skipped(format!("hypothesis fails: ⟨{}⟩ has order {m}, not a prime power", g.label(x))),
            None,
        );
        return None;
    }
    if !an.is_supercomplemented(&h) {
        rec.push(
            "hypothesis",
            Outcome::Skipped(format!("hypothesis fails: ⟨{}⟩ is not supercomplemented", g.label(x))),
            None,
        );
        return None;
    }
    rec.push(
        "hypothesis",
        Outcome::Pass(vec![
            Witness::subgroup(g, &h),
            Witness::number("m", m),
            Witness::note("finite groups are locally graded RN-groups, so those conditions hold without testing"),
        ]),
        None,
    );
    Some(m)
}

/// Consequences of a supercomplemented cyclic `p`-subgroup `⟨x⟩` of order
/// `m`: solvability, the derived-length bound for `m`, and the structure of
/// the `p`-subgroups.
pub fn verify_theorem1_instance(g: &FiniteGroup, x: usize) -> Vec<VerificationReport> {
    let mut rec = Recorder::new("thm1");
    let Some(an) = analysis_or_skip(&mut rec, g) else { return rec.finish() };
    let Some(m) = cyclic_hypothesis(&mut rec, &an, x) else { return rec.finish() };
    theorem1_claims(&mut rec, &an, m);
    rec.finish()
}

pub(crate) fn theorem1_claims(rec: &mut Recorder, an: &Analysis, m: usize) {
    rec.claim("i.solvable", || {
        Outcome::check(an.derived_length.is_some(), vec![Witness::number("order", an.g.order())])
    });
    rec.claim("ii.derived-length", || {
        let (ok, w) = an.derived_length_within_bound(m);
        Outcome::check(ok, w)
    });
    rec.push(
        "iii.residually-finite",
        Outcome::Skipped("by design: every finite group is residually finite".into()),
        None,
    );
    let primes = an.primes_for(m);
    let failures = an.p_battery(&primes, m);
    for claim in BATTERY {
        let failure = failures.iter().find(|f| f.claim == claim);
        let odd_only = claim == super::analysis::METABELIAN_ODD;
        let outcome = match failure {
            Some(f) => Outcome::Fail(f.witnesses.clone()),
            None if odd_only && primes.iter().all(|&p| p == 2) => {
                Outcome::Skipped("stated for odd p only".into())
            }
            None => Outcome::Pass(vec![Witness::number("m", m)]),
        };
        rec.push(claim, outcome, None);
    }
}

/// Bounds on elementary abelian minimal normal subgroups given a
/// supercomplemented cyclic `p`-subgroup `⟨x⟩` of order `m`.
pub fn verify_prop1_instance(g: &FiniteGroup, x: usize) -> Vec<VerificationReport> {
    let mut rec = Recorder::new("prop1");
    let Some(an) = analysis_or_skip(&mut rec, g) else { return rec.finish() };
    let Some(m) = cyclic_hypothesis(&mut rec, &an, x) else { return rec.finish() };
    rec.claim("minimal-normal-bound", || match an.minimal_normal_bound(m) {
        None => Outcome::Pass(vec![Witness::number("minimal_normal_subgroups", an.minimal_normal().len())]),
        Some(w) => Outcome::Fail(w),
    });
    rec.finish()
}

/// Consequences of `h` being C-separating: `G` is solvable and some
/// supercomplemented cyclic `p`-subgroup outside `h` exists, with every
/// `q`-subgroup (`q ≠ p`) elementary abelian and the `p`-subgroups
/// structured as for a supercomplemented cyclic subgroup.
pub fn verify_theorem3_instance(g: &FiniteGroup, h: &Subgroup) -> Vec<VerificationReport> {
    let mut rec = Recorder::new("thm3");
    let Some(an) = analysis_or_skip(&mut rec, g) else { return rec.finish() };
    let separating = an.table.c_separating(&an.lattice);
    let is_sep = an.lattice.index_of(h).is_some_and(|i| separating.contains(&i));
    if !is_sep {
        rec.push(
            "hypothesis",
            Outcome::Skipped("hypothesis fails: subgroup is not C-separating".into()),
            None,
        );
        return rec.finish();
    }
    rec.push("hypothesis", Outcome::Pass(vec![Witness::subgroup(g, h)]), None);
    let candidates = an.theorem3_candidates();
    theorem3_claims(&mut rec, &an, &candidates, h);
    rec.finish()
}

pub(crate) fn theorem3_claims(
    rec: &mut Recorder,
    an: &Analysis,
    candidates: &[(&Subgroup, u64, bool)],
    h: &Subgroup,
) {
    let g = an.g;
    rec.claim("solvable", || {
        Outcome::check(an.derived_length.is_some(), vec![Witness::number("order", g.order())])
    });
    rec.claim("iii.cyclic-p-subgroup-outside", || {
        match candidates.iter().find(|(c, _, _)| !c.is_subgroup_of(h)) {
            Some((c, p, _)) => Outcome::Pass(vec![Witness::subgroup(g, c), Witness::number("p", *p)]),
            None => Outcome::Fail(vec![Witness::subgroup(g, h)]),
        }
    });
    rec.claim("iii.structure", || {
        match candidates.iter().find(|(c, _, ok)| *ok && !c.is_subgroup_of(h)) {
            Some((c, p, _)) => Outcome::Pass(vec![Witness::subgroup(g, c), Witness::number("p", *p)]),
            None => Outcome::Fail(vec![Witness::subgroup(g, h)]),
        }
    });
}
