//! An order-32 group in which every index-2 subgroup is complemented and
//! `⟨x⟩` is supercomplemented, yet no subgroup is C-separating.
//!
//! ```bash
//! cargo run --example order32_no_c_separating
//! ```

use complementa::complement::{c_separating_subgroups, c_separation_obstructions, is_supercomplemented};
use complementa::constructions::theorem4_group;
use complementa::structure::derived_subgroup;
use complementa::verify::{summarize, verify_theorem4};
use complementa::{Subgroup, SubgroupLattice};

fn main() -> complementa::Result<()> {
    let named = theorem4_group()?;
    let g = &named.group;
    let lat = SubgroupLattice::build(g)?;
    println!("order {}, exponent {}, {} subgroups", g.order(), g.exponent(), lat.len());
    let derived = derived_subgroup(g, &Subgroup::whole(g));
    let x2 = named.subgroup("x^2")?;
    println!("derived subgroup has order {} and equals ⟨x^2⟩: {}", derived.order(), derived == x2);

    println!("index-2 subgroups and a complement for each:");
    for h in lat.of_order(16) {
        let t = lat
            .subgroups()
            .iter()
            .find(|t| t.order() == 2 && h.intersection(g, t).is_trivial())
            .expect("every index-2 subgroup is complemented");
        println!("  {:<24} by {}", h.describe(g), t.describe(g));
    }

    let x = named.handle("x").unwrap();
    println!("⟨x⟩ supercomplemented: {}", is_supercomplemented(g, x).holds);
    println!("C-separating subgroups: {}", c_separating_subgroups(g, &lat).len());
    for (maximal, blocker) in c_separation_obstructions(g, &lat).iter().take(3) {
        println!(
            "  {} fails: {} lies outside it and has no complement",
            maximal.describe(g),
            blocker.describe(g)
        );
    }

    let reports = verify_theorem4();
    let (pass, fail, skipped) = summarize(&reports);
    println!("verification: {pass} passed, {fail} failed, {skipped} skipped");
    Ok(())
}
