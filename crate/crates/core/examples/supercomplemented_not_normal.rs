//! The order-`p⁵` groups `G = ⟨x⟩B` in which `⟨x⟩` is supercomplemented
//! while neither factor is normal.
//!
//! ```bash
//! cargo run --release --example supercomplemented_not_normal
//! ```

use complementa::complement::{complements_by_search, is_supercomplemented, Mode};
use complementa::constructions::example_group;
use complementa::lattice::{is_elementary_abelian, is_normal, overgroups};
use complementa::structure::derived_length;
use complementa::verify::{summarize, verify_example};
use complementa::Subgroup;

fn main() -> complementa::Result<()> {
    for p in [2u64, 3] {
        let named = example_group(p)?;
        let g = &named.group;
        let x = named.handle("x").unwrap();
        let b = named.handle("B").unwrap();
        println!("p = {p}: order {}", g.order());
        println!("  |⟨x⟩| = {}, |B| = {}, B elementary abelian: {}", x.order(), b.order(), is_elementary_abelian(g, b));
        println!("  ⟨x⟩ ∩ B trivial: {}", x.intersection(g, b).is_trivial());
        println!("  ⟨x⟩ normal: {}, B normal: {}", is_normal(g, x), is_normal(g, b));
        for k in overgroups(g, x) {
            let t = complements_by_search(g, &k, Mode::First);
            let shown = t.complements.first().map_or("none".into(), |t| t.describe(g));
            println!("    overgroup of order {:>3} complemented by {shown}", k.order());
        }
        println!("  ⟨x⟩ supercomplemented: {}", is_supercomplemented(g, x).holds);
        println!("  derived length {:?}", derived_length(g, &Subgroup::whole(g)));
        let (pass, fail, skipped) = summarize(&verify_example(p));
        println!("  verification: {pass} passed, {fail} failed, {skipped} skipped");
    }
    Ok(())
}
