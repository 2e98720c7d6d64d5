//! Derived, lower central and chief series, Frattini and Sylow subgroups.
//!
//! ```bash
//! cargo run --example structure_series
//! ```

use complementa::constructions::{alternating4, holomorph_cyclic, quaternion8};
use complementa::structure::{
    chief_series, derived_series, frattini, is_nilpotent, lower_central_series,
    minimal_normal_subgroups, sylow_subgroups,
};
use complementa::{FiniteGroup, Subgroup, SubgroupLattice};

fn report(name: &str, g: &FiniteGroup) -> complementa::Result<()> {
    let whole = Subgroup::whole(g);
    let lat = SubgroupLattice::build(g)?;
    println!("{name} (order {})", g.order());
    let derived = derived_series(g, &whole);
    let orders: Vec<usize> = derived.terms.iter().map(Subgroup::order).collect();
    println!("  derived series orders {orders:?}, length {:?}", derived.length);
    let lower: Vec<usize> = lower_central_series(g, &whole).terms.iter().map(Subgroup::order).collect();
    println!("  lower central series orders {lower:?}, nilpotent {}", is_nilpotent(g, &whole));
    let chief = chief_series(g)?;
    let factors: Vec<String> = chief
        .factors
        .iter()
        .map(|f| match f.prime {
            Some(p) if f.elementary_abelian => format!("{p}^{}", f.order.ilog(p as usize)),
            _ => format!("{} (non-abelian)", f.order),
        })
        .collect();
    println!("  chief factors {}", factors.join(", "));
    println!("  Frattini subgroup order {}", frattini(g, &lat).order());
    let minimal: Vec<usize> = minimal_normal_subgroups(g).iter().map(Subgroup::order).collect();
    println!("  minimal normal subgroup orders {minimal:?}");
    for p in g.primes() {
        let sylow = sylow_subgroups(g, &lat, p)?;
        println!("  {} Sylow {p}-subgroups of order {}", sylow.len(), sylow[0].order());
    }
    Ok(())
}

fn main() -> complementa::Result<()> {
    report("A4", &alternating4()?)?;
    report("Q8", &quaternion8()?)?;
    report("Hol(C9)", &holomorph_cyclic(9)?)?;
    Ok(())
}
