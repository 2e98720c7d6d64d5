//! Complements, supercomplemented and C-separating subgroups, and complete
//! factorizability on a few small groups.
//!
//! ```bash
//! cargo run --example complements
//! ```

use complementa::complement::{
    c_separating_subgroups, complements_in, is_completely_factorizable, ComplementTable, Mode,
};
use complementa::constructions::{alternating4, dihedral, symmetric3};
use complementa::{FiniteGroup, SubgroupLattice};

fn survey(name: &str, g: &FiniteGroup) -> complementa::Result<()> {
    let lat = SubgroupLattice::build(g)?;
    let table = ComplementTable::build(g, &lat);
    println!("{name}: {} subgroups", lat.len());
    for (i, h) in lat.subgroups().iter().enumerate() {
        let all = complements_in(g, &lat, h, Mode::All);
        let first = table
            .first_complement(i)
            .map_or("none".to_string(), |t| lat.get(t).describe(g));
        println!(
            "  {:<16} complements: {}  first {first}  supercomplemented {}",
            h.describe(g),
            all.complements.len(),
            table.is_supercomplemented(&lat, h).holds
        );
    }
    let cf = is_completely_factorizable(g, &lat);
    match cf.witness {
        None => println!("  completely factorizable"),
        Some(w) => println!("  not completely factorizable: {} has no complement", w.describe(g)),
    }
    let sep: Vec<String> = c_separating_subgroups(g, &lat).iter().map(|h| h.describe(g)).collect();
    println!("  C-separating: [{}]", sep.join(", "));
    Ok(())
}

fn main() -> complementa::Result<()> {
    survey("C4", &FiniteGroup::cyclic(4)?)?;
    survey("S3", &symmetric3()?)?;
    survey("D8", &dihedral(4)?)?;
    survey("A4", &alternating4()?)?;
    Ok(())
}
