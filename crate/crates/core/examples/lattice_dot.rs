//! Enumerates the subgroup lattice of the dihedral group of order 8 and
//! writes its Hasse diagram as Graphviz source.
//!
//! ```bash
//! cargo run --example lattice_dot > d8.dot && dot -Tsvg d8.dot -o d8.svg
//! ```

use complementa::constructions::dihedral;
use complementa::SubgroupLattice;

fn main() -> complementa::Result<()> {
    let g = dihedral(4)?;
    let lat = SubgroupLattice::build(&g)?;
    eprintln!(
        "{} subgroups in {} conjugacy classes",
        lat.len(),
        lat.conjugacy_classes().len()
    );
    for (i, h) in lat.subgroups().iter().enumerate() {
        let tag = if lat.is_normal(i) { "normal" } else { "" };
        eprintln!("  {i:>2}  |H| = {}  {}  {tag}", h.order(), h.describe(&g));
    }
    eprintln!("maximal subgroups: {}", lat.maximal_subgroups().count());
    print!("{}", lat.to_dot(&g));
    Ok(())
}
