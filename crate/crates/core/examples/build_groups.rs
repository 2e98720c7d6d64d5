//! Building groups: permutation closure, direct and semidirect products, and
//! the cayley-v1 round trip.
//!
//! ```bash
//! cargo run --example build_groups
//! ```

use complementa::constructions::Fingerprint;
use complementa::{ActionSpec, FiniteGroup};

fn main() -> complementa::Result<()> {
    // S4 from a 4-cycle and a transposition
    let s4 = FiniteGroup::from_generators(&[vec![1, 2, 3, 0], vec![1, 0, 2, 3]])?;
    println!("S4: {}", Fingerprint::of(&s4));

    let c4 = FiniteGroup::cyclic(4)?;
    let c2 = FiniteGroup::cyclic_named(2, "y")?;
    let c4xc2 = c4.direct_product(&c2)?;
    println!("C4 x C2: {}  generators {:?}", Fingerprint::of(&c4xc2), c4xc2.generator_names());

    // C7 ⋊ C3 with y acting as x ↦ x^2
    let c7 = FiniteGroup::cyclic(7)?;
    let c3 = FiniteGroup::cyclic_named(3, "y")?;
    let square = c7.element_by_word("x^2")?;
    let action = ActionSpec::from_generator_images(&c3, &c7, &[vec![square]])?;
    let f21 = action.semidirect_product()?;
    println!("C7 x| C3: {}", Fingerprint::of(&f21));

    let x = f21.element_by_word("x")?;
    let y = f21.element_by_word("y")?;
    println!(
        "  y^-1 x y = {}  (x^2 = {})",
        f21.label(f21.conj(x, y)),
        f21.label(f21.pow(x, 2))
    );

    let json = f21.to_json();
    let back = FiniteGroup::from_json(&json)?;
    assert_eq!(back.table(), f21.table());
    println!("cayley-v1 round trip: {} bytes, tables identical", json.len());
    Ok(())
}
