//! Tabulates the numeric bounds attached to the order `m` of a
//! supercomplemented cyclic `p`-subgroup.
//!
//! ```bash
//! cargo run --example bounds_table
//! ```

use complementa::bounds::{decimal_digits, log10, prop1_bound, BoundReport};

fn main() -> complementa::Result<()> {
    println!("{:>8} {:>14} {:>6} {:>10} {:>6}", "m", "n", "zeta", "d_bound", "floor");
    for m in [1u64, 2, 3, 4, 7, 8, 16, 100, 1000, 1_000_000] {
        let r = BoundReport::new(m, None)?;
        println!(
            "{:>8} {:>14} {:>6} {:>10.4} {:>6}",
            r.m, r.n, r.zeta, r.d_bound, r.d_bound_floor
        );
    }
    println!();
    println!("minimal normal subgroup bound q^((m-1)m) m^m:");
    for (q, m) in [(2u64, 2u64), (3, 2), (2, 8), (5, 16)] {
        let b = prop1_bound(q, m)?;
        let shown = if decimal_digits(&b) <= 30 {
            b.to_string()
        } else {
            format!("about 10^{:.1}", log10(&b))
        };
        println!("  q = {q}, m = {m}: {shown}");
    }
    println!();
    println!("{}", serde_json::to_string_pretty(&BoundReport::new(8, Some(3))?).unwrap());
    Ok(())
}
