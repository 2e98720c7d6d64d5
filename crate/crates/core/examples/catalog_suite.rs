//! Runs every property suite over the built-in catalog and prints one line
//! per failing or skipped claim, then a summary.
//!
//! ```bash
//! cargo run --release --example catalog_suite
//! ```

use std::time::Instant;

use complementa::verify::{run_catalog_suite, summarize, Status};

fn main() {
    let start = Instant::now();
    let reports = run_catalog_suite();
    for r in reports.iter().filter(|r| r.status != Status::Pass) {
        println!("{:?}  {}", r.status, r.claim);
        if r.status == Status::Fail {
            println!("    {}", serde_json::to_string(&r.witnesses).unwrap());
        }
    }
    let (pass, fail, skipped) = summarize(&reports);
    println!(
        "{} claims: {pass} passed, {fail} failed, {skipped} skipped in {:.1?}",
        reports.len(),
        start.elapsed()
    );
    let mut slow: Vec<_> = reports.iter().filter_map(|r| Some((r.elapsed_ms?, &r.claim))).collect();
    slow.sort_by(|a, b| b.0.total_cmp(&a.0));
    println!("slowest claims:");
    for (ms, claim) in slow.iter().take(8) {
        println!("  {ms:>10.1} ms  {claim}");
    }
    if fail > 0 {
        std::process::exit(1);
    }
}
