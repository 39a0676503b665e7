//! Resolve a bundled curve by key and print everything the pipeline knows:
//! the minimal graded free resolution, the Betti table, the Hilbert-series
//! numerator, and the degrees of a minimal generating set of the Jacobian
//! syzygy module AR(B).
//!
//! Usage: `cargo run --release --example resolve_catalog_curve [KEY]`
//! (default key: `deg7-B5,1`; list keys with `ziegler catalog list`).

use ziegler::curvelab::{ar_generator_degrees, resolution_analysis, Options};
use ziegler::resolution::{betti_numerator, regularity};

fn main() {
    let key = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "deg7-B5,1".to_string());
    let entry = match ziegler::catalog::entry(&key) {
        Some(e) => e,
        None => {
            eprintln!("unknown key '{key}'; available:");
            for k in ziegler::catalog::catalog_keys() {
                eprintln!("  {k}");
            }
            std::process::exit(4);
        }
    };
    println!(
        "curve {key} (degree {}, over {})",
        entry.curve.degree(),
        entry.curve.field
    );
    for c in &entry.curve.components {
        println!("  {:<3} {:<18} {}", c.label, c.kind.to_string(), c.poly);
    }

    let a = resolution_analysis(&entry.curve, &Options::default());
    println!("\nminimal free resolution of the Milnor algebra:");
    println!("  {}", a.resolution.display_chain());
    println!("\ngraded Betti table:\n{}", a.betti);
    let numerator = betti_numerator(&a.betti);
    let stats = numerator.stats();
    println!("\nHilbert-series numerator N(t) = {numerator}");
    println!(
        "  N(1) = {}, N'(1) = {}, N''(1)/2 = {}",
        stats.at_one, stats.derivative_at_one, stats.half_second_derivative_at_one
    );
    println!("regularity = {}", regularity(&a.betti));
    println!("tau (stabilized Hilbert value) = {}", a.tjurina);
    println!(
        "AR(B) generator degrees = {:?}",
        ar_generator_degrees(&a.betti, entry.curve.degree())
    );
}
