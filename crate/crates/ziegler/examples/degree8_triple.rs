//! The degree-8 triple: the Cmb223 components plus two of the four bitangent
//! lines. Adding the bitangents exposes differences the degree-7 quadruple
//! hides: B1 (with M1 + M2) resolves differently from B2 and B3, certifying
//! two strong Ziegler pairs; B2 vs B3 stays inconclusive.

use ziegler::curvelab::{resolution_analysis, verdict_from_tables, Options};

fn main() {
    let opts = Options::default();
    let keys = ["deg8-B1", "deg8-B2", "deg8-B3"];
    let mut tables = Vec::new();
    for key in keys {
        let e = ziegler::catalog::entry(key).unwrap();
        let labels: Vec<&str> = e
            .curve
            .components
            .iter()
            .map(|c| c.label.as_str())
            .collect();
        let a = resolution_analysis(&e.curve, &opts);
        println!("{key} = {}:", labels.join(" + "));
        println!("  {}", a.resolution.display_chain());
        println!(
            "  tau = {} (7 nodes + 6 tacnodes + 2 ordinary triple points)",
            a.tjurina
        );
        tables.push(a.betti);
    }
    println!();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let v = verdict_from_tables(&tables[i], &tables[j], true);
        println!("({}, {}) -> {}", keys[i], keys[j], v.verdict);
    }
}
