//! The five degree-7 conic-line combinatorics classes. Four of the five
//! Zariski pairs are certified strong Ziegler pairs by distinct Betti tables;
//! the Cmb223 quadruple resolves identically across all four members, so the
//! Betti comparison is inconclusive there.

use std::collections::BTreeMap;
use ziegler::catalog::catalog_entries;
use ziegler::curvelab::{resolution_analysis, verdict_from_tables, Options};
use ziegler::resolution::BettiTable;

fn main() {
    let opts = Options::default();
    let mut by_group: BTreeMap<&str, Vec<(&'static str, BettiTable)>> = BTreeMap::new();
    for e in catalog_entries() {
        if !e.key.starts_with("deg7") {
            continue;
        }
        let a = resolution_analysis(&e.curve, &opts);
        println!(
            "{:<10} ({}): {}",
            e.key,
            e.combinatorics_label,
            a.resolution.display_chain()
        );
        by_group.entry(e.group).or_default().push((e.key, a.betti));
    }
    println!();
    for (group, members) in by_group {
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let v = verdict_from_tables(&members[i].1, &members[j].1, true);
                println!(
                    "{group}: ({}, {}) -> {}",
                    members[i].0, members[j].0, v.verdict
                );
            }
        }
    }
}
