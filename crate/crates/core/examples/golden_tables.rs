//! Compares the embedded reference tables with freshly computed values.

use derangement_spectrum::spectrum::eta_new;
use derangement_spectrum::verify::ReferenceTable;

fn main() {
    let table = ReferenceTable::embedded();
    let mut mismatches = 0;
    for n in 2..=15 {
        let Some(coverage) = table.coverage(n) else {
            println!("n = {n:>2}: no table");
            continue;
        };
        let rows: Vec<_> = table.for_n(n).collect();
        let bad: Vec<_> = rows.iter().filter(|e| eta_new(&e.partition) != e.eta).collect();
        println!(
            "n = {n:>2}: {:>3} rows ({coverage}), {} mismatches",
            rows.len(),
            bad.len()
        );
        for e in bad {
            println!(
                "         {}: listed {}, computed {}",
                e.partition,
                e.eta,
                eta_new(&e.partition)
            );
            mismatches += 1;
        }
    }
    std::process::exit(i32::from(mismatches > 0));
}
