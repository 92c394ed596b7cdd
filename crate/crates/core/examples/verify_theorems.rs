//! Runs every verification suite at its default depth.

use derangement_spectrum::spectrum::DEFAULT_ORACLE_CAP;
use derangement_spectrum::verify::Suite;

fn main() {
    let mut failed = false;
    for suite in Suite::ALL {
        let report = suite
            .run(None, DEFAULT_ORACLE_CAP.min(10))
            .expect("default depth is valid");
        println!("{report}");
        for note in &report.notes {
            println!("  note: {note}");
        }
        for f in report.failures.iter().take(3) {
            println!("  {}: expected {}, got {}", f.input, f.expected, f.actual);
        }
        failed |= !report.passed();
    }
    std::process::exit(i32::from(failed));
}
