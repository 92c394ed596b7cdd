//! Full spectrum of the derangement graph for one n, with the trace checks.
//!
//! `cargo run --example spectrum_table -- 9`

use derangement_spectrum::partition::factorial;
use derangement_spectrum::spectrum::{derangement_number, spectrum_table, trace_moments};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for e in spectrum_table(n, None) {
        println!("{:<14} {:>12} x {}", e.partition.to_string(), e.eta, e.multiplicity);
    }
    let (m0, m1, m2) = trace_moments(n);
    println!();
    println!("sum of multiplicities  {m0}  (n! = {})", factorial(n));
    println!("trace A                {m1}");
    println!(
        "trace A^2              {m2}  (n! D_n = {})",
        factorial(n) * derangement_number(n)
    );
}
