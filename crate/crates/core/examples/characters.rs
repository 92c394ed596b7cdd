//! Character table of S_n by Murnaghan-Nakayama, and the eigenvalues it
//! yields through the derangement classes.

use derangement_spectrum::partition;
use derangement_spectrum::spectrum::{character, derangement_classes, eta_character};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let shapes = partition::enumerate(n, None);
    print!("{:<10}", "");
    for rho in &shapes {
        print!("{:>8}", rho.to_string());
    }
    println!("{:>10}", "eta");
    for lam in &shapes {
        print!("{:<10}", lam.to_string());
        for rho in &shapes {
            print!("{:>8}", character(lam, rho));
        }
        println!("{:>10}", eta_character(lam).unwrap());
    }
    let classes = derangement_classes(n);
    let names: Vec<String> = classes
        .iter()
        .map(|c| format!("{} ({})", c.shape, c.class_size))
        .collect();
    println!("\nderangement classes: {}", names.join(", "));
}
