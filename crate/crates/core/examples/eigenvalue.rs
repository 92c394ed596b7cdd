//! One eigenvalue by all four routes.
//!
//! `cargo run --example eigenvalue -- "5,3,1^2"`

use derangement_spectrum::spectrum::{eta_character, eta_new, eta_renteln, eta_schur_sum};
use derangement_spectrum::Partition;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "4,2,1^2".into());
    let lam: Partition = match text.parse() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("lambda    {lam}  (n = {})", lam.size());
    println!("new       {}", eta_new(&lam));
    println!("renteln   {}", eta_renteln(&lam));
    println!("schur     {}", eta_schur_sum(&lam));
    match eta_character(&lam) {
        Ok(v) => println!("character {v}"),
        Err(e) => println!("character skipped: {e}"),
    }
    println!("dim       {}", lam.dim());
}
