//! Walks a dominance chain one box at a time and shows |eta| growing.
//!
//! `cargo run --example dominance_chain -- "5,1^5" "5,5"`

use derangement_spectrum::partition::{dominance_chain, one_move, Partition};
use derangement_spectrum::spectrum::abs_eta;

fn main() {
    let mut args = std::env::args().skip(1);
    let from: Partition = args
        .next()
        .unwrap_or_else(|| "5,1^5".into())
        .parse()
        .expect("partition");
    let to: Partition = args.next().unwrap_or_else(|| "5,5".into()).parse().expect("partition");
    let chain = match dominance_chain(&from, &to) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(4);
        }
    };
    let mut prev: Option<&Partition> = None;
    for p in &chain {
        let step = match prev {
            Some(q) => {
                let (m1, m2) = one_move(q, p).unwrap().expect("chain steps are single moves");
                format!("box {m2} -> {m1}")
            }
            None => "start".into(),
        };
        println!("{:<14} {:<12} |eta| = {}", p.to_string(), step, abs_eta(p));
        prev = Some(p);
    }
}
