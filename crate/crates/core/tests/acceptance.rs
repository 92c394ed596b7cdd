//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion is red.
//!
//! `cargo test -p derangement-spectrum --test acceptance`

use std::process::ExitCode;
use std::time::{Duration, Instant};

use derangement_spectrum::partition::{self, dominates, factorial, lex_max_with_first, Partition};
use derangement_spectrum::spectrum::{
    abs_eta, abs_eta_expanded, asp_sign, derangement_number, eta_character, eta_character_capped, eta_new, eta_renteln,
    eta_schur_sum, trace_moments,
};
use derangement_spectrum::verify::{verify_bounds, verify_shifted, ReferenceTable};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

struct Outcome {
    cases: usize,
    failures: Vec<String>,
    detail: Vec<String>,
    limit: Option<Duration>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            cases: 0,
            failures: Vec::new(),
            detail: Vec::new(),
            limit: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn golden_tables() -> Outcome {
    let mut out = Outcome::new();
    out.limit = Some(Duration::from_secs(5));
    let table = ReferenceTable::embedded();
    let small: usize = (2..=10).map(|n| table.for_n(n).count()).sum();
    out.check(small == 137, || format!("n = 2..10 lists {small} values, want 137"));
    let full15 = table.for_n(15).count();
    out.check(full15 == 176, || format!("n = 15 lists {full15} values, want 176"));
    out.check(table.get(&p("1^15")) == Some(&BigInt::from(14)), || {
        "eta(1^15) != 14".into()
    });
    let mut mismatched = Vec::new();
    for entry in table.entries() {
        let got = eta_new(&entry.partition);
        if got != entry.eta {
            mismatched.push(entry.partition.clone());
        }
        out.check(got == entry.eta, || {
            format!(
                "eta({}) (n = {}): listed {}, computed {got}",
                entry.partition, entry.n, entry.eta
            )
        });
    }
    // independent confirmation of the computed value at each mismatch
    for lam in mismatched {
        let v = eta_character_capped(&lam, lam.size()).unwrap();
        out.detail.push(format!("character oracle gives eta({lam}) = {v}"));
    }
    out
}

fn four_way() -> Outcome {
    let mut out = Outcome::new();
    out.limit = Some(Duration::from_secs(60));
    for n in 1..=14 {
        for lam in partition::enumerate(n, None) {
            let a = eta_new(&lam);
            let b = eta_renteln(&lam);
            let c = eta_schur_sum(&lam);
            out.check(a == b && b == c, || format!("{lam}: new {a}, renteln {b}, schur {c}"));
            if n <= 10 {
                let d = eta_character(&lam).unwrap();
                out.check(a == d, || format!("{lam}: new {a}, character {d}"));
            }
        }
    }
    out
}

fn asp() -> Outcome {
    let mut out = Outcome::new();
    for n in 2..=14 {
        for lam in partition::enumerate(n, None) {
            let eta = eta_new(&lam);
            let want = asp_sign(&lam).unwrap();
            let ok = !eta.is_zero() && (eta.is_positive() == (want > 0));
            out.check(ok, || format!("eta({lam}) = {eta}, expected sign {want}"));
        }
    }
    out
}

fn dominance() -> Outcome {
    let mut out = Outcome::new();
    let mut ties = 0;
    for n in 1..=13 {
        let all: Vec<(Partition, BigInt)> = partition::enumerate(n, None)
            .into_iter()
            .map(|lam| {
                let f = abs_eta(&lam);
                (lam, f)
            })
            .collect();
        for (lo, f_lo) in &all {
            for (hi, f_hi) in &all {
                if lo == hi || lo.first() != hi.first() || !dominates(hi, lo).unwrap() {
                    continue;
                }
                if f_lo == f_hi {
                    ties += 1;
                }
                out.check(f_lo < f_hi, || format!("{lo} < {hi}: |eta| {f_lo} vs {f_hi}"));
            }
        }
    }
    out.check(
        abs_eta(&p("4,1^2")) == 13.into() && abs_eta(&p("4,2")) == 15.into(),
        || "anchor |eta(4,1^2)| = 13 < |eta(4,2)| = 15".into(),
    );
    if ties > 0 {
        out.detail.push(format!("{ties} violations are ties |eta| = |eta'|"));
    }
    out
}

fn bounds() -> Outcome {
    let mut out = Outcome::new();
    let report = verify_bounds(13).unwrap();
    out.cases += report.cases;
    out.failures.extend(
        report
            .failures
            .iter()
            .map(|f| format!("{}: {} vs {}", f.input, f.expected, f.actual)),
    );
    for lam in partition::enumerate(8, None).into_iter().filter(|l| l.first() == 4) {
        let f = abs_eta(&lam);
        out.check(BigInt::from(17) <= f && f <= BigInt::from(53), || {
            format!("{lam}: |eta| = {f} outside [17, 53]")
        });
    }
    out.check(abs_eta(&p("4,1^4")) == 17.into(), || "|eta(4,1^4)| != 17".into());
    out.check(abs_eta(&lex_max_with_first(8, 4)) == 53.into(), || {
        "|eta(4^2)| != 53".into()
    });
    out
}

fn closed_forms() -> Outcome {
    let mut out = Outcome::new();
    for n in 2..=20usize {
        let d = derangement_number(n);
        let q = -(&d / (n - 1));
        out.check(eta_new(&Partition::row(n)) == d, || format!("eta({n}) != D_{n}"));
        out.check(eta_new(&Partition::hook_shape(n, n - 1)) == q, || {
            format!("eta({},1) != -D_{n}/{}", n - 1, n - 1)
        });
        let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
        out.check(
            eta_new(&Partition::hook_shape(n, 1)) == BigInt::from(sign * (n as i64 - 1)),
            || format!("eta(1^{n}) != (-1)^{}({})", n - 1, n - 1),
        );
        if n <= 13 {
            let min = partition::enumerate(n, None).iter().map(eta_new).min().unwrap();
            out.check(min == q, || format!("n = {n}: min eigenvalue {min}, want {q}"));
        }
    }
    out
}

fn traces() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=12 {
        let (m0, m1, m2) = trace_moments(n);
        let nf = factorial(n);
        out.check(m0 == nf, || format!("n = {n}: sum dim^2 = {m0}"));
        out.check(m1.is_zero(), || format!("n = {n}: sum dim^2 eta = {m1}"));
        out.check(m2 == &nf * derangement_number(n), || {
            format!("n = {n}: sum dim^2 eta^2 = {m2}")
        });
    }
    out
}

fn shifted_suite() -> Outcome {
    let mut out = Outcome::new();
    out.limit = Some(Duration::from_secs(60));
    let report = verify_shifted();
    out.cases = report.cases;
    out.failures = report
        .failures
        .iter()
        .map(|f| format!("{}: {} vs {}", f.input, f.expected, f.actual))
        .collect();
    out
}

fn row_expansion() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=10 {
        for lam in partition::enumerate(n, None) {
            let want = abs_eta(&lam);
            for m in 2..=lam.len() {
                let got = abs_eta_expanded(&lam, m).unwrap();
                out.check(got == want, || format!("{lam}, m = {m}: {got} vs {want}"));
            }
        }
    }
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden tables", golden_tables),
        ("four-way agreement", four_way),
        ("alternating sign", asp),
        ("dominance monotonicity", dominance),
        ("first-part bounds", bounds),
        ("closed forms", closed_forms),
        ("trace identities", traces),
        ("shifted functions", shifted_suite),
        ("row expansion", row_expansion),
    ];
    let mut red = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let slow = out.limit.is_some_and(|l| took > l);
        let ok = out.failures.is_empty() && !slow;
        if !ok {
            red += 1;
        }
        println!(
            "{} criterion {}: {name}: {} cases, {} failures ({:.2}s{})",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            out.cases,
            out.failures.len(),
            took.as_secs_f64(),
            out.limit
                .map(|l| format!(" / limit {}s", l.as_secs()))
                .unwrap_or_default(),
        );
        for f in out.failures.iter().take(5) {
            println!("    {f}");
        }
        if out.failures.len() > 5 {
            println!("    ... {} more", out.failures.len() - 5);
        }
        for d in &out.detail {
            println!("    note: {d}");
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - red,
        criteria.len()
    );
    if red == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
