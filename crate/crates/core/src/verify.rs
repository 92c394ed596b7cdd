//! Reference eigenvalue tables and the theorem sweeps run against them.
//!
//! Every suite returns a [`SuiteReport`]; a suite passes iff its failure
//! list is empty. Cases are generated and checked in a fixed order, so
//! reports are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::partition::{self, dominates, factorial, lex_max_with_first, Partition, Style};
use crate::shifted::{falling_i64, h_star, h_star_banded, h_star_rec, s_star, skew_syt_count, Point, SkewShape};
use crate::spectrum::{
    abs_eta, abs_eta_expanded, asp_sign, derangement_number, eta_character_capped, eta_new, eta_new_terms, eta_renteln,
    eta_schur_sum, trace_moments,
};
use crate::ExactInt;

const EMBEDDED: &str = include_str!("../data/reference_eta.tsv");

/// Largest `n` with a reference table.
pub const MAX_TABLE_N: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReferenceError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: duplicate entry for {partition} at n = {n}")]
    Duplicate {
        line: usize,
        n: usize,
        partition: Partition,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("suite '{suite}' needs {min} <= max-n <= {max} (got {got})")]
    DepthOutOfRange {
        suite: &'static str,
        got: usize,
        min: usize,
        max: usize,
    },
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

/// Which partitions of `n` a reference table lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Full,
    FirstPartAtLeast(usize),
}

impl Coverage {
    pub fn includes(&self, p: &Partition) -> bool {
        match *self {
            Coverage::Full => true,
            Coverage::FirstPartAtLeast(k) => p.first() >= k,
        }
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coverage::Full => f.write_str("full"),
            Coverage::FirstPartAtLeast(k) => write!(f, "first-part-at-least {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceEntry {
    pub n: usize,
    pub partition: Partition,
    pub eta: ExactInt,
}

/// Published `(n, λ, η_λ)` triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceTable {
    entries: Vec<ReferenceEntry>,
}

impl ReferenceTable {
    /// The table compiled into the library.
    pub fn embedded() -> Self {
        EMBEDDED.parse().expect("embedded reference table is well formed")
    }

    /// Raw text of the embedded data file.
    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    pub fn entries(&self) -> &[ReferenceEntry] {
        &self.entries
    }

    pub fn for_n(&self, n: usize) -> impl Iterator<Item = &ReferenceEntry> {
        self.entries.iter().filter(move |e| e.n == n)
    }

    pub fn get(&self, p: &Partition) -> Option<&ExactInt> {
        let n = p.size();
        self.for_n(n).find(|e| &e.partition == p).map(|e| &e.eta)
    }

    /// Coverage of the table for `n`, or `None` if there is no table.
    pub fn coverage(&self, n: usize) -> Option<Coverage> {
        match n {
            2..=10 | 15 => Some(Coverage::Full),
            11 => Some(Coverage::FirstPartAtLeast(5)),
            12 | 13 => Some(Coverage::FirstPartAtLeast(6)),
            _ => None,
        }
    }

    /// Serializes in the data-file record format (no comments).
    pub fn to_records(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}\t{}\t{}\n", e.n, e.partition.format(Style::Exponent), e.eta))
            .collect()
    }
}

impl FromStr for ReferenceTable {
    type Err = ReferenceError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut entries: Vec<ReferenceEntry> = Vec::new();
        for (idx, raw) in text.split('\n').enumerate() {
            let line = idx + 1;
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let malformed = |msg: String| ReferenceError::Malformed { line, msg };
            let fields: Vec<&str> = raw.split('\t').collect();
            let [n, part, eta] = fields[..] else {
                return Err(malformed(format!(
                    "expected 3 tab-separated fields, got {}",
                    fields.len()
                )));
            };
            let n: usize = n.parse().map_err(|_| malformed(format!("bad n '{n}'")))?;
            let partition = Partition::parse(part).map_err(|e| malformed(e.to_string()))?;
            if partition.size() != n {
                return Err(malformed(format!("{partition} has size {}, not {n}", partition.size())));
            }
            let eta: BigInt = eta.parse().map_err(|_| malformed(format!("bad eta '{eta}'")))?;
            if entries.iter().any(|e| e.n == n && e.partition == partition) {
                return Err(ReferenceError::Duplicate { line, n, partition });
            }
            entries.push(ReferenceEntry { n, partition, eta });
        }
        Ok(ReferenceTable { entries })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Informational remarks (skipped ranges and the like).
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(
        &mut self,
        ok: bool,
        input: impl FnOnce() -> String,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check_eq<T: PartialEq + fmt::Display>(&mut self, input: impl FnOnce() -> String, expected: T, actual: T) {
        self.check(expected == actual, input, &expected, &actual);
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} cases, {} failures",
            self.name,
            self.cases,
            self.failures.len()
        )
    }
}

fn depth(suite: &'static str, got: usize, min: usize, max: usize) -> Result<(), VerifyError> {
    if got < min || got > max {
        return Err(VerifyError::DepthOutOfRange { suite, got, min, max });
    }
    Ok(())
}

/// Compares `eta_new` with every reference entry for `n ≤ max_n`. Rows that
/// a restricted table leaves out are checked for agreement between the
/// three formula routes instead.
pub fn verify_tables(max_n: usize) -> Result<SuiteReport, VerifyError> {
    depth("tables", max_n, 2, MAX_TABLE_N)?;
    let table = ReferenceTable::embedded();
    let mut report = SuiteReport::new("tables");
    for n in 2..=max_n {
        let Some(coverage) = table.coverage(n) else {
            report
                .notes
                .push(format!("n = {n}: no reference table; covered by the cross suite"));
            continue;
        };
        for entry in table.for_n(n) {
            let got = eta_new(&entry.partition);
            report.check_eq(|| format!("eta{} (n = {n})", entry.partition), entry.eta.clone(), got);
        }
        if coverage != Coverage::Full {
            for p in partition::enumerate(n, None)
                .into_iter()
                .filter(|p| !coverage.includes(p))
            {
                route_agreement(&mut report, &p);
            }
        }
    }
    Ok(report)
}

fn route_agreement(report: &mut SuiteReport, p: &Partition) {
    let new = eta_new(p);
    let renteln = eta_renteln(p);
    let schur = eta_schur_sum(p);
    report.check(
        new == renteln && new == schur,
        || format!("routes at {p}"),
        format!("new = renteln = schur = {new}"),
        format!("renteln = {renteln}, schur = {schur}"),
    );
}

/// Sign rule `sign(η_λ) = (−1)^{|λ|−λ₁}` and nonvanishing for
/// `2 ≤ |λ| ≤ max_n`, plus agreement in sign of the two summands of the
/// new recurrence whenever both sub-partitions `λ−ĉ`, `λ−l̂` have size ≥ 2.
pub fn verify_asp(max_n: usize) -> Result<SuiteReport, VerifyError> {
    depth("asp", max_n, 2, 40)?;
    let mut report = SuiteReport::new("asp");
    for n in 2..=max_n {
        for p in partition::enumerate(n, None) {
            let eta = eta_new(&p);
            let want = asp_sign(&p).expect("n >= 2");
            let got = sign_of(&eta);
            report.check(got == want, || format!("sign of eta{p} = {eta}"), want, got);

            // the sign rule says nothing about η_∅ or η_(1), so the summands
            // are only compared when both sub-partitions have size >= 2
            let sub_sizes = (n - p.len(), n - p.last());
            let (column, row) = eta_new_terms(&p).expect("nonempty");
            if sub_sizes.0 >= 2 && sub_sizes.1 >= 2 {
                let (a, b) = (sign_of(&column), sign_of(&row));
                report.check(a == b, || format!("recurrence terms at {p}: {column}, {row}"), a, b);
            }
        }
    }
    Ok(report)
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Strict growth of `|η|` along the dominance order among partitions of
/// `n ≤ max_n` sharing their first part: exhaustive pair scan.
pub fn verify_dominance(max_n: usize) -> Result<SuiteReport, VerifyError> {
    depth("dominance", max_n, 1, 30)?;
    let mut report = SuiteReport::new("dominance");
    let mut ties: BTreeMap<usize, usize> = BTreeMap::new();
    let mut reversals = 0usize;
    for n in 1..=max_n {
        let all: Vec<(Partition, BigInt)> = partition::enumerate(n, None)
            .into_iter()
            .map(|p| {
                let f = abs_eta(&p);
                (p, f)
            })
            .collect();
        for (lo, f_lo) in &all {
            for (hi, f_hi) in &all {
                if lo == hi || lo.first() != hi.first() || !dominates(hi, lo).expect("same n") {
                    continue;
                }
                if f_lo == f_hi {
                    *ties.entry(lo.first()).or_default() += 1;
                } else if f_lo > f_hi {
                    reversals += 1;
                }
                report.check(
                    f_lo < f_hi,
                    || format!("{lo} dominated by {hi}"),
                    format!("|eta| {f_lo} < {f_hi}"),
                    format!("{f_lo} vs {f_hi}"),
                );
            }
        }
    }
    if !report.passed() {
        let by_first: Vec<String> = ties.iter().map(|(k, c)| format!("{c} with first part {k}")).collect();
        report.notes.push(format!(
            "violations: {} ties |eta| = |eta'| ({}), {reversals} with |eta| > |eta'|",
            ties.values().sum::<usize>(),
            by_first.join(", "),
        ));
    }
    Ok(report)
}

/// `|η_{(λ₁,1^{n−λ₁})}| ≤ |η_λ| ≤ |η_{λ*}|` for all `λ ⊢ n ≤ max_n`, where
/// `λ*` is the lex-largest partition of `n` with first part `λ₁`.
pub fn verify_bounds(max_n: usize) -> Result<SuiteReport, VerifyError> {
    depth("bounds", max_n, 1, 40)?;
    let mut report = SuiteReport::new("bounds");
    for n in 1..=max_n {
        for p in partition::enumerate(n, None) {
            let first = p.first();
            let lower = abs_eta(&Partition::hook_shape(n, first));
            let upper = abs_eta(&lex_max_with_first(n, first));
            let f = abs_eta(&p);
            report.check(
                lower <= f && f <= upper,
                || format!("bounds at {p}"),
                format!("{lower} <= |eta| <= {upper}"),
                &f,
            );
        }
    }
    Ok(report)
}

/// The three formula routes agree on every `λ ⊢ n ≤ max_n`, and match the
/// character oracle for `n ≤ min(max_n, oracle_cap)`.
pub fn verify_cross(max_n: usize, oracle_cap: usize) -> Result<SuiteReport, VerifyError> {
    depth("cross", max_n, 1, 30)?;
    let mut report = SuiteReport::new("cross");
    for n in 1..=max_n {
        for p in partition::enumerate(n, None) {
            route_agreement(&mut report, &p);
            if n <= oracle_cap {
                let oracle = eta_character_capped(&p, oracle_cap).expect("n within cap");
                report.check_eq(|| format!("character oracle at {p}"), eta_new(&p), oracle);
            }
        }
    }
    if oracle_cap < max_n {
        report
            .notes
            .push(format!("character oracle applied for n <= {oracle_cap} only",));
    }
    Ok(report)
}

/// Closed forms and spectral identities for `n ≤ max_n`:
/// `η_(n) = Dₙ`, `η_(n−1,1) = −Dₙ/(n−1)`, `η_(1ⁿ) = (−1)ⁿ⁻¹(n−1)`, the
/// minimum of the spectrum, the trace moments and the row expansion of `|η|`.
pub fn verify_identities(max_n: usize) -> Result<SuiteReport, VerifyError> {
    depth("identities", max_n, 2, 40)?;
    let mut report = SuiteReport::new("identities");
    for n in 2..=max_n {
        let d = derangement_number(n);
        let smallest = -(&d / (n - 1));
        report.check_eq(|| format!("eta({n}) = D_{n}"), d.clone(), eta_new(&Partition::row(n)));
        report.check_eq(
            || format!("eta({},1) = -D_{n}/{}", n - 1, n - 1),
            smallest.clone(),
            eta_new(&Partition::hook_shape(n, n - 1)),
        );
        let sign = if n % 2 == 1 { 1 } else { -1 };
        report.check_eq(
            || format!("eta(1^{n}) = (-1)^{}({})", n - 1, n - 1),
            BigInt::from(sign * (n as i64 - 1)),
            eta_new(&Partition::hook_shape(n, 1)),
        );
        let min = partition::enumerate(n, None).iter().map(eta_new).min().expect("n >= 1");
        report.check_eq(|| format!("min eigenvalue for n = {n}"), smallest, min);
    }
    for n in 1..=max_n.min(12) {
        let (m0, m1, m2) = trace_moments(n);
        let n_fact = factorial(n);
        let want = (n_fact.clone(), BigInt::zero(), &n_fact * derangement_number(n));
        report.check(
            (m0.clone(), m1.clone(), m2.clone()) == want,
            || format!("trace moments n = {n}"),
            format!("({}, {}, {})", want.0, want.1, want.2),
            format!("({m0}, {m1}, {m2})"),
        );
    }
    for n in 1..=max_n.min(10) {
        for p in partition::enumerate(n, None) {
            for m in 2..=p.len() {
                let expanded = abs_eta_expanded(&p, m).expect("2 <= m <= r");
                report.check_eq(|| format!("row expansion of {p} at m = {m}"), abs_eta(&p), expanded);
            }
        }
    }
    if max_n > 12 {
        report.notes.push("trace moments checked for n <= 12".into());
    }
    if max_n > 10 {
        report.notes.push("row expansion checked for n <= 10".into());
    }
    Ok(report)
}

/// Shifted-function checks on fixed sweeps: stability under appended zeros,
/// the four `h*_k` routes, the one-variable closed form, the vanishing
/// theorem, the skew-dimension ratio and the two strict `h*_k` inequalities.
pub fn verify_shifted() -> SuiteReport {
    let mut report = SuiteReport::new("shifted");
    for part in [
        shifted_stability(),
        shifted_routes(),
        shifted_closed_forms(),
        shifted_vanishing(),
        shifted_dimension_ratio(),
        shifted_inequalities(),
    ] {
        report.absorb(part);
    }
    report
}

fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(|n| partition::enumerate(n, None)).collect()
}

fn shifted_stability() -> SuiteReport {
    let mut report = SuiteReport::new("stability");
    // every point of length <= 3 with entries in 0..=10
    let mut points = vec![Point::default()];
    for len in 1..=3u32 {
        for code in 0..11usize.pow(len) {
            let coords = (0..len).map(|i| (code / 11usize.pow(i) % 11) as i64).collect();
            points.push(Point::new(coords));
        }
    }
    for pt in &points {
        let padded = pt.padded();
        for k in 0..=8 {
            report.check_eq(
                || format!("h*_{k}{:?} + [0]", pt.coords()),
                h_star(k, pt),
                h_star(k, &padded),
            );
        }
    }
    for lam in partitions_up_to(10) {
        let pt = Point::from(&lam);
        for mu in partitions_up_to(4) {
            let (a, b) = (s_star(&mu, &pt), s_star(&mu, &pt.padded()));
            report.check(
                a.is_ok() && a == b,
                || format!("s*_{mu}({lam}) + [0]"),
                format!("{a:?}"),
                format!("{b:?}"),
            );
        }
    }
    report
}

fn shifted_routes() -> SuiteReport {
    let mut report = SuiteReport::new("routes");
    for lam in partitions_up_to(10) {
        let pt = Point::from(&lam);
        for k in 0..=10 {
            let direct = h_star(k, &pt);
            report.check_eq(
                || format!("h*_{k}({lam}) recurrence"),
                direct.clone(),
                h_star_rec(k, &pt),
            );
            let det = s_star(&Partition::row(k), &pt);
            report.check(
                det.as_ref()
                    .is_ok_and(|d| d == &BigRational::from_integer(direct.clone())),
                || format!("s*_({k})({lam}) determinant"),
                &direct,
                format!("{det:?}"),
            );
            if let Some((x, band, l, y)) = banded(&lam) {
                report.check_eq(
                    || format!("h*_{k}({lam}) banded"),
                    direct.clone(),
                    h_star_banded(k, x, band, l, y),
                );
            }
        }
    }
    // banded formula on points that are not partitions
    for x in 0..=6i64 {
        for band in 0..=6i64 {
            for y in 0..=6i64 {
                for l in 1..=3 {
                    let mut coords = vec![x];
                    coords.extend(std::iter::repeat_n(band, l));
                    coords.push(y);
                    let pt = Point::new(coords);
                    for k in 0..=6 {
                        report.check_eq(
                            || format!("h*_{k}{:?} banded", pt.coords()),
                            h_star(k, &pt),
                            h_star_banded(k, x, band, l, y),
                        );
                    }
                }
            }
        }
    }
    report
}

/// Splits `λ = (x, b^l, y)` with `l ≥ 1` when the middle parts are equal.
fn banded(lam: &Partition) -> Option<(i64, i64, usize, i64)> {
    let parts = lam.parts();
    if parts.len() < 3 {
        return None;
    }
    let middle = &parts[1..parts.len() - 1];
    middle.iter().all(|&v| v == middle[0]).then(|| {
        (
            parts[0] as i64,
            middle[0] as i64,
            middle.len(),
            parts[parts.len() - 1] as i64,
        )
    })
}

fn shifted_closed_forms() -> SuiteReport {
    let mut report = SuiteReport::new("closed forms");
    for lam in 0..=12usize {
        let pt = Point::new(vec![lam as i64]);
        for k in 0..=lam {
            report.check_eq(|| format!("h*_{k}({lam})"), falling_i64(lam as i64, k), h_star(k, &pt));
        }
    }
    for p in partitions_up_to(10) {
        let pt = Point::from(&p);
        report.check_eq(|| format!("h*_0({p})"), BigInt::one(), h_star(0, &pt));
        report.check_eq(|| format!("h*_1({p})"), BigInt::from(p.size()), h_star(1, &pt));
    }
    report
}

fn shifted_vanishing() -> SuiteReport {
    let mut report = SuiteReport::new("vanishing");
    let mus = partitions_up_to(6);
    for lam in partitions_up_to(8) {
        let pt = Point::from(&lam);
        for mu in &mus {
            if lam.contains(mu) {
                continue;
            }
            let v = s_star(mu, &pt);
            report.check(
                v.as_ref().is_ok_and(|v| v.is_zero()),
                || format!("s*_{mu}({lam}) with {mu} not inside {lam}"),
                0,
                format!("{v:?}"),
            );
        }
    }
    for mu in &mus {
        let v = s_star(mu, &Point::from(mu));
        let h = mu.hook_product();
        report.check(
            v.as_ref().is_ok_and(|v| v == &BigRational::from_integer(h.clone())),
            || format!("s*_{mu}({mu}) = H({mu})"),
            &h,
            format!("{v:?}"),
        );
    }
    report
}

fn shifted_dimension_ratio() -> SuiteReport {
    let mut report = SuiteReport::new("dimension ratio");
    for lam in partitions_up_to(8) {
        let n = lam.size();
        let pt = Point::from(&lam);
        for k in 0..=n {
            let h = h_star(k, &pt);
            if k > lam.first() {
                report.check_eq(|| format!("h*_{k}({lam}) vanishes"), BigInt::zero(), h);
                continue;
            }
            let shape = SkewShape::new(lam.clone(), Partition::row(k)).expect("(k) fits");
            let skew = skew_syt_count(&shape).expect("n <= 8");
            let lhs = BigRational::new(skew, lam.dim());
            let rhs = BigRational::new(h, falling_i64(n as i64, k));
            report.check_eq(|| format!("dim {lam}/({k}) / dim {lam}"), rhs, lhs);
        }
    }
    report
}

fn shifted_inequalities() -> SuiteReport {
    let mut report = SuiteReport::new("inequalities");
    for lam in 1..=12i64 {
        for low in 1..=lam {
            for k in 2..=lam as usize {
                let a = h_star(k, &Point::new(vec![lam, low]));
                let b = h_star(k, &Point::new(vec![lam + 1, low - 1]));
                report.check(
                    a < b,
                    || format!("h*_{k}({lam},{low}) < h*_{k}({},{})", lam + 1, low - 1),
                    "<",
                    format!("{a} vs {b}"),
                );
            }
        }
    }
    for lam in 2..=10i64 {
        for l in 1..=4usize {
            let mut even = vec![lam; l + 2];
            let mut moved = even.clone();
            moved[0] += 1;
            moved[l + 1] -= 1;
            let (even, moved) = (Point::new(std::mem::take(&mut even)), Point::new(moved));
            for k in 2..=lam as usize {
                let a = h_star(k, &even);
                let b = h_star(k, &moved);
                report.check(
                    a < b,
                    || format!("h*_{k}{:?} < h*_{k}{:?}", even.coords(), moved.coords()),
                    "<",
                    format!("{a} vs {b}"),
                );
            }
        }
    }
    report
}

/// A named verification suite, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Asp,
    Dominance,
    Bounds,
    Cross,
    Identities,
    Shifted,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Tables,
        Suite::Asp,
        Suite::Dominance,
        Suite::Bounds,
        Suite::Cross,
        Suite::Identities,
        Suite::Shifted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Asp => "asp",
            Suite::Dominance => "dominance",
            Suite::Bounds => "bounds",
            Suite::Cross => "cross",
            Suite::Identities => "identities",
            Suite::Shifted => "shifted",
        }
    }

    /// Depth used when no `max_n` is given.
    pub fn default_max_n(&self) -> usize {
        match self {
            Suite::Tables => 15,
            Suite::Asp | Suite::Cross => 14,
            Suite::Dominance | Suite::Bounds => 13,
            Suite::Identities => 20,
            Suite::Shifted => 0,
        }
    }

    pub fn run(&self, max_n: Option<usize>, oracle_cap: usize) -> Result<SuiteReport, VerifyError> {
        let n = max_n.unwrap_or_else(|| self.default_max_n());
        match self {
            Suite::Tables => verify_tables(n),
            Suite::Asp => verify_asp(n),
            Suite::Dominance => verify_dominance(n),
            Suite::Bounds => verify_bounds(n),
            Suite::Cross => verify_cross(n, oracle_cap),
            Suite::Identities => verify_identities(n),
            Suite::Shifted => Ok(verify_shifted()),
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}
