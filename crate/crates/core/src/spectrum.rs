//! Eigenvalues `η_λ` of the derangement graph `Γₙ`.
//!
//! Three formula routes ([`eta_new`], [`eta_renteln`], [`eta_schur_sum`])
//! and one independent oracle ([`eta_character`]) built from
//! Murnaghan–Nakayama character values and conjugacy-class sizes. All
//! arithmetic is exact.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::partition::{self, factorial, Partition};
use crate::shifted::{h_star, Point};
use crate::ExactInt;

/// Largest `n` the character oracle accepts unless told otherwise.
pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("|λ| = {n} exceeds the character-oracle cap of {cap}; use a recurrence route")]
    TooLarge { n: usize, cap: usize },
    #[error("expansion index m = {m} must satisfy 2 <= m <= r = {r}")]
    BadIndex { m: usize, r: usize },
    #[error("the sign rule only applies for |λ| >= 2 (got |λ| = {n})")]
    TooSmall { n: usize },
}

/// Memo table keyed on the canonical part list. Concurrent writers may
/// race on the same key; they always insert equal values.
#[derive(Default)]
pub struct EtaCache {
    map: RwLock<HashMap<Partition, ExactInt>>,
}

impl EtaCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get(&self, key: &Partition) -> Option<ExactInt> {
        self.map.read().unwrap().get(key).cloned()
    }

    fn insert(&self, key: Partition, value: ExactInt) {
        self.map.write().unwrap().entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `η_λ = (−1)^{r−1} λ_r η_{λ−ĉ} + (−1)^{λ_r} η_{λ−l̂}`, `η_∅ = 1`.
    pub fn eta_new(&self, lam: &Partition) -> ExactInt {
        if lam.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = self.get(lam) {
            return v;
        }
        let (column, row) = new_terms(self, lam);
        let v = column + row;
        self.insert(lam.clone(), v.clone());
        v
    }

    /// `η_λ = (−1)^h η_{λ−ĥ} + (−1)^{h+λ₁} h η_{λ−ĉ}`, `η_∅ = 1`.
    pub fn eta_renteln(&self, lam: &Partition) -> ExactInt {
        let Some(hook) = lam.hook_data() else {
            return BigInt::one();
        };
        if let Some(v) = self.get(lam) {
            return v;
        }
        let h = hook.hook_size;
        let without_hook = self.eta_renteln(&lam.remove_hook().unwrap());
        let without_column = self.eta_renteln(&lam.remove_first_column().unwrap());
        let v = signed(h, without_hook) + signed(h + lam.first(), without_column * h);
        self.insert(lam.clone(), v.clone());
        v
    }
}

/// The two summands of the new recurrence, `((−1)^{r−1} λ_r η_{λ−ĉ}, (−1)^{λ_r} η_{λ−l̂})`.
fn new_terms(cache: &EtaCache, lam: &Partition) -> (ExactInt, ExactInt) {
    let r = lam.len();
    let last = lam.last();
    let column = signed(r - 1, cache.eta_new(&lam.remove_first_column().unwrap()) * last);
    let row = signed(last, cache.eta_new(&lam.remove_last_row().unwrap()));
    (column, row)
}

fn signed(exp: usize, v: ExactInt) -> ExactInt {
    if exp.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

// The two recurrences keep separate tables so that comparing them checks
// two independent computations.
static NEW_CACHE: LazyLock<EtaCache> = LazyLock::new(EtaCache::new);
static RENTELN_CACHE: LazyLock<EtaCache> = LazyLock::new(EtaCache::new);

/// `η_λ` by the last-row / first-column recurrence (process-wide memo).
pub fn eta_new(lam: &Partition) -> ExactInt {
    NEW_CACHE.eta_new(lam)
}

/// `η_λ` by the hook / first-column recurrence (process-wide memo).
pub fn eta_renteln(lam: &Partition) -> ExactInt {
    RENTELN_CACHE.eta_renteln(lam)
}

/// Both summands of the new recurrence for `λ ≠ ∅`, column term first.
pub fn eta_new_terms(lam: &Partition) -> Option<(ExactInt, ExactInt)> {
    (!lam.is_empty()).then(|| new_terms(&NEW_CACHE, lam))
}

/// `η_λ = Σ_{k=0}^{n} (−1)^{n−k} h*_k(λ)`.
pub fn eta_schur_sum(lam: &Partition) -> ExactInt {
    let n = lam.size();
    let point = Point::from(lam);
    (0..=n).map(|k| signed(n - k, h_star(k, &point))).sum()
}

/// `|η_λ|`.
pub fn abs_eta(lam: &Partition) -> ExactInt {
    eta_new(lam).abs()
}

/// `|η_λ|` expanded at row `m` (1-based, `2 ≤ m ≤ r`):
///
/// ```text
/// Σ_{k=0}^{λ_m} h*_k(λ_m, …, λ_r) · |η_{(λ₁−k, …, λ_{m−1}−k)}|
/// ```
pub fn abs_eta_expanded(lam: &Partition, m: usize) -> Result<ExactInt, SpectrumError> {
    let r = lam.len();
    if m < 2 || m > r {
        return Err(SpectrumError::BadIndex { m, r });
    }
    let parts = lam.parts();
    let tail = Point::from(parts[m - 1..].iter().map(|&x| x as i64).collect::<Vec<_>>());
    let total = (0..=parts[m - 1])
        .map(|k| {
            let head = Partition::from_trailing_zeros(parts[..m - 1].iter().map(|&x| x - k).collect());
            h_star(k, &tail) * abs_eta(&head)
        })
        .sum();
    Ok(total)
}

/// `(−1)^{|λ| − λ₁}`, the predicted sign of `η_λ` for `|λ| ≥ 2`.
pub fn asp_sign(lam: &Partition) -> Result<i8, SpectrumError> {
    let n = lam.size();
    if n < 2 {
        return Err(SpectrumError::TooSmall { n });
    }
    Ok(if (n - lam.first()).is_multiple_of(2) { 1 } else { -1 })
}

/// Number of derangements of `n` points: `D₀ = 1, D₁ = 0, Dₙ = (n−1)(Dₙ₋₁ + Dₙ₋₂)`.
pub fn derangement_number(n: usize) -> ExactInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
    if n == 0 {
        return prev;
    }
    for k in 2..=n {
        let next = (k - 1) * (&prev + &cur);
        prev = cur;
        cur = next;
    }
    cur
}

/// A conjugacy class of `Sₙ`, labelled by cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    pub shape: Partition,
    pub class_size: ExactInt,
}

impl CycleType {
    pub fn new(shape: Partition) -> Self {
        let n = shape.size();
        let mut denom = BigInt::one();
        let parts = shape.parts();
        let mut i = 0;
        while i < parts.len() {
            let len = parts[i];
            let mult = parts[i..].iter().take_while(|&&q| q == len).count();
            denom *= BigInt::from(len).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        CycleType {
            class_size: factorial(n) / denom,
            shape,
        }
    }

    /// True if the class consists of derangements (no fixed points).
    pub fn is_derangement(&self) -> bool {
        !self.shape.parts().contains(&1)
    }
}

/// Conjugacy classes of `Sₙ` with no 1-cycles, in decreasing lex order.
pub fn derangement_classes(n: usize) -> Vec<CycleType> {
    partition::enumerate(n, None)
        .into_iter()
        .filter(|p| !p.parts().contains(&1))
        .map(CycleType::new)
        .collect()
}

/// Irreducible character value `χ_λ(ρ)` by the Murnaghan–Nakayama rule.
///
/// Shapes are handled as beta-sets (first-column hook lengths); removing a
/// border strip of length `k` moves one bead from `b` to an empty `b − k`,
/// with sign `(−1)^{beads strictly between}`.
pub fn character(lam: &Partition, rho: &Partition) -> ExactInt {
    assert_eq!(lam.size(), rho.size(), "character needs |λ| = |ρ|");
    let r = lam.len();
    let beta: Vec<usize> = (0..r).map(|i| lam.parts()[i] + (r - 1 - i)).collect();
    let mut memo = HashMap::new();
    strip_sum(beta, rho.parts(), &mut memo)
}

fn strip_sum(beta: Vec<usize>, cycles: &[usize], memo: &mut HashMap<(Vec<usize>, usize), ExactInt>) -> ExactInt {
    let Some((&k, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (beta, cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beta = &key.0;
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - k;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let v = strip_sum(next, rest, memo);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `η_λ` from character theory: `Σ_ρ |C_ρ| χ_λ(ρ) / dim λ`, summed over
/// derangement classes. Refuses `|λ|` above [`DEFAULT_ORACLE_CAP`].
pub fn eta_character(lam: &Partition) -> Result<ExactInt, SpectrumError> {
    eta_character_capped(lam, DEFAULT_ORACLE_CAP)
}

pub fn eta_character_capped(lam: &Partition, cap: usize) -> Result<ExactInt, SpectrumError> {
    let n = lam.size();
    if n > cap {
        return Err(SpectrumError::TooLarge { n, cap });
    }
    let total: ExactInt = derangement_classes(n)
        .iter()
        .map(|class| &class.class_size * character(lam, &class.shape))
        .sum();
    let dim = lam.dim();
    let (q, rem) = total.div_rem(&dim);
    assert!(
        rem.is_zero(),
        "internal error: character sum {total} not divisible by dim {dim} for {lam}"
    );
    Ok(q)
}

/// One row of the spectrum: `η_λ` with its sign and multiplicity `dim(λ)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub partition: Partition,
    pub eta: ExactInt,
    pub sign: i8,
    pub multiplicity: ExactInt,
}

impl SpectrumEntry {
    pub fn new(partition: Partition) -> Self {
        let eta = eta_new(&partition);
        let sign = if eta.is_positive() {
            1
        } else if eta.is_negative() {
            -1
        } else {
            0
        };
        let multiplicity = partition.dim().pow(2);
        SpectrumEntry {
            partition,
            eta,
            sign,
            multiplicity,
        }
    }
}

/// Spectrum entries for all `λ ⊢ n` (optionally `λ₁ ≥ min_first_part`) in
/// decreasing lex order.
pub fn spectrum_table(n: usize, min_first_part: Option<usize>) -> Vec<SpectrumEntry> {
    partition::enumerate(n, min_first_part)
        .into_iter()
        .map(SpectrumEntry::new)
        .collect()
}

/// [`spectrum_table`] evaluated on `jobs` worker threads. Row order does not
/// depend on `jobs`.
pub fn spectrum_table_with_jobs(
    n: usize,
    min_first_part: Option<usize>,
    jobs: usize,
) -> Result<Vec<SpectrumEntry>, rayon::ThreadPoolBuildError> {
    if jobs <= 1 {
        return Ok(spectrum_table(n, min_first_part));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let parts = partition::enumerate(n, min_first_part);
    Ok(pool.install(|| parts.into_par_iter().map(SpectrumEntry::new).collect()))
}

/// `(Σ dim², Σ dim² η, Σ dim² η²)` over `λ ⊢ n`. These equal the trace of
/// `A⁰`, `A` and `A²` for the adjacency matrix `A` of `Γₙ`, i.e.
/// `(n!, 0, n!·Dₙ)`.
pub fn trace_moments(n: usize) -> (ExactInt, ExactInt, ExactInt) {
    let mut moments = (BigInt::zero(), BigInt::zero(), BigInt::zero());
    for lam in partition::enumerate(n, None) {
        let mult = lam.dim().pow(2);
        let eta = eta_new(&lam);
        moments.2 += &mult * &eta * &eta;
        moments.1 += &mult * &eta;
        moments.0 += mult;
    }
    moments
}
