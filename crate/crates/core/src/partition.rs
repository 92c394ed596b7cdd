//! Integer partitions: canonical representation, Young-diagram surgery,
//! the lexicographic and dominance orders, single-box moves, enumeration
//! and hook-length dimensions.
//!
//! Parts beyond the length of a partition are read as zero in every
//! comparison, so partitions of different lengths compare naturally.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("malformed partition text at byte {pos}: {rule}")]
    MalformedText { pos: usize, rule: &'static str },
    #[error("parts are not weakly decreasing: part {index} ({next}) exceeds its predecessor ({prev})")]
    NotWeaklyDecreasing { index: usize, prev: usize, next: usize },
    #[error("parts must be positive integers (found 0 at byte {pos})")]
    ZeroPart { pos: usize },
    #[error("operation requires a nonempty partition")]
    EmptyPartition,
    #[error("partitions have different sizes ({left} and {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("{to} does not dominate {from}")]
    NotComparable { from: Partition, to: Partition },
}

/// A weakly decreasing list of positive parts. The empty list is the unique
/// partition of zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Sizes attached to the hook, first column and last row of a nonempty
/// partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookData {
    /// `λ₁ + r − 1`
    pub hook_size: usize,
    /// `r`, the number of parts
    pub column_size: usize,
    /// `λ_r`, the smallest part
    pub last_row_size: usize,
}

/// Rendering style for [`Partition::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Every part written out: `4,3,1,1`.
    Plain,
    /// Repeated parts collapsed: `4,3,1^2`.
    Exponent,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing.
    /// Zero parts are rejected rather than silently dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart { pos });
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing {
                index: i + 1,
                prev: parts[i],
                next: parts[i + 1],
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a weakly decreasing list that may end in
    /// zeros; the zeros are dropped.
    pub(crate) fn from_trailing_zeros(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_trailing_zeros(vec![n])
    }

    /// `(first, 1^{n − first})`
    pub fn hook_shape(n: usize, first: usize) -> Self {
        assert!(first >= 1 && first <= n);
        let mut parts = vec![first];
        parts.extend(std::iter::repeat_n(1, n - first));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Last (smallest) part, 0 for the empty partition.
    pub fn last(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn hook_data(&self) -> Option<HookData> {
        let first = *self.parts.first()?;
        let r = self.parts.len();
        Some(HookData {
            hook_size: first + r - 1,
            column_size: r,
            last_row_size: self.last(),
        })
    }

    /// Removes the hook (first row and first column): `(λ₂−1, …, λ_r−1)`.
    pub fn remove_hook(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok(Self::from_trailing_zeros(
            self.parts[1..].iter().map(|p| p - 1).collect(),
        ))
    }

    /// Removes the first column: `(λ₁−1, …, λ_r−1)`.
    pub fn remove_first_column(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok(Self::from_trailing_zeros(self.parts.iter().map(|p| p - 1).collect()))
    }

    /// Deletes the last row: `(λ₁, …, λ_{r−1})`.
    pub fn remove_last_row(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok(Partition {
            parts: self.parts[..self.parts.len() - 1].to_vec(),
        })
    }

    /// True if `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Column lengths of the diagram (used for leg lengths).
    fn column_lengths(&self) -> Vec<usize> {
        (0..self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect()
    }

    /// Product of hook lengths over all boxes, `H(λ)`; `H(∅) = 1`.
    pub fn hook_product(&self) -> ExactInt {
        let cols = self.column_lengths();
        let mut acc = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in cols.iter().enumerate().take(row) {
                let hook = (row - j - 1) + (col - i - 1) + 1;
                acc *= hook;
            }
        }
        acc
    }

    /// Number of standard Young tableaux, `|λ|! / H(λ)`.
    pub fn dim(&self) -> ExactInt {
        let n_fact = factorial(self.size());
        let h = self.hook_product();
        debug_assert!((&n_fact % &h) == BigInt::from(0));
        n_fact / h
    }

    pub fn format(&self, style: Style) -> String {
        if self.is_empty() {
            return "()".to_string();
        }
        match style {
            Style::Plain => self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
            Style::Exponent => {
                let mut items = Vec::new();
                let mut i = 0;
                while i < self.parts.len() {
                    let p = self.parts[i];
                    let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
                    if run == 1 {
                        items.push(p.to_string());
                    } else {
                        items.push(format!("{p}^{run}"));
                    }
                    i += run;
                }
                items.join(",")
            }
        }
    }

    /// Parses the textual form. Accepted grammar:
    ///
    /// ```text
    /// partition := "(" ")" | [ "(" ] item ("," item)* [ ")" ]
    /// item      := INT | INT "^" INT
    /// ```
    ///
    /// with spaces and tabs skipped anywhere.
    pub fn parse(text: &str) -> Result<Partition, PartitionError> {
        Parser::new(text).partition()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Style::Exponent))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::parse(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn malformed(&self, rule: &'static str) -> PartitionError {
        PartitionError::MalformedText { pos: self.pos, rule }
    }

    // Digits may be separated by whitespace, since whitespace is skipped anywhere.
    fn int(&mut self, rule: &'static str) -> Result<(usize, usize), PartitionError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut value: usize = 0;
        let mut digits = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as usize))
                .ok_or(PartitionError::MalformedText {
                    pos: self.pos,
                    rule: "INT too large",
                })?;
            digits += 1;
            self.pos += 1;
        }
        if digits == 0 {
            return Err(self.malformed(rule));
        }
        Ok((value, start))
    }

    fn partition(&mut self) -> Result<Partition, PartitionError> {
        let open = self.eat(b'(');
        if open && self.eat(b')') {
            return self.finish(Vec::new());
        }
        let mut parts = Vec::new();
        loop {
            let (base, at) = self.int("item := INT | INT \"^\" INT (expected a part)")?;
            if base == 0 {
                return Err(PartitionError::ZeroPart { pos: at });
            }
            let mut times = 1;
            if self.eat(b'^') {
                let (exp, at) = self.int("item := INT \"^\" INT (expected an exponent)")?;
                if exp == 0 {
                    return Err(PartitionError::MalformedText {
                        pos: at,
                        rule: "INT := base-10 integer >= 1 (exponent is 0)",
                    });
                }
                times = exp;
            }
            parts.extend(std::iter::repeat_n(base, times));
            if !self.eat(b',') {
                break;
            }
        }
        self.eat(b')');
        self.finish(parts)
    }

    fn finish(&mut self, parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if self.peek().is_some() {
            return Err(self.malformed("unexpected trailing input after partition"));
        }
        Partition::new(parts)
    }
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<(), PartitionError> {
    let (left, right) = (a.size(), b.size());
    if left != right {
        return Err(PartitionError::SizeMismatch { left, right });
    }
    Ok(())
}

fn prefix_sums(p: &Partition, len: usize) -> Vec<usize> {
    (0..len)
        .scan(0, |acc, i| {
            *acc += p.part(i);
            Some(*acc)
        })
        .collect()
}

/// True iff `b ⊴ a`: every prefix sum of `b` is at most that of `a`.
pub fn dominates(a: &Partition, b: &Partition) -> Result<bool, PartitionError> {
    check_sizes(a, b)?;
    let len = a.len().max(b.len());
    let (pa, pb) = (prefix_sums(a, len), prefix_sums(b, len));
    Ok(pb.iter().zip(&pa).all(|(x, y)| x <= y))
}

/// Strict lexicographic comparison `a <_lex b`.
pub fn lex_less(a: &Partition, b: &Partition) -> Result<bool, PartitionError> {
    check_sizes(a, b)?;
    Ok(lex_cmp(a, b) == Ordering::Less)
}

pub(crate) fn lex_cmp(a: &Partition, b: &Partition) -> Ordering {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| a.part(i).cmp(&b.part(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// If `a <₁ b`, returns the 1-based rows `(m₁, m₂)` of the move: `b` is `a`
/// with row `m₁` lengthened by one box and row `m₂ > m₁` shortened by one.
pub fn one_move(a: &Partition, b: &Partition) -> Result<Option<(usize, usize)>, PartitionError> {
    check_sizes(a, b)?;
    let len = a.len().max(b.len());
    let mut up = None;
    let mut down = None;
    for i in 0..len {
        let (x, y) = (a.part(i) as i64, b.part(i) as i64);
        match y - x {
            0 => {}
            1 if up.is_none() => up = Some(i),
            -1 if down.is_none() => down = Some(i),
            _ => return Ok(None),
        }
    }
    Ok(match (up, down) {
        (Some(u), Some(d)) if u < d => Some((u + 1, d + 1)),
        _ => None,
    })
}

/// True iff `a <₁ b` (a single outside corner of `a` slides up).
pub fn covers_one_move(a: &Partition, b: &Partition) -> Result<bool, PartitionError> {
    Ok(one_move(a, b)?.is_some())
}

/// A chain `from = μ⁰ <₁ μ¹ <₁ … <₁ μᵏ = to`. Requires `from ⊴ to`.
///
/// Each step moves one box into the first row where the current partition
/// differs from `to`, taking it from the first row below where the prefix
/// sums of the two partitions meet again. That row is always an outside
/// corner, and the step keeps the current partition dominated by `to`.
pub fn dominance_chain(from: &Partition, to: &Partition) -> Result<Vec<Partition>, PartitionError> {
    if !dominates(to, from)? {
        return Err(PartitionError::NotComparable {
            from: from.clone(),
            to: to.clone(),
        });
    }
    let len = from.len().max(to.len());
    let target = prefix_sums(to, len);
    let mut chain = vec![from.clone()];
    let mut cur: Vec<usize> = (0..len).map(|i| from.part(i)).collect();
    while let Some(i) = (0..len).find(|&i| cur[i] != to.part(i)) {
        let mut acc: usize = cur[..=i].iter().sum();
        let mut m2 = i + 1;
        loop {
            acc += cur[m2];
            if acc == target[m2] {
                break;
            }
            m2 += 1;
        }
        cur[i] += 1;
        cur[m2] -= 1;
        chain.push(Partition::from_trailing_zeros(cur.clone()));
    }
    Ok(chain)
}

/// All partitions of `n` with first part at least `min_first_part`, in
/// decreasing lexicographic order.
pub fn enumerate(n: usize, min_first_part: Option<usize>) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let lo = min_first_part.unwrap_or(1).max(1);
    let mut cur = Vec::new();
    for first in (lo..=n).rev() {
        cur.push(first);
        rec(n - first, first, &mut cur, &mut out);
        cur.pop();
    }
    out
}

/// The lexicographically largest partition of `n` whose first part is
/// exactly `first`: `first` repeated `⌊n/first⌋` times, then the remainder.
pub fn lex_max_with_first(n: usize, first: usize) -> Partition {
    assert!(first >= 1 && first <= n);
    let mut parts = vec![first; n / first];
    if !n.is_multiple_of(first) {
        parts.push(n % first);
    }
    Partition { parts }
}

pub fn factorial(n: usize) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}
