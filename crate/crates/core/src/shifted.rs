//! Shifted symmetric functions evaluated at integer points.
//!
//! `h*_k` has two evaluation routes: [`h_star`] sums the tableau expansion
//! over weakly increasing index tuples, and [`h_star_rec`] peels off the
//! last variable with the shift recurrence. [`s_star`] evaluates a general
//! shifted Schur polynomial as a ratio of falling-factorial determinants,
//! and [`skew_syt_count`] counts skew standard tableaux by brute force.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::Partition;
use crate::ExactInt;

/// Largest skew shape (in cells) [`skew_syt_count`] will enumerate.
pub const DEFAULT_SKEW_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftedError {
    #[error("denominator determinant vanished (shifted arguments are not distinct)")]
    DenominatorZero,
    #[error("skew shape has {cells} cells, above the cap of {cap}")]
    ShapeTooLarge { cells: usize, cap: usize },
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    InnerNotContained { outer: Partition, inner: Partition },
}

/// A finite argument list `(x₁, …, x_m)`. Trailing zeros are inert.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<i64>,
}

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// The point with a zero appended.
    pub fn padded(&self) -> Point {
        let mut coords = self.coords.clone();
        coords.push(0);
        Point { coords }
    }
}

impl From<&Partition> for Point {
    fn from(p: &Partition) -> Self {
        Point {
            coords: p.parts().iter().map(|&x| x as i64).collect(),
        }
    }
}

impl From<Vec<i64>> for Point {
    fn from(coords: Vec<i64>) -> Self {
        Point { coords }
    }
}

/// `x (x−1) ⋯ (x−k+1)`, and 1 when `k = 0`. Negative `x` is allowed.
pub fn falling(x: &BigInt, k: usize) -> ExactInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= x - i;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub(crate) fn falling_i64(x: i64, k: usize) -> ExactInt {
    falling(&BigInt::from(x), k)
}

/// Complete shifted symmetric function `h*_k` via its tableau expansion
///
/// ```text
/// Σ_{1 ≤ i₁ ≤ … ≤ i_k ≤ m} (x_{i₁} − k + 1)(x_{i₂} − k + 2) ⋯ x_{i_k}
/// ```
///
/// The `t`-th factor depends only on the position `t` and the index chosen
/// there, so the sum folds into a table over (position, least admissible
/// index) with suffix sums.
pub fn h_star(k: usize, pt: &Point) -> ExactInt {
    let x = pt.coords();
    let m = x.len();
    if k == 0 {
        return BigInt::one();
    }
    // next[i]: sum over tails t+1..k whose first index is >= i
    let mut next = vec![BigInt::one(); m + 1];
    for t in (1..=k).rev() {
        let offset = t as i64 - k as i64;
        let mut cur = vec![BigInt::zero(); m + 1];
        for i in (0..m).rev() {
            cur[i] = BigInt::from(x[i] + offset) * &next[i] + &cur[i + 1];
        }
        next = cur;
    }
    next.swap_remove(0)
}

/// `h*_k` via the last-variable recurrence
///
/// ```text
/// h*_k(x₁,…,x_j) = x_j · h*_{k−1}(x₁−1,…,x_j−1) + h*_k(x₁,…,x_{j−1})
/// ```
///
/// with `h*_0 = 1` and `h*_k() = 0` for `k ≥ 1`. Every call reached from
/// `h*_K(x)` evaluates `h*_k` on a prefix shifted by `K − k`, so the memo
/// key is `(k, prefix length)`.
pub fn h_star_rec(k: usize, pt: &Point) -> ExactInt {
    fn go(k: usize, j: usize, top: usize, x: &[i64], memo: &mut HashMap<(usize, usize), ExactInt>) -> ExactInt {
        if k == 0 {
            return BigInt::one();
        }
        if j == 0 {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(k, j)) {
            return v.clone();
        }
        let shift = (top - k) as i64;
        let last = BigInt::from(x[j - 1] - shift);
        let v = last * go(k - 1, j, top, x, memo) + go(k, j - 1, top, x, memo);
        memo.insert((k, j), v.clone());
        v
    }
    let x = pt.coords();
    go(k, x.len(), k, x, &mut HashMap::new())
}

/// `h*_k(x, λ^l, y)`: the point `x` followed by `l` copies of `lam` and
/// then `y`, evaluated by grouping the tableau expansion by how many indices
/// land on `y` (`j`) and on the middle block (`r`):
///
/// ```text
/// Σ_j Σ_r C(r+l−1, l−1) (x−j−r ↓ k−j−r)(lam−j ↓ r)(y ↓ j)
/// ```
pub fn h_star_banded(k: usize, x: i64, lam: i64, l: usize, y: i64) -> ExactInt {
    assert!(l >= 1, "band multiplicity must be at least 1");
    let mut total = BigInt::zero();
    for j in 0..=k {
        let tail = falling_i64(y, j);
        if tail.is_zero() {
            continue;
        }
        for r in 0..=(k - j) {
            let ways = binomial(BigInt::from(r + l - 1), BigInt::from(l - 1));
            let head = falling_i64(x - (j + r) as i64, k - j - r);
            let mid = falling_i64(lam - j as i64, r);
            total += ways * head * mid * &tail;
        }
    }
    total
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Shifted Schur polynomial `s*_μ(x₁,…,x_n)` as the determinant ratio
///
/// ```text
/// det[(x_i + n − i ↓ μ_j + n − j)] / det[(x_i + n − i ↓ n − j)]
/// ```
///
/// where `n` is the larger of `ℓ(μ)` and the number of arguments; the point
/// is padded with zeros to that length.
pub fn s_star(mu: &Partition, pt: &Point) -> Result<BigRational, ShiftedError> {
    let n = mu.len().max(pt.len());
    let shifted: Vec<BigInt> = (0..n)
        .map(|i| BigInt::from(pt.coords().get(i).copied().unwrap_or(0) + (n - 1 - i) as i64))
        .collect();
    let matrix = |exps: &dyn Fn(usize) -> usize| -> Vec<Vec<BigInt>> {
        shifted
            .iter()
            .map(|y| (0..n).map(|j| falling(y, exps(j))).collect())
            .collect()
    };
    let num = bareiss_det(matrix(&|j| mu.part(j) + n - 1 - j));
    let den = bareiss_det(matrix(&|j| n - 1 - j));
    if den.is_zero() {
        return Err(ShiftedError::DenominatorZero);
    }
    Ok(BigRational::new(num, den))
}

/// A skew diagram `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShiftedError> {
        if !outer.contains(&inner) {
            return Err(ShiftedError::InnerNotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// Number of standard tableaux of a skew shape, counted by growing the
/// inner shape one box at a time. Shapes above [`DEFAULT_SKEW_CAP`] cells
/// are refused.
pub fn skew_syt_count(shape: &SkewShape) -> Result<ExactInt, ShiftedError> {
    skew_syt_count_capped(shape, DEFAULT_SKEW_CAP)
}

pub fn skew_syt_count_capped(shape: &SkewShape, cap: usize) -> Result<ExactInt, ShiftedError> {
    let cells = shape.cells();
    if cells > cap {
        return Err(ShiftedError::ShapeTooLarge { cells, cap });
    }
    fn grow(cur: &mut Vec<usize>, outer: &[usize], memo: &mut HashMap<Vec<usize>, ExactInt>) -> ExactInt {
        if cur.as_slice() == outer {
            return BigInt::one();
        }
        if let Some(v) = memo.get(cur.as_slice()) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..outer.len() {
            let above = if i == 0 { usize::MAX } else { cur[i - 1] };
            if cur[i] < outer[i] && cur[i] < above {
                cur[i] += 1;
                total += grow(cur, outer, memo);
                cur[i] -= 1;
            }
        }
        memo.insert(cur.clone(), total.clone());
        total
    }
    let outer = shape.outer.parts();
    let mut cur: Vec<usize> = (0..outer.len()).map(|i| shape.inner.part(i)).collect();
    Ok(grow(&mut cur, outer, &mut HashMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pt(v: &[i64]) -> Point {
        Point::new(v.to_vec())
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Literal multiset sum, for small k and m only.
    fn h_star_brute(k: usize, x: &[i64]) -> BigInt {
        fn rec(t: usize, start: usize, k: usize, x: &[i64], acc: BigInt) -> BigInt {
            if t > k {
                return acc;
            }
            (start..x.len())
                .map(|i| rec(t + 1, i, k, x, &acc * (x[i] - k as i64 + t as i64)))
                .sum()
        }
        rec(1, 0, k, x, BigInt::one())
    }

    #[test]
    fn falling_values() {
        assert_eq!(falling(&int(17), 0), int(1));
        assert_eq!(falling(&int(-4), 0), int(1));
        assert_eq!(falling(&int(5), 2), int(20));
        assert_eq!(falling(&int(3), 5), int(0));
        assert_eq!(falling(&int(-2), 3), int(-24));
    }

    #[test]
    fn h_star_small_cases() {
        assert_eq!(h_star(0, &pt(&[4, 2])), int(1));
        assert_eq!(h_star(0, &pt(&[])), int(1));
        assert_eq!(h_star(1, &pt(&[5, 3, 3, 1])), int(12));
        assert_eq!(h_star(3, &pt(&[7])), int(5 * 6 * 7));
        assert_eq!(h_star(2, &pt(&[])), int(0));

        assert_eq!(h_star_rec(1, &pt(&[2, 2])), int(4));
        assert_eq!(h_star_rec(2, &pt(&[3, 1])), int(8));
        assert_eq!(h_star_rec(0, &pt(&[])), int(1));
        assert_eq!(h_star(2, &pt(&[3, 1])), int(8));
    }

    #[test]
    fn h_star_matches_literal_sum() {
        let points: [&[i64]; 6] = [
            &[3, 1],
            &[4, 4, 2],
            &[5, 0, 2, 7],
            &[1, 1, 1, 1, 1],
            &[6, 3, 3, 2, 1, 1],
            &[0, 9],
        ];
        for x in points {
            for k in 0..=8 {
                let want = h_star_brute(k, x);
                assert_eq!(h_star(k, &pt(x)), want, "k={k} x={x:?}");
                assert_eq!(h_star_rec(k, &pt(x)), want, "k={k} x={x:?}");
            }
        }
    }

    #[test]
    fn banded_examples() {
        assert_eq!(h_star_banded(2, 2, 2, 1, 2), h_star(2, &pt(&[2, 2, 2])));
        assert_eq!(h_star_banded(0, 5, 3, 2, 1), int(1));
        assert_eq!(h_star_banded(2, 3, 2, 2, 1), h_star(2, &pt(&[3, 2, 2, 1])));
    }

    #[test]
    fn s_star_examples() {
        let one = |v: i64| BigRational::from_integer(int(v));
        assert_eq!(s_star(&p("3"), &(&p("2,2")).into()).unwrap(), one(0));
        assert_eq!(s_star(&p("2,1"), &(&p("2,1")).into()).unwrap(), one(3));
        assert_eq!(s_star(&p("()"), &(&p("4,1")).into()).unwrap(), one(1));
        assert_eq!(s_star(&p("2"), &(&p("3,1")).into()).unwrap(), one(8));
        // coinciding shifted arguments: x₁ + 1 = x₂
        assert_eq!(s_star(&p("1"), &pt(&[1, 2])), Err(ShiftedError::DenominatorZero));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        fn cofactor(a: &[Vec<BigInt>]) -> BigInt {
            if a.is_empty() {
                return BigInt::one();
            }
            (0..a.len())
                .map(|j| {
                    let minor: Vec<Vec<BigInt>> = a[1..]
                        .iter()
                        .map(|row| {
                            row.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != j)
                                .map(|(_, v)| v.clone())
                                .collect()
                        })
                        .collect();
                    let term = &a[0][j] * cofactor(&minor);
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        }
        let m: Vec<Vec<BigInt>> = [[0, 2, 1, 3], [4, 0, 0, 1], [2, 5, 7, 0], [1, 1, 0, 0]]
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        assert_eq!(bareiss_det(m.clone()), cofactor(&m));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(bareiss_det(singular), int(0));
    }

    #[test]
    fn skew_counts() {
        let count = |o: &str, i: &str| skew_syt_count(&SkewShape::new(p(o), p(i)).unwrap()).unwrap();
        assert_eq!(count("3,1", "()"), int(3));
        assert_eq!(count("3,2,1", "3,2,1"), int(1));
        assert_eq!(count("2,2", "1"), int(2));
        assert_eq!(count("4,3,2", "()"), p("4,3,2").dim());
        assert!(matches!(
            SkewShape::new(p("2,2"), p("3")),
            Err(ShiftedError::InnerNotContained { .. })
        ));
        let big = SkewShape::new(p("7,6"), p("()")).unwrap();
        assert_eq!(
            skew_syt_count(&big),
            Err(ShiftedError::ShapeTooLarge { cells: 13, cap: 12 })
        );
        assert!(skew_syt_count_capped(&big, 13).is_ok());
    }
}
