//! Exact binomial coefficients with the zero convention `C(p, q) = 0` for
//! `p < q`, plus the arc-count formulas built on top of them.
//!
//! All arithmetic is checked. Nothing in this crate wraps silently: a count
//! that does not fit in 64 bits surfaces as [`Error::Overflow`].

use std::fmt;
use std::iter::Sum;

use crate::error::{Error, Result};

/// A non-negative exact count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(u64);

impl ExactCount {
    pub const ZERO: ExactCount = ExactCount(0);
    pub const ONE: ExactCount = ExactCount(1);

    pub const fn new(value: u64) -> Self {
        ExactCount(value)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, rhs: ExactCount) -> Result<ExactCount> {
        self.0
            .checked_add(rhs.0)
            .map(ExactCount)
            .ok_or(Error::Overflow("sum"))
    }

    pub fn checked_mul(self, rhs: ExactCount) -> Result<ExactCount> {
        self.0
            .checked_mul(rhs.0)
            .map(ExactCount)
            .ok_or(Error::Overflow("product"))
    }

    /// Subtraction; going below zero is reported as an overflow.
    pub fn checked_sub(self, rhs: ExactCount) -> Result<ExactCount> {
        self.0
            .checked_sub(rhs.0)
            .map(ExactCount)
            .ok_or(Error::Overflow("difference"))
    }

    pub fn checked_pow(self, exp: u64) -> Result<ExactCount> {
        let exp = u32::try_from(exp).map_err(|_| Error::Overflow("power"))?;
        self.0
            .checked_pow(exp)
            .map(ExactCount)
            .ok_or(Error::Overflow("power"))
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(v)
    }
}

impl From<ExactCount> for u64 {
    fn from(v: ExactCount) -> Self {
        v.0
    }
}

impl PartialEq<u64> for ExactCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Checked sum over an iterator of counts.
pub fn checked_sum<I>(items: I) -> Result<ExactCount>
where
    I: IntoIterator<Item = ExactCount>,
{
    items
        .into_iter()
        .try_fold(ExactCount::ZERO, |acc, x| acc.checked_add(x))
}

// Only used where overflow is impossible by construction (bounded test data).
impl Sum for ExactCount {
    fn sum<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        checked_sum(iter).expect("ExactCount sum overflowed")
    }
}

/// `C(p, q)`, or 0 when `p < q`. Negative arguments are a usage error.
pub fn binom(p: i64, q: i64) -> Result<ExactCount> {
    if p < 0 || q < 0 {
        return Err(Error::usage(format!(
            "binomial coefficient needs non-negative arguments, got C({p}, {q})"
        )));
    }
    choose(p as u64, q as u64)
}

/// `C(p, q)` for unsigned arguments.
pub fn choose(p: u64, q: u64) -> Result<ExactCount> {
    if q > p {
        return Ok(ExactCount::ZERO);
    }
    let q = q.min(p - q);
    // Each partial product is C(p, i + 1) <= C(p, q), so checking the running
    // value against u64 bounds every intermediate.
    let mut acc: u128 = 1;
    for i in 0..q {
        acc = acc * u128::from(p - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(ExactCount(acc as u64))
}

fn check_bipartite_params(m: usize, n: usize, h: usize, k: usize) -> Result<()> {
    if h >= 1 && m >= h && k >= 1 && n >= k {
        Ok(())
    } else {
        Err(Error::usage(format!(
            "parameters must satisfy m >= h >= 1 and n >= k >= 1, got m={m} n={n} h={h} k={k}"
        )))
    }
}

/// Number of arcs of an `[h-k]`-bipartite hypertournament of order `m x n`:
/// `C(m, h) * C(n, k)`.
pub fn arc_count(m: usize, n: usize, h: usize, k: usize) -> Result<ExactCount> {
    check_bipartite_params(m, n, h, k)?;
    choose(m as u64, h as u64)?.checked_mul(choose(n as u64, k as u64)?)
}

/// Arcs containing a fixed vertex of `U`: `C(m-1, h-1) * C(n, k)`.
pub fn u_incidence(m: usize, n: usize, h: usize, k: usize) -> Result<ExactCount> {
    check_bipartite_params(m, n, h, k)?;
    choose(m as u64 - 1, h as u64 - 1)?.checked_mul(choose(n as u64, k as u64)?)
}

/// Arcs containing a fixed vertex of `V`: `C(m, h) * C(n-1, k-1)`.
pub fn v_incidence(m: usize, n: usize, h: usize, k: usize) -> Result<ExactCount> {
    check_bipartite_params(m, n, h, k)?;
    choose(m as u64, h as u64)?.checked_mul(choose(n as u64 - 1, k as u64 - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> u128 {
        (1..=u128::from(n)).product()
    }

    fn factorial_oracle(p: u64, q: u64) -> u64 {
        if p < q {
            0
        } else {
            (factorial(p) / (factorial(q) * factorial(p - q))) as u64
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(4, 2).unwrap(), 6);
        assert_eq!(binom(2, 3).unwrap(), 0);
        assert_eq!(binom(5, 0).unwrap(), 1);
        assert_eq!(binom(0, 0).unwrap(), 1);
    }

    #[test]
    fn negative_arguments_rejected() {
        assert!(matches!(binom(-1, 0), Err(Error::Usage(_))));
        assert!(matches!(binom(3, -2), Err(Error::Usage(_))));
    }

    #[test]
    fn matches_factorial_oracle() {
        for p in 0..=30 {
            for q in 0..=30 {
                assert_eq!(choose(p, q).unwrap(), factorial_oracle(p, q), "C({p},{q})");
            }
        }
    }

    #[test]
    fn zero_exactly_below_diagonal_and_unit_edges() {
        for p in 0..=30u64 {
            for q in 0..=30u64 {
                assert_eq!(choose(p, q).unwrap() == 0, p < q);
            }
            assert_eq!(choose(p, p).unwrap(), 1);
            assert_eq!(choose(p, 0).unwrap(), 1);
        }
    }

    #[test]
    fn pascal_identity() {
        for p in 1..=60u64 {
            for q in 1..=p {
                let lhs = choose(p, q).unwrap();
                let rhs = choose(p - 1, q)
                    .unwrap()
                    .checked_add(choose(p - 1, q - 1).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn largest_central_coefficient_fits_and_next_overflows() {
        // C(66, 33) < 2^64 < C(68, 34)
        assert_eq!(choose(66, 33).unwrap(), 7_219_428_434_016_265_740);
        assert_eq!(choose(68, 34), Err(Error::Overflow("binomial coefficient")));
        assert_eq!(choose(1000, 2).unwrap(), 499_500);
    }

    #[test]
    fn arc_counts() {
        assert_eq!(arc_count(2, 2, 2, 2).unwrap(), 1);
        assert_eq!(
            arc_count(3, 2, 2, 2).unwrap(),
            factorial_oracle(3, 2) * factorial_oracle(2, 2)
        );
        assert_eq!(arc_count(3, 2, 2, 2).unwrap(), 3);
        assert_eq!(arc_count(3, 3, 2, 2).unwrap(), 9);
        assert!(matches!(arc_count(1, 2, 2, 2), Err(Error::Usage(_))));
        assert!(matches!(arc_count(2, 2, 0, 1), Err(Error::Usage(_))));
    }

    #[test]
    fn arc_count_overflow_propagates() {
        assert!(matches!(arc_count(68, 68, 34, 34), Err(Error::Overflow(_))));
        assert!(matches!(arc_count(60, 60, 30, 30), Err(Error::Overflow(_))));
    }

    #[test]
    fn incidences() {
        assert_eq!(u_incidence(3, 2, 2, 2).unwrap(), 2);
        assert_eq!(v_incidence(3, 2, 2, 2).unwrap(), 3);
        assert_eq!(u_incidence(3, 3, 2, 2).unwrap(), 6);
        assert_eq!(v_incidence(3, 3, 2, 2).unwrap(), 6);
    }

    #[test]
    fn checked_ops() {
        let big = ExactCount::new(u64::MAX);
        assert!(big.checked_add(ExactCount::ONE).is_err());
        assert!(ExactCount::ZERO.checked_sub(ExactCount::ONE).is_err());
        assert_eq!(ExactCount::new(4).checked_pow(9).unwrap(), 262_144);
        assert!(ExactCount::new(2).checked_pow(64).is_err());
    }
}
