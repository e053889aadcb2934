use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};

use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::series::triangular_series_squared;

pub const I123_BOUND: usize = 60;

/// `|I_k(123)|` counted on inversion tables: indecomposable subdiagonal
/// sequences of sum `k` whose non-diagonal entries strictly decrease from
/// left to right.
pub fn count_i123(k: usize) -> Result<BigUint> {
    if k > I123_BOUND {
        return Err(Error::Limit {
            what: "123 count k",
            requested: k,
            bound: I123_BOUND,
        });
    }
    let mut total = 0u64;
    for n in 1..=k + 1 {
        let mut walk = Walk { n, count: 0 };
        walk.step(0, k, 0, None);
        total += walk.count;
    }
    Ok(BigUint::from(total))
}

struct Walk {
    n: usize,
    count: u64,
}

impl Walk {
    /// Chooses entry `i`; `reach` is `max(b_j + j)` over earlier positions
    /// and `last` the latest non-diagonal entry.
    fn step(&mut self, i: usize, rest: usize, reach: usize, last: Option<usize>) {
        let n = self.n;
        if i == n {
            if rest == 0 {
                self.count += 1;
            }
            return;
        }
        let max = n - 1 - i;
        let free = n - 1 - i;
        // positions after i hold at most (free)(free - 1)/2
        let capacity_after = free * free.saturating_sub(1) / 2;
        for b in 0..=max.min(rest) {
            if rest - b > capacity_after {
                continue;
            }
            let diagonal = b == max;
            if !diagonal && last.is_some_and(|l| b >= l) {
                continue;
            }
            let reach = reach.max(b + i);
            // prefix 0..=i forms 1..=i+1: decomposable
            if i + 1 < n && reach <= i {
                continue;
            }
            let last = if diagonal { last } else { Some(b) };
            self.step(i + 1, rest - b, reach, last);
        }
    }
}

/// The same count through the decomposition of all 123-avoiders: the
/// decomposable ones are sums of two decreasing blocks, counted by the
/// square of the triangular-exponent series.
pub fn count_i123_by_subtraction(oracle: &Oracle, k: usize) -> Result<BigUint> {
    let total = BigUint::from(oracle.total_123_avoiders(k)?);
    let pairs = triangular_series_squared(k + 1).coefficient(k)?;
    let pairs = pairs.to_biguint().expect("coefficients are nonnegative");
    total
        .checked_sub(&pairs)
        .ok_or_else(|| Error::Domain(format!("subtraction went negative at k={k}")))
}

/// The printed three-index recurrence for all 123-avoiders, evaluated as
/// written with its unbound `l` read as `k`:
///
/// ```text
/// c(n, m, k) = 0                                                   if n < 0 or k < 0
///            = 1                                                   if n = k = 0
///            = c(n-1, m, k-n+1) + sum_{i=0..min(n-2, m-1)} c(n-1, i, k-i)  otherwise
/// ```
///
/// Its totals disagree with brute force from `k = 1` on, so it is kept
/// only for side-by-side reporting and never used as a count.
#[derive(Debug, Default)]
pub struct PrintedRecurrence123 {
    memo: HashMap<(i64, i64, i64), BigUint>,
}

impl PrintedRecurrence123 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn c(&mut self, n: i64, m: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 {
            return BigUint::zero();
        }
        if n == 0 && k == 0 {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(&(n, m, k)) {
            return v.clone();
        }
        let mut v = self.c(n - 1, m, k - n + 1);
        let top = (n - 2).min(m - 1);
        for i in 0..=top {
            v += self.c(n - 1, i, k - i);
        }
        self.memo.insert((n, m, k), v.clone());
        v
    }

    /// `sum_{n=0..k+1} c(n, n, k)`, the claimed total of 123-avoiders.
    pub fn total(&mut self, k: usize) -> BigUint {
        let k = k as i64;
        (0..=k + 1).map(|n| self.c(n, n, k)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn table_count_examples() {
        assert_eq!(count_i123(0).unwrap(), n(1));
        assert_eq!(count_i123(3).unwrap(), n(3));
        assert_eq!(count_i123(4).unwrap(), n(5));
        assert!(count_i123(I123_BOUND + 1).is_err());
    }

    #[test]
    fn table_count_matches_frozen_brute_force() {
        let expected = [1u32, 1, 2, 3, 5, 7, 9, 14, 18, 20, 29];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(count_i123(k).unwrap(), n(e), "k={k}");
        }
    }

    #[test]
    fn subtraction_route() {
        let o = Oracle::default();
        for k in 0..=8 {
            assert_eq!(count_i123_by_subtraction(&o, k).unwrap(), count_i123(k).unwrap());
        }
    }

    #[test]
    fn printed_recurrence_values() {
        let mut r = PrintedRecurrence123::new();
        assert_eq!(r.c(0, 0, 0), n(1));
        assert_eq!(r.total(0), n(2));
        assert_eq!(r.total(1), n(1));
        assert_eq!(r.total(2), n(2));
    }
}
