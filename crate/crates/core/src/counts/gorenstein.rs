use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::memo::MemoTable;

/// How the inner sum of `f(n, d)` is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Summation {
    /// Every `k = 1..=d`, over a full `(n_max + 1)²` table.
    Plain,
    /// Only the `k` with `k (d + 1 - k) <= n`. That set is a prefix and a
    /// suffix of `1..=d`, each shorter than `√n`; every other summand has a
    /// negative first argument and vanishes. Rows also stop at `d = n`
    /// because `f(n, d) = 0` for `d > n > 0`.
    Windowed,
}

/// Table of
///
/// ```text
/// f(n, d) = 0                                  if n < 0
///         = 1                                  if n = 0
///         = sum_{k=1..d} f(n - k(d+1-k), d-k)  otherwise
/// ```
///
/// whose row sums `sum_{d=0..n} f(n, d)` count Gorenstein partitions of `n`.
#[derive(Clone, Debug)]
pub struct GorensteinTable {
    n_max: usize,
    summation: Summation,
    rows: MemoTable,
}

impl GorensteinTable {
    pub fn build(n_max: usize, summation: Summation) -> Self {
        let mut table = GorensteinTable {
            n_max,
            summation,
            rows: MemoTable::new(),
        };
        let width = |n: usize| match summation {
            Summation::Plain => n_max + 1,
            Summation::Windowed => n + 1,
        };
        table.rows.push_row(vec![BigUint::one(); width(0)]);
        for n in 1..=n_max {
            let row = (0..width(n))
                .map(|d| match summation {
                    Summation::Plain => (1..=d).map(|k| table.f(n as i64 - (k * (d + 1 - k)) as i64, d - k)).sum(),
                    Summation::Windowed => table.windowed(n, d),
                })
                .collect();
            table.rows.push_row(row);
        }
        table
    }

    fn windowed(&self, n: usize, d: usize) -> BigUint {
        let weight = |k: usize| k * (d + 1 - k);
        let mut total = BigUint::zero();
        let mut low_end = 0;
        for k in 1..=d {
            if weight(k) > n {
                break;
            }
            total += self.f((n - weight(k)) as i64, d - k);
            low_end = k;
        }
        for k in (low_end + 1..=d).rev() {
            if weight(k) > n {
                break;
            }
            total += self.f((n - weight(k)) as i64, d - k);
        }
        total
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn f(&self, n: i64, d: usize) -> BigUint {
        if n < 0 {
            return BigUint::zero();
        }
        if n == 0 {
            return BigUint::one();
        }
        let n = n as usize;
        match self.rows.get(n, d) {
            Some(v) => v.clone(),
            None if self.summation == Summation::Windowed && d > n => BigUint::zero(),
            None => panic!("f({n}, {d}) is outside the table"),
        }
    }

    /// Number of Gorenstein partitions of `n`.
    pub fn count(&self, n: usize) -> BigUint {
        (0..=n).map(|d| self.f(n as i64, d)).sum()
    }
}

pub fn gorenstein_count(n: usize) -> BigUint {
    GorensteinTable::build(n, Summation::Windowed).count(n)
}
