use num_bigint::BigUint;
use num_traits::One;

use super::memo::MemoTable;

/// Table of the two-index recurrence whose `a(k, 1)` is `|I_k(321)|`:
///
/// ```text
/// a(0, m) = 1
/// a(n, 1) = sum_{i=1..n} a(n-i, i)
/// a(n, m) = a(n, m-1) + sum_{i=m..n} a(n-i, i)
/// ```
///
/// Only lookups with `n + m <= k_max` are ever made, and `a(n, m) = a(n, n)`
/// once `m > n`, so row `n` keeps `m = 1..=min(n, k_max - n)`. The inner
/// sums are suffix sums built once per row, which keeps the whole build at
/// O(k_max²) additions.
#[derive(Clone, Debug)]
pub struct Avoid321Table {
    k_max: usize,
    rows: MemoTable,
}

impl Avoid321Table {
    pub fn build(k_max: usize) -> Self {
        let mut table = Avoid321Table {
            k_max,
            rows: MemoTable::new(),
        };
        table.rows.push_row(vec![BigUint::one()]);
        for n in 1..=k_max {
            let keep = n.min(k_max - n).max(1);
            // suffix[m - 1] = sum_{i=m..n} a(n-i, i)
            let mut suffix = vec![BigUint::default(); keep];
            let mut acc = BigUint::default();
            for i in (1..=n).rev() {
                acc += table.stored(n - i, i);
                if i <= keep {
                    suffix[i - 1] = acc.clone();
                }
            }
            let mut row = Vec::with_capacity(keep);
            let mut running = BigUint::default();
            for s in suffix {
                running += s;
                row.push(running.clone());
            }
            table.rows.push_row(row);
        }
        table
    }

    fn stored(&self, n: usize, m: usize) -> &BigUint {
        if n == 0 {
            return &self.rows.row(0).unwrap()[0];
        }
        self.rows
            .get(n, m.min(n) - 1)
            .expect("lookup inside the stored triangle")
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `a(n, m)` for `m >= 1`, available when `n + m <= k_max` (and for `m = 1`).
    pub fn a(&self, n: usize, m: usize) -> Option<BigUint> {
        if m == 0 || n > self.k_max {
            return None;
        }
        if n == 0 {
            return Some(BigUint::one());
        }
        let row = self.rows.row(n)?;
        row.get(m.min(n) - 1).cloned()
    }

    /// `|I_k(321)| = a(k, 1)`.
    pub fn count(&self, k: usize) -> Option<&BigUint> {
        if k > self.k_max {
            return None;
        }
        Some(self.stored(k, 1))
    }

    pub fn stored_entries(&self) -> usize {
        self.rows.entries()
    }
}

pub fn avoid321_a(n: usize, m: usize) -> BigUint {
    assert!(m >= 1, "a(n, m) is defined for m >= 1");
    Avoid321Table::build(n + m)
        .a(n, m)
        .expect("table covers the request")
}

pub fn count_i321(k: usize) -> BigUint {
    Avoid321Table::build(k).count(k).unwrap().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// Direct memoized evaluation of the three-case recurrence.
    fn naive(n: usize, m: usize, memo: &mut HashMap<(usize, usize), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(n, m)) {
            return v;
        }
        let tail: u64 = (m..=n).map(|i| naive(n - i, i, memo)).sum();
        let v = if m == 1 { tail } else { naive(n, m - 1, memo) + tail };
        memo.insert((n, m), v);
        v
    }

    #[test]
    fn examples() {
        assert_eq!(avoid321_a(0, 5), BigUint::from(1u32));
        assert_eq!(avoid321_a(3, 1), BigUint::from(4u32));
        assert_eq!(avoid321_a(4, 1), BigUint::from(9u32));
        assert_eq!(avoid321_a(2, 2), BigUint::from(3u32));
    }

    #[test]
    fn agrees_with_naive_recurrence() {
        let mut memo = HashMap::new();
        let table = Avoid321Table::build(30);
        for n in 0..=30 {
            for m in 1..=30 - n + 1 {
                if let Some(v) = table.a(n, m) {
                    assert_eq!(v, BigUint::from(naive(n, m, &mut memo)), "a({n},{m})");
                }
            }
        }
    }

    #[test]
    fn first_terms() {
        let table = Avoid321Table::build(12);
        let got: Vec<String> = (0..=12).map(|k| table.count(k).unwrap().to_string()).collect();
        assert_eq!(
            got,
            ["1", "1", "2", "4", "9", "20", "46", "105", "242", "557", "1285", "2964", "6842"]
        );
    }

    #[test]
    fn storage_is_quadratic() {
        let table = Avoid321Table::build(200);
        assert!(table.stored_entries() <= 200 * 200 / 4 + 201);
    }
}
