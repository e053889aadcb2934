//! Exhaustive ground truth for `I_k` and its pattern-restricted subsets.
//!
//! Permutations with `k` inversions are generated through their inversion
//! tables: subdiagonal sequences with entry sum `k`, visited in
//! lexicographic order (which is also lexicographic order of the
//! permutations). An indecomposable permutation with `k` inversions has at
//! most `k + 1` entries, so `I_k` is reached by capping the length there.
//!
//! The table view also gives a cheap decomposability test: the prefix of
//! length `i` is a permutation of `1..=i` exactly when `b_j + j <= i` for
//! every `j <= i`, so the generator can prune decomposable branches early.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::report::{CountReport, Method};

pub const DEFAULT_BOUND: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoiderQuery {
    pub k: usize,
    pub patterns: PatternSet,
    pub indecomposable_only: bool,
}

impl AvoiderQuery {
    pub fn new(k: usize, patterns: PatternSet) -> Self {
        AvoiderQuery {
            k,
            patterns,
            indecomposable_only: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: DEFAULT_BOUND,
        }
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Oracle { bound }
    }

    fn check(&self, k: usize) -> Result<()> {
        if k > self.bound {
            Err(Error::Limit {
                what: "oracle k",
                requested: k,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// All permutations of length `1..=max_length` with exactly `k`
    /// inversions, ordered by length and then lexicographically.
    pub fn permutations_with_inversions(&self, k: usize, max_length: usize) -> Result<Vec<Permutation>> {
        if max_length == 0 {
            return Err(Error::Domain("max_length must be at least 1".into()));
        }
        self.check(k)?;
        Ok(collect(k, 1..=max_length, false, |_| true))
    }

    /// The set `I_k`.
    pub fn indecomposables_with_inversions(&self, k: usize) -> Result<Vec<Permutation>> {
        self.check(k)?;
        Ok(collect(k, 1..=k + 1, true, |_| true))
    }

    pub fn enumerate_avoiders(&self, query: &AvoiderQuery) -> Result<Vec<Permutation>> {
        self.check(query.k)?;
        let k = query.k;
        let patterns = &query.patterns;
        if query.indecomposable_only {
            return Ok(collect(k, 1..=k + 1, true, |p| p.avoids_all(patterns)));
        }
        // Avoiding 12…m leaves at most m - 1 components, and c components
        // force n <= k + c.
        let Some(m) = patterns.longest_identity() else {
            return Err(Error::Domain(format!(
                "permutations with {k} inversions avoiding {{{patterns}}} form an infinite set"
            )));
        };
        let cap = k + m - 1;
        if cap == 0 {
            return Ok(Vec::new());
        }
        Ok(collect(k, 1..=cap, false, |p| p.avoids_all(patterns)))
    }

    pub fn count_avoiders(&self, query: &AvoiderQuery) -> Result<usize> {
        Ok(self.enumerate_avoiders(query)?.len())
    }

    /// `|I_k(patterns)|` for `k = 0..=k_max`.
    pub fn avoider_sequence(&self, patterns: &PatternSet, k_max: usize) -> Result<CountReport> {
        self.check(k_max)?;
        let start = Instant::now();
        let mut report = CountReport::new(patterns, Method::Oracle);
        for k in 0..=k_max {
            let n = self.count_avoiders(&AvoiderQuery::new(k, patterns.clone()))?;
            report.push(k, n);
        }
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    }

    /// All 123-avoiders with `k` inversions, decomposable ones included.
    /// They have at most two components, so length `k + 2` suffices.
    pub fn total_123_avoiders(&self, k: usize) -> Result<usize> {
        let query = AvoiderQuery {
            k,
            patterns: PatternSet::new([Permutation::identity(3)])?,
            indecomposable_only: false,
        };
        let found = self.enumerate_avoiders(&query)?;
        debug_assert!(found.iter().all(|p| p.component_count() <= 2));
        Ok(found.len())
    }
}

/// Runs the table walk for every length in `lengths`, split into parallel
/// tasks by `(length, first entry)` and merged in order.
fn collect(
    k: usize,
    lengths: std::ops::RangeInclusive<usize>,
    indecomposable_only: bool,
    keep: impl Fn(&Permutation) -> bool + Sync,
) -> Vec<Permutation> {
    let tasks: Vec<(usize, usize)> = lengths
        .flat_map(|n| (0..=k.min(n - 1)).map(move |b1| (n, b1)))
        .collect();
    tasks
        .into_par_iter()
        .map(|(n, b1)| {
            let mut out = Vec::new();
            let mut walk = TableWalk::new(n, k, indecomposable_only);
            walk.run_from(b1, &mut |values| {
                let p = Permutation::from_vec_unchecked(values.to_vec());
                if keep(&p) {
                    out.push(p);
                }
            });
            out
        })
        .flatten()
        .collect()
}

/// Depth-first walk over subdiagonal sequences of length `n` and sum `k`,
/// decoding the permutation on the fly.
struct TableWalk {
    n: usize,
    indecomposable_only: bool,
    remaining: Vec<usize>,
    values: Vec<usize>,
    rest: usize,
}

impl TableWalk {
    fn new(n: usize, k: usize, indecomposable_only: bool) -> Self {
        TableWalk {
            n,
            indecomposable_only,
            remaining: (1..=n).collect(),
            values: Vec::with_capacity(n),
            rest: k,
        }
    }

    /// Capacity of positions `i..n` (0-based).
    fn capacity_from(&self, i: usize) -> usize {
        let free = self.n - i;
        free * free.saturating_sub(1) / 2
    }

    fn run_from(&mut self, first: usize, visit: &mut dyn FnMut(&[usize])) {
        self.place(0, first, 0, visit);
    }

    /// Places entry `b` at position `i`; `reach` is the running maximum of
    /// `b_j + j` before `i`.
    fn place(&mut self, i: usize, b: usize, reach: usize, visit: &mut dyn FnMut(&[usize])) {
        let n = self.n;
        if b > n - 1 - i || b > self.rest {
            return;
        }
        let rest = self.rest - b;
        if rest > self.capacity_from(i + 1) {
            return;
        }
        let reach = reach.max(b + i);
        if self.indecomposable_only && i + 1 < n && reach <= i {
            return;
        }
        let v = self.remaining.remove(b);
        self.values.push(v);
        self.rest = rest;
        if i + 1 == n {
            if rest == 0 {
                visit(&self.values);
            }
        } else {
            for next in 0..=rest.min(n - 2 - i) {
                self.place(i + 1, next, reach, visit);
            }
        }
        self.rest = rest + b;
        self.values.pop();
        self.remaining.insert(b, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn perms(list: &[&str]) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = list.iter().map(|s| s.parse().unwrap()).collect();
        v.sort();
        v
    }

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn permutations_with_inversions_examples() {
        let o = Oracle::default();
        assert_eq!(
            o.permutations_with_inversions(1, 3).unwrap(),
            perms(&["21", "132", "213"])
        );
        assert_eq!(o.permutations_with_inversions(0, 2).unwrap(), perms(&["1", "12"]));
        assert_eq!(o.permutations_with_inversions(2, 3).unwrap(), perms(&["231", "312"]));
        assert!(o.permutations_with_inversions(2, 0).is_err());
    }

    #[test]
    fn indecomposables_examples() {
        let o = Oracle::default();
        assert_eq!(o.indecomposables_with_inversions(2).unwrap(), perms(&["231", "312"]));
        assert_eq!(
            o.indecomposables_with_inversions(3).unwrap(),
            perms(&["321", "4123", "3142", "2413", "2341"])
        );
        let four = o.indecomposables_with_inversions(4).unwrap();
        assert_eq!(four.len(), 13);
        assert_eq!(four.iter().filter(|p| p.len() == 4).count(), 5);
        assert_eq!(four.iter().filter(|p| p.len() == 5).count(), 8);
    }

    #[test]
    fn pruned_walk_matches_filtering() {
        let o = Oracle::default();
        for k in 0..=7 {
            let filtered: Vec<Permutation> = o
                .permutations_with_inversions(k, k + 1)
                .unwrap()
                .into_iter()
                .filter(Permutation::is_indecomposable)
                .collect();
            assert_eq!(o.indecomposables_with_inversions(k).unwrap(), filtered, "k={k}");
        }
    }

    #[test]
    fn generation_matches_brute_force() {
        let o = Oracle::default();
        for n in 1..=7 {
            let all = all_permutations(n);
            for k in 0..=n * (n - 1) / 2 {
                let expected: Vec<Permutation> =
                    all.iter().filter(|p| p.inversions() == k).cloned().collect();
                let got: Vec<Permutation> = o
                    .permutations_with_inversions(k.min(o.bound), n)
                    .unwrap()
                    .into_iter()
                    .filter(|p| p.len() == n)
                    .collect();
                if k <= o.bound {
                    assert_eq!(got, expected, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn count_avoiders_examples() {
        let o = Oracle::default();
        let q = |k, s: &str| AvoiderQuery::new(k, set(s));
        assert_eq!(
            o.enumerate_avoiders(&q(3, "132")).unwrap(),
            perms(&["321", "4123", "2341"])
        );
        assert_eq!(o.count_avoiders(&q(4, "321")).unwrap(), 9);
        for k in 0..=6 {
            assert_eq!(o.count_avoiders(&q(k, "1")).unwrap(), 0);
        }
    }

    #[test]
    fn avoider_sequence_examples() {
        let o = Oracle::default();
        let seq = |s: &str, k| {
            o.avoider_sequence(&set(s), k)
                .unwrap()
                .values()
                .into_iter()
                .map(|v| v.to_string().parse::<usize>().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(seq("321", 4), vec![1, 1, 2, 4, 9]);
        assert_eq!(seq("132", 4), vec![1, 1, 2, 3, 5]);
        assert_eq!(seq("12", 6), vec![1, 1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn total_123_examples() {
        let o = Oracle::default();
        let got: Vec<usize> = (0..=2).map(|k| o.total_123_avoiders(k).unwrap()).collect();
        assert_eq!(got, vec![2, 3, 3]);
    }

    #[test]
    fn unbounded_query_rejected() {
        let o = Oracle::default();
        let q = AvoiderQuery {
            k: 2,
            patterns: set("231"),
            indecomposable_only: false,
        };
        assert!(matches!(o.count_avoiders(&q), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_enforced() {
        let o = Oracle::with_bound(5);
        assert!(matches!(
            o.indecomposables_with_inversions(6),
            Err(Error::Limit { requested: 6, bound: 5, .. })
        ));
        assert!(o.avoider_sequence(&set("132"), 6).is_err());
        assert!(o.indecomposables_with_inversions(5).is_ok());
    }
}
