//! Permutations in one-line notation, inversion statistics, direct and skew
//! sums, the two inversion-preserving symmetries, classical pattern
//! containment and the inversion-table encoding.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` with `n >= 1`, stored in one-line notation.
///
/// Permutations order first by length and then lexicographically, which is
/// the canonical order used for reports and enumeration output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// Builds without validation. Callers guarantee the invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation((1..=n).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1);
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Splits into the maximal direct-sum factorization `c_1 ⊕ c_2 ⊕ …`.
    pub fn components(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.0.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                let block = self.0[start..=i].iter().map(|&x| x - start).collect();
                out.push(Permutation(block));
                start = i + 1;
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        let mut max = 0;
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &v)| {
                max = max.max(v);
                max == i + 1
            })
            .count()
    }

    pub fn is_decomposable(&self) -> bool {
        self.component_count() > 1
    }

    pub fn is_indecomposable(&self) -> bool {
        !self.is_decomposable()
    }

    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + shift));
        Permutation(v)
    }

    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len();
        let mut v: Vec<usize> = self.0.iter().map(|&x| x + shift).collect();
        v.extend_from_slice(&other.0);
        Permutation(v)
    }

    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().rev().map(|&x| n + 1 - x).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x - 1] = i + 1;
        }
        Permutation(v)
    }

    /// Classical containment: some subsequence is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let m = pattern.len();
        if m > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(m);
        embed(&self.0, &pattern.0, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, patterns: &PatternSet) -> bool {
        patterns.iter().all(|t| self.avoids(t))
    }

    /// `b_i` counts the values after position `i` that are smaller than `π_i`.
    pub fn inversion_table(&self) -> SubdiagonalSequence {
        let v = &self.0;
        let entries = (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
            .collect();
        SubdiagonalSequence(entries)
    }

    pub fn from_table(table: &SubdiagonalSequence) -> Permutation {
        let mut remaining: Vec<usize> = (1..=table.len()).collect();
        let values = table.0.iter().map(|&b| remaining.remove(b)).collect();
        Permutation(values)
    }
}

/// Tries to extend the partial occurrence `chosen` (positions in `text`) by
/// the next pattern letter.
fn embed(text: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    // leave room for the letters still to place
    let last = text.len() - (pattern.len() - j);
    for i in from..=last {
        let fits = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (text[c] < text[i]) == (p < pattern[j]));
        if fits {
            chosen.push(i);
            if embed(text, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"3142"`) or comma-separated values (`"10,1,2,…"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let values = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// Inversion table `b_1..b_n` with `b_i <= n - i` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubdiagonalSequence(Vec<usize>);

impl SubdiagonalSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (i, &b) in entries.iter().enumerate() {
            let max = n - 1 - i;
            if b > max {
                return Err(Error::NotSubdiagonal {
                    index: i + 1,
                    value: b,
                    max,
                });
            }
        }
        Ok(SubdiagonalSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Flag `i` is set when `b_i` sits at its maximum `n - i`.
    pub fn diagonal_flags(&self) -> Vec<bool> {
        let n = self.len();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| b == n - 1 - i)
            .collect()
    }

    /// Entries that are not at their maximum, left to right.
    pub fn non_diagonal_entries(&self) -> Vec<usize> {
        self.0
            .iter()
            .zip(self.diagonal_flags())
            .filter(|&(_, diag)| !diag)
            .map(|(&b, _)| b)
            .collect()
    }
}

pub fn permutation_from_table(table: &SubdiagonalSequence) -> Permutation {
    Permutation::from_table(table)
}

/// A nonempty, duplicate-free set of patterns in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet(BTreeSet<Permutation>);

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self> {
        let set: BTreeSet<Permutation> = patterns.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Domain("a pattern set must be nonempty".into()));
        }
        Ok(PatternSet(set))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse_complement(&self) -> PatternSet {
        PatternSet(self.0.iter().map(Permutation::reverse_complement).collect())
    }

    /// Length of the longest increasing pattern `12…m` in the set, if any.
    pub fn longest_identity(&self) -> Option<usize> {
        self.0
            .iter()
            .filter(|p| p.values().windows(2).all(|w| w[0] < w[1]))
            .map(Permutation::len)
            .max()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

/// Serialized as the list of pattern strings.
impl serde::Serialize for PatternSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.to_strings())
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(","))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated digit strings, e.g. `"132,213"`.
    fn from_str(s: &str) -> Result<Self> {
        let patterns = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let t = t.trim();
                if t.chars().all(|c| c.is_ascii_digit()) {
                    t.parse::<Permutation>()
                } else {
                    Err(Error::InvalidPermutation(format!("bad pattern {t:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        PatternSet::new(patterns)
    }
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation(v.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn table(v: &[usize]) -> SubdiagonalSequence {
        SubdiagonalSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inversions_examples() {
        assert_eq!(p("1").inversions(), 0);
        assert_eq!(p("231").inversions(), 2);
        assert_eq!(p("4321").inversions(), 6);
    }

    #[test]
    fn components_examples() {
        assert_eq!(p("3214").components(), vec![p("321"), p("1")]);
        assert_eq!(p("3142").components(), vec![p("3142")]);
        assert_eq!(p("1").components(), vec![p("1")]);
        assert_eq!(p("2143").components(), vec![p("21"), p("21")]);
        assert!(p("3214").is_decomposable());
        assert!(p("3142").is_indecomposable());
    }

    #[test]
    fn sums() {
        assert_eq!(p("1").direct_sum(&p("21")), p("132"));
        assert_eq!(p("21").direct_sum(&p("21")), p("2143"));
        assert_eq!(p("1").direct_sum(&p("1")), p("12"));
        assert_eq!(p("1").skew_sum(&p("1")), p("21"));
        assert_eq!(p("1").skew_sum(&p("21")), p("321"));
        assert_eq!(p("12").skew_sum(&p("1")), p("231"));
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("21").reverse_complement(), p("21"));
        assert_eq!(p("231").reverse_complement(), p("312"));
        assert_eq!(p("132").reverse_complement(), p("213"));
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(p("321").inverse(), p("321"));
        assert_eq!(p("12").inverse(), p("12"));
    }

    #[test]
    fn containment() {
        assert!(p("3142").contains(&p("132")));
        assert!(!p("321").contains(&p("123")));
        assert!(p("52413").contains(&p("52413")));
        assert!(!p("12").contains(&p("123")));
        assert!(p("4123").avoids(&p("231")));
    }

    #[test]
    fn tables() {
        assert_eq!(p("3142").inversion_table(), table(&[2, 0, 1, 0]));
        assert_eq!(p("123").inversion_table(), table(&[0, 0, 0]));
        assert_eq!(p("4213").inversion_table(), table(&[3, 1, 0, 0]));
        assert_eq!(permutation_from_table(&table(&[2, 0, 1, 0])), p("3142"));
        assert_eq!(permutation_from_table(&table(&[0, 0, 0])), p("123"));
        assert_eq!(permutation_from_table(&table(&[3, 0, 0, 0])), p("4123"));
    }

    #[test]
    fn malformed_table_rejected() {
        assert_eq!(
            SubdiagonalSequence::new(vec![0, 2, 0]),
            Err(Error::NotSubdiagonal {
                index: 2,
                value: 2,
                max: 1
            })
        );
        assert!(SubdiagonalSequence::new(vec![1]).is_err());
    }

    #[test]
    fn diagonal_flags_examples() {
        assert_eq!(table(&[2, 1, 0]).diagonal_flags(), vec![true; 3]);
        assert_eq!(
            table(&[3, 0, 0, 0]).diagonal_flags(),
            vec![true, false, false, true]
        );
        assert_eq!(table(&[0]).diagonal_flags(), vec![true]);
    }

    #[test]
    fn parsing_and_display() {
        let long: Permutation = "10,1,2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert_eq!("1,3,2".parse::<Permutation>().unwrap(), p("132"));
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        let set: PatternSet = "213,132,132".parse().unwrap();
        assert_eq!(set.to_string(), "132,213");
        assert!("".parse::<PatternSet>().is_err());
    }

    #[test]
    fn pattern_set_identity_length() {
        let s: PatternSet = "132,123".parse().unwrap();
        assert_eq!(s.longest_identity(), Some(3));
        let s: PatternSet = "231".parse().unwrap();
        assert_eq!(s.longest_identity(), None);
        let s: PatternSet = "1".parse().unwrap();
        assert_eq!(s.longest_identity(), Some(1));
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let five = all_permutations(5);
        assert!(five.windows(2).all(|w| w[0] < w[1]));
    }
}
