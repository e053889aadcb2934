use std::fmt;

use crate::error::{Error, Result};

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionMode {
    All,
    Distinct,
    EqualParts,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "{parts:?} is not a weakly decreasing sequence of positive parts"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_equal_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Corner test: with a trailing zero appended, every index where the
    /// next part drops must give the same `part + index` (1-based).
    pub fn is_gorenstein(&self) -> bool {
        let m = self.parts.len();
        let mut corner_value = None;
        for i in 0..m {
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            if self.parts[i] != next {
                let value = self.parts[i] + i + 1;
                match corner_value {
                    None => corner_value = Some(value),
                    Some(c) if c != value => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `k` admitted by `mode`, in reverse lexicographic order.
/// `k = 0` yields the empty partition in every mode.
pub fn partitions_of(k: usize, mode: PartitionMode) -> Vec<Partition> {
    if k == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    match mode {
        PartitionMode::EqualParts => {
            for part in (1..=k).rev().filter(|d| k % d == 0) {
                out.push(Partition {
                    parts: vec![part; k / part],
                });
            }
        }
        PartitionMode::All | PartitionMode::Distinct => {
            let distinct = mode == PartitionMode::Distinct;
            let mut current = Vec::new();
            fill(k, k, distinct, &mut current, &mut out);
        }
    }
    out
}

fn fill(rest: usize, max: usize, distinct: bool, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        let next_max = if distinct { part - 1 } else { part };
        fill(rest - part, next_max, distinct, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_four() {
        let all = partitions_of(4, PartitionMode::All);
        assert_eq!(
            all,
            vec![part(&[4]), part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])]
        );
        assert_eq!(
            partitions_of(4, PartitionMode::Distinct),
            vec![part(&[4]), part(&[3, 1])]
        );
        assert_eq!(
            partitions_of(4, PartitionMode::EqualParts),
            vec![part(&[4]), part(&[2, 2]), part(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn zero_is_the_empty_partition() {
        for mode in [PartitionMode::All, PartitionMode::Distinct, PartitionMode::EqualParts] {
            assert_eq!(partitions_of(0, mode), vec![Partition::empty()]);
        }
    }

    #[test]
    fn counts_match_known_values() {
        let p: Vec<usize> = (0..=12).map(|k| partitions_of(k, PartitionMode::All).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        let q: Vec<usize> = (0..=12)
            .map(|k| partitions_of(k, PartitionMode::Distinct).len())
            .collect();
        assert_eq!(q, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15]);
    }

    #[test]
    fn gorenstein_examples() {
        assert!(part(&[2, 1]).is_gorenstein());
        assert!(!part(&[3, 1]).is_gorenstein());
        assert!(part(&[7]).is_gorenstein());
        assert!(Partition::empty().is_gorenstein());
        assert!(part(&[2, 2]).is_gorenstein());
        assert!(!part(&[2, 1, 1]).is_gorenstein());
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), part(&[3, 2, 1]));
    }
}
