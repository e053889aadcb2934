//! Executable maps between the counted families, and a checker that reports
//! whether a map is injective or bijective onto a reference set.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::{self, Display};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{EvenFountain, Partition};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoinColor {
    /// Even rows, counted by the fountain size.
    Red,
    Black,
}

impl Display for CoinColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoinColor::Red => "red",
            CoinColor::Black => "black",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepAction {
    /// Removed, then moved above-right.
    Up,
    /// Removed, then moved below-right (black coins only).
    Down,
    /// Removed, and no neighbour to move to.
    Stop,
}

impl Display for StepAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepAction::Up => "up",
            StepAction::Down => "down",
            StepAction::Stop => "stop",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub row: usize,
    pub pos: usize,
    pub color: CoinColor,
    pub action: StepAction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Walk {
    /// Bottom-row position the walk started from.
    pub start: usize,
    pub steps: Vec<Step>,
    pub red_removed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalTrace {
    pub walks: Vec<Walk>,
    /// Red counts per walk followed by a single 0.
    pub output: Vec<usize>,
    /// One entry per bottom-row position, 0 where the coin was already gone
    /// when its turn came, followed by a single 0. Unlike `output`, this
    /// keeps where each walk started.
    pub positional_output: Vec<usize>,
    /// Black coins whose below-right neighbour existed originally but had
    /// already been removed when the walk got there.
    pub flags: Vec<String>,
}

impl RemovalTrace {
    /// One `r p color action` line per visited coin, walks separated by a
    /// `# walk from p` header.
    pub fn log(&self) -> String {
        let mut out = String::new();
        for w in &self.walks {
            out.push_str(&format!("# walk from {}\n", w.start));
            for s in &w.steps {
                out.push_str(&format!("{} {} {} {}\n", s.row, s.pos, s.color, s.action));
            }
        }
        for f in &self.flags {
            out.push_str(&format!("! {f}\n"));
        }
        out
    }
}

/// Takes an even fountain apart one walk at a time. From each bottom coin
/// still present, left to right: a red coin is removed and the walk moves
/// above-right; a black coin is removed and the walk moves above-right if
/// possible, else below-right. Coin `(r, p)` has above-right neighbour
/// `(r + 1, p)` and below-right neighbour `(r - 1, p + 1)`; removed coins
/// count as absent. Each walk contributes its number of red removals.
///
/// `output` drops the bottom coins that were already removed, so it is a
/// composition of the size plus a trailing 0; with only `2^(s-1)` such
/// compositions it cannot separate the even fountains of size `s >= 4`.
/// `positional_output` records a 0 for those coins instead and does.
pub fn coin_removal(fountain: &EvenFountain) -> RemovalTrace {
    let f = fountain.fountain();
    let mut present: BTreeSet<(usize, usize)> = f
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().map(move |&p| (r, p)))
        .collect();
    let mut walks = Vec::new();
    let mut flags = Vec::new();
    for start in 1..=f.width() {
        if !present.contains(&(0, start)) {
            continue;
        }
        let (mut r, mut p) = (0, start);
        let mut steps = Vec::new();
        let mut red_removed = 0;
        loop {
            present.remove(&(r, p));
            let color = if r % 2 == 0 { CoinColor::Red } else { CoinColor::Black };
            let up = (r + 1, p);
            let down = (r.wrapping_sub(1), p + 1);
            let next = if present.contains(&up) {
                Some((up, StepAction::Up))
            } else if color == CoinColor::Black && present.contains(&down) {
                Some((down, StepAction::Down))
            } else {
                None
            };
            if color == CoinColor::Red {
                red_removed += 1;
            } else if next.is_none() && f.has_coin(down.0, down.1) {
                flags.push(format!(
                    "black coin ({r}, {p}): below-right ({}, {}) already removed",
                    down.0, down.1
                ));
            }
            let action = next.map_or(StepAction::Stop, |(_, a)| a);
            steps.push(Step { row: r, pos: p, color, action });
            match next {
                Some(((nr, np), _)) => (r, p) = (nr, np),
                None => break,
            }
        }
        walks.push(Walk { start, steps, red_removed });
    }
    let mut output: Vec<usize> = walks.iter().map(|w| w.red_removed).collect();
    output.push(0);
    let mut positional_output = vec![0; f.width() + 1];
    for w in &walks {
        positional_output[w.start - 1] = w.red_removed;
    }
    RemovalTrace {
        walks,
        output,
        positional_output,
        flags,
    }
}

/// Nonzero inversion-table entries, largest first. Defined on indecomposable
/// 132-avoiders, whose tables are expected to be weakly decreasing already.
pub fn table_to_partition(p: &Permutation) -> Result<Partition> {
    if !p.is_indecomposable() {
        return Err(Error::Domain(format!("{p} is decomposable")));
    }
    if !p.avoids(&Permutation::new(vec![1, 3, 2])?) {
        return Err(Error::Domain(format!("{p} contains 132")));
    }
    let parts = p
        .inversion_table()
        .entries()
        .iter()
        .copied()
        .filter(|&b| b > 0)
        .collect();
    Partition::from_unsorted(parts)
}

/// Whether the inversion table of `p` is weakly decreasing.
pub fn has_decreasing_table(p: &Permutation) -> bool {
    p.inversion_table().entries().windows(2).all(|w| w[0] >= w[1])
}

/// Outcome of applying a map to a finite domain. Elements and images are
/// kept as their display strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub domain_size: usize,
    pub image_size: usize,
    /// `(first, second, shared image)` for each element whose image was
    /// already taken.
    pub collisions: Vec<(String, String, String)>,
    /// Codomain elements never hit.
    pub missing: Vec<String>,
    /// Images outside the codomain.
    pub unexpected: Vec<String>,
    /// Elements the map rejected, with the reason.
    pub errors: Vec<(String, String)>,
    pub pairs: Vec<(String, String)>,
}

impl BijectionReport {
    pub fn is_injective(&self) -> bool {
        self.collisions.is_empty() && self.errors.is_empty()
    }

    /// Injective and onto the codomain it was checked against.
    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Applies `map` to every domain element and compares the image with
/// `codomain`, when one is given.
pub fn verify_map<D, C, F>(domain: &[D], map: F, codomain: Option<&[C]>) -> BijectionReport
where
    D: Display,
    C: Display,
    F: Fn(&D) -> Result<C>,
{
    let mut report = BijectionReport {
        domain_size: domain.len(),
        ..Default::default()
    };
    let mut seen: BTreeMap<String, String> = BTreeMap::new();
    for d in domain {
        let key = d.to_string();
        match map(d) {
            Ok(image) => {
                let image = image.to_string();
                if let Some(first) = seen.get(&image) {
                    report.collisions.push((first.clone(), key.clone(), image.clone()));
                } else {
                    seen.insert(image.clone(), key.clone());
                }
                report.pairs.push((key, image));
            }
            Err(e) => report.errors.push((key, e.to_string())),
        }
    }
    report.image_size = seen.len();
    if let Some(codomain) = codomain {
        let expected: HashSet<String> = codomain.iter().map(ToString::to_string).collect();
        report.missing = codomain
            .iter()
            .map(ToString::to_string)
            .filter(|c| !seen.contains_key(c))
            .collect();
        report.unexpected = seen
            .keys()
            .filter(|i| !expected.contains(*i))
            .cloned()
            .collect();
    }
    report
}

/// Comma-joined sequence, used as the display form of removal outputs.
pub fn format_sequence(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::Avoid321Table;
    use crate::objects::{even_fountains_of_size, partitions_of, Bounds, Fountain, PartitionMode};
    use crate::oracle::{AvoiderQuery, Oracle};

    fn even(rows: Vec<Vec<usize>>) -> EvenFountain {
        EvenFountain::new(Fountain::new(rows).unwrap())
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn removal_examples() {
        assert_eq!(coin_removal(&even(vec![vec![1, 2, 3], vec![1, 2]])).output, [3, 0]);
        assert_eq!(coin_removal(&even(vec![vec![1, 2, 3], vec![1]])).output, [2, 1, 0]);
        assert_eq!(coin_removal(&even(vec![vec![1, 2, 3]])).output, [1, 1, 1, 0]);
        assert_eq!(coin_removal(&even(vec![])).output, [0]);
    }

    #[test]
    fn positional_examples() {
        assert_eq!(coin_removal(&even(vec![vec![1, 2, 3], vec![1, 2]])).positional_output, [3, 0, 0, 0]);
        assert_eq!(coin_removal(&even(vec![vec![1, 2, 3], vec![1]])).positional_output, [2, 0, 1, 0]);
        assert_eq!(coin_removal(&even(vec![vec![1, 2, 3]])).positional_output, [1, 1, 1, 0]);
    }

    #[test]
    fn removal_log_lines() {
        let t = coin_removal(&even(vec![vec![1, 2, 3], vec![1]]));
        assert_eq!(
            t.log(),
            "# walk from 1\n0 1 red up\n1 1 black down\n0 2 red stop\n# walk from 3\n0 3 red stop\n"
        );
        assert!(t.flags.is_empty());
    }

    #[test]
    fn removal_is_injective_with_expected_image_size() {
        let bounds = Bounds::default();
        let table = Avoid321Table::build(8);
        for s in 0..=8 {
            let domain = even_fountains_of_size(s, &bounds).unwrap();
            for f in &domain {
                let t = coin_removal(f);
                assert_eq!(t.output.iter().sum::<usize>(), s);
                assert_eq!(t.output.last(), Some(&0));
                assert_eq!(t.positional_output.iter().sum::<usize>(), s);
                let visited: usize = t.walks.iter().map(|w| w.steps.len()).sum();
                assert_eq!(visited, f.fountain().coins(), "every coin is removed once");
            }
            let positional = verify_map(
                &domain,
                |f| Ok(format_sequence(&coin_removal(f).positional_output)),
                None::<&[String]>,
            );
            assert!(positional.is_injective(), "s={s}: {:?}", positional.collisions);
            if s >= 1 {
                let expected: usize = table.count(s).unwrap().to_string().parse().unwrap();
                assert_eq!(positional.image_size, expected);

                // the compact output is a composition of s, so it saturates
                let compact = verify_map(&domain, |f| Ok(format_sequence(&coin_removal(f).output)), None::<&[String]>);
                assert_eq!(compact.image_size, expected.min(1 << (s - 1)), "s={s}");
                assert_eq!(compact.is_injective(), s <= 3);
            }
        }
    }

    #[test]
    fn size_three_outputs() {
        let domain = even_fountains_of_size(3, &Bounds::default()).unwrap();
        let report = verify_map(&domain, |f| Ok(format_sequence(&coin_removal(f).output)), None::<&[String]>);
        let mut images: Vec<&str> = report.pairs.iter().map(|(_, i)| i.as_str()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images, ["(1,1,1,0)", "(1,2,0)", "(2,1,0)", "(3,0)"]);
    }

    #[test]
    fn table_partition_examples() {
        assert_eq!(table_to_partition(&perm("4213")).unwrap().parts(), [3, 1]);
        assert_eq!(table_to_partition(&perm("23451")).unwrap().parts(), [1, 1, 1, 1]);
        assert!(table_to_partition(&perm("1")).unwrap().parts().is_empty());
        assert!(table_to_partition(&perm("12")).is_err());
        assert!(table_to_partition(&perm("2431")).is_err());
    }

    fn class(oracle: &Oracle, k: usize, patterns: &str) -> Vec<Permutation> {
        oracle
            .enumerate_avoiders(&AvoiderQuery::new(k, patterns.parse().unwrap()))
            .unwrap()
    }

    #[test]
    fn table_partition_bijections() {
        let oracle = Oracle::default();
        for k in 0..=8 {
            let all = class(&oracle, k, "132");
            let parts = partitions_of(k, PartitionMode::All);
            let r = verify_map(&all, table_to_partition, Some(&parts));
            assert!(r.is_bijective(), "132, k={k}: {r:?}");
            assert!(all.iter().all(has_decreasing_table));

            let distinct = class(&oracle, k, "132,231");
            let parts = partitions_of(k, PartitionMode::Distinct);
            assert!(verify_map(&distinct, table_to_partition, Some(&parts)).is_bijective(), "k={k}");

            let equal = class(&oracle, k, "132,321");
            let parts = partitions_of(k, PartitionMode::EqualParts);
            assert!(verify_map(&equal, table_to_partition, Some(&parts)).is_bijective(), "k={k}");
        }
    }

    #[test]
    fn report_detects_collisions_and_gaps() {
        let domain = [1, 2, 3];
        let r = verify_map(&domain, |x| Ok(x % 2), Some(&[0, 1, 5]));
        assert_eq!(r.collisions, [("1".into(), "3".into(), "1".into())]);
        assert_eq!(r.missing, ["5"]);
        assert!(r.unexpected.is_empty());
        assert!(!r.is_injective());
    }
}
