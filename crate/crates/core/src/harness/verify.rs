use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use super::bfile::FixtureStore;
use super::catalog::{catalog, GfPath};
use super::oeis::oeis_check_offline;
use super::run::Runner;
use crate::bijections::{coin_removal, format_sequence, table_to_partition, verify_map};
use crate::counts::{
    closed_form_sequence, count_i123, count_i123_by_subtraction, unique_avoider_231_321,
    Avoid321Table, ClosedFormFamily, GorensteinTable, PrintedRecurrence123, Summation,
};
use crate::error::Result;
use crate::objects::{
    even_fountains_of_size, fountains_with_coins, partitions_of, polyominoes_with_cells,
    PartitionMode,
};
use crate::oracle::AvoiderQuery;
use crate::perm::{all_permutations, PatternSet, Permutation};
use crate::report::Method;
use crate::series::{fountain_series, gorenstein_series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A documented discrepancy that is reported but does not fail the run.
    KnownOpen,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub k_max: usize,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::KnownOpen => "known-open",
            };
            out.push_str(&format!("{status:<10} {:<28} {}\n", c.name, c.detail));
        }
        out
    }
}

/// Outcome of one check body: pass flag and a one-line detail.
type Outcome = Result<(bool, String)>;

fn set(s: &str) -> PatternSet {
    s.parse().expect("literal pattern set")
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

struct Suite<'a> {
    runner: &'a Runner,
    store: &'a FixtureStore,
    k_max: usize,
    checks: Vec<Check>,
}

impl Suite<'_> {
    fn record(&mut self, name: impl Into<String>, outcome: Outcome) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (CheckStatus::Pass, d),
            Ok((false, d)) => (CheckStatus::Fail, d),
            Err(e) => (CheckStatus::Fail, format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
        });
    }

    fn oracle_count(&self, patterns: &str, k: usize) -> Result<BigUint> {
        Ok(big(self.runner.oracle.count_avoiders(&AvoiderQuery::new(k, set(patterns)))?))
    }

    /// Compares `f(k)` against the oracle for `patterns` over `ks`.
    fn against_oracle(
        &self,
        patterns: &str,
        ks: impl IntoIterator<Item = usize>,
        f: impl Fn(usize) -> Result<BigUint>,
    ) -> Outcome {
        let mut checked = 0;
        for k in ks {
            let (want, got) = (self.oracle_count(patterns, k)?, f(k)?);
            if want != got {
                return Ok((false, format!("k={k}: oracle {want}, computed {got}")));
            }
            checked += 1;
        }
        Ok((true, format!("{checked} values agree with the oracle")))
    }

    fn ground_truth(&mut self) {
        let k = self.k_max.min(4);
        let outcome = (|| {
            let expected = [1usize, 1, 2, 5, 13];
            for (i, &e) in expected.iter().enumerate().take(k + 1) {
                let got = self.runner.oracle.indecomposables_with_inversions(i)?.len();
                if got != e {
                    return Ok((false, format!("|I_{i}| = {got}, expected {e}")));
                }
            }
            if k >= 3 {
                let got: BTreeSet<String> = self
                    .runner
                    .oracle
                    .indecomposables_with_inversions(3)?
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let want: BTreeSet<String> =
                    ["321", "4123", "3142", "2413", "2341"].map(String::from).into();
                if got != want {
                    return Ok((false, format!("I_3 = {got:?}")));
                }
            }
            Ok((true, format!("|I_k| for k <= {k}")))
        })();
        self.record("oracle-ground-truth", outcome);
    }

    fn catalog_agreement(&mut self) {
        let k = self.k_max.min(10);
        for entry in catalog().into_iter().filter(|e| e.path_count() >= 2) {
            let outcome = self
                .runner
                .run_count(&entry.patterns, k, Method::All)
                .map(|out| match out.report.mismatches.first() {
                    None => (true, format!("{} paths agree for k <= {k}", entry.path_count())),
                    Some(m) => (
                        false,
                        format!("k={} {}: expected {}, found {}", m.k, m.path, m.expected, m.found),
                    ),
                });
            self.record(format!("paths:{}", entry.patterns), outcome);
        }
    }

    fn partitions_chain(&mut self) {
        let k = self.k_max.min(10);
        for (patterns, family) in [
            ("132", ClosedFormFamily::Partitions),
            ("132,231", ClosedFormFamily::DistinctPartitions),
            ("132,321", ClosedFormFamily::Divisors),
        ] {
            let seq = closed_form_sequence(family, k);
            let outcome = self.against_oracle(patterns, 1..=k, |i| Ok(seq[i].clone()));
            self.record(format!("closed-form:{patterns}"), outcome);
        }
        let kb = self.k_max.min(8);
        for (patterns, mode) in [
            ("132", PartitionMode::All),
            ("132,231", PartitionMode::Distinct),
            ("132,321", PartitionMode::EqualParts),
        ] {
            let outcome = (|| {
                for i in 0..=kb {
                    let domain = self
                        .runner
                        .oracle
                        .enumerate_avoiders(&AvoiderQuery::new(i, set(patterns)))?;
                    let r = verify_map(&domain, table_to_partition, Some(&partitions_of(i, mode)));
                    if !r.is_bijective() {
                        return Ok((false, format!("k={i}: {} collisions, {} missing", r.collisions.len(), r.missing.len())));
                    }
                }
                Ok((true, format!("bijective for k <= {kb}")))
            })();
            self.record(format!("table-partition:{patterns}"), outcome);
        }
    }

    fn fountain_chain(&mut self) {
        let k = self.k_max.min(10);
        let bounds = self.runner.bounds;
        let s = fountain_series(k + 1);
        let outcome = self.against_oracle("231", 0..=k, |i| {
            let n = big(fountains_with_coins(i, &bounds)?.len());
            let c = s.coefficient(i)?.to_biguint().unwrap_or_default();
            Ok(if n == c { n } else { BigUint::default() })
        });
        self.record("fountains", outcome);

        let table = Avoid321Table::build(k);
        let outcome = self.against_oracle("321", 1..=k, |i| {
            let n = big(polyominoes_with_cells(i, &bounds)?.len());
            Ok(if &n == table.count(i).unwrap() { n } else { BigUint::default() })
        });
        self.record("polyominoes", outcome);

        let ke = self.k_max.min(8);
        let outcome = self.against_oracle("321", 1..=ke, |i| {
            Ok(big(even_fountains_of_size(i, &bounds)?.len()))
        });
        self.record("even-fountains", outcome);

        let outcome = (|| {
            let mut flagged = 0;
            let mut saturated = Vec::new();
            for i in 1..=ke {
                let domain = even_fountains_of_size(i, &bounds)?;
                flagged += domain.iter().map(|f| coin_removal(f).flags.len()).sum::<usize>();
                let positional = verify_map(&domain, |f| Ok(format_sequence(&coin_removal(f).positional_output)), None::<&[String]>);
                let expected = table.count(i).unwrap().clone();
                if !positional.is_injective() || big(positional.image_size) != expected {
                    return Ok((false, format!("s={i}: image {} of {expected}", positional.image_size)));
                }
                let compact = verify_map(&domain, |f| Ok(format_sequence(&coin_removal(f).output)), None::<&[String]>);
                if !compact.is_injective() {
                    saturated.push(format!("s={i}: {}", compact.image_size));
                }
            }
            self.checks.push(Check {
                name: "coin-removal-compact".into(),
                status: if saturated.is_empty() { CheckStatus::Pass } else { CheckStatus::KnownOpen },
                detail: if saturated.is_empty() {
                    format!("injective for s <= {ke}")
                } else {
                    format!("skip-removed output is a composition, image only 2^(s-1): {}", saturated.join(", "))
                },
            });
            Ok((flagged == 0, format!("positional output injective onto a(s,1) for s <= {ke}; {flagged} walk flags")))
        })();
        self.record("coin-removal", outcome);
    }

    fn gorenstein_chain(&mut self) {
        let k = self.k_max.min(10);
        let wide = if self.k_max >= 10 { 30 } else { self.k_max };
        let table = GorensteinTable::build(wide, Summation::Windowed);
        let predicate = |n: usize| {
            big(partitions_of(n, PartitionMode::All)
                .iter()
                .filter(|p| p.is_gorenstein())
                .count())
        };
        let s = gorenstein_series(k + 1);
        let outcome = self.against_oracle("132,213", 0..=k, |n| {
            let (a, b) = (predicate(n), table.count(n));
            let c = s.coefficient(n)?.to_biguint().unwrap_or_default();
            Ok(if a == b && b == c { a } else { BigUint::default() })
        });
        self.record("gorenstein", outcome);
        let bad = (0..=wide).find(|&n| predicate(n) != table.count(n));
        self.record(
            "gorenstein-predicate",
            Ok(match bad {
                None => (true, format!("predicate = recurrence for n <= {wide}")),
                Some(n) => (false, format!("n={n}: predicate {} vs recurrence {}", predicate(n), table.count(n))),
            }),
        );
    }

    fn avoid123(&mut self) {
        let k = self.k_max.min(10);
        let outcome = self.against_oracle("123", 0..=k, count_i123);
        self.record("i123-table", outcome);
        let ks = self.k_max.min(8);
        let outcome = self.against_oracle("123", 0..=ks, |i| count_i123_by_subtraction(&self.runner.oracle, i));
        self.record("i123-subtraction", outcome);

        let mut printed = PrintedRecurrence123::new();
        let outcome: Result<Vec<String>> = (0..=self.k_max.min(3))
            .filter_map(|i| {
                let brute = match self.runner.oracle.total_123_avoiders(i) {
                    Ok(b) => big(b),
                    Err(e) => return Some(Err(e)),
                };
                let p = printed.total(i);
                (p != brute).then(|| Ok(format!("k={i}: printed {p} vs brute force {brute}")))
            })
            .collect();
        match outcome {
            Ok(diffs) if diffs.is_empty() => self.record("i123-printed-recurrence", Ok((true, "agrees".into()))),
            Ok(diffs) => self.checks.push(Check {
                name: "i123-printed-recurrence".into(),
                status: CheckStatus::KnownOpen,
                detail: diffs.join("; "),
            }),
            Err(e) => self.record("i123-printed-recurrence", Err(e)),
        }
    }

    fn symmetry(&mut self) {
        let n_max = (self.k_max + 1).min(7);
        let outcome = (|| {
            let mut seen = 0;
            for n in 1..=n_max {
                for p in all_permutations(n) {
                    for q in [p.reverse_complement(), p.inverse()] {
                        if q.inversions() != p.inversions() || q.component_count() != p.component_count() {
                            return Ok((false, format!("{p} vs {q}")));
                        }
                    }
                    seen += 1;
                }
            }
            Ok((true, format!("{seen} permutations of length <= {n_max}")))
        })();
        self.record("symmetry", outcome);
        let k = self.k_max.min(10);
        let outcome = self.against_oracle("132", 0..=k, |i| self.oracle_count("213", i));
        self.record("symmetry:213", outcome);
        let outcome = (|| {
            for i in 0..=k {
                if let Some(p) = self
                    .runner
                    .oracle
                    .indecomposables_with_inversions(i)?
                    .into_iter()
                    .find(|p| p.len() > i + 1)
                {
                    return Ok((false, format!("{p} has length > k+1")));
                }
            }
            Ok((true, format!("lengths <= k+1 for k <= {k}")))
        })();
        self.record("length-bound", outcome);
    }

    fn degenerate(&mut self) {
        let k = self.k_max.min(10);
        let outcome = (|| {
            for i in 0..=k {
                let all = self
                    .runner
                    .oracle
                    .enumerate_avoiders(&AvoiderQuery::new(i, set("231,321")))?;
                if all != [unique_avoider_231_321(i)] {
                    let shown: Vec<String> = all.iter().map(Permutation::to_string).collect();
                    return Ok((false, format!("k={i}: {shown:?}")));
                }
            }
            Ok((true, format!("single witness for k <= {k}")))
        })();
        self.record("witness:231,321", outcome);
        let outcome = self.against_oracle("123,132,231", 0..=k, |_| Ok(big(1)));
        self.record("constant:123,132,231", outcome);
        let tri = closed_form_sequence(ClosedFormFamily::TriangularChar, k);
        let outcome = self.against_oracle("231,312", 0..=k, |i| Ok(tri[i].clone()));
        self.record("triangular:231,312", outcome);
        let outcome = self.against_oracle("123,321", 7..=k, |_| Ok(big(0)));
        self.record("vanishing:123,321", outcome);
    }

    fn fixtures(&mut self) {
        let k = self.k_max.max(20);
        for entry in catalog() {
            let Some(id) = entry.oeis else { continue };
            let kk = if entry.path_count() > 1 { k } else { self.k_max.min(10) };
            let outcome = oeis_check_offline(self.runner, self.store, &entry.patterns, kk).map(|c| {
                let ok = c.passed();
                let detail = match c.report.mismatches.first() {
                    None => format!("{} terms match {id} (offset {:+})", c.compared, c.offset.unwrap_or(0)),
                    Some(m) => format!("k={}: {id} has {}, computed {}", m.k, m.expected, m.found),
                };
                (ok, detail)
            });
            self.record(format!("oeis:{}:{}", id, entry.patterns), outcome);
        }
    }

    fn offsets(&mut self) {
        for entry in catalog() {
            let Some(path) = entry.gf else { continue };
            if !matches!(path, GfPath::Avoid132_123 | GfPath::Avoid123_132_213) {
                continue;
            }
            let outcome = self
                .runner
                .pinned_offset(&entry, path)
                .map(|o| (true, format!("coefficient k = |I_(k{o:+})|")));
            self.record(format!("offset:{}", entry.patterns), outcome);
        }
    }
}

/// Runs every cross-check up to `k_max` (each capped at the range where
/// it is affordable) and collects the results in a fixed order.
pub fn verify_all(runner: &Runner, store: &FixtureStore, k_max: usize) -> VerifyReport {
    let start = Instant::now();
    let mut suite = Suite {
        runner,
        store,
        k_max,
        checks: Vec::new(),
    };
    suite.ground_truth();
    suite.catalog_agreement();
    suite.partitions_chain();
    suite.fountain_chain();
    suite.gorenstein_chain();
    suite.avoid123();
    suite.symmetry();
    suite.degenerate();
    suite.fixtures();
    suite.offsets();
    VerifyReport {
        k_max,
        checks: suite.checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    fn store() -> FixtureStore {
        FixtureStore::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
    }

    #[test]
    fn small_ranges_pass() {
        let runner = Runner::default();
        for k in [0, 3] {
            let r = verify_all(&runner, &store(), k);
            assert!(r.passed(), "k={k}: {}", r.to_plain());
        }
    }

    #[test]
    fn printed_recurrence_is_known_open() {
        let r = verify_all(&Runner::default(), &store(), 8);
        assert!(r.passed(), "{}", r.to_plain());
        let printed = r.checks.iter().find(|c| c.name == "i123-printed-recurrence").unwrap();
        assert_eq!(printed.status, CheckStatus::KnownOpen);
        assert!(printed.detail.contains("k=1: printed 1 vs brute force 3"));
    }
}
