use num_bigint::BigInt;
use serde::Serialize;

use super::bfile::{FixtureStore, OeisFixture};
use super::catalog::{catalog, entry, CatalogEntry, FastPath, OffsetPolicy};
use super::run::{Runner, Terms};
use crate::error::{Error, Result};
use crate::perm::PatternSet;
use crate::report::{CountReport, Method, Mismatch};
use crate::series::{pin_offset, TruncatedSeries};

/// Computed terms checked against a b-file.
#[derive(Clone, Debug, Serialize)]
pub struct OeisCheck {
    pub id: String,
    /// `fixture(i) = |I_{i + offset}|` on the compared range.
    pub offset: Option<i64>,
    pub compared: usize,
    pub report: CountReport,
}

impl OeisCheck {
    pub fn passed(&self) -> bool {
        self.report.passed() && self.compared > 0
    }
}

/// First catalog entry citing `id`.
pub fn entry_for_id(id: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.oeis == Some(id))
}

/// Computes `patterns` up to `k_max` by the quickest path and compares the
/// result with `fixture` under the catalog's offset policy.
pub fn oeis_check(
    runner: &Runner,
    patterns: &PatternSet,
    k_max: usize,
    fixture: &OeisFixture,
) -> Result<OeisCheck> {
    let start = std::time::Instant::now();
    let (entry, _) = entry(patterns)
        .ok_or_else(|| Error::Domain(format!("{patterns} is not in the catalog")))?;
    // exhaustive generators are capped, so a series is preferred over them
    let exhaustive = matches!(entry.fast, Some(FastPath::Fountains | FastPath::RectangleFountains));
    let fast = entry.fast.filter(|_| !(exhaustive && entry.gf.is_some()));
    let (method, terms): (Method, Terms) = if let Some(p) = fast {
        (Method::Fast, runner.fast_terms(p, k_max)?)
    } else if let Some(p) = entry.gf {
        (Method::Gf, runner.gf_terms(&entry, p, k_max)?)
    } else {
        (Method::Oracle, runner.oracle_terms(patterns, k_max)?)
    };
    let mut report = CountReport::new(patterns, method);
    for (k, v) in &terms {
        report.push(*k, v.clone());
    }
    let path = format!("oeis:{}", fixture.id);
    let (offset, compared) = match entry.oeis_offset {
        OffsetPolicy::Aligned => {
            let mut compared = 0;
            for (k, v) in &terms {
                let Some(expected) = fixture.value_at(*k as i64) else {
                    continue;
                };
                compared += 1;
                if expected != v {
                    report.mismatches.push(Mismatch {
                        k: *k,
                        path: path.clone(),
                        expected: expected.to_string(),
                        found: v.to_string(),
                    });
                }
            }
            (Some(0), compared)
        }
        OffsetPolicy::Pinned => {
            let as_series = TruncatedSeries::from_coefficients(
                fixture
                    .terms
                    .iter()
                    .take_while(|(i, _)| *i >= 0)
                    .map(|(_, v)| BigInt::from(v.clone()))
                    .collect(),
                fixture.terms.len().max(1),
            );
            let fixture_from_zero = fixture.terms.first().is_some_and(|(i, _)| *i == 0);
            let pinned = pin_offset(&as_series, &report)?;
            match (fixture_from_zero, pinned.offset, pinned.matched_range) {
                (true, Some(o), Some((lo, hi))) => (Some(o), hi - lo + 1),
                _ => {
                    report.mismatches.push(Mismatch {
                        k: 0,
                        path,
                        expected: "a constant offset in -2..=2".into(),
                        found: if fixture_from_zero {
                            pinned.diff.join("; ")
                        } else {
                            "fixture does not start at index 0".into()
                        },
                    });
                    (None, 0)
                }
            }
        }
    };
    if compared == 0 && report.passed() {
        report.mismatches.push(Mismatch {
            k: 0,
            path: format!("oeis:{}", fixture.id),
            expected: "overlapping terms".into(),
            found: "none".into(),
        });
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(OeisCheck {
        id: fixture.id.clone(),
        offset,
        compared,
        report,
    })
}

/// `oeis_check` against the stored fixture for the entry's OEIS id.
pub fn oeis_check_offline(
    runner: &Runner,
    store: &FixtureStore,
    patterns: &PatternSet,
    k_max: usize,
) -> Result<OeisCheck> {
    let (entry, _) = entry(patterns)
        .ok_or_else(|| Error::Domain(format!("{patterns} is not in the catalog")))?;
    let id = entry
        .oeis
        .ok_or_else(|| Error::Domain(format!("{patterns} has no OEIS id")))?;
    oeis_check(runner, patterns, k_max, &store.load(id)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::bfile::parse_bfile;
    use std::path::Path;

    fn store() -> FixtureStore {
        FixtureStore::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
    }

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let r = Runner::default();
        for (p, k, id) in [("132", 20, "A000041"), ("231", 12, "A005169"), ("12", 10, "A010054")] {
            let c = oeis_check_offline(&r, &store(), &set(p), k).unwrap();
            assert_eq!(c.id, id);
            assert!(c.passed(), "{p}: {:?}", c.report.mismatches);
            assert_eq!(c.compared, k + 1);
        }
    }

    #[test]
    fn pinned_fixture() {
        let c = oeis_check_offline(&Runner::default(), &store(), &set("123,132"), 25).unwrap();
        assert!(c.passed(), "{:?}", c.report.mismatches);
        assert_eq!(c.offset, Some(1));
        assert!(c.compared >= 20);
    }

    #[test]
    fn wrong_values_are_reported() {
        let fixture = OeisFixture {
            id: "A000041".into(),
            terms: parse_bfile("0 1\n1 1\n2 2\n3 4\n").unwrap(),
        };
        let c = oeis_check(&Runner::default(), &set("132"), 5, &fixture).unwrap();
        assert!(!c.passed());
        assert_eq!(c.report.mismatches[0].k, 3);
        assert_eq!(c.compared, 4);
    }

    #[test]
    fn entries_without_ids() {
        assert!(oeis_check_offline(&Runner::default(), &store(), &set("123"), 5).is_err());
        assert_eq!(entry_for_id("A006958").unwrap().patterns, set("321"));
    }
}
