use std::time::Instant;

use num_bigint::BigUint;

use super::catalog::{entry, CatalogEntry, FastPath, GfPath, OffsetPolicy};
use crate::counts::{
    closed_form_sequence, count_i123, Avoid321Table, GorensteinTable, Summation,
};
use crate::error::{Error, Result};
use crate::objects::{fountains_with_coins, Bounds};
use crate::oracle::Oracle;
use crate::perm::PatternSet;
use crate::report::{CountReport, Method, Mismatch};
use crate::series::{self, pin_offset, TruncatedSeries};

/// Largest `k` used when pinning a series offset against the oracle.
pub const PIN_K: usize = 10;

pub type Terms = Vec<(usize, BigUint)>;

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub report: CountReport,
    pub warnings: Vec<String>,
}

/// Evaluates catalog paths with fixed resource bounds.
#[derive(Clone, Debug, Default)]
pub struct Runner {
    pub oracle: Oracle,
    pub bounds: Bounds,
}

impl Runner {
    pub fn oracle_terms(&self, patterns: &PatternSet, k_max: usize) -> Result<Terms> {
        let report = self.oracle.avoider_sequence(patterns, k_max)?;
        Ok(report.terms.into_iter().map(|t| (t.k, t.value)).collect())
    }

    pub fn fast_terms(&self, path: FastPath, k_max: usize) -> Result<Terms> {
        let indexed = |values: Vec<BigUint>| values.into_iter().enumerate().collect();
        Ok(match path {
            FastPath::Closed(family) => indexed(closed_form_sequence(family, k_max)),
            FastPath::Avoid321 => {
                let table = Avoid321Table::build(k_max);
                (0..=k_max).map(|k| (k, table.count(k).unwrap().clone())).collect()
            }
            FastPath::Gorenstein => {
                let table = GorensteinTable::build(k_max, Summation::Windowed);
                (0..=k_max).map(|k| (k, table.count(k))).collect()
            }
            FastPath::Avoid123 => (0..=k_max)
                .map(|k| Ok((k, count_i123(k)?)))
                .collect::<Result<_>>()?,
            FastPath::Fountains | FastPath::RectangleFountains => (0..=k_max)
                .map(|k| {
                    let all = fountains_with_coins(k, &self.bounds)?;
                    let n = if path == FastPath::Fountains {
                        all.len()
                    } else {
                        all.iter().filter(|f| f.missing_set_is_rectangle()).count()
                    };
                    Ok((k, BigUint::from(n)))
                })
                .collect::<Result<_>>()?,
        })
    }

    pub fn series(&self, path: GfPath, precision: usize) -> TruncatedSeries {
        match path {
            GfPath::Avoid123_231 => series::avoid_123_231_series(precision),
            GfPath::Avoid132_123 => series::avoid_132_123_series(precision),
            GfPath::Gorenstein => series::gorenstein_series(precision),
            GfPath::Avoid123_132_213 => series::avoid_123_132_213_series(precision),
            GfPath::Avoid123_132_213_231 => series::avoid_123_132_213_231_series(precision),
            GfPath::Fountain => series::fountain_series(precision),
        }
    }

    /// Shift `o` with `coefficient(k) = |I_{k+o}|`, found against the
    /// oracle for `k <= PIN_K`.
    pub fn pinned_offset(&self, entry: &CatalogEntry, path: GfPath) -> Result<i64> {
        let reference = self.oracle.avoider_sequence(&entry.patterns, PIN_K)?;
        let pinned = pin_offset(&self.series(path, PIN_K + 1), &reference)?;
        pinned.offset.ok_or_else(|| {
            Error::Domain(format!(
                "no constant offset lines up the series for {}: {}",
                entry.patterns,
                pinned.diff.join("; ")
            ))
        })
    }

    /// Series terms re-indexed as `|I_k|`. A positive pinned offset leaves
    /// the first `k` unrepresented.
    pub fn gf_terms(&self, entry: &CatalogEntry, path: GfPath, k_max: usize) -> Result<Terms> {
        let offset = match entry.gf_offset {
            OffsetPolicy::Aligned => 0,
            OffsetPolicy::Pinned => self.pinned_offset(entry, path)?,
        };
        let precision = (k_max as i64 - offset + 1).max(1) as usize;
        let s = self.series(path, precision);
        Ok((0..=k_max)
            .filter_map(|k| {
                let i = k as i64 - offset;
                (i >= 0).then(|| {
                    let c = s.coefficient(i as usize).expect("inside precision");
                    (k, c.to_biguint().expect("counting series are nonnegative"))
                })
            })
            .collect())
    }

    /// Terms `k = 0..=k_max` for `patterns` by the chosen method. With
    /// `Method::All` the oracle supplies the terms and every other path is
    /// compared against it.
    pub fn run_count(&self, patterns: &PatternSet, k_max: usize, method: Method) -> Result<RunOutput> {
        let start = Instant::now();
        let mut warnings = Vec::new();
        let mut report = CountReport::new(patterns, method);
        let Some((entry, _)) = entry(patterns) else {
            warnings.push(format!("no catalog entry for {patterns}; counting with the oracle"));
            for (k, v) in self.oracle_terms(patterns, k_max)? {
                report.push(k, v);
            }
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(RunOutput { report, warnings });
        };
        let missing = |what: &str| {
            Error::Domain(format!("{patterns} has no {what} path; try --method oracle"))
        };
        let terms = match method {
            Method::Oracle | Method::All => self.oracle_terms(patterns, k_max)?,
            Method::Fast => self.fast_terms(entry.fast.ok_or_else(|| missing("fast"))?, k_max)?,
            Method::Gf => self.gf_terms(&entry, entry.gf.ok_or_else(|| missing("gf"))?, k_max)?,
        };
        if method == Method::All {
            let mut others = Vec::new();
            if let Some(p) = entry.fast {
                others.push(("fast", self.fast_terms(p, k_max)?));
            }
            if let Some(p) = entry.gf {
                others.push(("gf", self.gf_terms(&entry, p, k_max)?));
            }
            if others.is_empty() {
                warnings.push(format!("{patterns} has only the oracle path; nothing to cross-check"));
            }
            for (path, other) in others {
                report.mismatches.extend(compare(&terms, &other, path));
            }
        }
        for (k, v) in terms {
            report.push(k, v);
        }
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(RunOutput { report, warnings })
    }
}

/// Mismatches of `found` against `expected` on the `k` both contain.
pub fn compare(expected: &Terms, found: &Terms, path: &str) -> Vec<Mismatch> {
    found
        .iter()
        .filter_map(|(k, v)| {
            let (_, e) = expected.iter().find(|(ek, _)| ek == k)?;
            (e != v).then(|| Mismatch {
                k: *k,
                path: path.to_string(),
                expected: e.to_string(),
                found: v.to_string(),
            })
        })
        .collect()
}

pub fn run_count(patterns: &PatternSet, k_max: usize, method: Method) -> Result<RunOutput> {
    Runner::default().run_count(patterns, k_max, method)
}
