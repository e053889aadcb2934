//! Per-k count sequences tagged with the path that produced them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::perm::PatternSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Fast,
    Gf,
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Fast => "fast",
            Method::Gf => "gf",
            Method::All => "all",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "fast" => Ok(Method::Fast),
            "gf" => Ok(Method::Gf),
            "all" => Ok(Method::All),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub k: usize,
    #[serde(serialize_with = "decimal")]
    pub value: BigUint,
}

/// A disagreement between two computation paths (or a path and a reference).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub k: usize,
    pub path: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub patterns: Vec<String>,
    pub method: Method,
    pub terms: Vec<Term>,
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u64,
}

impl CountReport {
    pub fn new(patterns: &PatternSet, method: Method) -> Self {
        CountReport {
            patterns: patterns.to_strings(),
            method,
            terms: Vec::new(),
            mismatches: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, k: usize, value: impl Into<BigUint>) {
        debug_assert!(self.terms.last().is_none_or(|t| t.k < k));
        self.terms.push(Term {
            k,
            value: value.into(),
        });
    }

    pub fn value_at(&self, k: usize) -> Option<&BigUint> {
        self.terms
            .binary_search_by_key(&k, |t| t.k)
            .ok()
            .map(|i| &self.terms[i].value)
    }

    pub fn values(&self) -> Vec<BigUint> {
        self.terms.iter().map(|t| t.value.clone()).collect()
    }

    /// First and last k covered, if any.
    pub fn k_range(&self) -> Option<(usize, usize)> {
        Some((self.terms.first()?.k, self.terms.last()?.k))
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `k value` per line, then any mismatches.
    pub fn to_plain(&self) -> String {
        let mut out = format!("# patterns {} method {}\n", self.patterns.join(","), self.method);
        for t in &self.terms {
            out.push_str(&format!("{} {}\n", t.k, t.value));
        }
        for m in &self.mismatches {
            out.push_str(&format!(
                "! k={} {}: expected {} found {}\n",
                m.k, m.path, m.expected, m.found
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_fixed() {
        let mut r = CountReport::new(&"213,132".parse().unwrap(), Method::All);
        r.push(0, 1u32);
        r.push(1, 1u32);
        r.mismatches.push(Mismatch {
            k: 1,
            path: "gf".into(),
            expected: "1".into(),
            found: "2".into(),
        });
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["patterns"], serde_json::json!(["132", "213"]));
        assert_eq!(v["method"], "all");
        assert_eq!(v["terms"][1], serde_json::json!({"k": 1, "value": "1"}));
        assert_eq!(v["elapsed_ms"], 0);
        let json = r.to_json();
        let keys: Vec<&str> = json
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        assert_eq!(keys, ["patterns", "method", "terms", "mismatches", "elapsed_ms"]);
    }

    #[test]
    fn lookup() {
        let mut r = CountReport::new(&"12".parse().unwrap(), Method::Fast);
        r.push(2, 5u32);
        r.push(3, 7u32);
        assert_eq!(r.value_at(3), Some(&BigUint::from(7u32)));
        assert_eq!(r.value_at(0), None);
        assert_eq!(r.k_range(), Some((2, 3)));
        assert_eq!("gf".parse::<Method>().unwrap(), Method::Gf);
        assert!("fastest".parse::<Method>().is_err());
    }
}
