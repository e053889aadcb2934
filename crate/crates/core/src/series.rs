//! Exact truncated power series and the generating functions built on them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::CountReport;

/// Coefficients `c_0..c_{K-1}` of a power series known modulo `x^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        TruncatedSeries {
            coefficients: vec![BigInt::zero(); precision],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(0, precision)
    }

    /// `x^exponent`, which is zero when the exponent is past the precision.
    pub fn monomial(exponent: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if exponent < precision {
            s.coefficients[exponent] = BigInt::one();
        }
        s
    }

    /// Pads with zeros or truncates to exactly `precision` terms.
    pub fn from_coefficients(mut coefficients: Vec<BigInt>, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        coefficients.resize(precision, BigInt::zero());
        TruncatedSeries { coefficients }
    }

    pub fn precision(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Result<BigInt> {
        self.coefficients
            .get(k)
            .cloned()
            .ok_or(Error::OutOfPrecision {
                index: k,
                precision: self.precision(),
            })
    }

    /// Adds `value · x^exponent`, ignoring exponents past the precision.
    pub fn add_term(&mut self, exponent: usize, value: impl Into<BigInt>) {
        if let Some(c) = self.coefficients.get_mut(exponent) {
            *c += value.into();
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let k = self.precision().min(other.precision());
        let coefficients = (0..k)
            .map(|i| &self.coefficients[i] + &other.coefficients[i])
            .collect();
        TruncatedSeries { coefficients }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let k = self.precision().min(other.precision());
        let coefficients = (0..k)
            .map(|i| &self.coefficients[i] - &other.coefficients[i])
            .collect();
        TruncatedSeries { coefficients }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let k = self.precision().min(other.precision());
        let mut out = vec![BigInt::zero(); k];
        for (i, a) in self.coefficients[..k].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..k - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coefficients: out }
    }

    /// Multiplies by `x^shift`, dropping what falls past the precision.
    pub fn shift(&self, shift: usize) -> TruncatedSeries {
        let k = self.precision();
        let mut out = vec![BigInt::zero(); k];
        for i in shift..k {
            out[i] = self.coefficients[i - shift].clone();
        }
        TruncatedSeries { coefficients: out }
    }

    /// Multiplicative inverse; only defined when the constant term is ±1, so
    /// that every coefficient stays an integer.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coefficients[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::Domain(format!(
                "series with constant term {c0} has no integer inverse"
            )));
        }
        let k = self.precision();
        let mut out: Vec<BigInt> = Vec::with_capacity(k);
        out.push(c0.clone());
        for n in 1..k {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                let a = &self.coefficients[i];
                if !a.is_zero() {
                    acc += a * &out[n - i];
                }
            }
            // c0 is its own inverse
            out.push(-(acc * c0));
        }
        Ok(TruncatedSeries { coefficients: out })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.precision())
    }
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum_{i>=0} x^{i(i+1)/2}`.
pub fn triangular_series(precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(precision);
    for i in 0.. {
        let e = choose2(i + 1);
        if e >= precision {
            break;
        }
        s.add_term(e, 1);
    }
    s
}

/// Ordered pairs of triangular numbers summing to each exponent.
pub fn triangular_series_squared(precision: usize) -> TruncatedSeries {
    let t = triangular_series(precision);
    t.mul(&t)
}

/// Series for `{123, 231}`:
///
/// ```text
/// sum_{i>=1} x^C(i,2) + sum_{i,j>=1} sum_{l=0..min(i,j)-1} x^{C(i+1,2) + C(j+1,2) - C(l+1,2)}
/// ```
///
/// The second exponent is at least `C(max(i,j)+1, 2)`, which bounds both
/// outer loops.
pub fn avoid_123_231_series(precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(precision);
    for i in 1.. {
        if choose2(i) >= precision {
            break;
        }
        s.add_term(choose2(i), 1);
    }
    for i in 1.. {
        if choose2(i + 1) >= precision {
            break;
        }
        for j in 1.. {
            if choose2(j + 1) >= precision {
                break;
            }
            for l in 0..i.min(j) {
                s.add_term(choose2(i + 1) + choose2(j + 1) - choose2(l + 1), 1);
            }
        }
    }
    s
}

/// Series for `{132, 123}`, the Pascal triangle without its first column
/// read along shallow diagonals:
///
/// ```text
/// sum_{n>=0} x^{n(n+3)/2} ((x+1)^{n+2} - x^{n+2})
/// ```
///
/// Coefficient `k` counts the class at `k + 1` inversions.
pub fn avoid_132_123_series(precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(precision);
    for n in 0.. {
        let base = n * (n + 3) / 2;
        if base >= precision {
            break;
        }
        for j in 0..n + 2 {
            s.add_term(base + j, binomial(n + 2, j));
        }
    }
    s
}

/// Series for `{132, 213}`: every finite sequence of positive integers of
/// length other than one contributes `x^{e2}`, where `e2` is the second
/// elementary symmetric function of its entries. The empty sequence gives
/// the constant term.
pub fn gorenstein_series(precision: usize) -> TruncatedSeries {
    let mut tally = vec![0u64; precision];
    // first part m forces a second part, so e2 >= m
    for m in 1..precision {
        extend_sequence(m, 0, 1, precision, &mut tally);
    }
    tally[0] += 1;
    TruncatedSeries::from_coefficients(tally.into_iter().map(BigInt::from).collect(), precision)
}

fn extend_sequence(sum: usize, e2: usize, len: usize, precision: usize, tally: &mut [u64]) {
    if len >= 2 {
        tally[e2] += 1;
    }
    for m in 1.. {
        let next = e2 + m * sum;
        if next >= precision {
            break;
        }
        extend_sequence(sum + m, next, len + 1, precision, tally);
    }
}

/// Series for `{123, 132, 213}`:
///
/// ```text
/// 1 + sum_{d>=3} x^C(d-1,2) sum_{n=2..d} C(n, d-n) x^{n-2}
/// ```
///
/// Coefficient `k` counts the class at `k + 1` inversions.
pub fn avoid_123_132_213_series(precision: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(precision);
    for d in 3.. {
        let base = choose2(d - 1);
        if base >= precision {
            break;
        }
        for n in 2..=d {
            s.add_term(base + n - 2, binomial(n, d - n));
        }
    }
    s
}

/// Series for `{123, 132, 213, 231}`: indicator of the triangular numbers
/// plus indicator of `(i+1)(i+4)/2`.
pub fn avoid_123_132_213_231_series(precision: usize) -> TruncatedSeries {
    let mut s = triangular_series(precision);
    for i in 0.. {
        let e = (i + 1) * (i + 4) / 2;
        if e >= precision {
            break;
        }
        s.add_term(e, 1);
    }
    s
}

/// Fountains of coins by coin count, from the continued fraction
/// `1/(1 - x/(1 - x²/(1 - x³/…)))`. Levels at depth `>= precision` only
/// touch coefficients past the precision, so they are replaced by 1.
pub fn fountain_series(precision: usize) -> TruncatedSeries {
    let mut r = TruncatedSeries::one(precision);
    for j in (1..precision).rev() {
        let denominator = TruncatedSeries::one(precision).sub(&r.shift(j));
        r = denominator
            .inverse()
            .expect("denominator has constant term 1");
    }
    r
}

/// Result of aligning a series against a reference count sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OffsetReport {
    /// The shift `o` with `coefficient(k) = reference(k + o)`.
    pub offset: Option<i64>,
    /// Series indices `k` the match was checked on.
    pub matched_range: Option<(usize, usize)>,
    /// One line per candidate shift explaining why it failed.
    pub diff: Vec<String>,
}

pub const MAX_OFFSET: i64 = 2;

/// Finds the unique shift `o` in `-2..=2` such that the series coefficient at
/// `k` equals the reference term at `k + o` wherever both exist.
pub fn pin_offset(series: &TruncatedSeries, reference: &CountReport) -> Result<OffsetReport> {
    if reference.terms.len() < 4 {
        return Err(Error::Domain(format!(
            "offset pinning needs at least 4 reference terms, got {}",
            reference.terms.len()
        )));
    }
    let mut matches = Vec::new();
    let mut diff = Vec::new();
    for o in -MAX_OFFSET..=MAX_OFFSET {
        let mut range: Option<(usize, usize)> = None;
        let mut first_bad = None;
        for k in 0..series.precision() {
            let target = k as i64 + o;
            if target < 0 {
                continue;
            }
            let Some(expected) = reference.value_at(target as usize) else {
                continue;
            };
            let got = &series.coefficients[k];
            if got != &BigInt::from(expected.clone()) {
                first_bad = Some(format!(
                    "offset {o:+}: coefficient {k} = {got}, reference {target} = {expected}"
                ));
                break;
            }
            range = Some(range.map_or((k, k), |(lo, _)| (lo, k)));
        }
        match (first_bad, range) {
            (Some(line), _) => diff.push(line),
            (None, None) => diff.push(format!("offset {o:+}: no overlapping terms")),
            (None, Some((lo, hi))) if hi - lo + 1 < 4 => {
                diff.push(format!("offset {o:+}: only {} overlapping terms", hi - lo + 1))
            }
            (None, Some(r)) => matches.push((o, r)),
        }
    }
    Ok(match matches.as_slice() {
        [(o, r)] => OffsetReport {
            offset: Some(*o),
            matched_range: Some(*r),
            diff: Vec::new(),
        },
        [] => OffsetReport {
            offset: None,
            matched_range: None,
            diff,
        },
        many => OffsetReport {
            offset: None,
            matched_range: None,
            diff: vec![format!(
                "ambiguous: offsets {:?} all match",
                many.iter().map(|(o, _)| *o).collect::<Vec<_>>()
            )],
        },
    })
}
