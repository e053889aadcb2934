use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::perm::Permutation;

/// Sequences with an elementary closed form or textbook recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormFamily {
    Partitions,
    DistinctPartitions,
    EqualPartitions,
    Divisors,
    OddDivisors,
    TriangularChar,
    ConstantOne,
}

impl ClosedFormFamily {
    pub const ALL: [ClosedFormFamily; 7] = [
        ClosedFormFamily::Partitions,
        ClosedFormFamily::DistinctPartitions,
        ClosedFormFamily::EqualPartitions,
        ClosedFormFamily::Divisors,
        ClosedFormFamily::OddDivisors,
        ClosedFormFamily::TriangularChar,
        ClosedFormFamily::ConstantOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFormFamily::Partitions => "partitions",
            ClosedFormFamily::DistinctPartitions => "distinct-partitions",
            ClosedFormFamily::EqualPartitions => "equal-partitions",
            ClosedFormFamily::Divisors => "divisors",
            ClosedFormFamily::OddDivisors => "odd-divisors",
            ClosedFormFamily::TriangularChar => "triangular-char",
            ClosedFormFamily::ConstantOne => "constant-one",
        }
    }
}

impl fmt::Display for ClosedFormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFormFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClosedFormFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family {s:?}")))
    }
}

pub fn closed_form(family: ClosedFormFamily, k: usize) -> BigUint {
    closed_form_sequence(family, k).pop().unwrap()
}

/// Terms `0..=k_max` of `family`.
pub fn closed_form_sequence(family: ClosedFormFamily, k_max: usize) -> Vec<BigUint> {
    match family {
        ClosedFormFamily::Partitions => partition_numbers(k_max),
        ClosedFormFamily::DistinctPartitions => distinct_partition_numbers(k_max),
        ClosedFormFamily::EqualPartitions | ClosedFormFamily::Divisors => {
            (0..=k_max).map(|k| BigUint::from(divisor_count(k, false))).collect()
        }
        ClosedFormFamily::OddDivisors => {
            (0..=k_max).map(|k| BigUint::from(divisor_count(k, true))).collect()
        }
        ClosedFormFamily::TriangularChar => (0..=k_max)
            .map(|k| BigUint::from(is_triangular(k) as u32))
            .collect(),
        ClosedFormFamily::ConstantOne => vec![BigUint::one(); k_max + 1],
    }
}

/// `p(0..=k_max)` via Euler's pentagonal-number recurrence.
pub fn partition_numbers(k_max: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(k_max + 1);
    p.push(BigInt::one());
    for n in 1..=k_max {
        let mut sum = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if j % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p.push(sum);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("p(n) is positive"))
        .collect()
}

/// `q(0..=k_max)`: coefficients of `prod_{i>=1} (1 + x^i)`.
pub fn distinct_partition_numbers(k_max: usize) -> Vec<BigUint> {
    let mut q = vec![BigUint::zero(); k_max + 1];
    q[0] = BigUint::one();
    for part in 1..=k_max {
        for s in (part..=k_max).rev() {
            let add = q[s - part].clone();
            q[s] += add;
        }
    }
    q
}

/// Trial division. `0` is given one divisor so that the sequences start at
/// `|I_0| = 1`.
pub fn divisor_count(k: usize, odd_only: bool) -> usize {
    if k == 0 {
        return 1;
    }
    let mut count = 0;
    let mut d = 1;
    while d * d <= k {
        if k % d == 0 {
            let e = k / d;
            for x in if d == e { vec![d] } else { vec![d, e] } {
                if !odd_only || x % 2 == 1 {
                    count += 1;
                }
            }
        }
        d += 1;
    }
    count
}

pub fn is_triangular(k: usize) -> bool {
    let mut t = 0;
    let mut i = 0;
    while t < k {
        i += 1;
        t += i;
    }
    t == k
}

/// The only indecomposable permutation with `k` inversions avoiding both
/// 231 and 321: `1` for `k = 0`, otherwise `(k+1) 1 2 … k`.
pub fn unique_avoider_231_321(k: usize) -> Permutation {
    let mut values = vec![k + 1];
    values.extend(1..=k);
    Permutation::from_vec_unchecked(values)
}
