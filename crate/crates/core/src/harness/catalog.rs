use serde::Serialize;

use crate::counts::ClosedFormFamily;
use crate::perm::{PatternSet, Permutation};

/// Non-oracle counting routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FastPath {
    Closed(ClosedFormFamily),
    /// The two-index recurrence `a(k, 1)`.
    Avoid321,
    /// Row sums of `f(n, d)`.
    Gorenstein,
    /// Restricted inversion-table walk.
    Avoid123,
    /// Exhaustive fountains of coins.
    Fountains,
    /// Exhaustive fountains whose missing coins form a rectangle.
    RectangleFountains,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GfPath {
    Avoid123_231,
    Avoid132_123,
    Gorenstein,
    Avoid123_132_213,
    Avoid123_132_213_231,
    Fountain,
}

/// How a series or b-file is lined up with `|I_k|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OffsetPolicy {
    /// Index `k` is `|I_k|`.
    Aligned,
    /// The shift is found at run time by matching against the oracle.
    Pinned,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub patterns: PatternSet,
    pub description: &'static str,
    pub fast: Option<FastPath>,
    pub gf: Option<GfPath>,
    pub gf_offset: OffsetPolicy,
    pub oeis: Option<&'static str>,
    pub oeis_offset: OffsetPolicy,
}

impl CatalogEntry {
    /// Number of computation paths, the oracle included.
    pub fn path_count(&self) -> usize {
        1 + self.fast.is_some() as usize + self.gf.is_some() as usize
    }
}

struct Row {
    patterns: &'static str,
    description: &'static str,
    fast: Option<FastPath>,
    gf: Option<GfPath>,
    gf_offset: OffsetPolicy,
    oeis: Option<&'static str>,
    oeis_offset: OffsetPolicy,
}

const fn row(patterns: &'static str, description: &'static str) -> Row {
    Row {
        patterns,
        description,
        fast: None,
        gf: None,
        gf_offset: OffsetPolicy::Aligned,
        oeis: None,
        oeis_offset: OffsetPolicy::Aligned,
    }
}

impl Row {
    const fn fast(mut self, p: FastPath) -> Self {
        self.fast = Some(p);
        self
    }
    const fn gf(mut self, p: GfPath, offset: OffsetPolicy) -> Self {
        self.gf = Some(p);
        self.gf_offset = offset;
        self
    }
    const fn oeis(mut self, id: &'static str, offset: OffsetPolicy) -> Self {
        self.oeis = Some(id);
        self.oeis_offset = offset;
        self
    }
}

use ClosedFormFamily as C;
use OffsetPolicy::{Aligned, Pinned};

const ROWS: [Row; 19] = [
    row("12", "triangular numbers").fast(FastPath::Closed(C::TriangularChar)).oeis("A010054", Aligned),
    row("132", "partitions").fast(FastPath::Closed(C::Partitions)).oeis("A000041", Aligned),
    row("213", "partitions").fast(FastPath::Closed(C::Partitions)).oeis("A000041", Aligned),
    row("231", "fountains of coins")
        .fast(FastPath::Fountains)
        .gf(GfPath::Fountain, Aligned)
        .oeis("A005169", Aligned),
    row("321", "parallelogram polyominoes").fast(FastPath::Avoid321).oeis("A006958", Aligned),
    row("123", "decreasing non-diagonal table entries").fast(FastPath::Avoid123),
    row("123,231", "fountains missing a rectangle")
        .fast(FastPath::RectangleFountains)
        .gf(GfPath::Avoid123_231, Aligned),
    row("123,132", "Pascal triangle without its first column")
        .gf(GfPath::Avoid132_123, Pinned)
        .oeis("A135278", Pinned),
    row("132,213", "Gorenstein partitions")
        .fast(FastPath::Gorenstein)
        .gf(GfPath::Gorenstein, Aligned)
        .oeis("A117629", Aligned),
    row("132,231", "partitions into distinct parts")
        .fast(FastPath::Closed(C::DistinctPartitions))
        .oeis("A000009", Aligned),
    row("132,321", "partitions into equal parts")
        .fast(FastPath::Closed(C::EqualPartitions))
        .oeis("A000005", Aligned),
    row("231,321", "a single permutation").fast(FastPath::Closed(C::ConstantOne)),
    row("231,312", "triangular numbers").fast(FastPath::Closed(C::TriangularChar)).oeis("A010054", Aligned),
    row("123,321", "short permutations only"),
    row("123,132,231", "a single permutation").fast(FastPath::Closed(C::ConstantOne)),
    row("123,132,213", "Pascal diagonals").gf(GfPath::Avoid123_132_213, Pinned),
    row("132,213,231", "odd divisors")
        .fast(FastPath::Closed(C::OddDivisors))
        .oeis("A001227", Aligned),
    row("132,213,321", "divisors").fast(FastPath::Closed(C::Divisors)).oeis("A000005", Aligned),
    row("123,132,213,231", "Pascal triangle with entries above 1 cleared")
        .gf(GfPath::Avoid123_132_213_231, Aligned)
        .oeis("A103451", Pinned),
];

/// Every pattern class with a known count, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    ROWS.iter()
        .map(|r| CatalogEntry {
            patterns: r.patterns.parse().expect("catalog patterns parse"),
            description: r.description,
            fast: r.fast,
            gf: r.gf,
            gf_offset: r.gf_offset,
            oeis: r.oeis,
            oeis_offset: r.oeis_offset,
        })
        .collect()
}

/// Symmetry relating a query to the catalog entry that answers it. Both
/// maps preserve inversions and indecomposability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Identity,
    ReverseComplement,
    Inverse,
    InverseReverseComplement,
}

fn inverse_set(set: &PatternSet) -> PatternSet {
    PatternSet::new(set.iter().map(Permutation::inverse)).expect("nonempty")
}

/// The entry for `patterns`, or for its image under a symmetry.
pub fn entry(patterns: &PatternSet) -> Option<(CatalogEntry, Symmetry)> {
    let candidates = [
        (patterns.clone(), Symmetry::Identity),
        (patterns.reverse_complement(), Symmetry::ReverseComplement),
        (inverse_set(patterns), Symmetry::Inverse),
        (inverse_set(&patterns.reverse_complement()), Symmetry::InverseReverseComplement),
    ];
    let all = catalog();
    candidates.into_iter().find_map(|(set, sym)| {
        all.iter()
            .find(|e| e.patterns == set)
            .map(|e| (e.clone(), sym))
    })
}

/// Entry whose pattern set is exactly `patterns`.
pub fn exact_entry(patterns: &PatternSet) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| &e.patterns == patterns)
}
