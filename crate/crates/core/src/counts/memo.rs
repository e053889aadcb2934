use num_bigint::BigUint;

/// Ragged two-dimensional table of big integers. Rows are appended whole
/// and never modified afterwards.
#[derive(Clone, Debug, Default)]
pub struct MemoTable {
    rows: Vec<Vec<BigUint>>,
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::default()
    }

    pub fn push_row(&mut self, row: Vec<BigUint>) {
        self.rows.push(row);
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, m: usize) -> Option<&BigUint> {
        self.rows.get(n)?.get(m)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}
