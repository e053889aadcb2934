use std::collections::BTreeSet;
use std::fmt;

use super::{check, Bounds};
use crate::error::{Error, Result};

/// Fountain of coins. Row 0 is the full bottom row `1..=n`; a coin at
/// `(r, p)` with `r >= 1` rests on `(r - 1, p)` and `(r - 1, p + 1)`.
/// Rows are stored sorted, with no empty rows on top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fountain {
    rows: Vec<Vec<usize>>,
}

impl Fountain {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Domain(msg));
        if let Some(bottom) = rows.first() {
            if bottom.is_empty() || *bottom != (1..=bottom.len()).collect::<Vec<_>>() {
                return bad(format!("bottom row {bottom:?} is not full"));
            }
        }
        for r in 1..rows.len() {
            let row = &rows[r];
            if row.is_empty() {
                return bad(format!("row {r} is empty"));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {r} is not strictly increasing"));
            }
            let below: BTreeSet<usize> = rows[r - 1].iter().copied().collect();
            if let Some(p) = row
                .iter()
                .find(|&&p| !(below.contains(&p) && below.contains(&(p + 1))))
            {
                return bad(format!("coin ({r}, {p}) is unsupported"));
            }
        }
        Ok(Fountain { rows })
    }

    pub fn empty() -> Self {
        Fountain { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn coins(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Coins in rows 0, 2, 4, ….
    pub fn even_row_coins(&self) -> usize {
        self.rows.iter().step_by(2).map(Vec::len).sum()
    }

    pub fn has_coin(&self, row: usize, pos: usize) -> bool {
        self.rows
            .get(row)
            .is_some_and(|r| r.binary_search(&pos).is_ok())
    }

    /// Compares against the full triangle on the same bottom row. Each
    /// missing coin `(r, p)` is read in diagonal coordinates
    /// `(p, n - r + 1 - p)`; the test passes when nothing is missing or the
    /// missing coordinates are exactly `{1..a} × {1..b}`.
    pub fn missing_set_is_rectangle(&self) -> bool {
        let n = self.width();
        let mut missing = BTreeSet::new();
        for r in 0..n {
            for p in 1..=n - r {
                if !self.has_coin(r, p) {
                    missing.insert((p, n - r + 1 - p));
                }
            }
        }
        if missing.is_empty() {
            return true;
        }
        let a = missing.iter().map(|&(u, _)| u).max().unwrap();
        let b = missing.iter().map(|&(_, v)| v).max().unwrap();
        missing.len() == a * b
    }

    /// Text picture, top row first, coins offset by half positions.
    pub fn render(&self) -> String {
        let n = self.width();
        let mut lines = Vec::new();
        for (r, row) in self.rows.iter().enumerate().rev() {
            let mut line = vec![' '; 2 * n];
            for &p in row {
                line[r + 2 * (p - 1)] = 'o';
            }
            lines.push(line.into_iter().collect::<String>().trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl fmt::Debug for Fountain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fountain{:?}", self.rows)
    }
}

/// Rows bottom-up, e.g. `[1,2,3|1,2]`.
impl fmt::Display for Fountain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl fmt::Display for EvenFountain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fountain.fmt(f)
    }
}

/// A fountain whose size counts only the coins in even rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenFountain {
    fountain: Fountain,
    size: usize,
}

impl EvenFountain {
    pub fn new(fountain: Fountain) -> Self {
        let size = fountain.even_row_coins();
        EvenFountain { fountain, size }
    }

    pub fn fountain(&self) -> &Fountain {
        &self.fountain
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Every fountain with exactly `k` coins; `k = 0` gives the empty fountain.
pub fn fountains_with_coins(k: usize, bounds: &Bounds) -> Result<Vec<Fountain>> {
    check("fountain coins", k, bounds.fountain_coins)?;
    Ok(grow(k, |_| true))
}

/// Every fountain whose even rows hold exactly `s` coins. Odd rows are free,
/// but each row is narrower than the one below, so the set is finite.
pub fn even_fountains_of_size(s: usize, bounds: &Bounds) -> Result<Vec<EvenFountain>> {
    check("even fountain size", s, bounds.even_fountain_size)?;
    Ok(grow(s, |row| row % 2 == 0)
        .into_iter()
        .map(EvenFountain::new)
        .collect())
}

/// Enumerates fountains spending exactly `budget` on the rows for which
/// `counted(row)` holds.
fn grow(budget: usize, counted: impl Fn(usize) -> bool + Copy) -> Vec<Fountain> {
    let mut out = Vec::new();
    if budget == 0 {
        out.push(Fountain::empty());
    }
    for n in 1..=budget {
        let mut rows = vec![(1..=n).collect::<Vec<_>>()];
        stack(&mut rows, budget - n, counted, &mut out);
    }
    out
}

fn stack(
    rows: &mut Vec<Vec<usize>>,
    budget: usize,
    counted: impl Fn(usize) -> bool + Copy,
    out: &mut Vec<Fountain>,
) {
    if budget == 0 {
        out.push(Fountain { rows: rows.clone() });
    }
    let top = rows.last().unwrap();
    let supported: Vec<usize> = top
        .windows(2)
        .filter(|w| w[1] == w[0] + 1)
        .map(|w| w[0])
        .collect();
    if supported.is_empty() {
        return;
    }
    let next_counted = counted(rows.len());
    let mut chosen = Vec::new();
    choose(&supported, 0, &mut chosen, &mut |row: &[usize]| {
        let cost = if next_counted { row.len() } else { 0 };
        if cost <= budget {
            rows.push(row.to_vec());
            stack(rows, budget - cost, counted, out);
            rows.pop();
        }
    });
}

/// Calls `visit` with every nonempty subset of `slots[i..]` joined to `chosen`.
fn choose(slots: &[usize], i: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i == slots.len() {
        if !chosen.is_empty() {
            visit(chosen);
        }
        return;
    }
    choose(slots, i + 1, chosen, visit);
    chosen.push(slots[i]);
    choose(slots, i + 1, chosen, visit);
    chosen.pop();
}
