use std::fmt;

use super::{check, Bounds};
use crate::error::{Error, Result};

/// Parallelogram polyomino as a run of column intervals `[bottom, top]`.
/// The first column starts at height 1; bottoms and tops are weakly
/// increasing and neighbouring columns share at least one edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParallelogramPolyomino {
    columns: Vec<(usize, usize)>,
}

impl ParallelogramPolyomino {
    pub fn new(columns: Vec<(usize, usize)>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::Domain(format!("{columns:?}: {msg}")));
        match columns.first() {
            None => return bad("no columns"),
            Some(&(b, _)) if b != 1 => return bad("first column must start at 1"),
            _ => {}
        }
        if columns.iter().any(|&(b, t)| t < b) {
            return bad("column top below its bottom");
        }
        for w in columns.windows(2) {
            let ((b0, t0), (b1, t1)) = (w[0], w[1]);
            if b1 < b0 || t1 < t0 || b1 > t0 {
                return bad("columns are not a parallelogram staircase");
            }
        }
        Ok(ParallelogramPolyomino { columns })
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    pub fn cells(&self) -> usize {
        self.columns.iter().map(|&(b, t)| t - b + 1).sum()
    }

    /// Column strips drawn with `#`, top row first.
    pub fn render(&self) -> String {
        let top = self.columns.iter().map(|&(_, t)| t).max().unwrap_or(0);
        (1..=top)
            .rev()
            .map(|y| {
                self.columns
                    .iter()
                    .map(|&(b, t)| if (b..=t).contains(&y) { '#' } else { '.' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for ParallelogramPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polyomino{:?}", self.columns)
    }
}

pub fn polyominoes_with_cells(k: usize, bounds: &Bounds) -> Result<Vec<ParallelogramPolyomino>> {
    if k == 0 {
        return Err(Error::Domain("a polyomino has at least one cell".into()));
    }
    check("polyomino cells", k, bounds.polyomino_cells)?;
    let mut out = Vec::new();
    for h in 1..=k {
        let mut columns = vec![(1, h)];
        extend(&mut columns, k - h, &mut out);
    }
    Ok(out)
}

fn extend(columns: &mut Vec<(usize, usize)>, rest: usize, out: &mut Vec<ParallelogramPolyomino>) {
    if rest == 0 {
        out.push(ParallelogramPolyomino {
            columns: columns.clone(),
        });
        return;
    }
    let (b, t) = *columns.last().unwrap();
    for h in 1..=rest {
        // new column [nb, nb + h - 1] with b <= nb <= t and nb + h - 1 >= t
        let lowest = b.max((t + 1).saturating_sub(h));
        for nb in lowest..=t {
            columns.push((nb, nb + h - 1));
            extend(columns, rest - h, out);
            columns.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let b = Bounds::default();
        let counts: Vec<usize> = (1..=3)
            .map(|k| polyominoes_with_cells(k, &b).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4]);
        let three = polyominoes_with_cells(3, &b).unwrap();
        let expected = [
            vec![(1, 3)],
            vec![(1, 2), (2, 2)],
            vec![(1, 1), (1, 2)],
            vec![(1, 1), (1, 1), (1, 1)],
        ];
        for cols in expected {
            assert!(three.contains(&ParallelogramPolyomino::new(cols).unwrap()));
        }
    }

    #[test]
    fn rejects_zero_and_oversize() {
        let b = Bounds::default();
        assert!(polyominoes_with_cells(0, &b).is_err());
        assert!(polyominoes_with_cells(15, &b).is_err());
    }

    #[test]
    fn validation() {
        assert!(ParallelogramPolyomino::new(vec![(1, 1), (2, 2)]).is_err());
        assert!(ParallelogramPolyomino::new(vec![(2, 2)]).is_err());
        assert!(ParallelogramPolyomino::new(vec![(1, 3), (2, 2)]).is_err());
        assert!(ParallelogramPolyomino::new(vec![(1, 2), (2, 4)]).is_ok());
    }

    #[test]
    fn render_strips() {
        let p = ParallelogramPolyomino::new(vec![(1, 1), (1, 2)]).unwrap();
        assert_eq!(p.render(), ".#\n##");
    }
}
