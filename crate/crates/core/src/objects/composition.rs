use crate::error::{Error, Result};

/// Ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Second elementary symmetric function of the parts.
    pub fn e2(&self) -> usize {
        let mut prefix = 0;
        let mut total = 0;
        for &m in &self.parts {
            total += prefix * m;
            prefix += m;
        }
        total
    }
}

/// The `2^(s-1)` compositions of `s`, or the empty composition for `s = 0`.
pub fn compositions_of(s: usize) -> Vec<Composition> {
    if s == 0 {
        return vec![Composition { parts: Vec::new() }];
    }
    // bit i of the mask cuts between unit i and unit i + 1
    (0..1u64 << (s - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..s - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition { parts }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(compositions_of(0).len(), 1);
        assert_eq!(compositions_of(1).len(), 1);
        let three: Vec<Vec<usize>> = compositions_of(3).into_iter().map(|c| c.parts).collect();
        assert_eq!(three.len(), 4);
        for expected in [vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]] {
            assert!(three.contains(&expected));
        }
        assert!(compositions_of(7).iter().all(|c| c.sum() == 7));
    }

    #[test]
    fn e2_values() {
        assert_eq!(Composition::new(vec![1, 3]).unwrap().e2(), 3);
        assert_eq!(Composition::new(vec![1, 1, 1]).unwrap().e2(), 3);
        assert_eq!(Composition::new(vec![5]).unwrap().e2(), 0);
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
