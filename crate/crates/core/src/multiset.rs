use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::prime::OddPrime;

/// A finite multiset of integers, stored as sorted `(value, multiplicity)`
/// pairs so that equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct IntMultiset {
    counts: BTreeMap<i64, usize>,
}

impl IntMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, x: i64) {
        self.insert_n(x, 1);
    }

    pub fn insert_n(&mut self, x: i64, n: usize) {
        if n > 0 {
            *self.counts.entry(x).or_insert(0) += n;
        }
    }

    /// Removes one copy of `x`.
    pub fn remove(&mut self, x: i64) -> Result<()> {
        match self.counts.get_mut(&x) {
            None => Err(Error::MissingElement(x)),
            Some(n) => {
                *n -= 1;
                if *n == 0 {
                    self.counts.remove(&x);
                }
                Ok(())
            }
        }
    }

    pub fn multiplicity(&self, x: i64) -> usize {
        self.counts.get(&x).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.counts.contains_key(&x)
    }

    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    /// `(value, multiplicity)` pairs in increasing order of value.
    pub fn counts(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&x, &n)| (x, n))
    }

    /// Every element with repetition, in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = i64> + '_ {
        self.counts
            .iter()
            .flat_map(|(&x, &n)| std::iter::repeat_n(x, n))
    }

    /// Replaces each `i ≥ (p+1)/2` by `p - i`. Elements must lie in `[1, p-1]`.
    pub fn fold(&self, p: OddPrime) -> Result<IntMultiset> {
        let p = p.as_i64();
        let mut out = IntMultiset::new();
        for (x, n) in self.counts() {
            if !(1..p).contains(&x) {
                return Err(out_of_range("multiset element", x, format!("[1, {}]", p - 1)));
            }
            out.insert_n(x.min(p - x), n);
        }
        Ok(out)
    }

    pub fn union(&self, other: &IntMultiset) -> IntMultiset {
        let mut out = self.clone();
        for (x, n) in other.counts() {
            out.insert_n(x, n);
        }
        out
    }
}

impl FromIterator<i64> for IntMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut out = IntMultiset::new();
        for x in iter {
            out.insert(x);
        }
        out
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(v: &[i64]) -> IntMultiset {
        v.iter().copied().collect()
    }

    #[test]
    fn fold_examples() {
        let p7 = OddPrime::new(7).unwrap();
        assert_eq!(ms(&[1, 2, 3, 4, 4, 6]).fold(p7).unwrap(), ms(&[1, 1, 2, 3, 3, 3]));
        assert_eq!(ms(&[1, 2, 3]).fold(p7).unwrap(), ms(&[1, 2, 3]));
        assert_eq!(ms(&[6]).fold(p7).unwrap(), ms(&[1]));
        assert!(ms(&[0]).fold(p7).is_err());
        assert!(ms(&[7]).fold(p7).is_err());
    }

    #[test]
    fn fold_matches_per_element_loop() {
        let p = OddPrime::new(13).unwrap();
        let m = ms(&[1, 5, 6, 7, 7, 8, 12, 12, 3]);
        let mut expected = IntMultiset::new();
        for x in m.elements() {
            expected.insert(if x > 6 { 13 - x } else { x });
        }
        assert_eq!(m.fold(p).unwrap(), expected);
    }

    #[test]
    fn removal() {
        let mut m = ms(&[1, 1, 2]);
        m.remove(1).unwrap();
        assert_eq!(m, ms(&[1, 2]));
        assert_eq!(m.remove(5), Err(Error::MissingElement(5)));
        m.remove(1).unwrap();
        assert!(!m.contains(1));
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(ms(&[2, 1, 1]).to_string(), "{1,1,2}");
        assert_eq!(IntMultiset::new().to_string(), "{}");
    }
}
