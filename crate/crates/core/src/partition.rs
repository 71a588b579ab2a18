//! Integer partitions and their Young-diagram statistics.
//!
//! Boxes are indexed `(i, j)` from 1, `i` the row and `j` the column. The
//! hook length of a box is `ν_i + ν'_j - i - j + 1` and its content is `j - i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::multiset::IntMultiset;
use crate::prime::OddPrime;

/// A partition: weakly decreasing positive parts. The empty partition is valid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts.iter().map(|&x| x as i64).collect()));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::new(vec![n]).unwrap()
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The rectangle `(a^b)`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Self { parts: vec![a; b] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `ν_1`, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `ν_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first_part();
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&r| r >= j).count())
            .collect();
        Partition { parts }
    }

    /// Boxes `(i, j)` in row-major order, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |j| (r + 1, j)))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn hooks(&self) -> IntMultiset {
        let conj = self.conjugate();
        self.boxes()
            .map(|(i, j)| (self.part(i) + conj.part(j) + 1 - i - j) as i64)
            .collect()
    }

    pub fn contents(&self) -> IntMultiset {
        self.shifted_contents(0)
    }

    /// The multiset `{ j - i + s }` over all boxes.
    pub fn shifted_contents(&self, s: i64) -> IntMultiset {
        self.boxes().map(|(i, j)| j as i64 - i as i64 + s).collect()
    }

    pub fn is_p_small(&self, p: OddPrime) -> bool {
        self.size() < p.as_usize()
    }

    /// `|ν| < p`, `ν_1 ≤ p - l - 2` and `ℓ(ν) ≤ l`.
    pub fn is_pl_small(&self, p: OddPrime, l: usize) -> Result<bool> {
        check_degree(p, l)?;
        let p = p.as_usize();
        Ok(self.size() < p && self.first_part() + l + 2 <= p && self.length() <= l)
    }

    pub fn require_p_small(&self, p: OddPrime) -> Result<()> {
        if self.is_p_small(p) {
            Ok(())
        } else {
            Err(Error::NotPSmall {
                partition: self.to_string(),
                size: self.size(),
                p: p.get(),
            })
        }
    }

    /// Decrements every part, dropping those that reach zero.
    pub fn remove_first_column(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::Domain("cannot remove a column from the empty partition".into()));
        }
        Partition::new(self.parts.iter().map(|&x| x - 1).collect())
    }

    pub fn remove_first_row(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::Domain("cannot remove a row from the empty partition".into()));
        }
        Ok(Partition {
            parts: self.parts[1..].to_vec(),
        })
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size `< p`, ordered by size then reverse lexicographically.
    pub fn all_p_small(p: OddPrime) -> Vec<Partition> {
        (0..p.as_usize()).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_sub_partitions(&self.parts, 0, usize::MAX, &mut current, &mut out);
        out
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

fn fill_sub_partitions(
    outer: &[usize],
    row: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition {
        parts: current.clone(),
    });
    if row == outer.len() {
        return;
    }
    for part in 1..=outer[row].min(max) {
        current.push(part);
        fill_sub_partitions(outer, row + 1, part, current, out);
        current.pop();
    }
}

pub(crate) fn check_degree(p: OddPrime, l: usize) -> Result<()> {
    if l + 2 > p.as_usize() {
        return Err(out_of_range("l", l as i64, format!("[0, {}]", p.get() - 2)));
    }
    Ok(())
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&x| x < 0) {
            return Err(Error::NotPartition(parts));
        }
        Partition::new(parts.into_iter().map(|x| x as usize).collect())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts such as `4,3,1`; the empty string, `0` and
    /// `∅` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Domain(format!("'{x}' is not an integer part")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::try_from(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ms(v: &[i64]) -> IntMultiset {
        v.iter().copied().collect()
    }

    #[test]
    fn canonical_form_and_validation() {
        assert_eq!(part(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::try_from(vec![2, -1]).is_err());
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), part(&[4, 3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn hooks_and_contents_of_431() {
        let nu = part(&[4, 3, 1]);
        assert_eq!(nu.hooks(), ms(&[1, 1, 1, 2, 3, 4, 4, 6]));
        assert_eq!(nu.shifted_contents(3), ms(&[1, 2, 3, 3, 4, 4, 5, 6]));
        assert_eq!(nu.contents(), ms(&[-2, -1, 0, 0, 1, 1, 2, 3]));
    }

    #[test]
    fn hooks_of_small_shapes() {
        assert!(Partition::empty().hooks().is_empty());
        assert_eq!(part(&[2, 2]).hooks(), ms(&[1, 2, 2, 3]));
        assert!(Partition::empty().shifted_contents(5).is_empty());
    }

    #[test]
    fn smallness_predicates() {
        let p7 = OddPrime::new(7).unwrap();
        assert!(!part(&[4, 3, 1]).is_p_small(p7));
        assert!(part(&[2, 2, 2]).is_pl_small(p7, 3).unwrap());
        assert!(Partition::empty()
            .is_pl_small(OddPrime::new(5).unwrap(), 0)
            .unwrap());
        assert!(part(&[1]).is_pl_small(p7, 6).is_err());
    }

    #[test]
    fn row_and_column_removal() {
        let nu = part(&[4, 3, 1]);
        assert_eq!(nu.remove_first_column().unwrap(), part(&[3, 2]));
        assert_eq!(nu.remove_first_row().unwrap(), part(&[3, 1]));
        assert_eq!(part(&[1, 1]).remove_first_column().unwrap(), Partition::empty());
        assert!(Partition::empty().remove_first_column().is_err());
        assert!(Partition::empty().remove_first_row().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<_> = (0..=12).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(part(&[2, 1]).sub_partitions().len(), 5);
    }

    #[test]
    fn hooks_invariant_under_conjugation() {
        for n in 0..=12 {
            for nu in Partition::all_of_size(n) {
                assert_eq!(nu.conjugate().conjugate(), nu);
                assert_eq!(nu.hooks(), nu.conjugate().hooks(), "{nu}");
                assert_eq!(nu.hooks().size(), n);
            }
        }
    }

    #[test]
    fn shifted_content_range() {
        // m ∈ C_s  ⟺  s + 1 - ℓ(ν) ≤ m ≤ ν_1 + s - 1, with unique extremes.
        for n in 1..=9 {
            for nu in Partition::all_of_size(n) {
                for s in -3..=6i64 {
                    let cs = nu.shifted_contents(s);
                    let lo = s + 1 - nu.length() as i64;
                    let hi = nu.first_part() as i64 + s - 1;
                    for m in lo - 2..=hi + 2 {
                        assert_eq!(cs.contains(m), lo <= m && m <= hi, "{nu} s={s} m={m}");
                    }
                    assert_eq!(cs.multiplicity(lo), 1);
                    assert_eq!(cs.multiplicity(hi), 1);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let nu = part(&[4, 3, 1]);
        let json = serde_json::to_string(&nu).unwrap();
        assert_eq!(json, "[4,3,1]");
        let back: Partition = serde_json::from_str("[4,3,1,0]").unwrap();
        assert_eq!(back, nu);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
