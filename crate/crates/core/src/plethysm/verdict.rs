//! Closed-form classifications of projective and stably-irreducible
//! plethysms `∇^ν Sym^l E`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{check_degree, Partition};
use crate::prime::OddPrime;

/// The case of the classification that a pair `(ν, l)` falls under.
///
/// The first six variants are the families for arbitrary p-small `ν`; the
/// next three (together with `Rectangular`) are the families for
/// `(p,l)`-small `ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `((p-l-1)^b, 1)` or `((p-l-1)^b)`.
    ElementaryRows,
    /// `(a+1, a^l)` or `(a^{l+1})`.
    ElementaryColumns,
    /// `((p-l-1)^b, p-l-2)`, or `l = 1` with `ν` inside a `2 × (p-2)` box.
    AugmentedRow,
    /// `((a+1)^l, a)`, or `l = p-3` with `ν` inside a `(p-2) × 2` box.
    AugmentedColumn,
    /// `(p-l-1, 1^l)`.
    Hook,
    /// `p = 7` with `((2,2,2), 3)` or `((3,3), 2)`.
    Rectangular,
    /// `∅` or `(1)`.
    Elementary,
    /// `(p-l-2)` or `l = 1`.
    Row,
    /// `(1^l)` or `l = p-3`.
    Column,
    Projective,
    Neither,
}

impl Verdict {
    pub fn is_stably_irreducible(self) -> bool {
        !matches!(self, Verdict::Projective | Verdict::Neither)
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::ElementaryRows => "elementary augmented by rows",
            Verdict::ElementaryColumns => "elementary augmented by columns",
            Verdict::AugmentedRow => "augmented row",
            Verdict::AugmentedColumn => "augmented column",
            Verdict::Hook => "hook",
            Verdict::Rectangular => "rectangular",
            Verdict::Elementary => "elementary",
            Verdict::Row => "row",
            Verdict::Column => "column",
            Verdict::Projective => "projective",
            Verdict::Neither => "neither",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub(crate) fn check_input(nu: &Partition, l: usize, p: OddPrime) -> Result<()> {
    check_degree(p, l)?;
    nu.require_p_small(p)
}

/// `∇^ν Sym^l E` is projective iff `ν_1 ≥ p - l` or `ℓ(ν) ≥ l + 2`.
pub fn is_projective_theorem(nu: &Partition, l: usize, p: OddPrime) -> Result<bool> {
    check_input(nu, l, p)?;
    Ok(nu.first_part() + l >= p.as_usize() || nu.length() >= l + 2)
}

/// `b` rows of length `r` followed by `tail` (zeros dropped).
fn stack(r: usize, b: usize, tail: &[usize]) -> Partition {
    let mut parts = vec![r; b];
    parts.extend_from_slice(tail);
    Partition::new(parts).unwrap_or_default()
}

/// `head` followed by `b` rows of length `r`.
fn cap(head: usize, r: usize, b: usize) -> Partition {
    let mut parts = vec![head];
    parts.extend(std::iter::repeat_n(r, b));
    Partition::new(parts).unwrap_or_default()
}

fn fits_in_box(nu: &Partition, rows: usize, cols: usize) -> bool {
    nu.length() <= rows && nu.first_part() <= cols
}

/// Matches `ν` against the six families in order, reporting the first hit;
/// otherwise `Projective` or `Neither`.
pub fn is_stably_irreducible_theorem(nu: &Partition, l: usize, p: OddPrime) -> Result<Verdict> {
    check_input(nu, l, p)?;
    let n = p.as_usize();
    let r = n - l - 1;
    // Larger parameters give partitions of size at least p.
    let params = || 0..=n;

    if params().any(|b| *nu == stack(r, b, &[1]) || *nu == stack(r, b, &[])) {
        return Ok(Verdict::ElementaryRows);
    }
    if params().any(|a| *nu == cap(a + 1, a, l) || *nu == stack(a, l + 1, &[])) {
        return Ok(Verdict::ElementaryColumns);
    }
    if params().any(|b| *nu == stack(r, b, &[r - 1])) || (l == 1 && fits_in_box(nu, 2, n - 2)) {
        return Ok(Verdict::AugmentedRow);
    }
    if params().any(|a| *nu == stack(a + 1, l, &[a])) || (l + 3 == n && fits_in_box(nu, n - 2, 2)) {
        return Ok(Verdict::AugmentedColumn);
    }
    if *nu == cap(r, 1, l) {
        return Ok(Verdict::Hook);
    }
    if n == 7 && ((l == 3 && nu.parts() == [2, 2, 2]) || (l == 2 && nu.parts() == [3, 3])) {
        return Ok(Verdict::Rectangular);
    }
    if is_projective_theorem(nu, l, p)? {
        Ok(Verdict::Projective)
    } else {
        Ok(Verdict::Neither)
    }
}

/// The classification for `(p,l)`-small `ν`.
pub fn is_stably_irreducible_pl_small(nu: &Partition, l: usize, p: OddPrime) -> Result<Verdict> {
    require_pl_small(nu, l, p)?;
    let n = p.as_usize();
    if nu.size() <= 1 {
        return Ok(Verdict::Elementary);
    }
    if *nu == Partition::row(n - l - 2) || l == 1 {
        return Ok(Verdict::Row);
    }
    if *nu == Partition::column(l) || l + 3 == n {
        return Ok(Verdict::Column);
    }
    if n == 7 && ((l == 3 && nu.parts() == [2, 2, 2]) || (l == 2 && nu.parts() == [3, 3])) {
        return Ok(Verdict::Rectangular);
    }
    Ok(Verdict::Neither)
}

pub(crate) fn require_pl_small(nu: &Partition, l: usize, p: OddPrime) -> Result<()> {
    if nu.is_pl_small(p, l)? {
        Ok(())
    } else {
        Err(Error::NotPlSmall {
            partition: nu.to_string(),
            p: p.get(),
            l,
        })
    }
}

/// `λ = ν` for even `i` and `ν'` for odd `i`.
pub fn twisted_partition(nu: &Partition, i: usize) -> Partition {
    if i.is_multiple_of(2) {
        nu.clone()
    } else {
        nu.conjugate()
    }
}

/// `∇^ν(Ω^i Sym^l E)` is projective iff `λ_1 ≥ p - l` or `ℓ(λ) ≥ l + 2`.
pub fn is_projective_twisted_theorem(nu: &Partition, l: usize, i: usize, p: OddPrime) -> Result<bool> {
    is_projective_theorem(&twisted_partition(nu, i), l, p)
}

thread_local! {
    static PAIR_CACHE: RefCell<HashMap<(Partition, usize, u32), bool>> = RefCell::new(HashMap::new());
}

/// Whether `(ν, l)` is a stably-irreducible pair, memoized per thread.
pub fn is_stably_irreducible_pair(nu: &Partition, l: usize, p: OddPrime) -> Result<bool> {
    let key = (nu.clone(), l, p.get());
    if let Some(v) = PAIR_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return Ok(v);
    }
    let v = is_stably_irreducible_theorem(nu, l, p)?.is_stably_irreducible();
    PAIR_CACHE.with(|c| c.borrow_mut().insert(key, v));
    Ok(v)
}

/// `∇^ν(Ω^i Sym^l E)` is stably-irreducible iff `p - 1 | i|ν|` and `(λ, l)`
/// is a stably-irreducible pair.
pub fn is_stably_irreducible_twisted_theorem(
    nu: &Partition,
    l: usize,
    i: usize,
    p: OddPrime,
) -> Result<bool> {
    let lambda = twisted_partition(nu, i);
    let pair = is_stably_irreducible_pair(&lambda, l, p)?;
    Ok((i * nu.size()).is_multiple_of(p.heller_period()) && pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn prime(p: u32) -> OddPrime {
        OddPrime::new(p).unwrap()
    }

    #[test]
    fn projective_examples() {
        let p = prime(7);
        assert!(is_projective_theorem(&part(&[6]), 1, p).unwrap());
        assert!(is_projective_theorem(&part(&[1, 1, 1]), 1, p).unwrap());
        assert!(!is_projective_theorem(&part(&[1]), 0, p).unwrap());
        assert!(is_projective_theorem(&part(&[4, 3]), 1, p).is_err());
    }

    #[test]
    fn named_cases() {
        let p = prime(7);
        assert_eq!(
            is_stably_irreducible_theorem(&part(&[2, 2, 2]), 3, p).unwrap(),
            Verdict::Rectangular
        );
        assert_eq!(
            is_stably_irreducible_theorem(&part(&[3, 3]), 2, p).unwrap(),
            Verdict::Rectangular
        );
        assert_eq!(
            is_stably_irreducible_theorem(&part(&[2, 1]), 3, p).unwrap(),
            Verdict::Neither
        );
        for l in 0..=5 {
            let r = 6 - l;
            for b in 0..=6 / r {
                let mut parts = vec![r; b];
                parts.push(1);
                let nu = Partition::new(parts).unwrap();
                if nu.size() < 7 {
                    assert_eq!(
                        is_stably_irreducible_theorem(&nu, l, p).unwrap(),
                        Verdict::ElementaryRows
                    );
                }
            }
        }
        assert_eq!(
            is_stably_irreducible_theorem(&part(&[5]), 1, p).unwrap(),
            Verdict::ElementaryRows
        );
        assert_eq!(
            is_stably_irreducible_theorem(&part(&[6]), 1, p).unwrap(),
            Verdict::Projective
        );
        assert_eq!(
            is_stably_irreducible_theorem(&part(&[3, 3]), 1, p).unwrap(),
            Verdict::ElementaryColumns
        );
    }

    #[test]
    fn pl_small_examples() {
        let p = prime(7);
        assert_eq!(
            is_stably_irreducible_pl_small(&Partition::empty(), 2, p).unwrap(),
            Verdict::Elementary
        );
        assert_eq!(
            is_stably_irreducible_pl_small(&part(&[3]), 2, p).unwrap(),
            Verdict::Row
        );
        assert_eq!(
            is_stably_irreducible_pl_small(&part(&[2, 2, 2]), 3, p).unwrap(),
            Verdict::Rectangular
        );
        assert!(matches!(
            is_stably_irreducible_pl_small(&part(&[2]), 2, prime(5)),
            Err(Error::NotPlSmall { .. })
        ));
    }

    #[test]
    fn twisted_predicates() {
        let p = prime(5);
        // Ω(E) with ν = (2): λ = (1,1), |ν|·1 = 2 not divisible by 4.
        assert!(!is_stably_irreducible_twisted_theorem(&part(&[2]), 1, 1, p).unwrap());
        assert!(is_stably_irreducible_twisted_theorem(&part(&[2]), 1, 2, p).unwrap());
        assert!(is_projective_twisted_theorem(&part(&[1, 1, 1]), 1, 0, p).unwrap());
        assert!(is_projective_twisted_theorem(&part(&[3]), 1, 1, p).unwrap());
    }
}
