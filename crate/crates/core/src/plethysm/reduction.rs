//! The multiset criterion for `(p,l)`-small partitions and the row/column
//! reductions that bring any p-small partition into that range.

use crate::error::{Error, Result};
use crate::multiset::IntMultiset;
use crate::partition::{check_degree, Partition};
use crate::plethysm::verdict::require_pl_small;
use crate::prime::OddPrime;

/// The folds `(H^F, C_{l+1}^F)` of the hook lengths and shifted contents.
pub fn folded_multisets(nu: &Partition, l: usize, p: OddPrime) -> Result<(IntMultiset, IntMultiset)> {
    let hooks = nu.hooks().fold(p)?;
    let contents = nu.shifted_contents(l as i64 + 1).fold(p)?;
    Ok((hooks, contents))
}

/// The smallest `i` with `C_{l+1}^F = (H^F ∪ {i}) \ {1}`, where the right
/// side requires `1 ∈ H^F ∪ {i}`.
pub fn multiset_criterion(nu: &Partition, l: usize, p: OddPrime) -> Result<Option<i64>> {
    require_pl_small(nu, l, p)?;
    let (hooks, contents) = folded_multisets(nu, l, p)?;
    for i in 1..=p.half() as i64 {
        let mut candidate = hooks.clone();
        candidate.insert(i);
        if candidate.remove(1).is_ok() && candidate == contents {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Removes the first column of `ν` when `ℓ(ν) = l + 1`; the plethysm is
/// unchanged.
pub fn reduce_column(nu: &Partition, l: usize, p: OddPrime) -> Result<Partition> {
    check_degree(p, l)?;
    if nu.length() != l + 1 {
        return Err(Error::Domain(format!(
            "column reduction needs ℓ(ν) = l + 1 = {}, got ν = {nu}",
            l + 1
        )));
    }
    nu.remove_first_column()
}

/// Removes the first row of `ν` when `ν_1 = p - l - 1`. The flag reports
/// whether the plethysm picks up a factor `Sym^{p-2} E`, which happens
/// exactly when the removed row has odd length.
pub fn reduce_row(nu: &Partition, l: usize, p: OddPrime) -> Result<(Partition, bool)> {
    check_degree(p, l)?;
    let r = p.as_usize() - l - 1;
    if nu.first_part() != r {
        return Err(Error::Domain(format!(
            "row reduction needs ν_1 = p - l - 1 = {r}, got ν = {nu}"
        )));
    }
    let mu = nu.remove_first_row()?;
    let twist = (nu.size() - mu.size()) % 2 == 1;
    Ok((mu, twist))
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
    fn criterion_examples() {
        let p = prime(7);
        assert_eq!(multiset_criterion(&part(&[2, 2, 2]), 3, p).unwrap(), Some(3));
        assert_eq!(multiset_criterion(&part(&[3, 3]), 2, p).unwrap(), Some(3));
        assert_eq!(multiset_criterion(&part(&[2, 2]), 2, p).unwrap(), None);
        assert_eq!(multiset_criterion(&Partition::empty(), 2, p).unwrap(), Some(1));
        for l in 1..=3 {
            let row = Partition::row(5 - l);
            let expected = (l as i64 + 1).min(6 - l as i64);
            assert_eq!(multiset_criterion(&row, l, p).unwrap(), Some(expected));
        }
        assert!(multiset_criterion(&part(&[2]), 2, prime(5)).is_err());
    }

    #[test]
    fn folds_of_two_two() {
        let p = prime(7);
        let (h, c) = folded_multisets(&part(&[2, 2]), 2, p).unwrap();
        assert_eq!(h, [1, 2, 2, 3].into_iter().collect());
        assert_eq!(c, [2, 3, 3, 3].into_iter().collect());
    }

    #[test]
    fn reductions() {
        let p = prime(5);
        assert_eq!(reduce_column(&part(&[1, 1]), 1, p).unwrap(), Partition::empty());
        assert!(reduce_column(&part(&[1]), 1, p).is_err());
        let (mu, twist) = reduce_row(&part(&[3]), 1, p).unwrap();
        assert_eq!(mu, Partition::empty());
        assert!(twist);
        let (mu, twist) = reduce_row(&part(&[2, 1]), 2, p).unwrap();
        assert_eq!(mu, part(&[1]));
        assert!(!twist);
        assert!(reduce_row(&part(&[2]), 1, p).is_err());
    }
}
