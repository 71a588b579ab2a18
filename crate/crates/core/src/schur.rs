//! Principal specializations of Schur polynomials.

use crate::cyclotomic::CycInt;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::partition::{check_degree, Partition};
use crate::prime::OddPrime;

/// `s_ν(q^{-l}, q^{-l+2}, …, q^l)` by the hook content formula
///
/// `Π_{c ∈ C_{l+1}} (q^c - q^{-c}) / Π_{h ∈ H} (q^h - q^{-h})`,
///
/// dividing out one hook factor at a time.
///
/// # Panics
///
/// If some hook factor fails to divide exactly. That cannot happen for a
/// correct implementation and is reported with the offending hook.
pub fn shcf_laurent(nu: &Partition, l: usize, p: OddPrime) -> Result<LaurentPoly> {
    check_degree(p, l)?;
    Ok(shcf_unchecked(nu, l))
}

pub(crate) fn shcf_unchecked(nu: &Partition, l: usize) -> LaurentPoly {
    if nu.length() > l + 1 {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for c in nu.shifted_contents(l as i64 + 1).elements() {
        acc = &acc * &LaurentPoly::antisymmetric_unit(c);
    }
    for h in nu.hooks().elements() {
        acc = acc
            .div_exact(&LaurentPoly::antisymmetric_unit(h))
            .unwrap_or_else(|| panic!("hook {h} of {nu} does not divide exactly (l = {l})"));
    }
    acc
}

/// `s_ν(ζ^{-l}, ζ^{-l+2}, …, ζ^l)` for `ν` p-small.
pub fn schur_at_roots(nu: &Partition, l: usize, p: OddPrime) -> Result<CycInt> {
    check_degree(p, l)?;
    nu.require_p_small(p)?;
    Ok(CycInt::from_laurent(p, &shcf_unchecked(nu, l)))
}
