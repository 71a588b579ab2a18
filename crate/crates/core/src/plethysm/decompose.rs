//! Schur functors on the stable representation ring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::verdict::{check_input, is_stably_irreducible_theorem, twisted_partition, Verdict};
use crate::prime::OddPrime;
use crate::schur::schur_at_roots;
use crate::stable::{Basis, StableElement};
use crate::tableau::lr_coefficient;

/// `∇^ν(Ω^m Sym^l E)` modulo projectives, with derived flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlethysmResult {
    pub p: OddPrime,
    pub nu: Partition,
    pub l: usize,
    pub twist_m: usize,
    pub decomposition: StableElement,
    pub projective: bool,
    pub stably_irreducible: bool,
    /// The single surviving summand when stably-irreducible.
    pub witness: Option<Basis>,
    pub theorem_case: Verdict,
}

impl PlethysmResult {
    fn new(p: OddPrime, nu: &Partition, l: usize, twist_m: usize, decomposition: StableElement) -> Result<Self> {
        assert!(
            decomposition.is_effective(),
            "∇^{nu}(Ω^{twist_m} Sym^{l} E) = {decomposition} has a negative multiplicity"
        );
        let witness = match decomposition.single_term() {
            Some((b, 1)) if b.m == 0 => Some(b),
            _ => None,
        };
        let lambda = twisted_partition(nu, twist_m);
        let untwisted = is_stably_irreducible_theorem(&lambda, l, p)?;
        let theorem_case = if twist_m == 0 {
            untwisted
        } else if untwisted == Verdict::Projective {
            Verdict::Projective
        } else if untwisted.is_stably_irreducible() && (twist_m * nu.size()).is_multiple_of(p.heller_period()) {
            untwisted
        } else {
            Verdict::Neither
        };
        Ok(Self {
            p,
            nu: nu.clone(),
            l,
            twist_m,
            projective: decomposition.is_zero(),
            stably_irreducible: witness.is_some(),
            witness,
            decomposition,
            theorem_case,
        })
    }
}

/// `∇^ν Sym^l E` modulo projectives: `Θ⁻¹` of `s_ν(ζ^{-l}, …, ζ^l)`, read
/// in the parity of `l|ν|`.
///
/// # Panics
///
/// If the inverted element has a negative coefficient, which would mean an
/// implementation bug.
pub fn decompose_plethysm(nu: &Partition, l: usize, p: OddPrime) -> Result<PlethysmResult> {
    let element = plethysm_element(nu, l, p)?;
    PlethysmResult::new(p, nu, l, 0, element)
}

fn plethysm_element(nu: &Partition, l: usize, p: OddPrime) -> Result<StableElement> {
    check_input(nu, l, p)?;
    let x = schur_at_roots(nu, l, p)?;
    let parity = ((l * nu.size()) % 2) as u8;
    StableElement::theta_invert_parity(&x, parity)
}

/// `∇^ν(Ω^m Sym^l E)` as a [`PlethysmResult`].
pub fn decompose_twisted(nu: &Partition, l: usize, m: usize, p: OddPrime) -> Result<PlethysmResult> {
    let w = StableElement::basis(p, l, m as i64)?;
    let m = m % p.heller_period();
    let element = heller_interchange(nu, &w)?;
    PlethysmResult::new(p, nu, l, m, element)
}

/// `∇^ν(Ω^i Sym^l E) ≃ Ω^{i|ν|}(∇^λ Sym^l E)` with `λ = ν` for even `i` and
/// `ν'` for odd `i`. `w` must be a single basis element.
pub fn heller_interchange(nu: &Partition, w: &StableElement) -> Result<StableElement> {
    let (b, c) = w
        .single_term()
        .filter(|&(_, c)| c == 1)
        .ok_or_else(|| Error::Domain(format!("{w} is not a basis element")))?;
    debug_assert_eq!(c, 1);
    let lambda = twisted_partition(nu, b.m);
    let inner = plethysm_element(&lambda, b.l, w.prime())?;
    Ok(inner.heller((b.m * nu.size()) as i64))
}

/// `V^{⊗n}` for an endotrivial `V`, `n < p`.
pub fn endotrivial_power(v: &StableElement, n: usize) -> Result<StableElement> {
    let p = v.prime();
    if !v.is_endotrivial() {
        return Err(Error::Domain(format!("{v} is not endotrivial")));
    }
    if n >= p.as_usize() {
        return Err(Error::Domain(format!("power {n} is not below p = {p}")));
    }
    Ok(v.pow(n as u32))
}

/// `∇^ν V` for endotrivial `V`: `V^{⊗n}` when `dim V ≡ 1` and `ν = (n)` or
/// `dim V ≡ -1` and `ν = (1^n)`, and projective otherwise.
pub fn endotrivial_schur(nu: &Partition, v: &StableElement) -> Result<StableElement> {
    let p = v.prime();
    nu.require_p_small(p)?;
    let n = nu.size();
    let power = endotrivial_power(v, n)?;
    let d = v.dim_mod_p();
    let survives = n == 0
        || (d == 1 && *nu == Partition::row(n))
        || (d + 1 == p.get() as u64 && *nu == Partition::column(n));
    Ok(if survives { power } else { StableElement::zero(p) })
}

/// `∇^ν(A ⊕ B) ≃ ⊕ c^ν_{λμ} ∇^λ A ⊗ ∇^μ B` over `|λ| + |μ| = |ν|`.
pub fn expand_sum(nu: &Partition, a: &StableElement, b: &StableElement) -> Result<StableElement> {
    let p = a.prime();
    if b.prime() != p {
        return Err(Error::PrimeMismatch(p.get(), b.prime().get()));
    }
    nu.require_p_small(p)?;
    let mut out = StableElement::zero(p);
    for k in 0..=nu.size() {
        for lambda in Partition::all_of_size(k) {
            if !nu.contains(&lambda) {
                continue;
            }
            let left = schur_functor(&lambda, a)?;
            if left.is_zero() {
                continue;
            }
            for mu in Partition::all_of_size(nu.size() - k) {
                let c = lr_coefficient(&lambda, &mu, nu);
                if c == 0 {
                    continue;
                }
                let right = schur_functor(&mu, b)?;
                out = out + (&left * &right).scale(c as i64);
            }
        }
    }
    Ok(out)
}

/// `∇^ν` of the class of any module (every coefficient non-negative).
pub fn schur_functor(nu: &Partition, a: &StableElement) -> Result<StableElement> {
    let p = a.prime();
    nu.require_p_small(p)?;
    if !a.terms().all(|(_, c)| c > 0) {
        return Err(Error::Domain(format!("{a} is not the class of a module")));
    }
    if nu.is_empty() {
        return Ok(StableElement::one(p));
    }
    let mut terms = a.terms();
    let Some((first, c)) = terms.next() else {
        return Ok(StableElement::zero(p));
    };
    let head = StableElement::from_basis(p, first);
    if c == 1 && a.num_terms() == 1 {
        return heller_interchange(nu, &head);
    }
    let rest = a.clone() - head.clone();
    expand_sum(nu, &head, &rest)
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

    fn u(p: OddPrime, l: usize) -> StableElement {
        StableElement::sym(p, l).unwrap()
    }

    #[test]
    fn identity_functor() {
        for p in OddPrime::up_to(13) {
            for l in 0..=p.as_usize() - 2 {
                let r = decompose_plethysm(&part(&[1]), l, p).unwrap();
                assert_eq!(r.decomposition, u(p, l));
                assert!(r.stably_irreducible);
                assert_eq!(r.witness, Some(Basis { l, m: 0 }));
            }
        }
    }

    #[test]
    fn named_examples() {
        let p = prime(7);
        let r = decompose_plethysm(&part(&[2, 2, 2]), 3, p).unwrap();
        assert!(r.stably_irreducible);
        assert_eq!(r.theorem_case, Verdict::Rectangular);
        let r = decompose_plethysm(&part(&[6]), 1, p).unwrap();
        assert!(r.projective);
        assert!(r.decomposition.is_zero());
        let r = decompose_plethysm(&Partition::empty(), 4, p).unwrap();
        assert_eq!(r.decomposition, StableElement::one(p));
        assert!(decompose_plethysm(&part(&[4, 3]), 1, p).is_err());
    }

    #[test]
    fn interchange_example() {
        // ∇^{(2)}(ΩE) = Ω²(Λ²E) = Ω²k at p = 5.
        let p = prime(5);
        let w = StableElement::basis(p, 1, 1).unwrap();
        let got = heller_interchange(&part(&[2]), &w).unwrap();
        assert_eq!(got, StableElement::basis(p, 0, 2).unwrap());
        assert!(heller_interchange(&part(&[2]), &w.scale(2)).is_err());
        let r = decompose_twisted(&part(&[2]), 1, 1, p).unwrap();
        assert!(!r.stably_irreducible);
        assert_eq!(r.theorem_case, Verdict::Neither);
    }

    #[test]
    fn expand_sum_examples() {
        for p in [5, 7, 11] {
            let p = prime(p);
            let e = u(p, 1);
            let got = expand_sum(&part(&[2]), &e, &e).unwrap();
            assert_eq!(got, u(p, 0) + u(p, 2).scale(3));
            let zero = StableElement::zero(p);
            for nu in [part(&[2, 1]), part(&[3])] {
                assert_eq!(
                    expand_sum(&nu, &u(p, 2), &zero).unwrap(),
                    decompose_plethysm(&nu, 2, p).unwrap().decomposition
                );
            }
        }
    }

    #[test]
    fn omega_k_powers() {
        let p = prime(7);
        let x = StableElement::omega_k(p);
        for n in 1..7 {
            for nu in Partition::all_of_size(n) {
                let got = endotrivial_schur(&nu, &x).unwrap();
                let expected = if nu == Partition::column(n) {
                    StableElement::basis(p, 0, n as i64).unwrap()
                } else {
                    StableElement::zero(p)
                };
                assert_eq!(got, expected, "{nu}");
                assert_eq!(heller_interchange(&nu, &x).unwrap(), expected, "{nu}");
            }
        }
        assert!(endotrivial_power(&u(p, 2), 2).is_err());
    }
}
