//! The presentation `ℤ[ζ + ζ⁻¹][X, Y] / (X^{p-1} - 1, Y² - 1)` of the stable
//! representation ring, and the isomorphism `Ψ` onto it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cyclotomic::{g_unit, CycInt};
use crate::error::{Error, Result};
use crate::prime::OddPrime;
use crate::stable::element::{Basis, StableElement};

/// A polynomial in `X` and `Y` with coefficients in `ℤ[ζ + ζ⁻¹]`, keyed by
/// `(a mod p-1, b mod 2)` for the monomial `X^a·Y^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationPoly {
    p: OddPrime,
    coeffs: BTreeMap<(usize, usize), CycInt>,
}

impl PresentationPoly {
    pub fn zero(p: OddPrime) -> Self {
        Self {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(p: OddPrime) -> Self {
        Self::monomial(CycInt::one(p), 0, 0)
    }

    pub fn x(p: OddPrime) -> Self {
        Self::monomial(CycInt::one(p), 1, 0)
    }

    pub fn y(p: OddPrime) -> Self {
        Self::monomial(CycInt::one(p), 0, 1)
    }

    /// `f·X^a·Y^b`, exponents reduced by the relations.
    pub fn monomial(f: CycInt, a: i64, b: i64) -> Self {
        let p = f.prime();
        let mut out = Self::zero(p);
        out.add_term(a, b, f);
        out
    }

    pub fn add_term(&mut self, a: i64, b: i64, f: CycInt) {
        let key = (
            a.rem_euclid(self.p.heller_period() as i64) as usize,
            b.rem_euclid(2) as usize,
        );
        let sum = match self.coeffs.remove(&key) {
            Some(old) => old + f,
            None => f,
        };
        if !sum.is_zero() {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    pub fn coeffs(&self) -> impl Iterator<Item = ((usize, usize), &CycInt)> + '_ {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient(&self, a: usize, b: usize) -> CycInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(|| CycInt::zero(self.p))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.p);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for PresentationPoly {
    type Output = PresentationPoly;
    fn add(mut self, rhs: PresentationPoly) -> PresentationPoly {
        assert_eq!(self.p, rhs.p);
        for ((a, b), f) in rhs.coeffs {
            self.add_term(a as i64, b as i64, f);
        }
        self
    }
}

impl Mul for &PresentationPoly {
    type Output = PresentationPoly;
    fn mul(self, rhs: &PresentationPoly) -> PresentationPoly {
        assert_eq!(self.p, rhs.p);
        let mut out = PresentationPoly::zero(self.p);
        for (&(a1, b1), f) in &self.coeffs {
            for (&(a2, b2), g) in &rhs.coeffs {
                out.add_term((a1 + a2) as i64, (b1 + b2) as i64, f * g);
            }
        }
        out
    }
}

impl fmt::Display for PresentationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            match a {
                0 => {}
                1 => write!(f, "·X")?,
                _ => write!(f, "·X^{a}")?,
            }
            if b == 1 {
                write!(f, "·Y")?;
            }
        }
        Ok(())
    }
}

/// `(ε, i)` with `U_l = U_{p-2}^ε·U_{2i}`.
fn split_degree(p: OddPrime, l: usize) -> (usize, usize) {
    if l.is_multiple_of(2) {
        (0, l / 2)
    } else {
        (1, (p.as_usize() - 2 - l) / 2)
    }
}

/// `Ψ`: sends `Ω^m(Sym^l E)` to `X^m·Y^ε·g_{2i+1}` where `U_l = U_{p-2}^ε·U_{2i}`.
pub fn psi_to_presentation(a: &StableElement) -> PresentationPoly {
    let p = a.prime();
    let mut out = PresentationPoly::zero(p);
    for (b, c) in a.terms() {
        let (eps, i) = split_degree(p, b.l);
        let f = g_unit(p, 2 * i as i64 + 1).scale(&BigInt::from(c));
        out.add_term(b.m as i64, eps as i64, f);
    }
    out
}

/// `Ψ⁻¹`. Fails if a coefficient is not in the real subring.
pub fn psi_from_presentation(f: &PresentationPoly) -> Result<StableElement> {
    let p = f.prime();
    let mut out = StableElement::zero(p);
    for ((a, b), c) in f.coeffs() {
        let coords = c.real_coords()?;
        for (i, x) in coords.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let x = x
                .to_i64()
                .ok_or_else(|| Error::Domain(format!("coefficient {x} does not fit in 64 bits")))?;
            let l = if b == 0 { 2 * i } else { p.as_usize() - 2 - 2 * i };
            out.add_term(Basis { l, m: a }, x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        for p in OddPrime::up_to(13) {
            let n = p.as_usize();
            assert_eq!(psi_to_presentation(&StableElement::one(p)), PresentationPoly::one(p));
            assert_eq!(psi_to_presentation(&StableElement::omega_k(p)), PresentationPoly::x(p));
            let y = psi_to_presentation(&StableElement::sym(p, n - 2).unwrap());
            assert_eq!(y, PresentationPoly::y(p));
            assert_eq!(PresentationPoly::x(p).pow(n as u32 - 1), PresentationPoly::one(p));
            assert_eq!(y.pow(2), PresentationPoly::one(p));
            // ζ² + ζ⁻² ↦ U_2 - U_0
            let z2 = CycInt::from_powers(p, [(2, 1), (-2, 1)]);
            let back = psi_from_presentation(&PresentationPoly::monomial(z2, 0, 0)).unwrap();
            if n > 3 {
                assert_eq!(
                    back,
                    StableElement::sym(p, 2).unwrap() - StableElement::one(p)
                );
            }
        }
    }

    #[test]
    fn non_real_coefficient_rejected() {
        let p = OddPrime::new(5).unwrap();
        let f = PresentationPoly::monomial(CycInt::zeta_pow(p, 1), 0, 0);
        assert!(matches!(psi_from_presentation(&f), Err(Error::NotReal(..))));
    }

    #[test]
    fn display() {
        let p = OddPrime::new(5).unwrap();
        let a = StableElement::basis(p, 3, 2).unwrap();
        assert_eq!(psi_to_presentation(&a).to_string(), "(1)·X^2·Y");
    }
}
