//! The cyclotomic integers `ℤ[ζ]` for `ζ` a primitive `p`-th root of unity,
//! and the real subring `ℤ[ζ + ζ⁻¹]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::prime::OddPrime;

/// An element of `ℤ[ζ_p]`, stored in the basis `ζ⁰, …, ζ^{p-2}`.
///
/// A length-`p` vector is reduced by subtracting its last entry from every
/// entry (using `Σ ζ^j = 0`), which makes equality structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CycIntRepr")]
pub struct CycInt {
    p: OddPrime,
    #[serde(with = "crate::bigint_serde::vec")]
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: OddPrime) -> Self {
        Self {
            p,
            coeffs: vec![BigInt::zero(); p.as_usize() - 1],
        }
    }

    pub fn one(p: OddPrime) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: OddPrime, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = c.into();
        out
    }

    /// `ζ^e` for any integer `e`.
    pub fn zeta_pow(p: OddPrime, e: i64) -> Self {
        Self::from_powers(p, [(e, 1)])
    }

    /// `Σ c·ζ^e` over the given `(e, c)` pairs.
    pub fn from_powers<C: Into<BigInt>>(p: OddPrime, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut full = vec![BigInt::zero(); p.as_usize()];
        for (e, c) in terms {
            full[e.rem_euclid(p.as_i64()) as usize] += c.into();
        }
        Self::from_full(p, full)
    }

    /// Specializes `q ↦ ζ`.
    pub fn from_laurent(p: OddPrime, f: &LaurentPoly) -> Self {
        Self::from_powers(p, f.terms().map(|(e, c)| (e, c.clone())))
    }

    /// Canonicalizes a length-`p` coefficient vector.
    pub fn from_full(p: OddPrime, mut full: Vec<BigInt>) -> Self {
        assert_eq!(full.len(), p.as_usize());
        let top = full.pop().unwrap();
        if !top.is_zero() {
            for c in &mut full {
                *c -= &top;
            }
        }
        Self { p, coeffs: full }
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    /// Canonical coefficients of `ζ⁰, …, ζ^{p-2}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Canonical coefficients padded with a zero coefficient for `ζ^{p-1}`.
    pub fn full_coeffs(&self) -> Vec<BigInt> {
        let mut v = self.coeffs.clone();
        v.push(BigInt::zero());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let p = self.p.as_usize();
        let mut full = vec![BigInt::zero(); p];
        for (e, c) in self.coeffs.iter().enumerate() {
            full[(p - e) % p] = c.clone();
        }
        Self::from_full(self.p, full)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplies by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.p);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn check_prime(&self, other: &CycInt) {
        assert_eq!(
            self.p, other.p,
            "cyclotomic integers over different primes combined"
        );
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        Ok(self.clone() + other.clone())
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        Ok(self * other)
    }

    /// Coordinates in the basis `Θ(U_{2i}) = ζ^{-2i} + ζ^{-2i+2} + ⋯ + ζ^{2i}`,
    /// `0 ≤ i ≤ (p-3)/2`.
    ///
    /// Elements outside the real subring are rejected together with the
    /// residual `x - conj(x)`.
    pub fn real_coords(&self) -> Result<RealCycCoords> {
        let conj = self.conj();
        if conj != *self {
            let residual = self.clone() - conj;
            return Err(Error::NotReal(self.to_string(), residual.to_string()));
        }
        // A real canonical vector is symmetric, and `v_{p-1} = 0`. The basis
        // element of index i contains ζ^e exactly when e = ±2k for some k ≤ i,
        // so the entry at ±2k records the tail sum of coordinates from k on.
        let p = self.p.as_usize();
        let half = self.p.half();
        let full = self.full_coeffs();
        let tail = |k: usize| -> BigInt {
            if k == 0 {
                full[0].clone()
            } else {
                full[(2 * k) % p].clone()
            }
        };
        let coords = (0..half).map(|i| tail(i) - tail(i + 1)).collect();
        Ok(RealCycCoords { p: self.p, coords })
    }
}

#[derive(Deserialize)]
struct CycIntRepr {
    p: OddPrime,
    #[serde(with = "crate::bigint_serde::vec")]
    coeffs: Vec<BigInt>,
}

impl TryFrom<CycIntRepr> for CycInt {
    type Error = Error;
    fn try_from(r: CycIntRepr) -> Result<Self> {
        let expected = r.p.as_usize() - 1;
        if r.coeffs.len() != expected {
            return Err(out_of_range(
                "coefficient count",
                r.coeffs.len(),
                format!("[{expected}, {expected}]"),
            ));
        }
        Ok(CycInt {
            p: r.p,
            coeffs: r.coeffs,
        })
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(mut self, rhs: CycInt) -> CycInt {
        self.check_prime(&rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        self + (-rhs)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_prime(rhs);
        let p = self.p.as_usize();
        let mut full = vec![BigInt::zero(); p];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[(a + b) % p] += x * y;
                }
            }
        }
        CycInt::from_full(self.p, full)
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        &self * &rhs
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c));
        crate::laurent::write_terms(f, terms, "ζ")
    }
}

/// Coordinates of a real cyclotomic integer in the basis `Θ(U_{2i})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealCycCoords {
    pub p: OddPrime,
    #[serde(with = "crate::bigint_serde::vec")]
    pub coords: Vec<BigInt>,
}

impl RealCycCoords {
    pub fn new(p: OddPrime, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != p.half() {
            return Err(out_of_range(
                "coordinate count",
                coords.len() as i64,
                format!("[{0}, {0}]", p.half()),
            ));
        }
        Ok(Self { p, coords })
    }

    pub fn to_cycint(&self) -> CycInt {
        let mut acc = CycInt::zero(self.p);
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + g_unit(self.p, 2 * i as i64 + 1).scale(c);
            }
        }
        acc
    }
}

/// `g_j = ζ^{-j+1} + ζ^{-j+3} + ⋯ + ζ^{j-1}`, with `j` read modulo `p`.
pub fn g_unit(p: OddPrime, j: i64) -> CycInt {
    let r = j.rem_euclid(p.as_i64());
    CycInt::from_powers(p, (0..r).map(|k| (-r + 1 + 2 * k, 1)))
}

/// A cyclotomic integer presented as a sum of powers of `ζ`, the form on
/// which the λ-operations are defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerMultiset {
    p: OddPrime,
    powers: BTreeMap<i64, usize>,
}

impl PowerMultiset {
    /// Exponents are reduced modulo `p`.
    pub fn new(p: OddPrime, powers: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, n) in powers {
            if n > 0 {
                *map.entry(e.rem_euclid(p.as_i64())).or_insert(0) += n;
            }
        }
        Self { p, powers: map }
    }

    /// Reads the exponents off a Laurent polynomial, which must have
    /// non-negative coefficients.
    pub fn from_laurent(p: OddPrime, f: &LaurentPoly) -> Result<Self> {
        let mut powers = Vec::new();
        for (e, c) in f.terms() {
            let n: usize = c.try_into().map_err(|_| {
                Error::Domain(format!("{f} is not a sum of powers of ζ (coefficient {c} at q^{e})"))
            })?;
            powers.push((e, n));
        }
        Ok(Self::new(p, powers))
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    /// Number of powers, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.powers.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn to_cycint(&self) -> CycInt {
        CycInt::from_powers(self.p, self.powers.iter().map(|(&e, &n)| (e, n as i64)))
    }

    /// The elementary symmetric polynomials `e_0, …, e_max` of the powers,
    /// read off `Π (1 + tζ^e)`.
    fn elementary(&self, max: usize) -> Vec<CycInt> {
        let mut coeffs = vec![CycInt::zero(self.p); max + 1];
        coeffs[0] = CycInt::one(self.p);
        for (&e, &n) in &self.powers {
            let z = CycInt::zeta_pow(self.p, e);
            for _ in 0..n {
                for d in (1..=max).rev() {
                    let add = &coeffs[d - 1] * &z;
                    coeffs[d] = coeffs[d].clone() + add;
                }
            }
        }
        coeffs
    }
}

/// `λ^i(f)`: the `i`-th elementary symmetric polynomial of the powers of `f`.
pub fn lambda_op(f: &PowerMultiset, i: usize) -> Result<CycInt> {
    let p = f.p;
    if i >= p.as_usize() {
        return Err(out_of_range("i", i as i64, format!("[0, {}]", p.get() - 1)));
    }
    Ok(f.elementary(i).pop().unwrap())
}

/// `{ν}f = det(λ^{ν'_i + j - i}(f))`, for `ν_1 + ℓ(ν) - 1 < p`.
pub fn giambelli_op(nu: &Partition, f: &PowerMultiset) -> Result<CycInt> {
    let p = f.p;
    let n = nu.first_part();
    if n + nu.length() > p.as_usize() {
        return Err(Error::Domain(format!(
            "{{ν}} needs ν_1 + ℓ(ν) - 1 < p, got ν = {nu}, p = {p}"
        )));
    }
    if n == 0 {
        return Ok(CycInt::one(p));
    }
    let lambdas = f.elementary(n + nu.length() - 1);
    let conj = nu.conjugate();
    let entry = |i: usize, j: usize| -> CycInt {
        let k = conj.part(i + 1) as i64 + j as i64 - i as i64;
        if k < 0 {
            CycInt::zero(p)
        } else {
            lambdas[k as usize].clone()
        }
    };
    let matrix: Vec<Vec<CycInt>> = (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    Ok(determinant(p, &matrix))
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available.
fn determinant(p: OddPrime, m: &[Vec<CycInt>]) -> CycInt {
    let n = m.len();
    let mut memo: Vec<Option<CycInt>> = vec![None; 1 << n];
    memo[0] = Some(CycInt::one(p));
    fn minor(m: &[Vec<CycInt>], cols: usize, memo: &mut Vec<Option<CycInt>>, p: OddPrime) -> CycInt {
        if let Some(v) = &memo[cols] {
            return v.clone();
        }
        let n = m.len();
        let row = n - cols.count_ones() as usize;
        let mut acc = CycInt::zero(p);
        let mut sign_pos = 0;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let sub = minor(m, cols & !(1 << c), memo, p);
                let term = &m[row][c] * &sub;
                acc = if sign_pos % 2 == 0 { acc + term } else { acc - term };
            }
            sign_pos += 1;
        }
        memo[cols] = Some(acc.clone());
        acc
    }
    minor(m, (1 << n) - 1, &mut memo, p)
}

/// `x` as a `BigInt` if it is an integer multiple of `ζ⁰`.
pub fn as_integer(x: &CycInt) -> Option<BigInt> {
    if x.coeffs[1..].iter().all(Zero::is_zero) {
        Some(x.coeffs[0].clone())
    } else {
        None
    }
}
