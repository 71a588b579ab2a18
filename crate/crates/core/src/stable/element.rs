use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::{g_unit, CycInt};
use crate::error::{out_of_range, Error, Result};
use crate::prime::OddPrime;

/// The basis symbol `(l, m)` standing for `Ω^m(Sym^l E)`, with
/// `0 ≤ l ≤ p-2` and `m` a residue modulo `p-1`. Ordered by `(m, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Basis {
    pub l: usize,
    pub m: usize,
}

impl Basis {
    pub fn new(p: OddPrime, l: usize, m: i64) -> Result<Self> {
        if l + 2 > p.as_usize() {
            return Err(out_of_range("l", l, format!("[0, {}]", p.get() - 2)));
        }
        Ok(Self {
            l,
            m: m.rem_euclid(p.heller_period() as i64) as usize,
        })
    }

    /// The label used in the height/position tables, e.g. `Ω^3(Sym^5 E)`.
    pub fn label(&self) -> String {
        let inner = match self.l {
            0 => "k".to_string(),
            1 => "E".to_string(),
            l => format!("Sym^{l} E"),
        };
        let atomic = self.l <= 1;
        match (self.m, atomic) {
            (0, _) => inner,
            (1, true) => format!("Ω {inner}"),
            (1, false) => format!("Ω({inner})"),
            (m, true) => format!("Ω^{m} {inner}"),
            (m, false) => format!("Ω^{m}({inner})"),
        }
    }

    /// Parses a label produced by [`Basis::label`].
    pub fn parse_label(p: OddPrime, s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("'{s}' is not a basis label"));
        let s = s.trim();
        let (m, rest) = match s.strip_prefix('Ω') {
            None => (0, s),
            Some(rest) => match rest.strip_prefix('^') {
                None => (1, rest),
                Some(rest) => {
                    let end = rest.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
                    (rest[..end].parse::<i64>().map_err(|_| bad())?, &rest[end..])
                }
            },
        };
        let inner = if m == 0 {
            rest
        } else if let Some(r) = rest.strip_prefix('(') {
            r.strip_suffix(')').ok_or_else(bad)?
        } else {
            rest.strip_prefix(' ').ok_or_else(bad)?
        };
        let l = match inner {
            "k" => 0,
            "E" => 1,
            _ => inner
                .strip_prefix("Sym^")
                .and_then(|r| r.strip_suffix(" E"))
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(bad)?,
        };
        Basis::new(p, l, m)
    }
}

impl Ord for Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.l).cmp(&(other.m, other.l))
    }
}

impl PartialOrd for Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the stable representation ring: an integer combination of
/// the classes `Ω^m(Sym^l E)`. Projective modules are zero here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StableElement {
    p: OddPrime,
    terms: BTreeMap<Basis, i64>,
}

impl StableElement {
    pub fn zero(p: OddPrime) -> Self {
        Self {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(p: OddPrime) -> Self {
        Self::basis(p, 0, 0).unwrap()
    }

    /// The class of `Ω^m(Sym^l E)`.
    pub fn basis(p: OddPrime, l: usize, m: i64) -> Result<Self> {
        Ok(Self::from_basis(p, Basis::new(p, l, m)?))
    }

    pub fn from_basis(p: OddPrime, b: Basis) -> Self {
        let mut out = Self::zero(p);
        out.terms.insert(b, 1);
        out
    }

    /// `U_l`, the class of `Sym^l E`.
    pub fn sym(p: OddPrime, l: usize) -> Result<Self> {
        Self::basis(p, l, 0)
    }

    /// The class of `Ωk`.
    pub fn omega_k(p: OddPrime) -> Self {
        Self::basis(p, 0, 1).unwrap()
    }

    /// Builds `Σ c·(l, m)` from `(l, m, c)` triples.
    pub fn from_terms(p: OddPrime, terms: impl IntoIterator<Item = (usize, i64, i64)>) -> Result<Self> {
        let mut out = Self::zero(p);
        for (l, m, c) in terms {
            out.add_term(Basis::new(p, l, m)?, c);
        }
        Ok(out)
    }

    pub fn add_term(&mut self, b: Basis, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(b).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    /// Terms in `(m, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Basis, i64)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn coefficient(&self, l: usize, m: usize) -> i64 {
        self.terms.get(&Basis { l, m }).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis elements with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The basis element and coefficient when exactly one term is present.
    pub fn single_term(&self) -> Option<(Basis, i64)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Whether every coefficient is non-negative, so the element is the
    /// class of an actual module.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.p);
        for (b, c) in self.terms() {
            out.add_term(b, c * k);
        }
        out
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        Ok(self.clone() + other.clone())
    }

    /// The tensor product, by the stable Clebsch–Gordan rule: heights add and
    /// `U_i·U_j = U_{j-i} + U_{j-i+2} + ⋯ + U_{min(i+j, 2p-4-i-j)}` for `i ≤ j`.
    pub fn cg_multiply(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let p = self.p;
        let period = p.heller_period();
        let mut out = Self::zero(p);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let m = (a.m + b.m) % period;
                for l in cg_summands(p, a.l, b.l) {
                    out.add_term(Basis { l, m }, x * y);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.p);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Shifts every height by `n`, i.e. applies `Ω^n`.
    pub fn heller(&self, n: i64) -> Self {
        let period = self.p.heller_period() as i64;
        let mut out = Self::zero(self.p);
        for (b, c) in self.terms() {
            let m = (b.m as i64 + n).rem_euclid(period) as usize;
            out.add_term(Basis { l: b.l, m }, c);
        }
        out
    }

    /// The contragredient: `Ω^m(Sym^l E) ↦ Ω^{-m}(Sym^l E)`.
    pub fn dual(&self) -> Self {
        let period = self.p.heller_period();
        let mut out = Self::zero(self.p);
        for (b, c) in self.terms() {
            out.add_term(
                Basis {
                    l: b.l,
                    m: (period - b.m) % period,
                },
                c,
            );
        }
        out
    }

    /// Whether `V ⊗ V* ≃ k`.
    pub fn is_endotrivial(&self) -> bool {
        &self.dual() * self == Self::one(self.p)
    }

    /// The elements with height `m`, as an element of height zero.
    pub fn height_slice(&self, m: usize) -> Self {
        let mut out = Self::zero(self.p);
        for (b, c) in self.terms().filter(|(b, _)| b.m == m) {
            out.add_term(Basis { l: b.l, m: 0 }, c);
        }
        out
    }

    /// `Θ`: sends `U_l` to `ζ^{-l} + ζ^{-l+2} + ⋯ + ζ^l`. Defined on height
    /// zero only.
    pub fn theta(&self) -> Result<CycInt> {
        let mut acc = CycInt::zero(self.p);
        for (b, c) in self.terms() {
            if b.m != 0 {
                return Err(Error::Domain(format!(
                    "Θ is defined on height 0 only, found {}",
                    b.label()
                )));
            }
            acc = acc + g_unit(self.p, b.l as i64 + 1).scale(&BigInt::from(c));
        }
        Ok(acc)
    }

    /// The unique height-zero element supported on `l ≡ parity (mod 2)` with
    /// `Θ` equal to `x`. Coefficients may be negative.
    pub fn theta_invert_parity(x: &CycInt, parity: u8) -> Result<Self> {
        if parity > 1 {
            return Err(out_of_range("parity", parity, "[0, 1]".into()));
        }
        let p = x.prime();
        let coords = x.real_coords()?;
        let mut out = Self::zero(p);
        for (i, c) in coords.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c
                .to_i64()
                .ok_or_else(|| Error::Domain(format!("coefficient {c} does not fit in 64 bits")))?;
            // Θ(U_{2i}) = g_{2i+1} = -g_{p-2i-1} = -Θ(U_{p-2-2i})
            let (l, c) = if parity == 0 { (2 * i, c) } else { (p.as_usize() - 2 - 2 * i, -c) };
            out.add_term(Basis { l, m: 0 }, c);
        }
        Ok(out)
    }

    /// `dim V mod p` for any module `V` in the class; well defined because
    /// projective modules have dimension divisible by `p`.
    pub fn dim_mod_p(&self) -> u64 {
        let p = self.p.as_i64();
        let mut acc = 0i64;
        for (b, c) in self.terms() {
            let sign = if b.m % 2 == 0 { 1 } else { -1 };
            acc += sign * (b.l as i64 + 1) * c.rem_euclid(p);
            acc = acc.rem_euclid(p);
        }
        acc as u64
    }
}

/// The `l`-values in `U_i·U_j`.
pub fn cg_summands(p: OddPrime, i: usize, j: usize) -> impl Iterator<Item = usize> {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let top = (i + j).min(2 * p.as_usize() - 4 - i - j);
    (j - i..=top).step_by(2)
}

impl Add for StableElement {
    type Output = StableElement;
    fn add(mut self, rhs: StableElement) -> StableElement {
        assert_eq!(self.p, rhs.p, "stable elements over different primes combined");
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl Sub for StableElement {
    type Output = StableElement;
    fn sub(self, rhs: StableElement) -> StableElement {
        self + (-rhs)
    }
}

impl Neg for StableElement {
    type Output = StableElement;
    fn neg(self) -> StableElement {
        self.scale(-1)
    }
}

impl Mul for &StableElement {
    type Output = StableElement;
    fn mul(self, rhs: &StableElement) -> StableElement {
        self.cg_multiply(rhs).expect("stable elements over different primes multiplied")
    }
}

impl Mul for StableElement {
    type Output = StableElement;
    fn mul(self, rhs: StableElement) -> StableElement {
        &self * &rhs
    }
}

impl fmt::Display for StableElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms().enumerate() {
            let sep = match (k, c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " ⊕ ",
                (_, true) => " ⊖ ",
            };
            write!(f, "{sep}")?;
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            write!(f, "{}", b.label())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    l: usize,
    m: i64,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    p: OddPrime,
    terms: Vec<TermRepr>,
}

impl Serialize for StableElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            p: self.p,
            terms: self
                .terms()
                .map(|(b, c)| TermRepr {
                    l: b.l,
                    m: b.m as i64,
                    mult: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StableElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        StableElement::from_terms(repr.p, repr.terms.into_iter().map(|t| (t.l, t.m, t.mult)))
            .map_err(serde::de::Error::custom)
    }
}
