//! Indecomposable summands of `kN`-modules and their transport to the stable
//! representation ring of `SL₂(𝔽_p)`.
//!
//! Every indecomposable `kN`-module is uniserial, `U_{i,j}` with top `S_i`
//! and `j + 1` composition factors `S_i, S_{i-2}, …, S_{i-2j}`. The labels
//! `i` are residues mod `p - 1` and `S_i` is the line on which `h` acts by
//! `c^i`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use stablerep::{Basis, OddPrime, StableElement};

use crate::error::{OracleError, Result};
use crate::fp::{Fp, FpMatrix};
use crate::module::FpModule;

/// Multiplicities of the summands `U_{i,j}` of a `kN`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KNDecomposition {
    p: OddPrime,
    summands: BTreeMap<(usize, usize), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub i: usize,
    pub j: usize,
    pub mult: usize,
}

/// JSON form: non-projective summands and projective ones listed apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KNDecompositionJson {
    pub p: OddPrime,
    pub summands: Vec<Summand>,
    pub projective_part: Vec<Summand>,
}

impl KNDecomposition {
    pub fn new(p: OddPrime) -> Self {
        KNDecomposition {
            p,
            summands: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: i64, j: usize, mult: usize) {
        assert!(j < self.p.as_usize(), "U_(i,{j}) has more than p composition factors");
        if mult > 0 {
            let i = i.rem_euclid(self.p.heller_period() as i64) as usize;
            *self.summands.entry((i, j)).or_default() += mult;
        }
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.summands.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `((i, j), mult)` in increasing `(i, j)` order.
    pub fn summands(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.summands.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_projective(&self, j: usize) -> bool {
        j + 1 == self.p.as_usize()
    }

    pub fn dimension(&self) -> usize {
        self.summands.iter().map(|(&(_, j), &m)| (j + 1) * m).sum()
    }

    pub fn to_json(&self) -> KNDecompositionJson {
        let (projective, rest): (Vec<_>, Vec<_>) = self
            .summands()
            .map(|((i, j), mult)| Summand { i, j, mult })
            .partition(|s| self.is_projective(s.j));
        KNDecompositionJson {
            p: self.p,
            summands: rest,
            projective_part: projective,
        }
    }
}

/// Splits `V` into uniserial summands.
///
/// `Y`, the part of `g - 1` that lowers weight by 2 modulo `p - 1`, is the
/// average of `h^t (g-1) h^{-t}` against the character `c^{-2t}`. It lies in
/// `k⟨g⟩`, agrees with `g - 1` modulo the square of the radical, and so has
/// the same Jordan type; being homogeneous, its block ranks per weight class
/// give each string's top and length.
pub fn decompose_kn(v: &FpModule) -> Result<KNDecomposition> {
    let p = v.prime();
    let period = p.heller_period();
    let half = p.half();
    let f = Fp::new(p.get());
    let class = |w: i64| w.rem_euclid(period as i64) as usize;
    let below = |w: usize| (w + period - 2 % period) % period;

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); period];
    let mut local = vec![0; v.dim()];
    for (b, &w) in v.weights().iter().enumerate() {
        local[b] = members[class(w)].len();
        members[class(w)].push(b);
    }
    let y: Vec<Vec<(usize, u32)>> = v
        .lowering()
        .iter()
        .enumerate()
        .map(|(b, row)| {
            row.iter()
                .filter(|&&(t, _)| {
                    let k = ((v.weights()[b] - v.weights()[t]) / 2) as usize;
                    k % half == 1 % half
                })
                .copied()
                .collect()
        })
        .collect();

    // ranks[w][t] = rank of Y^t on the weight class w, for t ≤ p + 1.
    let depth = p.as_usize() + 2;
    let mut ranks = vec![vec![0usize; depth]; period];
    for (w, class_ranks) in ranks.iter_mut().enumerate() {
        let mut span = FpMatrix::identity(p.get(), members[w].len());
        let mut at = w;
        for slot in class_ranks.iter_mut() {
            let r = span.row_reduce().len();
            *slot = r;
            if r == 0 {
                break;
            }
            span = span.take_rows(r);
            let next = below(at);
            let mut image = FpMatrix::zeros(p.get(), r, members[next].len());
            for row in 0..r {
                for (k, &b) in members[at].iter().enumerate() {
                    let x = span.get(row, k);
                    if x == 0 {
                        continue;
                    }
                    for &(target, coeff) in &y[b] {
                        let col = local[target];
                        let cur = image.get(row, col);
                        image.set(row, col, f.add(cur, f.mul(x, coeff)));
                    }
                }
            }
            span = image;
            at = next;
        }
    }

    // Y carries class w + 2 into class w, so strings with top in class w and
    // at least t further steps number ranks[w][t] - ranks[w+2][t+1].
    let above = |w: usize| (w + 2) % period;
    let at_least = |w: usize, t: usize| ranks[w][t] - ranks[above(w)][t + 1];
    let mut out = KNDecomposition::new(p);
    for w in 0..period {
        for t in 0..p.as_usize() {
            let n = at_least(w, t) - at_least(w, t + 1);
            out.add(w as i64, t, n);
        }
    }
    if out.dimension() != v.dim() {
        return Err(OracleError::Inconsistent(format!(
            "summands account for {} of {} dimensions",
            out.dimension(),
            v.dim()
        )));
    }
    Ok(out)
}

/// `Ω U_{i,j} = U_{i-2j-2, p-j-2}`; `None` for projective `U_{i,p-1}`.
pub fn omega_kn(p: OddPrime, i: usize, j: usize) -> Option<(usize, usize)> {
    let n = p.as_usize();
    if j + 1 >= n {
        return None;
    }
    let period = p.heller_period() as i64;
    let i = (i as i64 - 2 * j as i64 - 2).rem_euclid(period) as usize;
    Some((i, n - j - 2))
}

/// The Green correspondent `U_{i,j}` of `Ω^m(Sym^l E)`: `U_{l-2t, l}` for
/// `m = 2t` and `U_{-l-2t-2, p-l-2}` for `m = 2t+1`.
pub fn uniserial_label(p: OddPrime, b: Basis) -> (usize, usize) {
    let period = p.heller_period() as i64;
    let (l, m) = (b.l as i64, b.m as i64);
    let t = m / 2;
    if m % 2 == 0 {
        ((l - 2 * t).rem_euclid(period) as usize, b.l)
    } else {
        ((-l - 2 * t - 2).rem_euclid(period) as usize, p.as_usize() - b.l - 2)
    }
}

/// The `kN`-module `U_{i,j}` corresponding to `Ω^m(Sym^l E)`.
pub fn green_module(p: OddPrime, b: Basis) -> Result<FpModule> {
    let (i, j) = uniserial_label(p, b);
    FpModule::uniserial(p, i as i64, j)
}

/// `(l, m)` with `Ω^m U_{l,l} = U_{i,j}`, for non-projective `U_{i,j}`.
pub fn transport_summand(p: OddPrime, i: usize, j: usize) -> Result<Basis> {
    let n = p.as_usize();
    if j + 1 >= n {
        return Err(OracleError::Domain(format!("U_({i},{j}) is projective")));
    }
    let period = p.heller_period() as i64;
    let (l, m) = if (i + j).is_multiple_of(2) {
        (j, (j as i64 - i as i64).rem_euclid(period))
    } else {
        let l = n - 2 - j;
        (l, (-(l as i64) - 1 - i as i64).rem_euclid(period))
    };
    let b = Basis::new(p, l, m)?;
    assert_eq!(
        uniserial_label(p, b),
        (i, j),
        "transport of U_({i},{j}) does not invert"
    );
    Ok(b)
}

/// Drops projective summands and replaces each `U_{i,j}` by its stable
/// class `Ω^m(Sym^l E)`.
pub fn green_transport(d: &KNDecomposition) -> Result<StableElement> {
    let p = d.prime();
    let mut out = StableElement::zero(p);
    for ((i, j), mult) in d.summands() {
        if d.is_projective(j) {
            continue;
        }
        out.add_term(transport_summand(p, i, j)?, mult as i64);
    }
    Ok(out)
}

/// The Ω-orbit of `U_{i,j}`, starting with itself.
pub fn omega_orbit(p: OddPrime, i: usize, j: usize) -> Vec<(usize, usize)> {
    let mut orbit = vec![(i, j)];
    let mut cur = (i, j);
    while let Some(next) = omega_kn(p, cur.0, cur.1) {
        if next == (i, j) {
            break;
        }
        orbit.push(next);
        cur = next;
    }
    orbit
}
