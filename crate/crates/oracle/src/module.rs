//! Finite-dimensional modules for `N = ⟨g, h⟩ ≤ SL₂(𝔽_p)`, the normaliser
//! of the Sylow subgroup generated by `g = [[1,0],[1,1]]`, with
//! `h = diag(c⁻¹, c)`.
//!
//! Every module here comes with a basis of `h`-eigenvectors: basis vector `b`
//! has an integer weight `w_b` and `h` acts on it by `c^{w_b}`. The action of
//! `g` is stored as the sparse map `g - 1`, which strictly lowers weight by an
//! even amount. Vectors are rows and groups act from the right.

use stablerep::OddPrime;

use crate::error::{OracleError, Result};
use crate::fp::{Fp, FpMatrix};

/// Sparse row: `(target basis index, coefficient)`.
pub type SparseRow = Vec<(usize, u32)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpModule {
    p: OddPrime,
    c: u32,
    weights: Vec<i64>,
    lowering: Vec<SparseRow>,
}

impl FpModule {
    /// Builds a module from weights and the rows of `g - 1`, checking that
    /// each term lowers weight by a positive even amount.
    pub fn from_parts(p: OddPrime, weights: Vec<i64>, lowering: Vec<SparseRow>) -> Result<Self> {
        if weights.len() != lowering.len() {
            return Err(OracleError::Inconsistent(format!(
                "{} weights but {} rows",
                weights.len(),
                lowering.len()
            )));
        }
        for (b, row) in lowering.iter().enumerate() {
            for &(t, x) in row {
                let drop = weights[b] - weights[t];
                if x == 0 || x >= p.get() || drop <= 0 || drop % 2 != 0 {
                    return Err(OracleError::Inconsistent(format!(
                        "term {b} -> {t} with coefficient {x} and weight drop {drop}"
                    )));
                }
            }
        }
        Ok(FpModule {
            p,
            c: p.smallest_primitive_root(),
            weights,
            lowering,
        })
    }

    /// `Sym^l E` on the monomials `x^{l-a} y^a` (basis index `a`), where `g`
    /// substitutes `y ↦ x + y`. Weight of `x^{l-a} y^a` is `2a - l`.
    pub fn build_sym(l: usize, p: OddPrime) -> Result<Self> {
        if l >= p.as_usize() {
            return Err(OracleError::Domain(format!(
                "Sym^{l} E needs l ≤ p - 1 = {}",
                p.as_usize() - 1
            )));
        }
        let f = Fp::new(p.get());
        let weights = (0..=l).map(|a| 2 * a as i64 - l as i64).collect();
        let lowering = (0..=l)
            .map(|a| {
                (1..=a)
                    .map(|k| (a - k, f.binomial(a as u64, k as u64)))
                    .collect()
            })
            .collect();
        Self::from_parts(p, weights, lowering)
    }

    /// The one-dimensional module on which `h` acts by `c^s`.
    pub fn simple(p: OddPrime, s: i64) -> Self {
        FpModule {
            p,
            c: p.smallest_primitive_root(),
            weights: vec![s],
            lowering: vec![Vec::new()],
        }
    }

    /// `U_{i,j} = Sym^j E ⊗ S_{i-j}`: uniserial with composition factors
    /// `S_i, S_{i-2}, …, S_{i-2j}` from the top.
    pub fn uniserial(p: OddPrime, i: i64, j: usize) -> Result<Self> {
        Ok(Self::build_sym(j, p)?.twist(i - j as i64))
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    /// The fixed generator `c` of `𝔽_p^×`.
    pub fn generator(&self) -> u32 {
        self.c
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Rows of `g - 1`.
    pub fn lowering(&self) -> &[SparseRow] {
        &self.lowering
    }

    /// Tensor with `S_s`.
    pub fn twist(&self, s: i64) -> Self {
        let mut out = self.clone();
        for w in &mut out.weights {
            *w += s;
        }
        out
    }

    /// `V ⊗ W` with basis `v_a ⊗ w_b` at index `a·dim W + b`.
    pub fn tensor(&self, other: &FpModule) -> Result<Self> {
        if self.p != other.p {
            return Err(stablerep::Error::PrimeMismatch(self.p.get(), other.p.get()).into());
        }
        let f = Fp::new(self.p.get());
        let n = other.dim();
        let g_rows = |m: &FpModule, b: usize| -> SparseRow {
            let mut row = vec![(b, 1)];
            row.extend_from_slice(&m.lowering[b]);
            row
        };
        let mut weights = Vec::with_capacity(self.dim() * n);
        let mut lowering = Vec::with_capacity(self.dim() * n);
        for a in 0..self.dim() {
            let ga = g_rows(self, a);
            for b in 0..n {
                weights.push(self.weights[a] + other.weights[b]);
                let gb = g_rows(other, b);
                let mut row = SparseRow::new();
                for &(s, x) in &ga {
                    for &(t, y) in &gb {
                        if s != a || t != b {
                            row.push((s * n + t, f.mul(x, y)));
                        }
                    }
                }
                lowering.push(row);
            }
        }
        Self::from_parts(self.p, weights, lowering)
    }

    /// The contragredient module, `φ·g = φ ∘ g⁻¹`, on the dual basis.
    pub fn dual(&self) -> Result<Self> {
        let f = Fp::new(self.p.get());
        let d = self.dim();
        // g⁻¹ = Σ (-X)^t with X = g - 1 nilpotent.
        let x = self.g_matrix();
        let mut minus_x = x.clone();
        for i in 0..d {
            for j in 0..d {
                let v = x.get(i, j) as i64 - i64::from(i == j);
                minus_x.set(i, j, f.reduce(-v));
            }
        }
        let mut inverse = FpMatrix::identity(self.p.get(), d);
        let mut term = FpMatrix::identity(self.p.get(), d);
        for _ in 0..d {
            term = term.mul(&minus_x);
            for i in 0..d {
                for j in 0..d {
                    let v = f.add(inverse.get(i, j), term.get(i, j));
                    inverse.set(i, j, v);
                }
            }
        }
        let star = inverse.transpose();
        let weights = self.weights.iter().map(|w| -w).collect();
        let lowering = (0..d)
            .map(|t| {
                (0..d)
                    .filter(|&b| b != t && star.get(t, b) != 0)
                    .map(|b| (b, star.get(t, b)))
                    .collect()
            })
            .collect();
        Self::from_parts(self.p, weights, lowering)
    }

    pub fn g_matrix(&self) -> FpMatrix {
        let mut m = FpMatrix::identity(self.p.get(), self.dim());
        for (b, row) in self.lowering.iter().enumerate() {
            for &(t, x) in row {
                m.set(b, t, x);
            }
        }
        m
    }

    pub fn h_matrix(&self) -> FpMatrix {
        let f = Fp::new(self.p.get());
        let n = self.p.heller_period() as i64;
        let mut m = FpMatrix::zeros(self.p.get(), self.dim(), self.dim());
        for (b, &w) in self.weights.iter().enumerate() {
            m.set(b, b, f.pow(self.c, w.rem_euclid(n) as u64));
        }
        m
    }

    /// Checks `g^p = 1`, `h^{p-1} = 1` and `h g h⁻¹ = g^{c²}` on dense
    /// matrices.
    pub fn verify_relations(&self) -> Result<()> {
        let p = self.p.get() as u64;
        let g = self.g_matrix();
        let h = self.h_matrix();
        if !g.pow(p).is_identity() {
            return Err(OracleError::Inconsistent("g^p ≠ 1".into()));
        }
        if !h.pow(p - 1).is_identity() {
            return Err(OracleError::Inconsistent("h^(p-1) ≠ 1".into()));
        }
        let h_inv = h.pow(p - 2);
        let c2 = (self.c as u64 * self.c as u64) % p;
        if h.mul(&g).mul(&h_inv) != g.pow(c2) {
            return Err(OracleError::Inconsistent("h g h⁻¹ ≠ g^(c²)".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u32) -> OddPrime {
        OddPrime::new(p).unwrap()
    }

    #[test]
    fn natural_module_matrices() {
        let p = prime(7);
        let e = FpModule::build_sym(1, p).unwrap();
        // Basis x = e₁, y = e₂.
        assert_eq!(e.g_matrix(), FpMatrix::from_rows(7, &[vec![1, 0], vec![1, 1]]));
        assert_eq!(e.h_matrix(), FpMatrix::from_rows(7, &[vec![5, 0], vec![0, 3]]));
        let k = FpModule::build_sym(0, p).unwrap();
        assert!(k.g_matrix().is_identity() && k.h_matrix().is_identity());
    }

    #[test]
    fn relations_hold() {
        for p in [3, 5, 7, 11] {
            let p = prime(p);
            for l in 0..p.as_usize() {
                let v = FpModule::build_sym(l, p).unwrap();
                v.verify_relations().unwrap();
                v.dual().unwrap().verify_relations().unwrap();
            }
            let e = FpModule::build_sym(1, p).unwrap();
            let s2 = FpModule::build_sym(2, p).unwrap();
            e.tensor(&s2).unwrap().twist(3).verify_relations().unwrap();
        }
        assert!(FpModule::build_sym(5, prime(5)).is_err());
    }

    #[test]
    fn broken_module_is_caught() {
        let p = prime(5);
        let bad = FpModule::from_parts(p, vec![1, -3], vec![vec![(1, 1)], vec![]]).unwrap();
        assert!(bad.verify_relations().is_err());
        assert!(FpModule::from_parts(p, vec![1, 1], vec![vec![(1, 1)], vec![]]).is_err());
    }
}
