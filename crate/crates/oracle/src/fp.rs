//! Dense matrices over a prime field.

use std::fmt;

/// Multiplication and inversion modulo a small prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Self {
        Fp { p }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// # Panics
    ///
    /// On zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse mod {}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// `binom(n, k) mod p`, for `n < p`.
    pub fn binomial(self, n: u64, k: u64) -> u32 {
        if k > n {
            return 0;
        }
        let mut num = 1;
        let mut den = 1;
        for i in 0..k {
            num = self.mul(num, ((n - i) % self.p as u64) as u32);
            den = self.mul(den, ((i + 1) % self.p as u64) as u32);
        }
        self.mul(num, self.inv(den))
    }
}

/// Row-major dense matrix. Modules act on row vectors from the right, so a
/// matrix's row `b` is the image of basis vector `b`.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field: Fp::new(p),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let field = Fp::new(p);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// The first `n` rows.
    pub fn take_rows(&self, n: usize) -> FpMatrix {
        assert!(n <= self.rows);
        FpMatrix {
            field: self.field,
            rows: n,
            cols: self.cols,
            data: self.data[..n * self.cols].to_vec(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p(), self.rows)
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.p(), other.p(), "field mismatch");
        let f = self.field;
        let mut out = Self::zeros(self.p(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Self::identity(self.p(), self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = Self::zeros(self.p(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form in place, pivoting on the first nonzero
    /// entry. Returns the pivot columns; rows past their count are zero.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pivot) = (r..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(r, pivot);
            let inv = f.inv(self.get(r, col));
            for j in col..self.cols {
                let x = self.get(r, j);
                self.set(r, j, f.mul(x, inv));
            }
            for i in 0..self.rows {
                let factor = self.get(i, col);
                if i == r || factor == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let x = self.get(r, j);
                    if x != 0 {
                        let cur = self.get(i, j);
                        self.set(i, j, f.sub(cur, f.mul(factor, x)));
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// A basis of `{x : x·self = 0}`, as rows.
    pub fn left_nullspace(&self) -> FpMatrix {
        self.transpose().nullspace()
    }

    /// A basis of `{x : self·x = 0}`, one vector per row of the result.
    pub fn nullspace(&self) -> FpMatrix {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.p(), free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let x = m.get(r, fc);
                out.set(k, pc, f.sub(0, x));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix mod {} ({}x{})", self.p(), self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_binomials() {
        let f = Fp::new(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.binomial(5, 2), 3);
        assert_eq!(f.binomial(6, 3), 6);
        assert_eq!(f.binomial(2, 3), 0);
    }

    #[test]
    fn rank_and_nullspace() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1);
        let v = ns.transpose();
        assert!(m.mul(&v).data.iter().all(|&x| x == 0));
        let left = m.left_nullspace();
        assert_eq!(left.rows(), 1);
        assert!(left.mul(&m).data.iter().all(|&x| x == 0));
    }

    #[test]
    fn unipotent_order() {
        let g = FpMatrix::from_rows(7, &[vec![1, 0], vec![1, 1]]);
        assert!(g.pow(7).is_identity());
        assert!(!g.pow(3).is_identity());
    }
}
