//! Schur functors as images of a Young symmetrizer on tensor powers.
//!
//! For the canonical tableau `T` of shape `ν` (filled row by row) the
//! symmetrizer is `c_T = (Σ_{σ ∈ R(T)} σ)·(Σ_{τ ∈ C(T)} sgn(τ) τ)`, acting on
//! `V^{⊗n}` by place permutations: the column antisymmetrizer is applied
//! first. Place permutations preserve the multiset of basis indices in a
//! word, so the image is computed one such content block at a time.

use std::collections::HashMap;

use stablerep::Partition;

use crate::error::{OracleError, Result};
use crate::fp::{Fp, FpMatrix};
use crate::module::{FpModule, SparseRow};

/// Default cap on `(dim V)^{|ν|}`.
pub const DEFAULT_MAX_DIM: u64 = 200_000;

/// `∇^ν V` with the default dimension cap.
pub fn schur_apply(nu: &Partition, v: &FpModule) -> Result<FpModule> {
    schur_apply_limited(nu, v, DEFAULT_MAX_DIM)
}

/// `∇^ν V`, refusing tensor spaces larger than `limit`.
pub fn schur_apply_limited(nu: &Partition, v: &FpModule, limit: u64) -> Result<FpModule> {
    let p = v.prime();
    let n = nu.size();
    if n >= p.as_usize() {
        return Err(stablerep::Error::NotPSmall {
            partition: nu.to_string(),
            size: n,
            p: p.get(),
        }
        .into());
    }
    let d = v.dim();
    let total = (d as u128).pow(n as u32);
    if total > limit as u128 {
        return Err(OracleError::TooLarge { dim: total, limit });
    }
    if n == 0 {
        return Ok(FpModule::simple(p, 0));
    }
    if d == 0 {
        return FpModule::from_parts(p, Vec::new(), Vec::new());
    }
    let f = Fp::new(p.get());
    let symmetrizer = Symmetrizer::new(nu);

    // Image of c_T on each content block, in reduced echelon form.
    let mut blocks: Vec<Block> = Vec::new();
    for content in multisets(d, n) {
        let words = arrangements(&content);
        let index: HashMap<&[usize], usize> =
            words.iter().enumerate().map(|(k, w)| (w.as_slice(), k)).collect();
        let mut m = FpMatrix::zeros(p.get(), words.len(), words.len());
        for (r, w) in words.iter().enumerate() {
            for (image, coeff) in symmetrizer.apply(w) {
                let col = index[image.as_slice()];
                let cur = m.get(r, col);
                m.set(r, col, f.add(cur, f.reduce(coeff)));
            }
        }
        let pivots = m.row_reduce();
        if pivots.is_empty() {
            continue;
        }
        let weight = content.iter().map(|&b| v.weights()[b]).sum();
        let rows = (0..pivots.len())
            .map(|r| {
                (0..words.len())
                    .filter(|&c| m.get(r, c) != 0)
                    .map(|c| (c, m.get(r, c)))
                    .collect()
            })
            .collect();
        blocks.push(Block {
            weight,
            words,
            pivots,
            rows,
        });
    }

    let g = v.g_matrix();
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut dim = 0;
    for b in &blocks {
        offsets.push(dim);
        dim += b.pivots.len();
    }
    let mut weights = Vec::with_capacity(dim);
    let mut lowering = Vec::with_capacity(dim);
    for src in &blocks {
        for row in &src.rows {
            weights.push(src.weight);
            // Coordinates of g·row in the image basis are its entries at
            // the pivot words of each lower block.
            let mut out = SparseRow::new();
            for (dst, &offset) in blocks.iter().zip(&offsets) {
                if dst.weight >= src.weight {
                    continue;
                }
                for (k, &pc) in dst.pivots.iter().enumerate() {
                    let target = &dst.words[pc];
                    let mut acc = 0;
                    for &(c, x) in row {
                        let word = &src.words[c];
                        let mut prod = x;
                        for (&a, &b) in word.iter().zip(target) {
                            prod = f.mul(prod, g.get(a, b));
                            if prod == 0 {
                                break;
                            }
                        }
                        acc = f.add(acc, prod);
                    }
                    if acc != 0 {
                        out.push((offset + k, acc));
                    }
                }
            }
            lowering.push(out);
        }
    }
    FpModule::from_parts(p, weights, lowering)
}

struct Block {
    weight: i64,
    words: Vec<Vec<usize>>,
    pivots: Vec<usize>,
    /// Nonzero echelon rows, sparse over `words`.
    rows: Vec<SparseRow>,
}

/// Row and column groups of the canonical tableau as position maps.
struct Symmetrizer {
    rows: Vec<Vec<usize>>,
    columns: Vec<(Vec<usize>, i64)>,
}

impl Symmetrizer {
    fn new(nu: &Partition) -> Self {
        let n = nu.size();
        let mut position = vec![vec![0; 0]; nu.length()];
        let mut k = 0;
        for (i, &len) in nu.parts().iter().enumerate() {
            for _ in 0..len {
                position[i].push(k);
                k += 1;
            }
        }
        let row_sets: Vec<Vec<usize>> = position.clone();
        let col_sets: Vec<Vec<usize>> = (0..nu.first_part())
            .map(|j| {
                position
                    .iter()
                    .filter(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect();
        Symmetrizer {
            rows: group(n, &row_sets).into_iter().map(|(s, _)| s).collect(),
            columns: group(n, &col_sets),
        }
    }

    /// `c_T · w` as signed words, with repeats.
    fn apply(&self, w: &[usize]) -> Vec<(Vec<usize>, i64)> {
        let mut out = Vec::with_capacity(self.rows.len() * self.columns.len());
        for (tau, sign) in &self.columns {
            let tw = permute(w, tau);
            for sigma in &self.rows {
                out.push((permute(&tw, sigma), *sign));
            }
        }
        out
    }
}

/// The word with the letter at position `m` moved to `s[m]`.
fn permute(w: &[usize], s: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    for (m, &x) in w.iter().enumerate() {
        out[s[m]] = x;
    }
    out
}

/// All permutations of `0..n` preserving each set, with signs.
fn group(n: usize, sets: &[Vec<usize>]) -> Vec<(Vec<usize>, i64)> {
    let mut acc = vec![((0..n).collect::<Vec<_>>(), 1)];
    for set in sets {
        let perms = permutations(set.len());
        let mut next = Vec::with_capacity(acc.len() * perms.len());
        for (base, sign) in &acc {
            for (perm, s) in &perms {
                let mut q = base.clone();
                for (k, &pos) in set.iter().enumerate() {
                    q[pos] = set[perm[k]];
                }
                next.push((q, sign * s));
            }
        }
        acc = next;
    }
    acc
}

/// Permutations of `0..k` with signs, built by inserting the largest letter.
fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(k - 1) {
        // Inserting k-1 at slot s moves it past (k-1-s) entries.
        for s in 0..k {
            let mut q = perm.clone();
            q.insert(s, k - 1);
            let flips = (k - 1 - s) as i64;
            out.push((q, if flips % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

/// Non-decreasing words of length `n` over `0..d`.
fn multisets(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in start..d {
            cur.push(b);
            rec(d, n, b, cur, out);
            cur.pop();
        }
    }
    rec(d, n, 0, &mut cur, &mut out);
    out
}

/// Distinct rearrangements of a sorted word, in lexicographic order.
fn arrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    // Standard next-permutation.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use stablerep::OddPrime;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        for (q, s) in perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| q[i] > q[j])
                .count() as i64;
            assert_eq!(s, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn arrangement_counts() {
        assert_eq!(arrangements(&[0, 0, 1, 2]).len(), 12);
        assert_eq!(multisets(3, 2).len(), 6);
    }

    #[test]
    fn exterior_square_of_natural_is_trivial() {
        let p = OddPrime::new(5).unwrap();
        let e = FpModule::build_sym(1, p).unwrap();
        let w = schur_apply(&part(&[1, 1]), &e).unwrap();
        assert_eq!(w.dim(), 1);
        assert_eq!(w.weights(), &[0]);
        assert!(w.g_matrix().is_identity());
        assert_eq!(schur_apply(&part(&[1]), &e).unwrap(), e);
    }

    #[test]
    fn dimensions_follow_hook_content() {
        let p = OddPrime::new(7).unwrap();
        for l in 0..=5 {
            let v = FpModule::build_sym(l, p).unwrap();
            for n in 0..=3 {
                for nu in Partition::all_of_size(n) {
                    let w = schur_apply(&nu, &v).unwrap();
                    let expected: i64 = stablerep::schur::shcf_laurent(&nu, l, p)
                        .unwrap()
                        .eval_one()
                        .try_into()
                        .unwrap();
                    assert_eq!(w.dim() as i64, expected, "{nu} l = {l}");
                    w.verify_relations().unwrap();
                }
            }
        }
    }

    #[test]
    fn guards() {
        let p = OddPrime::new(5).unwrap();
        let v = FpModule::build_sym(3, p).unwrap();
        assert!(matches!(
            schur_apply(&part(&[5]), &v),
            Err(OracleError::Core(_))
        ));
        assert!(matches!(
            schur_apply_limited(&part(&[2, 1]), &v, 63),
            Err(OracleError::TooLarge { dim: 64, limit: 63 })
        ));
    }
}
