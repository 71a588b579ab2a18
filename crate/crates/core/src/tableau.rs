//! Semistandard tableaux: an exhaustive weight census, the branching-rule
//! generating function, and Littlewood–Richardson coefficients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// Census of semistandard tableaux of shape `ν` with entries in `1..=m`,
/// keyed by weight vector (the number of entries equal to each of `1..=m`).
pub type WeightCensus = BTreeMap<Vec<u32>, u64>;

/// Enumerates every semistandard tableau of shape `ν` with entries in
/// `1..=m` by depth-first filling in row-major order.
pub fn ssyt_count_by_weight(nu: &Partition, m: usize) -> WeightCensus {
    let mut census = WeightCensus::new();
    if nu.length() > m {
        return census;
    }
    let cells: Vec<(usize, usize)> = nu.boxes().map(|(i, j)| (i - 1, j - 1)).collect();
    let mut grid: Vec<Vec<usize>> = nu.parts().iter().map(|&r| vec![0; r]).collect();
    let mut weight = vec![0u32; m];
    fill(&cells, 0, m, &mut grid, &mut weight, &mut census);
    census
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    m: usize,
    grid: &mut [Vec<usize>],
    weight: &mut [u32],
    census: &mut WeightCensus,
) {
    if k == cells.len() {
        *census.entry(weight.to_vec()).or_insert(0) += 1;
        return;
    }
    let (i, j) = cells[k];
    let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    for x in lo_row.max(lo_col)..=m {
        grid[i][j] = x;
        weight[x - 1] += 1;
        fill(cells, k + 1, m, grid, weight, census);
        weight[x - 1] -= 1;
    }
    grid[i][j] = 0;
}

/// Specializes a census at `x_i = q^{2i - m - 1}`.
pub fn specialize_census(census: &WeightCensus) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (w, &count) in census {
        let m = w.len() as i64;
        let e: i64 = w
            .iter()
            .enumerate()
            .map(|(i, &n)| n as i64 * (2 * (i as i64 + 1) - m - 1))
            .sum();
        out.add_term(e, BigInt::from(count));
    }
    out
}

/// `s_ν(q^{-m+1}, q^{-m+3}, …, q^{m-1})` summed over semistandard tableaux
/// via the branching rule: removing the entries equal to `m` leaves a
/// tableau of a shape `μ` with `ν/μ` a horizontal strip.
pub fn ssyt_laurent(nu: &Partition, m: usize) -> LaurentPoly {
    let mut memo = HashMap::new();
    branch(nu.parts(), m, m as i64, &mut memo)
}

fn branch(
    shape: &[usize],
    k: usize,
    m: i64,
    memo: &mut HashMap<(Vec<usize>, usize), LaurentPoly>,
) -> LaurentPoly {
    if shape.is_empty() {
        return LaurentPoly::one();
    }
    if shape.len() > k {
        return LaurentPoly::zero();
    }
    let key = (shape.to_vec(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let exp = 2 * k as i64 - m - 1;
    let total: usize = shape.iter().sum();
    let mut out = LaurentPoly::zero();
    for mu in horizontal_strip_removals(shape) {
        let removed = total - mu.iter().sum::<usize>();
        let sub = branch(&mu, k - 1, m, memo);
        out = out + &sub * &LaurentPoly::monomial(exp * removed as i64, 1);
    }
    memo.insert(key, out.clone());
    out
}

/// All `μ ⊆ λ` such that `λ/μ` is a horizontal strip, i.e.
/// `λ_{i+1} ≤ μ_i ≤ λ_i`.
fn horizontal_strip_removals(lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (i, &li) in lambda.iter().enumerate() {
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=li).map(move |mi| {
                    let mut v = prefix.clone();
                    v.push(mi);
                    v
                })
            })
            .collect();
    }
    for mu in &mut out {
        while mu.last() == Some(&0) {
            mu.pop();
        }
    }
    out
}

/// The Littlewood–Richardson coefficient `c^ν_{λμ}`: the number of
/// semistandard fillings of `ν/λ` with content `μ` whose reverse reading word
/// (rows top to bottom, each row right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    let mut cells = Vec::new();
    for i in 0..nu.length() {
        for j in (lambda.part(i + 1)..nu.part(i + 1)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<usize>> = nu.parts().iter().map(|&r| vec![0; r]).collect();
    let mut content = vec![0usize; mu.length() + 1];
    lr_fill(&cells, 0, lambda, mu, &mut grid, &mut content)
}

fn lr_fill(
    cells: &[(usize, usize)],
    k: usize,
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<usize>],
    content: &mut [usize],
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (i, j) = cells[k];
    // Right neighbour (already filled when inside the skew shape) bounds
    // from above; the cell above bounds strictly from below.
    let hi = if j + 1 < grid[i].len() { grid[i][j + 1] } else { mu.length() };
    let lo = if i > 0 && j >= lambda.part(i) { grid[i - 1][j] + 1 } else { 1 };
    let mut total = 0;
    for x in lo..=hi.min(mu.length()) {
        if content[x] == mu.part(x) || (x > 1 && content[x] == content[x - 1]) {
            continue;
        }
        content[x] += 1;
        grid[i][j] = x;
        total += lr_fill(cells, k + 1, lambda, mu, grid, content);
        content[x] -= 1;
    }
    grid[i][j] = 0;
    total
}
