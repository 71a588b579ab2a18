//! Exhaustive comparison of the closed-form classifications against the
//! `Θ` decompositions, and of the `Θ` path against the matrix oracle.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use stablerep::plethysm::{
    decompose_plethysm, decompose_twisted, is_projective_theorem, is_projective_twisted_theorem,
    is_stably_irreducible_pl_small, is_stably_irreducible_theorem, is_stably_irreducible_twisted_theorem,
    multiset_criterion,
};
use stablerep::stable::{psi_from_presentation, psi_to_presentation};
use stablerep::{g_unit, Basis, OddPrime, Partition, StableElement};
use stablerep_oracle::{omega_orbit, oracle_plethysm};

use crate::UsageError;

/// One family of checks run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Projectivity predicate against `Θ`.
    Projective,
    /// The list of stably-irreducible families against `Θ`.
    Irreducible,
    TwistedProjective,
    TwistedIrreducible,
    /// The folded hook/content criterion on `(p,l)`-small inputs.
    Multiset,
    /// The shorter family list for `(p,l)`-small inputs.
    SmallCases,
    /// The matrix-level pipeline against `Θ`.
    Oracle,
    /// Randomised ring identities for `Ψ` and `Θ`.
    Ring,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Projective,
        Check::Irreducible,
        Check::TwistedProjective,
        Check::TwistedIrreducible,
        Check::Multiset,
        Check::SmallCases,
        Check::Oracle,
        Check::Ring,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Projective => "projective",
            Check::Irreducible => "irreducible",
            Check::TwistedProjective => "twisted-projective",
            Check::TwistedIrreducible => "twisted-irreducible",
            Check::Multiset => "multiset",
            Check::SmallCases => "small-cases",
            Check::Oracle => "oracle",
            Check::Ring => "ring",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                UsageError(format!("unknown check '{s}', expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub primes: Vec<OddPrime>,
    pub checks: Vec<Check>,
    /// Oracle points need `(l+1)^{|ν|}` at most this.
    pub oracle_budget: u64,
    /// Passed to the oracle as its dimension guard.
    pub max_dim: u64,
    pub seed: u64,
    /// Random pairs per prime for [`Check::Ring`].
    pub ring_samples: usize,
}

/// A scan point, ordered by `(p, |ν|, ν, l, i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Point {
    pub p: u32,
    pub size: usize,
    pub nu: Partition,
    pub l: usize,
    /// Heller twist, or the sample index for ring checks.
    pub i: usize,
}

impl Point {
    fn new(p: OddPrime, nu: &Partition, l: usize, i: usize) -> Self {
        Point {
            p: p.get(),
            size: nu.size(),
            nu: nu.clone(),
            l,
            i,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p = {}, ν = {}, l = {}, i = {}", self.p, self.nu, self.l, self.i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: Point,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub points: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty() && self.passed == self.points
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub primes: Vec<u32>,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckReport::ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let primes: Vec<String> = self.primes.iter().map(u32::to_string).collect();
        out.push_str(&format!("primes: {}\n", primes.join(", ")));
        for c in &self.checks {
            let status = if c.ok() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {:<20} {}/{}\n", c.check.name(), c.passed, c.points));
            for x in &c.counterexamples {
                out.push_str(&format!("  counterexample at {}: {}\n", x.point, x.detail));
            }
        }
        out
    }
}

type Outcome = Option<String>;

fn describe<E: fmt::Display>(e: E) -> Outcome {
    Some(format!("error: {e}"))
}

fn mismatch<T: fmt::Debug + PartialEq>(what: &str, predicted: T, computed: T) -> Outcome {
    (predicted != computed).then(|| format!("{what}: predicted {predicted:?}, computed {computed:?}"))
}

/// All `(ν, l)` with `ν` p-small and `0 ≤ l ≤ p-2`.
pub fn plethysm_points(p: OddPrime) -> Vec<(Partition, usize)> {
    Partition::all_p_small(p)
        .into_iter()
        .flat_map(|nu| (0..=p.as_usize() - 2).map(move |l| (nu.clone(), l)))
        .collect()
}

/// Oracle points at `p`: `(ν, l)` with `(l+1)^{|ν|} ≤ budget`.
pub fn oracle_points(p: OddPrime, budget: u64) -> Vec<(Partition, usize)> {
    plethysm_points(p)
        .into_iter()
        .filter(|(nu, l)| {
            (*l as u64 + 1)
                .checked_pow(nu.size() as u32)
                .is_some_and(|d| d <= budget)
        })
        .collect()
}

fn check_projective(p: OddPrime, nu: &Partition, l: usize) -> Outcome {
    let r = match decompose_plethysm(nu, l, p) {
        Ok(r) => r,
        Err(e) => return describe(e),
    };
    match is_projective_theorem(nu, l, p) {
        Ok(pred) => mismatch("projective", pred, r.projective),
        Err(e) => describe(e),
    }
}

fn check_irreducible(p: OddPrime, nu: &Partition, l: usize) -> Outcome {
    let r = match decompose_plethysm(nu, l, p) {
        Ok(r) => r,
        Err(e) => return describe(e),
    };
    match is_stably_irreducible_theorem(nu, l, p) {
        Ok(v) => mismatch("stably irreducible", v.is_stably_irreducible(), r.stably_irreducible)
            .map(|s| format!("{s} (case {v}, decomposition {})", r.decomposition)),
        Err(e) => describe(e),
    }
}

fn check_twisted(p: OddPrime, nu: &Partition, l: usize, i: usize, projective: bool) -> Outcome {
    let r = match decompose_twisted(nu, l, i, p) {
        Ok(r) => r,
        Err(e) => return describe(e),
    };
    if projective {
        match is_projective_twisted_theorem(nu, l, i, p) {
            Ok(pred) => mismatch("projective", pred, r.projective),
            Err(e) => describe(e),
        }
    } else {
        match is_stably_irreducible_twisted_theorem(nu, l, i, p) {
            Ok(pred) => mismatch("stably irreducible", pred, r.stably_irreducible),
            Err(e) => describe(e),
        }
    }
}

fn check_multiset(p: OddPrime, nu: &Partition, l: usize) -> Outcome {
    let theta = match decompose_plethysm(nu, l, p) {
        Ok(r) => r.stably_irreducible,
        Err(e) => return describe(e),
    };
    match multiset_criterion(nu, l, p) {
        Ok(found) => mismatch("criterion holds", found.is_some(), theta),
        Err(e) => describe(e),
    }
}

fn check_small_cases(p: OddPrime, nu: &Partition, l: usize) -> Outcome {
    let theta = match decompose_plethysm(nu, l, p) {
        Ok(r) => r.stably_irreducible,
        Err(e) => return describe(e),
    };
    match is_stably_irreducible_pl_small(nu, l, p) {
        Ok(v) => mismatch("stably irreducible", v.is_stably_irreducible(), theta)
            .map(|s| format!("{s} (case {v})")),
        Err(e) => describe(e),
    }
}

/// Compares the oracle with `Θ` at one point; `None` means agreement.
pub fn check_oracle(p: OddPrime, nu: &Partition, l: usize, max_dim: u64) -> Outcome {
    let expected = match decompose_plethysm(nu, l, p) {
        Ok(r) => r.decomposition,
        Err(e) => return describe(e),
    };
    match oracle_plethysm(nu, Basis { l, m: 0 }, p, max_dim) {
        Ok(got) => (got != expected).then(|| format!("oracle {got}, Θ {expected}")),
        Err(e) => describe(e),
    }
}

/// A random element with up to five terms and coefficients in `[-4, 4]`.
pub fn random_element(p: OddPrime, rng: &mut impl Rng) -> StableElement {
    let n = p.as_usize();
    let terms: Vec<_> = (0..rng.gen_range(0..=5))
        .map(|_| (rng.gen_range(0..=n - 2), rng.gen_range(0..n as i64 - 1), rng.gen_range(-4..=4)))
        .collect();
    StableElement::from_terms(p, terms).expect("terms are in range")
}

fn height_zero_part(a: &StableElement) -> StableElement {
    a.height_slice(0)
}

/// `Ψ` round trip and multiplicativity, and `Θ` additivity and
/// multiplicativity on height-zero parts.
pub fn check_ring_pair(a: &StableElement, b: &StableElement) -> Outcome {
    let (pa, pb) = (psi_to_presentation(a), psi_to_presentation(b));
    match psi_from_presentation(&pa) {
        Ok(back) if &back == a => {}
        Ok(back) => return Some(format!("Ψ⁻¹Ψ({a}) = {back}")),
        Err(e) => return describe(e),
    }
    let ab = a * b;
    if psi_to_presentation(&ab) != &pa * &pb {
        return Some(format!("Ψ({a} · {b}) ≠ Ψ({a})·Ψ({b})"));
    }
    let (a0, b0) = (height_zero_part(a), height_zero_part(b));
    let (ta, tb) = match (a0.theta(), b0.theta()) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return describe(e),
    };
    let product = (&a0 * &b0).theta();
    let sum = (a0.clone() + b0.clone()).theta();
    match (product, sum) {
        (Ok(x), Ok(y)) if x == &ta * &tb && y == ta.clone() + tb.clone() => None,
        (Ok(_), Ok(_)) => Some(format!("Θ is not a ring map on {a0} and {b0}")),
        (Err(e), _) | (_, Err(e)) => describe(e),
    }
}

/// `g_j = -g_{p-j}` for `1 ≤ j < p`, and every `Ω`-orbit of uniserial
/// `kN`-modules has `p-1` elements with one `U_{l,l}` in it.
pub fn check_units_and_orbits(p: OddPrime) -> Outcome {
    for j in 1..p.as_i64() {
        if g_unit(p, j) != -g_unit(p, p.as_i64() - j) {
            return Some(format!("g_{j} ≠ -g_{}", p.as_i64() - j));
        }
    }
    for l in 0..=p.as_usize() - 2 {
        let orbit = omega_orbit(p, l, l);
        let diagonal = orbit.iter().filter(|(i, j)| i == j).count();
        if orbit.len() != p.heller_period() || diagonal != 1 {
            return Some(format!("Ω-orbit of U_{{{l},{l}}} is {orbit:?}"));
        }
    }
    None
}

fn ring_points(p: OddPrime, seed: u64, samples: usize) -> Vec<(StableElement, StableElement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(p.get()).rotate_left(32));
    (0..samples)
        .map(|_| (random_element(p, &mut rng), random_element(p, &mut rng)))
        .collect()
}

fn collect(check: Check, results: Vec<(Point, Outcome)>) -> CheckReport {
    let mut results = results;
    results.sort_by(|x, y| x.0.cmp(&y.0));
    let points = results.len();
    let counterexamples: Vec<Counterexample> = results
        .into_iter()
        .filter_map(|(point, o)| o.map(|detail| Counterexample { point, detail }))
        .collect();
    CheckReport {
        check,
        points,
        passed: points - counterexamples.len(),
        counterexamples,
    }
}

pub fn run_check(check: Check, config: &VerifyConfig) -> CheckReport {
    let primes = &config.primes;
    let results: Vec<(Point, Outcome)> = match check {
        Check::Projective | Check::Irreducible | Check::Multiset | Check::SmallCases => {
            let pts: Vec<_> = primes
                .iter()
                .flat_map(|&p| {
                    plethysm_points(p).into_iter().filter(move |(nu, l)| match check {
                        Check::Multiset | Check::SmallCases => nu.is_pl_small(p, *l).unwrap_or(false),
                        _ => true,
                    })
                    .map(move |(nu, l)| (p, nu, l))
                })
                .collect();
            pts.par_iter()
                .map(|(p, nu, l)| {
                    let o = match check {
                        Check::Projective => check_projective(*p, nu, *l),
                        Check::Irreducible => check_irreducible(*p, nu, *l),
                        Check::Multiset => check_multiset(*p, nu, *l),
                        _ => check_small_cases(*p, nu, *l),
                    };
                    (Point::new(*p, nu, *l, 0), o)
                })
                .collect()
        }
        Check::TwistedProjective | Check::TwistedIrreducible => {
            let pts: Vec<_> = primes
                .iter()
                .flat_map(|&p| {
                    plethysm_points(p).into_iter().flat_map(move |(nu, l)| {
                        (0..p.heller_period()).map(move |i| (p, nu.clone(), l, i))
                    })
                })
                .collect();
            pts.par_iter()
                .map(|(p, nu, l, i)| {
                    let o = check_twisted(*p, nu, *l, *i, check == Check::TwistedProjective);
                    (Point::new(*p, nu, *l, *i), o)
                })
                .collect()
        }
        Check::Oracle => {
            let pts: Vec<_> = primes
                .iter()
                .filter(|p| p.get() <= crate::MAX_ORACLE_PRIME)
                .flat_map(|&p| {
                    oracle_points(p, config.oracle_budget)
                        .into_iter()
                        .map(move |(nu, l)| (p, nu, l))
                })
                .collect();
            pts.par_iter()
                .map(|(p, nu, l)| (Point::new(*p, nu, *l, 0), check_oracle(*p, nu, *l, config.max_dim)))
                .collect()
        }
        Check::Ring => {
            let empty = Partition::default();
            let mut out: Vec<(Point, Outcome)> = primes
                .iter()
                .flat_map(|&p| {
                    ring_points(p, config.seed, config.ring_samples)
                        .into_iter()
                        .enumerate()
                        .map(move |(k, pair)| (p, k, pair))
                })
                .collect::<Vec<_>>()
                .par_iter()
                .map(|(p, k, (a, b))| (Point::new(*p, &empty, 0, *k), check_ring_pair(a, b)))
                .collect();
            for &p in primes {
                let point = Point::new(p, &empty, 0, config.ring_samples);
                out.push((point, check_units_and_orbits(p)));
            }
            out
        }
    };
    collect(check, results)
}

pub fn run_verify(config: &VerifyConfig) -> VerifyReport {
    VerifyReport {
        primes: config.primes.iter().map(|p| p.get()).collect(),
        checks: config.checks.iter().map(|&c| run_check(c, config)).collect(),
    }
}
