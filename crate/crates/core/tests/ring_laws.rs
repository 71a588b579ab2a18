use num_bigint::BigInt;
use proptest::prelude::*;
use stablerep::stable::{psi_from_presentation, psi_to_presentation, table_position, PresentationPoly};
use stablerep::{Basis, CycInt, LaurentPoly, OddPrime, RealCycCoords, StableElement};

fn any_prime() -> impl Strategy<Value = OddPrime> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13]).prop_map(|p| OddPrime::new(p).unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..=6, -1000i64..=1000), 0..6).prop_map(LaurentPoly::from_terms)
}

fn cycint(p: OddPrime) -> impl Strategy<Value = CycInt> {
    proptest::collection::vec((-30i64..30, -1000i64..=1000), 0..8)
        .prop_map(move |terms| CycInt::from_powers(p, terms))
}

fn cyc_triple() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
    any_prime().prop_flat_map(|p| (cycint(p), cycint(p), cycint(p)))
}

fn stable(p: OddPrime) -> impl Strategy<Value = StableElement> {
    let n = p.as_usize();
    proptest::collection::vec((0..=n - 2, 0..n - 1, -4i64..=4), 0..5).prop_map(move |terms| {
        StableElement::from_terms(p, terms.into_iter().map(|(l, m, c)| (l, m as i64, c))).unwrap()
    })
}

fn stable_triple() -> impl Strategy<Value = (StableElement, StableElement, StableElement)> {
    any_prime().prop_flat_map(|p| (stable(p), stable(p), stable(p)))
}

/// An element of the span of `Sym^l E` with `l ≡ parity (mod 2)`.
fn parity_pure(p: OddPrime) -> impl Strategy<Value = (StableElement, u8)> {
    let n = p.as_usize();
    (0u8..2, proptest::collection::vec((0..=n - 2, -6i64..=6), 0..6)).prop_map(move |(parity, terms)| {
        let terms = terms
            .into_iter()
            .filter(move |&(l, _)| l % 2 == parity as usize)
            .map(|(l, c)| (l, 0, c));
        (StableElement::from_terms(p, terms).unwrap(), parity)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(b.clone() + c.clone()), (&a * &b) + (&a * &c));
        prop_assert_eq!(a.clone() - a.clone(), LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn cyclotomic_ring_axioms((a, b, c) in cyc_triple()) {
        let p = a.prime();
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(b.clone() + c.clone()), (&a * &b) + (&a * &c));
        prop_assert_eq!(a.clone() - a.clone(), CycInt::zero(p));
        prop_assert_eq!(&a * &CycInt::one(p), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.coeffs().len(), p.as_usize() - 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn canonical_form_is_unique((a, _, _) in cyc_triple(), k in -50i64..50, shift in -3i64..3) {
        let p = a.prime();
        // Adding a multiple of 1 + ζ + ⋯ + ζ^{p-1} changes nothing.
        let full: Vec<BigInt> = a.full_coeffs().into_iter().map(|x| x + k).collect();
        prop_assert_eq!(CycInt::from_full(p, full), a.clone());
        // Exponents only matter mod p.
        let shifted = CycInt::from_powers(
            p,
            a.full_coeffs().into_iter().enumerate().map(|(e, c)| (e as i64 + shift * p.as_i64(), c)),
        );
        prop_assert_eq!(shifted.coeffs(), a.coeffs());
    }

    #[test]
    fn real_coordinates_round_trip(p in any_prime(), coords in proptest::collection::vec(-100i64..100, 6)) {
        let coords: Vec<BigInt> = coords.into_iter().take(p.half()).map(BigInt::from).collect();
        let r = RealCycCoords::new(p, coords).unwrap();
        let x = r.to_cycint();
        prop_assert!(x.is_real());
        prop_assert_eq!(x.real_coords().unwrap(), r);
    }

    #[test]
    fn stable_ring_axioms((a, b, c) in stable_triple()) {
        let p = a.prime();
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(b.clone() + c.clone()), (&a * &b) + (&a * &c));
        prop_assert_eq!(&a * &StableElement::one(p), a.clone());
        prop_assert_eq!((&a * &b).dual(), &a.dual() * &b.dual());
        prop_assert_eq!((&a * &b).heller(1), &a.heller(1) * &b);
    }

    #[test]
    fn presentation_round_trip((a, b, _) in stable_triple()) {
        let pa = psi_to_presentation(&a);
        prop_assert_eq!(psi_from_presentation(&pa).unwrap(), a.clone());
        let product = psi_to_presentation(&(&a * &b));
        prop_assert_eq!(product, &pa * &psi_to_presentation(&b));
    }

    #[test]
    fn theta_is_multiplicative(p in any_prime(), seed in (0u64..u64::MAX, 0u64..u64::MAX)) {
        let n = p.as_usize();
        let pick = |s: u64| {
            let terms = (0..4).map(|k| {
                let x = s >> (16 * k);
                ((x % (n as u64 - 1)) as usize, 0, ((x >> 8) % 7) as i64 - 3)
            });
            StableElement::from_terms(p, terms).unwrap()
        };
        let (a, b) = (pick(seed.0), pick(seed.1));
        let lhs = (&a * &b).theta().unwrap();
        prop_assert_eq!(lhs, &a.theta().unwrap() * &b.theta().unwrap());
        prop_assert_eq!((a.clone() + b.clone()).theta().unwrap(), a.theta().unwrap() + b.theta().unwrap());
    }

    #[test]
    fn theta_inversion(p in any_prime(), coords in proptest::collection::vec(-40i64..40, 6)) {
        let coords: Vec<BigInt> = coords.into_iter().take(p.half()).map(BigInt::from).collect();
        let x = RealCycCoords::new(p, coords).unwrap().to_cycint();
        for parity in 0..2 {
            let a = StableElement::theta_invert_parity(&x, parity).unwrap();
            prop_assert_eq!(a.theta().unwrap(), x.clone());
            for (b, _) in a.terms() {
                prop_assert_eq!(b.m, 0);
                prop_assert_eq!(b.l % 2, parity as usize);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn theta_inverts_on_parity_pure((a, parity) in any_prime().prop_flat_map(parity_pure)) {
        let back = StableElement::theta_invert_parity(&a.theta().unwrap(), parity).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn random_presentation_round_trips_per_prime() {
    use proptest::test_runner::{Config, TestRunner};
    for p in OddPrime::up_to(13) {
        let mut runner = TestRunner::new(Config {
            cases: 1000,
            ..Config::default()
        });
        runner
            .run(&(stable(p), stable(p)), |(a, b)| {
                let pa = psi_to_presentation(&a);
                prop_assert_eq!(psi_from_presentation(&pa).unwrap(), a.clone());
                prop_assert_eq!(psi_to_presentation(&(&a * &b)), &pa * &psi_to_presentation(&b));
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn presentation_generators() {
    for p in OddPrime::up_to(13) {
        let x = PresentationPoly::x(p);
        let y = PresentationPoly::y(p);
        assert_eq!(x.pow(p.heller_period() as u32), PresentationPoly::one(p));
        assert_eq!(y.pow(2), PresentationPoly::one(p));
        assert_eq!(psi_from_presentation(&x).unwrap(), StableElement::omega_k(p));
        assert_eq!(
            psi_from_presentation(&y).unwrap(),
            StableElement::sym(p, p.as_usize() - 2).unwrap()
        );
    }
}

#[test]
fn products_respect_heights_and_tables() {
    for p in OddPrime::up_to(13) {
        let n = p.as_usize();
        let all: Vec<Basis> = (0..n - 1)
            .flat_map(|m| (0..=n - 2).map(move |l| Basis { l, m }))
            .collect();
        for &a in &all {
            for &b in &all {
                let ta = table_position(p, a);
                let tb = table_position(p, b);
                let product = StableElement::from_basis(p, a) * StableElement::from_basis(p, b);
                assert!(!product.is_zero());
                for (s, c) in product.terms() {
                    assert_eq!(c, 1);
                    let ts = table_position(p, s);
                    assert_eq!(ts.height, (ta.height + tb.height) % (n - 1));
                    assert_eq!(ts.table == 1, ta.table == tb.table);
                }
            }
        }
    }
}

#[test]
fn orbit_structure_of_heller_shifts() {
    for p in OddPrime::up_to(13) {
        for l in 0..=p.as_usize() - 2 {
            let start = StableElement::sym(p, l).unwrap();
            let mut cur = start.clone();
            for k in 1..=p.heller_period() {
                cur = cur.heller(1);
                assert_eq!(cur == start, k == p.heller_period());
            }
        }
    }
}

proptest! {
    #[test]
    fn json_round_trips((a, _, _) in stable_triple(), (x, _, _) in cyc_triple(), f in laurent()) {
        let back: StableElement = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
        let back: CycInt = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}
