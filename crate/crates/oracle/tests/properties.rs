use proptest::prelude::*;
use stablerep::{Basis, OddPrime, StableElement};
use stablerep_oracle::{decompose_kn, green_module, green_transport, FpMatrix, FpModule, KNDecompositionJson};

fn any_prime() -> impl Strategy<Value = OddPrime> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13]).prop_map(|p| OddPrime::new(p).unwrap())
}

fn matrix() -> impl Strategy<Value = FpMatrix> {
    (any_prime(), 1usize..7, 1usize..7).prop_flat_map(|(p, r, c)| {
        proptest::collection::vec(proptest::collection::vec(0i64..p.as_i64(), c), r)
            .prop_map(move |rows| FpMatrix::from_rows(p.get(), &rows))
    })
}

fn basis(p: OddPrime) -> impl Strategy<Value = Basis> {
    (0..=p.as_usize() - 2, 0..p.heller_period()).prop_map(|(l, m)| Basis { l, m })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rank_nullity(a in matrix()) {
        let n = a.nullspace();
        prop_assert_eq!(a.rank() + n.rows(), a.cols());
        let product = a.mul(&n.transpose());
        prop_assert!((0..product.rows()).all(|i| product.row(i).iter().all(|&x| x == 0)));
        let left = a.left_nullspace();
        prop_assert_eq!(a.rank() + left.rows(), a.rows());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn tensor_of_two_green_modules((p, a, b) in any_prime().prop_flat_map(|p| (Just(p), basis(p), basis(p)))) {
        let v = green_module(p, a).unwrap().tensor(&green_module(p, b).unwrap()).unwrap();
        let d = decompose_kn(&v).unwrap();
        prop_assert_eq!(d.dimension(), v.dim());
        let expected = StableElement::from_basis(p, a) * StableElement::from_basis(p, b);
        prop_assert_eq!(green_transport(&d).unwrap(), expected);
    }

    #[test]
    fn twists_shift_the_top(p in any_prime(), l in 0usize..12, s in -20i64..20) {
        prop_assume!(l < p.as_usize());
        let v = FpModule::build_sym(l, p).unwrap().twist(s);
        v.verify_relations().unwrap();
        let d = decompose_kn(&v).unwrap().to_json();
        let count: usize = d.summands.iter().chain(&d.projective_part).map(|x| x.mult).sum();
        prop_assert_eq!(count, 1);
        let top = d.summands.iter().chain(&d.projective_part).next().unwrap();
        prop_assert_eq!(top.j, l);
        prop_assert_eq!(top.i as i64, (l as i64 + s).rem_euclid(p.heller_period() as i64));
        let json = serde_json::to_string(&d).unwrap();
        let back: KNDecompositionJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, d);
    }
}
