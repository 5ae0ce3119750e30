use num_bigint::BigInt;
use proptest::prelude::*;
use quartic_reduction::forms::{q0, LinearMap2, LinearMap3, TernaryForm};
use quartic_reduction::invariants::dixmier_ohno;
use quartic_reduction::rational::{int, rat, Rational};
use quartic_reduction::toggle::{b8, h_embed};
use quartic_reduction::valuations::{normalized_valuation, ValOrInf, WeightedValuationPoint};

fn quartic() -> impl Strategy<Value = TernaryForm> {
    prop::collection::vec(-5i64..=5, 15)
        .prop_map(|c| TernaryForm::from_coeffs(4, c.into_iter().map(int).collect()).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-50i64..=-1, 1i64..=50], 1i64..=50).prop_map(|(n, d)| rat(n, d))
}

fn unimodular() -> impl Strategy<Value = LinearMap3> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 4).prop_map(|ops| {
        let mut t = LinearMap3::identity();
        for (i, j, c) in ops {
            if i != j {
                let mut e = LinearMap3::identity();
                e.0[i][j] = int(c);
                t = &t * &e;
            }
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dixmier_ohno_is_sl3_invariant(f in quartic(), t in unimodular()) {
        prop_assert_eq!(dixmier_ohno(&f), dixmier_ohno(&f.act(&t)));
    }

    #[test]
    fn normalized_valuation_ignores_weighted_rescaling(
        vals in prop::collection::vec(nonzero_rational(), 1..6),
        ws in prop::collection::vec(1u32..12, 6),
        y in nonzero_rational(),
        c in nonzero_rational(),
        e in 1u32..30,
        prime in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
    ) {
        let weights = ws[..vals.len()].to_vec();
        let p = BigInt::from(prime);
        let x = WeightedValuationPoint::new(vals, weights, p.clone());
        let v0 = normalized_valuation(&x, &y, e).unwrap();
        let yc = &y * quartic_reduction::rational::pow(&c, e);
        let v1 = normalized_valuation(&x.rescale(&c), &yc, e).unwrap();
        prop_assert_eq!(&v0, &v1);
        prop_assert!(v0 >= ValOrInf::from_int(0));
    }

    #[test]
    fn b8_is_linear_and_equivariant(f in quartic(), g in quartic(), a in -3i64..=3, b in -3i64..=3, c in -3i64..=3) {
        prop_assert_eq!(b8(&(&f + &g)), &b8(&f) + &b8(&g));
        // [[1, a], [0, 1]]·[[1, 0], [b, 1]]·[[1, c], [0, 1]] has determinant 1.
        let t = &(&LinearMap2::from_i64([[1, a], [0, 1]]) * &LinearMap2::from_i64([[1, 0], [b, 1]]))
            * &LinearMap2::from_i64([[1, c], [0, 1]]);
        let ht = h_embed(&t).transpose();
        prop_assert_eq!(b8(&f.act(&ht)), b8(&f).act(&t.transpose()));
        prop_assert_eq!(q0().act(&ht), q0());
    }

    #[test]
    fn valuation_order_is_total(a in -20i64..20, b in -20i64..20) {
        let (x, y) = (ValOrInf::from_int(a), ValOrInf::from_int(b));
        prop_assert_eq!(ValOrInf::min_of([&x, &y]), if a <= b { x.clone() } else { y.clone() });
        prop_assert_eq!(&x + &y, ValOrInf::from_int(a + b));
        prop_assert!(x < ValOrInf::Infinite);
    }
}
