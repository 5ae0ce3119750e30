mod common;

use common::*;
use num_bigint::BigInt;
use quartic_reduction::classifier::*;
use quartic_reduction::fixtures::*;
use quartic_reduction::forms::{BinaryForm, LinearMap3};
use quartic_reduction::rational::{int, pow, rat, Rational};
use quartic_reduction::valuations::ValOrInf;
use rand::Rng;

fn p(n: u64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn cartan13_reduction_types() {
    let f = cartan13();
    let r13 = classify(&f, &p(13)).unwrap();
    assert_eq!(r13.reduction, ReductionType::GoodHyperelliptic);
    assert_eq!(r13.v_do_d27, Some(ValOrInf::Finite(rat(6, 27))));
    assert_eq!(r13.v_do_i3, ValOrInf::from_int(0));
    assert_eq!(r13.v_iota_42, ValOrInf::from_int(0));
    assert_eq!(r13.toggle_locus, Some(true));
    let mut want = vec![ValOrInf::from_int(0); 13];
    want[12] = ValOrInf::from_int(6);
    assert_eq!(r13.do_valuations, want);
    assert_eq!(r13.iota_valuations, [1, 2, 2, 3, 3, 3].map(ValOrInf::from_int).to_vec());
    assert_eq!(r13.iota42_valuation, ValOrInf::from_int(6));

    let octic = BinaryForm::from_i64(&[0, 1, 0, 0, 0, 0, 0, 0, -1]);
    let point = r13.special_fiber_shioda.unwrap();
    assert!(point.matches(&octic_fiber_values(&octic, &p(13)).unwrap()));

    for q in [5u64, 7, 11, 101] {
        assert_eq!(classify(&f, &p(q)).unwrap().reduction, ReductionType::GoodQuartic, "p = {q}");
    }
    assert_eq!(classify(&f, &p(3)).unwrap().reduction, ReductionType::Unsupported(UnsupportedReason::NoHsopCatalog));
}

#[test]
fn x12_is_bad() {
    let d = x12_synthetic_invariants();
    let r = classify_invariants(&d, &p(11)).unwrap();
    let vals: Vec<ValOrInf> = X12_VALUATIONS.iter().map(|&v| ValOrInf::from_int(v as i64)).collect();
    assert_eq!(r.do_valuations, vals);
    assert_eq!(r.reduction, ReductionType::Bad);
    assert_eq!(r.toggle_locus, Some(false));
    assert!(!hyperelliptic_test(&d, &r.iota, &p(11)).unwrap().passes);
}

#[test]
fn toggle11_is_good_hyperelliptic() {
    let r = classify(&toggle11(), &p(11)).unwrap();
    assert_eq!(r.reduction, ReductionType::GoodHyperelliptic);
    let octic = BinaryForm::from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, 1]);
    assert!(r.special_fiber_shioda.unwrap().matches(&octic_fiber_values(&octic, &p(11)).unwrap()));
    assert!(matches!(special_fiber_shioda(&cartan13(), &p(11)), Err(quartic_reduction::Error::NotHyperelliptic)));
}

#[test]
fn invariant_under_unit_changes_of_coordinates() {
    let mut r = rng(21);
    let f = cartan13();
    let base = classify(&f, &p(13)).unwrap();
    for _ in 0..3 {
        let t = loop {
            let t = random_gl3(&mut r);
            if quartic_reduction::valuations::val_int(&t.det(), &p(13)) == Some(0) {
                break t;
            }
        };
        let g = f.act(&t).scale(&int(5));
        let rep = classify(&g, &p(13)).unwrap();
        assert_eq!(rep.reduction, base.reduction);
        assert_eq!(rep.v_do_d27, base.v_do_d27);
        assert_eq!(rep.v_do_i3, base.v_do_i3);
        assert_eq!(rep.v_iota_42, base.v_iota_42);
    }
    let s = LinearMap3::scalar(int(13));
    let rep = classify(&f.act(&s), &p(13)).unwrap();
    assert_eq!(rep.reduction, base.reduction);
}

fn random_p_integral(r: &mut rand_chacha::ChaCha8Rng, q: i64) -> Rational {
    let k = r.gen_range(0..=4u32);
    let u = loop {
        let u = r.gen_range(-40..=40i64);
        if u % q != 0 {
            break u;
        }
    };
    if r.gen_bool(0.1) {
        int(0)
    } else {
        int(u) * pow(&int(q), k)
    }
}

#[test]
fn picard_corollary_agreement() {
    let mut r = rng(22);
    let mut n = 0;
    for q in [5i64, 7, 11, 13] {
        for _ in 0..100 {
            let (a, b, c) = (random_p_integral(&mut r, q), random_p_integral(&mut r, q), random_p_integral(&mut r, q));
            let Ok(rep) = picard_classify(&a, &b, &c, &p(q as u64)) else { continue };
            assert_eq!(rep.corollary_holds, Some(rep.reduction == ReductionType::GoodQuartic), "{a} {b} {c} at {q}");
            n += 1;
        }
    }
    assert!(n > 300);
}

#[test]
fn picard_agrees_with_quartic_test() {
    let mut r = rng(23);
    for _ in 0..15 {
        let (a, b, c) = (random_p_integral(&mut r, 11), random_p_integral(&mut r, 11), random_p_integral(&mut r, 11));
        let Ok(rep) = picard_classify(&a, &b, &c, &p(11)) else { continue };
        let full = classify(&picard_quartic(&a, &b, &c), &p(11)).unwrap();
        assert_eq!(
            rep.reduction == ReductionType::GoodQuartic,
            full.reduction == ReductionType::GoodQuartic,
            "{a} {b} {c}"
        );
    }
}

#[test]
fn smooth_reduction_means_good_quartic() {
    use quartic_reduction::forms::{fermat_quartic, klein_quartic};
    for q in [5u64, 11, 13, 17] {
        assert_eq!(classify(&fermat_quartic(), &p(q)).unwrap().reduction, ReductionType::GoodQuartic);
    }
    assert_eq!(classify(&klein_quartic(), &p(11)).unwrap().reduction, ReductionType::GoodQuartic);
}

#[test]
fn rejects_bad_inputs() {
    use quartic_reduction::forms::q0;
    assert!(matches!(classify(&q0().pow(2), &p(11)), Err(quartic_reduction::Error::Singular)));
    assert!(classify(&cartan13(), &p(15)).is_err());
    assert!(classify(&q0(), &p(11)).is_err());
}
