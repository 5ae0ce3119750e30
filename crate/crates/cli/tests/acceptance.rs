//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use num_bigint::BigInt;
use quartic_reduction::classifier::{
    classify, classify_invariants, good_quartic_test, octic_fiber_values, picard_classify, picard_quartic,
    special_fiber_shioda, ReductionType,
};
use quartic_reduction::fixtures::{cartan13, toggle11, x12_synthetic_invariants, x1_x3_quartic, X12_VALUATIONS};
use quartic_reduction::forms::{klein_quartic, q0, BinaryForm, BinaryFormModP, LinearMap2, LinearMap3, TernaryForm};
use quartic_reduction::invariants::{
    act_dual, conic_square_invariants, dixmier_ohno, hsop_catalog, iota, picard_scalars, rho,
};
use quartic_reduction::rational::{int, pow, rat, smooth, Rational};
use quartic_reduction::toggle::{b8, congruence_suite, detect_toggle, good_toggle_check, h_embed, ToggleModel};
use quartic_reduction::valuations::{normalized_valuation, val_p, ValOrInf, WeightedValuationPoint};
use quartic_reduction_cli::commands::run_batch;
use quartic_reduction_cli::docs::Detail;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(n: u64) -> BigInt {
    BigInt::from(n)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_int(r: &mut ChaCha8Rng, b: i64) -> Rational {
    int(r.gen_range(-b..=b))
}

fn small_rat(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-6..=6), r.gen_range(1..=4))
}

fn random_form(r: &mut ChaCha8Rng, degree: u32, b: i64) -> TernaryForm {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    TernaryForm::from_coeffs(degree, (0..n).map(|_| small_int(r, b)).collect()).unwrap()
}

fn random_rational_form(r: &mut ChaCha8Rng, degree: u32) -> TernaryForm {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    TernaryForm::from_coeffs(degree, (0..n).map(|_| small_rat(r)).collect()).unwrap()
}

fn random_gl3(r: &mut ChaCha8Rng) -> LinearMap3 {
    loop {
        let t = LinearMap3(std::array::from_fn(|_| std::array::from_fn(|_| small_int(r, 2))));
        if t.det() != int(0) {
            return t;
        }
    }
}

fn random_sl3(r: &mut ChaCha8Rng) -> LinearMap3 {
    let mut t = LinearMap3::identity();
    for _ in 0..4 {
        let i = r.gen_range(0..3);
        let j = (i + r.gen_range(1..3)) % 3;
        let mut e = LinearMap3::identity();
        e.0[i][j] = small_int(r, 2);
        t = &t * &e;
    }
    t
}

fn random_sl2(r: &mut ChaCha8Rng) -> LinearMap2 {
    let mut t = LinearMap2::identity();
    for k in 0..3 {
        let c = small_rat(r);
        let e = if k % 2 == 0 {
            LinearMap2::new(int(1), c, int(0), int(1))
        } else {
            LinearMap2::new(int(1), int(0), c, int(1))
        };
        t = &t * &e;
    }
    t
}

fn random_gl2(r: &mut ChaCha8Rng) -> LinearMap2 {
    loop {
        let t = LinearMap2(std::array::from_fn(|_| std::array::from_fn(|_| small_rat(r))));
        if t.det() != int(0) {
            return t;
        }
    }
}

fn random_p_integral(r: &mut ChaCha8Rng, q: i64) -> Rational {
    if r.gen_bool(0.1) {
        return int(0);
    }
    let k = r.gen_range(0..=4u32);
    let u = loop {
        let u = r.gen_range(-40..=40i64);
        if u % q != 0 {
            break u;
        }
    };
    int(u) * pow(&int(q), k)
}

fn c1_conic_squares() -> Outcome {
    let mut r = rng(101);
    for k in 0..100 {
        let q = random_rational_form(&mut r, 2);
        let d = dixmier_ohno(&q.pow(2));
        check(d == conic_square_invariants(&q), || format!("conic {k}: slot mismatch"))?;
        let d3 = q.conic_discriminant();
        check(d.i3() == &(rat(5, 36) * &d3 * &d3), || format!("conic {k}: I3"))?;
    }
    let i3 = dixmier_ohno(&q0().pow(2)).i3().clone();
    check(i3 == rat(320, 9), || format!("I3(Q0^2) = {i3}"))?;
    Ok("100 conics, I3(Q0^2) = 320/9".into())
}

fn c2_rho() -> Outcome {
    let dual = |e: [u32; 3], c: i64| TernaryForm::from_int_terms(2, &[(e, c)]);
    let want = (&dual([0, 2, 0], 1) - &dual([1, 0, 1], 1)).scale(&-(int(4096 * 35) / int(9)));
    check(rho(&q0().pow(2)) == want, || "rho(Q0^2)".into())?;
    check(rho(&klein_quartic()).is_zero(), || "rho(Klein) != 0".into())?;
    let mut r = rng(102);
    for k in 0..50 {
        let f = random_form(&mut r, 4, 3);
        let t = random_gl3(&mut r);
        let lhs = rho(&f.act(&t));
        let rhs = act_dual(&rho(&f), &t).unwrap().scale(&pow(&t.det(), 6));
        check(lhs == rhs, || format!("pair {k}: equivariance"))?;
    }
    Ok("anchors exact, 50 equivariance pairs".into())
}

fn c3_picard_closed_forms() -> Outcome {
    let mut r = rng(103);
    for k in 0..200 {
        let (a, b, c) = (small_rat(&mut r), small_rat(&mut r), small_rat(&mut r));
        let pq = picard_scalars(&a, &b, &c);
        let (q2, q3, d6) = (&pq.q2, &pq.q3, &pq.d6);
        let d = dixmier_ohno(&picard_quartic(&a, &b, &c));
        let q2c = pow(q2, 3);
        let i9 = smooth(-12, -4, 0, 0) * (int(8) * &a * q3 + int(81) * q2 * q2);
        let j9 = smooth(-12, -4, 0, 0) * (int(16) * &a * q3 + int(27) * q2 * q2);
        let i18 = smooth(-23, -6, 0, 0)
            * (int(108) * &a * &a * &q2c + int(33) * &a * q3 * q2 * q2 + int(8) * pow(q2, 4) - int(54) * d6 * q2);
        let j18 = smooth(-23, -7, 0, 0)
            * (int(36) * &a * &a * &q2c + int(51) * &a * q3 * q2 * q2 + int(16) * pow(q2, 4) - int(108) * d6 * q2);
        let i27 = smooth(-40, 9, 0, 0) * d6 * d6;
        let ok = d.i9() == &i9 && d.j9() == &j9 && d.i18() == &i18 && d.j18() == &j18 && d.i27() == &i27;
        check(ok, || format!("triple {k} = ({a}, {b}, {c})"))?;
        let rel = smooth(12, 1, -1, 0) * (int(2) * d.i9() - d.j9());
        check(rel == q2 * q2, || format!("triple {k}: 2I9 - J9 relation"))?;
    }
    Ok("200 triples, five formulas and the q2 relation".into())
}

fn c4_cartan13() -> Outcome {
    let f = cartan13();
    let d = dixmier_ohno(&f);
    check(d.d27() == -pow(&int(13), 6), || format!("D27 = {}", d.d27()))?;
    let r13 = classify(&f, &p(13)).map_err(|e| e.to_string())?;
    let mut want = vec![ValOrInf::from_int(0); 13];
    want[12] = ValOrInf::from_int(6);
    check(r13.do_valuations == want, || format!("DO valuations {:?}", r13.do_valuations))?;
    let iv = [1, 2, 2, 3, 3, 3].map(ValOrInf::from_int).to_vec();
    check(r13.iota_valuations == iv, || format!("iota valuations {:?}", r13.iota_valuations))?;
    check(r13.v_do_d27 == Some(ValOrInf::Finite(rat(6, 27))), || format!("v_DO(D27) = {:?}", r13.v_do_d27))?;
    check(r13.v_iota_42 == ValOrInf::from_int(0), || format!("v_iota = {:?}", r13.v_iota_42))?;
    check(r13.reduction == ReductionType::GoodHyperelliptic, || format!("p = 13: {}", r13.reduction))?;
    for q in [11u64, 101] {
        let r = classify(&f, &p(q)).map_err(|e| e.to_string())?;
        check(r.reduction == ReductionType::GoodQuartic, || format!("p = {q}: {}", r.reduction))?;
    }
    Ok("D27 = -13^6, valuation patterns, 13: GoodHyperelliptic, 11 and 101: GoodQuartic".into())
}

fn c5_x12() -> Outcome {
    let d = x12_synthetic_invariants();
    let vals: Vec<ValOrInf> = d.values.iter().map(|v| val_p(v, &p(11))).collect();
    let want: Vec<ValOrInf> = X12_VALUATIONS.iter().map(|&v| ValOrInf::from_int(v as i64)).collect();
    check(vals == want, || format!("valuations {vals:?}"))?;
    let r = classify_invariants(&d, &p(11)).map_err(|e| e.to_string())?;
    check(r.reduction == ReductionType::Bad, || format!("reduction {}", r.reduction))?;
    Ok("synthetic vector with the X12 valuations classifies Bad at 11".into())
}

fn c6_toggle11() -> Outcome {
    let f = toggle11();
    let p11 = p(11);
    let r = classify(&f, &p11).map_err(|e| e.to_string())?;
    check(r.reduction == ReductionType::GoodHyperelliptic, || format!("reduction {}", r.reduction))?;
    let m = detect_toggle(&f, &p11).map_err(|e| e.to_string())?.ok_or("no toggle model")?;
    check(m.q == q0() && m.s == 4 && m.g == x1_x3_quartic(), || format!("model s = {}", m.s))?;
    let sf = good_toggle_check(&m).map_err(|e| e.to_string())?;
    check(sf.distinct_roots, || "good_toggle_check false".into())?;
    let octic = BinaryForm::from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, 1]);
    check(sf.octic == BinaryFormModP::reduce(&octic, &p11).unwrap(), || "special fiber octic".into())?;
    let point = special_fiber_shioda(&f, &p11).map_err(|e| e.to_string())?;
    let want = octic_fiber_values(&octic, &p11).map_err(|e| e.to_string())?;
    check(point.matches(&want), || format!("fiber point {point:?}"))?;
    Ok("model (Q0, 4, x1^4 + x3^4), fiber x^8 + z^8 mod 11".into())
}

fn c7_congruences() -> Outcome {
    let mut r = rng(107);
    let mut n = 0;
    for pp in [11u64, 13] {
        for s in 1..=3u32 {
            for k in 0..50 {
                let g = random_form(&mut r, 4, 9);
                let m = ToggleModel::new(q0(), s, g, p(pp)).map_err(|e| format!("G {k}: {e}"))?;
                let rep = congruence_suite(&m).map_err(|e| e.to_string())?;
                for e in &rep.entries {
                    check(e.holds(), || {
                        format!("p = {pp}, s = {s}, G {k}: {} margin {:?} < {}", e.label, e.margin, e.required)
                    })?;
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} models, all seven margins at their bounds"))
}

fn c8_b8_h() -> Outcome {
    let mut r = rng(108);
    for k in 0..50 {
        let f = random_rational_form(&mut r, 4);
        let t = random_gl2(&mut r);
        let ht = h_embed(&t).transpose();
        check(b8(&f.act(&ht)) == b8(&f).act(&t.transpose()), || format!("pair {k}: equivariance"))?;
    }
    for k in 0..50 {
        let q = random_rational_form(&mut r, 2);
        check(b8(&(&q0() * &q)).is_zero(), || format!("conic {k}: kernel"))?;
    }
    for k in 0..50 {
        let t = random_sl2(&mut r);
        check(t.det() == int(1), || "det".into())?;
        check(q0().act(&h_embed(&t).transpose()) == q0(), || format!("matrix {k}: Q0 not fixed"))?;
    }
    Ok("50 equivariance pairs, 50 kernel conics, 50 stabilizer matrices".into())
}

fn c9_nullcone() -> Outcome {
    let mut r = rng(109);
    for k in 0..20 {
        // Only monomials of x1-degree at most 1: a triple point at (1:0:0).
        let mut f = random_form(&mut r, 4, 5);
        for (e, _) in f.clone().terms() {
            if e[0] >= 2 {
                f.set_coeff(e, int(0));
            }
        }
        let f = f.act(&random_sl3(&mut r));
        check(dixmier_ohno(&f).is_zero(), || format!("quartic {k}"))?;
    }
    Ok("20 quartics with a triple point".into())
}

fn c10_hsop() -> Outcome {
    let labels = |q: u64| hsop_catalog(&p(q)).map(|c| c.labels());
    let generic = vec!["I3", "I6", "I9-J9", "I12", "I15", "I18", "I27"];
    let expect: [(u64, Vec<&str>); 7] = [
        (11, vec!["I3", "I6", "I9", "I12", "I15", "I18", "I27"]),
        (7, generic.clone()),
        (19, generic.clone()),
        (47, generic.clone()),
        (277, generic.clone()),
        (523, generic.clone()),
        (5, vec!["I3", "I6", "I9^(5)", "I12", "J15^(5)", "I18", "I27"]),
    ];
    for (q, want) in expect {
        let got = labels(q).map_err(|e| e.to_string())?;
        check(got == want, || format!("p = {q}: {got:?}"))?;
    }
    check(labels(2).is_err() && labels(3).is_err(), || "p = 2 or 3 accepted".into())?;
    Ok("seven catalogs exact, 2 and 3 rejected".into())
}

fn c11_valuation_algebra() -> Outcome {
    let d = dixmier_ohno(&cartan13());
    let p13 = p(13);
    let x = WeightedValuationPoint::new(d.values.to_vec(), d.weights().to_vec(), p13.clone());
    let v = normalized_valuation(&x, d.i27(), 27).map_err(|e| e.to_string())?;
    check(v == ValOrInf::Finite(rat(6, 27)), || format!("v_DO(D27) = {v:?}"))?;
    let io = iota(&d);
    let xi = WeightedValuationPoint::new(io.values.to_vec(), vec![6, 9, 12, 15, 18, 21], p13.clone());
    let vi = normalized_valuation(&xi, &io.iota42, 42).map_err(|e| e.to_string())?;
    check(vi == ValOrInf::Finite(rat(6, 42) - rat(1, 7)), || format!("v_iota = {vi:?}"))?;
    check(vi == ValOrInf::from_int(0), || "6/42 - 1/7 != 0".into())?;

    let mut r = rng(111);
    for k in 0..100 {
        let q = [5u64, 7, 11, 13][r.gen_range(0..4)];
        let weights: Vec<u32> = (0..4).map(|_| r.gen_range(1..=9)).collect();
        let values: Vec<Rational> =
            (0..4).map(|_| if r.gen_bool(0.15) { int(0) } else { random_p_integral(&mut r, q as i64) }).collect();
        let x = WeightedValuationPoint::new(values, weights, p(q));
        if x.is_all_zero() {
            continue;
        }
        let e = r.gen_range(1..=12);
        let y = random_p_integral(&mut r, q as i64);
        let c = int(r.gen_range(1..=5)) * pow(&int(q as i64), r.gen_range(0..=3)) / int(r.gen_range(1..=3));
        let c = if c == int(0) { int(1) } else { c };
        let before = normalized_valuation(&x, &y, e).map_err(|e| e.to_string())?;
        let after = normalized_valuation(&x.rescale(&c), &(&y * pow(&c, e)), e).map_err(|e| e.to_string())?;
        check(before == after, || format!("instance {k}: {before:?} vs {after:?}"))?;
    }
    Ok("6/27 and 6/42 - 1/7 = 0 reproduced, 100 rescalings invariant".into())
}

fn c12_picard_classifier() -> Outcome {
    let p11 = p(11);
    let good = picard_classify(&int(0), &int(0), &int(1), &p11).map_err(|e| e.to_string())?;
    check(good.reduction == ReductionType::GoodQuartic, || "(0,0,1) not good".into())?;
    let bad = picard_classify(&int(11), &int(0), &int(1331), &p11).map_err(|e| e.to_string())?;
    check(bad.reduction == ReductionType::Bad, || "(11,0,11^3) not bad".into())?;

    let mut r = rng(112);
    let (mut n, mut skipped) = (0, 0);
    for k in 0..1000 {
        let q = [5i64, 7, 11, 13][k % 4];
        let (a, b, c) = (random_p_integral(&mut r, q), random_p_integral(&mut r, q), random_p_integral(&mut r, q));
        let rep = match picard_classify(&a, &b, &c, &p(q as u64)) {
            Ok(rep) => rep,
            Err(quartic_reduction::Error::Singular) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        let want = Some(rep.reduction == ReductionType::GoodQuartic);
        check(rep.corollary_holds == want, || format!("({a}, {b}, {c}) at {q}"))?;
        n += 1;
    }
    let mut m = 0;
    while m < 100 {
        let (a, b, c) = (random_p_integral(&mut r, 11), random_p_integral(&mut r, 11), random_p_integral(&mut r, 11));
        let Ok(rep) = picard_classify(&a, &b, &c, &p11) else { continue };
        let d = dixmier_ohno(&picard_quartic(&a, &b, &c));
        let qt = good_quartic_test(&d, &p11).map_err(|e| e.to_string())?;
        check(qt.passes == (rep.reduction == ReductionType::GoodQuartic), || format!("({a}, {b}, {c}) at 11"))?;
        m += 1;
    }
    Ok(format!("hand examples, corollary on {n} of 1000 triples ({skipped} singular), 100 quartic tests at 11"))
}

fn c13_determinism() -> Outcome {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let corpus = std::fs::read_to_string(dir.join("corpus.ndjson")).map_err(|e| e.to_string())?;
    let golden = std::fs::read_to_string(dir.join("golden/corpus.ndjson")).map_err(|e| e.to_string())?;
    let detail = Detail { hsop: true, certificate: true };
    let first = run_batch(&corpus, 1, detail);
    for threads in [1, 2, 4, 8] {
        let again = run_batch(&corpus, threads, detail);
        check(again == first, || format!("{threads} threads differ"))?;
    }
    check(first == golden, || "output differs from the committed golden file".into())?;
    Ok("byte-identical over 1, 2, 4, 8 threads and equal to the golden file".into())
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("conic-square anchor", c1_conic_squares),
        ("rho anchors and equivariance", c2_rho),
        ("Picard closed forms", c3_picard_closed_forms),
        ("level 13 Cartan curve regression", c4_cartan13),
        ("X12 regression", c5_x12),
        ("toggle model regression at 11", c6_toggle11),
        ("congruence suite", c7_congruences),
        ("b8 and h suite", c8_b8_h),
        ("nullcone", c9_nullcone),
        ("HSOP catalog", c10_hsop),
        ("valuation algebra", c11_valuation_algebra),
        ("Picard classifier", c12_picard_classifier),
        ("batch determinism", c13_determinism),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = std::time::Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
