use binform::beauville::{
    beauville_closed_forms, beauville_numeric, beauville_pipeline, decompose_in_jkl,
    decompose_specialized, gl2_equivalent, pipeline_monic, prop48_rank, same_j_data,
    thm48_decompose, JklPolynomial, LAMBDA, Z,
};
use binform::forms::{act, discriminant, BinaryForm, GroupElement};
use binform::invariants::{
    monomial_basis, quintic_invariants, syzygy_rhs, JklMonomial, SylvesterPoint,
};
use binform::rational::{rat, ratio, Rational};
use binform::sample;
use binform::MPoly;
use proptest::prelude::*;
use rand::Rng;

fn random_jkl(rng: &mut sample::SampleRng, d: u64) -> JklPolynomial {
    let basis = monomial_basis(d).unwrap();
    let mut terms = Vec::new();
    for m in basis {
        if rng.gen_bool(0.6) {
            terms.push((m, ratio(rng.gen_range(-20..=20), rng.gen_range(1..=6))));
        }
    }
    JklPolynomial::homogeneous(d, terms).unwrap()
}

#[test]
fn decomposition_round_trip_on_canonical_form() {
    let mut rng = sample::rng(31);
    let [j, k, l, _] = SylvesterPoint::symbolic().closed_forms();
    for trial in 0..24 {
        let d = 4 * (1 + trial % 9) as u64;
        let p = random_jkl(&mut rng, d);
        let back = decompose_specialized(&p.expand(&j, &k, &l), d).unwrap();
        assert_eq!(back, p, "degree {d}");
    }
}

#[test]
fn decomposition_round_trip_through_cartesian_form() {
    let iv = quintic_invariants(&BinaryForm::generic(5, "a")).unwrap();
    let mut rng = sample::rng(8);
    for d in [4u64, 8, 12, 16] {
        let p = random_jkl(&mut rng, d);
        let cartesian = p.expand(&iv.j, &iv.k, &iv.l);
        assert_eq!(decompose_in_jkl(&cartesian, d).unwrap(), p);
    }
}

#[test]
fn h_squared_is_the_syzygy() {
    let [j, k, l, h] = SylvesterPoint::symbolic().closed_forms();
    let d = decompose_specialized(&(&h * &h), 36).unwrap();
    let m = JklMonomial::new;
    let expected = JklPolynomial::homogeneous(
        36,
        [
            (m(3, 0, 0), ratio(-432, 16)),
            (m(2, 1, 1), ratio(-72, 16)),
            (m(1, 3, 0), ratio(8, 16)),
            (m(1, 2, 2), ratio(-2, 16)),
            (m(2, 0, 3), ratio(1, 16)),
            (m(0, 4, 1), ratio(1, 16)),
        ],
    )
    .unwrap();
    assert_eq!(d, expected);
    assert_eq!(
        expected.expand(&j, &k, &l).scale(&rat(16)),
        syzygy_rhs(&j, &k, &l)
    );
}

#[test]
fn h_is_not_in_the_jkl_subring() {
    let [_, _, _, h] = SylvesterPoint::symbolic().closed_forms();
    assert!(decompose_specialized(&h, 18).is_err());
}

#[test]
fn closed_forms_identity_for_b0() {
    // ℬ₀ = 2⁻⁴⁰ (5⁵ (J² − 128 K))³ in the J, K, L basis
    let m = JklMonomial::new;
    let disc = JklPolynomial::homogeneous(
        8,
        [(m(0, 0, 2), rat(3125)), (m(0, 1, 0), rat(-400000))],
    )
    .unwrap();
    let cube = disc.mul(&disc).mul(&disc).scale(&(Rational::one() / rat(2).pow(40)));
    assert_eq!(cube, beauville_closed_forms()[0]);
}

#[test]
fn fast_and_resultant_paths_agree() {
    let mut rng = sample::rng(55);
    for _ in 0..5 {
        let f = sample::int_form(&mut rng, 5, 7);
        let (bv, _) = beauville_pipeline(&f).unwrap();
        assert_eq!(bv.values().unwrap(), beauville_numeric(&f).unwrap(), "{f}");
    }
    // leading coefficient zero goes through the shear
    let f = BinaryForm::from_ints(&[0, 1, -2, 3, 0, 5]);
    let (bv, _) = beauville_pipeline(&f).unwrap();
    assert_eq!(bv.values().unwrap(), beauville_numeric(&f).unwrap());
}

#[test]
fn b0_is_the_cubed_discriminant_numerically() {
    let mut rng = sample::rng(2);
    let two40 = Rational::one() / rat(2).pow(40);
    for _ in 0..10 {
        let f = sample::int_form(&mut rng, 5, 9);
        let (bv, _) = beauville_pipeline(&f).unwrap();
        let disc = discriminant(&f).unwrap();
        assert_eq!(bv.b[0], disc.pow(3).scale(&two40));
    }
}

#[test]
fn beauville_invariance_and_degree() {
    let mut rng = sample::rng(73);
    for _ in 0..20 {
        let g = sample::sl2_element(&mut rng, 3);
        let f = sample::int_form(&mut rng, 5, 5);
        let (a, _) = beauville_pipeline(&f).unwrap();
        let (b, _) = beauville_pipeline(&act(&g, &f)).unwrap();
        assert_eq!(a, b);
    }
    let f = BinaryForm::from_ints(&[2, 1, 0, -3, 1, 1]);
    let c = ratio(3, 2);
    let (a, _) = beauville_pipeline(&f).unwrap();
    let (b, _) = beauville_pipeline(&f.scale(&MPoly::constant(c.clone()))).unwrap();
    let factor = c.pow(24);
    for i in 0..6 {
        assert_eq!(b.b[i], a.b[i].scale(&factor));
    }
}

#[test]
fn trace_of_a_monic_run() {
    let a: [MPoly; 5] = [3, -1, 0, 2, 7].map(|x: i64| MPoly::from(x));
    let (b, trace) = pipeline_monic(&a).unwrap();
    assert_eq!(trace.r_bar.degree_in(Z), Some(5));
    assert!(trace.phi_reduced.degree_in(LAMBDA).unwrap_or(0) <= 4);
    let f_lambda: MPoly = "lambda^5 + 3*lambda^4 - lambda^3 + 2*lambda + 7".parse().unwrap();
    assert_eq!(&(&trace.phi_quotient * &f_lambda) + &trace.phi_reduced, trace.phi);
    let rebuilt = (0..6).fold(MPoly::zero(), |acc, i| {
        &acc + &(&b[i] * &MPoly::var(Z).pow(5 - i as u32))
    });
    assert_eq!(rebuilt, trace.r_bar);
}

#[test]
fn degree_48_products_have_full_rank() {
    let p = prop48_rank();
    assert_eq!((p.matrix.rows(), p.matrix.cols(), p.rank), (19, 21, 19));
}

#[test]
fn thm48_on_every_triple_up_to_degree_480() {
    let mut checked = 0;
    for n in 1..=10u32 {
        let w = 12 * n;
        for l in 0..=w / 3 {
            for k in 0..=(w - 3 * l) / 2 {
                let alpha = JklMonomial::new(l, k, w - 3 * l - 2 * k);
                let factors = thm48_decompose(alpha).unwrap();
                assert_eq!(factors.len() as u64, alpha.degree() / 48);
                assert!(factors.iter().all(|m| m.degree() == 48), "{alpha}");
                let prod = factors.iter().fold(JklMonomial::new(0, 0, 0), |a, m| a.mul(m));
                assert_eq!(prod, alpha);
                checked += 1;
            }
        }
    }
    assert!(checked >= 200);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn thm48_rejects_other_degrees(l in 0u32..20, k in 0u32..20, j in 0u32..40) {
        let alpha = JklMonomial::new(l, k, j);
        prop_assert_eq!(thm48_decompose(alpha).is_ok(), alpha.degree() > 0 && alpha.degree().is_multiple_of(48));
    }
}

#[test]
fn j_data_and_orbits_agree() {
    let mut rng = sample::rng(404);
    let mut equivalent = 0;
    for i in 0..30 {
        let f1 = sample::stable_quintic(&mut rng, 6);
        let f2 = if i % 2 == 0 {
            let g = sample::sl2_element(&mut rng, 3)
                .compose(&GroupElement::from_ints([[1, 0], [0, rng.gen_range(1..=4)]]).unwrap());
            act(&g, &f1).scale(&MPoly::constant(sample::nonzero_rational(&mut rng, 5)))
        } else {
            sample::stable_quintic(&mut rng, 6)
        };
        let e = gl2_equivalent(&f1, &f2).unwrap().equivalent;
        assert_eq!(e, same_j_data(&f1, &f2).unwrap(), "{f1} / {f2}");
        if i % 2 == 0 {
            assert!(e);
            equivalent += 1;
        }
    }
    assert_eq!(equivalent, 15);
}
