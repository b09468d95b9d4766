use binform::forms::{act, discriminant, resultant, BinaryForm, GroupElement};
use binform::invariants::{quintic_covariants, quintic_invariants, InvariantVector, Quartic, SylvesterPoint};
use binform::rational::{rat, ratio, Rational};
use binform::sample::{self, SeedableRng};
use binform::MPoly;
use rand::Rng;

fn linear_product(roots: &[(i64, i64)]) -> BinaryForm {
    roots.iter().fold(BinaryForm::from_ints(&[1]), |acc, &(a, b)| {
        acc.mul(&BinaryForm::from_ints(&[a, b]))
    })
}

/// Π_{i<j} (a_i b_j − a_j b_i)² for linear factors a x1 + b x2.
fn bracket_discriminant(roots: &[(i64, i64)]) -> Rational {
    let mut acc = rat(1);
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = rat(roots[i].0 * roots[j].1 - roots[j].0 * roots[i].1);
            acc = &acc * &(&d * &d);
        }
    }
    acc
}

#[test]
fn discriminant_matches_bracket_product() {
    let mut rng = sample::SampleRng::seed_from_u64(21);
    for trial in 0..15 {
        let p = 2 + trial % 4;
        let roots: Vec<(i64, i64)> = (0..p)
            .map(|_| (rng.gen_range(-4..=4), rng.gen_range(-4..=4)))
            .collect();
        let f = linear_product(&roots);
        if f.is_zero() {
            continue;
        }
        let d = discriminant(&f).unwrap().as_constant().unwrap();
        assert_eq!(d, bracket_discriminant(&roots), "{roots:?}");
    }
}

#[test]
fn resultant_is_multiplicative() {
    let mut rng = sample::rng(4);
    for _ in 0..10 {
        let f = sample::int_form(&mut rng, 2, 5);
        let g = sample::int_form(&mut rng, 3, 5);
        let h = sample::int_form(&mut rng, 2, 5);
        let lhs = resultant(&f.mul(&g), &h).unwrap();
        let rhs = &resultant(&f, &h).unwrap() * &resultant(&g, &h).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn resultant_vanishes_on_common_factor() {
    let common = BinaryForm::from_ints(&[2, -3]);
    let f = common.mul(&BinaryForm::from_ints(&[1, 1, 1]));
    let g = common.mul(&BinaryForm::from_ints(&[4, 0, -1, 7]));
    assert!(resultant(&f, &g).unwrap().is_zero());
}

fn quartic_st(f: &BinaryForm) -> (MPoly, MPoly) {
    let q = Quartic::from_form(f).unwrap();
    (q.s(), q.t())
}

#[test]
fn sl2_invariance_of_s_t_j_k_l_h() {
    let mut rng = sample::rng(99);
    for _ in 0..20 {
        let g = sample::sl2_element(&mut rng, 4);
        assert_eq!(g.det(), &rat(1));
        let q = sample::int_form(&mut rng, 4, 8);
        assert_eq!(quartic_st(&q), quartic_st(&act(&g, &q)));
        let f = sample::int_form(&mut rng, 5, 8);
        assert_eq!(quintic_invariants(&f).unwrap(), quintic_invariants(&act(&g, &f)).unwrap());
    }
}

#[test]
fn gl2_acts_through_a_power_of_the_determinant() {
    let mut rng = sample::rng(7);
    for _ in 0..5 {
        let g = GroupElement::from_ints([[rng.gen_range(1..=3), 1], [rng.gen_range(-2..=2), 1]]);
        let Ok(g) = g else { continue };
        let f = sample::int_form(&mut rng, 5, 6);
        let before = quintic_invariants(&f).unwrap().values().unwrap();
        let after = quintic_invariants(&act(&g, &f)).unwrap().values().unwrap();
        for i in 0..5 {
            let factor = g.det().pow(-(InvariantVector::WEIGHTS[i] as i32));
            assert_eq!(after[i], &before[i] * &factor);
        }
    }
}

#[test]
fn scaling_degrees() {
    let f = BinaryForm::from_ints(&[3, -1, 4, 1, -5, 9]);
    let c = ratio(-2, 3);
    let scaled = f.scale(&MPoly::constant(c.clone()));
    let a = quintic_invariants(&f).unwrap().values().unwrap();
    let b = quintic_invariants(&scaled).unwrap().values().unwrap();
    for i in 0..5 {
        assert_eq!(b[i], &a[i] * &c.pow(InvariantVector::DEGREES[i] as i32));
    }
    let q = BinaryForm::from_ints(&[1, 2, -3, 0, 7]);
    let (s, t) = quartic_st(&q);
    let (s2, t2) = quartic_st(&q.scale(&MPoly::constant(c.clone())));
    assert_eq!(s2, s.scale(&c.pow(2)));
    assert_eq!(t2, t.scale(&c.pow(3)));
}

#[test]
fn generic_term_counts() {
    let iv = quintic_invariants(&BinaryForm::generic(5, "a")).unwrap();
    let counts = [iv.j.nterms(), iv.k.nterms(), iv.l.nterms(), iv.h.nterms()];
    assert_eq!(counts, [12, 68, 228, 848]);
    for (p, d) in iv.as_array().iter().zip(InvariantVector::DEGREES) {
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(d as u32));
    }
}

#[test]
fn generic_relation_and_discriminant() {
    let iv = quintic_invariants(&BinaryForm::generic(5, "a")).unwrap();
    let expected = (&(&iv.j * &iv.j) - &iv.k.scale(&rat(128))).scale(&rat(3125));
    assert_eq!(iv.disc, expected);
    assert!(binform::invariants::verify_relation(&iv));
}

#[test]
fn quartic_discriminant_symbolic() {
    let q: [MPoly; 5] = std::array::from_fn(|i| MPoly::var(&format!("q{i}")));
    let quartic = Quartic::from_binomial(q);
    let st = quartic.invariants();
    assert_eq!(discriminant(&quartic.form()).unwrap(), st.disc());
    let s3 = st.s.pow(3);
    let t2 = st.t.pow(2);
    assert_eq!(st.disc(), (&s3 - &t2.scale(&rat(27))).scale(&rat(256)));
}

/// With the discriminant normalized as the squared bracket product (the one
/// giving `2⁸(S³ − 27T²)` for quartics and `5⁵(J² − 128K)` for quintics),
/// `Disc(Can F) = 2⁴ 3⁴ L`. The constant `−2⁴ 3⁵` is off by a factor −3,
/// which no rescaling of the cubic can produce (it would need `c⁴ = −3`).
#[test]
fn canonizant_discriminant_constant() {
    let pt = SylvesterPoint::symbolic();
    let f = pt.specialize();
    let can = quintic_covariants(&f).unwrap().canonizant();
    assert_eq!(can.order(), 3);
    let [_, _, l, _] = pt.closed_forms();
    let dc = discriminant(&can).unwrap();
    assert_eq!(dc, l.scale(&rat(16 * 81)));
    assert_ne!(dc, l.scale(&rat(-(16 * 243))));

    let mut rng = sample::rng(12);
    for _ in 0..5 {
        let g = sample::int_form(&mut rng, 5, 6);
        let can = quintic_covariants(&g).unwrap().canonizant();
        let l = quintic_invariants(&g).unwrap().l;
        assert_eq!(discriminant(&can).unwrap(), l.scale(&rat(16 * 81)));
    }
}

#[test]
fn closed_forms_on_numeric_points() {
    for (u, v, w) in [(1, 1, 1), (2, 1, 1), (1, 2, 3), (-1, 4, 2), (3, -2, 5)] {
        let pt = SylvesterPoint::new(u, v, w);
        let iv = quintic_invariants(&pt.specialize()).unwrap();
        let closed = pt.closed_forms();
        assert_eq!([iv.j, iv.k, iv.l, iv.h], closed, "({u}, {v}, {w})");
    }
}
