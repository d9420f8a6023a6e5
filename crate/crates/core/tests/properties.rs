//! Property tests for the algebra laws: product axioms, half-shuffle
//! splittings, Hopf axioms, Hoffman morphism properties, and the
//! quasisymmetric evaluation homomorphism.

use proptest::prelude::*;

use qsig_core::dual::eulerian_image;
use qsig_core::hopf::{coproduct_poly, TensorPoly};
use qsig_core::*;

/// Random word over `1..=d` of weight at most `max_weight`.
fn arb_word(d: u32, max_weight: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::collection::vec(1..=d, 1..=3usize), 0..=max_weight as usize)
        .prop_map(move |raw| {
            let mut brackets = Vec::new();
            let mut weight = 0;
            for letters in raw {
                weight += letters.len() as u32;
                if weight > max_weight {
                    break;
                }
                brackets.push(Bracket::new(letters).expect("nonempty"));
            }
            Word::from_brackets(brackets)
        })
}

fn arb_nonempty_word(d: u32, max_weight: u32) -> impl Strategy<Value = Word> {
    arb_word(d, max_weight).prop_filter("nonempty", |w| !w.is_empty())
}

proptest! {
    #[test]
    fn print_parse_round_trip(w in arb_word(4, 8)) {
        let text = w.to_string();
        prop_assert_eq!(parse_word(&text, 4).unwrap(), w);
    }

    #[test]
    fn quasi_shuffle_is_commutative(u in arb_word(3, 5), v in arb_word(3, 5)) {
        prop_assert_eq!(quasi_shuffle(&u, &v), quasi_shuffle(&v, &u));
    }

    #[test]
    fn shuffle_is_commutative(u in arb_word(3, 5), v in arb_word(3, 5)) {
        prop_assert_eq!(shuffle(&u, &v), shuffle(&v, &u));
    }

    #[test]
    fn quasi_shuffle_is_associative(
        u in arb_word(3, 3),
        v in arb_word(3, 3),
        t in arb_word(3, 3),
    ) {
        let left = quasi_shuffle_poly(&quasi_shuffle(&u, &v), &Polynomial::monomial(t.clone()));
        let right = quasi_shuffle_poly(&Polynomial::monomial(u.clone()), &quasi_shuffle(&v, &t));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn shuffle_is_associative(
        u in arb_word(3, 3),
        v in arb_word(3, 3),
        t in arb_word(3, 3),
    ) {
        let left = shuffle_poly(&shuffle(&u, &v), &Polynomial::monomial(t.clone()));
        let right = shuffle_poly(&Polynomial::monomial(u.clone()), &shuffle(&v, &t));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn half_shuffles_sum_to_the_products(
        u in arb_nonempty_word(3, 5),
        v in arb_nonempty_word(3, 5),
    ) {
        let mut qsh_sum = half_shuffle_qsh(QshHalf::Left, &u, &v).unwrap();
        qsh_sum.add_assign(&half_shuffle_qsh(QshHalf::Right, &u, &v).unwrap());
        qsh_sum.add_assign(&half_shuffle_qsh(QshHalf::Diamond, &u, &v).unwrap());
        prop_assert_eq!(qsh_sum, quasi_shuffle(&u, &v));

        let sh_sum = &half_shuffle_sh(ShHalf::Left, &u, &v).unwrap()
            + &half_shuffle_sh(ShHalf::Right, &u, &v).unwrap();
        prop_assert_eq!(sh_sum, shuffle(&u, &v));
    }

    #[test]
    fn right_half_shuffle_flips_to_left(
        u in arb_nonempty_word(3, 5),
        v in arb_nonempty_word(3, 5),
    ) {
        prop_assert_eq!(
            half_shuffle_qsh(QshHalf::Right, &u, &v).unwrap(),
            half_shuffle_qsh(QshHalf::Left, &v, &u).unwrap()
        );
        prop_assert_eq!(
            half_shuffle_sh(ShHalf::Right, &u, &v).unwrap(),
            half_shuffle_sh(ShHalf::Left, &v, &u).unwrap()
        );
    }

    #[test]
    fn antipode_law(w in arb_word(3, 5)) {
        // m_⋆ (α ⊗ id) δ(w) = ε(w) e = m_⋆ (id ⊗ α) δ(w)
        let mut left = Polynomial::zero();
        let mut right = Polynomial::zero();
        for ((a, b), c) in coproduct(&w).iter() {
            left.add_scaled(
                &quasi_shuffle_poly(&antipode(a), &Polynomial::monomial(b.clone())),
                c,
            );
            right.add_scaled(
                &quasi_shuffle_poly(&Polynomial::monomial(a.clone()), &antipode(b)),
                c,
            );
        }
        let want = if w.is_empty() {
            Polynomial::monomial(Word::empty())
        } else {
            Polynomial::zero()
        };
        prop_assert_eq!(&left, &want);
        prop_assert_eq!(&right, &want);
    }

    #[test]
    fn coproduct_is_coassociative(w in arb_word(3, 5)) {
        // compare (δ ⊗ id)δ and (id ⊗ δ)δ as triple splittings
        use std::collections::BTreeMap;
        let mut left: BTreeMap<(Word, Word, Word), Rat> = BTreeMap::new();
        let mut right: BTreeMap<(Word, Word, Word), Rat> = BTreeMap::new();
        for ((a, b), c) in coproduct(&w).iter() {
            for ((a1, a2), c2) in coproduct(a).iter() {
                *left.entry((a1.clone(), a2.clone(), b.clone())).or_default() += c * c2;
            }
            for ((b1, b2), c2) in coproduct(b).iter() {
                *right.entry((a.clone(), b1.clone(), b2.clone())).or_default() += c * c2;
            }
        }
        left.retain(|_, c| !num::Zero::is_zero(c));
        right.retain(|_, c| !num::Zero::is_zero(c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hoffman_is_a_product_morphism(u in arb_word(3, 4), v in arb_word(3, 4)) {
        let lhs = hoffman_exp_poly(&shuffle(&u, &v));
        let rhs = quasi_shuffle_poly(&hoffman_exp(&u), &hoffman_exp(&v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hoffman_is_a_coproduct_morphism(w in arb_word(3, 5)) {
        let mut lhs = TensorPoly::zero();
        for ((a, b), c) in coproduct(&w).iter() {
            lhs.add_tensor(&hoffman_exp(a), &hoffman_exp(b), c);
        }
        let rhs = coproduct_poly(&hoffman_exp(&w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hoffman_exp_and_log_are_inverse(w in arb_word(3, 6)) {
        let monomial = Polynomial::monomial(w.clone());
        prop_assert_eq!(&hoffman_log_poly(&hoffman_exp(&w)), &monomial);
        prop_assert_eq!(&hoffman_exp_poly(&hoffman_log(&w)), &monomial);
    }

    #[test]
    fn hoffman_splitting(w in arb_nonempty_word(3, 5)) {
        let (init, last) = w.split_last().unwrap();
        let mut split = hoffman_exp(&init).push_bracket(last);
        split.add_assign(&hoffman_remainder(&w).unwrap());
        prop_assert_eq!(split, hoffman_exp(&w));
    }

    #[test]
    fn hoffman_lie_compatibility(
        u in arb_word(3, 3),
        a in prop::collection::vec(1..=3u32, 1..=2),
        b in prop::collection::vec(1..=3u32, 1..=2),
    ) {
        let a = Bracket::new(a).unwrap();
        let b = Bracket::new(b).unwrap();
        let mut commutator = Polynomial::monomial(u.push(&a).push(&b));
        commutator.add_term(u.push(&b).push(&a), -rat_int(1));
        let lhs = hoffman_exp_poly(&commutator);
        let mut rhs = hoffman_exp(&u.push(&a)).push_bracket(&b);
        rhs.add_scaled(&hoffman_exp(&u.push(&b)).push_bracket(&a), &-rat_int(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn area_maps_are_bilinear_and_antisymmetric(
        u in arb_nonempty_word(2, 3),
        v in arb_nonempty_word(2, 3),
        k in -3i64..=3,
    ) {
        let a_uv = area(&u, &v).unwrap();
        let a_vu = area(&v, &u).unwrap();
        prop_assert_eq!(&a_uv, &-&a_vu);
        let d_uv = darea(&u, &v).unwrap();
        let d_vu = darea(&v, &u).unwrap();
        prop_assert_eq!(&d_uv, &-&d_vu);
        // bilinearity in the first slot
        let scaled = Polynomial::term(u.clone(), rat_int(k));
        let lhs = area_poly(&scaled, &Polynomial::monomial(v.clone())).unwrap();
        prop_assert_eq!(lhs, a_uv.scaled(&rat_int(k)));
    }

    #[test]
    fn monomial_evaluation_is_multiplicative(
        u in arb_word(2, 4),
        v in arb_word(2, 4),
        raw in prop::collection::vec((-4i64..=4, -4i64..=4), 0..=6),
    ) {
        let ys: Vec<Vec<Scalar>> = raw
            .iter()
            .map(|&(a, b)| vec![Scalar::Exact(rat_int(a)), Scalar::Exact(rat_int(b))])
            .collect();
        prop_assert!(product_as_quasi_shuffle_check(&u, &v, &ys));
    }
}

proptest! {
    #[test]
    fn monomial_eval_at_increments_is_the_signature(
        raw in prop::collection::vec((-5i64..=5, -5i64..=5), 1..=6),
        w in arb_word(2, 4),
    ) {
        let rows: Vec<Vec<Scalar>> = std::iter::once(vec![
            Scalar::Exact(rat_int(0)),
            Scalar::Exact(rat_int(0)),
        ])
        .chain(raw.iter().map(|&(a, b)| {
            vec![Scalar::Exact(rat_int(a)), Scalar::Exact(rat_int(b))]
        }))
        .collect();
        let x = TimeSeries::from_rows(rows).unwrap();
        let increments: Vec<Vec<Scalar>> = (1..=x.len()).map(|j| x.increment(j)).collect();
        let ds = iterated_sums_signature(&x, 0, x.len(), 4).unwrap();
        prop_assert_eq!(monomial_eval(&w, &increments), ds.coeff(&w).unwrap());
    }
}

#[test]
fn area_pairs_with_the_antisymmetrized_signature_coefficient() {
    // <area([i],[j]), S(X)> = <[i][j] - [j][i], S(X)> on a lifted-path signature
    let rows = vec![
        vec![Scalar::Exact(rat_int(0)), Scalar::Exact(rat_int(0))],
        vec![Scalar::Exact(rat_int(1)), Scalar::Exact(rat_int(2))],
        vec![Scalar::Exact(rat_int(3)), Scalar::Exact(rat_int(1))],
    ];
    let x = TimeSeries::from_rows(rows).unwrap();
    let s = iterated_integrals_signature_pl(&x, 2).unwrap();
    let i = parse_word("[1]", 2).unwrap();
    let j = parse_word("[2]", 2).unwrap();
    let mut antisym = Polynomial::monomial(i.concat(&j));
    antisym.add_term(j.concat(&i), -rat_int(1));
    assert_eq!(
        s.pair(&area(&i, &j).unwrap()).unwrap(),
        s.pair(&antisym).unwrap()
    );
}

#[test]
fn tortkara_morphism_on_area_space_elements() {
    // the identity holds on the iterated area spaces, not on arbitrary
    // words: element pairs are drawn from the generated bases
    for d in 1..=3u32 {
        let mut elements = area_space_basis(AreaKind::Continuous, 1, d, 3).unwrap();
        elements.extend(area_space_basis(AreaKind::Continuous, 2, d, 3).unwrap());
        for phi in &elements {
            for psi in &elements {
                let lhs = hoffman_exp_poly(&area_poly(phi, psi).unwrap());
                let rhs =
                    darea_poly(&hoffman_exp_poly(phi), &hoffman_exp_poly(psi)).unwrap();
                assert_eq!(lhs, rhs, "d={d} phi={phi} psi={psi}");
            }
        }
    }
}

#[test]
fn hilbert_dims_agree_with_enumeration_and_series() {
    for d in 1..=3u32 {
        let coeffs = hilbert_series_coeffs(d, 7);
        for n in 0..=7usize {
            let dim = hilbert_dim(d, n);
            assert_eq!(dim, coeffs[n], "series mismatch at d={d} n={n}");
            assert_eq!(
                num::BigUint::from(enumerate_words(d, n).len()),
                dim,
                "enumeration mismatch at d={d} n={n}"
            );
        }
    }
}

#[test]
fn exp_and_log_conv_are_mutually_inverse() {
    // a handful of exact infinitesimal functionals over d = 2
    let mut f = DualFunctional::zero(2, 4, ScalarKind::Exact);
    f.set_coeff(parse_word("[1]", 2).unwrap(), Scalar::Exact(rat(1, 3)))
        .unwrap();
    f.set_coeff(parse_word("[2][1]", 2).unwrap(), Scalar::Exact(rat_int(-2)))
        .unwrap();
    f.set_coeff(parse_word("[1,2]", 2).unwrap(), Scalar::Exact(rat(5, 2)))
        .unwrap();
    f.set_coeff(parse_word("[2][2][1]", 2).unwrap(), Scalar::Exact(rat_int(1)))
        .unwrap();
    let c = exp_conv(&f).unwrap();
    assert_eq!(log_conv(&c).unwrap(), f);
    assert_eq!(exp_conv(&log_conv(&c).unwrap()).unwrap(), c);
}

#[test]
fn eulerian_projection_agrees_with_log_on_characters() {
    // two independent routes to <u, log DS>
    let rows = vec![
        vec![Scalar::Exact(rat_int(0)), Scalar::Exact(rat_int(1))],
        vec![Scalar::Exact(rat_int(2)), Scalar::Exact(rat_int(-1))],
        vec![Scalar::Exact(rat_int(1)), Scalar::Exact(rat_int(3))],
        vec![Scalar::Exact(rat_int(-2)), Scalar::Exact(rat_int(2))],
    ];
    let x = TimeSeries::from_rows(rows).unwrap();
    let ds = iterated_sums_signature(&x, 0, x.len(), 4).unwrap();
    let log = log_conv(ds.functional()).unwrap();
    for u in words_up_to_weight(2, 4) {
        assert_eq!(
            eulerian_projection(&u, ds.functional()).unwrap(),
            log.coeff(&u).unwrap(),
            "mismatch at {u}"
        );
    }
}

#[test]
fn eulerian_image_of_single_letters_is_identity() {
    let u = parse_word("[1]", 1).unwrap();
    assert_eq!(eulerian_image(&u), Polynomial::monomial(u.clone()));
}

#[test]
fn characters_pass_and_random_functionals_fail_the_group_like_test() {
    let rows = vec![
        vec![Scalar::Exact(rat_int(0))],
        vec![Scalar::Exact(rat_int(2))],
        vec![Scalar::Exact(rat_int(-1))],
        vec![Scalar::Exact(rat_int(4))],
    ];
    let x = TimeSeries::from_rows(rows).unwrap();
    let ds = iterated_sums_signature(&x, 0, x.len(), 4).unwrap();
    assert_eq!(ds.functional().character_violation(0.0).unwrap(), None);

    // generic functional: right unit but arbitrary higher coefficients
    let mut c = DualFunctional::zero(1, 4, ScalarKind::Exact);
    c.set_coeff(Word::empty(), Scalar::Exact(rat_int(1))).unwrap();
    c.set_coeff(parse_word("[1]", 1).unwrap(), Scalar::Exact(rat_int(1)))
        .unwrap();
    c.set_coeff(parse_word("[1][1]", 1).unwrap(), Scalar::Exact(rat_int(9)))
        .unwrap();
    assert!(c.character_violation(0.0).unwrap().is_some());
}
