use std::sync::Arc;

use super::*;
use crate::families::tests::{a_p, c8_example, example_l, ints, spec, taft_3_gf4};
use crate::families::{build_family, Scalar};
use crate::field::Field;
use crate::hopfcore::verify_hopf;

fn classify_tuple(t: &Tuple) -> (HopfAlgebra, ClassificationReport) {
    let h = build_family(t).unwrap();
    let r = classify(&h).unwrap();
    (h, r)
}

fn assert_round_trip(t: &Tuple) {
    let (_, r) = classify_tuple(t);
    let norm = normalize_tuple(t).unwrap().tuple;
    let iso = iso_tuples(&r.tuple, &norm).unwrap();
    assert_eq!(iso.verdict, Verdict::Isomorphic, "{:?}: {}", t.to_spec(), iso.reason);
}

#[test]
fn a2_is_third_type() {
    let (h, r) = classify_tuple(&a_p(2));
    assert_eq!(r.detection.kind, 3);
    assert_eq!(h.format_vector(&r.skew_point), "g1");
    let t = &r.tuple;
    assert_eq!(t.variant, Variant::E);
    assert_eq!(t.c[t.group.a()], Elem::ONE);
    assert_eq!(t.alpha, vec![Elem::ZERO]);
    // the relation a x a^-1 = x + (a - 1) holds on the nose
    let s = r.summary(&h);
    assert_eq!(s.conjugation, vec![vec!["1", "0"], vec!["1", "1"]]);
    assert_eq!(s.x, "x");
}

#[test]
fn a2_by_hand_classifies_like_the_built_one() {
    let h = crate::hopfcore::tests::a2_by_hand();
    let r = classify(&h).unwrap();
    assert_eq!(r.detection.kind, 3);
    assert_eq!(iso_tuples(&r.tuple, &a_p(2)).unwrap().verdict, Verdict::Isomorphic);
}

#[test]
fn example_l_skew_point_is_a_not_b() {
    let (h, r) = classify_tuple(&example_l());
    assert_eq!(h.format_vector(&r.skew_point), "g1");
    assert_eq!(r.detection.kind, 2);
    assert_eq!(r.tuple.variant, Variant::F);
    assert!(r.tuple.chi.iter().all(|&e| e == Elem::ONE));
    assert_eq!(r.tuple.alpha, vec![Elem::ZERO, Elem::ZERO]);
    assert_eq!(iso_tuples(&r.tuple, &example_l()).unwrap().verdict, Verdict::Isomorphic);
}

#[test]
fn taft_is_first_type_with_q_omega() {
    let t = taft_3_gf4();
    let (_, r) = classify_tuple(&t);
    assert_eq!(r.detection.kind, 1);
    assert_eq!(r.detection.q, t.q());
    assert_eq!(r.detection.conjugation[0][0], t.q());
    assert!(r.tuple.c.iter().all(|e| e.is_zero()));
}

#[test]
fn group_algebra_is_cosemisimple() {
    let f = Arc::new(Field::prime(2).unwrap());
    let g = crate::group::Group::cyclic_product(&[4], &[0]).unwrap();
    let h = HopfAlgebra::group_algebra(&g, f);
    let err = classify(&h).unwrap_err();
    assert!(err.to_string().contains("cosemisimple"), "{err}");
}

#[test]
fn round_trips() {
    for t in [a_p(2), a_p(3), example_l(), taft_3_gf4(), c8_example()] {
        assert_round_trip(&t);
    }
}

fn r_c4_f5(alpha: i64) -> Tuple {
    let mut s = spec(5, 1, Variant::R, &[4], &[1]);
    s.chi = ints(&[4]);
    s.alpha = ints(&[alpha]);
    Tuple::from_spec(&s).unwrap()
}

#[test]
fn first_type_scaling_class_over_f5() {
    let r = iso_tuples(&r_c4_f5(1), &r_c4_f5(4)).unwrap();
    assert_eq!(r.verdict, Verdict::Isomorphic);
    assert_eq!(r.witness.as_ref().unwrap().beta, Field::prime(5).unwrap().from_int(2));
    let r = iso_tuples(&r_c4_f5(1), &r_c4_f5(2)).unwrap();
    assert_eq!(r.verdict, Verdict::NotIsomorphic);
    assert_eq!(r.flips_over_degree, Some(2));
}

#[test]
fn first_type_criterion_agrees_with_search() {
    // 2 is a non-square mod 5; the search sees the same split
    for (x, y, want) in [(1, 4, Verdict::Isomorphic), (1, 2, Verdict::NotIsomorphic), (0, 0, Verdict::Isomorphic)] {
        let (t, t2) = (r_c4_f5(x), r_c4_f5(y));
        let crit = iso_tuples(&t, &t2).unwrap().verdict;
        let search = iso_bruteforce(&build_family(&t).unwrap(), &build_family(&t2).unwrap()).unwrap().verdict;
        assert_eq!((crit, search), (want, want), "α₋₁ = {x} vs {y}");
    }
}

#[test]
fn a2_is_not_the_group_algebra_of_c4() {
    let f = Arc::new(Field::prime(2).unwrap());
    let kc4 = HopfAlgebra::group_algebra(&crate::group::Group::cyclic_product(&[4], &[0]).unwrap(), f);
    let a2 = build_family(&a_p(2)).unwrap();
    assert_eq!(iso_bruteforce(&a2, &kc4).unwrap().verdict, Verdict::NotIsomorphic);
    let same = iso_bruteforce(&a2, &a2).unwrap();
    assert_eq!(same.verdict, Verdict::Isomorphic);
    assert_eq!(same.witness.unwrap().group_map, vec![0, 1]);
}

fn e_c4(c_gen: i64, alpha: i64) -> Tuple {
    let mut s = spec(2, 1, Variant::E, &[4], &[1]);
    s.c = ints(&[c_gen]);
    s.alpha = ints(&[alpha]);
    Tuple::from_spec(&s).unwrap()
}

#[test]
fn third_type_on_c4_routes_agree() {
    let t = e_c4(1, 0);
    // c composed with inversion
    let mut t_inv = t.clone();
    t_inv.c = (0..4).map(|g| t.c[t.group.inv(g)]).collect();
    let shifted = e_c4(1, 1);
    for (u, v) in [(&t, &t), (&t, &t_inv), (&t, &shifted)] {
        let crit = iso_tuples(u, v).unwrap();
        let search = iso_bruteforce(&build_family(u).unwrap(), &build_family(v).unwrap()).unwrap();
        assert_eq!(crit.verdict, search.verdict, "{} / {}", crit.reason, search.reason);
    }
    let id = iso_tuples(&t, &t).unwrap().witness.unwrap();
    assert_eq!((id.group_map, id.beta, id.gamma), (vec![0, 1, 2, 3], Elem::ONE, Elem::ZERO));
    // β - β² = 1 needs GF(4)
    let r = iso_tuples(&t, &shifted).unwrap();
    assert_eq!((r.verdict, r.flips_over_degree), (Verdict::NotIsomorphic, Some(2)));
}

#[test]
fn nilpotent_second_type_allows_rescaling_c() {
    // c and 2c on C_3 x C_3 over F_3, a = second generator
    let mk = |c: i64| {
        let mut s = spec(3, 1, Variant::F, &[3, 3], &[0, 1]);
        s.chi = ints(&[1, 1]);
        s.c = vec![Scalar::Int(c), Scalar::Int(0)];
        s.alpha = ints(&[0, 0]);
        Tuple::from_spec(&s).unwrap()
    };
    let (t, t2) = (mk(1), mk(2));
    assert!(verify_hopf(&build_family(&t).unwrap()).all_passed());
    let crit = iso_tuples(&t, &t2).unwrap();
    assert_eq!(crit.verdict, Verdict::Isomorphic, "{}", crit.reason);
    let search = iso_bruteforce(&build_family(&t).unwrap(), &build_family(&t2).unwrap()).unwrap();
    assert_eq!(search.verdict, Verdict::Isomorphic);
}

#[test]
fn non_nilpotent_second_type_uses_the_search() {
    let mut s = spec(3, 1, Variant::F, &[2], &[0]);
    s.alpha = ints(&[0, 1]);
    let t = Tuple::from_spec(&s).unwrap();
    let r = iso_tuples(&t, &t).unwrap();
    assert_eq!((r.verdict, r.method), (Verdict::Isomorphic, IsoMethod::Criterion));
    // with a = 1 the α₋₁ term vanishes, but the data differ, so only the search decides
    let mut shifted = t.clone();
    shifted.alpha = vec![Elem::ONE, Elem::ONE];
    let r = iso_tuples(&t, &shifted).unwrap();
    assert_eq!((r.verdict, r.method), (Verdict::Isomorphic, IsoMethod::Bruteforce));
    let mut nil = t.clone();
    nil.alpha = vec![Elem::ZERO, Elem::ZERO];
    assert_eq!(iso_tuples(&t, &nil).unwrap().verdict, Verdict::NotIsomorphic);
}
