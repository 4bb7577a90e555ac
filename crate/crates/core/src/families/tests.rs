use std::sync::Arc;

use super::*;
use crate::algebra::{sparse_to_dense, Algebra};
use crate::field::Field;
use crate::hopfcore::{coradical_filtration, degree_of, group_likes, nilpotent_ideal_check, verify_hopf, HopfAlgebra};
use crate::linalg::{unit_vec, vec_sub, Vector};
use crate::qcomb::{coef_closed, CoefQuery};

pub(crate) fn spec(p: u32, d: u32, variant: Variant, orders: &[u32], a: &[i64]) -> TupleSpec {
    TupleSpec {
        p,
        field_degree: d,
        variant,
        group: GroupSpec::Cyclic { orders: orders.to_vec(), a: a.to_vec() },
        chi: Vec::new(),
        c: Vec::new(),
        alpha: Vec::new(),
    }
}

pub(crate) fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::Int(x)).collect()
}

pub(crate) fn example_l() -> Tuple {
    let mut s = spec(2, 1, Variant::F, &[2, 2], &[1, 0]);
    s.c = ints(&[0, 1]);
    s.alpha = ints(&[0, 0]);
    Tuple::from_spec(&s).unwrap()
}

pub(crate) fn a_p(p: u32) -> Tuple {
    third_type_cyclic(Arc::new(Field::prime(p).unwrap()), p).unwrap()
}

pub(crate) fn taft_3_gf4() -> Tuple {
    let f = Arc::new(Field::new(2, 2).unwrap());
    let w = f.primitive_root_of_unity(3).unwrap();
    taft_tuple(f, w).unwrap()
}

/// `(C_8, χ(a) = i, α₋₁ = 1)` over GF(9).
pub(crate) fn c8_example() -> Tuple {
    let f = Arc::new(Field::new(3, 2).unwrap());
    let i = f.primitive_root_of_unity(4).unwrap();
    let mut s = spec(3, 2, Variant::R, &[8], &[1]);
    s.chi = vec![Scalar::of(&f, i)];
    s.alpha = ints(&[1]);
    Tuple::from_spec_in(&s, f).unwrap()
}

fn basis(h: &HopfAlgebra, label: &str) -> Vector {
    let i = (0..h.dim()).find(|&i| h.label(i) == label).unwrap_or_else(|| panic!("no basis element {label}"));
    unit_vec(h.dim(), i)
}

#[test]
fn a2_from_tuple_matches_hand_table() {
    let h = build_family(&a_p(2)).unwrap();
    let by_hand = crate::hopfcore::tests::a2_by_hand();
    assert!(h.same_structure(&by_hand));
    assert_eq!(h.labels.as_ref().unwrap(), &["1", "g1", "x", "g1*x"]);
}

#[test]
fn example_l_relations() {
    let t = example_l();
    assert!(validate_tuple(&t).is_empty());
    let h = build_family(&t).unwrap();
    assert_eq!(h.dim(), 8);
    assert_eq!(h.labels.as_ref().unwrap(), &["1", "g1", "g2", "g1*g2", "x", "g1*x", "g2*x", "g1*g2*x"]);
    let f = h.field();
    let (a, b, x) = (basis(&h, "g1"), basis(&h, "g2"), basis(&h, "x"));
    // b x b = x + a - 1 and a x a = x
    let bxb = h.mul(&h.mul(&b, &x), &b);
    let expected = vec_sub(f, &crate::linalg::vec_add(f, &x, &a), &h.one());
    assert_eq!(bxb, expected);
    assert_eq!(h.mul(&h.mul(&a, &x), &a), x);
    assert!(h.mul(&x, &x).iter().all(|e| e.is_zero()));
    assert!(verify_hopf(&h).all_passed());
}

#[test]
fn taft_dimension_and_hopf_data() {
    let t = taft_3_gf4();
    let h = build_family(&t).unwrap();
    assert_eq!(h.dim(), 9);
    assert!(verify_hopf(&h).all_passed());
    let gl = group_likes(&h).unwrap();
    assert_eq!(gl.elements.len(), 3);
    let filt = coradical_filtration(&h, &gl);
    assert_eq!(filt.dims(), vec![3, 6, 9]);
    assert_eq!(filt.rank, Some(1));
    let x = basis(&h, "x");
    let deg = degree_of(&h, &x, &gl.elements).unwrap();
    assert_eq!(deg.n, 3);
    assert!(deg.coeffs.iter().all(|c| c.iter().all(|e| e.is_zero())));
    let nil = nilpotent_ideal_check(&h.alg, &[x]);
    assert_eq!(nil.ideal.dim(), 6);
    assert_eq!(nil.index, Some(3));
}

#[test]
fn c8_example_is_valid_and_hopf() {
    let t = c8_example();
    assert!(validate_tuple(&t).is_empty(), "{:?}", validate_tuple(&t));
    assert_eq!(t.n(), 4);
    let h = build_family(&t).unwrap();
    assert_eq!(h.dim(), 32);
    assert!(verify_hopf(&h).all_passed());
    assert!(!t.is_nilpotent_type());
}

#[test]
fn validation_names_clauses() {
    let mut s = spec(2, 1, Variant::F, &[4], &[1]);
    s.alpha = ints(&[0, 1]);
    let bad = validate_tuple(&Tuple::from_spec(&s).unwrap());
    assert!(bad.iter().any(|v| v.to_string() == "second(2): a^p ≠ a"), "{bad:?}");

    // a of order 4 = p^2 over GF(4), c(g) = t outside F_2
    let f = Field::new(2, 2).unwrap();
    let mut s = spec(2, 2, Variant::E, &[4, 2], &[1, 0]);
    s.c = vec![Scalar::Int(1), Scalar::of(&f, f.t())];
    let bad = validate_tuple(&Tuple::from_spec(&s).unwrap());
    assert!(bad.iter().any(|v| v.to_string().starts_with("H_E: c(g)∈F_p required")), "{bad:?}");

    let mut s = spec(2, 1, Variant::E, &[3], &[1]);
    s.c = ints(&[1]);
    let bad = validate_tuple(&Tuple::from_spec(&s).unwrap());
    // an additive c with c(a) = 1 forces p | |a|, so the cocycle check fires first
    assert!(bad.iter().any(|v| v.clause == "cocycle"), "{bad:?}");

    let mut s = spec(5, 1, Variant::R, &[2], &[1]);
    s.chi = ints(&[4]);
    s.alpha = ints(&[1]);
    let bad = validate_tuple(&Tuple::from_spec(&s).unwrap());
    assert!(bad.iter().any(|v| v.message.contains("a^n = 1")), "{bad:?}");
    assert!(build_family(&Tuple::from_spec(&s).unwrap()).is_err());
}

#[test]
fn normalization_examples() {
    let mut s = spec(3, 1, Variant::F, &[3], &[0]);
    s.alpha = ints(&[0, 2]);
    let t = Tuple::from_spec(&s).unwrap();
    match normalize_tuple(&t) {
        Err(crate::Error::ExtendField { min_degree, .. }) => assert_eq!(min_degree, 2),
        other => panic!("expected an extension signal, got {other:?}"),
    }
    let t9 = Tuple::from_spec_in(&s, Arc::new(Field::new(3, 2).unwrap())).unwrap();
    let n = normalize_tuple(&t9).unwrap();
    assert_eq!(n.tuple.alpha[1], Elem::ONE);
    assert_eq!(n.steps[0].kind, "rescale");

    let mut s = spec(3, 1, Variant::F, &[3], &[0]);
    s.alpha = ints(&[0, 1]);
    let t = Tuple::from_spec(&s).unwrap();
    assert_eq!(normalize_tuple(&t).unwrap().tuple, t);

    let mut s = spec(2, 1, Variant::E, &[2], &[1]);
    s.c = ints(&[1]);
    s.alpha = ints(&[1]);
    match normalize_tuple(&Tuple::from_spec(&s).unwrap()) {
        Err(crate::Error::ExtendField { min_degree, .. }) => assert_eq!(min_degree, 2),
        other => panic!("expected an extension signal, got {other:?}"),
    }
    let f4 = Arc::new(Field::new(2, 2).unwrap());
    let n = normalize_tuple(&Tuple::from_spec_in(&s, f4.clone()).unwrap()).unwrap();
    assert_eq!(n.tuple.alpha, vec![Elem::ZERO]);
    let beta = f4.parse(&n.steps[0].value).unwrap();
    assert_eq!(f4.mult_order(beta), Some(3));
}

#[test]
fn unnormalized_f_shift_gives_isomorphic_nilpotent_tuple() {
    // p = 3, C_9 with a = g^3 (a^p = 1), α₀ = 0, α₋₁ = 2
    let mut s = spec(3, 1, Variant::F, &[9], &[3]);
    s.alpha = ints(&[2, 0]);
    let t = Tuple::from_spec(&s).unwrap();
    let n = normalize_tuple(&t).unwrap();
    assert_eq!(n.tuple.alpha, vec![Elem::ZERO, Elem::ZERO]);
    assert!(validate_tuple(&n.tuple).is_empty());
    assert!(verify_hopf(&build_family(&n.tuple).unwrap()).all_passed());
}

/// `Δ(x)^i` computed by repeated tensor multiplication.
fn iterated_delta(h: &HopfAlgebra, x: &[Elem], i: usize) -> Vec<(u64, Elem)> {
    let dx = h.delta(x);
    let mut acc = h.delta(&h.one());
    for _ in 0..i {
        acc = h.tensor_mul(&acc, &dx);
    }
    acc
}

#[test]
fn closed_form_coproducts_match_iterated_products() {
    for t in [a_p(3), a_p(5), example_l(), taft_3_gf4(), c8_example()] {
        let h = build_unchecked(&t).unwrap();
        let x = basis(&h, "x");
        let mut xi = h.one();
        for i in 0..t.n() {
            assert_eq!(h.delta(&xi), iterated_delta(&h, &x, i), "Δ(x^{i}) for {:?}", t.variant);
            xi = h.mul(&xi, &x);
        }
    }
}

#[test]
fn third_type_antipode_matches_c_coefficients() {
    for p in [2u32, 3, 5] {
        let t = a_p(p);
        let h = build_family(&t).unwrap();
        let f = h.field();
        let g = &t.group;
        let x = basis(&h, "x");
        for k in 0..t.n() {
            let sx = h.s(&h.alg.pow(&x, k as u64));
            // (-1)^k Σ C(k,i,j) x^i a^-j
            let mut expected = crate::linalg::zero_vec(h.dim());
            for i in 0..=k {
                for j in 0..=k {
                    let mut c = coef_closed(f, &CoefQuery::C { k, i, j }).unwrap();
                    if k == 0 && i == 0 && j == 0 {
                        c = Elem::ONE;
                    }
                    if c.is_zero() {
                        continue;
                    }
                    let xi = h.alg.pow(&x, i as u64);
                    let aj = unit_vec(h.dim(), g.pow(g.a(), -(j as i64)));
                    let term = h.mul(&xi, &aj);
                    let sign = if k % 2 == 0 { c } else { f.neg(c) };
                    crate::linalg::axpy(f, &mut expected, sign, &term);
                }
            }
            assert_eq!(sx, expected, "p = {p}, k = {k}");
        }
    }
}

#[test]
fn a_p_is_hopf_for_small_primes() {
    for p in [2u32, 3, 5, 7] {
        let h = build_family(&a_p(p)).unwrap();
        assert!(verify_hopf(&h).all_passed(), "p = {p}");
    }
}

#[test]
fn smash_oracle_agrees_with_normal_form() {
    let mut tuples = vec![a_p(2), a_p(3), example_l(), taft_3_gf4(), c8_example()];
    let mut s = spec(3, 1, Variant::F, &[3, 2], &[1, 0]);
    s.chi = ints(&[1, 2]);
    s.c = ints(&[0, 0]);
    s.alpha = ints(&[0, 0]);
    tuples.push(Tuple::from_spec(&s).unwrap());
    for t in tuples {
        let h = build_family(&t).unwrap();
        let o = build_smash_oracle(&t).unwrap();
        assert!(h.same_structure(&o), "{}", t.key());
    }
}

#[test]
fn smash_ideal_is_the_projection_kernel() {
    for t in [a_p(2), example_l(), taft_3_gf4()] {
        assert!(smash::smash_ideal_matches(&t).unwrap(), "{}", t.key());
    }
}

#[test]
fn smash_with_cyclic_group_generated_by_a_is_a_itself() {
    let t = a_p(3);
    let raw = smash::raw_quotient(&t).unwrap();
    // basis x^i * g with g = a^l is x^i a^l: compare with A's own product table
    let m = 3;
    let h = build_family(&t).unwrap();
    let f = h.field();
    for u in 0..raw.dim() {
        for w in 0..raw.dim() {
            let to_family = |b: usize| {
                // x^i a^l in the family basis
                let (i, l) = (b / m, b % m);
                h.mul(&h.alg.pow(&basis(&h, "x"), i as u64), &unit_vec(h.dim(), l))
            };
            let prod = sparse_to_dense(raw.dim(), &raw.alg.mult[u * raw.dim() + w]);
            let mut lhs = crate::linalg::zero_vec(h.dim());
            for (k, &c) in prod.iter().enumerate() {
                crate::linalg::axpy(f, &mut lhs, c, &to_family(k));
            }
            assert_eq!(lhs, h.mul(&to_family(u), &to_family(w)));
        }
    }
}

#[test]
fn tuple_spec_json_round_trip() {
    let t = c8_example();
    let json = serde_json::to_string(&t.to_spec()).unwrap();
    let back = Tuple::from_spec(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back, t);
}
