use std::sync::Arc;

use super::*;
use crate::algebra::Algebra;
use crate::families::tests::{a_p, c8_example, example_l, taft_3_gf4};
use crate::families::{build_family, third_type_cyclic};
use crate::field::{Elem, Field};
use crate::group::Group;
use crate::hopfcore::HopfAlgebra;
use crate::linalg::{unit_vec, Subspace};

fn prime(p: u32) -> Arc<Field> {
    Arc::new(Field::prime(p).unwrap())
}

#[test]
fn taft_radical_simples_and_projectives() {
    let t = taft_3_gf4();
    let h = build_family(&t).unwrap();
    let data = analyze(&h.alg).unwrap();
    assert_eq!(data.radical.dim(), 6);
    assert_eq!(data.radical_index, 3);
    // J is the ideal generated by x
    let x = unit_vec(9, 3);
    assert_eq!(h.alg.ideal_closure(&[x]), data.radical);
    assert_eq!(data.simples.len(), 3);
    for s in &data.simples {
        let sc = s.scalars.as_ref().unwrap();
        assert!(sc[3..].iter().all(|e| e.is_zero()), "x acts as zero");
    }
    let projs = family_projectives(&t, &h, &data).unwrap();
    assert_eq!(projs.len(), 3);
    for p in &projs {
        assert_eq!(p.module.dim, 3);
        assert!(p.composition.uniserial && p.factors_in_order && p.flag_matches);
        assert!(p.module.respects(&h.alg));
    }
    let dec = blocks_with(&h.alg, data).unwrap();
    assert_eq!(dec.blocks.len(), 1);
    assert!(blocks_match_orbits(&t, &h, &dec).unwrap());
    assert_eq!(dec.cartan, vec![vec![1; 3]; 3]);
}

#[test]
fn a2_radical_simples_and_socle() {
    let h = build_family(&a_p(2)).unwrap();
    let f = h.field();
    let data = analyze(&h.alg).unwrap();
    assert_eq!(data.radical.dim(), 2);
    let mut scalars: Vec<Vec<Elem>> = data.simples.iter().map(|s| s.scalars.clone().unwrap()).collect();
    scalars.sort();
    // basis 1, a, x, ax: S_2 with x ↦ 0 and S_1 with x ↦ 1, a ↦ 1 on both
    assert_eq!(scalars, vec![vec![Elem::ONE, Elem::ONE, Elem::ZERO, Elem::ZERO], vec![Elem::ONE; 4]]);
    let x = unit_vec(4, 2);
    let p1 = left_ideal_module(&h.alg, std::slice::from_ref(&x), "P1");
    assert_eq!(p1.dim, 2);
    let comp = composition_series(&h.alg, &data, &p1);
    assert!(comp.uniserial);
    let head = data.simples[comp.layers[0][0]].scalars.clone().unwrap();
    assert_eq!(head[2], Elem::ONE);
    let soc = data.simples[comp.socle_factors[0]].scalars.clone().unwrap();
    assert_eq!(soc[2], Elem::ZERO);
    assert_eq!(comp.socle.dim(), 1);
    let s = p1.to_algebra(f, &comp.socle.basis()[0]).unwrap();
    assert_eq!(h.format_vector(&s), "g1*x + x");
    // P_2 = A (x + 1)
    let mut x1 = x;
    x1[0] = Elem::ONE;
    let p2 = left_ideal_module(&h.alg, &[x1], "P2");
    let span: Vec<String> = p2.embedding.as_ref().unwrap().iter().map(|v| h.format_vector(v)).collect();
    let want = Subspace::span(
        f,
        4,
        &[vec![Elem::ONE, Elem::ZERO, Elem::ONE, Elem::ZERO], vec![Elem::ZERO, Elem::ONE, Elem::ZERO, Elem::ONE]],
    );
    assert_eq!(Subspace::span(f, 4, p2.embedding.as_ref().unwrap()), want, "{span:?}");
    // the generic covers have the same dimensions
    let covers = projective_covers(&h.alg, &data);
    assert!(covers.iter().all(|c| c.dim == 2));
}

#[test]
fn semisimple_group_algebra() {
    let g = Group::cyclic_product(&[4], &[0]).unwrap();
    let h = HopfAlgebra::group_algebra(&g, prime(5));
    let dec = blocks(&h.alg).unwrap();
    assert_eq!(dec.data.radical.dim(), 0);
    assert_eq!(dec.blocks.len(), 4);
    assert!(dec.blocks.iter().all(|b| b.dim == 1));
}

#[test]
fn modular_group_algebra_is_local() {
    let g = Group::cyclic_product(&[3], &[0]).unwrap();
    let h = HopfAlgebra::group_algebra(&g, prime(3));
    let data = analyze(&h.alg).unwrap();
    assert_eq!(data.radical.dim(), 2);
    assert_eq!(data.radical_index, 3);
    assert_eq!(data.simples.len(), 1);
}

#[test]
fn matrix_algebra_has_one_simple_of_full_dimension() {
    // 2 x 2 matrices over F_3 with matrix units E_ij at index 2i + j
    let f = prime(3);
    let alg = crate::algebra::StructAlgebra::from_basis_product(
        f,
        4,
        {
            let mut u = unit_vec(4, 0);
            u[3] = Elem::ONE;
            u
        },
        |a, b| {
            let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
            if j == k {
                unit_vec(4, 2 * i + l)
            } else {
                vec![Elem::ZERO; 4]
            }
        },
    )
    .unwrap();
    let dec = blocks(&alg).unwrap();
    assert_eq!(dec.data.simples.len(), 1);
    assert_eq!(dec.data.simples[0].module.dim, 2);
    assert_eq!(dec.cartan, vec![vec![1]]);
}

#[test]
fn kx_idempotents() {
    let (alg, e) = kx_decompose(2, prime(2)).unwrap();
    assert_eq!(e[0].1, vec![Elem::ONE, Elem::ONE]);
    assert_eq!(e[1].1, vec![Elem::ZERO, Elem::ONE]);
    let f3 = prime(3);
    let (alg3, e3) = kx_decompose(3, f3.clone()).unwrap();
    let ints = |xs: [i64; 3]| xs.map(|x| f3.from_int(x)).to_vec();
    assert_eq!(
        e3.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        vec![ints([1, 0, 2]), ints([0, 2, 2]), ints([0, 1, 2])]
    );
    for (algebra, idems) in [(&alg, &e), (&alg3, &e3)] {
        let fld = algebra.field();
        let mut sum = vec![Elem::ZERO; algebra.dim];
        for (c, v) in idems.iter() {
            assert_eq!(algebra.mul(v, v), *v);
            let xv = algebra.mul(&unit_vec(algebra.dim, 1), v);
            assert_eq!(xv, crate::linalg::vec_scale(fld, *c, v));
            crate::linalg::axpy(fld, &mut sum, Elem::ONE, v);
        }
        assert_eq!(sum, algebra.one());
    }
    for p in [2u32, 3, 5] {
        let (a, _) = kx_decompose(p, prime(p)).unwrap();
        let data = analyze(&a).unwrap();
        assert_eq!(data.simples.len(), p as usize);
        let mut xs: Vec<Elem> = data.simples.iter().map(|s| s.scalars.as_ref().unwrap()[1]).collect();
        xs.sort();
        assert_eq!(xs, (0..p as i64).map(|c| a.field().from_int(c)).collect::<Vec<_>>());
    }
}

#[test]
fn subhopf_projectives() {
    for (p, r) in [(2u32, 1u32), (2, 2), (3, 1)] {
        let rep = subhopf_report(p, r, prime(p)).unwrap();
        assert_eq!(rep.projectives.len(), p as usize);
        assert!(rep.idempotents_complete);
        assert_eq!(rep.blocks, 1, "(p, r) = ({p}, {r})");
        for pr in &rep.projectives {
            assert_eq!(pr.dim, p.pow(r) as usize);
            assert!(pr.flag_ok && pr.uniserial, "{pr:?}");
        }
    }
}

#[test]
fn example_l_fails_the_projective_hypotheses() {
    let t = example_l();
    let h = build_family(&t).unwrap();
    let data = analyze(&h.alg).unwrap();
    let err = family_projectives(&t, &h, &data).unwrap_err();
    assert!(err.to_string().contains("divides |G|"), "{err}");
}

#[test]
fn c8_example_splits_into_taft_and_matrix_blocks() {
    let t = c8_example();
    let h = build_family(&t).unwrap();
    let dec = blocks(&h.alg).unwrap();
    assert_eq!(dec.blocks.iter().map(|b| b.dim).collect::<Vec<_>>(), vec![16, 16]);
    let (z, kb) = kernel_blocks(&t, &h, &dec).unwrap();
    assert_eq!(z.len(), 2);
    let f = h.field();
    let mut seen: Vec<(Elem, BlockTag)> = kb.iter().map(|k| (k.w.unwrap(), k.tag.unwrap())).collect();
    seen.sort_by_key(|s| s.0);
    assert_eq!(seen, vec![(Elem::ONE, BlockTag::TaftLike), (f.neg(Elem::ONE), BlockTag::MatrixLike)]);
}

#[test]
fn third_type_quotient_is_cyclic_of_order_p() {
    let t = third_type_cyclic(prime(2), 4).unwrap();
    let q = third_type_quotient(&t).unwrap();
    assert_eq!((q.quotient_order, q.elementary_abelian, q.cyclic_by_a), (2, true, Some(true)));
}
