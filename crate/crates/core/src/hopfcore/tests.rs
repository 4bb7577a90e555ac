use super::*;
use crate::group::Group;
use crate::linalg::Subspace;

/// The four-dimensional example over F_2 with basis `1, a, x, ax`,
/// `a^2 = 1`, `x^2 = x`, `axa = x + a + 1`, entered by hand.
pub(crate) fn a2_by_hand() -> HopfAlgebra {
    let f = Arc::new(Field::prime(2).unwrap());
    let n = 4;
    let v = |idx: &[usize]| {
        let mut out = zero_vec(n);
        for &i in idx {
            out[i] = Elem::ONE;
        }
        out
    };
    // rows: left factor 1, a, x, ax; columns: right factor
    let table: [[&[usize]; 4]; 4] = [
        [&[0], &[1], &[2], &[3]],
        [&[1], &[0], &[3], &[2]],
        [&[2], &[3, 1, 0], &[2], &[2]],
        [&[3], &[2, 0, 1], &[3], &[3]],
    ];
    let alg = StructAlgebra::from_basis_product(f, n, v(&[0]), |i, j| v(table[i][j])).unwrap();
    let t = |j: usize, k: usize| (j * n + k) as u64;
    let comult = vec![
        vec![(t(0, 0), Elem::ONE)],
        vec![(t(1, 1), Elem::ONE)],
        vec![(t(2, 1), Elem::ONE), (t(0, 2), Elem::ONE)],
        vec![(t(3, 0), Elem::ONE), (t(1, 3), Elem::ONE)],
    ];
    let antipode = vec![
        vec![(0, Elem::ONE)],
        vec![(1, Elem::ONE)],
        vec![(0, Elem::ONE), (1, Elem::ONE), (3, Elem::ONE)],
        vec![(2, Elem::ONE)],
    ];
    let labels = ["1", "a", "x", "ax"].iter().map(|s| s.to_string()).collect();
    HopfAlgebra::new(alg, comult, vec![Elem::ONE, Elem::ONE, Elem::ZERO, Elem::ZERO], antipode, Some(labels)).unwrap()
}

fn vec_of(h: &HopfAlgebra, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| h.field().from_int(x)).collect()
}

#[test]
fn a2_is_a_hopf_algebra() {
    let h = a2_by_hand();
    let r = verify_hopf(&h);
    assert!(r.all_passed(), "{r:?}");
    assert_eq!(r.checks.len(), AXIOMS.len());
}

#[test]
fn mutated_antipode_fails_at_x() {
    let mut h = a2_by_hand();
    h.antipode[2] = vec![(2, Elem::ONE)];
    let r = verify_hopf(&h);
    let a = r.get("antipode").unwrap();
    assert!(!a.passed);
    assert_eq!(a.witness.as_deref(), Some("x"));
    assert!(r.get("bialgebra").unwrap().passed);
}

#[test]
fn a2_group_likes_and_skew_primitives() {
    let h = a2_by_hand();
    let gl = group_likes(&h).unwrap();
    assert_eq!(gl.elements, vec![vec_of(&h, &[1, 0, 0, 0]), vec_of(&h, &[0, 1, 0, 0])]);
    assert!(gl.certified);
    let p = skew_primitives(&h, &gl.elements[1], &h.one()).unwrap();
    let f = h.field();
    assert_eq!(p, Subspace::span(f, 4, &[vec_of(&h, &[0, 0, 1, 0]), vec_of(&h, &[1, 1, 0, 0])]));
    assert_eq!(p.intersect(f, &gl.span(&h)), Subspace::span(f, 4, &[vec_of(&h, &[1, 1, 0, 0])]));
    assert!(skew_primitives(&h, &vec_of(&h, &[0, 0, 1, 0]), &h.one()).is_err());
}

#[test]
fn a2_filtration_and_degree() {
    let h = a2_by_hand();
    let gl = group_likes(&h).unwrap();
    let filt = coradical_filtration(&h, &gl);
    assert_eq!(filt.dims(), vec![2, 4]);
    assert!(filt.pointed);
    assert_eq!(filt.rank, Some(1));
    assert!(filt.free_verified);
    assert!(filtration_is_compatible(&h, &filt));
    let x = vec_of(&h, &[0, 0, 1, 0]);
    let d = degree_of(&h, &x, &gl.elements).unwrap();
    assert_eq!(d.n, 2);
    assert_eq!(d.coeffs, vec![zero_vec(4), h.one()]);
    assert!(degree_of(&h, &h.one(), &gl.elements).is_err());
}

#[test]
fn a2_nilpotency() {
    let h = a2_by_hand();
    let r = nilpotent_ideal_check(&h.alg, &[vec_of(&h, &[0, 0, 1, 0])]);
    assert_eq!(r.index, None);
    let z = nilpotent_ideal_check(&h.alg, &[zero_vec(4)]);
    assert_eq!((z.ideal.dim(), z.index), (0, Some(1)));
}

#[test]
fn group_algebra_is_cosemisimple() {
    let g = Group::cyclic_product(&[2, 2], &[1, 0]).unwrap();
    let f = Arc::new(Field::prime(2).unwrap());
    let h = HopfAlgebra::group_algebra(&g, f);
    assert!(verify_hopf(&h).all_passed());
    let gl = group_likes(&h).unwrap();
    assert_eq!(gl.elements.len(), 4);
    let filt = coradical_filtration(&h, &gl);
    assert_eq!(filt.dims(), vec![4]);
    assert_eq!(filt.rank, Some(0));
    let a = h.alg.basis(g.a());
    let p = skew_primitives(&h, &a, &h.one()).unwrap();
    let mut am1 = a.clone();
    am1[0] = h.field().neg(Elem::ONE);
    assert_eq!(p, Subspace::span(h.field(), 4, &[am1]));
}

#[test]
fn enumeration_finds_hidden_group_likes() {
    // kC_2 over F_3 in the basis (1, 1 + a): the group-like a is not a basis vector
    let f = Arc::new(Field::prime(3).unwrap());
    let g = Group::cyclic_product(&[2], &[1]).unwrap();
    let k = HopfAlgebra::group_algebra(&g, f.clone());
    // change of basis b0 = 1, b1 = 1 + a
    let to_new = |v: &[Elem]| vec![f.sub(v[0], v[1]), v[1]];
    let from_new = |i: usize| if i == 0 { vec![Elem::ONE, Elem::ZERO] } else { vec![Elem::ONE, Elem::ONE] };
    let alg = StructAlgebra::from_basis_product(f.clone(), 2, vec![Elem::ONE, Elem::ZERO], |i, j| {
        to_new(&k.mul(&from_new(i), &from_new(j)))
    })
    .unwrap();
    let comult = (0..2)
        .map(|i| {
            let mut t = Vec::new();
            for (key, c) in k.delta(&from_new(i)) {
                let (a, b) = ((key / 2) as usize, (key % 2) as usize);
                let (ua, ub) = (to_new(&crate::linalg::unit_vec(2, a)), to_new(&crate::linalg::unit_vec(2, b)));
                for x in 0..2 {
                    for y in 0..2 {
                        t.push(((x * 2 + y) as u64, f.mul(c, f.mul(ua[x], ub[y]))));
                    }
                }
            }
            t
        })
        .collect();
    let counit = vec![Elem::ONE, f.from_int(2)];
    let antipode = (0..2).map(|i| sparse_from_dense(&to_new(&k.s(&from_new(i))))).collect();
    let h = HopfAlgebra::new(alg, comult, counit, antipode, None).unwrap();
    assert!(verify_hopf(&h).all_passed());
    let gl = group_likes(&h).unwrap();
    assert_eq!(gl.elements.len(), 2);
    assert!(gl.certified);
}
