use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{lcm, Elem, Poly};

use super::{axpy, is_zero_vec, vec_scale, zero_vec, Vector};

/// Minimal polynomial of `b` inside the corner algebra with identity `e`.
pub fn min_poly<A: Algebra + ?Sized>(alg: &A, e: &[Elem], b: &[Elem]) -> Poly {
    let f = alg.field();
    // rows: (reduced vector, pivot, polynomial producing it)
    let mut rows: Vec<(Vector, usize, Poly)> = Vec::new();
    let mut power = e.to_vec();
    let mut k = 0usize;
    loop {
        let mut v = power.clone();
        let mut comb = Poly::monomial(Elem::ONE, k);
        for (r, p, c) in &rows {
            let s = v[*p];
            if !s.is_zero() {
                let ns = f.neg(s);
                axpy(f, &mut v, ns, r);
                comb = comb.add(f, &c.scale(f, ns));
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return comb.monic(f),
            Some(p) => {
                let inv = f.inv(v[p]).unwrap();
                rows.push((vec_scale(f, inv, &v), p, comb.scale(f, inv)));
            }
        }
        power = alg.mul(&power, b);
        k += 1;
    }
}

/// `P(b)` with constant term multiplied by `e`.
pub fn eval_poly<A: Algebra + ?Sized>(alg: &A, e: &[Elem], b: &[Elem], p: &Poly) -> Vector {
    let f = alg.field();
    let mut acc = zero_vec(e.len());
    for &c in p.0.iter().rev() {
        acc = alg.mul(&acc, b);
        axpy(f, &mut acc, c, e);
    }
    acc
}

/// What the minimal polynomial of an element says about its corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    /// Orthogonal idempotents summing to `e`, at least two.
    Split(Vec<Vector>),
    /// Minimal polynomial is a power of `t - root`.
    Local(Elem),
    /// Minimal polynomial has no roots; degrees of its irreducible factors.
    NoRoots(Vec<usize>),
}

/// Splits `e` along the coprime factorisation of the minimal polynomial of `e b e`.
pub fn split_by_element<A: Algebra + ?Sized>(alg: &A, e: &[Elem], b: &[Elem]) -> SplitOutcome {
    let f = alg.field();
    let x = alg.mul(&alg.mul(e, b), e);
    let mu = min_poly(alg, e, &x);
    let roots = mu.roots_with_multiplicity(f);
    let mut factors: Vec<Poly> = Vec::new();
    let mut rest = mu.clone();
    for &(r, m) in &roots {
        let mut q = Poly::one();
        for _ in 0..m {
            q = q.mul(f, &Poly::linear(f, r));
        }
        rest = rest.divrem(f, &q).0;
        factors.push(q);
    }
    if rest.degree().unwrap_or(0) > 0 {
        if factors.is_empty() {
            return SplitOutcome::NoRoots(rest.irreducible_factor_degrees(f));
        }
        factors.push(rest);
    }
    if factors.len() == 1 {
        return SplitOutcome::Local(roots[0].0);
    }
    let idems = factors
        .iter()
        .map(|q| {
            let m = mu.divrem(f, q).0;
            let (_, s, _) = m.ext_gcd(f, q);
            let poly = s.mul(f, &m).rem(f, &mu);
            eval_poly(alg, e, &x, &poly)
        })
        .collect();
    SplitOutcome::Split(idems)
}

/// Iterates `e -> 3e^2 - 2e^3` until `e` is idempotent.
pub fn lift_idempotent<A: Algebra + ?Sized>(alg: &A, e0: &[Elem]) -> Result<Vector> {
    let f = alg.field();
    let mut e = e0.to_vec();
    let three = f.from_int(3);
    let m_two = f.from_int(-2);
    for _ in 0..64 {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = alg.mul(&e2, &e);
        let mut next = vec_scale(f, three, &e2);
        axpy(f, &mut next, m_two, &e3);
        e = next;
    }
    Err(Error::pre("element is not idempotent modulo a nilpotent ideal"))
}

/// Primitive idempotents of the commutative algebra spanned by `gens`
/// (with identity `e`), as a list of pairwise orthogonal idempotents
/// summing to `e`.
pub fn split_idempotents<A: Algebra + ?Sized>(alg: &A, e: &[Elem], gens: &[Vector]) -> Result<Vec<Vector>> {
    let f = alg.field();
    let mut queue = vec![e.to_vec()];
    let mut done = Vec::new();
    'outer: while let Some(cur) = queue.pop() {
        if is_zero_vec(&cur) {
            continue;
        }
        for g in gens {
            match split_by_element(alg, &cur, g) {
                SplitOutcome::Split(parts) => {
                    queue.extend(parts);
                    continue 'outer;
                }
                SplitOutcome::Local(_) => {}
                SplitOutcome::NoRoots(degs) => {
                    let l = degs.iter().fold(1usize, |a, &b| lcm(a as u64, b as u64) as usize);
                    return Err(Error::ExtendField {
                        min_degree: f.d() * l as u32,
                        reason: format!("minimal polynomial has irreducible factors of degree {degs:?}"),
                    });
                }
            }
        }
        done.push(cur);
    }
    done.sort();
    Ok(done)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::StructAlgebra;
    use crate::field::Field;
    use crate::linalg::unit_vec;

    /// Group algebra of C_n with basis a^0..a^{n-1}.
    fn cyclic(f: Arc<Field>, n: usize) -> StructAlgebra {
        StructAlgebra::from_basis_product(f, n, unit_vec(n, 0), |i, j| unit_vec(n, (i + j) % n)).unwrap()
    }

    #[test]
    fn cyclic_group_algebra_splits_when_roots_exist() {
        let f = Arc::new(Field::prime(5).unwrap());
        let a = cyclic(f.clone(), 4);
        let gens: Vec<Vector> = (0..4).map(|i| unit_vec(4, i)).collect();
        let idems = split_idempotents(&a, &a.one(), &gens).unwrap();
        assert_eq!(idems.len(), 4);
        let mut sum = zero_vec(4);
        for e in &idems {
            assert_eq!(a.mul(e, e), *e);
            axpy(&f, &mut sum, Elem::ONE, e);
        }
        assert_eq!(sum, a.one());
    }

    #[test]
    fn cyclic_group_algebra_asks_for_extension() {
        let f = Arc::new(Field::prime(2).unwrap());
        let a = cyclic(f, 3);
        let gens: Vec<Vector> = (0..3).map(|i| unit_vec(3, i)).collect();
        match split_idempotents(&a, &a.one(), &gens) {
            Err(Error::ExtendField { min_degree, .. }) => assert_eq!(min_degree, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn modular_group_algebra_is_local() {
        let f = Arc::new(Field::prime(3).unwrap());
        let a = cyclic(f, 3);
        let gens: Vec<Vector> = (0..3).map(|i| unit_vec(3, i)).collect();
        assert_eq!(split_idempotents(&a, &a.one(), &gens).unwrap().len(), 1);
        let mu = min_poly(&a, &a.one(), &unit_vec(3, 1));
        assert_eq!(mu.degree(), Some(3));
    }
}
