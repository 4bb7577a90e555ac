//! Finite-dimensional associative algebras given by structure constants.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Subspace, Vector};

/// Sparse vector: `(index, coefficient)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(u32, Elem)>;

pub fn sparse_from_dense(v: &[Elem]) -> SparseVec {
    v.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(i, &e)| (i as u32, e)).collect()
}

/// Sorts by key, merges equal keys and drops zeros.
pub fn sparse_normalize<K: Ord + Copy>(f: &Field, mut terms: Vec<(K, Elem)>) -> Vec<(K, Elem)> {
    terms.sort_by_key(|t| t.0);
    let mut out: Vec<(K, Elem)> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 = f.add(last.1, c),
            _ => out.push((k, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

pub fn sparse_to_dense(n: usize, v: &SparseVec) -> Vector {
    let mut d = zero_vec(n);
    for &(i, c) in v {
        d[i as usize] = c;
    }
    d
}

/// Anything that multiplies vectors in `k^dim`.
pub trait Algebra: Sync {
    fn field(&self) -> &Field;
    fn dim(&self) -> usize;
    fn one(&self) -> Vector;
    fn mul(&self, a: &[Elem], b: &[Elem]) -> Vector;

    fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    fn pow(&self, a: &[Elem], mut e: u64) -> Vector {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Matrix of `v -> a v`.
    fn left_mult_matrix(&self, a: &[Elem]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_cols(n, &cols)
    }

    /// Matrix of `v -> v a`.
    fn right_mult_matrix(&self, a: &[Elem]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_cols(n, &cols)
    }
}

#[derive(Clone, Debug)]
pub struct StructAlgebra {
    pub field: Arc<Field>,
    pub dim: usize,
    pub unit: Vector,
    /// `mult[i * dim + j] = e_i e_j`
    pub mult: Vec<SparseVec>,
}

impl Algebra for StructAlgebra {
    fn field(&self) -> &Field {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn one(&self) -> Vector {
        self.unit.clone()
    }

    fn mul(&self, a: &[Elem], b: &[Elem]) -> Vector {
        let f = &*self.field;
        let n = self.dim;
        let mut out = zero_vec(n);
        let bs: Vec<(usize, Elem)> = b.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(j, &e)| (j, e)).collect();
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for &(j, bj) in &bs {
                let s = f.mul(ai, bj);
                for &(k, c) in &self.mult[i * n + j] {
                    let k = k as usize;
                    out[k] = f.mul_add(out[k], s, c);
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }
}

impl StructAlgebra {
    pub fn new(field: Arc<Field>, dim: usize, unit: Vector, mult: Vec<SparseVec>) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {}", unit.len(), dim)));
        }
        if mult.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table has {} entries, expected {}",
                mult.len(),
                dim * dim
            )));
        }
        if mult.iter().flatten().any(|&(k, _)| k as usize >= dim) {
            return Err(Error::invalid("multiplication table index out of range"));
        }
        Ok(StructAlgebra { field, dim, unit, mult })
    }

    /// Builds the table from a bilinear product on basis indices.
    pub fn from_basis_product(
        field: Arc<Field>,
        dim: usize,
        unit: Vector,
        prod: impl Fn(usize, usize) -> Vector + Sync,
    ) -> Result<Self> {
        let mult: Vec<SparseVec> =
            (0..dim * dim).into_par_iter().map(|ij| sparse_from_dense(&prod(ij / dim, ij % dim))).collect();
        Self::new(field, dim, unit, mult)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        sparse_to_dense(self.dim, &self.mult[i * self.dim + j])
    }

    /// First failing `(i, j, k)` of `(e_i e_j) e_k = e_i (e_j e_k)`, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let f = &*self.field;
        (0..n * n).into_par_iter().find_map_first(|ij| {
            let (i, j) = (ij / n, ij % n);
            let eij = &self.mult[ij];
            (0..n).find_map(|k| {
                let mut l = Vec::new();
                for &(m, c) in eij {
                    l.extend(self.mult[m as usize * n + k].iter().map(|&(t, d)| (t, f.mul(c, d))));
                }
                let mut r = Vec::new();
                for &(m, c) in &self.mult[j * n + k] {
                    r.extend(self.mult[i * n + m as usize].iter().map(|&(t, d)| (t, f.mul(c, d))));
                }
                (sparse_normalize(f, l) != sparse_normalize(f, r)).then_some((i, j, k))
            })
        })
    }

    /// First basis index where the unit fails on either side.
    pub fn unit_failure(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let e = self.basis(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i + 1..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    /// Center as a subspace.
    pub fn center(&self) -> Subspace {
        let gens: Vec<Vector> = (0..self.dim).map(|i| self.basis(i)).collect();
        self.commutant(&gens)
    }

    /// Elements commuting with every element of `gens`; the center when
    /// `gens` generates the algebra.
    pub fn commutant(&self, gens: &[Vector]) -> Subspace {
        let f = &*self.field;
        let n = self.dim;
        // column i of the block for g is e_i g - g e_i
        let mut rows = Subspace::zero(n);
        for g in gens {
            let l = self.right_mult_matrix(g);
            let r = self.left_mult_matrix(g);
            for k in 0..n {
                let row: Vector = (0..n).map(|i| f.sub(l.get(k, i), r.get(k, i))).collect();
                if !is_zero_vec(&row) {
                    rows.insert(f, &row);
                }
            }
            if rows.dim() == n {
                break;
            }
        }
        rows.annihilator(f)
    }

    /// Two-sided ideal generated by the given elements.
    pub fn ideal_closure(&self, gens: &[Vector]) -> Subspace {
        let f = &*self.field;
        let n = self.dim;
        let mut s = Subspace::zero(n);
        let mut queue: Vec<Vector> = Vec::new();
        for g in gens {
            if s.insert(f, g) {
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for i in 0..n {
                let e = self.basis(i);
                for w in [self.mul(&e, &v), self.mul(&v, &e)] {
                    if !is_zero_vec(&w) && s.insert(f, &w) {
                        queue.push(w);
                    }
                }
            }
        }
        s
    }

    /// `A / I` in the canonical complement coordinates of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<StructAlgebra> {
        let f = &*self.field;
        let np = ideal.non_pivots();
        let qd = np.len();
        let unit = ideal.quotient_coords(f, &self.unit);
        let mut mult = Vec::with_capacity(qd * qd);
        for &i in &np {
            for &j in &np {
                let prod = self.basis_product(i, j);
                mult.push(sparse_from_dense(&ideal.quotient_coords(f, &prod)));
            }
        }
        StructAlgebra::new(self.field.clone(), qd, unit, mult)
    }

    /// Subalgebra on the given basis (must be closed under products);
    /// returns the algebra in the coordinates of `sub`'s echelon basis.
    pub fn subalgebra(&self, sub: &Subspace, unit: &[Elem]) -> Result<StructAlgebra> {
        let f = &*self.field;
        let b = sub.basis();
        let m = b.len();
        let unit_c = sub.coords(f, unit).ok_or_else(|| Error::pre("subalgebra unit outside the subspace"))?;
        let mut mult = Vec::with_capacity(m * m);
        for x in b {
            for y in b {
                let c = sub
                    .coords(f, &self.mul(x, y))
                    .ok_or_else(|| Error::pre("subspace not closed under multiplication"))?;
                mult.push(sparse_from_dense(&c));
            }
        }
        StructAlgebra::new(self.field.clone(), m, unit_c, mult)
    }

    /// Dense sum `sum c_i x_i` helper used by evaluation code.
    pub fn combine(&self, terms: &[(Elem, &Vector)]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (c, v) in terms {
            axpy(&self.field, &mut out, *c, v);
        }
        out
    }
}

/// Tensor of two sparse vectors over a `dim`-dimensional space, keyed by `j * dim + k`.
pub fn tensor_dense(f: &Field, dim: usize, a: &[Elem], b: &[Elem]) -> Vector {
    let mut out = zero_vec(dim * dim);
    for (j, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, &y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[j * dim + k] = f.mul(x, y);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers(p: u32) -> StructAlgebra {
        // k[x]/(x^2)
        let f = Arc::new(Field::prime(p).unwrap());
        StructAlgebra::from_basis_product(f, 2, vec![Elem::ONE, Elem::ZERO], |i, j| {
            let mut v = zero_vec(2);
            if i + j < 2 {
                v[i + j] = Elem::ONE;
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn dual_numbers_are_sane() {
        let a = dual_numbers(3);
        assert!(a.associativity_failure().is_none());
        assert!(a.unit_failure().is_none());
        assert!(a.is_commutative());
        assert_eq!(a.center().dim(), 2);
        let ideal = a.ideal_closure(&[vec![Elem::ZERO, Elem::ONE]]);
        assert_eq!(ideal.dim(), 1);
        let q = a.quotient(&ideal).unwrap();
        assert_eq!(q.dim, 1);
        assert_eq!(q.unit, vec![Elem::ONE]);
    }
}
