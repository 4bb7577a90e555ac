//! Dense exact linear algebra over a `Field`.
//!
//! Matrices act on column vectors: a `rows x cols` matrix maps `k^cols` to
//! `k^rows`. Subspaces are always kept as fully reduced row echelon bases,
//! so two subspaces are equal exactly when their bases are equal.

mod idempotents;

pub use idempotents::{eval_poly, lift_idempotent, min_poly, split_by_element, split_idempotents, SplitOutcome};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

pub type Vector = Vec<Elem>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Elem::ZERO; n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Elem::ONE;
    v
}

pub fn is_zero_vec(v: &[Elem]) -> bool {
    v.iter().all(|e| e.is_zero())
}

pub fn vec_add(f: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, s: Elem, a: &[Elem]) -> Vector {
    a.iter().map(|&x| f.mul(s, x)).collect()
}

/// `acc += s * v`
pub fn axpy(f: &Field, acc: &mut [Elem], s: Elem, v: &[Elem]) {
    if s.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = f.mul_add(*a, s, x);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(n: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, f: &Field, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * o.cols..(i + 1) * o.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if !a.is_zero() {
                    axpy(f, out_row, a, &o.data[k * o.cols..(k + 1) * o.cols]);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, f: &Field, v: &[Elem]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(Elem::ZERO, |acc, (&a, &b)| f.mul_add(acc, a, b)))
            .collect()
    }

    /// Reduce to reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for k in 0..self.cols {
                    self.data.swap(pr * self.cols + k, r * self.cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            for k in c..self.cols {
                let v = self.get(r, k);
                self.set(r, k, f.mul(v, inv));
            }
            let pivot_row: Vector = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let nf = f.neg(factor);
                let row = &mut self.data[i * self.cols..(i + 1) * self.cols];
                axpy(f, row, nf, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }

    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Elem::ONE);
        }
        let piv = aug.rref(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// One solution of `M x = y`, if any.
    pub fn solve(&self, f: &Field, y: &[Elem]) -> Option<Vector> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, y[i]);
        }
        let piv = aug.rref(f);
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (r, &c) in piv.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Some(x)
    }
}

/// Null space of `m` in canonical form.
pub fn kernel(f: &Field, m: &Matrix) -> Subspace {
    let mut a = m.clone();
    let piv = a.rref(f);
    let n = m.cols;
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &c in &piv {
        is_pivot[c] = true;
    }
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(n);
        v[free] = Elem::ONE;
        for (r, &c) in piv.iter().enumerate() {
            v[c] = f.neg(a.get(r, free));
        }
        basis.push(v);
    }
    Subspace::span(f, n, &basis)
}

/// `{v : L v in W}`.
pub fn preimage_subspace(f: &Field, l: &Matrix, w: &Subspace) -> Result<Subspace> {
    if l.rows != w.ambient {
        return Err(Error::DimensionMismatch(format!(
            "map into dimension {} but subspace lives in {}",
            l.rows, w.ambient
        )));
    }
    let q = w.quotient_map(f);
    let ql = q.mul(f, l)?;
    Ok(kernel(f, &ql))
}

/// A subspace of `k^ambient` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(f: &Field, ambient: usize, vectors: &[Vector]) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(f, v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in the space.
    pub fn reduce(&self, f: &Field, v: &[Elem]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if !c.is_zero() {
                axpy(f, &mut r, f.neg(c), b);
            }
        }
        r
    }

    pub fn contains(&self, f: &Field, v: &[Elem]) -> bool {
        is_zero_vec(&self.reduce(f, v))
    }

    /// Adds `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, f: &Field, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let mut r = self.reduce(f, v);
        let Some(p) = r.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[p]).unwrap();
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for b in self.basis.iter_mut() {
            let c = b[p];
            if !c.is_zero() {
                axpy(f, b, f.neg(c), &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, r);
        true
    }

    pub fn sum(&self, f: &Field, o: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &o.basis {
            s.insert(f, v);
        }
        s
    }

    pub fn is_subspace_of(&self, f: &Field, o: &Subspace) -> bool {
        self.basis.iter().all(|v| o.contains(f, v))
    }

    pub fn intersect(&self, f: &Field, o: &Subspace) -> Subspace {
        // v = sum a_i s_i lies in o iff the quotient image vanishes.
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let q = o.quotient_map(f);
        let s = Matrix::from_cols(self.ambient, &self.basis);
        let k = kernel(f, &q.mul(f, &s).unwrap());
        let vs: Vec<Vector> = k.basis.iter().map(|c| s.mul_vec(f, c)).collect();
        Subspace::span(f, self.ambient, &vs)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the space.
    pub fn coords(&self, f: &Field, v: &[Elem]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (b, &ci) in self.basis.iter().zip(&c) {
            axpy(f, &mut r, f.neg(ci), b);
        }
        is_zero_vec(&r).then_some(c)
    }

    /// `{v : b . v = 0 for every basis vector b}`.
    pub fn annihilator(&self, f: &Field) -> Subspace {
        let n = self.ambient;
        let np = self.non_pivots();
        let basis: Vec<Vector> = np
            .iter()
            .map(|&free| {
                let mut v = zero_vec(n);
                v[free] = Elem::ONE;
                for (b, &p) in self.basis.iter().zip(&self.pivots) {
                    v[p] = f.neg(b[free]);
                }
                v
            })
            .collect();
        Subspace::span(f, n, &basis)
    }

    /// Columns not carrying a pivot, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_p[c]).collect()
    }

    /// Matrix of `k^ambient -> k^ambient / self` in the canonical complement
    /// coordinates (the non-pivot positions of the reduced vector).
    pub fn quotient_map(&self, f: &Field) -> Matrix {
        let np = self.non_pivots();
        let mut q = Matrix::zeros(np.len(), self.ambient);
        for (j, &c) in np.iter().enumerate() {
            q.set(j, c, Elem::ONE);
        }
        // a pivot column reduces to minus its basis row on the non-pivots
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            for (j, &c) in np.iter().enumerate() {
                if !b[c].is_zero() {
                    q.set(j, pc, f.neg(b[c]));
                }
            }
        }
        q
    }

    /// Complement coordinates of `v` modulo this space.
    pub fn quotient_coords(&self, f: &Field, v: &[Elem]) -> Vector {
        let r = self.reduce(f, v);
        self.non_pivots().into_iter().map(|c| r[c]).collect()
    }
}

#[cfg(test)]
mod tests;
