//! Hopf algebras given by structure constants, and brute-force axiom checks.

mod coradical;

pub use coradical::{
    coradical_filtration, degree_of, filtration_is_compatible, group_likes, nilpotent_ideal_check, skew_primitives,
    DegreeResult, Filtration, FiltrationSummary, GroupLikes, NilpotencyResult,
};

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{sparse_from_dense, sparse_normalize, sparse_to_dense, Algebra, SparseVec, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{zero_vec, Matrix, Vector};

/// `Δ(e_i)` as sorted `(j * dim + k, coef)` pairs for `e_j (x) e_k`.
pub type SparseTensor = Vec<(u64, Elem)>;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub alg: StructAlgebra,
    pub comult: Vec<SparseTensor>,
    pub counit: Vector,
    /// `antipode[i] = S(e_i)`
    pub antipode: Vec<SparseVec>,
    pub labels: Option<Vec<String>>,
}

impl HopfAlgebra {
    pub fn new(
        alg: StructAlgebra,
        comult: Vec<SparseTensor>,
        counit: Vector,
        antipode: Vec<SparseVec>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = alg.dim;
        if comult.len() != n || counit.len() != n || antipode.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "dim {n} but comult/counit/antipode have {}/{}/{} entries",
                comult.len(),
                counit.len(),
                antipode.len()
            )));
        }
        if labels.as_ref().is_some_and(|l| l.len() != n) {
            return Err(Error::DimensionMismatch("label count differs from dim".into()));
        }
        let nn = (n * n) as u64;
        if comult.iter().flatten().any(|&(k, _)| k >= nn) || antipode.iter().flatten().any(|&(k, _)| k as usize >= n) {
            return Err(Error::invalid("structure constant index out of range"));
        }
        let f = alg.field.clone();
        let comult = comult.into_iter().map(|t| sparse_normalize(&f, t)).collect();
        Ok(HopfAlgebra { alg, comult, counit, antipode, labels })
    }

    /// Group algebra `kG` with its standard Hopf structure.
    pub fn group_algebra(g: &crate::group::Group, f: Arc<Field>) -> HopfAlgebra {
        let n = g.order();
        let alg = g.group_algebra(f);
        let comult = (0..n).map(|i| vec![((i * n + i) as u64, Elem::ONE)]).collect();
        let antipode = (0..n).map(|i| vec![(g.inv(i) as u32, Elem::ONE)]).collect();
        HopfAlgebra::new(alg, comult, vec![Elem::ONE; n], antipode, Some(g.names().to_vec())).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.alg.field
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vector {
        self.alg.mul(a, b)
    }

    pub fn one(&self) -> Vector {
        self.alg.unit.clone()
    }

    /// `Δ(v)` sparse.
    pub fn delta(&self, v: &[Elem]) -> SparseTensor {
        let f = self.field();
        let mut terms = Vec::new();
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.extend(self.comult[i].iter().map(|&(k, d)| (k, f.mul(c, d))));
            }
        }
        sparse_normalize(f, terms)
    }

    pub fn delta_dense(&self, v: &[Elem]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n * n);
        for (k, c) in self.delta(v) {
            out[k as usize] = c;
        }
        out
    }

    pub fn epsilon(&self, v: &[Elem]) -> Elem {
        let f = self.field();
        v.iter().zip(&self.counit).fold(Elem::ZERO, |acc, (&a, &b)| f.mul_add(acc, a, b))
    }

    pub fn s(&self, v: &[Elem]) -> Vector {
        let f = self.field();
        let mut out = zero_vec(self.dim());
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                for &(k, d) in &self.antipode[i] {
                    out[k as usize] = f.mul_add(out[k as usize], c, d);
                }
            }
        }
        out
    }

    /// Text form such as `x + 2*g1 + 1`, using the basis labels.
    pub fn format_vector(&self, v: &[Elem]) -> String {
        let f = self.field();
        let mut parts = Vec::new();
        for (i, &c) in v.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let lab = self.label(i);
            let coef = f.format(c);
            parts.push(match (coef.as_str(), lab.as_str()) {
                (_, "1") => coef,
                ("1", _) => lab,
                _ if coef.contains('+') => format!("({coef})*{lab}"),
                _ => format!("{coef}*{lab}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Product in `H (x) H` of two sparse tensors.
    pub fn tensor_mul(&self, a: &SparseTensor, b: &SparseTensor) -> SparseTensor {
        let f = self.field();
        let n = self.dim() as u64;
        let mut terms = Vec::new();
        for &(k1, c1) in a {
            let (a1, a2) = ((k1 / n) as usize, (k1 % n) as usize);
            for &(k2, c2) in b {
                let (b1, b2) = ((k2 / n) as usize, (k2 % n) as usize);
                let c = f.mul(c1, c2);
                let l = &self.alg.mult[a1 * n as usize + b1];
                let r = &self.alg.mult[a2 * n as usize + b2];
                for &(i, ci) in l {
                    for &(j, cj) in r {
                        terms.push((i as u64 * n + j as u64, f.mul(c, f.mul(ci, cj))));
                    }
                }
            }
        }
        sparse_normalize(f, terms)
    }
}

impl HopfAlgebra {
    /// The same Hopf algebra on the basis given by the columns of `p`
    /// (new basis vectors in old coordinates).
    pub fn change_basis(&self, p: &Matrix, labels: Option<Vec<String>>) -> Result<HopfAlgebra> {
        let f = self.field();
        let n = self.dim();
        if p.rows != n || p.cols != n {
            return Err(Error::DimensionMismatch(format!("basis change must be {n}x{n}")));
        }
        let pinv = p.inverse(f).ok_or_else(|| Error::invalid("basis change is singular"))?;
        let cols: Vec<Vector> = (0..n).map(|j| p.col(j)).collect();
        let back = |v: &[Elem]| sparse_from_dense(&pinv.mul_vec(f, v));
        let back_cols: Vec<SparseVec> = (0..n).map(|j| sparse_from_dense(&pinv.col(j))).collect();
        let unit = pinv.mul_vec(f, &self.one());
        let mult: Vec<SparseVec> =
            (0..n * n).into_par_iter().map(|ij| back(&self.mul(&cols[ij / n], &cols[ij % n]))).collect();
        let alg = StructAlgebra::new(self.alg.field.clone(), n, unit, mult)?;
        let nn = n as u64;
        let comult = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut terms = Vec::new();
                for (k, c) in self.delta(&cols[i]) {
                    let (a, b) = ((k / nn) as usize, (k % nn) as usize);
                    for &(x, cx) in &back_cols[a] {
                        for &(y, cy) in &back_cols[b] {
                            terms.push((x as u64 * nn + y as u64, f.mul(c, f.mul(cx, cy))));
                        }
                    }
                }
                sparse_normalize(f, terms)
            })
            .collect();
        let counit = cols.iter().map(|v| self.epsilon(v)).collect();
        let antipode = cols.iter().map(|v| back(&self.s(v))).collect();
        HopfAlgebra::new(alg, comult, counit, antipode, labels)
    }

    /// Structure constants agree exactly (labels ignored).
    pub fn same_structure(&self, o: &HopfAlgebra) -> bool {
        self.field() == o.field()
            && self.alg.dim == o.alg.dim
            && self.alg.unit == o.alg.unit
            && self.alg.mult == o.alg.mult
            && self.comult == o.comult
            && self.counit == o.counit
            && self.antipode == o.antipode
    }
}

/// Checks that the linear map with matrix `m` (columns are images of the
/// basis of `h`) is a bijective Hopf algebra map `h -> h2`. Returns the
/// first failing condition.
pub fn hopf_morphism_failure(h: &HopfAlgebra, h2: &HopfAlgebra, m: &Matrix) -> Option<String> {
    let f = h.field();
    let n = h.dim();
    if h2.field() != f || m.cols != n || m.rows != h2.dim() {
        return Some("shape".into());
    }
    if n == h2.dim() && m.rank(f) < n {
        return Some("not bijective".into());
    }
    let img: Vec<Vector> = (0..n).map(|j| m.col(j)).collect();
    if m.mul_vec(f, &h.one()) != h2.one() {
        return Some("unit".into());
    }
    let mult = (0..n * n).into_par_iter().find_first(|&ij| {
        let prod = sparse_to_dense(n, &h.alg.mult[ij]);
        m.mul_vec(f, &prod) != h2.mul(&img[ij / n], &img[ij % n])
    });
    if let Some(ij) = mult {
        return Some(format!("multiplication at ({}, {})", h.label(ij / n), h.label(ij % n)));
    }
    let cols: Vec<SparseVec> = img.iter().map(|v| sparse_from_dense(v)).collect();
    let nn = n as u64;
    let n2 = h2.dim() as u64;
    let comult = (0..n).into_par_iter().find_first(|&i| {
        let mut terms = Vec::new();
        for &(k, c) in &h.comult[i] {
            let (a, b) = ((k / nn) as usize, (k % nn) as usize);
            for &(x, cx) in &cols[a] {
                for &(y, cy) in &cols[b] {
                    terms.push((x as u64 * n2 + y as u64, f.mul(c, f.mul(cx, cy))));
                }
            }
        }
        sparse_normalize(f, terms) != h2.delta(&img[i])
    });
    if let Some(i) = comult {
        return Some(format!("comultiplication at {}", h.label(i)));
    }
    if let Some(i) = (0..n).find(|&i| h2.epsilon(&img[i]) != h.counit[i]) {
        return Some(format!("counit at {}", h.label(i)));
    }
    let anti = (0..n).find(|&i| {
        let s = sparse_to_dense(n, &h.antipode[i]);
        m.mul_vec(f, &s) != h2.s(&img[i])
    });
    anti.map(|i| format!("antipode at {}", h.label(i)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Basis element (or pair) witnessing a failure.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

pub const AXIOMS: [&str; 6] = ["associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode"];

/// Checks every axiom on all basis elements / tuples.
pub fn verify_hopf(h: &HopfAlgebra) -> VerifyReport {
    let n = h.dim();
    let f = h.field();
    let lab = |i: usize| h.label(i);
    let mut checks = Vec::new();
    let push = |checks: &mut Vec<AxiomCheck>, axiom: &'static str, w: Option<String>| {
        checks.push(AxiomCheck { axiom, passed: w.is_none(), witness: w });
    };

    let w = h.alg.associativity_failure().map(|(i, j, k)| format!("({}, {}, {})", lab(i), lab(j), lab(k)));
    push(&mut checks, "associativity", w);
    push(&mut checks, "unit", h.alg.unit_failure().map(lab));

    let nn = n as u64;
    let coassoc = (0..n).into_par_iter().find_first(|&i| {
        let d = &h.comult[i];
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &(k, c) in d {
            let (a, b) = (k / nn, k % nn);
            for &(k2, c2) in &h.comult[a as usize] {
                left.push((k2 * nn + b, f.mul(c, c2)));
            }
            for &(k2, c2) in &h.comult[b as usize] {
                right.push((a * nn * nn + k2, f.mul(c, c2)));
            }
        }
        sparse_normalize(f, left) != sparse_normalize(f, right)
    });
    push(&mut checks, "coassociativity", coassoc.map(lab));

    let counit = (0..n).find(|&i| {
        let mut l = zero_vec(n);
        let mut r = zero_vec(n);
        for &(k, c) in &h.comult[i] {
            let (a, b) = ((k / nn) as usize, (k % nn) as usize);
            l[b] = f.mul_add(l[b], c, h.counit[a]);
            r[a] = f.mul_add(r[a], c, h.counit[b]);
        }
        let e = h.alg.basis(i);
        l != e || r != e
    });
    push(&mut checks, "counit", counit.map(lab));

    let one = h.one();
    let unit_ok = h.delta(&one) == {
        let s = sparse_from_dense(&one);
        let mut t = Vec::new();
        for &(i, ci) in &s {
            for &(j, cj) in &s {
                t.push((i as u64 * nn + j as u64, f.mul(ci, cj)));
            }
        }
        sparse_normalize(f, t)
    } && h.epsilon(&one) == Elem::ONE;
    let bialg = if !unit_ok {
        Some("1".to_string())
    } else {
        (0..n * n).into_par_iter().find_map_first(|ij| {
            let (i, j) = (ij / n, ij % n);
            let prod = sparse_to_dense(n, &h.alg.mult[ij]);
            let lhs = h.delta(&prod);
            let rhs = h.tensor_mul(&h.comult[i], &h.comult[j]);
            let eps_ok = h.epsilon(&prod) == f.mul(h.counit[i], h.counit[j]);
            (lhs != rhs || !eps_ok).then(|| format!("({}, {})", lab(i), lab(j)))
        })
    };
    push(&mut checks, "bialgebra", bialg);

    let anti = (0..n).into_par_iter().find_first(|&i| {
        let mut l = zero_vec(n);
        let mut r = zero_vec(n);
        for &(k, c) in &h.comult[i] {
            let (a, b) = ((k / nn) as usize, (k % nn) as usize);
            let sa = sparse_to_dense(n, &h.antipode[a]);
            let sb = sparse_to_dense(n, &h.antipode[b]);
            let pl = h.mul(&sa, &h.alg.basis(b));
            let pr = h.mul(&h.alg.basis(a), &sb);
            crate::linalg::axpy(f, &mut l, c, &pl);
            crate::linalg::axpy(f, &mut r, c, &pr);
        }
        let target = crate::linalg::vec_scale(f, h.counit[i], &one);
        l != target || r != target
    });
    push(&mut checks, "antipode", anti.map(lab));
    VerifyReport { checks }
}

#[cfg(test)]
pub(crate) mod tests;
