use std::collections::BTreeMap;

use serde::Serialize;

use super::{HopfAlgebra, SparseTensor};
use crate::algebra::{sparse_from_dense, sparse_normalize, Algebra, SparseVec, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Matrix, Subspace, Vector};

/// Largest affine enumeration tried when group-likes are not basis elements.
const ENUMERATION_LIMIT: u64 = 177_147;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLikes {
    /// Group-like elements, unit first.
    pub elements: Vec<Vector>,
    /// `table[i][j]` = index of `elements[i] * elements[j]`.
    pub table: Vec<Vec<usize>>,
    /// The list is provably complete (wedge criterion or exhaustive search).
    pub certified: bool,
}

impl GroupLikes {
    pub fn span(&self, h: &HopfAlgebra) -> Subspace {
        Subspace::span(h.field(), h.dim(), &self.elements)
    }

    pub fn index_of(&self, v: &[Elem]) -> Option<usize> {
        self.elements.iter().position(|g| g.as_slice() == v)
    }
}

fn is_group_like(h: &HopfAlgebra, v: &[Elem]) -> bool {
    let f = h.field();
    if h.epsilon(v) != Elem::ONE {
        return false;
    }
    let s = sparse_from_dense(v);
    let n = h.dim() as u64;
    let mut t = Vec::new();
    for &(i, ci) in &s {
        for &(j, cj) in &s {
            t.push((i as u64 * n + j as u64, f.mul(ci, cj)));
        }
    }
    h.delta(v) == sparse_normalize(f, t)
}

fn closure_table(h: &HopfAlgebra, elems: &[Vector]) -> Option<Vec<Vec<usize>>> {
    elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| {
                    let p = h.mul(x, y);
                    elems.iter().position(|g| *g == p)
                })
                .collect::<Option<Vec<usize>>>()
        })
        .collect()
}

/// Group-like elements of `h`.
///
/// Basis elements that are group-like are collected first; if they are
/// closed under products and the coradical filtration seeded by their span
/// exhausts `h`, they are all the group-likes. Otherwise falls back to
/// enumeration of `ε = 1` vectors when that is small enough.
pub fn group_likes(h: &HopfAlgebra) -> Result<GroupLikes> {
    let n = h.dim();
    let f = h.field();
    let one = h.one();
    let mut elems: Vec<Vector> = vec![one.clone()];
    for i in 0..n {
        let e = unit_vec(n, i);
        if e != one && is_group_like(h, &e) {
            elems.push(e);
        }
    }
    if is_group_like(h, &one) {
        if let Some(table) = closure_table(h, &elems) {
            let c = Subspace::span(f, n, &elems);
            let filt = filtration_from(h, &c);
            if filt.pointed {
                return Ok(GroupLikes { elements: elems, table, certified: true });
            }
        }
    }
    let q = f.order() as u64;
    let count = (n as u32).checked_sub(1).and_then(|e| q.checked_pow(e));
    match count {
        Some(c) if c <= ENUMERATION_LIMIT => {}
        _ => {
            return Err(Error::Budget(format!(
                "group-like search over GF({})^{} exceeds the enumeration limit",
                f.order(),
                n
            )))
        }
    }
    let pivot = (0..n).find(|&i| !h.counit[i].is_zero()).ok_or_else(|| Error::invalid("counit is zero"))?;
    let inv = f.inv(h.counit[pivot]).unwrap();
    let others: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
    let mut found = vec![one.clone()];
    let mut digits = vec![0u32; others.len()];
    loop {
        let mut v = zero_vec(n);
        let mut acc = Elem::ZERO;
        for (&i, &d) in others.iter().zip(&digits) {
            v[i] = Elem(d);
            acc = f.mul_add(acc, Elem(d), h.counit[i]);
        }
        v[pivot] = f.mul(inv, f.sub(Elem::ONE, acc));
        if v != one && is_group_like(h, &v) {
            found.push(v);
        }
        let mut k = 0;
        loop {
            if k == digits.len() {
                let table = closure_table(h, &found)
                    .ok_or_else(|| Error::invalid("group-like elements are not closed under products"))?;
                return Ok(GroupLikes { elements: found, table, certified: true });
            }
            digits[k] += 1;
            if (digits[k] as u64) < q {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

/// `P_{g,h}`: kernel of `v -> Δv - v (x) g - h (x) v`.
pub fn skew_primitives(hopf: &HopfAlgebra, g: &[Elem], h: &[Elem]) -> Result<Subspace> {
    if !is_group_like(hopf, g) || !is_group_like(hopf, h) {
        return Err(Error::pre("skew primitives need group-like arguments"));
    }
    let n = hopf.dim();
    let f = hopf.field();
    let nn = n as u64;
    let gs = sparse_from_dense(g);
    let hs = sparse_from_dense(h);
    let images: Vec<SparseTensor> = (0..n)
        .map(|i| {
            let mut t = hopf.comult[i].clone();
            for &(j, c) in &gs {
                t.push((i as u64 * nn + j as u64, f.neg(c)));
            }
            for &(j, c) in &hs {
                t.push((j as u64 * nn + i as u64, f.neg(c)));
            }
            sparse_normalize(f, t)
        })
        .collect();
    Ok(kernel_of_columns(hopf, &images))
}

/// Kernel of the map sending `e_i` to the sparse vector `cols[i]`.
fn kernel_of_columns<K: Ord + Copy>(h: &HopfAlgebra, cols: &[Vec<(K, Elem)>]) -> Subspace {
    let n = h.dim();
    let f = h.field();
    let mut rows: BTreeMap<K, Vector> = BTreeMap::new();
    for (i, col) in cols.iter().enumerate() {
        for &(k, c) in col {
            rows.entry(k).or_insert_with(|| zero_vec(n))[i] = c;
        }
    }
    let mut space = Subspace::zero(n);
    for r in rows.values() {
        if space.dim() == n {
            break;
        }
        space.insert(f, r);
    }
    space.annihilator(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub chain: Vec<Subspace>,
    /// The chain reaches the whole algebra.
    pub pointed: bool,
    /// `dim H_1 / dim H_0 - 1` when that is an integer.
    pub rank: Option<usize>,
    /// `H_1` was checked to be free over `H_0` with an explicit basis.
    pub free_verified: bool,
}

impl Filtration {
    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(|s| s.dim()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationSummary {
    pub dims: Vec<usize>,
    pub pointed: bool,
    pub rank: Option<usize>,
}

/// Sparse images of basis vectors under the quotient map by `s`.
fn quotient_columns(h: &HopfAlgebra, s: &Subspace) -> Vec<SparseVec> {
    let q = s.quotient_map(h.field());
    (0..h.dim()).map(|j| sparse_from_dense(&q.col(j))).collect()
}

fn filtration_from(h: &HopfAlgebra, c: &Subspace) -> Filtration {
    let n = h.dim();
    let f = h.field();
    let pc = quotient_columns(h, c);
    let mut chain = vec![c.clone()];
    loop {
        let prev = chain.last().unwrap();
        let pp = quotient_columns(h, prev);
        let width = (n - prev.dim()) as u64;
        let cols: Vec<Vec<(u64, Elem)>> = (0..n)
            .map(|i| {
                let mut t = Vec::new();
                for &(k, coef) in &h.comult[i] {
                    let (a, b) = ((k / n as u64) as usize, (k % n as u64) as usize);
                    for &(x, cx) in &pc[a] {
                        for &(y, cy) in &pp[b] {
                            t.push((x as u64 * width + y as u64, f.mul(coef, f.mul(cx, cy))));
                        }
                    }
                }
                sparse_normalize(f, t)
            })
            .collect();
        let next = kernel_of_columns(h, &cols).sum(f, prev);
        if next == *prev {
            break;
        }
        let full = next.dim() == n;
        chain.push(next);
        if full {
            break;
        }
    }
    let pointed = chain.last().unwrap().dim() == n;
    let d0 = chain[0].dim();
    let d1 = chain.get(1).map_or(d0, |s| s.dim());
    let rank = (d0 > 0 && d1 % d0 == 0).then(|| d1 / d0 - 1);
    Filtration { chain, pointed, rank, free_verified: false }
}

/// Coradical filtration seeded by the span of the group-likes.
pub fn coradical_filtration(h: &HopfAlgebra, gl: &GroupLikes) -> Filtration {
    let f = h.field();
    let c = gl.span(h);
    let mut filt = filtration_from(h, &c);
    filt.free_verified = match filt.rank {
        Some(0) => true,
        Some(1) => {
            // a nontrivial skew primitive x with H_1 = H_0 + H_0 x of dimension 2 dim H_0
            gl.elements.iter().any(|g| {
                let Ok(p) = skew_primitives(h, g, &h.one()) else { return false };
                p.basis().iter().filter(|x| !c.contains(f, x)).any(|x| {
                    let mut span = c.clone();
                    for g2 in &gl.elements {
                        span.insert(f, &h.mul(g2, x));
                    }
                    span.dim() == 2 * c.dim() && filt.chain.get(1) == Some(&span)
                })
            })
        }
        _ => false,
    };
    if filt.rank.is_some_and(|r| r <= 1) && !filt.free_verified {
        filt.rank = None;
    }
    filt
}

/// Checks `Δ(H_i) ⊆ Σ_k H_k (x) H_{i-k}` in a basis adapted to the chain.
pub fn filtration_is_compatible(h: &HopfAlgebra, filt: &Filtration) -> bool {
    if !filt.pointed {
        return false;
    }
    let n = h.dim();
    let f = h.field();
    let mut adapted: Vec<Vector> = Vec::new();
    let mut level = Vec::new();
    let mut span = Subspace::zero(n);
    for (l, s) in filt.chain.iter().enumerate() {
        for b in s.basis() {
            if span.insert(f, b) {
                adapted.push(b.clone());
                level.push(l);
            }
        }
    }
    let bm = Matrix::from_cols(n, &adapted);
    let Some(binv) = bm.inverse(f) else { return false };
    let cols: Vec<SparseVec> = (0..n).map(|j| sparse_from_dense(&binv.col(j))).collect();
    adapted.iter().zip(&level).all(|(v, &l)| {
        let mut t = Vec::new();
        for (k, c) in h.delta(v) {
            let (a, b) = ((k / n as u64) as usize, (k % n as u64) as usize);
            for &(x, cx) in &cols[a] {
                for &(y, cy) in &cols[b] {
                    t.push(((x, y), f.mul(c, f.mul(cx, cy))));
                }
            }
        }
        sparse_normalize(f, t).iter().all(|&((x, y), _)| level[x as usize] + level[y as usize] <= l)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    pub n: usize,
    /// `x^n = Σ_{t<n} coeffs[t] x^t` with `coeffs[t]` in the span of the group-likes.
    pub coeffs: Vec<Vector>,
}

/// Smallest `n` with `x^n ∈ Σ_{t<n} H_0 x^t`, and the coefficients.
pub fn degree_of(h: &HopfAlgebra, x: &[Elem], group_likes: &[Vector]) -> Result<DegreeResult> {
    let f = h.field();
    let dim = h.dim();
    let h0 = Subspace::span(f, dim, group_likes);
    if h0.contains(f, x) {
        return Err(Error::pre("x lies in the coradical"));
    }
    let mut spanning: Vec<Vector> = Vec::new();
    let mut power = h.one();
    for n in 0..=dim {
        if n > 0 {
            let m = Matrix::from_cols(dim, &spanning);
            if let Some(sol) = m.solve(f, &power) {
                let k = group_likes.len();
                let coeffs = (0..n)
                    .map(|t| {
                        let mut b = zero_vec(dim);
                        for (gi, g) in group_likes.iter().enumerate() {
                            crate::linalg::axpy(f, &mut b, sol[t * k + gi], g);
                        }
                        b
                    })
                    .collect();
                return Ok(DegreeResult { n, coeffs });
            }
        }
        for g in group_likes {
            spanning.push(h.mul(g, &power));
        }
        power = h.mul(&power, x);
    }
    Err(Error::invalid("powers of x never become dependent"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyResult {
    pub ideal: Subspace,
    /// Least `e` with `I^e = 0`.
    pub index: Option<usize>,
}

pub fn nilpotent_ideal_check(alg: &StructAlgebra, gens: &[Vector]) -> NilpotencyResult {
    let f = &*alg.field;
    let ideal = alg.ideal_closure(gens);
    let mut power = ideal.clone();
    let mut e = 1;
    loop {
        if power.dim() == 0 {
            return NilpotencyResult { ideal, index: Some(e) };
        }
        let mut next = Subspace::zero(alg.dim);
        for u in power.basis() {
            for v in ideal.basis() {
                let w = alg.mul(u, v);
                if !is_zero_vec(&w) {
                    next.insert(f, &w);
                }
            }
        }
        if next == power {
            return NilpotencyResult { ideal, index: None };
        }
        power = next;
        e += 1;
    }
}
