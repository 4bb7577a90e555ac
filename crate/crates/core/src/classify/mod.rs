//! From a pointed rank-one Hopf algebra back to its defining tuple.

mod iso;

pub use iso::{iso_bruteforce, iso_tuples, IsoMethod, IsoReport, IsoWitness, Verdict};

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{normalize_tuple, NormalizationStep, Tuple, TupleSpec, Variant};
use crate::field::Elem;
use crate::group::{Group, GroupSpec};
use crate::hopfcore::{coradical_filtration, degree_of, group_likes, skew_primitives, GroupLikes, HopfAlgebra};
use crate::linalg::{vec_sub, zero_vec, Matrix, Vector};

/// Index (into `gl.elements`) of the unique group-like `a` with
/// `P_{a,1}` not contained in the coradical.
pub fn find_skew_point(h: &HopfAlgebra, gl: &GroupLikes) -> Result<usize> {
    let f = h.field();
    let h0 = gl.span(h);
    let one = h.one();
    let mut found = Vec::new();
    for (k, g) in gl.elements.iter().enumerate() {
        if !skew_primitives(h, g, &one)?.is_subspace_of(f, &h0) {
            found.push(k);
        }
    }
    match found.as_slice() {
        [] => Err(Error::pre("cosemisimple: no skew primitive outside the coradical")),
        [k] => Ok(*k),
        _ => Err(Error::pre(format!("rank > 1 or corrupt input: {} skew point candidates", found.len()))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDetection {
    /// 1, 2 or 3.
    pub kind: u8,
    /// Normalized skew primitive.
    pub x: Vector,
    /// Eigenvalue of conjugation by `a` on `x`.
    pub q: Elem,
    /// Conjugation by `a` on `P_{a,1}` in the basis `{x₀, a - 1}` (rows).
    pub conjugation: Vec<Vec<Elem>>,
}

fn inverse_index(gl: &GroupLikes, k: usize) -> usize {
    gl.table[k].iter().position(|&m| m == 0).expect("group-likes form a group")
}

fn conjugate(h: &HopfAlgebra, gl: &GroupLikes, k: usize, v: &[Elem]) -> Vector {
    let g = &gl.elements[k];
    let gi = &gl.elements[inverse_index(gl, k)];
    h.mul(&h.mul(g, v), gi)
}

/// Coordinates of `v` in the basis `cols`, if it lies in their span.
fn coords_in(h: &HopfAlgebra, cols: &[Vector], v: &[Elem]) -> Option<Vector> {
    Matrix::from_cols(h.dim(), cols).solve(h.field(), v)
}

/// Type of the skew point's conjugation action on `P_{a,1}`.
pub fn detect_type(h: &HopfAlgebra, gl: &GroupLikes, a_idx: usize) -> Result<TypeDetection> {
    let f = h.field();
    let one = h.one();
    let a = &gl.elements[a_idx];
    let p = skew_primitives(h, a, &one)?;
    let h0 = gl.span(h);
    if a_idx == 0 {
        // primitive elements: a - 1 = 0
        if p.dim() != 1 {
            return Err(Error::pre(format!("dim P_(1,1) = {}, expected 1", p.dim())));
        }
        let x = p.basis()[0].clone();
        return Ok(TypeDetection { kind: 2, x, q: Elem::ONE, conjugation: vec![vec![Elem::ONE]] });
    }
    if p.dim() != 2 {
        return Err(Error::pre(format!("dim P_(a,1) = {}, expected 2", p.dim())));
    }
    let x0 =
        p.basis().iter().find(|v| !h0.contains(f, v)).expect("skew point has a skew primitive outside H_0").clone();
    let am1 = vec_sub(f, a, &one);
    let v = conjugate(h, gl, a_idx, &x0);
    let sol =
        coords_in(h, &[x0.clone(), am1.clone()], &v).ok_or_else(|| Error::invalid("conjugation leaves P_(a,1)"))?;
    let (lambda, mu) = (sol[0], sol[1]);
    let conjugation = vec![vec![lambda, Elem::ZERO], vec![mu, Elem::ONE]];
    let (kind, x) = if lambda != Elem::ONE {
        // eigenvector x₀ + s(a - 1) with s(λ - 1) = μ
        let s = f.div(mu, f.sub(lambda, Elem::ONE)).unwrap();
        let mut x = x0.clone();
        crate::linalg::axpy(f, &mut x, s, &am1);
        (1, x)
    } else if mu.is_zero() {
        (2, x0)
    } else {
        (3, crate::linalg::vec_scale(f, f.inv(mu).unwrap(), &x0))
    };
    Ok(TypeDetection { kind, x, q: lambda, conjugation })
}

/// Coordinates of an element of `H_0` in the group-like basis.
fn group_coords(h: &HopfAlgebra, gl: &GroupLikes, v: &[Elem]) -> Result<Vector> {
    coords_in(h, &gl.elements, v).ok_or_else(|| Error::invalid("coefficient outside the coradical"))
}

fn not_family(msg: impl Into<String>) -> Error {
    Error::invalid(format!("not a rank-one family member: {}", msg.into()))
}

/// Reads the tuple off `H` for the detected `x`; the result is not yet normalized.
pub fn extract_tuple(h: &HopfAlgebra, gl: &GroupLikes, a_idx: usize, det: &TypeDetection) -> Result<Tuple> {
    let f = h.field();
    let one = h.one();
    let gs = gl.elements.len();
    let group = Group::from_table(&gl.table, a_idx)?;
    let x = &det.x;
    let am1 = vec_sub(f, &gl.elements[a_idx], &one);
    let mut chi = Vec::with_capacity(gs);
    let mut c = Vec::with_capacity(gs);
    for k in 0..gs {
        let v = conjugate(h, gl, k, x);
        let sol = if a_idx == 0 {
            coords_in(h, std::slice::from_ref(x), &v).map(|s| vec![s[0], Elem::ZERO])
        } else {
            coords_in(h, &[x.clone(), am1.clone()], &v)
        }
        .ok_or_else(|| not_family("g x g^-1 leaves span{x, a-1}"))?;
        chi.push(sol[0]);
        c.push(sol[1]);
    }
    let deg = degree_of(h, x, &gl.elements)?;
    let n = deg.n;
    let b: Vec<Vector> = deg.coeffs.iter().map(|v| group_coords(h, gl, v)).collect::<Result<_>>()?;
    let an = group.pow(a_idx, n as i64);
    // b_0 = s (a^n - 1); returns s
    let group_term = |b0: &[Elem]| -> Result<Elem> {
        let s = if an == 0 { Elem::ZERO } else { b0[an] };
        let mut expect = zero_vec(gs);
        expect[an] = f.add(expect[an], s);
        expect[0] = f.sub(expect[0], s);
        if b0 != expect.as_slice() {
            return Err(not_family("constant term of x^n is not a multiple of a^n - 1"));
        }
        Ok(s)
    };
    let scalar = |bt: &[Elem]| -> Option<Elem> { bt[1..].iter().all(|e| e.is_zero()).then_some(bt[0]) };
    let p = f.p() as usize;
    let (variant, alpha) = match det.kind {
        1 => {
            if c.iter().any(|e| !e.is_zero()) {
                return Err(not_family("first type with nonzero c"));
            }
            let big_n = f.mult_order(det.q).unwrap() as usize;
            if n != big_n {
                return Err(not_family(format!("degree {n} differs from the order {big_n} of q")));
            }
            if b[1..].iter().any(|bt| bt.iter().any(|e| !e.is_zero())) {
                return Err(not_family("x^n has terms of positive degree"));
            }
            (Variant::R, vec![group_term(&b[0])?])
        }
        2 => {
            if n != p {
                return Err(not_family(format!("second type with degree {n} != p")));
            }
            let a0 = scalar(&b[1]).ok_or_else(|| not_family("x coefficient of x^p is not a scalar"))?;
            if b[2..].iter().any(|bt| bt.iter().any(|e| !e.is_zero())) {
                return Err(not_family("x^p has terms of degree above 1"));
            }
            (Variant::F, vec![group_term(&b[0])?, a0])
        }
        _ => {
            if chi.iter().any(|&e| e != Elem::ONE) {
                return Err(not_family("third type with nontrivial character"));
            }
            if n != p || scalar(&b[1]) != Some(Elem::ONE) || b[2..].iter().any(|bt| bt.iter().any(|e| !e.is_zero())) {
                return Err(not_family("x^p is not x + α(a^p - 1)"));
            }
            (Variant::E, vec![group_term(&b[0])?])
        }
    };
    let group_spec = GroupSpec::Table { table: gl.table.clone(), a: a_idx };
    Ok(Tuple { variant, field: Arc::clone(&h.alg.field), group, group_spec, chi, c, alpha })
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub skew_point: Vector,
    pub skew_index: usize,
    pub detection: TypeDetection,
    pub raw_tuple: Tuple,
    pub tuple: Tuple,
    pub steps: Vec<NormalizationStep>,
}

/// Serializable view of a classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub skew_point: String,
    #[serde(rename = "type")]
    pub kind: u8,
    pub q: String,
    pub x: String,
    pub conjugation: Vec<Vec<String>>,
    pub raw_tuple: TupleSpec,
    pub tuple: TupleSpec,
    pub normalization: Vec<NormalizationStep>,
}

impl ClassificationReport {
    pub fn summary(&self, h: &HopfAlgebra) -> ClassificationSummary {
        let f = h.field();
        ClassificationSummary {
            skew_point: h.format_vector(&self.skew_point),
            kind: self.detection.kind,
            q: f.format(self.detection.q),
            x: h.format_vector(&self.detection.x),
            conjugation: self.detection.conjugation.iter().map(|r| r.iter().map(|&e| f.format(e)).collect()).collect(),
            raw_tuple: self.raw_tuple.to_spec(),
            tuple: self.tuple.to_spec(),
            normalization: self.steps.clone(),
        }
    }
}

/// Full pipeline: group-likes, skew point, type, tuple, normalization.
pub fn classify(h: &HopfAlgebra) -> Result<ClassificationReport> {
    let gl = group_likes(h)?;
    if !gl.certified {
        return Err(Error::pre("group-likes could not be certified complete"));
    }
    let a_idx = find_skew_point(h, &gl)?;
    let filt = coradical_filtration(h, &gl);
    if !filt.pointed || filt.rank != Some(1) {
        return Err(Error::pre(format!(
            "not pointed of rank one (filtration dims {:?}, rank {:?})",
            filt.dims(),
            filt.rank
        )));
    }
    let detection = detect_type(h, &gl, a_idx)?;
    let raw = extract_tuple(h, &gl, a_idx, &detection)?;
    // a normal form that only exists over an extension is reported, not forced
    let (tuple, steps) = match normalize_tuple(&raw) {
        Ok(norm) => (norm.tuple, norm.steps),
        Err(Error::ExtendField { min_degree, reason }) => (
            raw.clone(),
            vec![NormalizationStep {
                kind: "deferred",
                value: format!("{reason}; normal form needs GF({}^{min_degree})", raw.p()),
            }],
        ),
        Err(e) => return Err(e),
    };
    Ok(ClassificationReport {
        skew_point: gl.elements[a_idx].clone(),
        skew_index: a_idx,
        detection,
        raw_tuple: raw,
        tuple,
        steps,
    })
}

#[cfg(test)]
mod tests;
