//! Normal-form construction on the basis `g x^i`, stored at index `i |G| + g`.

use std::sync::Arc;

use super::{validate_tuple, Tuple, TupleSpec, Variant};
use crate::algebra::{sparse_from_dense, sparse_normalize, Algebra, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::group::GroupSpec;
use crate::hopfcore::{HopfAlgebra, SparseTensor};
use crate::linalg::{unit_vec, zero_vec, Vector};
use crate::qcomb::{coef_closed, q_binomial, CoefQuery};

/// Rewriting data: how `x` passes group elements and how `x^n` reduces.
struct Engine<'a> {
    t: &'a Tuple,
    gs: usize,
    n: usize,
    chi_inv: Vec<Elem>,
    /// `c(h^-1)`
    c_inv: Vec<Elem>,
    /// `x^n = sum_t sum_(k, b) b k x^t`
    relation: Vec<Vec<(usize, Elem)>>,
}

impl<'a> Engine<'a> {
    fn new(t: &'a Tuple) -> Engine<'a> {
        let f = &*t.field;
        let g = &t.group;
        let gs = g.order();
        let n = t.n();
        let chi_inv = t.chi.iter().map(|&v| f.inv(v).expect("characters are invertible")).collect();
        let c_inv = (0..gs).map(|h| t.c[g.inv(h)]).collect();
        let mut relation = vec![Vec::new(); n];
        let mut push_group_term = |s: Elem, e: usize| {
            if !s.is_zero() {
                relation[0].push((g.pow(g.a(), e as i64), s));
                relation[0].push((0, f.neg(s)));
            }
        };
        match t.variant {
            Variant::R => {
                push_group_term(t.alpha[0], n);
                let big_n = t.big_n() as usize;
                for (i, &ai) in t.alpha[1..].iter().enumerate() {
                    if !ai.is_zero() {
                        relation[big_n * (t.p() as usize).pow(i as u32)].push((0, ai));
                    }
                }
            }
            Variant::F => {
                push_group_term(t.alpha[0], n);
                if !t.alpha[1].is_zero() {
                    relation[1].push((0, t.alpha[1]));
                }
            }
            Variant::E => {
                push_group_term(t.alpha[0], n);
                relation[1].push((0, Elem::ONE));
            }
        }
        let relation = relation.into_iter().map(|r| sparse_normalize(f, r)).collect();
        Engine { t, gs, n, chi_inv, c_inv, relation }
    }

    fn field(&self) -> &Field {
        &self.t.field
    }

    fn idx(&self, g: usize, i: usize) -> usize {
        i * self.gs + g
    }

    /// `x v` for `v` in normal form.
    fn x_left(&self, v: &[Elem]) -> Vector {
        let f = self.field();
        let g = &self.t.group;
        let a = g.a();
        let mut out = zero_vec(v.len());
        let mut overflow = vec![Elem::ZERO; self.gs];
        for (b, &coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (h, m) = (b % self.gs, b / self.gs);
            // x h = chi(h)^-1 h x + c(h^-1) (h a - h)
            let lead = f.mul(coef, self.chi_inv[h]);
            if m + 1 == self.n {
                overflow[h] = f.add(overflow[h], lead);
            } else {
                let k = self.idx(h, m + 1);
                out[k] = f.add(out[k], lead);
            }
            let s = f.mul(coef, self.c_inv[h]);
            if !s.is_zero() {
                let k1 = self.idx(g.mul(h, a), m);
                out[k1] = f.add(out[k1], s);
                let k0 = self.idx(h, m);
                out[k0] = f.sub(out[k0], s);
            }
        }
        for (h, &coef) in overflow.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (tdeg, terms) in self.relation.iter().enumerate() {
                for &(k, b) in terms {
                    let i = self.idx(g.mul(h, k), tdeg);
                    out[i] = f.mul_add(out[i], coef, b);
                }
            }
        }
        out
    }

    /// `(g x^i)(h x^j)` in normal form.
    fn product(&self, left: usize, right: usize) -> Vector {
        let grp = &self.t.group;
        let (g, i) = (left % self.gs, left / self.gs);
        let dim = self.gs * self.n;
        let mut v = unit_vec(dim, right);
        for _ in 0..i {
            v = self.x_left(&v);
        }
        let mut out = zero_vec(dim);
        for (b, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[self.idx(grp.mul(g, b % self.gs), b / self.gs)] = c;
            }
        }
        out
    }
}

fn labels(t: &Tuple, n: usize) -> Vec<String> {
    let g = &t.group;
    let mut out = Vec::with_capacity(g.order() * n);
    for i in 0..n {
        for h in 0..g.order() {
            let xpart = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            out.push(match (h, i) {
                (_, 0) => g.name(h).to_string(),
                (0, _) => xpart,
                _ => format!("{}*{xpart}", g.name(h)),
            });
        }
    }
    out
}

/// `Δ(x^i)` as `(left, right, coef)` with left `x^u`, right a dense vector.
fn delta_x_power(t: &Tuple, alg: &StructAlgebra, e: &Engine, i: usize) -> Result<Vec<(usize, Vector, Elem)>> {
    let f = &*t.field;
    let g = &t.group;
    let dim = alg.dim;
    let mut out = Vec::new();
    match t.variant {
        Variant::R | Variant::F => {
            // vu = q^-1 uv for u = x (x) a, v = 1 (x) x
            let qi = f.inv(t.q()).unwrap();
            for j in 0..=i {
                let coef = q_binomial(f, i, j, qi)?;
                if !coef.is_zero() {
                    let right = unit_vec(dim, e.idx(g.pow(g.a(), j as i64), i - j));
                    out.push((j, right, coef));
                }
            }
        }
        Variant::E => {
            for u in 0..=i {
                for z in 0..=i {
                    for j in 0..=i {
                        let coef = coef_closed(f, &CoefQuery::H { k: i, i: u, z, j })?;
                        if coef.is_zero() {
                            continue;
                        }
                        let right =
                            alg.mul(&unit_vec(dim, e.idx(0, z)), &unit_vec(dim, e.idx(g.pow(g.a(), j as i64), 0)));
                        out.push((u, right, coef));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Builds the family algebra without checking side conditions. The result
/// may fail the Hopf axioms; [`build_family`] is the checked entry point.
pub fn build_unchecked(t: &Tuple) -> Result<HopfAlgebra> {
    let f = t.field.clone();
    let g = &t.group;
    let gs = g.order();
    let n = t.n();
    let dim = gs * n;
    let e = Engine::new(t);
    let alg = StructAlgebra::from_basis_product(f.clone(), dim, unit_vec(dim, 0), |i, j| e.product(i, j))?;

    let dd = dim as u64;
    let mut comult: Vec<SparseTensor> = vec![Vec::new(); dim];
    for i in 0..n {
        let dx = delta_x_power(t, &alg, &e, i)?;
        for h in 0..gs {
            let mut terms = Vec::new();
            for (u, right, coef) in &dx {
                let left = e.idx(h, *u);
                let right = alg.mul(&unit_vec(dim, h), right);
                for (k, &rc) in right.iter().enumerate() {
                    if !rc.is_zero() {
                        terms.push((left as u64 * dd + k as u64, f.mul(*coef, rc)));
                    }
                }
            }
            comult[e.idx(h, i)] = sparse_normalize(&f, terms);
        }
    }

    let counit: Vector = (0..dim).map(|b| if b < gs { Elem::ONE } else { Elem::ZERO }).collect();

    // S(g x^i) = (-x a^-1)^i g^-1
    let x = unit_vec(dim, e.idx(0, 1));
    let a_inv = unit_vec(dim, g.inv(g.a()));
    let y = crate::linalg::vec_scale(&f, f.neg(Elem::ONE), &alg.mul(&x, &a_inv));
    let mut antipode = vec![Vec::new(); dim];
    let mut power = alg.one();
    for i in 0..n {
        for h in 0..gs {
            antipode[e.idx(h, i)] = sparse_from_dense(&alg.mul(&power, &unit_vec(dim, g.inv(h))));
        }
        power = alg.mul(&power, &y);
    }
    HopfAlgebra::new(alg, comult, counit, antipode, Some(labels(t, n)))
}

/// Builds `H_R`, `H_F` or `H_E` from a tuple satisfying its side conditions.
pub fn build_family(t: &Tuple) -> Result<HopfAlgebra> {
    let bad = validate_tuple(t);
    if !bad.is_empty() {
        let msg: Vec<String> = bad.iter().map(|v| v.to_string()).collect();
        return Err(Error::pre(msg.join("; ")));
    }
    build_unchecked(t)
}

/// Taft algebra: cyclic group of order `N` with `χ(a) = q`, `x^N = 0`.
pub fn taft(field: Arc<Field>, q: Elem) -> Result<HopfAlgebra> {
    build_family(&taft_tuple(field, q)?)
}

pub fn taft_tuple(field: Arc<Field>, q: Elem) -> Result<Tuple> {
    let big_n = field.mult_order(q).ok_or_else(|| Error::invalid("q must be nonzero"))?;
    let spec = TupleSpec {
        p: field.p(),
        field_degree: field.d(),
        variant: Variant::R,
        group: GroupSpec::Cyclic { orders: vec![big_n as u32], a: vec![1] },
        chi: Vec::new(),
        c: Vec::new(),
        alpha: Vec::new(),
    };
    let mut t = Tuple::from_spec_in(&spec, field.clone())?;
    t.chi = (0..big_n).map(|k| field.pow(q, k)).collect();
    Ok(t)
}

/// Third-type tuple on the cyclic group of order `m` with `c(a) = 1`, `α = 0`.
pub fn third_type_cyclic(field: Arc<Field>, m: u32) -> Result<Tuple> {
    let spec = TupleSpec {
        p: field.p(),
        field_degree: field.d(),
        variant: Variant::E,
        group: GroupSpec::Cyclic { orders: vec![m], a: vec![1] },
        chi: Vec::new(),
        c: vec![super::Scalar::Int(1)],
        alpha: Vec::new(),
    };
    Tuple::from_spec_in(&spec, field)
}
