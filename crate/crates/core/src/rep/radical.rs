//! Jacobson radical in characteristic p through integral trace forms.
//!
//! The algebra is viewed over the prime field. Starting from `I = A`, level
//! `i` keeps the `x ∈ I` with `g_i(x y) = 0` for every `y`, where `g_i(z)` is
//! the trace of the `p^i`-th power of an integral lift of left
//! multiplication by `z`, divided by `p^i`. Each level contains the
//! radical, `g_i` is additive on the previous level, and after
//! `⌊log_p dim⌋` levels the radical is reached. We stop early once a level
//! is a nilpotent ideal, since it then equals the radical.

use crate::algebra::{Algebra, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::hopfcore::nilpotent_ideal_check;
use crate::linalg::{kernel, Matrix, Subspace, Vector};

/// Restriction of scalars to the prime field: element `v` of `A` becomes the
/// vector with entry `j d + s` equal to the `s`-th coefficient of `v_j`.
struct PrimeView<'a> {
    alg: &'a StructAlgebra,
    fp: Field,
    d: usize,
    /// `t^s` for `s < d`
    powers: Vec<Elem>,
}

impl<'a> PrimeView<'a> {
    fn new(alg: &'a StructAlgebra) -> Result<Self> {
        let f = alg.field();
        let d = f.d() as usize;
        let t = if d == 1 { Elem::ONE } else { f.t() };
        Ok(PrimeView { alg, fp: Field::prime(f.p())?, d, powers: (0..d).map(|s| f.pow(t, s as u64)).collect() })
    }

    fn big_n(&self) -> usize {
        self.alg.dim * self.d
    }

    fn down(&self, v: &[Elem]) -> Vec<u32> {
        let f = self.alg.field();
        let mut out = Vec::with_capacity(self.big_n());
        for &e in v {
            out.extend(f.coeffs(e));
        }
        out
    }

    fn down_elems(&self, v: &[Elem]) -> Vector {
        self.down(v).into_iter().map(|c| self.fp.from_int(c as i64)).collect()
    }

    fn up(&self, v: &[Elem]) -> Vector {
        let f = self.alg.field();
        v.chunks(self.d)
            .map(|ch| {
                let cs: Vec<u32> = ch.iter().map(|e| e.code()).collect();
                f.from_coeffs(&cs).expect("prime field coefficients")
            })
            .collect()
    }

    /// Prime-field basis element `t^s e_j`.
    fn basis(&self, k: usize) -> Vector {
        let mut v = crate::linalg::zero_vec(self.alg.dim);
        v[k / self.d] = self.powers[k % self.d];
        v
    }

    /// Integer lift of left multiplication by `z` on the prime-field basis.
    fn left_lift(&self, z: &[Elem]) -> Vec<Vec<u64>> {
        let n = self.big_n();
        let mut m = vec![vec![0u64; n]; n];
        for k in 0..n {
            let col = self.down(&self.alg.mul(z, &self.basis(k)));
            for (r, c) in col.into_iter().enumerate() {
                m[r][k] = c as u64;
            }
        }
        m
    }
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for (i, row) in a.iter().enumerate() {
        let o = &mut out[i];
        for (k, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (oj, &y) in o.iter_mut().zip(&b[k]) {
                *oj = (*oj + x * y) % m;
            }
        }
    }
    out
}

/// `g_i(z)`: trace of `L^{p^i}` over the integers, divided by `p^i`, mod p.
fn trace_form(view: &PrimeView, z: &[Elem], i: u32) -> u32 {
    let p = view.fp.p() as u64;
    let modulus = p.pow(i + 1);
    let mut m = view.left_lift(z);
    for _ in 0..i {
        // m <- m^p
        let base = m.clone();
        let mut acc: Option<Vec<Vec<u64>>> = None;
        let mut b = base;
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => b.clone(),
                    Some(a) => mat_mul_mod(&a, &b, modulus),
                });
            }
            e >>= 1;
            if e > 0 {
                b = mat_mul_mod(&b, &b, modulus);
            }
        }
        m = acc.expect("p >= 2");
    }
    let tr = (0..m.len()).fold(0u64, |s, k| (s + m[k][k]) % modulus);
    let scale = p.pow(i);
    debug_assert_eq!(tr % scale, 0, "trace form not divisible on the previous level");
    ((tr / scale) % p) as u32
}

/// Radical without the final validation.
fn radical_raw(alg: &StructAlgebra) -> Result<Subspace> {
    let f = alg.field();
    let n = alg.dim;
    if n == 0 {
        return Ok(Subspace::zero(0));
    }
    let view = PrimeView::new(alg)?;
    let fp = &view.fp;
    let big_n = view.big_n();
    let p = f.p() as usize;
    let mut levels = 0u32;
    while p.pow(levels + 1) <= big_n {
        levels += 1;
    }
    // current level as a prime-field subspace of F_p^{big_n}
    let mut level = Subspace::full(big_n);
    for i in 0..=levels {
        let basis: Vec<Vector> = level.basis().to_vec();
        if basis.is_empty() {
            break;
        }
        let up: Vec<Vector> = basis.iter().map(|b| view.up(b)).collect();
        let g: Vec<Elem> = up.iter().map(|b| fp.from_int(trace_form(&view, b, i) as i64)).collect();
        // row (j, k) of the condition: coefficient vector c with sum_l c_l g(b_l e_k) = 0
        let mut rows = Vec::with_capacity(big_n);
        for k in 0..big_n {
            let y = view.basis(k);
            let row: Vector = up
                .iter()
                .map(|b| {
                    let prod = view.down_elems(&alg.mul(b, &y));
                    let c = level.coords(fp, &prod).expect("levels are ideals");
                    c.iter().zip(&g).fold(Elem::ZERO, |s, (&ci, &gi)| fp.mul_add(s, ci, gi))
                })
                .collect();
            rows.push(row);
        }
        let cond = Matrix::from_rows(&rows)?;
        let ker = kernel(fp, &cond);
        let next: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|c| {
                let mut v = crate::linalg::zero_vec(big_n);
                for (b, &cj) in basis.iter().zip(c) {
                    crate::linalg::axpy(fp, &mut v, cj, b);
                }
                v
            })
            .collect();
        level = Subspace::span(fp, big_n, &next);
        let over_k: Vec<Vector> = level.basis().iter().map(|b| view.up(b)).collect();
        if nilpotent_ideal_check(alg, &over_k).index.is_some() {
            break;
        }
    }
    let over_k: Vec<Vector> = level.basis().iter().map(|b| view.up(b)).collect();
    Ok(Subspace::span(f, n, &over_k))
}

/// Jacobson radical of a finite-dimensional algebra over GF(p^d), checked
/// to be a nilpotent ideal with semisimple quotient.
pub fn radical(alg: &StructAlgebra) -> Result<Subspace> {
    let j = radical_raw(alg)?;
    let nil = nilpotent_ideal_check(alg, j.basis());
    if nil.index.is_none() || nil.ideal != j {
        return Err(Error::invalid("radical candidate is not a nilpotent ideal"));
    }
    if j.dim() > 0 {
        let q = alg.quotient(&j)?;
        if radical_raw(&q)?.dim() != 0 {
            return Err(Error::invalid("quotient by the radical candidate is not semisimple"));
        }
    }
    Ok(j)
}

/// Nilpotency index of the radical (`J^e = 0`).
pub fn radical_index(alg: &StructAlgebra, j: &Subspace) -> usize {
    nilpotent_ideal_check(alg, j.basis()).index.unwrap_or(0)
}
