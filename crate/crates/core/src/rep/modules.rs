//! Modules given by action matrices, simple modules and projective covers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::radical::{radical, radical_index};
use crate::algebra::{Algebra, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{axpy, is_zero_vec, zero_vec, Matrix, Subspace, Vector};
use crate::linalg::{lift_idempotent, split_by_element, split_idempotents, SplitOutcome};

/// Seed for the random elements used when no basis element splits a corner.
pub const SPLIT_SEED: u64 = 0x5eed;

/// A left module: one action matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub dim: usize,
    pub action: Vec<Matrix>,
    pub origin: String,
    /// For left ideals: the module basis as elements of the algebra.
    pub embedding: Option<Vec<Vector>>,
}

impl ModulePresentation {
    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, f: &Field, v: &[Elem]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in m.data.iter_mut().zip(&self.action[i].data) {
                *o = f.mul_add(*o, c, x);
            }
        }
        m
    }

    /// Action on basis pairs respects the product and the unit.
    pub fn respects(&self, alg: &StructAlgebra) -> bool {
        let f = alg.field();
        if self.act(f, &alg.unit) != Matrix::identity(self.dim) {
            return false;
        }
        let n = alg.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.act(f, &alg.basis_product(i, j));
                self.action[i].mul(f, &self.action[j]).map(|m| m == lhs).unwrap_or(false)
            })
        })
    }

    /// `span { v w : v ∈ span(elems), w ∈ sub }`.
    pub fn apply_span(&self, f: &Field, elems: &[Vector], sub: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim);
        for e in elems {
            let m = self.act(f, e);
            for w in sub.basis() {
                let v = m.mul_vec(f, w);
                if !is_zero_vec(&v) {
                    out.insert(f, &v);
                }
            }
        }
        out
    }

    /// Element of the algebra for module coordinates `c`, for left ideals.
    pub fn to_algebra(&self, f: &Field, c: &[Elem]) -> Option<Vector> {
        let emb = self.embedding.as_ref()?;
        let mut v = zero_vec(emb.first().map_or(0, |e| e.len()));
        for (b, &ci) in emb.iter().zip(c) {
            axpy(f, &mut v, ci, b);
        }
        Some(v)
    }
}

/// The left ideal `A gens` as a module, with basis the echelon basis of the ideal.
pub fn left_ideal_module(alg: &StructAlgebra, gens: &[Vector], origin: impl Into<String>) -> ModulePresentation {
    let f = alg.field();
    let n = alg.dim;
    let mut ideal = Subspace::zero(n);
    for g in gens {
        for i in 0..n {
            let v = alg.mul(&alg.basis(i), g);
            if !is_zero_vec(&v) {
                ideal.insert(f, &v);
            }
        }
    }
    let basis = ideal.basis().to_vec();
    let m = basis.len();
    let action = (0..n)
        .map(|i| {
            let cols: Vec<Vector> = basis
                .iter()
                .map(|b| ideal.coords(f, &alg.mul(&alg.basis(i), b)).expect("left ideal is closed"))
                .collect();
            Matrix::from_cols(m, &cols)
        })
        .collect();
    ModulePresentation { dim: m, action, origin: origin.into(), embedding: Some(basis) }
}

/// Simple module data: which block of the semisimple quotient it belongs to.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub module: ModulePresentation,
    /// Preimage in `A` of the central primitive idempotent of `A/J` acting
    /// as the identity on this module.
    pub central: Vector,
    /// Idempotent of `A` whose projective cover `A e` has this head.
    pub primitive: Vector,
    /// Scalars of the basis elements on a one-dimensional module.
    pub scalars: Option<Vec<Elem>>,
}

/// Radical, semisimple quotient and one simple module per isomorphism class.
#[derive(Clone, Debug)]
pub struct RepData {
    pub radical: Subspace,
    pub radical_index: usize,
    pub simples: Vec<SimpleModule>,
}

/// Lift of a quotient vector to `A` through the complement coordinates.
fn lift(j: &Subspace, v: &[Elem]) -> Vector {
    let mut out = zero_vec(j.ambient);
    for (&c, &x) in j.non_pivots().iter().zip(v) {
        out[c] = x;
    }
    out
}

fn corner_dim(q: &StructAlgebra, e: &[Elem]) -> usize {
    let f = q.field();
    let mut s = Subspace::zero(q.dim);
    for i in 0..q.dim {
        let v = q.mul(&q.mul(e, &q.basis(i)), e);
        if !is_zero_vec(&v) {
            s.insert(f, &v);
        }
    }
    s.dim()
}

/// A primitive idempotent below the central idempotent `e` of the
/// semisimple algebra `q`, with a split endomorphism ring.
fn primitive_below(q: &StructAlgebra, e: &[Elem], rng: &mut ChaCha8Rng) -> Result<Vector> {
    let f = q.field();
    let mut e = e.to_vec();
    let elems: Vec<Elem> = f.elements().collect();
    'refine: loop {
        if corner_dim(q, &e) == 1 {
            return Ok(e);
        }
        let mut no_roots = None;
        let basis = (0..q.dim).map(|i| q.basis(i));
        let random = (0..256).map(|_| (0..q.dim).map(|_| elems[rng.gen_range(0..elems.len())]).collect::<Vector>());
        for b in basis.chain(random) {
            match split_by_element(q, &e, &b) {
                SplitOutcome::Split(parts) => {
                    e = parts.into_iter().min_by_key(|p| corner_dim(q, p)).unwrap();
                    continue 'refine;
                }
                SplitOutcome::Local(_) => {}
                SplitOutcome::NoRoots(d) => no_roots = Some(d),
            }
        }
        let degs = no_roots.unwrap_or_default();
        let l = degs.iter().fold(1u64, |a, &b| crate::field::lcm(a, b as u64)) as u32;
        return Err(Error::ExtendField {
            min_degree: f.d() * l.max(2),
            reason: "a simple component of A/J is not split over this field".into(),
        });
    }
}

/// Radical, simple modules and projective-cover idempotents.
pub fn analyze(alg: &StructAlgebra) -> Result<RepData> {
    analyze_seeded(alg, SPLIT_SEED)
}

/// As `analyze`, with the seed of the random splitting elements. The seed
/// only changes the chosen primitive idempotents and module bases.
pub fn analyze_seeded(alg: &StructAlgebra, seed: u64) -> Result<RepData> {
    let f = alg.field();
    let j = radical(alg)?;
    let idx = radical_index(alg, &j);
    let q = alg.quotient(&j)?;
    let center = q.center();
    let centrals = split_idempotents(&q, &q.unit, center.basis())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut simples = Vec::with_capacity(centrals.len());
    for (k, eps) in centrals.iter().enumerate() {
        let prim = primitive_below(&q, eps, &mut rng)?;
        let mut m = left_ideal_module(&q, std::slice::from_ref(&prim), format!("S{}", k + 1));
        // act through the projection A -> A/J
        m.action = (0..alg.dim).map(|i| m.act(f, &j.quotient_coords(f, &alg.basis(i)))).collect();
        m.embedding = None;
        let scalars = (m.dim == 1).then(|| m.action.iter().map(|a| a.get(0, 0)).collect());
        let primitive = lift_idempotent(alg, &lift(&j, &prim))?;
        simples.push(SimpleModule { module: m, central: lift(&j, eps), primitive, scalars });
    }
    Ok(RepData { radical: j, radical_index: idx, simples })
}

/// Radical series of a module with each layer decomposed into simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    /// `J^k M` for `k = 0, 1, …` down to zero.
    pub series: Vec<Subspace>,
    /// Simple indices of each layer `J^k M / J^{k+1} M`, with multiplicity.
    pub layers: Vec<Vec<usize>>,
    pub length: usize,
    pub uniserial: bool,
    /// `{v : J v = 0}`
    pub socle: Subspace,
    pub socle_factors: Vec<usize>,
}

/// Multiplicities of the simples in a semisimple section `w / w_low`.
fn section_factors(f: &Field, m: &ModulePresentation, data: &RepData, w: &Subspace, w_low: &Subspace) -> Vec<usize> {
    let mut out = Vec::new();
    for (k, s) in data.simples.iter().enumerate() {
        let e = m.act(f, &s.central);
        let mut span = w_low.clone();
        for v in w.basis() {
            span.insert(f, &e.mul_vec(f, v));
        }
        let mult = (span.dim() - w_low.dim()) / s.module.dim;
        out.extend(std::iter::repeat_n(k, mult));
    }
    out
}

pub fn composition_series(alg: &StructAlgebra, data: &RepData, m: &ModulePresentation) -> CompositionReport {
    let f = alg.field();
    let jb = data.radical.basis().to_vec();
    let mut series = vec![Subspace::full(m.dim)];
    loop {
        let next = m.apply_span(f, &jb, series.last().unwrap());
        let done = next.dim() == 0;
        series.push(next);
        if done {
            break;
        }
    }
    let layers: Vec<Vec<usize>> = series.windows(2).map(|w| section_factors(f, m, data, &w[0], &w[1])).collect();
    let length = layers.iter().map(|l| l.len()).sum();
    let uniserial = layers.iter().all(|l| l.len() == 1);
    // socle: common kernel of the radical's action
    let mut rows = Vec::new();
    for e in &jb {
        let a = m.act(f, e);
        for r in 0..m.dim {
            rows.push(a.row(r).to_vec());
        }
    }
    let socle = if rows.is_empty() {
        Subspace::full(m.dim)
    } else {
        crate::linalg::kernel(f, &Matrix::from_rows(&rows).expect("equal row lengths"))
    };
    let socle_factors = section_factors(f, m, data, &socle, &Subspace::zero(m.dim));
    CompositionReport { series, layers, length, uniserial, socle, socle_factors }
}

/// Projective cover `A e` of each simple.
pub fn projective_covers(alg: &StructAlgebra, data: &RepData) -> Vec<ModulePresentation> {
    data.simples
        .iter()
        .enumerate()
        .map(|(k, s)| left_ideal_module(alg, std::slice::from_ref(&s.primitive), format!("P{}", k + 1)))
        .collect()
}

/// `C[i][j]` = multiplicity of simple `j` in the projective cover of simple `i`.
pub fn cartan_matrix(alg: &StructAlgebra, data: &RepData, projectives: &[ModulePresentation]) -> Vec<Vec<usize>> {
    let s = data.simples.len();
    projectives
        .iter()
        .map(|p| {
            let mut row = vec![0usize; s];
            for l in composition_series(alg, data, p).layers {
                for k in l {
                    row[k] += 1;
                }
            }
            row
        })
        .collect()
}
