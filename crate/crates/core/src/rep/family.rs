//! Representation data specific to family algebras on the basis `g x^i`.

use std::sync::Arc;

use serde::Serialize;

use super::blocks::{block_identify, BlockDecomposition, BlockTag};
use super::modules::{analyze, composition_series, left_ideal_module, CompositionReport, ModulePresentation, RepData};
use crate::algebra::{Algebra, StructAlgebra};
use crate::error::{Error, Result};
use crate::families::{build_family, third_type_cyclic, Tuple, Variant};
use crate::field::{lcm, Elem, Field};
use crate::group::{character_idempotent, linear_characters, GroupMap};
use crate::hopfcore::HopfAlgebra;
use crate::linalg::{axpy, is_zero_vec, split_idempotents, unit_vec, vec_scale, zero_vec, Subspace, Vector};

fn x_power(t: &Tuple, dim: usize, j: usize) -> Vector {
    unit_vec(dim, j * t.group.order())
}

fn embed_group_element(dim: usize, v: &[Elem]) -> Vector {
    let mut out = zero_vec(dim);
    out[..v.len()].copy_from_slice(v);
    out
}

/// The linear characters of `G`, or the extension needed to see all of them.
pub fn all_characters(t: &Tuple) -> Result<Vec<GroupMap>> {
    let f = &*t.field;
    let rep = linear_characters(&t.group, f);
    if !rep.complete {
        return Err(Error::ExtendField {
            min_degree: lcm(rep.suggested_degree as u64, f.d() as u64) as u32,
            reason: "not every linear character of G takes values in the field".into(),
        });
    }
    Ok(rep.characters)
}

#[derive(Clone, Debug)]
pub struct FamilyProjective {
    pub character: GroupMap,
    pub idempotent: Vector,
    pub module: ModulePresentation,
    pub composition: CompositionReport,
    /// Character of `G` on each radical layer (one-dimensional layers only).
    pub layer_characters: Vec<Option<GroupMap>>,
    /// Layer `i` carries `λ χ^i` for every `i`.
    pub factors_in_order: bool,
    /// `J^i (H e_λ) = span { x^j e_λ : j ≥ i }` for every `i`.
    pub flag_matches: bool,
}

fn hypotheses(t: &Tuple) -> Result<()> {
    if !t.is_nilpotent_type() {
        return Err(Error::pre("hypothesis violated: x is not nilpotent"));
    }
    if (t.group.order() as u64).is_multiple_of(t.p() as u64) {
        return Err(Error::pre(format!("hypothesis violated: p = {} divides |G| = {}", t.p(), t.group.order())));
    }
    if !t.group.is_abelian() {
        return Err(Error::pre("hypothesis violated: G is not abelian"));
    }
    Ok(())
}

/// `H e_λ` for every character `λ` of an abelian group of order prime to
/// `p`, in a nilpotent family algebra.
pub fn family_projectives(t: &Tuple, h: &HopfAlgebra, data: &RepData) -> Result<Vec<FamilyProjective>> {
    hypotheses(t)?;
    let f = &*t.field;
    let gs = t.group.order();
    let n = t.n();
    let dim = h.dim();
    let chars = all_characters(t)?;
    let mut out = Vec::with_capacity(chars.len());
    for (k, lambda) in chars.into_iter().enumerate() {
        let e = embed_group_element(dim, &character_idempotent(&t.group, f, &lambda)?);
        let module = left_ideal_module(&h.alg, std::slice::from_ref(&e), format!("He[{k}]"));
        let composition = composition_series(&h.alg, data, &module);
        let layer_characters: Vec<Option<GroupMap>> = composition
            .layers
            .iter()
            .map(|l| match l.as_slice() {
                [s] => data.simples[*s].scalars.as_ref().map(|v| v[..gs].to_vec()),
                _ => None,
            })
            .collect();
        let factors_in_order = module.dim == n
            && layer_characters.len() == n
            && layer_characters.iter().enumerate().all(|(i, c)| {
                let want: GroupMap = (0..gs).map(|g| f.mul(lambda[g], f.pow(t.chi[g], i as u64))).collect();
                c.as_ref() == Some(&want)
            });
        let flag_matches = (0..composition.series.len()).all(|i| {
            let mut flag = Subspace::zero(dim);
            for j in i..n {
                flag.insert(f, &h.mul(&x_power(t, dim, j), &e));
            }
            let layer: Vec<Vector> =
                composition.series[i].basis().iter().map(|c| module.to_algebra(f, c).unwrap()).collect();
            flag == Subspace::span(f, dim, &layer)
        });
        out.push(FamilyProjective {
            character: lambda,
            idempotent: e,
            module,
            composition,
            layer_characters,
            factors_in_order,
            flag_matches,
        });
    }
    Ok(out)
}

/// Block index containing the idempotent `e` (`ε e = e`).
pub fn block_of(alg: &StructAlgebra, dec: &BlockDecomposition, e: &[Elem]) -> Option<usize> {
    dec.blocks.iter().position(|b| alg.mul(&b.idempotent, e) == e)
}

/// Whether `e_λ`, `e_μ` share a block exactly when `μ = λ χ^i` for some `i`.
pub fn blocks_match_orbits(t: &Tuple, h: &HopfAlgebra, dec: &BlockDecomposition) -> Result<bool> {
    hypotheses(t)?;
    let f = &*t.field;
    let gs = t.group.order();
    let chars = all_characters(t)?;
    let block: Vec<Option<usize>> = chars
        .iter()
        .map(|l| Ok(block_of(&h.alg, dec, &embed_group_element(h.dim(), &character_idempotent(&t.group, f, l)?))))
        .collect::<Result<_>>()?;
    if block.iter().any(|b| b.is_none()) {
        return Ok(false);
    }
    // the orbit runs over all powers of χ, whose order may exceed N
    let chi_order = (0..gs).map(|g| f.mult_order(t.chi[g]).unwrap_or(1)).fold(1u64, crate::field::lcm);
    let same_orbit =
        |l: &GroupMap, m: &GroupMap| (0..chi_order).any(|i| (0..gs).all(|g| m[g] == f.mul(l[g], f.pow(t.chi[g], i))));
    for (i, l) in chars.iter().enumerate() {
        for (j, m) in chars.iter().enumerate() {
            if (block[i] == block[j]) != same_orbit(l, m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A block of `k[ker χ]` inside a non-nilpotent first-type algebra.
#[derive(Clone, Debug)]
pub struct KernelBlock {
    pub idempotent: Vector,
    /// `a^N e = w e` when `a^N` acts as a scalar.
    pub w: Option<Elem>,
    /// Block of `H` equal to `H e`, if `e` is a block idempotent.
    pub h_block: Option<usize>,
    pub tag: Option<BlockTag>,
}

/// `Z = ker χ`, the blocks of `kZ`, the scalar `a^N` on each and the
/// identification of the corresponding block of `H`.
pub fn kernel_blocks(t: &Tuple, h: &HopfAlgebra, dec: &BlockDecomposition) -> Result<(Vec<usize>, Vec<KernelBlock>)> {
    if t.variant != Variant::R || t.is_nilpotent_type() {
        return Err(Error::pre("kernel blocks are defined for non-nilpotent first-type algebras"));
    }
    let f = &*t.field;
    let g = &t.group;
    let dim = h.dim();
    let z: Vec<usize> = (0..g.order()).filter(|&x| t.chi[x] == Elem::ONE).collect();
    let gens: Vec<Vector> = z.iter().map(|&x| unit_vec(dim, x)).collect();
    let idems = split_idempotents(&h.alg, &h.one(), &gens)?;
    let a_n = unit_vec(dim, g.pow(g.a(), t.big_n() as i64));
    let mut out = Vec::with_capacity(idems.len());
    for e in idems {
        let prod = h.mul(&a_n, &e);
        let lead = e.iter().position(|x| !x.is_zero()).expect("nonzero idempotent");
        let w = f.div(prod[lead], e[lead]).unwrap();
        let w = (vec_scale(f, w, &e) == prod).then_some(w);
        let h_block = dec.blocks.iter().position(|b| b.idempotent == e);
        let tag = match h_block {
            Some(b) => Some(block_identify(&h.alg, dec, &dec.blocks[b], t.q())?),
            None => None,
        };
        out.push(KernelBlock { idempotent: e, w, h_block, tag });
    }
    Ok((z, out))
}

/// `k[x] / (x^p - x)` with basis `1, x, …, x^{p-1}` and its Lagrange
/// idempotents `e_c = Π_{d ≠ c} (x - d) / (c - d)`, `c ∈ F_p`.
pub fn kx_decompose(p: u32, field: Arc<Field>) -> Result<(StructAlgebra, Vec<(Elem, Vector)>)> {
    let f = field.clone();
    if field.p() != p {
        return Err(Error::invalid(format!("field has characteristic {}, not {p}", field.p())));
    }
    let n = p as usize;
    let alg = StructAlgebra::from_basis_product(field, n, unit_vec(n, 0), |i, j| {
        let k = i + j;
        unit_vec(n, if k < n { k } else { k - (n - 1) })
    })?;
    let x = unit_vec(n, 1);
    let idems = (0..p as i64)
        .map(|c| {
            let c = f.from_int(c);
            let mut e = alg.one();
            for d in (0..p as i64).map(|d| f.from_int(d)).filter(|&d| d != c) {
                let mut lin = vec_scale(&f, Elem::ONE, &x);
                lin[0] = f.sub(lin[0], d);
                e = vec_scale(&f, f.inv(f.sub(c, d)).unwrap(), &alg.mul(&e, &lin));
            }
            (c, e)
        })
        .collect();
    Ok((alg, idems))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubhopfLayer {
    pub a: String,
    pub x: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubhopfProjective {
    pub c: String,
    pub dim: usize,
    /// Scalars of `a` and `x` on `P^i / P^{i+1}`.
    pub layers: Vec<SubhopfLayer>,
    /// Each `P^i` is a submodule, the factors are one-dimensional, `a`
    /// acts as 1 and `x` as `c - i` on the `i`-th.
    pub flag_ok: bool,
    pub uniserial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubhopfReport {
    pub p: u32,
    pub r: u32,
    pub dim: usize,
    pub projectives: Vec<SubhopfProjective>,
    pub idempotents_complete: bool,
    pub blocks: usize,
}

/// Third-type algebra on the cyclic group of order `p^r` with `c(a) = 1`,
/// `α = 0`: the projectives `A e_c` and their flags `⟨y^j e_c : j ≥ i⟩`,
/// `y = 1 - a`.
pub fn subhopf_report(p: u32, r: u32, field: Arc<Field>) -> Result<SubhopfReport> {
    let f = field.clone();
    let order = p.pow(r);
    let t = third_type_cyclic(field.clone(), order)?;
    let h = build_family(&t)?;
    let dim = h.dim();
    let (_, kx) = kx_decompose(p, field)?;
    let eval = |coeffs: &[Elem]| {
        let mut out = zero_vec(dim);
        for (k, &c) in coeffs.iter().enumerate() {
            axpy(&f, &mut out, c, &x_power(&t, dim, k));
        }
        out
    };
    let a = unit_vec(dim, t.group.a());
    let x = x_power(&t, dim, 1);
    let mut y = h.one();
    axpy(&f, &mut y, f.neg(Elem::ONE), &a);
    let data = analyze(&h.alg)?;
    let dec = super::blocks::blocks_with(&h.alg, data.clone())?;
    let mut sum = zero_vec(dim);
    let mut projectives = Vec::new();
    for (c, poly) in &kx {
        let e = eval(poly);
        axpy(&f, &mut sum, Elem::ONE, &e);
        let module = left_ideal_module(&h.alg, std::slice::from_ref(&e), format!("Ae[{}]", f.format(*c)));
        // flag vectors y^j e_c
        let mut vecs = Vec::new();
        let mut cur = e.clone();
        for _ in 0..order {
            vecs.push(cur.clone());
            cur = h.mul(&y, &cur);
        }
        let flags: Vec<Subspace> = (0..=order as usize).map(|i| Subspace::span(&f, dim, &vecs[i..])).collect();
        let mut flag_ok = flags[0].dim() == module.dim && is_zero_vec(&cur);
        let mut layers = Vec::new();
        for i in 0..order as usize {
            flag_ok &= flags[i].dim() == flags[i + 1].dim() + 1;
            let stable = flags[i]
                .basis()
                .iter()
                .all(|v| flags[i].contains(&f, &h.mul(&a, v)) && flags[i].contains(&f, &h.mul(&x, v)));
            flag_ok &= stable;
            let scalar = |g: &Vector| {
                // g v = s v mod P^{i+1}
                let gv = h.mul(g, &vecs[i]);
                f.elements().find(|&s| {
                    let mut d = gv.clone();
                    axpy(&f, &mut d, f.neg(s), &vecs[i]);
                    flags[i + 1].contains(&f, &d)
                })
            };
            let (sa, sx) = (scalar(&a), scalar(&x));
            let want_x = f.sub(*c, f.from_int(i as i64));
            flag_ok &= sa == Some(Elem::ONE) && sx == Some(want_x);
            let show = |s: Option<Elem>| s.map_or("none".to_string(), |s| f.format(s));
            layers.push(SubhopfLayer { a: show(sa), x: show(sx) });
        }
        let uniserial = composition_series(&h.alg, &data, &module).uniserial;
        projectives.push(SubhopfProjective { c: f.format(*c), dim: module.dim, layers, flag_ok, uniserial });
    }
    Ok(SubhopfReport { p, r, dim, projectives, idempotents_complete: sum == h.one(), blocks: dec.blocks.len() })
}

/// `G / ker c` for a third-type tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThirdTypeQuotient {
    pub kernel_order: usize,
    pub quotient_order: usize,
    pub elementary_abelian: bool,
    /// When `p^2` divides the order of `a`: the quotient is cyclic of order
    /// `p` generated by the class of `a`.
    pub cyclic_by_a: Option<bool>,
}

pub fn third_type_quotient(t: &Tuple) -> Result<ThirdTypeQuotient> {
    if t.variant != Variant::E {
        return Err(Error::pre("defined for third-type tuples"));
    }
    let g = &t.group;
    let p = t.p() as usize;
    let in_ker: Vec<bool> = (0..g.order()).map(|x| t.c[x].is_zero()).collect();
    let kernel_order = in_ker.iter().filter(|&&b| b).count();
    let quotient_order = g.order() / kernel_order;
    let elementary_abelian = (0..g.order())
        .all(|x| in_ker[g.pow(x, p as i64)] && (0..g.order()).all(|y| in_ker[g.mul(g.mul(x, y), g.inv(g.mul(y, x)))]));
    let ord_a = g.element_order(g.a());
    let cyclic_by_a = ord_a.is_multiple_of(p * p).then(|| quotient_order == p && !in_ker[g.a()]);
    Ok(ThirdTypeQuotient { kernel_order, quotient_order, elementary_abelian, cyclic_by_a })
}
