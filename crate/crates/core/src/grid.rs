//! The tuple grid swept by the acceptance suite and the `grid` command:
//! groups of order at most 16, `p ∈ {2, 3, 5}`, degree `n ≤ 5`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, iso_tuples, Verdict};
use crate::error::Error;
use crate::families::{
    build_family, build_smash_oracle, normalize_tuple, validate_tuple, Scalar, Tuple, TupleSpec, Variant,
};
use crate::field::{Elem, Field};
use crate::group::{linear_characters, Group, GroupSpec};
use crate::hopfcore::{coradical_filtration, group_likes, verify_hopf};
use crate::rep::{analyze, blocks_match_orbits, blocks_with, family_projectives};

pub const GRID_PRIMES: [u32; 3] = [2, 3, 5];
pub const MAX_GROUP_ORDER: usize = 16;
pub const MAX_DEGREE: usize = 5;
/// Field degrees above this are not used to realise characters.
pub const MAX_FIELD_DEGREE: u32 = 4;

/// Abelian groups as cyclic factor orders.
const CYCLIC_SHAPES: &[&[u32]] =
    &[&[1], &[2], &[3], &[4], &[2, 2], &[5], &[6], &[8], &[2, 4], &[9], &[3, 3], &[10], &[12], &[15], &[16], &[4, 4]];

/// Dihedral group of order 8 as a table: `r^i s^j` at index `i + 4 j`.
pub fn dihedral8() -> Vec<Vec<usize>> {
    let idx = |i: usize, j: usize| (i % 4) + 4 * j;
    (0..8)
        .map(|x| {
            let (i, j) = (x % 4, x / 4);
            (0..8)
                .map(|y| {
                    let (k, l) = (y % 4, y / 4);
                    // r^i s^j r^k s^l = r^(i ± k) s^(j + l)
                    let rk = if j == 0 { i + k } else { i + 4 - k };
                    idx(rk, (j + l) % 2)
                })
                .collect()
        })
        .collect()
}

struct GroupCase {
    spec_for: Box<dyn Fn(usize) -> GroupSpec + Send + Sync>,
    group: Group,
    a_choices: Vec<usize>,
    /// Generator count for per-generator `c` values (cyclic products only).
    gens: Option<usize>,
}

fn cyclic_case(orders: &[u32]) -> GroupCase {
    let orders = orders.to_vec();
    let g = Group::cyclic_product(&orders, &[]).unwrap();
    let word = |x: usize, orders: &[u32]| -> Vec<i64> {
        let mut rest = x;
        orders
            .iter()
            .map(|&m| {
                let e = rest % m as usize;
                rest /= m as usize;
                e as i64
            })
            .collect()
    };
    // identity, the first generator and its p-power-order powers, the last generator
    let mut a_choices = vec![0usize];
    let first = g.generators().first().copied().unwrap_or(0);
    let m = g.element_order(first);
    a_choices.push(first);
    for q in [2usize, 3, 5] {
        if m.is_multiple_of(q) && m != q {
            a_choices.push(g.pow(first, (m / q) as i64));
        }
    }
    if let Some(&last) = g.generators().last() {
        a_choices.push(last);
    }
    a_choices.sort();
    a_choices.dedup();
    let gens = orders.len();
    let o2 = orders.clone();
    GroupCase {
        spec_for: Box::new(move |a| GroupSpec::Cyclic { orders: o2.clone(), a: word(a, &o2) }),
        group: g,
        a_choices,
        gens: Some(gens),
    }
}

fn dihedral_case() -> GroupCase {
    let table = dihedral8();
    let g = Group::from_table(&table, 0).unwrap();
    let a_choices = g.center().to_vec();
    GroupCase {
        spec_for: Box::new(move |a| GroupSpec::Table { table: table.clone(), a }),
        group: g,
        a_choices,
        gens: None,
    }
}

fn field_degree(p: u32, g: &Group) -> u32 {
    let mut e = g.exponent();
    while e.is_multiple_of(p as u64) {
        e /= p as u64;
    }
    (1..=MAX_FIELD_DEGREE).find(|&d| (p as u64).pow(d) % e == 1).unwrap_or(1)
}

fn scalars(f: &Field, xs: &[Elem]) -> Vec<Scalar> {
    xs.iter().map(|&e| Scalar::of(f, e)).collect()
}

fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::Int(x)).collect()
}

/// `c` candidates given per generator: zero, `1` on the first, `1` on the last.
fn c_choices(case: &GroupCase) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    if let Some(k) = case.gens {
        let mut first = vec![0; k];
        first[0] = 1;
        let mut last = vec![0; k];
        last[k - 1] = 1;
        out.push(ints(&first));
        out.push(ints(&last));
    } else {
        // per element: the sign character of the reflections, shifted
        let g = &case.group;
        let v: Vec<i64> = (0..g.order()).map(|x| if x >= 4 { 1 } else { 0 }).collect();
        out.push(ints(&v));
    }
    out.dedup();
    out
}

/// Every grid tuple that resolves and passes validation, sorted by key.
pub fn acceptance_grid() -> Vec<Tuple> {
    let mut cases: Vec<GroupCase> = CYCLIC_SHAPES.iter().map(|o| cyclic_case(o)).collect();
    cases.push(dihedral_case());
    let mut out: Vec<Tuple> = Vec::new();
    for &p in &GRID_PRIMES {
        for case in &cases {
            let d = field_degree(p, &case.group);
            let field = Arc::new(Field::new(p, d).unwrap());
            let chars = linear_characters(&case.group, &field).characters;
            for &a in &case.a_choices {
                let base = |variant| TupleSpec {
                    p,
                    field_degree: d,
                    variant,
                    group: (case.spec_for)(a),
                    chi: Vec::new(),
                    c: Vec::new(),
                    alpha: Vec::new(),
                };
                let mut specs = Vec::new();
                // first type: one character with χ(a) ≠ 1
                for chi in chars.iter().filter(|c| c[a] != Elem::ONE).take(1) {
                    for alpha in [0, 1] {
                        let mut s = base(Variant::R);
                        s.chi = scalars(&field, chi);
                        s.alpha = ints(&[alpha]);
                        specs.push(s);
                    }
                }
                // second type: trivial and one nontrivial character with χ(a) = 1
                let fixing: Vec<_> = chars.iter().filter(|c| c[a] == Elem::ONE).take(2).collect();
                for chi in &fixing {
                    for (k, c) in c_choices(case).into_iter().take(2).enumerate() {
                        let alphas: &[[i64; 2]] = if k == 0 { &[[0, 0], [0, 1], [1, 1]] } else { &[[0, 0], [1, 1]] };
                        for &alpha in alphas {
                            let mut s = base(Variant::F);
                            s.chi = scalars(&field, chi);
                            s.c = c.clone();
                            s.alpha = ints(&alpha);
                            specs.push(s);
                        }
                    }
                }
                // third type
                for c in c_choices(case) {
                    for alpha in [0, 1] {
                        let mut s = base(Variant::E);
                        s.c = c.clone();
                        s.alpha = ints(&[alpha]);
                        specs.push(s);
                    }
                }
                for s in specs {
                    let Ok(t) = Tuple::from_spec_in(&s, field.clone()) else { continue };
                    if t.group.order() <= MAX_GROUP_ORDER && t.n() <= MAX_DEGREE && validate_tuple(&t).is_empty() {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort_by_cached_key(|t| t.key());
    out.dedup_by(|x, y| x.key() == y.key());
    out
}

/// Outcome of the per-tuple checks; `None` where a check does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridRow {
    pub key: String,
    pub variant: Variant,
    pub p: u32,
    pub group_order: usize,
    pub n: usize,
    pub dim: usize,
    pub axioms: bool,
    pub pointed_rank_one: bool,
    pub smash_agrees: bool,
    pub round_trip: bool,
    /// Type 3 only when `p` divides the order of `a`; `p ∤ |G|` gives
    /// type 1 or 2; `a = 1` gives type 2 with `c ≡ 0`.
    pub type_rules: bool,
    #[serde(rename = "type")]
    pub kind: Option<u8>,
    pub blocks: Option<bool>,
    /// Field degree some check had to move to, when the tuple's own field
    /// signalled an extension.
    pub lifted_to: Option<u32>,
    pub error: Option<String>,
}

impl GridRow {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.axioms
            && self.pointed_rank_one
            && self.smash_agrees
            && self.round_trip
            && self.type_rules
            && self.blocks != Some(false)
    }
}

/// Which checks to run per tuple.
#[derive(Clone, Copy, Debug)]
pub struct GridOptions {
    pub smash: bool,
    pub classify: bool,
    pub blocks: bool,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions { smash: true, classify: true, blocks: true }
    }
}

fn blocks_apply(t: &Tuple) -> bool {
    t.is_nilpotent_type() && !t.group.order().is_multiple_of(t.p() as usize) && t.group.is_abelian()
}

pub fn check_tuple(t: &Tuple, opts: GridOptions) -> GridRow {
    let mut row = GridRow {
        key: t.key(),
        variant: t.variant,
        p: t.p(),
        group_order: t.group.order(),
        n: t.n(),
        dim: t.dim(),
        axioms: false,
        pointed_rank_one: false,
        smash_agrees: !opts.smash,
        round_trip: !opts.classify,
        type_rules: !opts.classify,
        kind: None,
        blocks: None,
        lifted_to: None,
        error: None,
    };
    if let Err(e) = fill(t, opts, &mut row) {
        row.error = Some(e.to_string());
    }
    row
}

fn fill(t: &Tuple, opts: GridOptions, row: &mut GridRow) -> crate::Result<()> {
    let h = build_family(t)?;
    row.axioms = verify_hopf(&h).all_passed() && h.dim() == t.group.order() * t.n();
    let gl = group_likes(&h)?;
    let filt = coradical_filtration(&h, &gl);
    row.pointed_rank_one = gl.certified && gl.elements.len() == t.group.order() && filt.pointed && filt.rank == Some(1);
    if opts.smash {
        row.smash_agrees = build_smash_oracle(t)?.same_structure(&h);
    }
    if opts.classify {
        let (ok, kind, degree) = with_extension(t, round_trip)?;
        row.kind = Some(kind);
        row.round_trip = ok.0;
        row.type_rules = ok.1;
        row.lifted_to = row.lifted_to.max(degree);
    }
    if opts.blocks && blocks_apply(t) {
        let (ok, _, degree) = with_extension(t, |t| Ok((block_checks(t)?, 0)))?;
        row.blocks = Some(ok);
        row.lifted_to = row.lifted_to.max(degree);
    }
    Ok(())
}

/// Runs `check` over the tuple's field, moving to the extension named by an
/// `ExtendField` signal (at most three times). Returns the degree used when
/// an extension was needed.
fn with_extension<T>(
    t: &Tuple,
    check: impl Fn(&Tuple) -> crate::Result<(T, u8)>,
) -> crate::Result<(T, u8, Option<u32>)> {
    let mut cur = t.clone();
    let mut lifted = None;
    for _ in 0..3 {
        match check(&cur) {
            Ok((v, k)) => return Ok((v, k, lifted)),
            Err(Error::ExtendField { min_degree, .. }) => {
                let d = crate::field::lcm(cur.field.d() as u64, min_degree as u64) as u32;
                cur = cur.lift_to(Arc::new(Field::new(cur.p(), d)?))?;
                lifted = Some(d);
            }
            Err(e) => return Err(e),
        }
    }
    check(&cur).map(|(v, k)| (v, k, lifted))
}

/// Classification round trip and the type rules: `((round trip, rules), type)`.
fn round_trip(t: &Tuple) -> crate::Result<((bool, bool), u8)> {
    let h = build_family(t)?;
    // without a normal form in this field the criteria compare raw data
    let norm = match normalize_tuple(t) {
        Ok(n) => n.tuple,
        Err(Error::ExtendField { .. }) => t.clone(),
        Err(e) => return Err(e),
    };
    let r = classify(&h)?;
    let kind = r.detection.kind;
    let trip = iso_tuples(&r.tuple, &norm)?.verdict == Verdict::Isomorphic;
    let p = t.p() as usize;
    let g = &t.group;
    let a_order = g.element_order(g.a());
    let mut ok = (1..=3).contains(&kind);
    ok &= kind != 3 || a_order.is_multiple_of(p);
    ok &= g.order().is_multiple_of(p) || kind != 3;
    if g.a() == 0 {
        ok &= kind == 2 && r.raw_tuple.c.iter().all(|e| e.is_zero());
    }
    if r.tuple.variant == Variant::R {
        ok &= r.raw_tuple.c.iter().all(|e| e.is_zero());
    }
    if r.tuple.variant == Variant::E {
        ok &= r.raw_tuple.chi.iter().all(|&e| e == Elem::ONE);
    }
    Ok(((trip, ok), kind))
}

/// Projectives `H e_λ` are uniserial with the expected factors, exhaust `H`,
/// and the blocks are the χ-orbits.
fn block_checks(t: &Tuple) -> crate::Result<bool> {
    let h = build_family(t)?;
    let data = analyze(&h.alg)?;
    let projs = family_projectives(t, &h, &data)?;
    let exhaust = projs.iter().map(|p| p.module.dim).sum::<usize>() == h.dim();
    let each = projs.iter().all(|p| p.composition.uniserial && p.factors_in_order && p.flag_matches);
    let dec = blocks_with(&h.alg, data)?;
    let dims = dec.blocks.iter().map(|b| b.dim).sum::<usize>() == h.dim();
    Ok(exhaust && each && dims && blocks_match_orbits(t, &h, &dec)?)
}

/// Runs the checks on every grid tuple in parallel; rows come back in key order.
pub fn run_grid(tuples: &[Tuple], opts: GridOptions) -> Vec<GridRow> {
    let mut rows: Vec<GridRow> = tuples.par_iter().map(|t| check_tuple(t, opts)).collect();
    rows.sort_by(|a, b| a.key.cmp(&b.key));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_sorted_and_large() {
        let g = acceptance_grid();
        assert!(g.len() >= 100, "{}", g.len());
        assert!(g.windows(2).all(|w| w[0].key() < w[1].key()));
        for v in [Variant::R, Variant::F, Variant::E] {
            assert!(g.iter().any(|t| t.variant == v));
        }
    }

    #[test]
    fn dihedral_table_is_a_group() {
        let g = Group::from_table(&dihedral8(), 0).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.center().len(), 2);
    }
}
