//! The ten acceptance criteria, run in order with one PASS/FAIL line each.
//! The grid is swept once and shared by the criteria that need it.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopfforge::classify::{classify, iso_bruteforce, iso_tuples, Verdict};
use hopfforge::families::{build_family, taft_tuple, third_type_cyclic, Scalar, Tuple, TupleSpec, Variant};
use hopfforge::field::{Elem, Field};
use hopfforge::grid::{acceptance_grid, run_grid, GridOptions, GridRow};
use hopfforge::group::GroupSpec;
use hopfforge::hopfcore::verify_hopf;
use hopfforge::linalg::unit_vec;
use hopfforge::qcomb::{coefficient_sweep, power_identities, vanishing_sweep};
use hopfforge::rep::{
    analyze, block_identify, blocks, blocks_match_orbits, blocks_with, cartan_matrix, composition_series,
    equal_up_to_permutation, family_projectives, kx_decompose, left_ideal_module, projective_covers, subhopf_report,
    BlockTag,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn prime(p: u32) -> Arc<Field> {
    Arc::new(Field::prime(p).unwrap())
}

fn cyclic(p: u32, d: u32, variant: Variant, orders: &[u32], a: &[i64]) -> TupleSpec {
    TupleSpec {
        p,
        field_degree: d,
        variant,
        group: GroupSpec::Cyclic { orders: orders.to_vec(), a: a.to_vec() },
        chi: Vec::new(),
        c: Vec::new(),
        alpha: Vec::new(),
    }
}

fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::Int(x)).collect()
}

fn coefficients() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for p in [2u32, 3, 5, 7] {
        let r = e(coefficient_sweep(p, 2 * p as usize))?;
        ensure(r.mismatches.is_empty(), || format!("p = {p}: {:?}", r.mismatches.first()))?;
        checked += r.checked;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("{checked} coefficients agree in {:.2?}", took))
}

fn specializations() -> Outcome {
    let mut n = 0;
    for p in [2u32, 3, 5, 7] {
        let ids = e(power_identities(p))?;
        ensure(ids.len() == p as usize + 2, || format!("p = {p}: {} identities", ids.len()))?;
        ensure(ids.iter().any(|i| i.expr == "(x⊗a+1⊗x)^p"), || format!("p = {p}: coproduct identity missing"))?;
        if let Some(bad) = ids.iter().find(|i| !i.passed) {
            return Err(format!("p = {p}: {} differs", bad.expr));
        }
        n += ids.len();
    }
    Ok(format!("{n} identities exact"))
}

fn vanishing() -> Outcome {
    let mut checked = 0;
    for p in [2u32, 3] {
        for d in 1..=4 {
            let r = e(vanishing_sweep(p, d, 64))?;
            ensure(r.discrepancies.is_empty(), || format!("GF({p}^{d}): {:?}", r.discrepancies))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} (n, q) pairs, zero discrepancies"))
}

fn construction(rows: &[GridRow], took: Duration) -> Outcome {
    ensure(rows.len() >= 100, || format!("only {} tuples", rows.len()))?;
    for v in [Variant::R, Variant::F, Variant::E] {
        ensure(rows.iter().any(|r| r.variant == v), || format!("no {v:?} tuples"))?;
    }
    for r in rows {
        ensure(r.error.is_none(), || format!("{}: {}", r.key, r.error.as_deref().unwrap_or("")))?;
        ensure(r.dim == r.group_order * r.n, || format!("{}: dim {}", r.key, r.dim))?;
        ensure(r.axioms && r.pointed_rank_one && r.smash_agrees, || format!("{}: {r:?}", r.key))?;
    }
    ensure(took < Duration::from_secs(120), || format!("grid took {took:?}"))?;
    Ok(format!("{} tuples in {:.1?}", rows.len(), took))
}

fn worked_examples() -> Outcome {
    // A_2: the third-type algebra on C_2 over F_2
    let a2 = e(build_family(&e(third_type_cyclic(prime(2), 2))?))?;
    ensure(verify_hopf(&a2).all_passed(), || "A_2 axioms".into())?;
    let cl = e(classify(&a2))?;
    ensure(cl.detection.kind == 3, || format!("A_2 type {}", cl.detection.kind))?;
    let data = e(analyze(&a2.alg))?;
    ensure(data.simples.len() == 2 && data.radical.dim() == 2, || "A_2 simples / radical".into())?;
    let xi = (0..a2.dim()).find(|&i| a2.label(i) == "x").ok_or("no basis element x")?;
    let p1 = left_ideal_module(&a2.alg, &[unit_vec(a2.dim(), xi)], "P1");
    let comp = composition_series(&a2.alg, &data, &p1);
    ensure(p1.dim == 2 && comp.uniserial && comp.socle.dim() == 1, || "P_1 shape".into())?;
    let soc = p1.to_algebra(a2.field(), &comp.socle.basis()[0]).ok_or("socle outside A")?;
    let soc = a2.format_vector(&soc);
    ensure(soc == "g1*x + x", || format!("socle of P_1 is {soc}"))?;
    ensure(projective_covers(&a2.alg, &data).iter().all(|c| c.dim == 2), || "A_2 covers".into())?;

    // Example L: F on C_2 x C_2 over F_2, a the second generator, c(b) = 1
    let mut s = cyclic(2, 1, Variant::F, &[2, 2], &[1, 0]);
    s.c = ints(&[0, 1]);
    s.alpha = ints(&[0, 0]);
    let l = e(build_family(&e(Tuple::from_spec(&s))?))?;
    ensure(verify_hopf(&l).all_passed(), || "L axioms".into())?;
    let cl = e(classify(&l))?;
    ensure(cl.detection.kind == 2, || format!("L type {}", cl.detection.kind))?;
    let x = &cl.detection.x;
    ensure(l.mul(x, x).iter().all(|v| v.is_zero()), || "x² ≠ 0 in L".into())?;
    let raw = &cl.raw_tuple;
    let a = raw.group.a();
    ensure(raw.c[a].is_zero(), || "c(a) ≠ 0".into())?;
    let b = (1..raw.group.order()).find(|&g| g != a).ok_or("no b")?;
    let cb = if raw.c[b] == Elem::ONE { raw.c[b] } else { raw.c[raw.group.mul(a, b)] };
    ensure(cb == Elem::ONE, || "c(b) ≠ 1".into())?;

    for p in [2u32, 3, 5, 7] {
        let h = e(build_family(&e(third_type_cyclic(prime(p), p))?))?;
        ensure(verify_hopf(&h).all_passed(), || format!("A_{p} axioms"))?;
    }
    Ok("A_2 type 3 with soc P_1 = <g1*x + x>; L type 2; A_p for p = 2, 3, 5, 7".into())
}

fn round_trip(rows: &[GridRow]) -> Outcome {
    let mut lifted = 0;
    for r in rows {
        ensure(r.round_trip, || format!("{}: round trip", r.key))?;
        ensure(r.type_rules && matches!(r.kind, Some(1..=3)), || format!("{}: type {:?}", r.key, r.kind))?;
        if r.group_order % r.p as usize != 0 {
            ensure(r.kind != Some(3), || format!("{}: type 3 with p ∤ |G|", r.key))?;
        }
        lifted += r.lifted_to.is_some() as usize;
    }
    Ok(format!("{} tuples, {lifted} compared after a field extension", rows.len()))
}

fn iso_agreement(grid: &[Tuple]) -> Outcome {
    let small: Vec<&Tuple> = grid
        .iter()
        .filter(|t| t.field.d() == 1 && ((t.p() == 2 && t.dim() <= 8) || (t.p() == 3 && t.dim() <= 6)))
        .collect();
    let built: Vec<_> = small.iter().map(|t| e(build_family(t))).collect::<Result<_, _>>()?;
    let (mut pairs, mut isomorphic) = (0, 0);
    for i in 0..small.len() {
        for j in i..small.len() {
            if small[i].p() != small[j].p() {
                continue;
            }
            let crit = e(iso_tuples(small[i], small[j]))?;
            let search = e(iso_bruteforce(&built[i], &built[j]))?;
            ensure(crit.verdict != Verdict::Undecided && crit.verdict == search.verdict, || {
                format!("{} / {}: {:?} vs {:?}", small[i].key(), small[j].key(), crit.verdict, search.verdict)
            })?;
            pairs += 1;
            isomorphic += (crit.verdict == Verdict::Isomorphic) as usize;
        }
    }
    ensure(pairs > 0, || "no small pairs".into())?;

    // R on C_4 over F_5 with a the generator, χ(a) = 4, and α₋₁ = 1, 4, 2
    let r = |alpha: i64| {
        let mut s = cyclic(5, 1, Variant::R, &[4], &[1]);
        s.chi = ints(&[4]);
        s.alpha = ints(&[alpha]);
        Tuple::from_spec(&s)
    };
    let (r1, r4, r2) = (e(r(1))?, e(r(4))?, e(r(2))?);
    let yes = e(iso_tuples(&r1, &r4))?;
    ensure(yes.verdict == Verdict::Isomorphic, || format!("1 vs 4: {}", yes.reason))?;
    let beta = yes.witness.as_ref().map(|w| w.beta);
    ensure(beta == Some(r1.field.from_int(2)), || format!("β = {beta:?}"))?;
    let no = e(iso_tuples(&r1, &r2))?;
    ensure(no.verdict == Verdict::NotIsomorphic, || format!("1 vs 2: {:?}", no.verdict))?;
    let search = e(iso_bruteforce(&e(build_family(&r1))?, &e(build_family(&r2))?))?;
    ensure(search.verdict == Verdict::NotIsomorphic, || "1 vs 2 by search".into())?;
    Ok(format!("{pairs} pairs agree ({isomorphic} isomorphic); F_5 pair: β = 2, 1 vs 2 not isomorphic"))
}

fn uniserial_blocks(rows: &[GridRow]) -> Outcome {
    let f = Arc::new(e(Field::new(2, 2))?);
    let w = e(f.primitive_root_of_unity(3))?;
    let t = e(taft_tuple(f, w))?;
    let h = e(build_family(&t))?;
    let data = e(analyze(&h.alg))?;
    let projs = e(family_projectives(&t, &h, &data))?;
    ensure(projs.len() == 3, || format!("{} projectives", projs.len()))?;
    for p in &projs {
        ensure(p.composition.uniserial && p.factors_in_order && p.flag_matches, || "taft projective".into())?;
    }
    ensure(projs.iter().map(|p| p.module.dim).sum::<usize>() == h.dim(), || "projectives do not exhaust".into())?;
    let dec = e(blocks_with(&h.alg, data))?;
    ensure(e(blocks_match_orbits(&t, &h, &dec))?, || "taft blocks vs orbits".into())?;
    let applicable: Vec<&GridRow> = rows.iter().filter(|r| r.blocks.is_some()).collect();
    ensure(!applicable.is_empty(), || "no grid algebra meets the hypotheses".into())?;
    if let Some(bad) = applicable.iter().find(|r| r.blocks != Some(true)) {
        return Err(format!("{}: block checks failed", bad.key));
    }
    Ok(format!("Γ_3,ω and {} grid algebras", applicable.len()))
}

fn c8_blocks() -> Outcome {
    let f = Arc::new(e(Field::new(3, 2))?);
    let i = e(f.primitive_root_of_unity(4))?;
    let mut s = cyclic(3, 2, Variant::R, &[8], &[1]);
    s.chi = vec![Scalar::of(&f, i)];
    s.alpha = ints(&[1]);
    let t = e(Tuple::from_spec_in(&s, f.clone()))?;
    let h = e(build_family(&t))?;
    let dec = e(blocks(&h.alg))?;
    let dims: Vec<usize> = dec.blocks.iter().map(|b| b.dim).collect();
    ensure(dims == [16, 16], || format!("block dims {dims:?}"))?;
    let taft = e(build_family(&e(taft_tuple(f.clone(), i))?))?;
    let tdata = e(analyze(&taft.alg))?;
    let tcartan = cartan_matrix(&taft.alg, &tdata, &projective_covers(&taft.alg, &tdata));
    let mut tags = Vec::new();
    for b in &dec.blocks {
        let tag = e(block_identify(&h.alg, &dec, b, t.q()))?;
        let sizes: Vec<usize> = b.simples.iter().map(|&k| dec.data.simples[k].module.dim).collect();
        match tag {
            BlockTag::TaftLike => {
                ensure(sizes == [1, 1, 1, 1], || format!("taft-like simples {sizes:?}"))?;
                ensure(equal_up_to_permutation(&b.cartan, &tcartan), || format!("cartan {:?}", b.cartan))?;
            }
            BlockTag::MatrixLike => {
                ensure(sizes == [4] && b.cartan == [vec![1]], || format!("matrix-like {sizes:?} {:?}", b.cartan))?;
            }
            BlockTag::Other => return Err("unrecognized block".into()),
        }
        tags.push(tag);
    }
    tags.sort_by_key(|t| *t as u8);
    ensure(tags == [BlockTag::TaftLike, BlockTag::MatrixLike], || format!("tags {tags:?}"))?;
    Ok("two 16-dim blocks: taft-like and matrix-like".into())
}

fn kx_and_subhopf() -> Outcome {
    for p in [2u32, 3, 5] {
        let (alg, idems) = e(kx_decompose(p, prime(p)))?;
        let data = e(analyze(&alg))?;
        ensure(idems.len() == p as usize, || format!("p = {p}: {} idempotents", idems.len()))?;
        ensure(data.simples.len() == p as usize && data.simples.iter().all(|s| s.module.dim == 1), || {
            format!("p = {p}: simples")
        })?;
    }
    for (p, r) in [(2u32, 1u32), (2, 2), (3, 1)] {
        let rep = e(subhopf_report(p, r, prime(p)))?;
        ensure(rep.projectives.len() == p as usize && rep.idempotents_complete, || format!("({p}, {r}) projectives"))?;
        ensure(rep.blocks == 1, || format!("({p}, {r}): {} blocks", rep.blocks))?;
        for pr in &rep.projectives {
            ensure(pr.dim == p.pow(r) as usize && pr.uniserial && pr.flag_ok, || format!("({p}, {r}): {pr:?}"))?;
        }
    }
    Ok("k[x]_p for p = 2, 3, 5; (p, r) = (2, 1), (2, 2), (3, 1)".into())
}

#[test]
fn acceptance_suite() {
    let tuples = acceptance_grid();
    let start = Instant::now();
    let rows = run_grid(&tuples, GridOptions::default());
    let grid_time = start.elapsed();

    let results: Vec<(&str, Outcome)> = vec![
        ("coefficient oracle sweep", coefficients()),
        ("power identity specializations", specializations()),
        ("q-binomial vanishing", vanishing()),
        ("construction grid", construction(&rows, grid_time)),
        ("worked examples", worked_examples()),
        ("classification round trip", round_trip(&rows)),
        ("isomorphism criteria vs search", iso_agreement(&tuples)),
        ("uniserial projectives and blocks", uniserial_blocks(&rows)),
        ("C_8 over GF(9) blocks", c8_blocks()),
        ("k[x]_p and sub-Hopf projectives", kx_and_subhopf()),
    ];
    let mut err = std::io::stderr();
    let mut failed = Vec::new();
    for (k, (name, r)) in results.iter().enumerate() {
        let line = match r {
            Ok(m) => format!("PASS {:>2} {name}: {m}", k + 1),
            Err(m) => {
                failed.push(k + 1);
                format!("FAIL {:>2} {name}: {m}", k + 1)
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
