//! Finite groups as Cayley tables, with a distinguished central element.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::field::{lcm, Elem, Field};
use crate::linalg::{unit_vec, Vector};

/// Default bound on group orders for exhaustive searches.
pub const DEFAULT_BUDGET: usize = 64;

/// Search budget, overridable through `HOPFFORGE_BUDGET`.
pub fn budget() -> usize {
    std::env::var("HOPFFORGE_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    /// Product of cyclic groups; `a` is an exponent word in the generators.
    Cyclic { orders: Vec<u32>, a: Vec<i64> },
    /// Cayley table with identity at index 0; `a` is an element index.
    Table { table: Vec<Vec<usize>>, a: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    names: Vec<String>,
    generators: Vec<usize>,
    center: Vec<usize>,
    skew_point: usize,
    cyclic_orders: Option<Vec<u32>>,
}

impl Group {
    pub fn from_spec(spec: &GroupSpec) -> Result<Group> {
        match spec {
            GroupSpec::Cyclic { orders, a } => Self::cyclic_product(orders, a),
            GroupSpec::Table { table, a } => Self::from_table(table, *a),
        }
    }

    /// `C_{m_1} x ... x C_{m_r}`, element index `sum e_i * prod_{j<i} m_j`.
    pub fn cyclic_product(orders: &[u32], a_word: &[i64]) -> Result<Group> {
        if orders.contains(&0) {
            return Err(Error::invalid("cyclic factor of order 0"));
        }
        if a_word.len() > orders.len() {
            return Err(Error::invalid("skew point word longer than the generator list"));
        }
        let n: usize = orders.iter().map(|&m| m as usize).product();
        if n > 1 << 12 {
            return Err(Error::Budget(format!("group of order {n} is too large")));
        }
        let digits = |mut idx: usize| -> Vec<u32> {
            orders
                .iter()
                .map(|&m| {
                    let d = (idx % m as usize) as u32;
                    idx /= m as usize;
                    d
                })
                .collect()
        };
        let index = |ds: &[u32]| -> usize {
            let mut idx = 0usize;
            let mut scale = 1usize;
            for (d, &m) in ds.iter().zip(orders) {
                idx += *d as usize * scale;
                scale *= m as usize;
            }
            idx
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            let di = digits(i);
            for j in 0..n {
                let dj = digits(j);
                let s: Vec<u32> = di.iter().zip(&dj).zip(orders).map(|((x, y), m)| (x + y) % m).collect();
                table[i * n + j] = index(&s) as u32;
            }
        }
        let names = (0..n)
            .map(|i| {
                let parts: Vec<String> = digits(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| if e == 1 { format!("g{}", k + 1) } else { format!("g{}^{e}", k + 1) })
                    .collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        let a_digits: Vec<u32> = orders
            .iter()
            .enumerate()
            .map(|(k, &m)| a_word.get(k).copied().unwrap_or(0).rem_euclid(m as i64) as u32)
            .collect();
        let generators: Vec<usize> =
            (0..orders.len()).filter(|&k| orders[k] > 1).map(|k| index(&unit_digits(orders.len(), k))).collect();
        let mut g = Self::assemble(n, table, names, generators, index(&a_digits))?;
        g.cyclic_orders = Some(orders.to_vec());
        Ok(g)
    }

    pub fn from_table(rows: &[Vec<usize>], a: usize) -> Result<Group> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("Cayley table must be square and nonempty"));
        }
        if rows.iter().flatten().any(|&x| x >= n) {
            return Err(Error::invalid("Cayley table entry out of range"));
        }
        if (0..n).any(|i| rows[0][i] != i || rows[i][0] != i) {
            return Err(Error::invalid("index 0 must be the identity"));
        }
        for i in 0..n {
            let mut seen = vec![false; n];
            for &x in &rows[i] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::invalid(format!("row {i} repeats an element")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if rows[rows[i][j]][k] != rows[i][rows[j][k]] {
                        return Err(Error::invalid(format!("table is not associative at ({i},{j},{k})")));
                    }
                }
            }
        }
        if a >= n {
            return Err(Error::invalid("skew point index out of range"));
        }
        let table: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
        let names = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") }).collect();
        // greedy generating set
        let mut generators = Vec::new();
        let mut span = vec![false; n];
        span[0] = true;
        for g in 1..n {
            if !span[g] {
                generators.push(g);
                span = closure(n, &table, &generators);
            }
        }
        Self::assemble(n, table, names, generators, a)
    }

    fn assemble(n: usize, table: Vec<u32>, names: Vec<String>, generators: Vec<usize>, a: usize) -> Result<Group> {
        let inv = (0..n)
            .map(|i| (0..n).find(|&j| table[i * n + j] == 0).map(|j| j as u32))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| Error::invalid("element without inverse"))?;
        let center = (0..n).filter(|&z| (0..n).all(|g| table[z * n + g] == table[g * n + z])).collect::<Vec<_>>();
        if !center.contains(&a) {
            return Err(Error::invalid(format!("skew point {a} is not central")));
        }
        Ok(Group { order: n, table, inv, names, generators, center, skew_point: a, cyclic_orders: None })
    }

    /// Same group with another central skew point.
    pub fn with_skew_point(&self, a: usize) -> Result<Group> {
        if !self.center.contains(&a) {
            return Err(Error::invalid(format!("skew point {a} is not central")));
        }
        Ok(Group { skew_point: a, ..self.clone() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn a(&self) -> usize {
        self.skew_point
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn cyclic_orders(&self) -> Option<&[u32]> {
        self.cyclic_orders.as_deref()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| (0..self.order).map(|j| self.mul(i, j)).collect()).collect()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }

    pub fn pow(&self, g: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() % self.element_order(g) as u64 {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.center.len() == self.order
    }

    pub fn is_central(&self, g: usize) -> bool {
        self.center.contains(&g)
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1, |acc, g| lcm(acc, self.element_order(g) as u64))
    }

    /// Membership vector of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<bool> {
        closure(self.order, &self.table, gens)
    }

    pub fn commutator_subgroup(&self) -> Vec<bool> {
        let mut gens = Vec::new();
        for g in 0..self.order {
            for h in 0..self.order {
                let c = self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)));
                if c != 0 && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        self.subgroup(&gens)
    }

    /// Order of `G / [G, G]` and its exponent.
    pub fn abelianization(&self) -> (usize, u64) {
        let comm = self.commutator_subgroup();
        let csize = comm.iter().filter(|&&b| b).count();
        let mut exp = 1u64;
        for g in 0..self.order {
            let mut x = g;
            let mut k = 1u64;
            while !comm[x] {
                x = self.mul(x, g);
                k += 1;
            }
            exp = lcm(exp, k);
        }
        (self.order / csize, exp)
    }

    /// Expresses every element as a word in the generators: `(element, parent, generator)`
    /// in breadth-first order starting from the identity.
    pub fn spanning_tree(&self) -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = Vec::new();
        let mut q = VecDeque::from([0usize]);
        while let Some(g) = q.pop_front() {
            for &s in &self.generators {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    out.push((h, g, s));
                    q.push_back(h);
                }
            }
        }
        out
    }

    /// Group algebra `kG` with basis indexed by elements.
    pub fn group_algebra(&self, f: Arc<Field>) -> StructAlgebra {
        let n = self.order;
        StructAlgebra::from_basis_product(f, n, unit_vec(n, 0), |i, j| unit_vec(n, self.mul(i, j))).unwrap()
    }
}

fn unit_digits(len: usize, k: usize) -> Vec<u32> {
    let mut d = vec![0; len];
    d[k] = 1;
    d
}

fn closure(n: usize, table: &[u32], gens: &[usize]) -> Vec<bool> {
    let mut span = vec![false; n];
    span[0] = true;
    let mut q = VecDeque::from([0usize]);
    while let Some(g) = q.pop_front() {
        for &s in gens {
            let h = table[g * n + s] as usize;
            if !span[h] {
                span[h] = true;
                q.push_back(h);
            }
        }
    }
    span
}

/// Values of a map `G -> k`, indexed by element.
pub type GroupMap = Vec<Elem>;

/// Checks `chi(gh) = chi(g) chi(h)` and `chi(1) = 1`.
pub fn check_character(g: &Group, f: &Field, chi: &[Elem]) -> Result<()> {
    if chi.len() != g.order() {
        return Err(Error::DimensionMismatch(format!("character has {} values for |G| = {}", chi.len(), g.order())));
    }
    if chi[0] != Elem::ONE {
        return Err(Error::invalid("character must send 1 to 1"));
    }
    for x in 0..g.order() {
        for y in 0..g.order() {
            if chi[g.mul(x, y)] != f.mul(chi[x], chi[y]) {
                return Err(Error::invalid(format!(
                    "character is not multiplicative at ({}, {})",
                    g.name(x),
                    g.name(y)
                )));
            }
        }
    }
    Ok(())
}

/// Checks the cocycle law `c(hg) = chi(g) c(h) + c(g)`.
pub fn check_cmap(g: &Group, f: &Field, chi: &[Elem], c: &[Elem]) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::DimensionMismatch(format!("c has {} values for |G| = {}", c.len(), g.order())));
    }
    for x in 0..g.order() {
        for y in 0..g.order() {
            if c[g.mul(y, x)] != f.add(f.mul(chi[x], c[y]), c[x]) {
                return Err(Error::invalid(format!(
                    "c violates c(hg) = chi(g)c(h) + c(g) at h = {}, g = {}",
                    g.name(y),
                    g.name(x)
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterReport {
    /// Characters with values in the given field, in lexicographic order of values.
    pub characters: Vec<GroupMap>,
    /// All linear characters of `G` over the algebraic closure already exist here.
    pub complete: bool,
    /// Smallest field degree carrying every linear character.
    pub suggested_degree: u32,
}

pub fn linear_characters(g: &Group, f: &Field) -> CharacterReport {
    let gens = g.generators().to_vec();
    let tree = g.spanning_tree();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let m = g.element_order(s) as u64;
            f.nonzero_elements().filter(|&z| m.is_multiple_of(f.mult_order(z).unwrap())).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let mut chi = vec![Elem::ZERO; g.order()];
        chi[0] = Elem::ONE;
        for &(h, parent, s) in &tree {
            let k = gens.iter().position(|&x| x == s).unwrap();
            chi[h] = f.mul(chi[parent], candidates[k][choice[k]]);
        }
        if check_character(g, f, &chi).is_ok() {
            out.push(chi);
        }
        for k in 0..gens.len() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    out.sort();
    let (ab_order, ab_exp) = g.abelianization();
    let p = f.p() as u64;
    let strip = |mut m: u64| {
        while m.is_multiple_of(p) {
            m /= p;
        }
        m
    };
    let coprime_exp = strip(ab_exp);
    let coprime_order = strip(ab_order as u64) as usize;
    let complete = out.len() == coprime_order;
    let base = f.p() as u64;
    let mut d = 1u32;
    while !(base.pow(d) - 1).is_multiple_of(coprime_exp) {
        d += 1;
    }
    CharacterReport { characters: out, complete, suggested_degree: d }
}

/// `|G|^{-1} sum_g lambda(g^{-1}) g` in `kG`.
pub fn character_idempotent(g: &Group, f: &Field, lambda: &[Elem]) -> Result<Vector> {
    if (g.order() as u64).is_multiple_of(f.p() as u64) {
        return Err(Error::pre(format!("characteristic {} divides |G| = {}", f.p(), g.order())));
    }
    if !g.is_abelian() {
        return Err(Error::pre("character idempotents are only provided for abelian groups"));
    }
    check_character(g, f, lambda)?;
    let inv_n = f.inv(f.from_int(g.order() as i64)).unwrap();
    Ok((0..g.order()).map(|x| f.mul(inv_n, lambda[g.inv(x)])).collect())
}

/// All isomorphisms `G -> H` sending the skew point of `G` to the skew
/// point of `H`, as element maps.
pub fn group_isomorphisms(g: &Group, h: &Group) -> Result<Vec<Vec<usize>>> {
    if g.order() != h.order() {
        return Ok(Vec::new());
    }
    let limit = budget();
    if g.order() > limit {
        return Err(Error::Budget(format!(
            "group order {} exceeds the isomorphism search budget {limit} (set HOPFFORGE_BUDGET)",
            g.order()
        )));
    }
    let gens = g.generators().to_vec();
    let mut out = Vec::new();
    let mut partial = vec![usize::MAX; g.order()];
    partial[0] = 0;
    extend_iso(g, h, &gens, 0, &mut partial, &mut out);
    out.retain(|m| m[g.a()] == h.a());
    Ok(out)
}

fn extend_iso(g: &Group, h: &Group, gens: &[usize], k: usize, partial: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == gens.len() {
        if partial.iter().all(|&x| x != usize::MAX) {
            out.push(partial.clone());
        }
        return;
    }
    let s = gens[k];
    let ord = g.element_order(s);
    let central = g.is_central(s);
    for t in 0..h.order() {
        if h.element_order(t) != ord || h.is_central(t) != central {
            continue;
        }
        if partial[s] != usize::MAX && partial[s] != t {
            continue;
        }
        let mut next = partial.clone();
        if close_hom(g, h, &gens[..=k], &mut next, s, t) {
            extend_iso(g, h, gens, k + 1, &mut next, out);
        }
    }
}

/// Extends a partial map consistently to the subgroup generated by `gens`
/// after setting `s -> t`; returns `false` on conflict or non-injectivity.
fn close_hom(g: &Group, h: &Group, gens: &[usize], map: &mut [usize], s: usize, t: usize) -> bool {
    map[s] = t;
    let mut q: VecDeque<usize> = (0..g.order()).filter(|&x| map[x] != usize::MAX).collect();
    while let Some(x) = q.pop_front() {
        for &y in gens {
            let z = g.mul(x, y);
            let img = h.mul(map[x], map[y]);
            if map[z] == usize::MAX {
                map[z] = img;
                q.push_back(z);
            } else if map[z] != img {
                return false;
            }
        }
    }
    let mut seen = vec![false; h.order()];
    for &m in map.iter().filter(|&&m| m != usize::MAX) {
        if std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    true
}
