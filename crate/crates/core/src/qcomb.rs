//! q-binomials, the `f`/`g` symmetric-function tables and the closed-form
//! coefficients of powers of `x + c a`, `x (x) a + 1 (x) x` and `x a^-1`
//! in the algebra with `a x = x a + a^2 - a`, together with a
//! word-rewriting oracle for those powers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field, Poly};

/// Gaussian binomial by the q-Pascal rule; never divides.
pub fn q_binomial(f: &Field, n: usize, m: usize, q: Elem) -> Result<Elem> {
    if m > n {
        return Err(Error::invalid(format!("q-binomial index {m} exceeds {n}")));
    }
    Ok(q_binomial_row(f, n, q)[m])
}

/// `[binom(n, m)_q for m in 0..=n]`.
pub fn q_binomial_row(f: &Field, n: usize, q: Elem) -> Vec<Elem> {
    let qpow: Vec<Elem> = (0..=n).map(|m| f.pow(q, m as u64)).collect();
    let mut row = vec![Elem::ONE];
    for len in 1..=n {
        let mut next = vec![Elem::ONE; len + 1];
        for m in 1..len {
            next[m] = f.add(row[m - 1], f.mul(qpow[m], row[m]));
        }
        row = next;
    }
    row
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Vanishing {
    /// All inner q-binomials `binom(n, m)_q`, `0 < m < n`, vanish.
    pub holds: bool,
    /// Multiplicative order of `q`.
    pub order: u64,
    /// `r` with `n = order * p^r`, when such `r` exists.
    pub r: Option<u32>,
}

fn p_adic_split(n: u64, base: u64, p: u64) -> Option<u32> {
    if base == 0 || !n.is_multiple_of(base) {
        return None;
    }
    let mut m = n / base;
    let mut r = 0;
    while m.is_multiple_of(p) {
        m /= p;
        r += 1;
    }
    (m == 1).then_some(r)
}

pub fn vanishing_criterion(f: &Field, n: usize, q: Elem) -> Result<Vanishing> {
    if n < 2 {
        return Err(Error::invalid("vanishing criterion needs n > 1"));
    }
    let order = f.mult_order(q).ok_or_else(|| Error::invalid("q must be nonzero"))?;
    let row = q_binomial_row(f, n, q);
    let holds = row[1..n].iter().all(|e| e.is_zero());
    Ok(Vanishing { holds, order, r: p_adic_split(n as u64, order, f.p() as u64) })
}

/// Residues mod `p` of `f(j, l)` (complete homogeneous symmetric
/// polynomial of `1..=j`) and `g(j, m)` (elementary symmetric polynomial
/// of `1..j`), for `0 <= j, l, m <= max`.
#[derive(Clone, Debug)]
pub struct FgTable {
    pub p: u32,
    max: usize,
    f: Vec<u32>,
    g: Vec<u32>,
}

impl FgTable {
    pub fn new(p: u32, max: usize) -> Self {
        let w = max + 1;
        let pp = p as u64;
        let mut f = vec![0u32; w * w];
        let mut g = vec![0u32; w * w];
        f[0] = 1;
        g[0] = 1;
        for j in 1..=max {
            let jm = j as u64 % pp;
            for l in 0..=max {
                let prev = if l == 0 { 0 } else { f[j * w + l - 1] as u64 };
                f[j * w + l] = ((jm * prev + f[(j - 1) * w + l] as u64) % pp) as u32;
                let jm1 = (j as u64 - 1) % pp;
                let gprev = if l == 0 { 0 } else { g[(j - 1) * w + l - 1] as u64 };
                g[j * w + l] = ((jm1 * gprev + g[(j - 1) * w + l] as u64) % pp) as u32;
            }
        }
        FgTable { p, max, f, g }
    }

    pub fn f(&self, j: i64, l: i64) -> u32 {
        if l < 0 || j < 0 {
            return 0;
        }
        assert!(j as usize <= self.max && l as usize <= self.max, "f({j},{l}) outside table");
        self.f[j as usize * (self.max + 1) + l as usize]
    }

    pub fn g(&self, j: i64, m: i64) -> u32 {
        if m < 0 || j < 0 {
            return 0;
        }
        assert!(j as usize <= self.max && m as usize <= self.max, "g({j},{m}) outside table");
        self.g[j as usize * (self.max + 1) + m as usize]
    }
}

/// Ordinary binomial coefficient mod `p` (Lucas).
pub fn binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * ((a - i) % p) % p;
        }
        let mut d = 1u64;
        for i in 1..=b {
            d = d * (i % p) % p;
        }
        acc = acc * c % p * crate::field::pow_mod(d, p - 2, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// Which closed-form coefficient to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefQuery {
    /// Coefficient of `x^i a^j` in `(x + c a)^k`.
    S { k: usize, i: usize, j: usize, c: Elem },
    /// Coefficient of `x^i (x) x^z a^j` in `(x (x) a + 1 (x) x)^k`.
    H { k: usize, i: usize, z: usize, j: usize },
    /// Coefficient of `x^i a^-j` in `(x a^-1)^k`.
    C { k: usize, i: usize, j: usize },
}

fn sign(f: &Field, l: i64) -> Elem {
    if l.rem_euclid(2) == 0 {
        Elem::ONE
    } else {
        f.neg(Elem::ONE)
    }
}

/// Closed-form value of the coefficient in `f`.
pub fn coef_closed(f: &Field, q: &CoefQuery) -> Result<Elem> {
    let p = f.p();
    let kmax = match *q {
        CoefQuery::S { k, i, j, .. } | CoefQuery::C { k, i, j } => {
            if i > k || j > k {
                return Err(Error::invalid(format!("indices ({i},{j}) outside 0..={k}")));
            }
            k
        }
        CoefQuery::H { k, i, z, j } => {
            if i > k || z > k || j > k {
                return Err(Error::invalid(format!("indices ({i},{z},{j}) outside 0..={k}")));
            }
            k
        }
    };
    let t = FgTable::new(p, kmax);
    let bin = |n: usize, m: usize| f.from_int(binomial_mod(n as u64, m as u64, p as u64) as i64);
    let fi = |v: u32| f.from_int(v as i64);
    let delta = |b: bool| if b { Elem::ONE } else { Elem::ZERO };
    Ok(match *q {
        CoefQuery::S { k, i, j, c } => {
            if j == 0 {
                delta(i == k)
            } else {
                let l = k as i64 - (i + j) as i64;
                let mut prod = Elem::ONE;
                for u in 1..=j {
                    prod = f.mul(prod, f.add(c, f.from_int(u as i64 - 1)));
                }
                f.mul(f.mul(sign(f, l), bin(k, i)), f.mul(fi(t.f(j as i64, l)), prod))
            }
        }
        CoefQuery::H { k, i, z, j } => {
            if i == 0 {
                delta(j == 0 && k == z)
            } else if j == 0 {
                delta(i == 0 && k == z)
            } else {
                let l = k as i64 - (z + j) as i64;
                let m = j as i64 - i as i64;
                let v = f.mul(fi(t.f(j as i64, l)), fi(t.g(j as i64, m)));
                f.mul(f.mul(sign(f, l), bin(k, z)), v)
            }
        }
        CoefQuery::C { k, i, j } => {
            if i == 0 || j == 0 {
                Elem::ZERO
            } else {
                let l = k as i64 - j as i64;
                let v = f.mul(fi(t.g(j as i64, j as i64 - i as i64)), fi(t.f(j as i64, l)));
                f.mul(sign(f, l), v)
            }
        }
    })
}

/// Checks `prod_{m=1}^{p-1} (t - m) = t^{p-1} - 1` in `F_p[t]`.
pub fn fermat_check(p: u32) -> Result<bool> {
    let f = Field::prime(p)?;
    let mut prod = Poly::one();
    for m in 1..p {
        prod = prod.mul(&f, &Poly::linear(&f, f.from_int(m as i64)));
    }
    let target = Poly::monomial(Elem::ONE, (p - 1) as usize).sub(&f, &Poly::one());
    Ok(prod == target)
}

/// Letters of the free algebra on `x`, `a`, `a^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    A,
    AInv,
}

pub type Word = Vec<Letter>;

/// Linear combination of words, kept in normal form `x^i a^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeWord {
    pub terms: BTreeMap<Word, Elem>,
}

fn add_term<K: Ord>(f: &Field, m: &mut BTreeMap<K, Elem>, k: K, c: Elem) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k).or_insert(Elem::ZERO);
    *e = f.add(*e, c);
}

fn prune<K: Ord>(m: &mut BTreeMap<K, Elem>) {
    m.retain(|_, c| !c.is_zero());
}

/// Rewrites one word into normal form using only
/// `a x -> x a + a a - a`, `a^-1 x -> x a^-1 + a^-1 - 1`, `a a^-1 -> 1`.
pub fn normalize_word(f: &Field, w: Word) -> FreeWord {
    let mut pending: BTreeMap<Word, Elem> = BTreeMap::new();
    pending.insert(w, Elem::ONE);
    let mut done: BTreeMap<Word, Elem> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let pos = w.windows(2).position(|p| {
            matches!(
                (p[0], p[1]),
                (Letter::A, Letter::X)
                    | (Letter::AInv, Letter::X)
                    | (Letter::A, Letter::AInv)
                    | (Letter::AInv, Letter::A)
            )
        });
        let Some(i) = pos else {
            add_term(f, &mut done, w, c);
            continue;
        };
        let (pre, post) = (&w[..i], &w[i + 2..]);
        let splice = |mid: &[Letter]| -> Word { [pre, mid, post].concat() };
        match (w[i], w[i + 1]) {
            (Letter::A, Letter::X) => {
                add_term(f, &mut pending, splice(&[Letter::X, Letter::A]), c);
                add_term(f, &mut pending, splice(&[Letter::A, Letter::A]), c);
                add_term(f, &mut pending, splice(&[Letter::A]), f.neg(c));
            }
            (Letter::AInv, Letter::X) => {
                add_term(f, &mut pending, splice(&[Letter::X, Letter::AInv]), c);
                add_term(f, &mut pending, splice(&[Letter::AInv]), c);
                add_term(f, &mut pending, splice(&[]), f.neg(c));
            }
            _ => add_term(f, &mut pending, splice(&[]), c),
        }
    }
    prune(&mut done);
    FreeWord { terms: done }
}

impl FreeWord {
    pub fn from_words(f: &Field, terms: &[(Word, Elem)]) -> Self {
        let mut out = FreeWord::default();
        for (w, c) in terms {
            for (nw, nc) in normalize_word(f, w.clone()).terms {
                add_term(f, &mut out.terms, nw, f.mul(nc, *c));
            }
        }
        prune(&mut out.terms);
        out
    }

    pub fn mul(&self, f: &Field, o: &FreeWord) -> FreeWord {
        let mut out = FreeWord::default();
        for (u, cu) in &self.terms {
            for (v, cv) in &o.terms {
                let w = [u.as_slice(), v.as_slice()].concat();
                for (nw, nc) in normalize_word(f, w).terms {
                    add_term(f, &mut out.terms, nw, f.mul(nc, f.mul(*cu, *cv)));
                }
            }
        }
        prune(&mut out.terms);
        out
    }

    /// Coefficients keyed by `(i, j)` for normal words `x^i a^j` (`j < 0` for inverses).
    pub fn monomials(&self) -> BTreeMap<(usize, i64), Elem> {
        self.terms
            .iter()
            .map(|(w, &c)| {
                let i = w.iter().take_while(|&&l| l == Letter::X).count();
                let j: i64 = w[i..]
                    .iter()
                    .map(|l| match l {
                        Letter::A => 1,
                        Letter::AInv => -1,
                        Letter::X => unreachable!("normal words have x on the left"),
                    })
                    .sum();
                ((i, j), c)
            })
            .collect()
    }
}

/// Linear combination of pure tensors of normal words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeTensor {
    pub terms: BTreeMap<(Word, Word), Elem>,
}

impl FreeTensor {
    pub fn mul(&self, f: &Field, o: &FreeTensor) -> FreeTensor {
        let mut out = FreeTensor::default();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &o.terms {
                let left = normalize_word(f, [l1.as_slice(), l2.as_slice()].concat());
                let right = normalize_word(f, [r1.as_slice(), r2.as_slice()].concat());
                let c = f.mul(*c1, *c2);
                for (lw, lc) in &left.terms {
                    for (rw, rc) in &right.terms {
                        add_term(f, &mut out.terms, (lw.clone(), rw.clone()), f.mul(c, f.mul(*lc, *rc)));
                    }
                }
            }
        }
        prune(&mut out.terms);
        out
    }

    /// Coefficients keyed by `(i, z, j)` for `x^i (x) x^z a^j`; other shapes are reported as errors.
    pub fn monomials(&self) -> Result<BTreeMap<(usize, usize, i64), Elem>> {
        let mut out = BTreeMap::new();
        for ((l, r), &c) in &self.terms {
            if l.iter().any(|&x| x != Letter::X) {
                return Err(Error::invalid("left tensor factor is not a power of x"));
            }
            let right = FreeWord { terms: BTreeMap::from([(r.clone(), Elem::ONE)]) }.monomials();
            let (&(z, j), _) = right.iter().next().unwrap();
            out.insert((l.len(), z, j), c);
        }
        Ok(out)
    }
}

/// Which power the oracle expands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleExpr {
    /// `(x + c a)^k`
    XPlusCA(Elem),
    /// `(x (x) a + 1 (x) x)^k`
    Coproduct,
    /// `(x a^-1)^k`
    XAInv,
}

/// Result of the brute-force expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    Word(FreeWord),
    Tensor(FreeTensor),
}

pub fn oracle_expand(f: &Field, expr: OracleExpr, k: usize) -> Result<Expansion> {
    if k == 0 {
        return Err(Error::invalid("oracle expansion needs k >= 1"));
    }
    use Letter::*;
    Ok(match expr {
        OracleExpr::XPlusCA(c) => {
            let base = FreeWord::from_words(f, &[(vec![X], Elem::ONE), (vec![A], c)]);
            let mut acc = base.clone();
            for _ in 1..k {
                acc = acc.mul(f, &base);
            }
            Expansion::Word(acc)
        }
        OracleExpr::XAInv => {
            let base = FreeWord::from_words(f, &[(vec![X, AInv], Elem::ONE)]);
            let mut acc = base.clone();
            for _ in 1..k {
                acc = acc.mul(f, &base);
            }
            Expansion::Word(acc)
        }
        OracleExpr::Coproduct => {
            let base =
                FreeTensor { terms: BTreeMap::from([((vec![X], vec![A]), Elem::ONE), ((vec![], vec![X]), Elem::ONE)]) };
            let mut acc = base.clone();
            for _ in 1..k {
                acc = acc.mul(f, &base);
            }
            Expansion::Tensor(acc)
        }
    })
}

/// One disagreement found by `coefficient_sweep`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub kind: &'static str,
    pub p: u32,
    pub k: usize,
    pub indices: Vec<i64>,
    pub closed: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub p: u32,
    pub max_k: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Compares every closed-form coefficient with the oracle for `k <= max_k`
/// (all `c` in `F_p` for the `s` family), including oracle terms outside
/// the closed-form index range.
pub fn coefficient_sweep(p: u32, max_k: usize) -> Result<SweepReport> {
    let f = Field::prime(p)?;
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut report = |kind: &'static str, k: usize, idx: Vec<i64>, closed: Elem, oracle: Elem| {
        checked += 1;
        if closed != oracle {
            mismatches.push(Mismatch { kind, p, k, indices: idx, closed: f.format(closed), oracle: f.format(oracle) });
        }
    };
    for k in 1..=max_k {
        for c in f.elements() {
            let Expansion::Word(w) = oracle_expand(&f, OracleExpr::XPlusCA(c), k)? else { unreachable!() };
            let mono = w.monomials();
            if mono.keys().any(|&(i, j)| j < 0 || i > k || j as usize > k) {
                report("s", k, vec![-1], Elem::ZERO, Elem::ONE);
            }
            for i in 0..=k {
                for j in 0..=k {
                    let closed = coef_closed(&f, &CoefQuery::S { k, i, j, c })?;
                    let oracle = mono.get(&(i, j as i64)).copied().unwrap_or(Elem::ZERO);
                    report("s", k, vec![i as i64, j as i64, c.code() as i64], closed, oracle);
                }
            }
        }
        let Expansion::Tensor(t) = oracle_expand(&f, OracleExpr::Coproduct, k)? else { unreachable!() };
        let mono = t.monomials()?;
        if mono.keys().any(|&(i, z, j)| j < 0 || i > k || z > k || j as usize > k) {
            report("h", k, vec![-1], Elem::ZERO, Elem::ONE);
        }
        for i in 0..=k {
            for z in 0..=k {
                for j in 0..=k {
                    let closed = coef_closed(&f, &CoefQuery::H { k, i, z, j })?;
                    let oracle = mono.get(&(i, z, j as i64)).copied().unwrap_or(Elem::ZERO);
                    report("h", k, vec![i as i64, z as i64, j as i64], closed, oracle);
                }
            }
        }
        let Expansion::Word(w) = oracle_expand(&f, OracleExpr::XAInv, k)? else { unreachable!() };
        let mono = w.monomials();
        if mono.keys().any(|&(i, j)| j > 0 || i > k || (-j) as usize > k) {
            report("c", k, vec![-1], Elem::ZERO, Elem::ONE);
        }
        for i in 0..=k {
            for j in 0..=k {
                let closed = coef_closed(&f, &CoefQuery::C { k, i, j })?;
                let oracle = mono.get(&(i, -(j as i64))).copied().unwrap_or(Elem::ZERO);
                report("c", k, vec![i as i64, j as i64], closed, oracle);
            }
        }
    }
    Ok(SweepReport { p, max_k, checked, mismatches })
}

/// One `p`-th power identity compared against the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerIdentity {
    pub p: u32,
    pub expr: String,
    pub passed: bool,
}

fn word_terms(e: Expansion) -> Result<BTreeMap<(usize, i64), Elem>> {
    match e {
        Expansion::Word(w) => Ok(w.monomials()),
        Expansion::Tensor(_) => Err(Error::invalid("expected a word expansion")),
    }
}

fn bump<K: Ord>(f: &Field, m: &mut BTreeMap<K, Elem>, k: K, v: Elem) {
    add_term(f, m, k, v);
    prune(m);
}

/// The three `p`-th power formulas: `(x + c a)^p` for every `c` in `F_p`,
/// `(x (x) a + 1 (x) x)^p` and `(x a^-1)^p`.
pub fn power_identities(p: u32) -> Result<Vec<PowerIdentity>> {
    let f = Field::prime(p)?;
    let (pu, pi) = (p as usize, p as i64);
    let mut out = Vec::new();
    for c in f.elements() {
        let got = word_terms(oracle_expand(&f, OracleExpr::XPlusCA(c), pu)?)?;
        let mut want = BTreeMap::new();
        bump(&f, &mut want, (pu, 0), Elem::ONE);
        bump(&f, &mut want, (0, 1), c);
        bump(&f, &mut want, (0, pi), f.sub(f.pow(c, p as u64), c));
        out.push(PowerIdentity { p, expr: format!("(x+{}a)^p", f.format(c)), passed: got == want });
    }
    let fact = (1..pi).fold(Elem::ONE, |acc, m| f.mul(acc, f.from_int(m)));
    let got = match oracle_expand(&f, OracleExpr::Coproduct, pu)? {
        Expansion::Tensor(t) => t.monomials()?,
        Expansion::Word(_) => return Err(Error::invalid("expected a tensor expansion")),
    };
    let mut want = BTreeMap::new();
    bump(&f, &mut want, (pu, 0, pi), Elem::ONE);
    bump(&f, &mut want, (1, 0, pi), fact);
    bump(&f, &mut want, (1, 0, 1), Elem::ONE);
    bump(&f, &mut want, (0, pu, 0), Elem::ONE);
    out.push(PowerIdentity { p, expr: "(x⊗a+1⊗x)^p".into(), passed: got == want });
    let got = word_terms(oracle_expand(&f, OracleExpr::XAInv, pu)?)?;
    let mut want = BTreeMap::new();
    bump(&f, &mut want, (pu, -pi), Elem::ONE);
    bump(&f, &mut want, (1, -pi), f.from_int(-1));
    bump(&f, &mut want, (1, -1), Elem::ONE);
    out.push(PowerIdentity { p, expr: "(xa^-1)^p".into(), passed: got == want });
    Ok(out)
}

/// Direct vanishing test against the `n = N p^r` description, for all
/// `2 <= n <= max_n` and all nonzero `q` in GF(p^d).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingSweep {
    pub p: u32,
    pub d: u32,
    pub max_n: usize,
    pub checked: usize,
    /// `(n, q)` where the two sides disagree.
    pub discrepancies: Vec<(usize, String)>,
}

pub fn vanishing_sweep(p: u32, d: u32, max_n: usize) -> Result<VanishingSweep> {
    let f = Field::new(p, d)?;
    let mut checked = 0;
    let mut discrepancies = Vec::new();
    for q in f.nonzero_elements() {
        for n in 2..=max_n {
            let v = vanishing_criterion(&f, n, q)?;
            checked += 1;
            if v.holds != v.r.is_some() {
                discrepancies.push((n, f.format(q)));
            }
        }
    }
    Ok(VanishingSweep { p, d, max_n, checked, discrepancies })
}
