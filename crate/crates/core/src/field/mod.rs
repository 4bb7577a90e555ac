//! Exact arithmetic in GF(p^d).
//!
//! Elements are stored as integer codes `c0 + c1*p + ... + c_{d-1}*p^{d-1}`
//! where `c_i` are the residues of the coefficient vector of the element
//! written in the power basis `1, t, ..., t^{d-1}` modulo the descriptor's
//! monic irreducible polynomial. Multiplication goes through log/exp tables
//! built from a primitive element found at construction time.

mod poly;

pub use poly::Poly;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order the table-driven implementation accepts.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of some `Field`, stored as its coefficient code.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// `p`, `d` and the modulus defining GF(p^d).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub d: u32,
    /// Monic, low degree first, length `d + 1`.
    pub modulus: Vec<u32>,
}

impl FieldDescriptor {
    pub fn new(p: u32, d: u32) -> Result<Self> {
        let modulus = find_irreducible(p, d)?;
        Ok(FieldDescriptor { p, d, modulus })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

// Dense polynomial helpers over F_p used before a `Field` exists.
fn fp_trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn fp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut r: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
    fp_rem_in_place(&mut r, m, p);
    fp_trim(r)
}

fn fp_rem_in_place(r: &mut Vec<u32>, m: &[u32], p: u32) {
    let dm = m.len() - 1;
    let lead_inv = fp_inv(m[dm], p) as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] as u64 * lead_inv % p as u64;
        if c != 0 {
            for (k, &mk) in m.iter().enumerate() {
                let idx = top - dm + k;
                r[idx] = ((r[idx] as u64 + (p as u64 - c) * mk as u64) % p as u64) as u32;
            }
        }
        r.pop();
        while r.last() == Some(&0) && r.len() > dm {
            r.pop();
        }
    }
}

fn fp_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = fp_trim(a.to_vec());
    let mut b = fp_trim(b.to_vec());
    while !b.is_empty() {
        fp_rem_in_place(&mut a, &b, p);
        a = fp_trim(a);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// t^(p^k) mod f, by repeated p-th powering.
fn fp_frobenius_power(f: &[u32], k: u32, p: u32) -> Vec<u32> {
    let mut x = fp_trim(vec![0, 1]);
    let mut tmp = x.clone();
    fp_rem_in_place(&mut tmp, f, p);
    x = fp_trim(tmp);
    for _ in 0..k {
        let mut acc = vec![1u32];
        let mut base = x.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_mulmod(&acc, &base, f, p);
            }
            base = fp_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        x = acc;
    }
    x
}

fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() as u32 - 1;
    if d == 1 {
        return true;
    }
    for k in 1..=d / 2 {
        let mut h = fp_frobenius_power(f, k, p);
        // h - t
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        let g = fp_gcd(f, &fp_trim(h), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `d`
/// over F_p, comparing coefficient sequences constant term first.
pub fn find_irreducible(p: u32, d: u32) -> Result<Vec<u32>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::invalid("extension degree must be at least 1"));
    }
    let order = (p as u64).checked_pow(d).filter(|&q| q <= MAX_FIELD_ORDER);
    if order.is_none() {
        return Err(Error::invalid(format!("GF({p}^{d}) exceeds the supported field size")));
    }
    let count = (p as u64).pow(d);
    // Lexicographic order with c0 most significant: the last coefficient
    // (below the leading 1) varies fastest.
    for idx in 0..count {
        let mut coeffs = vec![0u32; d as usize + 1];
        let mut v = idx;
        for i in (0..d as usize).rev() {
            coeffs[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        coeffs[d as usize] = 1;
        if fp_is_irreducible(&coeffs, p) {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Outcome of solving `beta - beta^p = alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArtinSchreier {
    Solved(Elem),
    /// No solution in this field; one exists in GF(p^min_degree).
    Unsolvable {
        min_degree: u32,
    },
}

/// GF(p^d) with table-driven arithmetic.
#[derive(Clone)]
pub struct Field {
    desc: FieldDescriptor,
    q: u32,
    pows: Vec<u32>,
    add_table: Option<Vec<u32>>,
    exp: Vec<u32>,
    log: Vec<u32>,
    generator: Elem,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.desc.p, self.desc.d)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.desc == other.desc
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: u32, d: u32) -> Result<Self> {
        Self::from_descriptor(FieldDescriptor::new(p, d)?)
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn from_descriptor(desc: FieldDescriptor) -> Result<Self> {
        let p = desc.p;
        let d = desc.d;
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        if desc.modulus.len() != d as usize + 1 || desc.modulus[d as usize] != 1 {
            return Err(Error::invalid("modulus must be monic of degree d"));
        }
        if desc.modulus.iter().any(|&c| c >= p) {
            return Err(Error::invalid("modulus coefficients must lie in [0, p)"));
        }
        if !fp_is_irreducible(&desc.modulus, p) {
            return Err(Error::invalid("modulus is reducible"));
        }
        let q64 = (p as u64).pow(d);
        if q64 > MAX_FIELD_ORDER {
            return Err(Error::invalid("field too large"));
        }
        let q = q64 as u32;
        let mut pows = vec![1u32; d as usize];
        for i in 1..d as usize {
            pows[i] = pows[i - 1] * p;
        }
        let to_coeffs = |c: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(d as usize);
            let mut x = c;
            for _ in 0..d {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let from_coeffs = |v: &[u32]| -> u32 { v.iter().enumerate().map(|(i, &c)| c * pows[i]).sum() };
        let slow_mul = |a: u32, b: u32| -> u32 {
            let r = fp_mulmod(&to_coeffs(a), &to_coeffs(b), &desc.modulus, p);
            from_coeffs(&r)
        };
        // Primitive element: smallest code whose order is q - 1.
        let factors = prime_factors(q64 - 1);
        let slow_pow = |a: u32, mut e: u64| -> u32 {
            let mut r = 1u32;
            let mut b = a;
            while e > 0 {
                if e & 1 == 1 {
                    r = slow_mul(r, b);
                }
                b = slow_mul(b, b);
                e >>= 1;
            }
            r
        };
        let mut generator = 1u32;
        if q > 2 {
            generator = (2..q)
                .find(|&g| factors.iter().all(|&f| slow_pow(g, (q64 - 1) / f) != 1))
                .expect("multiplicative group is cyclic");
        }
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        for i in 0..n {
            exp[i] = cur;
            log[cur as usize] = i as u32;
            cur = slow_mul(cur, generator);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let mut field = Field { desc, q, pows, add_table: None, exp, log, generator: Elem(generator) };
        if d > 1 && q <= 1024 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = field.add_slow(a, b);
                }
            }
            field.add_table = Some(t);
        }
        Ok(field)
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.desc
    }

    pub fn p(&self) -> u32 {
        self.desc.p
    }

    pub fn d(&self) -> u32 {
        self.desc.d
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Fixed generator of the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(Elem)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.desc.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.desc.d as usize {
            return Err(Error::invalid(format!(
                "element has {} coefficients but the field has degree {}",
                coeffs.len(),
                self.desc.d
            )));
        }
        let mut code = 0u32;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.desc.p {
                return Err(Error::invalid(format!("coefficient {c} not a residue mod {}", self.desc.p)));
            }
            code += c * self.pows[i];
        }
        Ok(Elem(code))
    }

    pub fn coeffs(&self, e: Elem) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.desc.d as usize);
        let mut x = e.0;
        for _ in 0..self.desc.d {
            v.push(x % self.desc.p);
            x /= self.desc.p;
        }
        v
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.desc.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        for i in 0..self.desc.d as usize {
            let s = (a % p + b % p) % p;
            out += s * self.pows[i];
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.desc.d == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.desc.p { s - self.desc.p } else { s });
        }
        match &self.add_table {
            Some(t) => Elem(t[(a.0 * self.q + b.0) as usize]),
            None => Elem(self.add_slow(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.desc.d == 1 {
            return Elem(if a.0 == 0 { 0 } else { self.desc.p - a.0 });
        }
        let p = self.desc.p;
        let mut x = a.0;
        let mut out = 0u32;
        for i in 0..self.desc.d as usize {
            let c = x % p;
            out += ((p - c) % p) * self.pows[i];
            x /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if self.desc.d == 1 && self.q < 65536 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.desc.p as u64) as u32);
        }
        let la = self.log[a.0 as usize] as usize;
        let lb = self.log[b.0 as usize] as usize;
        Elem(self.exp[la + lb])
    }

    /// `acc + a*b`
    #[inline]
    pub fn mul_add(&self, acc: Elem, a: Elem, b: Elem) -> Elem {
        self.add(acc, self.mul(a, b))
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        let n = self.q - 1;
        let la = self.log[a.0 as usize];
        Some(Elem(self.exp[((n - la) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let n = (self.q - 1) as u64;
        let la = self.log[a.0 as usize] as u64;
        Elem(self.exp[((la * (e % n)) % n) as usize])
    }

    /// `a^e` for a signed exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_i(&self, a: Elem, e: i64) -> Elem {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            self.pow(self.inv(a).expect("negative power of zero"), (-e) as u64)
        }
    }

    /// Discrete log to the fixed generator.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = (self.q - 1) as u64;
        Some(n / gcd(l, n))
    }

    pub fn in_prime_field(&self, a: Elem) -> bool {
        a.0 < self.desc.p
    }

    /// Absolute trace to F_p, returned as a residue.
    pub fn trace(&self, a: Elem) -> u32 {
        let mut acc = Elem::ZERO;
        let mut cur = a;
        for _ in 0..self.desc.d {
            acc = self.add(acc, cur);
            cur = self.pow(cur, self.desc.p as u64);
        }
        debug_assert!(self.in_prime_field(acc));
        acc.0
    }

    /// Primitive `n`-th root of unity: `g^((q-1)/n)` for the fixed generator `g`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Elem> {
        if n == 0 {
            return Err(Error::invalid("root of unity order must be positive"));
        }
        let p = self.desc.p as u64;
        if n.is_multiple_of(p) {
            return Err(Error::invalid(format!("no primitive {n}-th roots of unity in characteristic {p}")));
        }
        let qm1 = (self.q - 1) as u64;
        if !qm1.is_multiple_of(n) {
            return Err(Error::ExtendField {
                min_degree: self.min_degree_for_roots_of_unity(n),
                reason: format!("{n} does not divide |GF({}^{})*|", p, self.desc.d),
            });
        }
        Ok(self.pow(self.generator, qm1 / n))
    }

    /// Smallest multiple `D` of `d` with `n | p^D - 1`.
    pub fn min_degree_for_roots_of_unity(&self, n: u64) -> u32 {
        let p = self.desc.p as u64;
        let mut dd = self.desc.d;
        loop {
            let m = pow_mod(p, dd as u64, n);
            if n == 1 || m == 1 % n {
                return dd;
            }
            dd += self.desc.d;
        }
    }

    /// The unique `beta` with `beta^p = a`, namely `a^(p^(d-1))`.
    pub fn pth_root(&self, a: Elem) -> Elem {
        let mut r = a;
        for _ in 1..self.desc.d {
            r = self.pow(r, self.desc.p as u64);
        }
        r
    }

    /// Solve `beta - beta^p = a`; smallest solution by code.
    pub fn solve_artin_schreier(&self, a: Elem) -> ArtinSchreier {
        if a.is_zero() {
            return ArtinSchreier::Solved(Elem::ZERO);
        }
        for b in self.elements() {
            let v = self.sub(b, self.pow(b, self.desc.p as u64));
            if v == a {
                return ArtinSchreier::Solved(b);
            }
        }
        // Solvable over GF(p^(dm)) iff m * Tr(a) = 0 in F_p, i.e. p | m.
        ArtinSchreier::Unsolvable { min_degree: self.desc.d * self.desc.p }
    }

    /// A field embedding into `big`, as the table of images by code. Sends
    /// `t` to the first root of this field's modulus inside `big`.
    pub fn embedding_into(&self, big: &Field) -> Result<Vec<Elem>> {
        let (d, dd) = (self.desc.d, big.desc.d);
        if big.desc.p != self.desc.p || dd % d != 0 {
            return Err(Error::invalid(format!("GF({}^{d}) does not embed in GF({}^{dd})", self.desc.p, big.desc.p)));
        }
        if d == 1 {
            return Ok(self.elements().map(|e| big.from_int(e.code() as i64)).collect());
        }
        let eval = |theta: Elem| {
            let mut acc = Elem::ZERO;
            for &c in self.desc.modulus.iter().rev() {
                acc = big.add(big.mul(acc, theta), big.from_int(c as i64));
            }
            acc
        };
        // the subfield of order q is generated by g^((Q-1)/(q-1))
        let step = (big.q as u64 - 1) / (self.q as u64 - 1);
        let sub_gen = big.pow(big.generator, step);
        let theta = (0..self.q as u64 - 1)
            .map(|k| big.pow(sub_gen, k))
            .find(|&th| eval(th).is_zero())
            .ok_or_else(|| Error::invalid("modulus has no root in the larger field"))?;
        Ok(self
            .elements()
            .map(|e| {
                let mut acc = Elem::ZERO;
                for &c in self.coeffs(e).iter().rev() {
                    acc = big.add(big.mul(acc, theta), big.from_int(c as i64));
                }
                acc
            })
            .collect())
    }

    /// All `b` with `b^n = a`, ascending by code.
    pub fn nth_roots(&self, a: Elem, n: u64) -> Vec<Elem> {
        self.elements().filter(|&b| self.pow(b, n) == a).collect()
    }

    /// Smallest multiple `D` of `d` such that the nonzero `a` is an `n`-th power in GF(p^D).
    pub fn min_degree_for_nth_root(&self, a: Elem, n: u64) -> u32 {
        let o = self.mult_order(a).expect("nonzero element");
        let p = self.desc.p as u64;
        let mut dd = self.desc.d;
        loop {
            // In a cyclic group of order M the n-th powers form the subgroup of
            // order M / gcd(n, M).
            let m = (p as u128).pow(dd) - 1;
            let g = gcd_u128(n as u128, m);
            if (m / g).is_multiple_of(o as u128) {
                return dd;
            }
            dd += self.desc.d;
            if dd > 64 {
                return dd;
            }
        }
    }

    /// Text form `c0+c1*t+c2*t^2`; zero terms are omitted, zero is `0`.
    pub fn format(&self, a: Elem) -> String {
        if self.desc.d == 1 {
            return a.0.to_string();
        }
        let cs = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in cs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Parse `c0+c1*t+...`, `[c0,c1,...]`, a bare integer, `t`, or `-c` forms.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let bad = |m: &str| Error::parse(format!("field element {s:?}"), m.to_string());
        if s.is_empty() {
            return Err(bad("empty"));
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(|| bad("unterminated list"))?;
            let mut cs = Vec::new();
            for part in inner.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                let v: i64 = part.parse().map_err(|_| bad("non-integer coefficient"))?;
                cs.push(v.rem_euclid(self.desc.p as i64) as u32);
            }
            return self.from_coeffs(&cs).map_err(|e| bad(&e.to_string()));
        }
        let mut acc = vec![0i64; self.desc.d as usize];
        let normalized = s.replace(' ', "").replace('-', "+-");
        for term in normalized.split('+').filter(|x| !x.is_empty()) {
            let (neg, term) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term),
            };
            let (coef, power) = if let Some(idx) = term.find('t') {
                let c = term[..idx].trim_end_matches('*');
                let c: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad("bad coefficient"))? };
                let rest = &term[idx + 1..];
                let pw: usize = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(|| bad("expected ^ after t"))?
                        .parse()
                        .map_err(|_| bad("bad exponent"))?
                };
                (c, pw)
            } else {
                (term.parse::<i64>().map_err(|_| bad("bad integer"))?, 0)
            };
            if power >= self.desc.d as usize {
                // Reduce t^power through field arithmetic.
                let tpow = self.pow(self.t(), power as u64);
                let cs = self.coeffs(self.mul(tpow, self.from_int(coef)));
                for (i, c) in cs.iter().enumerate() {
                    acc[i] += if neg { -(*c as i64) } else { *c as i64 };
                }
                continue;
            }
            acc[power] += if neg { -coef } else { coef };
        }
        let cs: Vec<u32> = acc.iter().map(|&c| c.rem_euclid(self.desc.p as i64) as u32).collect();
        self.from_coeffs(&cs)
    }

    /// The class of `t`; equals the prime-field element 0 when `d = 1`
    /// (where the modulus is `t` itself).
    pub fn t(&self) -> Elem {
        if self.desc.d == 1 {
            // t is congruent to -modulus[0] modulo a monic linear modulus
            self.neg(Elem(self.desc.modulus[0]))
        } else {
            Elem(self.desc.p)
        }
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

pub(crate) fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut r = 1u128;
    let mut b = (base % m) as u128;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeddings_are_ring_maps() {
        for (p, d, dd) in [(2, 2, 4), (3, 1, 2), (3, 2, 4), (5, 2, 4), (2, 3, 6)] {
            let small = Field::new(p, d).unwrap();
            let big = Field::new(p, dd).unwrap();
            let m = small.embedding_into(&big).unwrap();
            for a in small.elements() {
                for b in small.elements() {
                    assert_eq!(m[small.add(a, b).code() as usize], big.add(m[a.code() as usize], m[b.code() as usize]));
                    assert_eq!(m[small.mul(a, b).code() as usize], big.mul(m[a.code() as usize], m[b.code() as usize]));
                }
            }
        }
        assert!(Field::new(2, 2).unwrap().embedding_into(&Field::new(2, 3).unwrap()).is_err());
    }

    #[test]
    fn irreducible_moduli() {
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(find_irreducible(2, 3).unwrap(), find_irreducible(2, 3).unwrap());
    }

    #[test]
    fn quadratic_scan_matches_root_check() {
        // A monic quadratic is irreducible iff it has no root.
        for p in [2u32, 3, 5, 7] {
            let m = find_irreducible(p, 2).unwrap();
            for x in 0..p as u64 {
                let v = (m[0] as u64 + m[1] as u64 * x + x * x) % p as u64;
                assert_ne!(v, 0);
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f4 = Field::new(2, 2).unwrap();
        let w = f4.primitive_root_of_unity(3).unwrap();
        assert_eq!(f4.add(f4.add(f4.mul(w, w), w), f4.one()), f4.zero());
        assert_eq!(f4.pow(w, 3), f4.one());
        assert_eq!(w, f4.t());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.primitive_root_of_unity(1).unwrap(), f5.one());
        assert_eq!(f5.primitive_root_of_unity(4).unwrap(), f5.from_int(2));
        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            f2.primitive_root_of_unity(3),
            Err(Error::ExtendField { min_degree: 2, reason: "3 does not divide |GF(2^1)*|".into() })
        );
    }

    #[test]
    fn pth_roots() {
        let f4 = Field::new(2, 2).unwrap();
        let w = f4.t();
        assert_eq!(f4.pth_root(w), f4.mul(w, w));
        let f9 = Field::new(3, 2).unwrap();
        let two = f9.from_int(2);
        let b = f9.pth_root(two);
        assert_eq!(f9.pow(b, 3), two);
        let f7 = Field::prime(7).unwrap();
        for a in f7.elements() {
            assert_eq!(f7.pth_root(a), a);
        }
    }

    #[test]
    fn artin_schreier() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.solve_artin_schreier(f2.zero()), ArtinSchreier::Solved(f2.zero()));
        assert_eq!(f2.solve_artin_schreier(f2.one()), ArtinSchreier::Unsolvable { min_degree: 2 });
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.solve_artin_schreier(f4.one()), ArtinSchreier::Solved(f4.t()));
    }

    #[test]
    fn text_forms() {
        let f9 = Field::new(3, 2).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.parse(&f9.format(a)).unwrap(), a);
        }
        assert_eq!(f9.parse("[1,2]").unwrap(), f9.parse("1+2*t").unwrap());
        assert_eq!(f9.parse("-1").unwrap(), f9.from_int(2));
        assert_eq!(f9.parse("t^2").unwrap(), f9.mul(f9.t(), f9.t()));
    }

    #[test]
    fn nth_root_extension_degree() {
        let f5 = Field::prime(5).unwrap();
        // 3 is not a square mod 5, but every element of F_5 is a square in F_25.
        assert_eq!(f5.nth_roots(f5.from_int(3), 2), vec![]);
        assert_eq!(f5.min_degree_for_nth_root(f5.from_int(3), 2), 2);
        assert_eq!(f5.min_degree_for_nth_root(f5.from_int(4), 2), 1);
    }
}
