use super::{Elem, Field};

/// Dense univariate polynomial over a `Field`, low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<Elem>);

impl Poly {
    pub fn new(mut c: Vec<Elem>) -> Self {
        while c.last().is_some_and(|e| e.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Elem::ONE])
    }

    /// `t - r`
    pub fn linear(f: &Field, r: Elem) -> Self {
        Poly(vec![f.neg(r), Elem::ONE])
    }

    pub fn monomial(coef: Elem, deg: usize) -> Self {
        let mut c = vec![Elem::ZERO; deg + 1];
        c[deg] = coef;
        Poly::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.0.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn lead(&self) -> Elem {
        self.0.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn add(&self, f: &Field, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Field, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn scale(&self, f: &Field, s: Elem) -> Poly {
        Poly::new(self.0.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, f: &Field, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, b);
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, f: &Field, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lead()).expect("nonzero leading coefficient");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], inv);
            if c.is_zero() {
                continue;
            }
            q[top - dd] = c;
            for (k, &dk) in d.0.iter().enumerate() {
                let idx = top - dd + k;
                r[idx] = f.sub(r[idx], f.mul(c, dk));
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, f: &Field, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = f.inv(self.lead()).unwrap();
        self.scale(f, inv)
    }

    pub fn gcd(&self, f: &Field, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, f: &Field, o: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1);
            let s2 = s0.sub(f, &q.mul(f, &s1));
            let t2 = t0.sub(f, &q.mul(f, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lead()).unwrap();
        (r0.scale(f, inv), s0.scale(f, inv), t0.scale(f, inv))
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.0.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, f: &Field, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::one().rem(f, m);
        let mut base = self.rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Roots in the field with multiplicities, ascending by code.
    pub fn roots_with_multiplicity(&self, f: &Field) -> Vec<(Elem, usize)> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        for r in f.elements() {
            let lin = Poly::linear(f, r);
            let mut m = 0;
            loop {
                if cur.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (qq, rr) = cur.divrem(f, &lin);
                if !rr.is_zero() {
                    break;
                }
                cur = qq;
                m += 1;
            }
            if m > 0 {
                out.push((r, m));
            }
        }
        out
    }

    /// Degrees of the irreducible factors of a nonconstant polynomial
    /// (distinct-degree factorisation), ascending and without repeats.
    pub fn irreducible_factor_degrees(&self, f: &Field) -> Vec<usize> {
        let mut g = self.monic(f);
        let mut out = Vec::new();
        let q = f.order() as u64;
        let t = Poly(vec![Elem::ZERO, Elem::ONE]);
        let mut h = t.clone();
        let mut k = 0usize;
        while g.degree().unwrap_or(0) > 0 {
            k += 1;
            h = h.pow_mod(f, q, &g);
            let common = h.sub(f, &t).gcd(f, &g);
            if common.degree().unwrap_or(0) > 0 {
                out.push(k);
                // strip all copies of these factors
                loop {
                    let c = common.gcd(f, &g);
                    if c.degree().unwrap_or(0) == 0 {
                        break;
                    }
                    g = g.divrem(f, &c).0;
                }
                if g.degree().unwrap_or(0) > 0 {
                    h = h.rem(f, &g);
                }
            }
            if k > 64 {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        let f = Field::prime(5).unwrap();
        let a = Poly::linear(&f, f.from_int(1)).mul(&f, &Poly::linear(&f, f.from_int(2)));
        let b = Poly::linear(&f, f.from_int(2)).mul(&f, &Poly::linear(&f, f.from_int(3)));
        assert_eq!(a.gcd(&f, &b), Poly::linear(&f, f.from_int(2)));
        let (q, r) = a.divrem(&f, &Poly::linear(&f, f.from_int(1)));
        assert!(r.is_zero());
        assert_eq!(q, Poly::linear(&f, f.from_int(2)));
    }

    #[test]
    fn factor_degrees() {
        let f = Field::prime(2).unwrap();
        // (t^2+t+1)(t+1)^2
        let irr = Poly(vec![Elem::ONE, Elem::ONE, Elem::ONE]);
        let lin = Poly::linear(&f, f.one());
        let p = irr.mul(&f, &lin).mul(&f, &lin);
        assert_eq!(p.irreducible_factor_degrees(&f), vec![1, 2]);
        assert_eq!(p.roots_with_multiplicity(&f), vec![(f.one(), 2)]);
    }
}
