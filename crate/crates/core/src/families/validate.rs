//! Side conditions of the three tuple families.

use serde::Serialize;

use super::{Tuple, Variant};
use crate::field::Elem;
use crate::group::{check_character, check_cmap};

/// A failed side condition. `clause` is a stable identifier such as
/// `"second(2)"`; `message` says what failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.clause, self.message)
    }
}

fn v(clause: &str, message: impl Into<String>) -> Violation {
    Violation { clause: clause.to_string(), message: message.into() }
}

/// Checks every side condition of the tuple's family; empty means valid.
pub fn validate_tuple(t: &Tuple) -> Vec<Violation> {
    let f = &*t.field;
    let g = &t.group;
    let a = g.a();
    let p = f.p() as i64;
    let mut out = Vec::new();

    if let Err(e) = check_character(g, f, &t.chi) {
        out.push(v("character", e.to_string()));
        return out;
    }
    if let Err(e) = check_cmap(g, f, &t.chi, &t.c) {
        out.push(v("cocycle", e.to_string()));
        return out;
    }
    let elems = 0..g.order();
    let apow = |e: i64| g.pow(a, e);

    match t.variant {
        Variant::R => {
            let q = t.q();
            if q == Elem::ONE {
                out.push(v("H_R", "χ(a) ≠ 1 required"));
                return out;
            }
            if t.c.iter().any(|c| !c.is_zero()) {
                out.push(v("H_R", "c must vanish"));
            }
            let big_n = t.big_n() as i64;
            let r = t.r();
            if r > 0 {
                out.push(v("rank one", format!("r = 0 required, got r = {r}")));
            }
            let n = t.n() as i64;
            let pr = p.pow(r);
            let am1 = t.alpha[0];
            if !am1.is_zero() && apow(n) == 0 {
                out.push(v("H_R", "α₋₁ = 0 required when a^n = 1"));
            }
            for (i, &ai) in t.alpha[1..].iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                let e = big_n * (pr - p.pow(i as u32));
                if apow(e) != 0 {
                    out.push(v("H_R(1)", format!("α_{i} ≠ 0 needs a^{e} = 1")));
                }
                if let Some(h) = elems.clone().find(|&h| f.pow_i(t.chi[h], e) != Elem::ONE) {
                    out.push(v("H_R(1)", format!("α_{i} ≠ 0 needs χ({})^{e} = 1", g.name(h))));
                }
            }
            if !am1.is_zero() {
                let e = big_n * pr;
                if let Some(h) = elems.clone().find(|&h| f.pow_i(t.chi[h], e) != Elem::ONE) {
                    out.push(v("H_R(2)", format!("α₋₁ ≠ 0 needs χ({})^{e} = 1", g.name(h))));
                }
            }
        }
        Variant::F => {
            if t.q() != Elem::ONE {
                out.push(v("second", "χ(a) = 1 required"));
            }
            if !t.c[a].is_zero() {
                out.push(v("second", "c(a) = 0 required"));
            }
            let (am1, a0) = (t.alpha[0], t.alpha[1]);
            if a0 != Elem::ZERO && a0 != Elem::ONE {
                out.push(v("second", "α₀ ∈ {0,1} required (normalize the tuple)"));
                return out;
            }
            let ap_trivial = apow(p) == 0;
            if a0.is_zero() {
                if !am1.is_zero() {
                    out.push(v("second", "α₀ = 0 forces α₋₁ = 0 (normalize the tuple)"));
                }
                if !ap_trivial {
                    if let Some(h) = elems.clone().find(|&h| !t.c[h].is_zero()) {
                        out.push(v("second(1)", format!("c({}) (a^p - 1) ≠ 0", g.name(h))));
                    }
                }
            } else {
                if apow(p) != a {
                    out.push(v("second(2)", "a^p ≠ a"));
                }
                if let Some(h) = elems.clone().find(|&h| !f.in_prime_field(t.chi[h])) {
                    out.push(v("second(2)", format!("χ({}) ∈ F_p required", g.name(h))));
                }
                if a != 0 {
                    let bad = elems.clone().find(|&h| {
                        let c = t.c[h];
                        let lhs = f.add(f.mul(am1, f.sub(t.chi[h], Elem::ONE)), f.sub(f.pow(c, p as u64), c));
                        !lhs.is_zero()
                    });
                    if let Some(h) = bad {
                        out.push(v("second(2)", format!("α₋₁(χ(g)-1) + c(g)^p - c(g) ≠ 0 at g = {}", g.name(h))));
                    }
                }
            }
        }
        Variant::E => {
            if g.element_order(a) as i64 % p != 0 {
                out.push(v("H_E", "p must divide the order of a"));
            }
            if let Some(h) = elems.clone().find(|&h| t.chi[h] != Elem::ONE) {
                out.push(v("H_E", format!("χ must be trivial, χ({}) ≠ 1", g.name(h))));
            }
            if t.c[a] != Elem::ONE {
                out.push(v("H_E", "c(a) = 1 required"));
            }
            if apow(p) != 0 {
                if let Some(h) = elems.clone().find(|&h| !f.in_prime_field(t.c[h])) {
                    out.push(v("H_E", format!("c(g)∈F_p required (fails at g = {})", g.name(h))));
                }
            }
        }
    }
    out
}
