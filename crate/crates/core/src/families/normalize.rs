//! Bringing tuples into the canonical shape by rescaling or shifting `x`.

use serde::Serialize;

use super::{Tuple, Variant};
use crate::error::{Error, Result};
use crate::field::{ArtinSchreier, Elem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub tuple: Tuple,
    /// Human-readable record of each change of `x`.
    pub steps: Vec<NormalizationStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizationStep {
    /// `"rescale"` (`x -> w x`), `"shift"` (`x -> x + s (a - 1)`), `"drop"`
    /// (data multiplying `a - 1` when `a = 1`) or `"deferred"` (the normal
    /// form needs a larger field; set by the classifier).
    pub kind: &'static str,
    pub value: String,
}

/// Canonical form: `α₀ ∈ {0, 1}` with `α₋₁ = 0` when `α₀ = 0` for `F`,
/// and `α = 0` for `E`. Raises `ExtendField` when the needed root is
/// missing from the field.
pub fn normalize_tuple(t: &Tuple) -> Result<Normalized> {
    let f = &*t.field;
    let p = f.p() as u64;
    let mut out = t.clone();
    let mut steps = Vec::new();
    match t.variant {
        Variant::R => {}
        Variant::F if t.group.a() == 0 => {
            // a - 1 = 0 makes c and α₋₁ invisible; α₀ still rescales
            out.c = vec![Elem::ZERO; t.group.order()];
            out.alpha[0] = Elem::ZERO;
            if t.c.iter().any(|c| !c.is_zero()) || !t.alpha[0].is_zero() {
                steps.push(NormalizationStep { kind: "drop", value: "c, α₋₁".to_string() });
            }
            let a0 = t.alpha[1];
            if !a0.is_zero() && a0 != Elem::ONE {
                let target = f.inv(a0).unwrap();
                let Some(&w) = f.nth_roots(target, p - 1).first() else {
                    return Err(Error::ExtendField {
                        min_degree: f.min_degree_for_nth_root(target, p - 1),
                        reason: format!("α₀ = {} has no (p-1)-th root of its inverse", f.format(a0)),
                    });
                };
                out.alpha[1] = Elem::ONE;
                steps.push(NormalizationStep { kind: "rescale", value: f.format(w) });
            }
        }
        Variant::F => {
            let (am1, a0) = (t.alpha[0], t.alpha[1]);
            if !a0.is_zero() && a0 != Elem::ONE {
                // (w x)^p = w^p α₋₁ (a^p - 1) + w^(p-1) α₀ (w x)
                let target = f.inv(a0).unwrap();
                let Some(&w) = f.nth_roots(target, p - 1).first() else {
                    return Err(Error::ExtendField {
                        min_degree: f.min_degree_for_nth_root(target, p - 1),
                        reason: format!("α₀ = {} has no (p-1)-th root of its inverse", f.format(a0)),
                    });
                };
                out.alpha = vec![f.mul(f.pow(w, p), am1), Elem::ONE];
                out.c = t.c.iter().map(|&c| f.mul(w, c)).collect();
                steps.push(NormalizationStep { kind: "rescale", value: f.format(w) });
            } else if a0.is_zero() && !am1.is_zero() {
                // y = x - β (a - 1) with β^p = α₋₁ gives y^p = 0
                let beta = f.pth_root(am1);
                out.alpha = vec![Elem::ZERO, Elem::ZERO];
                out.c = (0..t.group.order()).map(|h| f.add(t.c[h], f.mul(beta, f.sub(t.chi[h], Elem::ONE)))).collect();
                steps.push(NormalizationStep { kind: "shift", value: f.format(f.neg(beta)) });
            }
        }
        Variant::E => {
            let alpha = t.alpha[0];
            if !alpha.is_zero() {
                // x + β (a - 1) with β - β^p = α has p-th power equal to itself
                match f.solve_artin_schreier(alpha) {
                    ArtinSchreier::Solved(beta) => {
                        out.alpha = vec![Elem::ZERO];
                        steps.push(NormalizationStep { kind: "shift", value: f.format(beta) });
                    }
                    ArtinSchreier::Unsolvable { min_degree } => {
                        return Err(Error::ExtendField {
                            min_degree,
                            reason: format!("β - β^p = {} has no solution", f.format(alpha)),
                        });
                    }
                }
            }
        }
    }
    Ok(Normalized { tuple: out, steps })
}
