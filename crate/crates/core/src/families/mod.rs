//! The three families of pointed rank-one Hopf algebras, built from tuples.
//!
//! Variant `R` has `g x g^-1 = chi(g) x` with `chi(a) != 1`, variant `F`
//! has `chi(a) = 1` and a twisting map `c`, variant `E` has
//! `g x g^-1 = x + c(g)(a - 1)` with `c` additive.

mod build;
mod normalize;
mod smash;
mod validate;

pub use build::{build_family, build_unchecked, taft, taft_tuple, third_type_cyclic};
pub use normalize::{normalize_tuple, NormalizationStep, Normalized};
pub use smash::{build_smash_oracle, family_basis_in_smash};
pub use validate::{validate_tuple, Violation};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::group::{Group, GroupMap, GroupSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    R,
    F,
    E,
}

/// A field value in a tuple file: an integer or a string accepted by
/// [`Field::parse`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn resolve(&self, f: &Field) -> Result<Elem> {
        match self {
            Scalar::Int(n) => Ok(f.from_int(*n)),
            Scalar::Text(s) => f.parse(s),
        }
    }

    pub fn of(f: &Field, e: Elem) -> Scalar {
        if f.d() == 1 {
            Scalar::Int(e.code() as i64)
        } else {
            Scalar::Text(f.format(e))
        }
    }
}

fn one_field_degree() -> u32 {
    1
}

/// Tuple file contents.
///
/// `chi` and `c` list values per group element, or per generator for a
/// product of cyclic groups (then extended to the whole group). Missing
/// `chi` means trivial, missing `c` means zero. `alpha` is
/// `[α₋₁, α₀, …, α_{r-1}]` for `R`, `[α₋₁, α₀]` for `F` and `[α]` for `E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleSpec {
    pub p: u32,
    #[serde(default = "one_field_degree")]
    pub field_degree: u32,
    pub variant: Variant,
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chi: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub c: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alpha: Vec<Scalar>,
}

/// A tuple with every value resolved in a concrete field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tuple {
    pub variant: Variant,
    pub field: Arc<Field>,
    pub group: Group,
    pub group_spec: GroupSpec,
    pub chi: GroupMap,
    pub c: GroupMap,
    pub alpha: Vec<Elem>,
}

impl Tuple {
    pub fn from_spec(spec: &TupleSpec) -> Result<Tuple> {
        let field = Arc::new(Field::new(spec.p, spec.field_degree)?);
        Self::from_spec_in(spec, field)
    }

    /// Resolves the spec over a given field, which must have the spec's
    /// characteristic and contain GF(p^field_degree).
    pub fn from_spec_in(spec: &TupleSpec, field: Arc<Field>) -> Result<Tuple> {
        if field.p() != spec.p {
            return Err(Error::invalid(format!("field characteristic {} differs from p = {}", field.p(), spec.p)));
        }
        let group = Group::from_spec(&spec.group)?;
        let f = &*field;
        let resolve = |xs: &[Scalar]| xs.iter().map(|s| s.resolve(f)).collect::<Result<Vec<Elem>>>();
        let chi_raw = resolve(&spec.chi)?;
        let c_raw = resolve(&spec.c)?;
        let chi = extend_character(&group, f, &chi_raw)?;
        let c = extend_cmap(&group, f, &chi, &c_raw)?;
        let mut alpha = resolve(&spec.alpha)?;
        let want = match spec.variant {
            Variant::R => None,
            Variant::F => Some(2),
            Variant::E => Some(1),
        };
        if alpha.is_empty() {
            alpha = vec![Elem::ZERO; want.unwrap_or(1)];
        }
        if let Some(w) = want {
            if alpha.len() != w {
                return Err(Error::invalid(format!(
                    "variant {:?} takes {w} alpha value(s), got {}",
                    spec.variant,
                    alpha.len()
                )));
            }
        }
        Ok(Tuple { variant: spec.variant, field, group, group_spec: spec.group.clone(), chi, c, alpha })
    }

    pub fn to_spec(&self) -> TupleSpec {
        let f = &*self.field;
        let list = |xs: &[Elem]| xs.iter().map(|&e| Scalar::of(f, e)).collect();
        TupleSpec {
            p: f.p(),
            field_degree: f.d(),
            variant: self.variant,
            group: self.group_spec.clone(),
            chi: if self.chi.iter().all(|&v| v == Elem::ONE) { Vec::new() } else { list(&self.chi) },
            c: if self.c.iter().all(|v| v.is_zero()) { Vec::new() } else { list(&self.c) },
            alpha: list(&self.alpha),
        }
    }

    /// The same tuple over a larger field containing this one.
    pub fn lift_to(&self, big: Arc<Field>) -> Result<Tuple> {
        let m = self.field.embedding_into(&big)?;
        let map = |xs: &[Elem]| xs.iter().map(|e| m[e.code() as usize]).collect::<Vec<_>>();
        Ok(Tuple {
            variant: self.variant,
            field: big.clone(),
            group: self.group.clone(),
            group_spec: self.group_spec.clone(),
            chi: map(&self.chi),
            c: map(&self.c),
            alpha: map(&self.alpha),
        })
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// `chi(a)`.
    pub fn q(&self) -> Elem {
        self.chi[self.group.a()]
    }

    /// Multiplicative order of `chi(a)`.
    pub fn big_n(&self) -> u64 {
        self.field.mult_order(self.q()).expect("character values are nonzero")
    }

    /// Number of `α_i` beyond `α₋₁` for variant `R`; zero otherwise.
    pub fn r(&self) -> u32 {
        match self.variant {
            Variant::R => self.alpha.len().saturating_sub(1) as u32,
            _ => 0,
        }
    }

    /// Degree of `x`.
    pub fn n(&self) -> usize {
        match self.variant {
            Variant::R => (self.big_n() * (self.p() as u64).pow(self.r())) as usize,
            Variant::F | Variant::E => self.p() as usize,
        }
    }

    pub fn dim(&self) -> usize {
        self.group.order() * self.n()
    }

    /// The nilpotent-type flag: `x^n = 0` for this choice of `x`.
    pub fn is_nilpotent_type(&self) -> bool {
        match self.variant {
            Variant::R => self.alpha[0].is_zero(),
            Variant::F => self.alpha[1].is_zero(),
            Variant::E => false,
        }
    }

    /// Deterministic key used to sort grid output.
    pub fn key(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("tuple specs serialize")
    }
}

/// Per-element values from either a full list or one value per generator.
fn generator_values(g: &Group, vals: &[Elem], what: &str) -> Result<Option<Vec<Elem>>> {
    if vals.len() == g.order() {
        return Ok(None);
    }
    if g.cyclic_orders().is_some() && vals.len() == g.generators().len() {
        return Ok(Some(vals.to_vec()));
    }
    Err(Error::invalid(format!(
        "{what} has {} values; expected {} (one per element) or {} (one per generator)",
        vals.len(),
        g.order(),
        g.generators().len()
    )))
}

fn extend_character(g: &Group, f: &Field, vals: &[Elem]) -> Result<GroupMap> {
    if vals.is_empty() {
        return Ok(vec![Elem::ONE; g.order()]);
    }
    let Some(gen_vals) = generator_values(g, vals, "chi")? else {
        return Ok(vals.to_vec());
    };
    let gens = g.generators();
    let mut out = vec![Elem::ZERO; g.order()];
    out[0] = Elem::ONE;
    for (h, parent, s) in g.spanning_tree() {
        let k = gens.iter().position(|&x| x == s).unwrap();
        out[h] = f.mul(out[parent], gen_vals[k]);
    }
    Ok(out)
}

fn extend_cmap(g: &Group, f: &Field, chi: &[Elem], vals: &[Elem]) -> Result<GroupMap> {
    if vals.is_empty() {
        return Ok(vec![Elem::ZERO; g.order()]);
    }
    let Some(gen_vals) = generator_values(g, vals, "c")? else {
        return Ok(vals.to_vec());
    };
    let gens = g.generators();
    let mut out = vec![Elem::ZERO; g.order()];
    // c(h s) = chi(s) c(h) + c(s)
    for (h, parent, s) in g.spanning_tree() {
        let k = gens.iter().position(|&x| x == s).unwrap();
        out[h] = f.add(f.mul(chi[s], out[parent]), gen_vals[k]);
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod tests;
