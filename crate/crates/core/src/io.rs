//! JSON files: raw algebras with sparse structure constants, and tuples.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{sparse_normalize, StructAlgebra};
use crate::error::{Error, Result};
use crate::families::TupleSpec;
use crate::field::{Elem, Field, FieldDescriptor};
use crate::hopfcore::HopfAlgebra;

/// Raw algebra file. `mult` entries `[i, j, k, c]` mean `e_i e_j ∋ c e_k`,
/// `comult` entries `[i, j, k, c]` mean `Δ(e_i) ∋ c e_j ⊗ e_k`, `antipode`
/// entries `[i, k, c]` mean `S(e_i) ∋ c e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub field: FieldDescriptor,
    pub unit: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    pub antipode: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Either kind of input file.
#[derive(Clone, Debug)]
pub enum Input {
    Tuple(TupleSpec),
    Algebra(AlgebraFile),
}

pub fn to_file(h: &HopfAlgebra) -> AlgebraFile {
    let f = h.field();
    let n = h.dim();
    let fmt = |e: Elem| f.format(e);
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for &(k, c) in &h.alg.mult[i * n + j] {
                mult.push((i, j, k as usize, fmt(c)));
            }
        }
    }
    let nn = n as u64;
    let mut comult = Vec::new();
    for (i, terms) in h.comult.iter().enumerate() {
        for &(key, c) in terms {
            comult.push((i, (key / nn) as usize, (key % nn) as usize, fmt(c)));
        }
    }
    let mut antipode = Vec::new();
    for (i, terms) in h.antipode.iter().enumerate() {
        for &(k, c) in terms {
            antipode.push((i, k as usize, fmt(c)));
        }
    }
    AlgebraFile {
        dim: n,
        field: f.descriptor().clone(),
        unit: h.alg.unit.iter().map(|&e| fmt(e)).collect(),
        mult,
        comult,
        counit: h.counit.iter().map(|&e| fmt(e)).collect(),
        antipode,
        labels: h.labels.clone(),
    }
}

fn parse_at(f: &Field, loc: impl Fn() -> String, s: &str) -> Result<Elem> {
    f.parse(s).map_err(|e| Error::parse(loc(), e.to_string()))
}

fn check_index(loc: &dyn Fn() -> String, i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::parse(loc(), format!("index {i} out of range for dimension {n}")));
    }
    Ok(())
}

pub fn from_file(a: &AlgebraFile) -> Result<HopfAlgebra> {
    let f = Arc::new(Field::from_descriptor(a.field.clone())?);
    let n = a.dim;
    let dense = |name: &str, xs: &[String]| -> Result<Vec<Elem>> {
        if xs.len() != n {
            return Err(Error::parse(name.to_string(), format!("has {} entries, expected {n}", xs.len())));
        }
        xs.iter().enumerate().map(|(i, s)| parse_at(&f, || format!("{name}[{i}]"), s)).collect()
    };
    let unit = dense("unit", &a.unit)?;
    let counit = dense("counit", &a.counit)?;
    let mut mult = vec![Vec::new(); n * n];
    for (t, (i, j, k, c)) in a.mult.iter().enumerate() {
        let loc = || format!("mult[{t}]");
        for &x in [i, j, k] {
            check_index(&loc, x, n)?;
        }
        mult[i * n + j].push((*k as u32, parse_at(&f, loc, c)?));
    }
    let mult = mult.into_iter().map(|v| sparse_normalize(&f, v)).collect();
    let mut comult = vec![Vec::new(); n];
    for (t, (i, j, k, c)) in a.comult.iter().enumerate() {
        let loc = || format!("comult[{t}]");
        for &x in [i, j, k] {
            check_index(&loc, x, n)?;
        }
        comult[*i].push((*j as u64 * n as u64 + *k as u64, parse_at(&f, loc, c)?));
    }
    let comult = comult.into_iter().map(|v| sparse_normalize(&f, v)).collect();
    let mut antipode = vec![Vec::new(); n];
    for (t, (i, k, c)) in a.antipode.iter().enumerate() {
        let loc = || format!("antipode[{t}]");
        for &x in [i, k] {
            check_index(&loc, x, n)?;
        }
        antipode[*i].push((*k as u32, parse_at(&f, loc, c)?));
    }
    let antipode = antipode.into_iter().map(|v| sparse_normalize(&f, v)).collect();
    if let Some(l) = &a.labels {
        if l.len() != n {
            return Err(Error::parse("labels", format!("has {} entries, expected {n}", l.len())));
        }
    }
    let alg = StructAlgebra::new(f, n, unit, mult)?;
    HopfAlgebra::new(alg, comult, counit, antipode, a.labels.clone())
}

fn json_error(path: &str, e: serde_json::Error) -> Error {
    Error::parse(format!("{path}:{}:{}", e.line(), e.column()), e.to_string())
}

/// Reads a tuple file (has `variant`) or an algebra file (has `mult`).
pub fn read_input(path: &Path) -> Result<Input> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{name}: {e}")))?;
    parse_input(&name, &text)
}

pub fn parse_input(name: &str, text: &str) -> Result<Input> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| json_error(name, e))?;
    if v.get("variant").is_some() {
        serde_json::from_value(v).map(Input::Tuple).map_err(|e| Error::parse(name.to_string(), e.to_string()))
    } else if v.get("mult").is_some() {
        serde_json::from_value(v).map(Input::Algebra).map_err(|e| Error::parse(name.to_string(), e.to_string()))
    } else {
        Err(Error::parse(name.to_string(), "neither a tuple file (\"variant\") nor an algebra file (\"mult\")"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_family;
    use crate::families::tests::{a_p, c8_example};

    #[test]
    fn algebra_files_round_trip() {
        for t in [a_p(2), c8_example()] {
            let h = build_family(&t).unwrap();
            let file = to_file(&h);
            let text = serde_json::to_string(&file).unwrap();
            let back = match parse_input("mem", &text).unwrap() {
                Input::Algebra(a) => from_file(&a).unwrap(),
                Input::Tuple(_) => panic!("algebra read as tuple"),
            };
            assert!(back.same_structure(&h));
            assert_eq!(back.labels, h.labels);
        }
    }

    #[test]
    fn errors_carry_locations() {
        let h = build_family(&a_p(2)).unwrap();
        let mut file = to_file(&h);
        file.mult[0].2 = 9;
        assert!(from_file(&file).unwrap_err().to_string().contains("mult[0]"));
        let err = parse_input("x.json", "{\"mult\": [}").unwrap_err();
        assert!(err.to_string().contains("x.json:1:"), "{err}");
    }
}
