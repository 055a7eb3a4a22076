//! JSON wire formats. Big integers travel as decimal strings; index tuples
//! of forms are 1-based on the wire. Parse errors carry the location of the
//! offending value as a path such as `$.comps[1][0]`.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::drw::{DrwForm, Factor, GenExpr, GenTerm};
use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::ring::{IntPoly, TruncationSet};
use crate::witt::{GhostTuple, WittVector};

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

/// Re-labels errors of the algebraic constructors with the input location.
fn at<T>(path: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Schema { .. } => e,
        other => schema(path, other.to_string()),
    })
}

fn field<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value> {
    let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    obj.get(key).ok_or_else(|| schema(path, format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn uint(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn boolean(v: &Value, path: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| schema(path, "expected a boolean"))
}

fn bigint(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| schema(path, format!("\"{s}\" is not a decimal integer"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        _ => Err(schema(path, "expected an integer (decimal string or number)")),
    }
}

pub fn poly_to_json(f: &IntPoly) -> Value {
    let terms: Vec<Value> = f.terms().map(|(m, c)| json!([c.to_string(), m.exps()])).collect();
    json!({ "vars": f.vars(), "terms": terms })
}

pub fn poly_from_json(v: &Value, path: &str) -> Result<IntPoly> {
    let vars = uint(field(v, path, "vars")?, &format!("{path}.vars"))? as usize;
    let tpath = format!("{path}.terms");
    let mut terms = Vec::new();
    for (i, term) in array(field(v, path, "terms")?, &tpath)?.iter().enumerate() {
        let p = format!("{tpath}[{i}]");
        let pair = array(term, &p)?;
        if pair.len() != 2 {
            return Err(schema(&p, "expected [coefficient, exponents]"));
        }
        let c = bigint(&pair[0], &format!("{p}[0]"))?;
        let ep = format!("{p}[1]");
        let exps = array(&pair[1], &ep)?
            .iter()
            .enumerate()
            .map(|(j, e)| {
                let e = uint(e, &format!("{ep}[{j}]"))?;
                u32::try_from(e).map_err(|_| schema(&format!("{ep}[{j}]"), "exponent too large"))
            })
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != vars {
            return Err(schema(&ep, format!("expected {vars} exponents, got {}", exps.len())));
        }
        terms.push((c, exps));
    }
    at(path, IntPoly::from_terms(vars, terms))
}

pub fn set_to_json(s: &TruncationSet) -> Value {
    json!(s.elems())
}

pub fn set_from_json(v: &Value, path: &str) -> Result<TruncationSet> {
    let elems = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, e)| uint(e, &format!("{path}[{i}]")))
        .collect::<Result<Vec<u64>>>()?;
    at(path, TruncationSet::new(elems))
}

pub fn form_to_json(w: &DiffForm) -> Value {
    let comps: Vec<Value> = w
        .comps()
        .map(|(idx, f)| json!([idx.iter().map(|j| j + 1).collect::<Vec<_>>(), poly_to_json(f)]))
        .collect();
    json!({ "q": w.degree(), "vars": w.vars(), "comps": comps })
}

pub fn form_from_json(v: &Value, path: &str) -> Result<DiffForm> {
    let q = uint(field(v, path, "q")?, &format!("{path}.q"))? as usize;
    let vars = uint(field(v, path, "vars")?, &format!("{path}.vars"))? as usize;
    let cpath = format!("{path}.comps");
    let mut comps = Vec::new();
    for (i, c) in array(field(v, path, "comps")?, &cpath)?.iter().enumerate() {
        let p = format!("{cpath}[{i}]");
        let pair = array(c, &p)?;
        if pair.len() != 2 {
            return Err(schema(&p, "expected [index tuple, polynomial]"));
        }
        let ip = format!("{p}[0]");
        let idx = array(&pair[0], &ip)?
            .iter()
            .enumerate()
            .map(|(j, e)| match uint(e, &format!("{ip}[{j}]"))? {
                0 => Err(schema(&format!("{ip}[{j}]"), "variable indices are 1-based")),
                k => Ok(k as usize - 1),
            })
            .collect::<Result<Vec<usize>>>()?;
        let f = poly_from_json(&pair[1], &format!("{p}[1]"))?;
        if f.vars() != vars {
            return Err(schema(&format!("{p}[1]"), format!("polynomial has {} variables, form has {vars}", f.vars())));
        }
        comps.push((idx, f));
    }
    at(&cpath, DiffForm::new(q, vars, comps))
}

/// Bare integers (numbers or decimal strings) are read as constants in the
/// variable count of the other entries.
fn polys_from_json(v: &Value, path: &str) -> Result<Vec<IntPoly>> {
    let items = array(v, path)?;
    let mut vars = None;
    for (i, e) in items.iter().enumerate() {
        if e.is_object() {
            vars = Some(uint(field(e, &format!("{path}[{i}]"), "vars")?, &format!("{path}[{i}].vars"))? as usize);
            break;
        }
    }
    items
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let p = format!("{path}[{i}]");
            if e.is_object() {
                poly_from_json(e, &p)
            } else {
                Ok(IntPoly::constant(vars.unwrap_or(0), bigint(e, &p)?))
            }
        })
        .collect()
}

fn common_vars(polys: &[IntPoly], path: &str) -> Result<usize> {
    let vars = polys.first().map_or(0, IntPoly::vars);
    if let Some(i) = polys.iter().position(|f| f.vars() != vars) {
        return Err(schema(&format!("{path}[{i}]"), "variable count differs from the first entry"));
    }
    Ok(vars)
}

pub fn ghost_to_json(g: &GhostTuple) -> Value {
    json!({ "S": set_to_json(g.set()), "ghost": g.comps().iter().map(poly_to_json).collect::<Vec<_>>() })
}

/// Reads `{"S": [...], "ghost": [...]}`; `set` overrides the `S` field.
pub fn ghost_from_json(v: &Value, path: &str, set: Option<&TruncationSet>) -> Result<GhostTuple> {
    let set = match set {
        Some(s) => s.clone(),
        None => set_from_json(field(v, path, "S")?, &format!("{path}.S"))?,
    };
    let gpath = format!("{path}.ghost");
    let comps = polys_from_json(field(v, path, "ghost")?, &gpath)?;
    let vars = common_vars(&comps, &gpath)?;
    at(&gpath, GhostTuple::new(set, vars, comps))
}

pub fn witt_to_json(a: &WittVector) -> Value {
    json!({
        "S": set_to_json(a.set()),
        "ghost": a.ghost().comps().iter().map(poly_to_json).collect::<Vec<_>>(),
        "witt": a.witt().iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

/// Reads a Witt vector from its `witt` coordinates, or from its `ghost`
/// tuple when no coordinates are given. When both are present they must
/// agree.
pub fn witt_from_json(v: &Value, path: &str, set: Option<&TruncationSet>) -> Result<WittVector> {
    let set = match set {
        Some(s) => s.clone(),
        None => set_from_json(field(v, path, "S")?, &format!("{path}.S"))?,
    };
    let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    match obj.get("witt") {
        Some(w) => {
            let wpath = format!("{path}.witt");
            let coords = polys_from_json(w, &wpath)?;
            let vars = common_vars(&coords, &wpath)?;
            let a = at(&wpath, WittVector::from_witt(set.clone(), vars, coords))?;
            if obj.contains_key("ghost") {
                let g = ghost_from_json(v, path, Some(&set))?;
                if &g != a.ghost() {
                    return Err(schema(&format!("{path}.ghost"), "ghost tuple does not match the Witt coordinates"));
                }
            }
            Ok(a)
        }
        None => WittVector::from_ghost(ghost_from_json(v, path, Some(&set))?),
    }
}

pub fn drw_to_json(w: &DrwForm) -> Value {
    json!({
        "q": w.degree(),
        "vars": w.vars(),
        "S": set_to_json(w.set()),
        "comps": w.comps().iter().map(form_to_json).collect::<Vec<_>>(),
        "certified": w.is_certified(),
    })
}

/// Reads a tuple of forms. The result is never certified: certification is
/// established by construction, not by a flag in the input.
pub fn drw_from_json(v: &Value, path: &str, set: Option<&TruncationSet>) -> Result<DrwForm> {
    let set = match set {
        Some(s) => s.clone(),
        None => set_from_json(field(v, path, "S")?, &format!("{path}.S"))?,
    };
    let q = uint(field(v, path, "q")?, &format!("{path}.q"))? as usize;
    let vars = uint(field(v, path, "vars")?, &format!("{path}.vars"))? as usize;
    let cpath = format!("{path}.comps");
    let comps = array(field(v, path, "comps")?, &cpath)?
        .iter()
        .enumerate()
        .map(|(i, c)| form_from_json(c, &format!("{cpath}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if let Some(c) = v.get("certified") {
        boolean(c, &format!("{path}.certified"))?;
    }
    at(&cpath, DrwForm::from_components(q, vars, set, comps))
}

fn factor_to_json(f: &Factor) -> Value {
    json!({ "n": f.n, "r": poly_to_json(&f.r), "dd": f.dd })
}

fn rows_to_json(rows: &[Vec<IntPoly>]) -> Value {
    Value::Array(rows.iter().map(|row| Value::Array(row.iter().map(poly_to_json).collect())).collect())
}

fn rows_from_json(v: &Value, path: &str) -> Result<Vec<Vec<IntPoly>>> {
    array(v, path)?.iter().enumerate().map(|(i, row)| polys_from_json(row, &format!("{path}[{i}]"))).collect()
}

pub fn genexpr_to_json(e: &GenExpr) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|t| match t {
            GenTerm::Product { coeff, factors } => {
                json!({ "coeff": coeff.to_string(), "factors": factors.iter().map(factor_to_json).collect::<Vec<_>>() })
            }
            GenTerm::Block { n, a, b } => json!({ "block": { "n": n, "a": rows_to_json(a), "b": rows_to_json(b) } }),
        })
        .collect();
    json!({ "q": e.q, "vars": e.vars, "terms": terms })
}

pub fn genexpr_from_json(v: &Value, path: &str) -> Result<GenExpr> {
    let q = uint(field(v, path, "q")?, &format!("{path}.q"))? as usize;
    let vars = uint(field(v, path, "vars")?, &format!("{path}.vars"))? as usize;
    let tpath = format!("{path}.terms");
    let mut terms = Vec::new();
    for (i, t) in array(field(v, path, "terms")?, &tpath)?.iter().enumerate() {
        let p = format!("{tpath}[{i}]");
        let obj: &Map<String, Value> = t.as_object().ok_or_else(|| schema(&p, "expected an object"))?;
        let term = if let Some(block) = obj.get("block") {
            let bp = format!("{p}.block");
            GenTerm::Block {
                n: uint(field(block, &bp, "n")?, &format!("{bp}.n"))?,
                a: rows_from_json(field(block, &bp, "a")?, &format!("{bp}.a"))?,
                b: rows_from_json(field(block, &bp, "b")?, &format!("{bp}.b"))?,
            }
        } else {
            let coeff = bigint(field(t, &p, "coeff")?, &format!("{p}.coeff"))?;
            let fpath = format!("{p}.factors");
            let factors = array(field(t, &p, "factors")?, &fpath)?
                .iter()
                .enumerate()
                .map(|(j, f)| {
                    let fp = format!("{fpath}[{j}]");
                    Ok(Factor {
                        n: uint(field(f, &fp, "n")?, &format!("{fp}.n"))?,
                        r: poly_from_json(field(f, &fp, "r")?, &format!("{fp}.r"))?,
                        dd: boolean(field(f, &fp, "dd")?, &format!("{fp}.dd"))?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            GenTerm::Product { coeff, factors }
        };
        terms.push(term);
    }
    at(&tpath, GenExpr::new(q, vars, terms))
}
