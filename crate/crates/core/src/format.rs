//! The JSON document format for bialgebroids.
//!
//! ```json
//! {
//!   "format": "algebroid/1",
//!   "name": "C2Q",
//!   "field": "Q",                       // or "F2", "F3", …
//!   "base":  { "dim": 1, "unit": ["1"], "constants": [[0, 0, 0, "1"]] },
//!   "total": { "dim": 2, "unit": ["1", "0"], "constants": [[i, j, k, "v"], …] },
//!   "source":    { "rows": 2, "cols": 1, "entries": [[i, j, "v"], …] },
//!   "target":    { … },
//!   "coproduct": { "rows": 4, "cols": 2, "entries": … },
//!   "counit":    { "rows": 1, "cols": 2, "entries": … },
//!   "modules": [ { "label": "M", "dim": 1, "action": [ {matrix}, … ] } ]
//! }
//! ```
//!
//! Constants `[i, j, k, v]` mean `e_i e_j = … + v e_k`. Scalars are always
//! strings (`"-3/7"`); absent entries are zero.

use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::bialgebroid::Bialgebroid;
use crate::field::{Field, Scalar};
use crate::mat::Mat;

pub const FORMAT: &str = "algebroid/1";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Schema { path: path.into(), message: message.into() }
}

/// An `H`-module declared alongside the bialgebroid.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleDecl {
    pub label: String,
    pub dim: usize,
    pub action: Vec<Mat>,
}

#[derive(Clone, Debug)]
pub struct Document {
    pub bialgebroid: Bialgebroid,
    pub modules: Vec<ModuleDecl>,
}

impl Document {
    pub fn new(bialgebroid: Bialgebroid) -> Self {
        Document { bialgebroid, modules: Vec::new() }
    }
}

// ---- rendering ------------------------------------------------------------------

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rationals => "Q".into(),
        Field::Prime { p } => format!("F{p}"),
    }
}

fn scalar(f: Field, v: &Scalar) -> Value {
    Value::String(f.format(v))
}

fn render_matrix(m: &Mat) -> Value {
    let f = m.field();
    let entries: Vec<Value> = m.entries().map(|(i, j, v)| json!([i, j, scalar(f, v)])).collect();
    json!({ "rows": m.nrows(), "cols": m.ncols(), "entries": entries })
}

fn render_algebra(a: &Algebra) -> Value {
    let f = a.field();
    let n = a.dim();
    let unit: Vec<Value> = (0..n).map(|i| scalar(f, &a.unit().get(i, 0))).collect();
    let mut consts: Vec<(usize, usize, usize, Value)> =
        a.mul_matrix().entries().map(|(k, c, v)| (c / n, c % n, k, scalar(f, v))).collect();
    consts.sort_by_key(|t| (t.0, t.1, t.2));
    let constants: Vec<Value> = consts.into_iter().map(|(i, j, k, v)| json!([i, j, k, v])).collect();
    json!({ "dim": n, "unit": unit, "constants": constants })
}

pub fn to_value(doc: &Document) -> Value {
    let b = &doc.bialgebroid;
    let mut m = Map::new();
    m.insert("format".into(), json!(FORMAT));
    m.insert("name".into(), json!(b.name));
    m.insert("field".into(), json!(field_name(b.field())));
    m.insert("base".into(), render_algebra(&b.base));
    m.insert("total".into(), render_algebra(&b.total));
    m.insert("source".into(), render_matrix(&b.source));
    m.insert("target".into(), render_matrix(&b.target));
    m.insert("coproduct".into(), render_matrix(&b.coproduct));
    m.insert("counit".into(), render_matrix(&b.counit));
    if !doc.modules.is_empty() {
        let mods: Vec<Value> = doc
            .modules
            .iter()
            .map(|md| {
                json!({
                    "label": md.label,
                    "dim": md.dim,
                    "action": md.action.iter().map(render_matrix).collect::<Vec<_>>(),
                })
            })
            .collect();
        m.insert("modules".into(), Value::Array(mods));
    }
    Value::Object(m)
}

/// Pretty JSON with a fixed key order and entry order.
pub fn render(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(doc)).expect("serializable");
    s.push('\n');
    s
}

// ---- parsing --------------------------------------------------------------------

fn get<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value, FormatError> {
    v.get(key).ok_or_else(|| schema(format!("{path}.{key}"), "missing"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize, FormatError> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn parse_scalar(f: Field, v: &Value, path: &str) -> Result<Scalar, FormatError> {
    let s = v.as_str().ok_or_else(|| schema(path, "scalars must be strings such as \"-3/7\""))?;
    f.parse(s).map_err(|e| schema(path, e.to_string()))
}

pub fn parse_field(s: &str) -> Result<Field, FormatError> {
    if s == "Q" {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix('F')
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| schema("$.field", format!("unknown field {s:?}; expected \"Q\" or \"F<p>\"")))?;
    Field::prime(p).map_err(|e| schema("$.field", e.to_string()))
}

fn parse_matrix(f: Field, v: &Value, path: &str, shape: Option<(usize, usize)>) -> Result<Mat, FormatError> {
    let rows = as_usize(get(v, path, "rows")?, &format!("{path}.rows"))?;
    let cols = as_usize(get(v, path, "cols")?, &format!("{path}.cols"))?;
    if let Some(s) = shape {
        if s != (rows, cols) {
            return Err(schema(path, format!("shape {rows}×{cols}, expected {}×{}", s.0, s.1)));
        }
    }
    let mut triples = Vec::new();
    for (n, e) in as_array(get(v, path, "entries")?, &format!("{path}.entries"))?.iter().enumerate() {
        let p = format!("{path}.entries[{n}]");
        let t = as_array(e, &p)?;
        if t.len() != 3 {
            return Err(schema(p, "expected [row, col, \"value\"]"));
        }
        let (i, j) = (as_usize(&t[0], &p)?, as_usize(&t[1], &p)?);
        if i >= rows || j >= cols {
            return Err(schema(p, format!("index ({i}, {j}) out of range for {rows}×{cols}")));
        }
        triples.push((i, j, parse_scalar(f, &t[2], &p)?));
    }
    Ok(Mat::from_triples(f, rows, cols, triples))
}

fn parse_algebra(f: Field, v: &Value, path: &str) -> Result<Algebra, FormatError> {
    let dim = as_usize(get(v, path, "dim")?, &format!("{path}.dim"))?;
    let unit_v = as_array(get(v, path, "unit")?, &format!("{path}.unit"))?;
    let unit = unit_v
        .iter()
        .enumerate()
        .map(|(i, x)| parse_scalar(f, x, &format!("{path}.unit[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut consts = Vec::new();
    for (n, c) in as_array(get(v, path, "constants")?, &format!("{path}.constants"))?.iter().enumerate() {
        let p = format!("{path}.constants[{n}]");
        let t = as_array(c, &p)?;
        if t.len() != 4 {
            return Err(schema(p, "expected [i, j, k, \"value\"]"));
        }
        let (i, j, k) = (as_usize(&t[0], &p)?, as_usize(&t[1], &p)?, as_usize(&t[2], &p)?);
        if i >= dim || j >= dim || k >= dim {
            return Err(schema(p, format!("index ({i}, {j}, {k}) out of range for dimension {dim}")));
        }
        consts.push((i, j, k, parse_scalar(f, &t[3], &p)?));
    }
    Algebra::new(f, dim, unit, consts).map_err(|e| schema(path, e.to_string()))
}

pub fn from_value(v: &Value) -> Result<Document, FormatError> {
    let fmt = get(v, "$", "format")?.as_str().ok_or_else(|| schema("$.format", "expected a string"))?;
    if fmt != FORMAT {
        return Err(schema("$.format", format!("unsupported format {fmt:?}; expected {FORMAT:?}")));
    }
    let name = get(v, "$", "name")?.as_str().ok_or_else(|| schema("$.name", "expected a string"))?;
    let f = parse_field(get(v, "$", "field")?.as_str().ok_or_else(|| schema("$.field", "expected a string"))?)?;
    let base = parse_algebra(f, get(v, "$", "base")?, "$.base")?;
    let total = parse_algebra(f, get(v, "$", "total")?, "$.total")?;
    let (r, h) = (base.dim(), total.dim());
    let source = parse_matrix(f, get(v, "$", "source")?, "$.source", Some((h, r)))?;
    let target = parse_matrix(f, get(v, "$", "target")?, "$.target", Some((h, r)))?;
    let coproduct = parse_matrix(f, get(v, "$", "coproduct")?, "$.coproduct", Some((h * h, h)))?;
    let counit = parse_matrix(f, get(v, "$", "counit")?, "$.counit", Some((r, h)))?;
    let bialgebroid = Bialgebroid::new(name, Arc::new(base), Arc::new(total), source, target, coproduct, counit)
        .map_err(|e| schema("$", e.to_string()))?;
    let mut modules = Vec::new();
    if let Some(ms) = v.get("modules") {
        for (n, m) in as_array(ms, "$.modules")?.iter().enumerate() {
            let p = format!("$.modules[{n}]");
            let label = get(m, &p, "label")?.as_str().ok_or_else(|| schema(format!("{p}.label"), "expected a string"))?;
            let dim = as_usize(get(m, &p, "dim")?, &format!("{p}.dim"))?;
            let acts = as_array(get(m, &p, "action")?, &format!("{p}.action"))?;
            if acts.len() != h {
                return Err(schema(format!("{p}.action"), format!("expected {h} matrices, got {}", acts.len())));
            }
            let action = acts
                .iter()
                .enumerate()
                .map(|(i, a)| parse_matrix(f, a, &format!("{p}.action[{i}]"), Some((dim, dim))))
                .collect::<Result<Vec<_>, _>>()?;
            modules.push(ModuleDecl { label: label.to_string(), dim, action });
        }
    }
    Ok(Document { bialgebroid, modules })
}

pub fn parse(text: &str) -> Result<Document, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_value(&v)
}
