//! JSON documents.
//!
//! Every document is an object with a `"type"` field naming one of the
//! [`Descriptor`] variants. Elements, vertices and edges are numbered from 1.
//! Rationals are written as `{"num": n, "den": d}` in lowest terms with
//! `d > 0`; integers of any size are plain JSON numbers.
//!
//! [`Descriptor::to_canonical_string`] sorts keys, pretty-prints with two
//! spaces and ends with a newline, so `save(load(x)) == x` byte for byte for
//! any document already in canonical form. The schemas are in `schemas/`.

pub mod fixtures;

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::convex::SetFunction;
use crate::matroid::{Backing, LinearRep};
use crate::morphism::{Dart, RotationSystem};
use crate::{
    Error, FlagMatroid, Graph, Matroid, MatroidMorphism, Polynomial, Rational, Result, Subset,
};

/// A parsed document.
#[derive(Clone, Debug)]
pub enum Descriptor {
    Matroid(Matroid),
    Morphism(MatroidMorphism),
    Flag(FlagMatroid),
    SetFunction(SetFunction),
    Rotation(RotationSystem),
    Polynomial(Polynomial),
    DeltaFamily { n: usize, sets: Vec<Subset> },
}

impl Descriptor {
    /// The `"type"` tag.
    pub fn type_name(&self) -> &'static str {
        match self {
            Descriptor::Matroid(_) => "matroid",
            Descriptor::Morphism(_) => "morphism",
            Descriptor::Flag(_) => "flag",
            Descriptor::SetFunction(_) => "set_function",
            Descriptor::Rotation(_) => "rotation",
            Descriptor::Polynomial(_) => "polynomial",
            Descriptor::DeltaFamily { .. } => "delta_family",
        }
    }

    pub fn parse(text: &str) -> Result<Descriptor> {
        let value: Value = serde_json::from_str(text)?;
        Descriptor::from_value(&value)
    }

    /// Flag constituents are validated as a chain of quotients; a failure is
    /// reported as [`Error::NotAFlag`] with its witness.
    pub fn from_value(value: &Value) -> Result<Descriptor> {
        let obj = object(value, "document")?;
        let ty = str_field(obj, "type", "document")?;
        match ty {
            "matroid" => Ok(Descriptor::Matroid(matroid_from_object(obj)?)),
            "morphism" => Ok(Descriptor::Morphism(morphism_from_value(value)?)),
            "flag" => {
                let flag = flag_from_value_unchecked(value)?;
                flag.validate()?;
                Ok(Descriptor::Flag(flag))
            }
            "set_function" => Ok(Descriptor::SetFunction(set_function_from_value(value)?)),
            "rotation" => Ok(Descriptor::Rotation(rotation_from_value(value)?)),
            "polynomial" => Ok(Descriptor::Polynomial(polynomial_from_value(value)?)),
            "delta_family" => {
                let (n, sets) = delta_family_from_value(value)?;
                Ok(Descriptor::DeltaFamily { n, sets })
            }
            other => Err(schema(format!("unknown document type {other:?}"))),
        }
    }

    pub fn to_value(&self) -> Result<Value> {
        let mut obj = match self {
            Descriptor::Matroid(m) => into_object(matroid_to_value(m)?),
            Descriptor::Morphism(f) => into_object(morphism_to_value(f)?),
            Descriptor::Flag(flag) => {
                let constituents = flag
                    .constituents()
                    .iter()
                    .map(matroid_to_value)
                    .collect::<Result<Vec<_>>>()?;
                let mut obj = Map::new();
                obj.insert("constituents".into(), Value::Array(constituents));
                obj
            }
            Descriptor::SetFunction(r) => {
                let mut obj = Map::new();
                obj.insert("n".into(), r.ground_size().into());
                obj.insert(
                    "values".into(),
                    Value::Array(r.values().iter().map(rational_to_value).collect()),
                );
                obj
            }
            Descriptor::Rotation(rot) => into_object(rotation_to_value(rot)),
            Descriptor::Polynomial(p) => into_object(polynomial_to_value(p)),
            Descriptor::DeltaFamily { n, sets } => {
                let mut sets = sets.clone();
                sets.sort_by(|a, b| a.shortlex_cmp(*b));
                sets.dedup();
                let mut obj = Map::new();
                obj.insert("n".into(), (*n).into());
                obj.insert(
                    "sets".into(),
                    Value::Array(sets.iter().map(|&s| subset_to_value(s)).collect()),
                );
                obj
            }
        };
        obj.insert("type".into(), self.type_name().into());
        Ok(Value::Object(obj))
    }

    pub fn to_canonical_string(&self) -> Result<String> {
        Ok(canonical_string(&self.to_value()?))
    }

    pub fn into_matroid(self) -> Result<Matroid> {
        match self {
            Descriptor::Matroid(m) => Ok(m),
            other => Err(wrong_type("matroid", &other)),
        }
    }

    pub fn into_morphism(self) -> Result<MatroidMorphism> {
        match self {
            Descriptor::Morphism(f) => Ok(f),
            other => Err(wrong_type("morphism", &other)),
        }
    }

    pub fn into_flag(self) -> Result<FlagMatroid> {
        match self {
            Descriptor::Flag(f) => Ok(f),
            other => Err(wrong_type("flag", &other)),
        }
    }

    pub fn into_set_function(self) -> Result<SetFunction> {
        match self {
            Descriptor::SetFunction(r) => Ok(r),
            other => Err(wrong_type("set_function", &other)),
        }
    }

    pub fn into_rotation(self) -> Result<RotationSystem> {
        match self {
            Descriptor::Rotation(r) => Ok(r),
            other => Err(wrong_type("rotation", &other)),
        }
    }

    pub fn into_polynomial(self) -> Result<Polynomial> {
        match self {
            Descriptor::Polynomial(p) => Ok(p),
            other => Err(wrong_type("polynomial", &other)),
        }
    }
}

fn wrong_type(expected: &str, got: &Descriptor) -> Error {
    schema(format!(
        "expected a {expected} document, found {}",
        got.type_name()
    ))
}

pub fn load(path: &Path) -> Result<Descriptor> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    Descriptor::parse(&text)
}

pub fn save(path: &Path, d: &Descriptor) -> Result<()> {
    std::fs::write(path, d.to_canonical_string()?)
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

/// Sorted keys, two-space indentation, trailing newline.
pub fn canonical_string(value: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

/// Parses and re-emits a document in canonical form.
pub fn canonicalize(text: &str) -> Result<String> {
    Descriptor::parse(text)?.to_canonical_string()
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn into_object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("serializers build objects"),
    }
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| schema(format!("{what} must be an object")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| schema(format!("{what} is missing field {key:?}")))
}

fn only_fields(obj: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(format!("{what} has unexpected field {k:?}"))),
        None => Ok(()),
    }
}

fn str_field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a str> {
    field(obj, key, what)?
        .as_str()
        .ok_or_else(|| schema(format!("{what}.{key} must be a string")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema(format!("{what} must be a nonnegative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| schema(format!("{what} must be an integer in the 64-bit range")))
}

fn usize_field(obj: &Map<String, Value>, key: &str, what: &str) -> Result<usize> {
    as_usize(field(obj, key, what)?, &format!("{what}.{key}"))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| schema(format!("{what} must be an array")))
}

fn array_field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Vec<Value>> {
    array(field(obj, key, what)?, &format!("{what}.{key}"))
}

/// A 1-based index in `1..=n`, returned 0-based.
fn index(v: &Value, n: usize, what: &str) -> Result<usize> {
    let i = as_usize(v, what)?;
    if i == 0 || i > n {
        return Err(schema(format!("{what} = {i} is outside 1..={n}")));
    }
    Ok(i - 1)
}

fn subset_from_value(v: &Value, n: usize, what: &str) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for (k, e) in array(v, what)?.iter().enumerate() {
        let i = index(e, n, &format!("{what}[{}]", k + 1))?;
        if s.contains(i) {
            return Err(schema(format!("{what} lists element {} twice", i + 1)));
        }
        s = s.with(i);
    }
    Ok(s)
}

fn subset_to_value(s: Subset) -> Value {
    Value::Array(s.iter().map(|i| Value::from(i + 1)).collect())
}

fn bigint_from_number(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| schema(format!("{what} must be an integer"))),
        _ => Err(schema(format!("{what} must be an integer"))),
    }
}

fn bigint_to_value(x: &BigInt) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("integer literals are valid numbers"),
    )
}

/// `{"num": n, "den": d}` with `d != 0`, or a bare integer.
pub fn rational_from_value(v: &Value, what: &str) -> Result<Rational> {
    if v.is_number() {
        return Ok(Rational::from_integer(bigint_from_number(v, what)?));
    }
    let obj = object(v, what)?;
    only_fields(obj, &["num", "den"], what)?;
    let num = bigint_from_number(field(obj, "num", what)?, &format!("{what}.num"))?;
    let den = bigint_from_number(field(obj, "den", what)?, &format!("{what}.den"))?;
    if den == BigInt::from(0) {
        return Err(schema(format!("{what} has zero denominator")));
    }
    Ok(Rational::new(num, den))
}

pub fn rational_to_value(q: &Rational) -> Value {
    let mut obj = Map::new();
    obj.insert("num".into(), bigint_to_value(q.numer()));
    obj.insert("den".into(), bigint_to_value(q.denom()));
    Value::Object(obj)
}

pub fn matroid_from_value(v: &Value) -> Result<Matroid> {
    matroid_from_object(object(v, "matroid")?)
}

fn matroid_from_object(obj: &Map<String, Value>) -> Result<Matroid> {
    if let Some(t) = obj.get("type") {
        if t != "matroid" {
            return Err(schema(format!("expected a matroid, found type {t}")));
        }
    }
    let kind = str_field(obj, "kind", "matroid")?;
    let what = format!("{kind} matroid");
    let allowed: &[&str] = match kind {
        "bases" => &["kind", "n", "bases"],
        "graph" => &["kind", "vertices", "edges"],
        "linear" => &["kind", "n", "prime", "rows"],
        "uniform" => &["kind", "n", "rank"],
        "dual" => &["kind", "of"],
        "rank_table" => &["kind", "n", "ranks"],
        other => return Err(schema(format!("unknown matroid kind {other:?}"))),
    };
    let mut allowed = allowed.to_vec();
    allowed.push("type");
    only_fields(obj, &allowed, &what)?;
    match kind {
        "bases" => {
            let n = usize_field(obj, "n", &what)?;
            check_size(n)?;
            let bases = array_field(obj, "bases", &what)?
                .iter()
                .enumerate()
                .map(|(k, b)| subset_from_value(b, n, &format!("bases[{}]", k + 1)))
                .collect::<Result<Vec<_>>>()?;
            Matroid::from_bases(n, bases)
        }
        "graph" => Matroid::cycle_matroid(graph_from_object(obj, &what)?),
        "linear" => {
            let n = usize_field(obj, "n", &what)?;
            check_size(n)?;
            let p = field(obj, "prime", &what)?
                .as_u64()
                .ok_or_else(|| schema("linear matroid.prime must be a positive integer"))?;
            let rows = array_field(obj, "rows", &what)?
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    let row = array(row, &format!("rows[{}]", r + 1))?;
                    if row.len() != n {
                        return Err(schema(format!(
                            "rows[{}] has {} entries, expected {n}",
                            r + 1,
                            row.len()
                        )));
                    }
                    row.iter()
                        .map(|x| as_i64(x, &format!("rows[{}] entry", r + 1)))
                        .collect()
                })
                .collect::<Result<Vec<Vec<i64>>>>()?;
            Matroid::linear_with_columns(p, n, &rows)
        }
        "uniform" => Matroid::uniform(
            usize_field(obj, "n", &what)?,
            usize_field(obj, "rank", &what)?,
        ),
        "dual" => Ok(matroid_from_value(field(obj, "of", &what)?)?.dual()),
        "rank_table" => {
            let n = usize_field(obj, "n", &what)?;
            check_size(n)?;
            let ranks = array_field(obj, "ranks", &what)?
                .iter()
                .map(|r| {
                    as_usize(r, "rank_table entry")
                        .and_then(|r| u8::try_from(r).map_err(|_| schema("rank exceeds 255")))
                })
                .collect::<Result<Vec<u8>>>()?;
            Matroid::from_rank_table(n, ranks)
        }
        _ => unreachable!(),
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > crate::subset::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            max: crate::subset::MAX_GROUND_SET,
        });
    }
    Ok(())
}

fn graph_from_object(obj: &Map<String, Value>, what: &str) -> Result<Graph> {
    let vertices = usize_field(obj, "vertices", what)?;
    let edges = array_field(obj, "edges", what)?
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let ew = format!("edges[{}]", k + 1);
            let pair = array(e, &ew)?;
            if pair.len() != 2 {
                return Err(schema(format!("{ew} must have two endpoints")));
            }
            Ok((
                index(&pair[0], vertices, &ew)?,
                index(&pair[1], vertices, &ew)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Graph::new(vertices, edges)
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    let obj = object(v, "graph")?;
    let kind = str_field(obj, "kind", "graph")?;
    if kind != "graph" {
        return Err(schema(format!(
            "expected a matroid of kind \"graph\", found {kind:?}"
        )));
    }
    only_fields(obj, &["type", "kind", "vertices", "edges"], "graph")?;
    graph_from_object(obj, "graph")
}

pub fn graph_to_value(g: &Graph) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), "graph".into());
    obj.insert("vertices".into(), g.vertex_count().into());
    obj.insert(
        "edges".into(),
        Value::Array(
            g.edges()
                .iter()
                .map(|&(u, v)| Value::Array(vec![(u + 1).into(), (v + 1).into()]))
                .collect(),
        ),
    );
    Value::Object(obj)
}

/// Concrete backings keep their form; minors, truncations and induced
/// matroids are written as rank tables.
pub fn matroid_to_value(m: &Matroid) -> Result<Value> {
    let n = m.ground_size();
    let mut obj = Map::new();
    match m.backing() {
        Backing::Bases(bases) => {
            obj.insert("kind".into(), "bases".into());
            obj.insert("n".into(), n.into());
            obj.insert(
                "bases".into(),
                Value::Array(bases.iter().map(|&b| subset_to_value(b)).collect()),
            );
        }
        Backing::Graphic(g) => return Ok(graph_to_value(g)),
        Backing::Linear(rep) => return Ok(linear_to_value(rep)),
        Backing::Uniform(r) => {
            obj.insert("kind".into(), "uniform".into());
            obj.insert("n".into(), n.into());
            obj.insert("rank".into(), (*r).into());
        }
        Backing::Dual(inner) => {
            obj.insert("kind".into(), "dual".into());
            obj.insert("of".into(), matroid_to_value(inner)?);
        }
        _ => {
            obj.insert("kind".into(), "rank_table".into());
            obj.insert("n".into(), n.into());
            obj.insert(
                "ranks".into(),
                Value::Array(m.rank_table()?.iter().map(|&r| r.into()).collect()),
            );
        }
    }
    Ok(Value::Object(obj))
}

fn linear_to_value(rep: &LinearRep) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), "linear".into());
    obj.insert("n".into(), rep.column_count().into());
    obj.insert("prime".into(), rep.prime().into());
    obj.insert(
        "rows".into(),
        Value::Array(
            rep.rows()
                .into_iter()
                .map(|r| Value::Array(r.into_iter().map(Value::from).collect()))
                .collect(),
        ),
    );
    Value::Object(obj)
}

/// The map is not checked for the morphism property here; targets outside the
/// target ground set are a schema error.
pub fn morphism_from_value(v: &Value) -> Result<MatroidMorphism> {
    let obj = object(v, "morphism")?;
    only_fields(obj, &["type", "source", "target", "map"], "morphism")?;
    let source = matroid_from_value(field(obj, "source", "morphism")?)?;
    let target = matroid_from_value(field(obj, "target", "morphism")?)?;
    let raw = array_field(obj, "map", "morphism")?;
    if raw.len() != source.ground_size() {
        return Err(schema(format!(
            "map has {} entries but the source has {} elements",
            raw.len(),
            source.ground_size()
        )));
    }
    let map = raw
        .iter()
        .enumerate()
        .map(|(k, t)| index(t, target.ground_size(), &format!("map[{}]", k + 1)))
        .collect::<Result<Vec<_>>>()?;
    MatroidMorphism::unchecked(source, target, map)
}

pub fn morphism_to_value(f: &MatroidMorphism) -> Result<Value> {
    let mut obj = Map::new();
    obj.insert("source".into(), matroid_to_value(f.source())?);
    obj.insert("target".into(), matroid_to_value(f.target())?);
    obj.insert(
        "map".into(),
        Value::Array(f.map().iter().map(|&t| Value::from(t + 1)).collect()),
    );
    Ok(Value::Object(obj))
}

/// Reads the constituents without checking the quotient chain.
pub fn flag_from_value_unchecked(v: &Value) -> Result<FlagMatroid> {
    let obj = object(v, "flag")?;
    only_fields(obj, &["type", "constituents"], "flag")?;
    let constituents = array_field(obj, "constituents", "flag")?
        .iter()
        .map(matroid_from_value)
        .collect::<Result<Vec<_>>>()?;
    if constituents.is_empty() {
        return Err(schema("a flag needs at least one constituent"));
    }
    FlagMatroid::unchecked(constituents)
}

pub fn set_function_from_value(v: &Value) -> Result<SetFunction> {
    let obj = object(v, "set function")?;
    only_fields(obj, &["type", "n", "values"], "set function")?;
    let n = usize_field(obj, "n", "set function")?;
    crate::config::check_enumerable(n)?;
    let values = array_field(obj, "values", "set function")?
        .iter()
        .enumerate()
        .map(|(k, x)| rational_from_value(x, &format!("values[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(n, values)
}

/// `rotation[v]` lists signed edge numbers: `+e` is the end of edge `e` at its
/// first endpoint, `-e` the end at its second.
pub fn rotation_from_value(v: &Value) -> Result<RotationSystem> {
    let obj = object(v, "rotation")?;
    only_fields(obj, &["type", "rotation"], "rotation")?;
    let rotations = array_field(obj, "rotation", "rotation")?
        .iter()
        .enumerate()
        .map(|(vx, darts)| {
            array(darts, &format!("rotation[{}]", vx + 1))?
                .iter()
                .map(|d| {
                    let e = as_i64(d, "dart")?;
                    match e {
                        0 => Err(schema("dart 0 is not an edge end")),
                        e if e > 0 => Ok(Dart::tail(e as usize - 1)),
                        e => Ok(Dart::head(e.unsigned_abs() as usize - 1)),
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RotationSystem::new(rotations))
}

pub fn rotation_to_value(rot: &RotationSystem) -> Value {
    let rows = rot
        .rotations()
        .iter()
        .map(|r| {
            Value::Array(
                r.iter()
                    .map(|d| {
                        let e = d.edge as i64 + 1;
                        Value::from(if d.head { -e } else { e })
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("rotation".into(), Value::Array(rows));
    Value::Object(obj)
}

pub fn polynomial_from_value(v: &Value) -> Result<Polynomial> {
    let obj = object(v, "polynomial")?;
    only_fields(obj, &["type", "nvars", "terms"], "polynomial")?;
    let nvars = usize_field(obj, "nvars", "polynomial")?;
    let mut p = Polynomial::zero(nvars);
    for (k, t) in array_field(obj, "terms", "polynomial")?.iter().enumerate() {
        let what = format!("terms[{}]", k + 1);
        let term = object(t, &what)?;
        only_fields(term, &["exps", "num", "den"], &what)?;
        let exps = array_field(term, "exps", &what)?
            .iter()
            .map(|e| {
                as_usize(e, "exponent")
                    .and_then(|e| u32::try_from(e).map_err(|_| schema("exponent too large")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != nvars {
            return Err(schema(format!(
                "{what} has {} exponents, expected {nvars}",
                exps.len()
            )));
        }
        let num = bigint_from_number(field(term, "num", &what)?, &format!("{what}.num"))?;
        let den = bigint_from_number(field(term, "den", &what)?, &format!("{what}.den"))?;
        if den == BigInt::from(0) {
            return Err(schema(format!("{what} has zero denominator")));
        }
        let c = Rational::new(num, den);
        p.add_term(exps, c);
    }
    Ok(p)
}

pub fn polynomial_to_value(p: &Polynomial) -> Value {
    let terms = p
        .terms()
        .map(|(e, c)| {
            let mut t = Map::new();
            t.insert(
                "exps".into(),
                Value::Array(e.iter().map(|&x| Value::from(x)).collect()),
            );
            t.insert("num".into(), bigint_to_value(c.numer()));
            t.insert("den".into(), bigint_to_value(c.denom()));
            Value::Object(t)
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("nvars".into(), p.nvars().into());
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn delta_family_from_value(v: &Value) -> Result<(usize, Vec<Subset>)> {
    let obj = object(v, "delta family")?;
    only_fields(obj, &["type", "n", "sets"], "delta family")?;
    let n = usize_field(obj, "n", "delta family")?;
    check_size(n)?;
    let sets = array_field(obj, "sets", "delta family")?
        .iter()
        .enumerate()
        .map(|(k, s)| subset_from_value(s, n, &format!("sets[{}]", k + 1)))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, sets))
}

/// JSON for a subset in documents and reports.
pub fn subset_json(s: Subset) -> Value {
    subset_to_value(s)
}

/// Signed rationals print as `{"num","den"}`; used by reports.
pub fn rationals_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(rational_to_value).collect())
}
