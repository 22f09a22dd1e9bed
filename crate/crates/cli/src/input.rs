//! Reading orbit specs, labels and matrices from files.

use std::fs;
use std::io::Read;

use mirabolic::orbit::{MirabolicSpec, OrbitSpec};
use mirabolic::rep::Signs;
use mirabolic::{Error, ExactMatrix, MirabolicOrbitDatum, OrbitDatum, RepLabel, Scalar};
use serde::de::DeserializeOwned;
use serde_json::Value;

pub enum Input {
    Orbit(OrbitDatum),
    Mirabolic(MirabolicOrbitDatum),
    Label(RepLabel),
    Matrix(ExactMatrix),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Orbit(_) => "orbit spec",
            Input::Mirabolic(_) => "mirabolic orbit spec",
            Input::Label(_) => "representation label",
            Input::Matrix(_) => "matrix",
        }
    }
}

pub fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

/// JSON objects are told apart by their keys: `classes` for an orbit,
/// `depth` with `a_part` for a mirabolic orbit, `factors` for a label. A JSON
/// array, or anything that is not JSON, is read as a matrix.
pub fn parse_input(path: &str, text: &str) -> Result<Input, String> {
    let value: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) if e.is_syntax() || e.is_eof() => {
            if text.trim_start().starts_with(['{', '[']) {
                return Err(format!(
                    "{path}: line {}, column {}: {e}",
                    e.line(),
                    e.column()
                ));
            }
            return parse_matrix_text(text)
                .map(Input::Matrix)
                .map_err(|e| format!("{path}: {e}"));
        }
        Err(e) => return Err(format!("{path}: {e}")),
    };
    let ctx = |e: String| format!("{path}: {e}");
    match &value {
        Value::Object(map) if map.contains_key("classes") => {
            let spec: OrbitSpec = typed(value, "orbit spec").map_err(ctx)?;
            OrbitDatum::try_from(spec)
                .map(Input::Orbit)
                .map_err(|e| ctx(e.to_string()))
        }
        Value::Object(map) if map.contains_key("a_part") => {
            let spec: MirabolicSpec = typed(value, "mirabolic orbit spec").map_err(ctx)?;
            MirabolicOrbitDatum::try_from(spec)
                .map(Input::Mirabolic)
                .map_err(|e| ctx(e.to_string()))
        }
        Value::Object(map) if map.contains_key("factors") => {
            typed::<RepLabel>(value, "representation label")
                .map(Input::Label)
                .map_err(ctx)
        }
        Value::Array(_) => {
            let rows: Vec<Vec<Value>> = typed(value, "matrix").map_err(ctx)?;
            parse_matrix_rows(&rows).map(Input::Matrix).map_err(ctx)
        }
        _ => Err(ctx(
            "expected an object with `classes`, `a_part` or `factors`, or a matrix".into(),
        )),
    }
}

fn typed<T: DeserializeOwned>(value: Value, what: &str) -> Result<T, String> {
    serde_json::from_value(value).map_err(|e| format!("{what}: {e}"))
}

fn parse_matrix_rows(rows: &[Vec<Value>]) -> Result<ExactMatrix, String> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = Vec::new();
        for (j, v) in row.iter().enumerate() {
            let s = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() => n.to_string(),
                other => {
                    return Err(format!(
                        "row {}, entry {}: expected a rational string, got {other}",
                        i + 1,
                        j + 1
                    ))
                }
            };
            r.push(
                s.parse::<Scalar>()
                    .map_err(|e| format!("row {}, entry {}: {e}", i + 1, j + 1))?,
            );
        }
        out.push(r);
    }
    matrix_from_rows(out)
}

/// One row per line, entries separated by whitespace or commas; `#` starts
/// a comment.
pub fn parse_matrix_text(text: &str) -> Result<ExactMatrix, String> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            continue;
        }
        let row = tokens
            .iter()
            .enumerate()
            .map(|(j, t)| {
                t.parse::<Scalar>()
                    .map_err(|e| format!("line {}, entry {}: {e}", lineno + 1, j + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    matrix_from_rows(rows)
}

fn matrix_from_rows(rows: Vec<Vec<Scalar>>) -> Result<ExactMatrix, String> {
    if rows.is_empty() {
        return Err("empty matrix".into());
    }
    let n = rows.len();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(format!(
            "row {} has {} entries, expected {n}",
            i + 1,
            r.len()
        ));
    }
    ExactMatrix::from_rows(rows).map_err(|e: Error| e.to_string())
}

pub fn parse_signs(s: &str) -> Result<Signs, String> {
    serde_json::from_str(s).map_err(|e| format!("--signs: {e}"))
}

pub fn parse_hints(s: &str) -> Result<Vec<Scalar>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse::<Scalar>().map_err(|e| format!("--eigen: {e}")))
        .collect()
}

pub fn matrix_json(m: &ExactMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}
