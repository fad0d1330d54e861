//! JSON problem files.
//!
//! ```json
//! {"kind": "lp", "A": [["2"]], "b": ["1"], "c": ["3"]}
//! {"kind": "game", "payoff": [["1", "2", "0"], ["1", "0", "2"]]}
//! {"kind": "system", "rows": [["1"], ["-1"]], "rhs": ["0", "-1"]}
//! ```
//!
//! Numbers are strings `"p"` or `"p/q"`, or JSON integers. Floating-point
//! literals, unknown fields and ragged matrices are rejected.

use serde_json::{Map, Value};
use thiserror::Error;

use crate::game::ZeroSumGame;
use crate::linalg::{Matrix, Vector};
use crate::rat::Rat;
use crate::reductions::IneqLP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("parse error in field {field}: {message}")]
    Field { field: String, message: String },
    #[error("dimension error: {0}")]
    Dimension(String),
}

/// A linear system `Ax ≤ b` or `Ax = b`, or a bare matrix when `b` is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    pub a: Matrix,
    pub b: Option<Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Lp(IneqLP),
    Game(ZeroSumGame),
    System(System),
}

impl Problem {
    pub fn kind(&self) -> &'static str {
        match self {
            Problem::Lp(_) => "lp",
            Problem::Game(_) => "game",
            Problem::System(_) => "system",
        }
    }

    /// Canonical JSON form; parsing it gives back the same problem.
    pub fn to_json(&self) -> Value {
        let rows = |m: &Matrix| serde_json::to_value(m.to_rows()).expect("rationals serialize");
        let vec = |v: &Vector| serde_json::to_value(v).expect("rationals serialize");
        match self {
            Problem::Lp(lp) => serde_json::json!({"kind": "lp", "A": rows(&lp.a), "b": vec(&lp.b), "c": vec(&lp.c)}),
            Problem::Game(g) => serde_json::json!({"kind": "game", "payoff": rows(g.payoff())}),
            Problem::System(s) => {
                let mut obj = serde_json::json!({"kind": "system", "A": rows(&s.a)});
                if let Some(b) = &s.b {
                    obj["b"] = vec(b);
                }
                obj
            }
        }
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, ProblemError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ProblemError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    problem_from_value(&value)
}

pub fn problem_from_value(value: &Value) -> Result<Problem, ProblemError> {
    let obj = value
        .as_object()
        .ok_or_else(|| field_error("<root>", "expected a JSON object"))?;
    let kind = match obj.get("kind") {
        Some(Value::String(k)) => k.as_str(),
        Some(_) => return Err(field_error("kind", "expected a string")),
        None => return Err(field_error("kind", "missing")),
    };
    match kind {
        "lp" => {
            allow_fields(obj, &["kind", "A", "b", "c"])?;
            let a = matrix_field(obj, &["A"])?.ok_or_else(|| missing("A"))?;
            let b = vector_field(obj, &["b"])?.ok_or_else(|| missing("b"))?;
            let c = vector_field(obj, &["c"])?.ok_or_else(|| missing("c"))?;
            IneqLP::new(a, b, c).map(Problem::Lp).map_err(|e| ProblemError::Dimension(e.to_string()))
        }
        "game" => {
            allow_fields(obj, &["kind", "payoff"])?;
            let payoff = matrix_field(obj, &["payoff"])?.ok_or_else(|| missing("payoff"))?;
            ZeroSumGame::new(payoff).map(Problem::Game).map_err(|e| ProblemError::Dimension(e.to_string()))
        }
        "system" => {
            allow_fields(obj, &["kind", "A", "rows", "b", "rhs"])?;
            let a = matrix_field(obj, &["A", "rows"])?.ok_or_else(|| missing("A"))?;
            let b = vector_field(obj, &["b", "rhs"])?;
            if a.rows() == 0 || a.cols() == 0 {
                return Err(ProblemError::Dimension(format!("matrix is {}x{}", a.rows(), a.cols())));
            }
            if let Some(b) = &b {
                if b.dim() != a.rows() {
                    return Err(ProblemError::Dimension(format!(
                        "A has {} rows but b has length {}",
                        a.rows(),
                        b.dim()
                    )));
                }
            }
            Ok(Problem::System(System { a, b }))
        }
        other => Err(field_error("kind", &format!("unknown kind {other:?}; expected lp, game or system"))),
    }
}

fn field_error(field: &str, message: &str) -> ProblemError {
    ProblemError::Field { field: field.to_string(), message: message.to_string() }
}

fn missing(field: &str) -> ProblemError {
    ProblemError::Dimension(format!("missing field {field}"))
}

fn allow_fields(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), ProblemError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(field_error(k, "unknown field")),
        None => Ok(()),
    }
}

/// Looks up the first present name among aliases; two aliases together are
/// an error.
fn lookup<'a>(obj: &'a Map<String, Value>, names: &[&'a str]) -> Result<Option<(&'a str, &'a Value)>, ProblemError> {
    let present: Vec<_> = names.iter().filter_map(|n| obj.get(*n).map(|v| (*n, v))).collect();
    match present.as_slice() {
        [] => Ok(None),
        [one] => Ok(Some(*one)),
        _ => Err(field_error(names[0], &format!("given more than once as {}", names.join(" and ")))),
    }
}

pub fn parse_number(value: &Value, field: &str) -> Result<Rat, ProblemError> {
    match value {
        Value::String(s) => s
            .parse::<Rat>()
            .map_err(|e| field_error(field, &format!("{s:?} is not a rational: {e}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from(num_bigint::BigInt::from(u)))
            } else {
                Err(field_error(field, &format!("{n} is not an integer; write fractions as \"p/q\"")))
            }
        }
        _ => Err(field_error(field, "expected a number or a \"p/q\" string")),
    }
}

pub fn parse_vector(value: &Value, field: &str) -> Result<Vector, ProblemError> {
    let items = value
        .as_array()
        .ok_or_else(|| field_error(field, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| parse_number(v, &format!("{field}[{i}]")))
        .collect()
}

pub fn parse_matrix(value: &Value, field: &str) -> Result<Matrix, ProblemError> {
    let rows = value
        .as_array()
        .ok_or_else(|| field_error(field, "expected an array of rows"))?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(r, &format!("{field}[{i}]")).map(Vector::into_inner))
        .collect::<Result<Vec<_>, _>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    Matrix::from_rows(parsed, cols).map_err(|e| ProblemError::Dimension(format!("{field}: {e}")))
}

fn vector_field(obj: &Map<String, Value>, names: &[&str]) -> Result<Option<Vector>, ProblemError> {
    lookup(obj, names)?.map(|(n, v)| parse_vector(v, n)).transpose()
}

fn matrix_field(obj: &Map<String, Value>, names: &[&str]) -> Result<Option<Matrix>, ProblemError> {
    lookup(obj, names)?.map(|(n, v)| parse_matrix(v, n)).transpose()
}
