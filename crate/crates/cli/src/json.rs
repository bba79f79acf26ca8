//! JSON conversions. Integers are read from JSON numbers or decimal strings
//! and written as numbers unless their magnitude exceeds 2^53.

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{Map, Number, Value};
use toruscover::IntMatrix;

use crate::CliError;

const SAFE_BITS: u64 = 53;

pub fn int(x: &BigInt) -> Value {
    if x.abs().bits() <= SAFE_BITS {
        Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
    } else {
        Value::String(x.to_string())
    }
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

pub fn parse_document(text: &str, what: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::validation("invalid_json", format!("{what}: {e}")))
}

pub fn to_int(v: &Value, what: &str) -> Result<BigInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(CliError::validation("invalid_integer", format!("{what}: expected an integer, found {v}"))),
    };
    text.parse::<BigInt>()
        .map_err(|_| CliError::validation("invalid_integer", format!("{what}: {text} is not an integer")))
}

pub fn to_usize(v: &Value, what: &str) -> Result<usize, CliError> {
    let x = to_int(v, what)?;
    usize::try_from(&x)
        .map_err(|_| CliError::validation("invalid_integer", format!("{what}: {x} is not a nonnegative size")))
}

pub fn to_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| CliError::validation("invalid_shape", format!("{what}: expected a JSON array")))
}

pub fn to_rows(v: &Value, what: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    to_array(v, what)?.iter().map(|row| to_array(row, what)?.iter().map(|x| to_int(x, what)).collect()).collect()
}

/// A matrix with `cols` columns, or with the width of its first row when `cols` is `None`.
pub fn to_matrix(v: &Value, cols: Option<usize>, what: &str) -> Result<IntMatrix, CliError> {
    let rows = to_rows(v, what)?;
    let cols = match (cols, rows.first()) {
        (Some(c), _) => c,
        (None, Some(r)) => r.len(),
        (None, None) => {
            return Err(CliError::validation(
                "invalid_shape",
                format!("{what}: empty matrix needs an explicit dimension"),
            ))
        }
    };
    Ok(IntMatrix::from_rows(rows, cols)?)
}
