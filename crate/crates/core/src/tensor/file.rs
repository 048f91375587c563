//! `TensorFileV1` JSON:
//!
//! ```text
//! { "version": 1, "m": 3, "n": 4, "symmetric": true,
//!   "slices": [ [ ["0","1",...], ... ], ... ] }
//! ```
//!
//! `"k"` is omitted for symmetric tensors and required otherwise. Every entry
//! is a string `"p"` or `"p/q"`.

use std::path::Path;

use serde_json::{json, Map, Value};

use super::Tensor3;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{format_rational, parse_rational, Rational};

fn err(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{field}: {msg}"))
}

fn dim(obj: &Map<String, Value>, key: &str) -> Result<Option<usize>> {
    match obj.get(key) {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .filter(|&d| d >= 1)
            .map(|d| Some(d as usize))
            .ok_or_else(|| err(key, format!("expected a positive integer, got {v}"))),
    }
}

pub fn tensor_from_json(text: &str) -> Result<Tensor3> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| err("<root>", "expected a JSON object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "version" | "m" | "n" | "k" | "symmetric" | "slices") {
            return Err(err(key, "unknown field"));
        }
    }
    match obj.get("version") {
        Some(v) if v.as_u64() == Some(1) => {}
        Some(v) => return Err(err("version", format!("unsupported version {v}"))),
        None => return Err(err("version", "missing")),
    }
    let symmetric = match obj.get("symmetric") {
        Some(Value::Bool(b)) => *b,
        Some(v) => return Err(err("symmetric", format!("expected a boolean, got {v}"))),
        None => return Err(err("symmetric", "missing")),
    };
    let m = dim(obj, "m")?.ok_or_else(|| err("m", "missing"))?;
    let n = dim(obj, "n")?.ok_or_else(|| err("n", "missing"))?;
    let k = match (dim(obj, "k")?, symmetric) {
        (Some(k), false) => k,
        (None, false) => return Err(err("k", "missing (required when symmetric is false)")),
        (Some(_), true) => return Err(err("k", "must be omitted when symmetric is true")),
        (None, true) => n,
    };
    let slices = obj
        .get("slices")
        .ok_or_else(|| err("slices", "missing"))?
        .as_array()
        .ok_or_else(|| err("slices", "expected an array"))?;
    if slices.len() != m {
        return Err(err("slices", format!("expected {m} slices, got {}", slices.len())));
    }
    let mut mats = Vec::with_capacity(m);
    for (i, s) in slices.iter().enumerate() {
        let rows = s
            .as_array()
            .ok_or_else(|| err(&format!("slices[{i}]"), "expected an array"))?;
        if rows.len() != n {
            return Err(err(
                &format!("slices[{i}]"),
                format!("expected {n} rows, got {}", rows.len()),
            ));
        }
        let mut parsed: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for (a, row) in rows.iter().enumerate() {
            let field = format!("slices[{i}][{a}]");
            let row = row.as_array().ok_or_else(|| err(&field, "expected an array"))?;
            if row.len() != k {
                return Err(err(&field, format!("expected {k} entries, got {}", row.len())));
            }
            let mut out = Vec::with_capacity(k);
            for (b, e) in row.iter().enumerate() {
                let field = format!("slices[{i}][{a}][{b}]");
                let s = e
                    .as_str()
                    .ok_or_else(|| err(&field, format!("expected a rational string, got {e}")))?;
                out.push(parse_rational(s).map_err(|msg| err(&field, msg))?);
            }
            parsed.push(out);
        }
        let mat = ExactMatrix::from_rows(parsed)?;
        if symmetric {
            for a in 0..n {
                for b in a + 1..n {
                    if mat.get(a, b) != mat.get(b, a) {
                        return Err(err(
                            &format!("slices[{i}][{a}][{b}]"),
                            format!("slice is not symmetric (differs from slices[{i}][{b}][{a}])"),
                        ));
                    }
                }
            }
        }
        mats.push(mat);
    }
    Tensor3::from_slices(&mats, symmetric)
}

pub fn tensor_to_json(x: &Tensor3) -> Value {
    let slices: Vec<Value> = (0..x.m())
        .map(|i| {
            Value::Array(
                (0..x.n())
                    .map(|a| {
                        Value::Array(
                            (0..x.k())
                                .map(|b| Value::String(format_rational(x.entry(i, a, b))))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    let mut obj = json!({
        "version": 1,
        "m": x.m(),
        "n": x.n(),
        "symmetric": x.is_symmetric(),
    });
    if !x.is_symmetric() {
        obj["k"] = json!(x.k());
    }
    obj["slices"] = Value::Array(slices);
    obj
}

pub fn read_tensor_file(path: &Path) -> Result<Tensor3> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    tensor_from_json(&text)
}

pub fn write_tensor_file(path: &Path, x: &Tensor3) -> Result<()> {
    let text = serde_json::to_string(&tensor_to_json(x)).expect("serializable");
    std::fs::write(path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{example_tensor, random_rank_r_general};
    use proptest::prelude::*;

    #[test]
    fn parses_symmetric_file() {
        let text = r#"{"version":1,"m":1,"n":2,"symmetric":true,"slices":[[["1","-1/2"],["-2/4","0"]]]}"#;
        let x = tensor_from_json(text).unwrap();
        assert!(x.is_symmetric());
        assert_eq!(x.dims(), (1, 2, 2));
        assert_eq!(format_rational(x.entry(0, 1, 0)), "-1/2");
    }

    #[test]
    fn field_precise_errors() {
        let cases = [
            (
                r#"{"version":1,"m":1,"n":1,"symmetric":true,"slices":[[["1/0"]]]}"#,
                "slices[0][0][0]: zero denominator",
            ),
            (
                r#"{"version":1,"m":1,"n":1,"symmetric":true,"slices":[[["x"]]]}"#,
                "slices[0][0][0]: malformed",
            ),
            (
                r#"{"version":1,"m":1,"n":1,"symmetric":true,"slices":[[[3]]]}"#,
                "slices[0][0][0]: expected a rational string",
            ),
            (
                r#"{"version":1,"m":1,"n":2,"symmetric":true,"slices":[[["1","2"],["3","4"]]]}"#,
                "slices[0][0][1]: slice is not symmetric",
            ),
            (
                r#"{"version":1,"m":1,"n":1,"symmetric":false,"slices":[[["1"]]]}"#,
                "k: missing",
            ),
            (
                r#"{"version":1,"m":1,"n":1,"k":1,"symmetric":true,"slices":[[["1"]]]}"#,
                "k: must be omitted",
            ),
            (
                r#"{"version":2,"m":1,"n":1,"symmetric":true,"slices":[[["1"]]]}"#,
                "version: unsupported",
            ),
            (
                r#"{"version":1,"m":2,"n":1,"symmetric":true,"slices":[[["1"]]]}"#,
                "slices: expected 2 slices",
            ),
            (
                r#"{"version":1,"m":1,"n":1,"symmetric":true,"slices":[[["1","2"]]]}"#,
                "slices[0][0]: expected 1 entries",
            ),
            (
                r#"{"version":1,"m":0,"n":1,"symmetric":true,"slices":[]}"#,
                "m: expected a positive integer",
            ),
            (
                r#"{"version":1,"m":1,"n":1,"symmetric":true,"slices":[[["1"]]],"extra":0}"#,
                "extra: unknown field",
            ),
            ("{\n\"version\":1,\n", "line "),
        ];
        for (text, want) in cases {
            let got = tensor_from_json(text).unwrap_err().to_string();
            assert!(got.contains(want), "{got:?} does not contain {want:?}");
        }
    }

    #[test]
    fn writes_k_only_for_general_tensors() {
        let s = tensor_to_json(&example_tensor("rank_one(2,3)").unwrap());
        assert!(s.get("k").is_none());
        let g = tensor_to_json(&random_rank_r_general(2, 3, 4, 1, 0));
        assert_eq!(g["k"], 4);
    }

    proptest! {
        #[test]
        fn json_round_trip(m in 1usize..4, n in 1usize..4, k in 1usize..4, r in 0usize..3, seed: u64, sym: bool) {
            let x = if sym {
                crate::tensor::random_rank_r(m, n, r, seed, true).scale(&Rational::new(1.into(), 3.into()))
            } else {
                random_rank_r_general(m, n, k, r, seed)
            };
            let text = serde_json::to_string(&tensor_to_json(&x)).unwrap();
            prop_assert_eq!(tensor_from_json(&text).unwrap(), x);
        }
    }
}
