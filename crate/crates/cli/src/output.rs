use std::path::Path;

use qmath::ComplexMatrix;
use serde_json::Value;

use crate::CliError;

/// Full-precision numeric field (13 significant digits, stable layout).
pub fn num(x: f64) -> String {
    format!("{x:.12e}")
}

pub fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn json_doc(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

/// Row-major [re, im] pairs.
pub fn matrix_json(m: &ComplexMatrix) -> Value {
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            let v = m.get(i, j);
            row.push(Value::from(vec![v.re, v.im]));
        }
        rows.push(Value::from(row));
    }
    Value::from(rows)
}
