//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns the same JSON document the command-line tool prints
//! with `--format json`.

use wasm_bindgen::prelude::*;

use mirror_series::report::{self, Format, SeriesKind};

/// Orders above this make the page unresponsive.
pub const MAX_ORDER: usize = 128;

fn checked(order: usize, min: usize) -> Result<usize, String> {
    if order < min {
        Err(format!("order must be at least {min}"))
    } else if order > MAX_ORDER {
        Err(format!("order must be at most {MAX_ORDER}"))
    } else {
        Ok(order)
    }
}

pub fn series_json(order: usize, which: &str) -> Result<String, String> {
    let which: SeriesKind = which.parse()?;
    let rec = report::series_record(checked(order, 1)?, which).map_err(|e| e.to_string())?;
    Ok(rec.render(Format::Json))
}

pub fn invariants_json(order: usize) -> Result<String, String> {
    let rec = report::invariants_record(checked(order, 1)?).map_err(|e| e.to_string())?;
    Ok(rec.render(Format::Json))
}

pub fn yukawa_json(order: usize) -> Result<String, String> {
    let rec = report::yukawa_record(checked(order, 2)?).map_err(|e| e.to_string())?;
    Ok(rec.render(Format::Json))
}

/// Holomorphic parts of the Frobenius basis; `which` is `f`, `g` or `basis`.
#[wasm_bindgen]
pub fn series(order: usize, which: &str) -> Result<String, JsValue> {
    series_json(order, which).map_err(|e| JsValue::from_str(&e))
}

/// `c_d`, `m_d`, `n_d`, `K_d`, `R_d` for `d = 1..=order`.
#[wasm_bindgen]
pub fn invariants(order: usize) -> Result<String, JsValue> {
    invariants_json(order).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn yukawa(order: usize) -> Result<String, JsValue> {
    yukawa_json(order).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn max_order() -> usize {
    MAX_ORDER
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_bounds() {
        assert!(series_json(0, "f").is_err());
        assert!(yukawa_json(1).is_err());
        assert!(invariants_json(MAX_ORDER + 1).is_err());
        assert!(series_json(3, "nope").is_err());
    }
}
