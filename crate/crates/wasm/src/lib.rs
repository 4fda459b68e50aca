//! Browser bindings. Every export returns a JSON string or throws a string.
//!
//! Budgets are unlimited here (there is no clock on wasm32), so inputs are
//! capped by state count instead.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use convcode::analysis::{analyze, AnalyzeError, AnalyzeOptions};
use convcode::bounds::bounds_report;
use convcode::catalog;
use convcode::code::profile;
use convcode::gf::Field;
use convcode::polymat::PolyMatrix;
use convcode::skew::{ideal_generator_matrix, Algebra, Automorphism, SkewPoly};
use convcode::text::{format_matrix_file, parse_matrix_file};

/// Largest trellis the page will search, in states.
pub const MAX_STATES: u128 = 1 << 16;

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

pub fn bounds_json(n: usize, k: usize, delta: usize, m: usize, q: u64) -> Result<Value, String> {
    let b = bounds_report(n, k, delta, m, q).map_err(|e| e.to_string())?;
    Ok(serde_json::to_value(b).expect("serializable"))
}

fn analysis_json(g: &PolyMatrix, coldist: usize) -> Result<Value, String> {
    let p = profile(g).map_err(|e| e.to_string())?;
    if (p.q as u128)
        .checked_pow(p.delta as u32)
        .is_none_or(|s| s > MAX_STATES)
    {
        return Err(format!("{}: more than {MAX_STATES} trellis states", p.id()));
    }
    let opts = AnalyzeOptions {
        coldist: Some(coldist),
        ..Default::default()
    };
    match analyze(g, &opts) {
        Ok(a) => {
            let mut v = serde_json::to_value(&a).expect("serializable");
            v["id"] = json!(a.profile.id());
            Ok(v)
        }
        Err(AnalyzeError::Unsupported { profile, error }) => Err(format!("{}: {error}", profile.id())),
        Err(e) => Err(e.to_string()),
    }
}

pub fn analyze_json(matrix_file: &str, coldist: usize) -> Result<Value, String> {
    let g = parse_matrix_file(matrix_file).map_err(|e| e.to_string())?;
    analysis_json(&g, coldist)
}

pub fn cyclic_build_json(n: usize, q: u64, sigma: &str, g: &str) -> Result<Value, String> {
    let field = Field::with_size(q).map_err(|e| e.to_string())?;
    let alg = Algebra::new(n, &field).map_err(|e| e.to_string())?;
    let s = Automorphism::parse(&alg, sigma).map_err(|e| e.to_string())?;
    let gp = SkewPoly::parse(&s, g).map_err(|e| e.to_string())?;
    let m = ideal_generator_matrix(&gp).map_err(|e| e.to_string())?;
    let mut v = analysis_json(&m, 0)?;
    v["matrix_file"] = json!(format_matrix_file(&m));
    Ok(v)
}

pub fn catalog_json() -> Value {
    let entries: Vec<Value> = catalog::list()
        .iter()
        .map(|e| json!({ "id": e.id, "name": e.name, "q": e.q(), "expected_g": e.expected_g }))
        .collect();
    Value::Array(entries)
}

pub fn catalog_matrix_text(id: &str) -> Result<String, String> {
    catalog::get(id)
        .and_then(|e| e.export())
        .map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn bounds(n: usize, k: usize, delta: usize, m: usize, q: u32) -> Result<String, JsValue> {
    to_js(bounds_json(n, k, delta, m, q as u64))
}

#[wasm_bindgen(js_name = analyzeMatrix)]
pub fn analyze_matrix(matrix_file: &str, coldist: usize) -> Result<String, JsValue> {
    to_js(analyze_json(matrix_file, coldist))
}

#[wasm_bindgen(js_name = cyclicBuild)]
pub fn cyclic_build(n: usize, q: u32, sigma: &str, g: &str) -> Result<String, JsValue> {
    to_js(cyclic_build_json(n, q as u64, sigma, g))
}

#[wasm_bindgen(js_name = catalogList)]
pub fn catalog_list() -> String {
    catalog_json().to_string()
}

#[wasm_bindgen(js_name = catalogMatrix)]
pub fn catalog_matrix(id: &str) -> Result<String, JsValue> {
    catalog_matrix_text(id).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_example() {
        let v = bounds_json(5, 3, 4, 2, 2).unwrap();
        assert_eq!(v["griesmer"], 6);
        assert!(bounds_json(5, 2, 5, 2, 2).is_err());
    }

    #[test]
    fn analyze_catalog_entry() {
        let text = catalog_matrix_text("G2").unwrap();
        let v = analyze_json(&text, 6).unwrap();
        assert_eq!(v["id"], "(7,3,6;2)_2");
        assert_eq!(v["distances"]["d_free"], 12);
        assert!(analyze_json("field GF(2)\n1, z^\n", 0).is_err());
        let big = catalog_matrix_text("(15,4,12;3)_2").unwrap();
        assert!(analyze_json(&big, 0).is_ok());
    }

    #[test]
    fn build_g1() {
        let v = cyclic_build_json(7, 2, "x^5", "1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)").unwrap();
        assert_eq!(v["distances"]["d_free"], 8);
        assert_eq!(
            v["matrix_file"].as_str().unwrap(),
            catalog_matrix_text("G1").unwrap()
        );
        assert!(cyclic_build_json(6, 2, "x", "1").is_err());
    }

    #[test]
    fn catalog_listing() {
        assert_eq!(catalog_json().as_array().unwrap().len(), 42);
    }
}
