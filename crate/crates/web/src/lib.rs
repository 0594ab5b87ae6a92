//! Browser bindings. Each export takes and returns strings so the page
//! needs no generated type glue beyond `wasm-bindgen`'s defaults.

use equihodge::ehrhart::compute_phi;
use equihodge::hodge::{hodge_diamond, quotient_diamond};
use equihodge::io::{class_headers, render_diamond, InputDocument, QuotientSpec};
use equihodge::mirror::scenario;
use equihodge::InvariantPolytope;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn load(input: &str) -> Result<(InputDocument, InvariantPolytope), String> {
    let doc = InputDocument::from_json(input).map_err(|e| e.to_string())?;
    let ip = doc.build().map_err(|e| e.to_string())?;
    Ok((doc, ip))
}

/// `φ` coefficients per conjugacy class, plus the class headers.
pub fn phi_json(input: &str, buffer: usize) -> Result<String, String> {
    let (_, ip) = load(input)?;
    let phi = compute_phi(&ip, buffer);
    let out = json!({
        "classes": class_headers(ip.group()),
        "coefficients": phi.coefficients.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>(),
        "dimensions": phi.dimensions(),
        "effective": phi.diagnostics.is_effective(),
        "diagnostics": phi.diagnostics,
    });
    Ok(out.to_string())
}

/// Hodge diamond of a generic invariant hypersurface. `quotient` is empty,
/// `trivial`, `det` or a comma list of input generator indices.
pub fn diamond_json(input: &str, quotient: &str) -> Result<String, String> {
    let (doc, ip) = load(input)?;
    let d = hodge_diamond(&ip).map_err(|e| e.to_string())?;
    let dims = d.dimensions();
    let mut out = json!({
        "dim": d.dim,
        "grid": render_diamond(d.dim, |p, q| dims[&(p, q)].to_string()),
        "classes": class_headers(ip.group()),
        "characters": d.entries.iter()
            .map(|(&(p, q), v)| (format!("{p},{q}"), json!(v.values())))
            .collect::<serde_json::Map<String, Value>>(),
    });
    let quotient = quotient.trim();
    if !quotient.is_empty() {
        let spec: QuotientSpec = quotient.parse().map_err(|e: equihodge::Error| e.to_string())?;
        let gens = doc.generator_indices(&ip).map_err(|e| e.to_string())?;
        let sub = spec.subgroup(&ip, &gens).map_err(|e| e.to_string())?;
        let q = quotient_diamond(&d, &sub).map_err(|e| e.to_string())?;
        out["quotient"] = json!({
            "order": sub.order(),
            "grid": render_diamond(q.dim, |p, r| q.get(p, r).to_string()),
        });
    }
    Ok(out.to_string())
}

/// Input document for a named scenario, ready to paste back into the page.
pub fn scenario_input(name: &str, params: &str) -> Result<String, String> {
    let params: Vec<i64> = params
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| format!("bad parameter {s:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let bundle = scenario(name, &params).map_err(|e| e.to_string())?;
    Ok(InputDocument::new(bundle.vertices(), bundle.generators()).to_json())
}

#[wasm_bindgen]
pub fn phi(input: &str, buffer: usize) -> Result<String, JsError> {
    phi_json(input, buffer).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn diamond(input: &str, quotient: &str) -> Result<String, JsError> {
    diamond_json(input, quotient).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = scenarioInput)]
pub fn scenario_input_js(name: &str, params: &str) -> Result<String, JsError> {
    scenario_input(name, params).map_err(|e| JsError::new(&e))
}
