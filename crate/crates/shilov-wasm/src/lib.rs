//! Browser bindings: three entry points returning JSON strings, consumed by
//! the static page in `www/`.
//!
//! Build with `wasm-pack build --target web crates/shilov-wasm` and serve
//! the `www/` directory next to the generated `pkg/`.

use wasm_bindgen::prelude::*;

use shilov::{distinguish, explain, find_coincidences, invariant_vector, shilov_model, DomainSpec};

fn parse(text: &str) -> Result<DomainSpec, String> {
    DomainSpec::parse(text).map_err(|e| e.to_string())
}

pub(crate) fn info_json(spec: &str) -> Result<String, String> {
    let domain = parse(spec)?;
    let model = shilov_model(&domain);
    let vector = invariant_vector(&domain);
    let doc = serde_json::json!({
        "domain": domain.to_string(),
        "ambient_dim": domain.ambient_dim(),
        "rank": domain.rank(),
        "tube_class": domain.tube_class().ok().map(|c| c.to_string()),
        "shilov_model": model.to_string(),
        "shilov_dim": model.dim(),
        "invariants": vector.to_json(true),
    });
    Ok(doc.to_string())
}

pub(crate) fn distinguish_json(spec1: &str, spec2: &str) -> Result<String, String> {
    let a = parse(spec1)?;
    let b = parse(spec2)?;
    let certificate = distinguish(&a, &b);
    let doc = serde_json::json!({
        "lhs_domain": a.to_string(),
        "rhs_domain": b.to_string(),
        "lhs_invariants": invariant_vector(&a).to_json(false),
        "rhs_invariants": invariant_vector(&b).to_json(false),
        "certificate": certificate.to_json(true),
        "explanation": explain(&certificate),
    });
    Ok(doc.to_string())
}

pub(crate) fn coincidences_json(max_dim: u32, max_factors: u32) -> String {
    let hits = find_coincidences(u64::from(max_dim), max_factors);
    let doc = serde_json::json!({
        "max_ambient_dim": max_dim,
        "max_factors": max_factors,
        "coincidences": hits.iter().map(|c| serde_json::json!({
            "lhs": c.lhs.to_string(),
            "rhs": c.rhs.to_string(),
            "shared": c.shared.to_json(false),
        })).collect::<Vec<_>>(),
    });
    doc.to_string()
}

/// Invariant vector and boundary model of one domain, as JSON.
#[wasm_bindgen]
pub fn domain_info(spec: &str) -> Result<String, JsValue> {
    info_json(spec).map_err(|e| JsValue::from_str(&e))
}

/// Separation certificate for a pair of domains, as JSON.
#[wasm_bindgen]
pub fn distinguish_domains(spec1: &str, spec2: &str) -> Result<String, JsValue> {
    distinguish_json(spec1, spec2).map_err(|e| JsValue::from_str(&e))
}

/// Invariant-vector coincidences among products, as JSON.
#[wasm_bindgen]
pub fn coincidence_scan(max_dim: u32, max_factors: u32) -> String {
    coincidences_json(max_dim.clamp(2, 200), max_factors.clamp(1, 4))
}
