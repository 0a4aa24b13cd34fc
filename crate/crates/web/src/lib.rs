//! Browser demo. The plain functions return JSON text so they can be tested
//! natively; the `#[wasm_bindgen]` wrappers only convert the error side.

use pferrer::ideal::{ferrer_ideal, minimal_primes};
use pferrer::invariants::{ara_certificate, betti_table, homological_summary, mapping_cone_step};
use pferrer::macaulay::realize_mvector;
use pferrer::series::hilbert_series_linear;
use pferrer::{MVector, PFerrerPartition};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parse(text: &str) -> Result<PFerrerPartition, String> {
    PFerrerPartition::parse(text).map_err(|e| e.to_string())
}

fn cells(phi: &PFerrerPartition) -> Value {
    phi.cells()
        .iter()
        .map(|c| json!({ "coords": c.coords(), "diagonal": c.diagonal() }))
        .collect()
}

/// Everything the page draws and tabulates for one diagram.
pub fn analyze(text: &str) -> Result<String, String> {
    let phi = parse(text)?;
    let profile = phi.diagonal_profile();
    let summary = homological_summary(&phi);
    let ideal = ferrer_ideal(&phi);
    let n = ideal.ambient().len();
    let series = hilbert_series_linear(profile.df as u64, profile.p as u64, &profile.tail(), n - profile.df);
    let primes = minimal_primes(&ideal).map_err(|e| e.to_string())?;
    let certificate = ara_certificate(&phi).map_err(|e| e.to_string())?;
    Ok(json!({
        "diagram": phi.to_json(),
        "p": phi.depth(),
        "cells": cells(&phi),
        "profile": { "s": profile.counts, "df": profile.df, "delta": profile.delta },
        "summary": summary,
        "betti": betti_table(&phi).values(),
        "series": series.to_string(),
        "generators": ideal.generator_strings(),
        "primes": primes.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "ara_sums": certificate.sums(),
    })
    .to_string())
}

/// One step of the removal chain: the smaller diagram and how β changes.
pub fn remove_last_box(text: &str) -> Result<String, String> {
    let phi = parse(text)?;
    let step = mapping_cone_step(&phi).map_err(|e| e.to_string())?;
    Ok(json!({
        "diagram": step.reduced.to_json(),
        "removed": step.removed.coords(),
        "delta": step.delta,
        "betti_before": betti_table(&phi).values(),
        "betti_after": betti_table(&step.reduced).values(),
        "colon": step.colon_generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "recurrence_holds": step.holds,
    })
    .to_string())
}

/// Realizes a comma-separated M-vector.
pub fn realize(h: &str) -> Result<String, String> {
    let values: Vec<u64> = h
        .split(',')
        .map(|v| v.trim().parse::<u64>().map_err(|_| format!("not a nonnegative integer: {v:?}")))
        .collect::<Result<_, _>>()?;
    let realization = realize_mvector(&MVector::new(values).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let mut doc = serde_json::to_value(&realization).map_err(|e| e.to_string())?;
    doc["cells"] = cells(&realization.diagram);
    doc["p"] = json!(realization.diagram.depth());
    Ok(doc.to_string())
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(text: &str) -> Result<String, JsError> {
    analyze(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = removeLastBox)]
pub fn remove_last_box_js(text: &str) -> Result<String, JsError> {
    remove_last_box(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = realize)]
pub fn realize_js(h: &str) -> Result<String, JsError> {
    realize(h).map_err(|e| JsError::new(&e))
}
