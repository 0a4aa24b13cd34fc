use num_bigint::BigInt;
use pferrer::ideal::{ferrer_ideal, intersection_decomposition, minimal_primes_with};
use pferrer::invariants::{ara_certificate, betti_table};
use pferrer::oracle::{graded_betti_brute_with, hilbert_function_truncated_with, intersect_monomial, OracleOptions};
use pferrer::series::{hilbert_series_linear, hilbert_series_monomial_with};
use pferrer::{Limits, MonomialIdeal, PFerrerPartition, PrimeComponent};
use serde_json::{json, Value};

use crate::failure::Failure;

struct Settings<'a> {
    limits: &'a Limits,
    max_degree: usize,
    seed: Option<u64>,
}

/// `Ok(None)` when the check passes, `Ok(Some(reason))` when it fails.
type Check = fn(&PFerrerPartition, &Settings) -> Result<Option<String>, Failure>;

const CHECKS: [(&str, Check); 4] = [
    ("betti", betti),
    ("series", series),
    ("decomposition", decomposition),
    ("certificate", certificate),
];

fn betti(phi: &PFerrerPartition, s: &Settings) -> Result<Option<String>, Failure> {
    let options = OracleOptions { limits: s.limits.clone(), seed: s.seed, ..Default::default() };
    let oracle = graded_betti_brute_with(&ferrer_ideal(phi), &options)?;
    let formula = betti_table(phi);
    if oracle.totals() != formula.values() {
        return Ok(Some(format!("oracle {:?}, formula {:?}", oracle.totals(), formula.values())));
    }
    if !oracle.is_linear(phi.depth() as u32) {
        return Ok(Some("oracle finds entries off the linear strand".into()));
    }
    Ok(None)
}

fn series(phi: &PFerrerPartition, s: &Settings) -> Result<Option<String>, Failure> {
    let ideal = ferrer_ideal(phi);
    let profile = phi.diagonal_profile();
    let d = ideal.ambient().len() - profile.df;
    let linear = hilbert_series_linear(profile.df as u64, profile.p as u64, &profile.tail(), d);
    let monomial = hilbert_series_monomial_with(&ideal, s.limits)?;
    if monomial != linear {
        return Ok(Some(format!("formula {linear}, ideal {monomial}")));
    }
    let counts: Vec<BigInt> = hilbert_function_truncated_with(&ideal, s.max_degree, s.limits)?
        .into_iter()
        .map(BigInt::from)
        .collect();
    let taylor = linear.taylor(s.max_degree);
    if let Some(k) = (0..counts.len()).find(|&k| counts[k] != taylor[k]) {
        return Ok(Some(format!("degree {k}: {} standard monomials, series says {}", counts[k], taylor[k])));
    }
    Ok(None)
}

fn meet(ideals: impl IntoIterator<Item = MonomialIdeal>) -> Option<MonomialIdeal> {
    ideals.into_iter().reduce(|a, b| intersect_monomial(&a, &b))
}

fn decomposition(phi: &PFerrerPartition, s: &Settings) -> Result<Option<String>, Failure> {
    let ideal = ferrer_ideal(phi);
    if phi.depth() >= 2 {
        let components = intersection_decomposition(phi)?;
        let m = meet(components.iter().map(|c| c.ideal())).expect("at least one component");
        if m.generators() != ideal.generators() {
            return Ok(Some(format!("components intersect to {m}")));
        }
    }
    let primes = minimal_primes_with(&ideal, s.limits)?;
    let m = meet(primes.iter().map(PrimeComponent::as_ideal)).expect("a proper ideal has a prime");
    if m.generators() != ideal.generators() {
        return Ok(Some(format!("minimal primes intersect to {m}")));
    }
    let height = primes.iter().map(PrimeComponent::height).min().unwrap_or(0);
    if height != phi.diagonal_profile().df {
        return Ok(Some(format!("height {height}, df {}", phi.diagonal_profile().df)));
    }
    Ok(None)
}

fn certificate(phi: &PFerrerPartition, _: &Settings) -> Result<Option<String>, Failure> {
    match ara_certificate(phi) {
        Err(e) => Ok(Some(e.to_string())),
        Ok(cert) if cert.classes.first().map(Vec::len) != Some(1) => Ok(Some("|K_1| ≠ 1".into())),
        Ok(cert) if cert.ara() != phi.diagonal_profile().delta => {
            Ok(Some(format!("{} classes, δ = {}", cert.ara(), phi.diagonal_profile().delta)))
        }
        Ok(_) => Ok(None),
    }
}

/// Walks the removal chain down while the check keeps failing.
fn shrink(phi: &PFerrerPartition, check: Check, s: &Settings, reason: String) -> (PFerrerPartition, String) {
    let mut current = (phi.clone(), reason);
    while let Ok((smaller, _)) = current.0.remove_last_diagonal_box() {
        match check(&smaller, s) {
            Ok(Some(reason)) => current = (smaller, reason),
            _ => break,
        }
    }
    current
}

pub fn run(phi: &PFerrerPartition, limits: &Limits, max_degree: usize, seed: Option<u64>) -> Result<String, Failure> {
    let settings = Settings { limits, max_degree, seed };
    let mut results = Vec::new();
    let mut counterexample: Option<Value> = None;
    for (name, check) in CHECKS {
        let outcome = check(phi, &settings)?;
        results.push(json!({ "check": name, "pass": outcome.is_none(), "detail": outcome }));
        if let (Some(reason), None) = (outcome, &counterexample) {
            let (small, why) = shrink(phi, check, &settings, reason);
            counterexample = Some(json!({ "check": name, "diagram": small.to_json(), "detail": why }));
        }
    }
    let summary = serde_json::to_string_pretty(&json!({
        "input": phi.to_json(),
        "max_degree": max_degree,
        "checks": results,
        "pass": counterexample.is_none(),
    }))
    .expect("JSON values serialize");
    match counterexample {
        None => Ok(summary),
        Some(c) => Err(Failure::Verification { summary, counterexample: c.to_string() }),
    }
}
