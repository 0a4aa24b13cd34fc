use std::fmt::Write;

use pferrer::ideal::{ferrer_ideal, minimal_primes_with};
use pferrer::invariants::{ara_certificate, betti_table, homological_summary, regularity};
use pferrer::series::{hilbert_series_linear, hilbert_series_monomial_with};
use pferrer::{Limits, PFerrerPartition, PrimeComponent};
use serde_json::{json, Value};

use crate::failure::Failure;

/// The report document. Every cross-check between independently computed
/// parts must hold before it is returned.
pub fn build(phi: &PFerrerPartition, limits: &Limits, certificate: bool) -> Result<Value, Failure> {
    let profile = phi.diagonal_profile();
    let summary = homological_summary(phi);
    let table = betti_table(phi);
    let ideal = ferrer_ideal(phi);
    let n = ideal.ambient().len();
    let d = n - profile.df;
    let series = hilbert_series_linear(profile.df as u64, profile.p as u64, &profile.tail(), d);
    let primes = minimal_primes_with(&ideal, limits)?;
    let (reg_ideal, reg_quotient) = regularity(phi);

    let mut problems = Vec::new();
    if table.get(1) != phi.num_cells() as u64 {
        problems.push(format!("β_1 = {} but there are {} boxes", table.get(1), phi.num_cells()));
    }
    if table.projdim() != profile.delta {
        problems.push(format!("projdim {} but δ = {}", table.projdim(), profile.delta));
    }
    let height = primes.iter().map(PrimeComponent::height).min().unwrap_or(0);
    if height != profile.df {
        problems.push(format!("height {height} but df = {}", profile.df));
    }
    let monomial = hilbert_series_monomial_with(&ideal, limits)?;
    if monomial != series {
        problems.push(format!("series {series} but the ideal gives {monomial}"));
    }
    if !problems.is_empty() {
        return Err(Failure::Mismatch(problems.join("; ")));
    }

    let mut doc = json!({
        "input": phi.to_json(),
        "p": phi.depth(),
        "boxes": phi.num_cells(),
        "profile": { "s": profile.counts, "df": profile.df, "delta": profile.delta },
        "summary": {
            "n": summary.n,
            "c": summary.c,
            "d": summary.d,
            "depth": summary.depth,
            "projdim": summary.projdim,
            "reg": [reg_ideal, reg_quotient],
            "ara": summary.ara,
            "cohen_macaulay": summary.cohen_macaulay,
        },
        "betti": table,
        "hilbert_series": {
            "reduced": series.to_string(),
            "linear_form": series.format_at(d),
            "numerator": series.numerator(),
            "denom_exponent": series.denom_exponent(),
        },
        "s_vector": profile.tail(),
        "generators": ideal.generator_strings(),
        "minimal_primes": primes.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    if certificate {
        let cert = ara_certificate(phi).map_err(|e| Failure::Mismatch(e.to_string()))?;
        if cert.ara() != table.projdim() {
            return Err(Failure::Mismatch(format!("certificate has {} classes, projdim is {}", cert.ara(), table.projdim())));
        }
        doc["certificate"] = json!({ "sums": cert.sums(), "witnesses": cert.witnesses });
    }
    Ok(doc)
}

fn join(values: &Value) -> String {
    values
        .as_array()
        .map(|a| a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))
        .unwrap_or_default()
}

pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let s = &doc["summary"];
    let betti: Vec<String> = doc["betti"]
        .as_object()
        .map(|m| {
            let mut entries: Vec<(usize, String)> =
                m.iter().map(|(j, b)| (j.parse().unwrap_or(0), b.to_string())).collect();
            entries.sort();
            entries.into_iter().map(|(_, b)| b).collect()
        })
        .unwrap_or_default();
    let _ = writeln!(out, "diagram      {}", doc["input"]);
    let _ = writeln!(out, "p            {}", doc["p"]);
    let _ = writeln!(out, "boxes        {}", doc["boxes"]);
    let _ = writeln!(out, "diagonals    s = ({}), df = {}, δ = {}", join(&doc["profile"]["s"]), doc["profile"]["df"], doc["profile"]["delta"]);
    let _ = writeln!(out, "variables    n = {}, height c = {}, dim d = {}", s["n"], s["c"], s["d"]);
    let _ = writeln!(out, "depth        {}", s["depth"]);
    let _ = writeln!(out, "projdim      {}", s["projdim"]);
    let _ = writeln!(out, "ara          {}", s["ara"]);
    let _ = writeln!(out, "reg          ({})", join(&s["reg"]));
    let _ = writeln!(out, "CM           {}", s["cohen_macaulay"]);
    let _ = writeln!(out, "betti        ({})", betti.join(", "));
    let hs = &doc["hilbert_series"];
    let _ = writeln!(out, "series       {}", hs["reduced"].as_str().unwrap_or_default());
    let _ = writeln!(out, "  linear     {}", hs["linear_form"].as_str().unwrap_or_default());
    let _ = writeln!(out, "s-vector     ({})", join(&doc["s_vector"]));
    let list = |key: &str| -> Vec<String> {
        doc[key].as_array().into_iter().flatten().filter_map(|v| v.as_str().map(String::from)).collect()
    };
    let _ = writeln!(out, "generators   {}", list("generators").join(", "));
    let _ = writeln!(out, "primes       {}", list("minimal_primes").join(" ∩ "));
    if let Some(sums) = doc.get("certificate").and_then(|c| c["sums"].as_array()) {
        for (j, sum) in sums.iter().enumerate() {
            let _ = writeln!(out, "F_{:<10} {}", j + 1, sum.as_str().unwrap_or_default());
        }
    }
    out.pop();
    out
}
