//! M-vectors, revlex segments, and their realization by Ferrer diagrams.
//!
//! A multicomplex in `n` variables becomes an `n`-Ferrer diagram by shifting
//! every exponent vector by one; its degree-`i` monomials land on diagonal
//! `i + 1`. Taking the revlex segments of an M-vector `h` gives a diagram
//! whose ideal has an Alexander dual with h-vector exactly `h`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::binomial::binomial;
use crate::diagram::{Cell, DiagramError, PFerrerPartition};
use crate::ideal::{alexander_dual, ferrer_ideal, IdealError, MonomialIdeal};
use crate::series::{h_vector, hilbert_series_monomial, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("h-vector must start with h_0 = 1")]
    BadStart,
    #[error("not an M-vector: h_{index} = {value} violates the Macaulay bound h_{index} ≤ {bound}")]
    NotAnMVector { index: usize, value: u64, bound: u64 },
    #[error("{count} monomials requested but only {available} exist")]
    CountOutOfRange { count: u64, available: u64 },
    #[error("not closed under division: {0}")]
    NotClosedUnderDivision(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The `i`-th Macaulay representation `h = C(k_i, i) + C(k_{i−1}, i−1) + …`
/// as the list of `(k, j)` pairs, top term first.
pub fn macaulay_representation(h: u64, i: usize) -> Vec<(u64, u64)> {
    let mut rest = h;
    let mut out = Vec::new();
    let mut j = i as u64;
    while rest > 0 && j > 0 {
        let mut k = j;
        while binomial(k + 1, j) <= rest {
            k += 1;
        }
        rest -= binomial(k, j);
        out.push((k, j));
        j -= 1;
    }
    out
}

/// `h^⟨i⟩ = C(k_i + 1, i + 1) + C(k_{i−1} + 1, i) + …`.
pub fn macaulay_bound(h: u64, i: usize) -> u64 {
    macaulay_representation(h, i)
        .into_iter()
        .map(|(k, j)| binomial(k + 1, j + 1))
        .sum()
}

/// First index where `h` breaks Macaulay's bound, with the bound.
pub fn m_vector_violation(h: &[u64]) -> Result<(), MacaulayError> {
    if h.first() != Some(&1) {
        return Err(MacaulayError::BadStart);
    }
    for i in 1..h.len().saturating_sub(1) {
        let bound = macaulay_bound(h[i], i);
        if h[i + 1] > bound {
            return Err(MacaulayError::NotAnMVector {
                index: i + 1,
                value: h[i + 1],
                bound,
            });
        }
    }
    Ok(())
}

pub fn is_m_vector(h: &[u64]) -> bool {
    m_vector_violation(h).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MVector {
    h: Vec<u64>,
}

impl MVector {
    pub fn new(h: Vec<u64>) -> Result<MVector, MacaulayError> {
        m_vector_violation(&h)?;
        Ok(MVector { h })
    }

    pub fn values(&self) -> &[u64] {
        &self.h
    }

    /// Number of variables of the segment multicomplex, `max(h_1, 1)`.
    pub fn num_variables(&self) -> usize {
        self.h.get(1).copied().unwrap_or(0).max(1) as usize
    }

    /// `h` without trailing zeros.
    pub fn trimmed(&self) -> &[u64] {
        let len = self.h.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        &self.h[..len]
    }
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.h.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Revlex with `x_1 > … > x_n`: `a` comes first iff the last nonzero entry
/// of `a − b` is negative.
pub fn revlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.iter()
        .zip(b)
        .rev()
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| x.cmp(y))
}

/// The first `count` monomials of `degree` in `nvars` variables, in revlex
/// order, as exponent vectors.
pub fn revlex_segment(nvars: usize, degree: u32, count: u64) -> Result<Vec<Vec<u32>>, MacaulayError> {
    let available = if nvars == 0 {
        u64::from(degree == 0)
    } else {
        binomial(nvars as u64 + degree as u64 - 1, degree as u64)
    };
    if count > available {
        return Err(MacaulayError::CountOutOfRange { count, available });
    }
    // revlex order is lex order on reversed exponent vectors, ascending
    fn fill(slot: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, count: usize) {
        if out.len() == count {
            return;
        }
        if slot == 0 {
            current[0] = left;
            out.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[slot] = e;
            fill(slot - 1, left - e, current, out, count);
            if out.len() == count {
                break;
            }
        }
        current[slot] = 0;
    }
    let mut out = Vec::with_capacity(count as usize);
    if nvars > 0 && count > 0 {
        fill(nvars - 1, degree, &mut vec![0; nvars], &mut out, count as usize);
    } else if count > 0 {
        out.push(Vec::new());
    }
    Ok(out)
}

/// A finite set of monomials in `x_1 … x_n` closed under division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multicomplex {
    nvars: usize,
    monomials: BTreeSet<Vec<u32>>,
}

impl Multicomplex {
    pub fn new<I: IntoIterator<Item = Vec<u32>>>(nvars: usize, monomials: I) -> Result<Multicomplex, MacaulayError> {
        let monomials: BTreeSet<Vec<u32>> = monomials.into_iter().collect();
        if let Some(bad) = monomials.iter().find(|m| m.len() != nvars) {
            return Err(MacaulayError::NotClosedUnderDivision(format!(
                "{} has the wrong number of variables",
                format_monomial(bad)
            )));
        }
        for m in &monomials {
            for i in 0..nvars {
                if m[i] > 0 {
                    let mut q = m.clone();
                    q[i] -= 1;
                    if !monomials.contains(&q) {
                        return Err(MacaulayError::NotClosedUnderDivision(format!(
                            "{} is present but {} is not",
                            format_monomial(m),
                            format_monomial(&q)
                        )));
                    }
                }
            }
        }
        if !monomials.is_empty() && !monomials.contains(&vec![0; nvars]) {
            return Err(MacaulayError::NotClosedUnderDivision("1 is missing".into()));
        }
        Ok(Multicomplex { nvars, monomials })
    }

    pub fn num_variables(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &BTreeSet<Vec<u32>> {
        &self.monomials
    }

    pub fn contains(&self, exponents: &[u32]) -> bool {
        self.monomials.contains(exponents)
    }

    /// Number of monomials of each degree, from degree 0 up.
    pub fn census(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for m in &self.monomials {
            let d = m.iter().sum::<u32>() as usize;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] += 1;
        }
        out
    }

    /// Monomials of one degree in revlex order, written out.
    pub fn degree_listing(&self, degree: u32) -> Vec<String> {
        let mut ms: Vec<&Vec<u32>> = self
            .monomials
            .iter()
            .filter(|m| m.iter().sum::<u32>() == degree)
            .collect();
        ms.sort_by(|a, b| revlex_cmp(a, b));
        ms.into_iter().map(|m| format_monomial(m)).collect()
    }
}

/// `x_1^2*x_2`, or `1`.
pub fn format_monomial(exponents: &[u32]) -> String {
    let factors: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => format!("x_{}", i + 1),
            _ => format!("x_{}^{e}", i + 1),
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// Union of the first `h_i` revlex monomials of each degree `i` in
/// `max(h_1, 1)` variables, checked for closure rather than trusted.
pub fn multicomplex_from_mvector(h: &MVector) -> Result<Multicomplex, MacaulayError> {
    let nvars = h.num_variables();
    let mut monomials = Vec::new();
    for (i, &count) in h.values().iter().enumerate() {
        monomials.extend(revlex_segment(nvars, i as u32, count)?);
    }
    Multicomplex::new(nvars, monomials)
}

/// Boxes are exponent vectors shifted by one; the empty multicomplex has no
/// diagram.
pub fn diagram_from_multicomplex(gamma: &Multicomplex) -> Result<PFerrerPartition, MacaulayError> {
    let cells: Vec<Cell> = gamma
        .monomials()
        .iter()
        .map(|m| Cell::new(m.iter().map(|e| e + 1).collect()))
        .collect();
    Ok(PFerrerPartition::from_cells(gamma.num_variables(), cells.iter())?)
}

/// The diagram, its ideal and dual, and the dual's h-vector read from its
/// Hilbert series; `verified` says the h-vector came back as `h`.
#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub h: MVector,
    pub diagram: PFerrerPartition,
    #[serde(rename = "generators")]
    pub ideal: MonomialIdeal,
    #[serde(rename = "dual_generators")]
    pub dual: MonomialIdeal,
    pub dual_h_vector: Vec<i64>,
    pub verified: bool,
}

pub fn realize_mvector(h: &MVector) -> Result<Realization, MacaulayError> {
    let gamma = multicomplex_from_mvector(h)?;
    let diagram = diagram_from_multicomplex(&gamma)?;
    let ideal = ferrer_ideal(&diagram);
    let dual = alexander_dual(&ideal)?;
    let dual_h_vector: Vec<i64> = h_vector(&hilbert_series_monomial(&dual)?)
        .iter()
        .map(|c| c.to_i64().expect("h-vector entries are small"))
        .collect();
    let verified = dual_h_vector.len() == h.trimmed().len()
        && dual_h_vector.iter().zip(h.trimmed()).all(|(&a, &b)| a == b as i64);
    Ok(Realization {
        h: h.clone(),
        diagram,
        ideal,
        dual,
        dual_h_vector,
        verified,
    })
}
