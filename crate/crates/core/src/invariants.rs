//! Closed-form homological invariants of Ferrer ideals.
//!
//! Everything here is read off the diagonal profile: with `c` full diagonals,
//! last diagonal `δ` and generation degree `p`, the quotient `S/I` has a
//! `p`-linear resolution of length `δ` whose Betti numbers are those of the
//! Cohen–Macaulay staircase of height `c` plus one binomial column per box
//! beyond it.

use std::collections::BTreeSet;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::binomial::{binomial, binomial_i};
use crate::diagram::{Cell, DiagonalProfile, DiagramError, PFerrerPartition};
use crate::ideal::{colon_by_monomial, Monomial};

/// `β_j` of the Cohen–Macaulay Ferrer ideal of height `c` in degree `p`:
/// `C(c+p−1, j+p−1)·C(j+p−2, p−1)`.
pub fn betti_cm(c: u64, p: u64, j: u64) -> u64 {
    assert!(c >= 1 && p >= 1, "betti_cm needs c, p ≥ 1");
    if j == 0 {
        return 1;
    }
    if j > c {
        return 0;
    }
    binomial(c + p - 1, j + p - 1) * binomial(j + p - 2, p - 1)
}

/// Betti numbers of `S/I`, `β_1 … β_projdim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    betti: Vec<u64>,
    pub p: usize,
    /// All graded Betti numbers sit in degree `j + p − 1`.
    pub linear: bool,
}

impl BettiTable {
    pub fn new(betti: Vec<u64>, p: usize, linear: bool) -> BettiTable {
        let mut betti = betti;
        while betti.last() == Some(&0) {
            betti.pop();
        }
        BettiTable { betti, p, linear }
    }

    /// `β_j`, with `β_0 = 1`.
    pub fn get(&self, j: usize) -> u64 {
        match j {
            0 => 1,
            _ => self.betti.get(j - 1).copied().unwrap_or(0),
        }
    }

    /// `(β_1, …, β_projdim)`.
    pub fn values(&self) -> &[u64] {
        &self.betti
    }

    pub fn projdim(&self) -> usize {
        self.betti.len()
    }

    /// `B(t) = Σ_{j≥1} (−1)^{j+1} β_j t^{j+p−1}`, so that the Hilbert
    /// numerator over `(1 − t)^n` is `1 − B(t)`.
    pub fn betti_polynomial(&self) -> crate::series::IntPolynomial {
        use num_bigint::BigInt;
        let mut coeffs = vec![BigInt::from(0); self.betti.len() + self.p];
        for (i, &b) in self.betti.iter().enumerate() {
            let j = i + 1;
            let sign = if j % 2 == 1 { 1 } else { -1 };
            coeffs[j + self.p - 1] += BigInt::from(b) * sign;
        }
        crate::series::IntPolynomial::from_big(coeffs)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.betti.len()))?;
        for (i, b) in self.betti.iter().enumerate() {
            map.serialize_entry(&(i + 1).to_string(), b)?;
        }
        map.end()
    }
}

pub fn betti_table(phi: &PFerrerPartition) -> BettiTable {
    let profile = phi.diagonal_profile();
    BettiTable::new(
        (1..=profile.delta as u64).map(|j| betti_from_profile(&profile, j)).collect(),
        profile.p,
        true,
    )
}

fn betti_from_profile(profile: &DiagonalProfile, j: u64) -> u64 {
    let c = profile.df as u64;
    let tail: u64 = (profile.df + 1..=profile.delta)
        .map(|k| profile.s(k) * binomial_i(k as i64 - 1, j as i64 - 1))
        .sum();
    betti_cm(c, profile.p as u64, j) + tail
}

/// `β_j` in the ambient-indexed form `β_j(c,p) + Σ_{i<d} s_i C(n−i−1, j−1)`
/// with `d = n − c` and `s_{d−i} = s(c+i)`; agrees with [`betti_table`] for
/// every `n ≥ δ`.
pub fn betti_ambient_indexed(profile: &DiagonalProfile, n: usize, j: u64) -> u64 {
    let c = profile.df;
    let d = n - c;
    let s = |i: usize| profile.s(c + d - i);
    let tail: u64 = (0..d)
        .map(|i| s(i) * binomial_i(n as i64 - i as i64 - 1, j as i64 - 1))
        .sum();
    betti_cm(c as u64, profile.p as u64, j) + tail
}

/// One step of the removal recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingConeStep {
    pub reduced: PFerrerPartition,
    pub removed: Cell,
    pub delta: usize,
    /// Minimal generators of `I(Φ') : m`, where `m` is the removed box.
    pub colon_generators: Vec<Monomial>,
    /// `β_j(Φ) − β_j(Φ') = C(δ−1, j−1)` for every `j`.
    pub holds: bool,
}

/// Removes the last-diagonal box and checks the mapping-cone recurrence
/// between the two Betti tables. The colon ideal is recorded so callers can
/// see it is generated by `δ − 1` variables.
pub fn mapping_cone_step(phi: &PFerrerPartition) -> Result<MappingConeStep, DiagramError> {
    let delta = phi.diagonal_profile().delta;
    let (reduced, removed) = phi.remove_last_diagonal_box()?;
    let colon = colon_by_monomial(
        &crate::ideal::ferrer_ideal(&reduced),
        &Monomial::of_cell(&removed),
    );
    let before = betti_table(phi);
    let after = betti_table(&reduced);
    let holds = (1..=delta.max(after.projdim())).all(|j| {
        before.get(j) == after.get(j) + binomial_i(delta as i64 - 1, j as i64 - 1)
    });
    Ok(MappingConeStep {
        reduced,
        removed,
        delta,
        colon_generators: colon.generators().iter().cloned().collect(),
        holds,
    })
}

/// `(reg I, reg S/I) = (p, p − 1)`.
pub fn regularity(phi: &PFerrerPartition) -> (usize, usize) {
    let p = phi.depth();
    (p, p - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    /// Number of variables the ideal actually uses.
    pub n: usize,
    /// Height, the number of full diagonals.
    pub c: usize,
    /// Krull dimension `n − c`.
    pub d: usize,
    pub depth: usize,
    pub projdim: usize,
    pub ara: usize,
    pub reg: usize,
    pub cohen_macaulay: bool,
}

pub fn homological_summary(phi: &PFerrerPartition) -> HomologicalSummary {
    let profile = phi.diagonal_profile();
    let n = num_variables(phi);
    HomologicalSummary {
        n,
        c: profile.df,
        d: n - profile.df,
        depth: n - profile.delta,
        projdim: profile.delta,
        ara: profile.delta,
        reg: phi.depth(),
        cohen_macaulay: profile.delta == profile.df,
    }
}

/// Distinct coordinate values per position: the support of the ideal.
pub fn num_variables(phi: &PFerrerPartition) -> usize {
    let cells = phi.cells();
    (0..phi.depth())
        .map(|i| cells.iter().map(|c| c.coords()[i]).max().unwrap_or(0) as usize)
        .sum()
}

/// `β_j(c,p) ≤ β_j ≤ β_j(n − depth, p)` for every `j`.
pub fn betti_bounds_check(table: &BettiTable, c: usize, n: usize, depth: usize) -> bool {
    let p = table.p as u64;
    let upper = (n - depth) as u64;
    (1..=table.projdim().max(upper as usize)).all(|j| {
        let b = table.get(j);
        betti_cm(c as u64, p, j as u64) <= b && b <= betti_cm(upper, p, j as u64)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AraWitness {
    pub pair: (Monomial, Monomial),
    pub witness_class: usize,
    pub witness_monomial: Monomial,
}

impl Serialize for AraWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AraWitness", 3)?;
        s.serialize_field("pair", &[&self.pair.0, &self.pair.1])?;
        s.serialize_field("witness_class", &self.witness_class)?;
        s.serialize_field("witness_monomial", &self.witness_monomial)?;
        s.end()
    }
}

/// Evidence that `δ` polynomials generate `I` up to radical: the classes
/// `K_j` of diagonal-`j` monomials, and for each pair in a class a divisor
/// of the product from an earlier class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AraCertificate {
    pub classes: Vec<Vec<Monomial>>,
    pub witnesses: Vec<AraWitness>,
}

impl AraCertificate {
    pub fn ara(&self) -> usize {
        self.classes.len()
    }

    /// `F_j = Σ_{M ∈ K_j} M`, written out.
    pub fn sums(&self) -> Vec<String> {
        self.classes
            .iter()
            .map(|k| k.iter().map(Monomial::to_string).collect::<Vec<_>>().join(" + "))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("no witness for the pair {first}, {second}: {reason}")]
pub struct CertificateFailure {
    pub first: Cell,
    pub second: Cell,
    pub reason: String,
}

/// Lowers `m` at the first position where it differs from `other`, if `m`
/// is the larger there; the result divides `m·other` and lies on an earlier
/// diagonal.
fn witness_cell(a: &Cell, b: &Cell) -> Cell {
    let i0 = a
        .coords()
        .iter()
        .zip(b.coords())
        .position(|(x, y)| x != y)
        .expect("distinct boxes differ somewhere");
    let (hi, lo) = if a.coords()[i0] > b.coords()[i0] { (a, b) } else { (b, a) };
    let mut coords = hi.coords().to_vec();
    coords[i0] = lo.coords()[i0];
    Cell::new(coords)
}

pub fn ara_certificate(phi: &PFerrerPartition) -> Result<AraCertificate, CertificateFailure> {
    let cells = phi.cells();
    let delta = phi.diagonal_profile().delta;
    let mut classes: Vec<Vec<Cell>> = vec![Vec::new(); delta];
    for cell in &cells {
        classes[cell.diagonal() - 1].push(cell.clone());
    }
    let pairs: Vec<(&Cell, &Cell)> = classes
        .iter()
        .flat_map(|k| {
            k.iter()
                .enumerate()
                .flat_map(move |(i, a)| k[i + 1..].iter().map(move |b| (a, b)))
        })
        .collect();
    let witnesses = map_pairs(&pairs, |&(a, b)| certify_pair(&cells, a, b))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AraCertificate {
        classes: classes
            .iter()
            .map(|k| k.iter().map(Monomial::of_cell).collect())
            .collect(),
        witnesses,
    })
}

fn certify_pair(cells: &BTreeSet<Cell>, a: &Cell, b: &Cell) -> Result<AraWitness, CertificateFailure> {
    let fail = |reason: &str| CertificateFailure {
        first: a.clone(),
        second: b.clone(),
        reason: reason.to_string(),
    };
    let n = witness_cell(a, b);
    if !cells.contains(&n) {
        return Err(fail("constructed box lies outside the diagram"));
    }
    if n.diagonal() >= a.diagonal() {
        return Err(fail("constructed box is not on an earlier diagonal"));
    }
    let (ma, mb, mn) = (Monomial::of_cell(a), Monomial::of_cell(b), Monomial::of_cell(&n));
    if !mn.divides(&ma.mul(&mb)) {
        return Err(fail("constructed monomial does not divide the product"));
    }
    Ok(AraWitness {
        pair: (ma, mb),
        witness_class: n.diagonal(),
        witness_monomial: mn,
    })
}

#[cfg(feature = "parallel")]
fn map_pairs<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_pairs<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Multiplies every shift by `α`; Betti numbers are unchanged.
pub fn scaled_resolution_type(degrees: &[u64], betti: &[u64], alpha: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(
        degrees.windows(2).all(|w| w[0] < w[1]),
        "resolution type must be strictly increasing"
    );
    (degrees.iter().map(|a| a * alpha).collect(), betti.to_vec())
}

/// Type and Betti numbers of the dual of the full diagram: the pure
/// resolution `(0, c, c+1, …, c+p−1)` with `β_j = β_j(p, c)`.
pub fn cm_dual_pure_type(c: u64, p: u64) -> (Vec<u64>, Vec<u64>) {
    let degrees = std::iter::once(0).chain(c..c + p).collect();
    let betti = (0..=p).map(|j| betti_cm(p, c, j)).collect();
    (degrees, betti)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum PureCodim2 {
    Feasible {
        beta1: u64,
        beta2: u64,
        /// `(c, α)` with `a1 = cα`, `a2 = (c+1)α`, when it exists.
        factorization: Option<(u64, u64)>,
    },
    Infeasible,
}

/// Betti numbers of a pure resolution of type `(0, a1, a2)` with rank `β0`
/// on the left: `β1 = a2·β0/(a2−a1)`, `β2 = a1·β0/(a2−a1)`.
pub fn pure_codim2_betti(a1: u64, a2: u64, beta0: u64) -> PureCodim2 {
    assert!(0 < a1 && a1 < a2, "need 0 < a1 < a2");
    let gap = a2 - a1;
    if !(a2 * beta0).is_multiple_of(gap) || !(a1 * beta0).is_multiple_of(gap) {
        return PureCodim2::Infeasible;
    }
    PureCodim2::Feasible {
        beta1: a2 * beta0 / gap,
        beta2: a1 * beta0 / gap,
        factorization: a1.is_multiple_of(gap).then_some((a1 / gap, gap)),
    }
}
