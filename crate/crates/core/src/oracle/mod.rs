//! Brute-force cross-checks that share no code with the closed forms.
//!
//! Graded Betti numbers come from the upper Koszul complexes of the lcm
//! lattice: for a multidegree `σ`,
//! `β_{i,σ}(I) = dim H̃_{i−1}({F ⊆ supp σ : x^{σ−F} ∈ I})`.
//! Hilbert functions are plain counts of standard monomials.

mod hilbert;
mod homology;

use std::collections::{BTreeMap, HashSet};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ideal::{Monomial, MonomialIdeal, Variable};
use crate::limits::Limits;
use crate::series::IntPolynomial;

pub use hilbert::{hilbert_function_truncated, hilbert_function_truncated_with};
pub use homology::{Field, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: {count} exceeds the oracle limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        count: usize,
        limit: usize,
    },
}

/// `β_{j,a}(S/I)` by homological index and internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedBettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl GradedBettiTable {
    pub fn get(&self, j: usize, degree: u32) -> u64 {
        self.entries.get(&(j, degree)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((j, a), β_{j,a})` in order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(j, _)| j).max().unwrap_or(0)
    }

    /// `(β_1, …, β_projdim)` summed over degrees.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.projdim()];
        for (&(j, _), &b) in &self.entries {
            if j > 0 {
                out[j - 1] += b;
            }
        }
        out
    }

    /// Every entry with `j ≥ 1` sits in degree `j + p − 1`.
    pub fn is_linear(&self, p: u32) -> bool {
        self.entries
            .keys()
            .all(|&(j, a)| j == 0 || a == j as u32 + p - 1)
    }

    /// `Σ_{j,a} (−1)^j β_{j,a} t^a`, the Hilbert numerator over `(1 − t)^n`.
    pub fn alternating_sum(&self) -> IntPolynomial {
        use num_bigint::BigInt;
        let top = self.entries.keys().map(|&(_, a)| a as usize).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::from(0); top + 1];
        for (&(j, a), &b) in &self.entries {
            let b = BigInt::from(b);
            if j % 2 == 0 {
                coeffs[a as usize] += b;
            } else {
                coeffs[a as usize] -= b;
            }
        }
        IntPolynomial::from_big(coeffs)
    }

    fn add(&mut self, j: usize, degree: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((j, degree)).or_insert(0) += value;
        }
    }
}

impl Serialize for GradedBettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            j: usize,
            degree: u32,
            value: u64,
        }
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (&(j, degree), &value) in &self.entries {
            seq.serialize_element(&Entry { j, degree, value })?;
        }
        seq.end()
    }
}

/// Knobs for [`graded_betti_brute_with`].
#[derive(Clone, Debug, Default)]
pub struct OracleOptions {
    pub limits: Limits,
    pub field: Field,
    /// Shuffles the order cells are visited during reduction.
    pub seed: Option<u64>,
}

pub fn graded_betti_brute(ideal: &MonomialIdeal) -> Result<GradedBettiTable, OracleError> {
    graded_betti_brute_with(ideal, &OracleOptions::default())
}

/// Graded Betti numbers of `S/I` from upper Koszul homology over the lcm
/// lattice of the generators.
pub fn graded_betti_brute_with(
    ideal: &MonomialIdeal,
    options: &OracleOptions,
) -> Result<GradedBettiTable, OracleError> {
    let limits = &options.limits;
    check_limit("ambient variables", ideal.ambient().len(), limits.max_oracle_variables)?;
    check_limit("generators", ideal.num_generators(), limits.max_oracle_generators)?;
    let vars: Vec<Variable> = ideal.ambient().iter().copied().collect();
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| vars.iter().map(|v| g.exponent(v)).collect())
        .collect();

    let lattice = lcm_lattice(&gens);
    let per_degree = map_degrees(&lattice, |sigma| {
        let (k, alive) = upper_koszul_faces(&gens, sigma);
        let homology = homology::reduced_homology_of(k, alive, options.field, options.seed);
        (sigma.iter().sum::<u32>(), homology)
    });

    let mut table = GradedBettiTable::default();
    table.add(0, 0, 1);
    for (degree, homology) in per_degree {
        // dim H̃_{i−1} sits at index i and counts β_{i,σ}(I) = β_{i+1,σ}(S/I)
        for (i, &h) in homology.iter().enumerate() {
            table.add(i + 1, degree, h);
        }
    }
    Ok(table)
}

fn check_limit(what: &'static str, count: usize, limit: usize) -> Result<(), OracleError> {
    if count > limit {
        Err(OracleError::SizeLimitExceeded { what, count, limit })
    } else {
        Ok(())
    }
}

/// All lcms of nonempty generator subsets, sorted.
fn lcm_lattice(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut members: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        let mut fresh = Vec::new();
        for m in members.iter().chain(std::iter::once(g)) {
            let l: Vec<u32> = m.iter().zip(g).map(|(a, b)| *a.max(b)).collect();
            if !seen.contains(&l) {
                seen.insert(l.clone());
                fresh.push(l);
            }
        }
        members.extend(fresh);
    }
    members.sort();
    members
}

/// The upper Koszul complex at `σ` over the vertex set `supp σ`.
///
/// A generator `g | σ` allows exactly the faces avoiding the variables where
/// `g` and `σ` agree, so the facets are those complements.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, sigma: &Monomial) -> SimplicialComplex {
    let vars: Vec<Variable> = ideal.ambient().iter().chain(sigma.support()).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| vars.iter().map(|v| g.exponent(v)).collect())
        .collect();
    let sigma: Vec<u32> = vars.iter().map(|v| sigma.exponent(v)).collect();
    let support: Vec<usize> = (0..sigma.len()).filter(|&i| sigma[i] > 0).collect();
    let facets = gens
        .iter()
        .filter_map(|g| koszul_facet(g, &sigma, &support))
        .collect();
    SimplicialComplex::new(support.len(), facets)
}

fn koszul_facet(g: &[u32], sigma: &[u32], support: &[usize]) -> Option<u32> {
    if g.iter().zip(sigma).any(|(a, s)| a > s) {
        return None;
    }
    Some(
        support
            .iter()
            .enumerate()
            .filter(|&(_, &v)| g[v] < sigma[v])
            .fold(0u32, |mask, (bit, _)| mask | 1 << bit),
    )
}

fn upper_koszul_faces(gens: &[Vec<u32>], sigma: &[u32]) -> (usize, Vec<bool>) {
    let support: Vec<usize> = (0..sigma.len()).filter(|&i| sigma[i] > 0).collect();
    let facets = gens
        .iter()
        .filter_map(|g| koszul_facet(g, sigma, &support))
        .collect();
    let complex = SimplicialComplex::new(support.len(), facets);
    (support.len(), complex.face_indicator())
}

#[cfg(feature = "parallel")]
fn map_degrees<R: Send>(lattice: &[Vec<u32>], f: impl Fn(&[u32]) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    lattice.par_iter().map(|s| f(s)).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_degrees<R>(lattice: &[Vec<u32>], f: impl Fn(&[u32]) -> R) -> Vec<R> {
    lattice.iter().map(|s| f(s)).collect()
}

/// `I ∩ J`, generated by the pairwise lcms.
pub fn intersect_monomial(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    let gens = i
        .generators()
        .iter()
        .flat_map(|g| j.generators().iter().map(move |h| g.lcm(h)));
    MonomialIdeal::with_ambient(gens, i.ambient().union(j.ambient()).copied())
}
