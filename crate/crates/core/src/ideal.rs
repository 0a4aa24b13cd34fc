//! Monomial ideals over grouped variables `x{group}_{index}`.
//!
//! The ideal of a p-Ferrer diagram uses one variable group per coordinate: the
//! box `(α_1, …, α_p)` becomes the squarefree generator
//! `xp_{α_p} · … · x1_{α_1}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{Cell, PFerrerPartition};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal is not squarefree: {0}")]
    NotSquarefree(String),
    #[error("the intersection decomposition needs depth at least 2")]
    DepthOne,
    #[error("{count} variables exceed the limit {limit}")]
    TooManyVariables { count: usize, limit: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// The variable `x{group}_{index}`.
///
/// Ordered by group descending, then index ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub group: u32,
    pub index: u32,
}

impl Variable {
    pub const fn new(group: u32, index: u32) -> Variable {
        Variable { group, index }
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .group
            .cmp(&self.group)
            .then(self.index.cmp(&other.index))
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.group, self.index)
    }
}

impl FromStr for Variable {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || IdealError::Parse(s.to_string());
        let rest = s.trim().strip_prefix('x').ok_or_else(bad)?;
        let (group, index) = rest.split_once('_').ok_or_else(bad)?;
        let group: u32 = group.parse().map_err(|_| bad())?;
        let index: u32 = index.parse().map_err(|_| bad())?;
        if group == 0 || index == 0 {
            return Err(bad());
        }
        Ok(Variable { group, index })
    }
}

impl Serialize for Variable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Variable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A monomial with positive exponents; the empty product is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: BTreeMap<Variable, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial::from_exponents([(v, 1)])
    }

    /// Zero exponents are dropped; repeated variables accumulate.
    pub fn from_exponents<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Monomial {
        let mut exponents = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    /// Squarefree product of the given variables.
    pub fn product<'a, I: IntoIterator<Item = &'a Variable>>(vars: I) -> Monomial {
        Monomial::from_exponents(vars.into_iter().map(|&v| (v, 1)))
    }

    /// The generator of a diagram box: `x1_{α_1} · … · xp_{α_p}`.
    pub fn of_cell(cell: &Cell) -> Monomial {
        Monomial::from_exponents(
            cell.coords()
                .iter()
                .enumerate()
                .map(|(k, &a)| (Variable::new(k as u32 + 1, a), 1)),
        )
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Variable, &u32)> {
        self.exponents.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Variable> {
        self.exponents.keys()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, &e)| other.exponent(v) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exponents
                .iter()
                .chain(other.exponents.iter())
                .map(|(&v, &e)| (v, e)),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            let slot = exponents.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exponents }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exponents
                .iter()
                .map(|(&v, &e)| (v, e.min(other.exponent(&v)))),
        )
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exponents
                .iter()
                .map(|(&v, &e)| (v, e.saturating_sub(other.exponent(&v)))),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.iter().cmp(other.exponents.iter())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, &e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.trim().parse().map_err(|_| IdealError::Parse(s.into()))?),
                None => (factor, 1),
            };
            pairs.push((var.parse::<Variable>()?, exp));
        }
        Ok(Monomial::from_exponents(pairs))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A monomial ideal given by its minimal generators, inside a polynomial
/// ring on `ambient` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    generators: BTreeSet<Monomial>,
    ambient: BTreeSet<Variable>,
}

fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> BTreeSet<Monomial> {
    let mut sorted: Vec<Monomial> = gens.into_iter().collect();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    kept.into_iter().collect()
}

impl MonomialIdeal {
    /// The ideal generated by `gens` in the ring on their support.
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> MonomialIdeal {
        let generators = minimalize(gens);
        let ambient = generators.iter().flat_map(|g| g.support().copied()).collect();
        MonomialIdeal {
            generators,
            ambient,
        }
    }

    /// Like [`MonomialIdeal::new`] with extra ambient variables.
    pub fn with_ambient<I, V>(gens: I, ambient: V) -> MonomialIdeal
    where
        I: IntoIterator<Item = Monomial>,
        V: IntoIterator<Item = Variable>,
    {
        let mut ideal = MonomialIdeal::new(gens);
        ideal.ambient.extend(ambient);
        ideal
    }

    pub fn generators(&self) -> &BTreeSet<Monomial> {
        &self.generators
    }

    pub fn ambient(&self) -> &BTreeSet<Variable> {
        &self.ambient
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().map(Monomial::degree).min()
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::with_ambient(
            self.generators.iter().chain(&other.generators).cloned(),
            self.ambient.iter().chain(&other.ambient).copied(),
        )
    }

    /// Generator strings in canonical order.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }

    fn require_squarefree(&self) -> Result<(), IdealError> {
        match self.generators.iter().find(|g| !g.is_squarefree()) {
            Some(g) => Err(IdealError::NotSquarefree(g.to_string())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let gens = Vec::<Monomial>::deserialize(deserializer)?;
        Ok(MonomialIdeal::new(gens))
    }
}

/// A prime generated by variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeComponent {
    pub variables: BTreeSet<Variable>,
}

impl PrimeComponent {
    pub fn new<I: IntoIterator<Item = Variable>>(vars: I) -> PrimeComponent {
        PrimeComponent {
            variables: vars.into_iter().collect(),
        }
    }

    pub fn height(&self) -> usize {
        self.variables.len()
    }

    /// The squarefree product of the variables.
    pub fn monomial(&self) -> Monomial {
        Monomial::product(&self.variables)
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.variables.iter().map(|&v| Monomial::var(v)))
    }
}

impl fmt::Display for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.variables.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// One component `(linear, tail)` of the run decomposition: the ideal
/// generated by the `linear` variables together with the `tail` ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionComponent {
    pub linear: BTreeSet<Variable>,
    pub tail: MonomialIdeal,
}

impl DecompositionComponent {
    pub fn ideal(&self) -> MonomialIdeal {
        let linear = MonomialIdeal::new(self.linear.iter().map(|&v| Monomial::var(v)));
        linear.sum(&self.tail)
    }
}

/// The ideal of a diagram: one generator per box.
pub fn ferrer_ideal(phi: &PFerrerPartition) -> MonomialIdeal {
    MonomialIdeal::new(phi.cells().iter().map(Monomial::of_cell))
}

/// Splits the rows `λ_1 ≥ … ≥ λ_m` into maximal runs of equal rows and
/// returns the components whose intersection is the diagram's ideal.
///
/// With runs `R_1, …, R_r` (row variables `V_k` and common row `μ_k`), the
/// components are `(V_1 ∪ … ∪ V_r)` followed by `(V_1 ∪ … ∪ V_{k−1}, I_{μ_k})`
/// for `k = 1, …, r`.
pub fn intersection_decomposition(
    phi: &PFerrerPartition,
) -> Result<Vec<DecompositionComponent>, IdealError> {
    let rows = phi.rows().ok_or(IdealError::DepthOne)?;
    let p = phi.depth() as u32;
    let mut runs: Vec<(Vec<u32>, &PFerrerPartition)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        match runs.last_mut() {
            Some((members, mu)) if *mu == row => members.push(i as u32 + 1),
            _ => runs.push((vec![i as u32 + 1], row)),
        }
    }
    let all_rows: BTreeSet<Variable> = (1..=rows.len() as u32).map(|i| Variable::new(p, i)).collect();
    let mut components = vec![DecompositionComponent {
        linear: all_rows,
        tail: MonomialIdeal::default(),
    }];
    let mut earlier = BTreeSet::new();
    for (members, mu) in &runs {
        components.push(DecompositionComponent {
            linear: earlier.clone(),
            tail: ferrer_ideal(mu),
        });
        earlier.extend(members.iter().map(|&i| Variable::new(p, i)));
    }
    Ok(components)
}

/// Dense bitmask indexing of an ordered variable set.
pub(crate) struct VarIndex {
    vars: Vec<Variable>,
}

impl VarIndex {
    pub(crate) fn new(vars: &BTreeSet<Variable>) -> VarIndex {
        VarIndex {
            vars: vars.iter().copied().collect(),
        }
    }

    pub(crate) fn mask(&self, m: &Monomial) -> u128 {
        m.support().fold(0u128, |acc, v| {
            let i = self.vars.binary_search(v).expect("variable outside the ambient set");
            acc | (1u128 << i)
        })
    }

    pub(crate) fn variables(&self, mask: u128) -> impl Iterator<Item = Variable> + '_ {
        self.vars
            .iter()
            .enumerate()
            .filter(move |(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
    }
}

/// Minimal primes of a squarefree ideal under the default [`Limits`].
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeComponent>, IdealError> {
    minimal_primes_with(ideal, &Limits::default())
}

/// Minimal primes of a squarefree ideal: the inclusion-minimal variable sets
/// meeting the support of every generator.
///
/// The zero ideal yields the single empty component; the unit ideal yields
/// none.
pub fn minimal_primes_with(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<BTreeSet<PrimeComponent>, IdealError> {
    ideal.require_squarefree()?;
    let count = ideal.ambient.len();
    if count > limits.max_prime_variables.min(128) {
        return Err(IdealError::TooManyVariables {
            count,
            limit: limits.max_prime_variables.min(128),
        });
    }
    let index = VarIndex::new(&ideal.ambient);
    let mut edges: Vec<u128> = ideal.generators.iter().map(|g| index.mask(g)).collect();
    edges.sort_by_key(|e| e.count_ones());
    let covers = minimal_transversals(&edges);
    Ok(covers
        .into_iter()
        .map(|mask| PrimeComponent::new(index.variables(mask)))
        .collect())
}

/// Minimal transversals of a family of sets, built one edge at a time.
fn minimal_transversals(edges: &[u128]) -> Vec<u128> {
    let mut covers: Vec<u128> = vec![0];
    for &edge in edges {
        if covers.iter().all(|&t| t & edge != 0) {
            continue;
        }
        let (mut keep, miss): (Vec<u128>, Vec<u128>) =
            covers.into_iter().partition(|&t| t & edge != 0);
        let mut fresh: Vec<u128> = Vec::new();
        for t in miss {
            let mut bits = edge;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                bits ^= b;
                fresh.push(t | b);
            }
        }
        fresh.sort_by_key(|t| t.count_ones());
        fresh.dedup();
        // Covers that already met the edge are minimal among themselves; a
        // fresh set survives only if nothing smaller is contained in it.
        for t in fresh {
            if !keep.iter().any(|&k| k & !t == 0) {
                keep.push(t);
            }
        }
        covers = keep;
    }
    covers
}

/// `I : m`, generated by `g / gcd(g, m)`.
pub fn colon_by_monomial(ideal: &MonomialIdeal, m: &Monomial) -> MonomialIdeal {
    MonomialIdeal::with_ambient(
        ideal.generators.iter().map(|g| g.strip(m)),
        ideal.ambient.iter().copied(),
    )
}

/// The Alexander dual of a squarefree ideal, in the same ambient ring.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
    alexander_dual_with(ideal, &Limits::default())
}

pub fn alexander_dual_with(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<MonomialIdeal, IdealError> {
    let primes = minimal_primes_with(ideal, limits)?;
    Ok(MonomialIdeal::with_ambient(
        primes.iter().map(PrimeComponent::monomial),
        ideal.ambient.iter().copied(),
    ))
}
