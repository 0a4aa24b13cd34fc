//! Exact Hilbert-series arithmetic.
//!
//! Series are rational functions `N(t) / (1 − t)^d` with integer numerators,
//! kept in canonical form: every factor `(1 − t)` shared by numerator and
//! denominator is divided out, so equal series compare equal no matter which
//! denominator they were written over.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::binomial::binomial_big;
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("{generators} generators exceed both Hilbert-series strategies")]
    TooManyGenerators { generators: usize },
    #[error("series is not of the p-linear shape: {0}")]
    NotPLinearShape(String),
}

/// Polynomial in `t` with exact integer coefficients; `coeffs[i]` multiplies
/// `t^i` and trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPolynomial {
        IntPolynomial::from_big(vec![c])
    }

    pub fn from_big(coeffs: Vec<BigInt>) -> IntPolynomial {
        let mut poly = IntPolynomial { coeffs };
        poly.trim();
        poly
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> IntPolynomial {
        IntPolynomial::from_big(coeffs.into_iter().map(BigInt::from).collect())
    }

    /// `c · t^k`.
    pub fn term(c: BigInt, k: usize) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial::from_big(coeffs)
    }

    /// `(1 − t)^k`.
    pub fn one_minus_t_pow(k: usize) -> IntPolynomial {
        IntPolynomial::from_big(
            (0..=k)
                .map(|i| {
                    let c = binomial_big(k as u64, i as u64);
                    if i % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as `i64`, `None` if one does not fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::from_big(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `P(t) mod t^k`.
    pub fn truncate(&self, k: usize) -> IntPolynomial {
        IntPolynomial::from_big(self.coeffs.iter().take(k).cloned().collect())
    }

    /// `P(t) / t^k` when exact.
    pub fn div_t_pow(&self, k: usize) -> Option<IntPolynomial> {
        if self.coeffs.iter().take(k).all(Zero::is_zero) {
            Some(IntPolynomial::from_big(
                self.coeffs.iter().skip(k).cloned().collect(),
            ))
        } else {
            None
        }
    }

    /// `P(1 − t)`, by Horner's rule in the substituted variable.
    pub fn compose_one_minus_t(&self) -> IntPolynomial {
        let u = IntPolynomial::from_coeffs([1, -1]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, c| {
                &(&acc * &u) + &IntPolynomial::constant(c.clone())
            })
    }

    /// `P(t) / (1 − t)` when exact.
    pub fn div_one_minus_t(&self) -> Option<IntPolynomial> {
        if !self.at_one().is_zero() {
            return None;
        }
        // P = (1 − t)Q gives q_i = p_0 + … + p_i
        let mut running = BigInt::zero();
        let mut quotient = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().take(self.coeffs.len().saturating_sub(1)) {
            running += c;
            quotient.push(running.clone());
        }
        Some(IntPolynomial::from_big(quotient))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_big((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_big((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_big(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_big(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|d| DIGITS[d.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if c.is_negative() {
                write!(f, "−")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if i == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t{}", superscript(i))?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        coeffs.serialize(serializer)
    }
}

/// `numerator / (1 − t)^denom_exponent` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    denom_exponent: usize,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denom_exponent: usize) -> RationalSeries {
        let mut numerator = numerator;
        let mut d = denom_exponent;
        if numerator.is_zero() {
            d = 0;
        }
        while d > 0 {
            match numerator.div_one_minus_t() {
                Some(q) => {
                    numerator = q;
                    d -= 1;
                }
                None => break,
            }
        }
        RationalSeries {
            numerator,
            denom_exponent: d,
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denom_exponent(&self) -> usize {
        self.denom_exponent
    }

    /// The numerator over `(1 − t)^e`; `None` if `e` is below the canonical
    /// exponent.
    pub fn numerator_at(&self, e: usize) -> Option<IntPolynomial> {
        let extra = e.checked_sub(self.denom_exponent)?;
        Some(&self.numerator * &IntPolynomial::one_minus_t_pow(extra))
    }

    /// Taylor coefficients of degrees `0..=degree`.
    pub fn taylor(&self, degree: usize) -> Vec<BigInt> {
        let mut coeffs: Vec<BigInt> = (0..=degree).map(|i| self.numerator.coeff(i)).collect();
        // each factor 1/(1 − t) is a prefix sum
        for _ in 0..self.denom_exponent {
            for i in 1..coeffs.len() {
                let prev = coeffs[i - 1].clone();
                coeffs[i] += prev;
            }
        }
        coeffs
    }
}

fn write_fraction(f: &mut impl fmt::Write, numerator: &IntPolynomial, e: usize) -> fmt::Result {
    match e {
        0 => write!(f, "{numerator}"),
        1 => write!(f, "({numerator})/(1−t)"),
        e => write!(f, "({numerator})/(1−t){}", superscript(e)),
    }
}

impl RationalSeries {
    /// The same series written over `(1 − t)^e`, e.g. the uncancelled form.
    pub fn format_at(&self, e: usize) -> Option<String> {
        let mut out = String::new();
        write_fraction(&mut out, &self.numerator_at(e)?, e).expect("writing to a String");
        Some(out)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_fraction(f, &self.numerator, self.denom_exponent)
    }
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RationalSeries", 2)?;
        s.serialize_field("numerator", &self.numerator)?;
        s.serialize_field("denom_exponent", &self.denom_exponent)?;
        s.end()
    }
}

/// `h(c, p)(t) = Σ_{i<p} C(c + i − 1, i) t^i`.
pub fn h_poly(c: u64, p: u64) -> IntPolynomial {
    assert!(c >= 1 && p >= 1, "h(c, p) needs c, p ≥ 1");
    IntPolynomial::from_big((0..p).map(|i| binomial_big(c + i - 1, i)).collect())
}

/// Checks `1 − h(c,p)(1−t)·t^c = h(p,c)(t)·(1−t)^p` and
/// `h(c,p)(t)·(1−t)^c ≡ 1 mod t^p` by exact expansion.
pub fn duality_identity_check(c: u64, p: u64) -> bool {
    let lhs = &IntPolynomial::one() - &h_poly(c, p).compose_one_minus_t().shift(c as usize);
    let rhs = &h_poly(p, c) * &IntPolynomial::one_minus_t_pow(p as usize);
    let congruence = (&h_poly(c, p) * &IntPolynomial::one_minus_t_pow(c as usize)).truncate(p as usize);
    lhs == rhs && congruence == IntPolynomial::one()
}

/// `Σ_i σ_i u^{i−1}` with `u = (1 − t)`.
fn s_vector_poly(sigma: &[u64]) -> IntPolynomial {
    IntPolynomial::from_big(sigma.iter().map(|&s| BigInt::from(s)).collect())
}

/// The series `[h(c,p) − t^p Σ_i σ_i (1−t)^{i−1}] / (1−t)^d`, where `σ_i`
/// counts the boxes of diagonal `c + i`.
pub fn hilbert_series_linear(c: u64, p: u64, sigma: &[u64], d: usize) -> RationalSeries {
    let correction = s_vector_poly(sigma).compose_one_minus_t().shift(p as usize);
    RationalSeries::new(&h_poly(c, p) - &correction, d)
}

/// Recovers `σ` from a series of the shape produced by
/// [`hilbert_series_linear`].
///
/// The numerator is re-expanded from the canonical exponent upward until it
/// agrees with `h(c,p)` modulo `t^p`; for `p ≥ 2` at most one exponent does.
pub fn extract_s_vector(series: &RationalSeries, c: u64, p: u64) -> Result<Vec<u64>, SeriesError> {
    let h = h_poly(c, p);
    let start = series.denom_exponent();
    let numerator = (start..=start + p as usize + 1)
        .filter_map(|e| series.numerator_at(e))
        .find(|n| (&h - n).truncate(p as usize).is_zero())
        .ok_or_else(|| {
            SeriesError::NotPLinearShape(format!("numerator never agrees with h({c},{p}) below t^{p}"))
        })?;
    let remainder = (&h - &numerator)
        .div_t_pow(p as usize)
        .expect("agreement modulo t^p");
    // Σ σ_i (1−t)^{i−1} = P(t)  ⇔  Σ σ_i u^{i−1} = P(1 − u)
    let in_u = remainder.compose_one_minus_t();
    in_u.coeffs()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.to_u64().ok_or_else(|| {
                SeriesError::NotPLinearShape(format!("coefficient σ_{} = {s} is negative", i + 1))
            })
        })
        .collect()
}

/// The pair of series of `S/I` and of `S/I*` for an ideal of height `c`
/// generated in degree `p` in `n` variables, with s-vector `σ`.
pub fn dual_series(c: u64, p: u64, sigma: &[u64], n: usize) -> (RationalSeries, RationalSeries) {
    let primal = hilbert_series_linear(c, p, sigma, n - c as usize);
    let dual_numerator = &h_poly(p, c) + &s_vector_poly(sigma).shift(c as usize);
    (primal, RationalSeries::new(dual_numerator, n - p as usize))
}

/// `B(t)` with `H = (1 − B(t)) / (1 − t)^n`.
pub fn betti_polynomial(series: &RationalSeries, n: usize) -> Option<IntPolynomial> {
    Some(&IntPolynomial::one() - &series.numerator_at(n)?)
}

/// Checks `B_{S/J}(t) = 1 − B_{S/I}(1 − t)` for a series pair over `n`
/// variables.
pub fn dual_betti_relation_holds(primal: &RationalSeries, dual: &RationalSeries, n: usize) -> bool {
    match (betti_polynomial(primal, n), betti_polynomial(dual, n)) {
        (Some(bi), Some(bj)) => bj == &IntPolynomial::one() - &bi.compose_one_minus_t(),
        _ => false,
    }
}

/// Numerator coefficients of the canonical form.
pub fn h_vector(series: &RationalSeries) -> Vec<BigInt> {
    series.numerator().coeffs().to_vec()
}

pub fn hilbert_series_monomial(ideal: &MonomialIdeal) -> Result<RationalSeries, SeriesError> {
    hilbert_series_monomial_with(ideal, &Limits::default())
}

/// Hilbert series of `S/I` over the ambient variables of `I`.
///
/// Small ideals use inclusion-exclusion over generator subsets; larger ones
/// the splitting recursion `N(I) = N(I + (x)) + t·N(I : x)`.
pub fn hilbert_series_monomial_with(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<RationalSeries, SeriesError> {
    let vars: Vec<_> = ideal.ambient().iter().collect();
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut dense = vec![0u32; vars.len()];
            for (v, &e) in g.exponents() {
                dense[vars.binary_search(&v).expect("ambient variable")] = e;
            }
            dense
        })
        .collect();
    let numerator = if gens.len() <= limits.max_inclusion_exclusion_generators {
        inclusion_exclusion(&gens, vars.len())
    } else {
        let mut budget = limits.max_splitting_nodes;
        splitting_numerator(gens.clone(), &mut budget).ok_or(SeriesError::TooManyGenerators {
            generators: gens.len(),
        })?
    };
    Ok(RationalSeries::new(numerator, vars.len()))
}

fn inclusion_exclusion(gens: &[Vec<u32>], nvars: usize) -> IntPolynomial {
    fn walk(gens: &[Vec<u32>], start: usize, lcm: &mut Vec<u32>, size: usize, acc: &mut Vec<i64>) {
        let degree: u32 = lcm.iter().sum();
        let degree = degree as usize;
        if acc.len() <= degree {
            acc.resize(degree + 1, 0);
        }
        acc[degree] += if size.is_multiple_of(2) { 1 } else { -1 };
        for i in start..gens.len() {
            let saved = lcm.clone();
            for (slot, &e) in lcm.iter_mut().zip(&gens[i]) {
                *slot = (*slot).max(e);
            }
            walk(gens, i + 1, lcm, size + 1, acc);
            *lcm = saved;
        }
    }
    let mut acc = Vec::new();
    walk(gens, 0, &mut vec![0; nvars], 0, &mut acc);
    IntPolynomial::from_coeffs(acc)
}

fn minimal_dense(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept
}

/// Hilbert numerator over `(1 − t)^n`; `None` when the node budget runs out.
fn splitting_numerator(gens: Vec<Vec<u32>>, budget: &mut usize) -> Option<IntPolynomial> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let gens = minimal_dense(gens);
    if gens.is_empty() {
        return Some(IntPolynomial::one());
    }
    let nvars = gens[0].len();
    let mut usage = vec![0usize; nvars];
    for g in &gens {
        for (u, &e) in usage.iter_mut().zip(g) {
            if e > 0 {
                *u += 1;
            }
        }
    }
    let (pivot, &uses) = usage
        .iter()
        .enumerate()
        .max_by_key(|&(i, u)| (*u, std::cmp::Reverse(i)))
        .expect("at least one variable");
    if uses <= 1 {
        // pairwise coprime generators: a complete intersection
        return Some(gens.iter().fold(IntPolynomial::one(), |acc, g| {
            let degree = g.iter().sum::<u32>() as usize;
            &acc * &(&IntPolynomial::one() - &IntPolynomial::term(BigInt::one(), degree))
        }));
    }
    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut var = vec![0u32; nvars];
    var[pivot] = 1;
    plus.push(var);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut q = g.clone();
            q[pivot] = q[pivot].saturating_sub(1);
            q
        })
        .collect();
    let with_var = splitting_numerator(plus, budget)?;
    let quotient = splitting_numerator(colon, budget)?;
    Some(&with_var + &quotient.shift(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PFerrerPartition;
    use crate::ideal::{ferrer_ideal, Monomial};
    use serde_json::json;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ferrer(v: serde_json::Value) -> MonomialIdeal {
        ferrer_ideal(&PFerrerPartition::from_json(&v).unwrap())
    }

    #[test]
    fn h_poly_examples() {
        assert_eq!(h_poly(2, 2), poly(&[1, 2]));
        assert_eq!(h_poly(3, 3), poly(&[1, 3, 6]));
        for c in 1..10 {
            assert_eq!(h_poly(c, 1), IntPolynomial::one());
        }
    }

    #[test]
    fn duality_identity_small() {
        assert!(duality_identity_check(1, 1));
        assert!(duality_identity_check(2, 3));
        // expand (2,3) by hand: 1 − (1 + 2u + 3u²)t², u = 1 − t
        let lhs = poly(&[1, 0, -6, 8, -3]);
        assert_eq!(&h_poly(3, 2) * &IntPolynomial::one_minus_t_pow(3), lhs);
    }

    #[test]
    fn polynomial_ops() {
        let p = poly(&[1, 2, -1]);
        assert_eq!(p.to_string(), "1+2t−t²");
        assert_eq!(p.compose_one_minus_t(), poly(&[2, 0, -1]));
        assert_eq!(poly(&[1, -1]).div_one_minus_t(), Some(IntPolynomial::one()));
        assert_eq!(poly(&[1, 1]).div_one_minus_t(), None);
        assert_eq!(poly(&[0, 0, 3]).div_t_pow(2), Some(poly(&[3])));
        assert_eq!(poly(&[0, 1, 3]).div_t_pow(2), None);
        assert_eq!(IntPolynomial::one_minus_t_pow(3), poly(&[1, -3, 3, -1]));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(1));
    }

    #[test]
    fn canonical_form_and_display() {
        let s = RationalSeries::new(poly(&[1, 2, 3, -6]), 7);
        assert_eq!(s, RationalSeries::new(poly(&[1, 3, 6]), 6));
        assert_eq!(h_vector(&s), big(&[1, 3, 6]));
        assert_eq!(s.to_string(), "(1+3t+6t²)/(1−t)⁶");
        let s = RationalSeries::new(poly(&[1, -1]), 1);
        assert_eq!((s.numerator().clone(), s.denom_exponent()), (IntPolynomial::one(), 0));
        assert_eq!(RationalSeries::new(IntPolynomial::zero(), 4).denom_exponent(), 0);
        let json = serde_json::to_string(&RationalSeries::new(poly(&[1, 2]), 3)).unwrap();
        assert_eq!(json, r#"{"numerator":[1,2],"denom_exponent":3}"#);
        assert_eq!(h_vector(&RationalSeries::new(poly(&[1, 2]), 3)), big(&[1, 2]));
    }

    #[test]
    fn linear_series_examples() {
        assert_eq!(
            hilbert_series_linear(3, 3, &[], 3),
            RationalSeries::new(poly(&[1, 3, 6]), 3)
        );
        assert_eq!(
            hilbert_series_linear(2, 2, &[1], 2),
            RationalSeries::new(poly(&[1, 2, -1]), 2)
        );
        assert_eq!(
            hilbert_series_linear(3, 3, &[9, 2], 9),
            RationalSeries::new(poly(&[1, 3, 6, -11, 2]), 9)
        );
    }

    #[test]
    fn monomial_series_examples() {
        let x = MonomialIdeal::new([Monomial::var(crate::Variable::new(1, 1))]);
        let s = hilbert_series_monomial(&x).unwrap();
        assert_eq!((s.numerator().clone(), s.denom_exponent()), (IntPolynomial::one(), 0));
        assert_eq!(
            hilbert_series_monomial(&ferrer(json!([2, 2]))).unwrap(),
            RationalSeries::new(poly(&[1, 2, -1]), 2)
        );
        assert_eq!(
            hilbert_series_monomial(&ferrer(json!([[4, 3, 2, 2], [3, 2, 1], [2], [2]]))).unwrap(),
            hilbert_series_linear(3, 3, &[9, 2], 9)
        );
    }

    #[test]
    fn both_strategies_agree() {
        let ideal = ferrer(json!([[3, 2, 2], [2, 2], [1]]));
        let ie = hilbert_series_monomial(&ideal).unwrap();
        let limits = Limits {
            max_inclusion_exclusion_generators: 0,
            ..Limits::default()
        };
        assert_eq!(hilbert_series_monomial_with(&ideal, &limits).unwrap(), ie);
        let starved = Limits {
            max_inclusion_exclusion_generators: 0,
            max_splitting_nodes: 3,
            ..Limits::default()
        };
        assert!(matches!(
            hilbert_series_monomial_with(&ideal, &starved),
            Err(SeriesError::TooManyGenerators { generators: 12 })
        ));
        // non-squarefree input goes through the same code
        let powers: MonomialIdeal = serde_json::from_str(r#"["x1_1^2","x1_1*x1_2^3"]"#).unwrap();
        let a = hilbert_series_monomial(&powers).unwrap();
        assert_eq!(hilbert_series_monomial_with(&powers, &limits).unwrap(), a);
        // 1 − t² − t⁴ + t⁵ over (1−t)²
        assert_eq!(a, RationalSeries::new(poly(&[1, 0, -1, 0, -1, 1]), 2));
    }

    #[test]
    fn s_vector_examples() {
        let s = hilbert_series_monomial(&ferrer(json!([2, 2]))).unwrap();
        assert_eq!(extract_s_vector(&s, 2, 2), Ok(vec![1]));
        let full = ferrer_ideal(&PFerrerPartition::full_diagram(3, 3));
        let s = hilbert_series_monomial(&full).unwrap();
        assert_eq!(extract_s_vector(&s, 3, 3), Ok(vec![]));
        let s = hilbert_series_monomial(&ferrer(json!([[4, 3, 2, 2], [3, 2, 1], [2], [2]]))).unwrap();
        assert_eq!(extract_s_vector(&s, 3, 3), Ok(vec![9, 2]));
        // negative coefficient in the (1 − t) basis
        let bad = RationalSeries::new(poly(&[1, 2, 1]), 2);
        assert!(matches!(extract_s_vector(&bad, 2, 2), Err(SeriesError::NotPLinearShape(_))));
    }

    #[test]
    fn dual_series_examples() {
        let (primal, dual) = dual_series(2, 2, &[1], 4);
        assert_eq!(primal, RationalSeries::new(poly(&[1, 2, -1]), 2));
        assert_eq!(dual, RationalSeries::new(poly(&[1, 2, 1]), 2));
        assert!(dual_betti_relation_holds(&primal, &dual, 4));
        let dual_ideal = crate::ideal::alexander_dual(&ferrer(json!([2, 2]))).unwrap();
        assert_eq!(hilbert_series_monomial(&dual_ideal).unwrap(), dual);

        let (_, dual) = dual_series(2, 4, &[3, 4, 1], 13);
        assert_eq!(h_vector(&dual), big(&[1, 4, 3, 4, 1]));

        // Cohen-Macaulay pair: h(p,c) over (1 − t)^{n−p}
        let (primal, dual) = dual_series(3, 2, &[], 7);
        assert_eq!(dual, RationalSeries::new(h_poly(2, 3), 5));
        assert!(dual_betti_relation_holds(&primal, &dual, 7));
    }

    #[test]
    fn taylor_coefficients() {
        let s = RationalSeries::new(IntPolynomial::one(), 2);
        assert_eq!(s.taylor(3), big(&[1, 2, 3, 4]));
        let s = RationalSeries::new(poly(&[1, 2, -1]), 2);
        // ten quadrics in four variables minus the four generators
        assert_eq!(s.taylor(2), big(&[1, 4, 6]));
    }
}
