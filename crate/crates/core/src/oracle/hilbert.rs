use crate::binomial::binomial;
use crate::ideal::{MonomialIdeal, Variable};
use crate::limits::Limits;

use super::OracleError;

pub fn hilbert_function_truncated(ideal: &MonomialIdeal, max_degree: usize) -> Result<Vec<u64>, OracleError> {
    hilbert_function_truncated_with(ideal, max_degree, &Limits::default())
}

/// Number of monomials of each degree `0..=max_degree` in the ambient
/// variables that no generator divides.
///
/// Exponents are fixed one variable at a time. A branch dies as soon as some
/// generator's whole support is fixed and it divides; once no generator can
/// divide any more, the remaining variables are free and the rest of the
/// count is a binomial coefficient.
pub fn hilbert_function_truncated_with(
    ideal: &MonomialIdeal,
    max_degree: usize,
    limits: &Limits,
) -> Result<Vec<u64>, OracleError> {
    if max_degree > limits.max_truncation_degree {
        return Err(OracleError::SizeLimitExceeded {
            what: "truncation degree",
            count: max_degree,
            limit: limits.max_truncation_degree,
        });
    }
    let vars: Vec<Variable> = ideal.ambient().iter().copied().collect();
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| vars.iter().map(|v| g.exponent(v)).collect())
        .collect();
    let mut counts = vec![0u64; max_degree + 1];
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(counts);
    }
    let last: Vec<usize> = gens
        .iter()
        .map(|g| g.iter().rposition(|&e| e > 0).expect("nonconstant generator"))
        .collect();
    let alive: Vec<usize> = (0..gens.len()).collect();
    let mut walker = Walker { gens: &gens, last: &last, nvars: vars.len(), counts: &mut counts };
    walker.walk(0, 0, &alive);
    Ok(counts)
}

struct Walker<'a> {
    gens: &'a [Vec<u32>],
    /// Index of the last variable in each generator's support.
    last: &'a [usize],
    nvars: usize,
    counts: &'a mut [u64],
}

impl Walker<'_> {
    fn walk(&mut self, var: usize, degree: usize, alive: &[usize]) {
        let max_degree = self.counts.len() - 1;
        if alive.is_empty() {
            let free = (self.nvars - var) as u64;
            for extra in 0..=max_degree - degree {
                self.counts[degree + extra] += if free == 0 {
                    u64::from(extra == 0)
                } else {
                    binomial(free + extra as u64 - 1, extra as u64)
                };
            }
            return;
        }
        for e in 0..=(max_degree - degree) as u32 {
            let still: Vec<usize> = alive.iter().copied().filter(|&g| self.gens[g][var] <= e).collect();
            if still.iter().any(|&g| self.last[g] == var) {
                // that generator divides everything below; larger e too
                break;
            }
            self.walk(var + 1, degree + e as usize, &still);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PFerrerPartition;
    use crate::ideal::{ferrer_ideal, Monomial};
    use serde_json::json;

    #[test]
    fn zero_ideal_counts_all_monomials() {
        let zero = MonomialIdeal::with_ambient(Vec::<Monomial>::new(), [Variable::new(1, 1), Variable::new(1, 2)]);
        assert_eq!(hilbert_function_truncated(&zero, 3).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn ferrer_examples() {
        let i = ferrer_ideal(&PFerrerPartition::from_json(&json!([2, 2])).unwrap());
        assert_eq!(hilbert_function_truncated(&i, 2).unwrap(), vec![1, 4, 6]);
        // quotient by (x², y³) in two variables: 1, 2, 2, 1, 0 …
        let ci: MonomialIdeal = serde_json::from_str(r#"["x1_1^2","x1_2^3"]"#).unwrap();
        assert_eq!(hilbert_function_truncated(&ci, 5).unwrap(), vec![1, 2, 2, 1, 0, 0]);
    }

    #[test]
    fn degree_limit() {
        let i = ferrer_ideal(&PFerrerPartition::leaf(2));
        assert!(matches!(
            hilbert_function_truncated(&i, 21),
            Err(OracleError::SizeLimitExceeded { what: "truncation degree", .. })
        ));
    }
}
