use serde::{Deserialize, Serialize};

/// Environment variable holding a JSON object that overrides [`Limits`] fields.
pub const LIMITS_ENV: &str = "FERRER_LIMITS";

/// Size limits that keep the exponential routines at desk scale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest accepted depth `p` of an input partition.
    pub max_depth: usize,
    /// Largest accepted number of boxes of an input partition.
    pub max_boxes: usize,
    /// Largest ambient variable count for the minimal-prime search.
    pub max_prime_variables: usize,
    /// Largest ambient variable count for the Betti oracle.
    pub max_oracle_variables: usize,
    /// Largest generator count for the Betti oracle.
    pub max_oracle_generators: usize,
    /// Generator count up to which Hilbert numerators use inclusion-exclusion.
    pub max_inclusion_exclusion_generators: usize,
    /// Node budget of the splitting recursion used beyond that.
    pub max_splitting_nodes: usize,
    /// Largest degree accepted by the truncated Hilbert function.
    pub max_truncation_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_depth: 6,
            max_boxes: 10_000,
            max_prime_variables: 32,
            max_oracle_variables: 16,
            max_oracle_generators: 60,
            max_inclusion_exclusion_generators: 20,
            max_splitting_nodes: 2_000_000,
            max_truncation_degree: 20,
        }
    }
}

impl Limits {
    /// Defaults overridden by whatever fields `FERRER_LIMITS` sets.
    pub fn from_env() -> Result<Limits, serde_json::Error> {
        match std::env::var(LIMITS_ENV) {
            Ok(raw) if !raw.trim().is_empty() => serde_json::from_str(&raw),
            _ => Ok(Limits::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_override_keeps_defaults() {
        let limits: Limits = serde_json::from_str(r#"{"max_depth": 3}"#).unwrap();
        assert_eq!(limits.max_depth, 3);
        assert_eq!(limits.max_boxes, Limits::default().max_boxes);
    }
}
