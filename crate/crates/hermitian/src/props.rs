//! Scalar-level property tests: formal reality on sampled tuples and the
//! Pythagorean property decided pair by pair.

use crate::scalar::Scalar;
use num::BigRational;
use num::Zero;

#[derive(Clone, Debug)]
pub struct ScalarPropertyReport {
    pub scalar: &'static str,
    /// Every sampled tuple satisfied Σ αᵢαᵢ* = 0 ⟹ all αᵢ = 0.
    pub formally_real_on_samples: bool,
    /// Per sampled pair (α, β): whether some γ with αα* + ββ* = γγ* exists.
    pub pythagorean_pairs: Vec<(String, String, bool)>,
    pub pythagorean_on_samples: bool,
}

pub fn scalar_property_tests<K: Scalar>(
    tuples: &[Vec<K>],
    pairs: &[(K, K)],
) -> ScalarPropertyReport {
    let mut formally_real = true;
    for tuple in tuples {
        let total: BigRational = tuple
            .iter()
            .map(|a| a.norm())
            .fold(<BigRational as Zero>::zero(), |acc, n| acc + n);
        if Zero::is_zero(&total) && tuple.iter().any(|a| !a.is_zero()) {
            formally_real = false;
        }
    }
    let mut pyth_pairs = Vec::new();
    let mut pyth_all = true;
    for (a, b) in pairs {
        let sum = a.norm() + b.norm();
        let has_root = K::is_norm_value(&sum);
        pyth_all &= has_root;
        pyth_pairs.push((a.to_string(), b.to_string(), has_root));
    }
    ScalarPropertyReport {
        scalar: K::NAME,
        formally_real_on_samples: formally_real,
        pythagorean_pairs: pyth_pairs,
        pythagorean_on_samples: pyth_all,
    }
}
