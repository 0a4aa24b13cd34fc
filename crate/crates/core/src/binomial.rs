//! Exact binomial coefficients.

use num_bigint::BigInt;

/// `C(n, k)`, zero when `k > n`.
///
/// Panics if the result does not fit in a `u64`; every caller works at
/// desk scale where that cannot happen.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc
            .checked_mul(u128::from(n - i))
            .expect("binomial coefficient overflow")
            / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflow")
}

/// `C(n, k)` over signed arguments: zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial_i(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

/// Arbitrary-precision `C(n, k)`.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
