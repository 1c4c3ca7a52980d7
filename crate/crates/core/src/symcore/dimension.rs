use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Partition;

/// Dimension of the irreducible GL(n)-representation `S_lambda(C^n)`,
/// by the hook-content formula in exact arithmetic. Zero when `lambda`
/// has more than `n` parts.
pub fn schur_dimension(lam: &Partition, n: usize) -> BigInt {
    if lam.len() > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let conj = lam.conjugate();
    for i in 0..lam.len() {
        for j in 0..lam.part(i) as usize {
            // content n + j - i, hook length
            let content = n as i64 + j as i64 - i as i64;
            let hook = (lam.part(i) as i64 - j as i64) + (conj.part(j) as i64 - i as i64) - 1;
            num *= BigInt::from(content);
            den *= BigInt::from(hook);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "hook-content division must be exact");
    q
}

/// Weyl dimension formula for a weakly decreasing integer weight of length
/// `n` (entries may be negative): `prod_{i<j} (w_i - w_j + j - i) / (j - i)`.
pub fn weyl_dimension(weight: &[i64]) -> BigInt {
    let n = weight.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= BigInt::from(weight[i] - weight[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "Weyl dimension division must be exact");
    q
}
