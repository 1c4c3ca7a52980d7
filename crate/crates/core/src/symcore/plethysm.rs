use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{Partition, SchurVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlethysmError {
    #[error("wedge index {i} exceeds binomial({n}, 3) = {max}")]
    IndexOutOfRange { i: u64, n: usize, max: u64 },
    #[error("state space too large for wedge_plethysm(i = {i}, n = {n}): ~{estimate} weight vectors")]
    TooLarge { i: u64, n: usize, estimate: u128 },
}

/// Decomposition of `wedge^i (wedge^3 C^n)` into Schur functors `S_lambda(C^n)`.
///
/// The character is accumulated as a sum of monomials indexed by i-subsets of
/// the weight multiset of `wedge^3 C^n` (by dynamic programming over the
/// triples), and Schur multiplicities are then read off by the
/// dominance-triangular inversion
/// `mult_lambda = sum_w sign(w) m_{lambda + rho - w(rho)}`.
pub fn wedge_plethysm(i: u64, n: usize) -> Result<SchurVector, PlethysmError> {
    let max = binom3(n);
    if i > max {
        return Err(PlethysmError::IndexOutOfRange { i, n, max });
    }
    if i == 0 {
        return Ok(SchurVector::single(Partition::empty(), 1));
    }

    static CACHE: OnceLock<Mutex<HashMap<(usize, u64), SchurVector>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(n, i)) {
        return Ok(v.clone());
    }

    check_feasible(i, n)?;
    let tally = character_tally(n, i);
    let result = extract_schur(&tally[i as usize], n, 3 * i);
    cache.lock().unwrap().insert((n, i), result.clone());
    Ok(result)
}

fn binom3(n: usize) -> u64 {
    if n < 3 {
        0
    } else {
        (n as u64) * (n as u64 - 1) * (n as u64 - 2) / 6
    }
}

/// Rejects parameter ranges whose weight-vector state space would not fit in
/// memory. The estimate counts compositions of `3j` into `n` parts bounded by
/// the per-coordinate cap `C(n-1, 2)`, summed over `j <= i`.
fn check_feasible(i: u64, n: usize) -> Result<(), PlethysmError> {
    if n > 10 {
        return Err(PlethysmError::TooLarge { i, n, estimate: u128::MAX });
    }
    let cap = if n >= 2 { (n - 1) * (n - 2) / 2 } else { 0 };
    let mut estimate: u128 = 0;
    for j in 0..=i {
        let target = (3 * j) as usize;
        // compositions of `target` into n parts each <= cap
        let mut dp = vec![0u128; target + 1];
        dp[0] = 1;
        for _ in 0..n {
            let mut next = vec![0u128; target + 1];
            for (s, &c) in dp.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for add in 0..=cap.min(target - s) {
                    next[s + add] = next[s + add].saturating_add(c);
                }
            }
            dp = next;
        }
        estimate = estimate.saturating_add(dp[target]);
    }
    if estimate > 20_000_000 {
        return Err(PlethysmError::TooLarge { i, n, estimate });
    }
    Ok(())
}

/// Per-j tally of the full weight-vector character of `wedge^j (wedge^3 C^n)`
/// for `j <= jmax`, keyed by packed weight vectors.
fn character_tally(n: usize, jmax: u64) -> Vec<HashMap<u128, u128>> {
    let jmax = jmax as usize;
    let mut dp: Vec<HashMap<u128, u128>> = vec![HashMap::new(); jmax + 1];
    dp[0].insert(pack(&vec![0u8; n]), 1);

    let mut triples = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                triples.push((a, b, c));
            }
        }
    }

    for &(a, b, c) in &triples {
        for j in (0..jmax).rev() {
            let (lo, hi) = dp.split_at_mut(j + 1);
            let src = &lo[j];
            let dst = &mut hi[0];
            for (&key, &count) in src {
                let mut w = unpack(key, n);
                w[a] += 1;
                w[b] += 1;
                w[c] += 1;
                *dst.entry(pack(&w)).or_insert(0) += count;
            }
        }
    }
    dp
}

fn pack(w: &[u8]) -> u128 {
    let mut key: u128 = 0;
    for (idx, &v) in w.iter().enumerate() {
        key |= (v as u128) << (8 * idx);
    }
    key
}

fn unpack(key: u128, n: usize) -> Vec<u8> {
    (0..n).map(|idx| ((key >> (8 * idx)) & 0xff) as u8).collect()
}

/// Schur multiplicities from a symmetric character given by its weight
/// multiplicities: `mult_lambda = sum_{w in S_n} sign(w) m_{lambda+rho-w(rho)}`.
fn extract_schur(tally: &HashMap<u128, u128>, n: usize, weight: u64) -> SchurVector {
    let mut dominant: Vec<Vec<u8>> = tally
        .keys()
        .map(|&k| unpack(k, n))
        .filter(|w| w.windows(2).all(|p| p[0] >= p[1]))
        .collect();
    dominant.sort();

    let rho: Vec<i64> = (0..n).map(|idx| (n - 1 - idx) as i64).collect();
    let mut signed_rho_perms: Vec<(i8, Vec<i64>)> = Vec::new();
    heaps_signed_permutations(&rho, &mut signed_rho_perms);

    let mut out = SchurVector::zero();
    for lam in dominant {
        if lam.iter().map(|&v| v as u64).sum::<u64>() != weight {
            continue;
        }
        let mut mult = BigInt::zero();
        'perm: for (sign, wrho) in &signed_rho_perms {
            let mut v: Vec<i64> = (0..n)
                .map(|idx| lam[idx] as i64 + rho[idx] - wrho[idx])
                .collect();
            for &x in &v {
                if x < 0 {
                    continue 'perm;
                }
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
            let packed = pack(&v.iter().map(|&x| x as u8).collect::<Vec<_>>());
            if let Some(&m) = tally.get(&packed) {
                if *sign > 0 {
                    mult += m;
                } else {
                    mult -= m;
                }
            }
        }
        assert!(!mult.is_negative(), "negative Schur multiplicity");
        if !mult.is_zero() {
            let parts: Vec<u32> = lam.iter().map(|&v| v as u32).collect();
            out.add_term(Partition::new(parts), mult);
        }
    }
    out
}

/// Heap's algorithm, tracking the sign of each permutation.
fn heaps_signed_permutations(items: &[i64], out: &mut Vec<(i8, Vec<i64>)>) {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    let mut sign: i8 = 1;
    out.push((sign, a.clone()));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((sign, a.clone()));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symcore::schur_dimension;

    fn binom(n: u64, k: u64) -> BigInt {
        let mut r = BigInt::from(1);
        for idx in 0..k {
            r = r * BigInt::from(n - idx) / BigInt::from(idx + 1);
        }
        r
    }

    #[test]
    fn wedge_zero_and_one() {
        assert_eq!(
            wedge_plethysm(0, 6).unwrap(),
            SchurVector::single(Partition::empty(), 1)
        );
        assert_eq!(
            wedge_plethysm(1, 6).unwrap(),
            SchurVector::single(partition![1, 1, 1], 1)
        );
    }

    #[test]
    fn top_wedge_is_tenth_power_of_determinant() {
        let top = wedge_plethysm(20, 6).unwrap();
        assert_eq!(
            top,
            SchurVector::single(partition![10, 10, 10, 10, 10, 10], 1)
        );
    }

    #[test]
    fn known_small_decompositions() {
        // wedge^2(wedge^3 C^6) = S_{2,1,1,1,1} + S_{1,1,1,1,1,1}... verified
        // against the dimension sum binom(20, 2) = 190.
        let v = wedge_plethysm(2, 6).unwrap();
        assert_eq!(v.dimension_sum(6), BigInt::from(190));
        // the classical rank-independent pieces of wedge^2 of a third wedge
        assert_eq!(v.coeff(&partition![2, 2, 1, 1]), BigInt::from(1));
        assert_eq!(v.coeff(&partition![1, 1, 1, 1, 1, 1]), BigInt::from(1));
    }

    #[test]
    fn dimension_sums_all_n_up_to_6() {
        for n in 3..=6usize {
            let max = binom3(n);
            for i in 0..=max.min(20) {
                let v = wedge_plethysm(i, n).unwrap();
                assert_eq!(
                    v.dimension_sum(n),
                    binom(max, i),
                    "dimension sum failed at i = {i}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn duality_with_determinant_twist() {
        // wedge^{20-i} = wedge^i tensored with det^10 on C^6:
        // lambda -> (10 - lambda_6, ..., 10 - lambda_1) matches coefficients.
        for i in 0..=20u64 {
            let low = wedge_plethysm(i, 6).unwrap();
            let high = wedge_plethysm(20 - i, 6).unwrap();
            let mapped = low.map_partitions(|lam| {
                let parts: Vec<u32> = (0..6).rev().map(|r| 10 - lam.part(r)).collect();
                Partition::new(parts)
            });
            assert_eq!(mapped, high, "duality failed at i = {i}");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            wedge_plethysm(21, 6),
            Err(PlethysmError::IndexOutOfRange { i: 21, n: 6, max: 20 })
        );
    }

    #[test]
    fn larger_rank_small_wedge() {
        // wedge^2(wedge^3 C^7): dimension binom(35, 2) = 595
        let v = wedge_plethysm(2, 7).unwrap();
        assert_eq!(v.dimension_sum(7), BigInt::from(595));
    }
}
