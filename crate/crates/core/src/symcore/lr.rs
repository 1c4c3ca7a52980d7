use num_bigint::BigInt;

use super::{Partition, SchurVector};

/// Littlewood-Richardson product `s_lambda * s_mu = sum_nu c^nu_{lambda,mu} s_nu`.
pub fn lr_multiply(lam: &Partition, mu: &Partition) -> SchurVector {
    let max_rows = lam.len() + mu.len();
    let mut out = SchurVector::zero();
    for (nu, c) in lr_expand(lam, mu, max_rows, u32::MAX) {
        out.add_term(nu, BigInt::from(c));
    }
    out
}

/// LR product truncated to partitions inside a `max_rows x max_cols` box.
/// Shapes only grow during the expansion, so pruning is exact: the discarded
/// terms are precisely those outside the box.
pub fn lr_multiply_boxed(
    lam: &Partition,
    mu: &Partition,
    max_rows: usize,
    max_cols: u32,
) -> Vec<(Partition, u64)> {
    if !lam.fits_in_box(max_rows, max_cols) {
        return Vec::new();
    }
    lr_expand(lam, mu, max_rows, max_cols)
}

/// Expands the product by adding the rows of `mu` as horizontal strips,
/// subject to the lattice-word (ballot) condition: the boxes of strip `s`
/// in rows `0..=r` may not exceed the boxes of strip `s-1` in rows `0..r`.
/// Together with the horizontal-strip condition this enumerates exactly the
/// Littlewood-Richardson skew tableaux of content `mu` on `lam`.
fn lr_expand(lam: &Partition, mu: &Partition, max_rows: usize, max_cols: u32) -> Vec<(Partition, u64)> {
    let mut results: Vec<(Partition, u64)> = Vec::new();
    let rows = max_rows.max(lam.len());
    let mut shape: Vec<u32> = (0..rows).map(|i| lam.part(i)).collect();
    // sentinel marking "no previous strip": the first strip is unconstrained
    let prev_cum: Vec<u32> = vec![u32::MAX; rows];

    fn place_strip(
        strip_idx: usize,
        mu: &Partition,
        shape: &mut Vec<u32>,
        prev_cum: &[u32],
        max_cols: u32,
        results: &mut Vec<(Partition, u64)>,
    ) {
        if strip_idx == mu.len() {
            let parts: Vec<u32> = shape.iter().copied().take_while(|&p| p > 0).collect();
            // shape is weakly decreasing by construction; trailing zeros only
            let nu = Partition::new(parts);
            match results.iter_mut().find(|(p, _)| *p == nu) {
                Some((_, c)) => *c += 1,
                None => results.push((nu, 1)),
            }
            return;
        }
        let size = mu.part(strip_idx);
        let rows = shape.len();
        let mut cum: Vec<u32> = vec![0; rows];
        let old_shape = shape.clone();

        // distribute `size` boxes over rows top to bottom
        fn rec(
            row: usize,
            remaining: u32,
            strip_idx: usize,
            mu: &Partition,
            old_shape: &[u32],
            shape: &mut Vec<u32>,
            cum: &mut Vec<u32>,
            prev_cum: &[u32],
            max_cols: u32,
            results: &mut Vec<(Partition, u64)>,
        ) {
            let rows = shape.len();
            if remaining == 0 {
                let base = if row == 0 { 0 } else { cum[row - 1] };
                for r in row..rows {
                    cum[r] = base;
                }
                place_strip(strip_idx + 1, mu, shape, cum, max_cols, results);
                return;
            }
            if row == rows {
                return;
            }
            // horizontal strip: new[row] <= old[row-1]; also box width cap
            let cap_strip = if row == 0 { max_cols } else { old_shape[row - 1] };
            let cap_width = max_cols.min(cap_strip);
            let hi_shape = cap_width.saturating_sub(old_shape[row]);
            // ballot: cum up to this row <= prev strip cum up to row-1
            let cum_before = if row == 0 { 0 } else { cum[row - 1] };
            let ballot_cap = if prev_cum[0] == u32::MAX {
                // first strip: unconstrained
                u32::MAX
            } else if row == 0 {
                0
            } else {
                prev_cum[row - 1].saturating_sub(cum_before)
            };
            let hi = hi_shape.min(remaining).min(ballot_cap);
            for a in 0..=hi {
                shape[row] = old_shape[row] + a;
                cum[row] = cum_before + a;
                rec(
                    row + 1,
                    remaining - a,
                    strip_idx,
                    mu,
                    old_shape,
                    shape,
                    cum,
                    prev_cum,
                    max_cols,
                    results,
                );
            }
            shape[row] = old_shape[row];
        }

        rec(
            0, size, strip_idx, mu, &old_shape, shape, &mut cum, prev_cum, max_cols, results,
        );
        *shape = old_shape;
    }

    place_strip(0, mu, &mut shape, &prev_cum, max_cols, &mut results);
    results
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn coeff(v: &SchurVector, parts: Vec<u32>) -> i64 {
        use num_traits::ToPrimitive;
        v.coeff(&Partition::new(parts)).to_i64().unwrap()
    }

    #[test]
    fn unit_of_the_ring() {
        let mu = partition![3, 1];
        let p = lr_multiply(&Partition::empty(), &mu);
        assert_eq!(p, SchurVector::single(mu, 1));
    }

    #[test]
    fn pieri_rule_basic() {
        let p = lr_multiply(&partition![1], &partition![1]);
        assert_eq!(coeff(&p, vec![2]), 1);
        assert_eq!(coeff(&p, vec![1, 1]), 1);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn known_products() {
        // s_21 * s_21 = s_42 + s_411 + s_33 + 2 s_321 + s_3111 + s_222 + s_2211
        let p = lr_multiply(&partition![2, 1], &partition![2, 1]);
        assert_eq!(coeff(&p, vec![4, 2]), 1);
        assert_eq!(coeff(&p, vec![4, 1, 1]), 1);
        assert_eq!(coeff(&p, vec![3, 3]), 1);
        assert_eq!(coeff(&p, vec![3, 2, 1]), 2);
        assert_eq!(coeff(&p, vec![3, 1, 1, 1]), 1);
        assert_eq!(coeff(&p, vec![2, 2, 2]), 1);
        assert_eq!(coeff(&p, vec![2, 2, 1, 1]), 1);
        assert_eq!(p.num_terms(), 7);
    }

    #[test]
    fn symmetry_small() {
        for a in 0..=4u64 {
            for b in 0..=4u64 {
                for lam in Partition::enumerate(a, 4, 4) {
                    for mu in Partition::enumerate(b, 4, 4) {
                        assert_eq!(lr_multiply(&lam, &mu), lr_multiply(&mu, &lam));
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_weight_up_to_4() {
        let parts: Vec<Partition> = (0..=4u64).flat_map(|n| Partition::enumerate(n, 4, 4)).collect();
        // spot-check associativity on a deterministic subset of triples
        for (i, a) in parts.iter().enumerate() {
            for (j, b) in parts.iter().enumerate() {
                for (k, c) in parts.iter().enumerate() {
                    if (i + j + k) % 7 != 0 {
                        continue;
                    }
                    let left = mul_vec(&lr_multiply(a, b), c);
                    let right = mul_vec(&lr_multiply(b, c), a);
                    assert_eq!(left, right, "assoc failed on {a} {b} {c}");
                }
            }
        }
    }

    fn mul_vec(v: &SchurVector, by: &Partition) -> SchurVector {
        let mut out = SchurVector::zero();
        for (lam, c) in v.terms() {
            let prod = lr_multiply(lam, by);
            for (nu, d) in prod.terms() {
                out.add_term(nu.clone(), c * d);
            }
        }
        out
    }

    #[test]
    fn boxed_truncation_matches_filtering() {
        let lam = partition![2, 1];
        let mu = partition![2, 2];
        let full = lr_multiply(&lam, &mu);
        let boxed = lr_multiply_boxed(&lam, &mu, 2, 4);
        for (nu, c) in &boxed {
            assert_eq!(BigInt::from(*c), full.coeff(nu));
        }
        for (nu, c) in full.terms() {
            if nu.fits_in_box(2, 4) {
                assert!(boxed.iter().any(|(p, k)| p == nu && BigInt::from(*k) == *c));
            }
        }
    }
}
