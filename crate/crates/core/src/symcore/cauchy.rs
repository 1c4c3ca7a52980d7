use super::Partition;

/// Cauchy decomposition of an exterior power of a tensor product:
/// `wedge^j (A (x) B) = (+)_{|lambda| = j} S_lambda(A) (x) S_{lambda'}(B)`.
/// Returns the multiplicity-free list of pairs `(lambda, lambda')`.
/// Consumers restrict to `lambda` with at most `rank A` rows and at most
/// `rank B` columns; the identity itself is rank-independent.
pub fn cauchy_wedge(j: u64) -> Vec<(Partition, Partition)> {
    Partition::enumerate(j, j.max(1) as usize, j.max(1) as u32)
        .into_iter()
        .map(|lam| {
            let conj = lam.conjugate();
            (lam, conj)
        })
        .collect()
}
