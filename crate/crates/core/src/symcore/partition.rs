use std::cmp::Ordering;
use std::fmt;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the trivial partition.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Panics if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Part at `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts }
    }

    /// True when the diagram fits in a `rows x cols` box.
    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.parts.len() <= rows && self.part(0) <= cols
    }

    /// Complement inside a `rows x cols` box; `None` if it does not fit.
    pub fn box_complement(&self, rows: usize, cols: u32) -> Option<Partition> {
        if !self.fits_in_box(rows, cols) {
            return None;
        }
        let mut parts: Vec<u32> = (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// All partitions of `n` with at most `max_len` parts, each at most
    /// `max_part`.
    pub fn enumerate(n: u64, max_len: usize, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut buf = Vec::new();
        fn rec(remaining: u64, max_part: u32, slots: usize, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: buf.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            let hi = (max_part as u64).min(remaining) as u32;
            for p in (1..=hi).rev() {
                // remaining parts can cover what is left only if p*slots >= remaining
                if (p as u64) * (slots as u64) < remaining {
                    break;
                }
                buf.push(p);
                rec(remaining - p as u64, p, slots - 1, buf, out);
                buf.pop();
            }
        }
        rec(n, max_part, max_len, &mut buf, &mut out);
        out
    }
}

/// Canonical iteration order: by weight, then lexicographically descending on
/// parts (so `(n)` comes before `(1^n)` within a weight).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| {
                let len = self.parts.len().max(other.parts.len());
                for i in 0..len {
                    match self.part(i).cmp(&other.part(i)) {
                        Ordering::Equal => continue,
                        // larger first part sorts earlier within a weight
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[macro_export]
macro_rules! partition {
    ($($p:expr),*) => {
        $crate::symcore::Partition::new(vec![$($p as u32),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_involution() {
        for n in 0..=8u64 {
            for lam in Partition::enumerate(n, 8, 8) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), lam.weight());
            }
        }
    }

    #[test]
    fn box_complement_roundtrip() {
        for lam in Partition::enumerate(5, 3, 4) {
            let c = lam.box_complement(3, 4).unwrap();
            assert_eq!(c.box_complement(3, 4).unwrap(), lam);
            assert_eq!(c.weight() + lam.weight(), 12);
        }
    }

    #[test]
    fn enumerate_counts() {
        // partition numbers p(0..10)
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(Partition::enumerate(n as u64, n.max(1), n.max(1) as u32).len(), e);
        }
    }

    #[test]
    fn ordering_is_by_weight_then_lex_desc() {
        let a = partition![2];
        let b = partition![1, 1];
        let c = partition![3];
        assert!(a < b);
        assert!(b < c);
    }
}
