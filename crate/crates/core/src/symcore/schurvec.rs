use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Partition;

/// A formal integer combination of partitions of a common weight, the carrier
/// for decompositions into Schur functors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurVector {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero() -> Self {
        SchurVector::default()
    }

    pub fn single(lam: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut v = SchurVector::zero();
        v.add_term(lam, coeff.into());
        v
    }

    /// Adds `coeff * lam`, keeping the homogeneity invariant and dropping
    /// zero coefficients.
    pub fn add_term(&mut self, lam: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        if let Some(existing) = self.terms.keys().next() {
            assert_eq!(
                existing.weight(),
                lam.weight(),
                "SchurVector terms must have a common weight"
            );
        }
        let entry = self.terms.entry(lam.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn coeff(&self, lam: &Partition) -> BigInt {
        self.terms.get(lam).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common weight of the keys, if nonzero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next().map(|p| p.weight())
    }

    /// Sum of `coeff * dim S_lam(C^n)` over the terms.
    pub fn dimension_sum(&self, n: usize) -> BigInt {
        let mut total = BigInt::zero();
        for (lam, c) in &self.terms {
            total += c * super::schur_dimension(lam, n);
        }
        total
    }

    pub fn map_partitions(&self, f: impl Fn(&Partition) -> Partition) -> SchurVector {
        let mut out = SchurVector::zero();
        for (lam, c) in &self.terms {
            out.add_term(f(lam), c.clone());
        }
        out
    }
}

impl Add for SchurVector {
    type Output = SchurVector;
    fn add(self, rhs: SchurVector) -> SchurVector {
        let mut out = self;
        for (lam, c) in rhs.terms {
            out.add_term(lam, c);
        }
        out
    }
}

impl Mul<BigInt> for SchurVector {
    type Output = SchurVector;
    fn mul(self, rhs: BigInt) -> SchurVector {
        if rhs.is_zero() {
            return SchurVector::zero();
        }
        let terms = self.terms.into_iter().map(|(l, c)| (l, c * &rhs)).collect();
        SchurVector { terms }
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{lam}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
