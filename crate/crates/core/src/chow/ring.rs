use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::symcore::{lr_multiply_boxed, Partition};

/// A Grassmannian `G(k, n)` of k-dimensional subspaces of an n-dimensional
/// space. Schubert classes are indexed by partitions inside the
/// `k x (n - k)` box.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GrassCtx {
    k: usize,
    n: usize,
}

impl GrassCtx {
    pub fn new(k: usize, n: usize) -> Self {
        assert!(k > 0 && k < n, "require 0 < k < n, got ({k}, {n})");
        GrassCtx { k, n }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// Width of the Schubert box.
    pub fn cols(&self) -> u32 {
        (self.n - self.k) as u32
    }

    /// The class of a point: the full `k x (n - k)` box.
    pub fn box_partition(&self) -> Partition {
        Partition::new(vec![self.cols(); self.k])
    }

    /// All Schubert basis partitions, ordered canonically.
    pub fn basis(&self) -> Vec<Partition> {
        let mut all = Vec::new();
        for d in 0..=self.dim() as u64 {
            all.extend(Partition::enumerate(d, self.k, self.cols()));
        }
        all
    }
}

/// Product of two Schubert classes, memoized globally. Terms leaving the box
/// are zero in the Chow ring and are dropped by the boxed LR expansion.
pub(crate) fn sigma_product(
    ctx: GrassCtx,
    lam: &Partition,
    mu: &Partition,
) -> Arc<Vec<(Partition, i64)>> {
    type Key = (usize, usize, Partition, Partition);
    static TABLE: OnceLock<Mutex<HashMap<Key, Arc<Vec<(Partition, i64)>>>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    let (a, b) = if lam <= mu { (lam, mu) } else { (mu, lam) };
    let key = (ctx.k, ctx.n, a.clone(), b.clone());
    if let Some(hit) = table.lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let expansion: Vec<(Partition, i64)> = lr_multiply_boxed(a, b, ctx.k, ctx.cols())
        .into_iter()
        .map(|(nu, c)| (nu, i64::try_from(c).expect("LR coefficient overflow")))
        .collect();
    let arc = Arc::new(expansion);
    table.lock().unwrap().insert(key, Arc::clone(&arc));
    arc
}

/// An element of the Chow ring of `G(k, n)` with integer coefficients in the
/// Schubert basis. May be inhomogeneous (e.g. a total Chern class).
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    ctx: GrassCtx,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowClass {
    pub fn zero(ctx: GrassCtx) -> Self {
        ChowClass { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: GrassCtx) -> Self {
        Self::from_sigma(ctx, Partition::empty())
    }

    /// The Schubert class `sigma_lambda`; zero if `lambda` leaves the box.
    pub fn from_sigma(ctx: GrassCtx, lam: Partition) -> Self {
        let mut c = Self::zero(ctx);
        c.add_term(lam, BigInt::from(1));
        c
    }

    /// `sigma_1`, the hyperplane class of the Pluecker embedding.
    pub fn sigma1(ctx: GrassCtx) -> Self {
        Self::from_sigma(ctx, Partition::new(vec![1]))
    }

    /// `c_i` of the dual tautological subbundle: `sigma_{(1^i)}`.
    pub fn chern_e(ctx: GrassCtx, i: usize) -> Self {
        Self::from_sigma(ctx, Partition::new(vec![1; i]))
    }

    pub fn ctx(&self) -> GrassCtx {
        self.ctx
    }

    pub fn add_term(&mut self, lam: Partition, coeff: BigInt) {
        if coeff.is_zero() || !lam.fits_in_box(self.ctx.k, self.ctx.cols()) {
            return;
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common weight of the terms when the class is homogeneous.
    pub fn degree(&self) -> Option<u64> {
        let mut degs = self.terms.keys().map(|p| p.weight());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// The homogeneous part of the given degree.
    pub fn degree_part(&self, d: u64) -> ChowClass {
        let terms = self
            .terms
            .iter()
            .filter(|(p, _)| p.weight() == d)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        ChowClass { ctx: self.ctx, terms }
    }

    pub fn add(&self, rhs: &ChowClass) -> ChowClass {
        assert_eq!(self.ctx, rhs.ctx);
        let mut out = self.clone();
        for (lam, c) in &rhs.terms {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> ChowClass {
        if s.is_zero() {
            return ChowClass::zero(self.ctx);
        }
        let terms = self.terms.iter().map(|(p, c)| (p.clone(), c * s)).collect();
        ChowClass { ctx: self.ctx, terms }
    }

    pub fn mul(&self, rhs: &ChowClass) -> ChowClass {
        assert_eq!(self.ctx, rhs.ctx);
        let mut out = ChowClass::zero(self.ctx);
        for (lam, a) in &self.terms {
            for (mu, b) in &rhs.terms {
                let ab = a * b;
                for (nu, c) in sigma_product(self.ctx, lam, mu).iter() {
                    out.add_term(nu.clone(), &ab * BigInt::from(*c));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        let mut out = ChowClass::one(self.ctx);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

/// Degree map: the coefficient of the box partition (the class of a point).
/// Inhomogeneous classes contribute only their top-degree part; classes with
/// no component in top degree integrate to zero.
pub fn schubert_integrate(x: &ChowClass) -> BigInt {
    x.coeff(&x.ctx().box_partition())
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*s{lam}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn pieri_cube_of_sigma1() {
        let ctx = GrassCtx::new(3, 10);
        let cube = ChowClass::sigma1(ctx).pow(3);
        assert_eq!(cube.coeff(&partition![3]), BigInt::from(1));
        assert_eq!(cube.coeff(&partition![2, 1]), BigInt::from(2));
        assert_eq!(cube.coeff(&partition![1, 1, 1]), BigInt::from(1));
    }

    #[test]
    fn poincare_duality_exhaustive() {
        for ctx in [GrassCtx::new(3, 6), GrassCtx::new(2, 5)] {
            let dim = ctx.dim() as u64;
            for lam in ctx.basis() {
                let comp = lam.box_complement(ctx.k(), ctx.cols()).unwrap();
                for mu in Partition::enumerate(dim - lam.weight(), ctx.k(), ctx.cols()) {
                    let val = schubert_integrate(
                        &ChowClass::from_sigma(ctx, lam.clone())
                            .mul(&ChowClass::from_sigma(ctx, mu.clone())),
                    );
                    let expected = if mu == comp { 1 } else { 0 };
                    assert_eq!(val, BigInt::from(expected), "{lam} . {mu} on {ctx:?}");
                }
            }
        }
    }

    #[test]
    fn top_chern_of_e_is_a_point() {
        // a generic section of E_k on G(k, 2k) vanishes at a single point
        for (k, n) in [(2usize, 4usize), (3, 6)] {
            let ctx = GrassCtx::new(k, n);
            let top = ChowClass::chern_e(ctx, k).pow(k as u32);
            assert_eq!(schubert_integrate(&top), BigInt::from(1));
        }
    }

    #[test]
    fn box_truncation_kills_overflow() {
        let ctx = GrassCtx::new(2, 4);
        let s2 = ChowClass::from_sigma(ctx, partition![2]);
        let prod = s2.mul(&s2).mul(&s2);
        assert!(prod.is_zero());
    }
}
