use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::GrassCtx;
use crate::symcore::{schur_dimension, Partition};

/// A formal bundle expression over the tautological bundles of a
/// Grassmannian, closed under dual, sum, tensor, exterior and symmetric
/// powers, Schur functors, and twists by `O(d)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BundleExpr {
    /// The tautological rank-k subbundle `S`.
    TautSub,
    /// The tautological rank-(n-k) quotient `Q`.
    TautQuot,
    /// A trivial bundle of the given rank.
    Trivial(u32),
    Dual(Box<BundleExpr>),
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Wedge(u32, Box<BundleExpr>),
    Sym(u32, Box<BundleExpr>),
    Schur(Partition, Box<BundleExpr>),
    /// Twist by `O(d)` where `O(1) = det(S*)` is the Pluecker line bundle.
    Twist(Box<BundleExpr>, i64),
}

impl BundleExpr {
    /// The dual tautological subbundle `E = S*`.
    pub fn taut_e() -> Self {
        BundleExpr::Dual(Box::new(BundleExpr::TautSub))
    }

    /// The Pluecker line bundle `O(d)`.
    pub fn line(d: i64) -> Self {
        BundleExpr::Twist(Box::new(BundleExpr::Trivial(1)), d)
    }

    /// The tangent bundle `T = S* (x) Q`.
    pub fn tangent() -> Self {
        BundleExpr::Tensor(Box::new(Self::taut_e()), Box::new(BundleExpr::TautQuot))
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn sum(self, rhs: Self) -> Self {
        BundleExpr::Sum(Box::new(self), Box::new(rhs))
    }

    pub fn tensor(self, rhs: Self) -> Self {
        BundleExpr::Tensor(Box::new(self), Box::new(rhs))
    }

    pub fn wedge(p: u32, inner: Self) -> Self {
        BundleExpr::Wedge(p, Box::new(inner))
    }

    pub fn sym(p: u32, inner: Self) -> Self {
        BundleExpr::Sym(p, Box::new(inner))
    }

    pub fn twist(self, d: i64) -> Self {
        BundleExpr::Twist(Box::new(self), d)
    }

    /// Structural rank.
    pub fn rank(&self, ctx: GrassCtx) -> BigInt {
        match self {
            BundleExpr::TautSub => BigInt::from(ctx.k()),
            BundleExpr::TautQuot => BigInt::from(ctx.n() - ctx.k()),
            BundleExpr::Trivial(r) => BigInt::from(*r),
            BundleExpr::Dual(b) | BundleExpr::Twist(b, _) => b.rank(ctx),
            BundleExpr::Sum(a, b) => a.rank(ctx) + b.rank(ctx),
            BundleExpr::Tensor(a, b) => a.rank(ctx) * b.rank(ctx),
            BundleExpr::Wedge(p, b) => binomial(&b.rank(ctx), *p),
            BundleExpr::Sym(p, b) => {
                let r = b.rank(ctx);
                if r.is_zero() {
                    if *p == 0 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    binomial(&(r + BigInt::from(*p) - 1), *p)
                }
            }
            BundleExpr::Schur(lam, b) => {
                let r = b.rank(ctx).to_usize().expect("rank too large for Schur functor");
                schur_dimension(lam, r)
            }
        }
    }
}

fn binomial(n: &BigInt, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - BigInt::from(i));
        r /= BigInt::from(i + 1);
    }
    if r.is_negative() {
        BigInt::zero()
    } else {
        r
    }
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn rank_of_third_wedge_of_e6_is_20() {
        let ctx = GrassCtx::new(6, 10);
        let f = BundleExpr::wedge(3, BundleExpr::taut_e());
        assert_eq!(f.rank(ctx), BigInt::from(20));
    }

    #[test]
    fn ranks_compose() {
        let ctx = GrassCtx::new(3, 7);
        let b = BundleExpr::line(1).sum(BundleExpr::wedge(2, BundleExpr::taut_e()))
            .sum(BundleExpr::wedge(2, BundleExpr::taut_e()))
            .sum(BundleExpr::wedge(2, BundleExpr::taut_e()));
        assert_eq!(b.rank(ctx), BigInt::from(10));
        assert_eq!(BundleExpr::tangent().rank(ctx), BigInt::from(12));
        assert_eq!(
            BundleExpr::Schur(partition![2, 1], Box::new(BundleExpr::TautSub)).rank(ctx),
            BigInt::from(8)
        );
    }
}
