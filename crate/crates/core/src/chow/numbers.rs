//! The named exact numbers of the G(6,10) fourfold and its companions:
//! Chern-monomial integrals against the class of the fourfold, the dual
//! variety degree by the class formula, the degree-22 K3 model in G(3,7),
//! and the Riemann-Roch Hilbert polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{
    chern_of_bundle, schubert_integrate, tangent_chern, BundleExpr, ChowClass, GrassCtx,
    RationalPolynomial,
};
use crate::symcore::Partition;

/// `c_i` of the dual tautological subbundle `E_k` as a monomial product.
/// `powers[i]` is the exponent of `c_{i+1}`. Degree overflow simply truncates
/// to the zero class.
pub fn giambelli_reduce(ctx: GrassCtx, powers: &[u32]) -> ChowClass {
    let mut out = ChowClass::one(ctx);
    for (i, &e) in powers.iter().enumerate() {
        for _ in 0..e {
            out = out.mul(&ChowClass::chern_e(ctx, i + 1));
        }
    }
    out
}

/// The intersection numbers of the fourfold `Y` in `G(6, 10)`: the class of
/// `Y` is `c_20(wedge^3 E_6)`, paired with degree-4 monomials in the Chern
/// classes of `E_6`.
pub fn paper_intersection_numbers() -> Vec<(&'static str, BigInt)> {
    let ctx = GrassCtx::new(6, 10);
    let f = BundleExpr::wedge(3, BundleExpr::taut_e());
    let y_class = chern_of_bundle(ctx, &f, 20).degree_part(20);
    let pair = |powers: &[u32]| -> BigInt {
        schubert_integrate(&y_class.mul(&giambelli_reduce(ctx, powers)))
    };
    vec![
        ("c1c3", pair(&[1, 0, 1])),
        ("c4", pair(&[0, 0, 0, 1])),
        ("c1^2c2", pair(&[2, 1])),
        ("c2^2", pair(&[0, 2])),
        ("c1^4", pair(&[4])),
    ]
}

/// The degree-2 Chern class of the tangent bundle of `Y`, derived from
/// `c(T_G) = c(T_Y) c(wedge^3 E_6)` truncated in degree 2, expressed on the
/// basis `{c_1^2, c_2}` of the Chern classes of `E_6`. Returns the class and
/// the coefficient pair.
pub fn restricted_c2_of_y() -> (ChowClass, (BigInt, BigInt)) {
    let ctx = GrassCtx::new(6, 10);
    let f = BundleExpr::wedge(3, BundleExpr::taut_e());
    let ct_g = tangent_chern(ctx, 2);
    let cf = chern_of_bundle(ctx, &f, 2);
    // c(T_Y) = c(T_G) / c(F) up to degree 2:
    // deg 1: t1 = g1 - f1; deg 2: t2 = g2 - f2 - t1 f1
    let g1 = ct_g.degree_part(1);
    let g2 = ct_g.degree_part(2);
    let f1 = cf.degree_part(1);
    let f2 = cf.degree_part(2);
    let t1 = g1.add(&f1.scale(&BigInt::from(-1)));
    assert!(t1.is_zero(), "c_1(T_Y) must vanish");
    let t2 = g2.add(&f2.scale(&BigInt::from(-1)));
    // write t2 = alpha c_1^2 + beta c_2 with c_1^2 = sigma_2 + sigma_11, c_2 = sigma_11
    let a = t2.coeff(&Partition::new(vec![2]));
    let b = t2.coeff(&Partition::new(vec![1, 1]));
    let alpha = a.clone();
    let beta = b - &a;
    (t2, (alpha, beta))
}

/// `c_2(T_Y) . c_1^2` on the fourfold: pairs the derived degree-2 class with
/// `c_20(wedge^3 E_6) . c_1^2`.
pub fn c2_ty_times_c1sq() -> BigInt {
    let ctx = GrassCtx::new(6, 10);
    let f = BundleExpr::wedge(3, BundleExpr::taut_e());
    let y_class = chern_of_bundle(ctx, &f, 20).degree_part(20);
    let (c2ty, _) = restricted_c2_of_y();
    let c1sq = ChowClass::sigma1(ctx).pow(2);
    schubert_integrate(&y_class.mul(&c2ty).mul(&c1sq))
}

/// Riemann-Roch on a hyper-Kaehler fourfold with vanishing odd Chern classes:
/// `chi(k) = chi(O) + (c_2(T) c_1^2 / 24) k^2 + (c_1^4 / 24) k^4`.
/// The constant term is injected by the caller (it is computed independently
/// by the Koszul-Bott route in `bwb`).
pub fn riemann_roch_hilbert(chi_of_o: &BigInt) -> RationalPolynomial {
    let numbers = paper_intersection_numbers();
    let c1_4 = numbers
        .iter()
        .find(|(l, _)| *l == "c1^4")
        .map(|(_, v)| v.clone())
        .unwrap();
    let middle = c2_ty_times_c1sq();
    let mut p = RationalPolynomial::zero();
    p.set_coeff(0, BigRational::from_integer(chi_of_o.clone()));
    p.set_coeff(2, BigRational::new(middle, BigInt::from(24)));
    p.set_coeff(4, BigRational::new(c1_4, BigInt::from(24)));
    p
}

/// Degree of the dual variety by the class formula, from the integrals
/// `integrals[i] = deg(c_{m-i}(T_X) . h^i)` on an m-dimensional smooth
/// projective variety whose dual is a hypersurface:
/// `|sum_i (-1)^i (i+1) integrals[i]|`.
pub fn dual_degree_from_integrals(integrals: &[BigInt]) -> BigInt {
    let mut total = BigInt::zero();
    for (i, v) in integrals.iter().enumerate() {
        let signed = v * BigInt::from(i as i64 + 1);
        if i % 2 == 0 {
            total += signed;
        } else {
            total -= signed;
        }
    }
    total.abs()
}

/// Degree of the projective dual of `G(k, n)` in the Pluecker embedding
/// (assuming it is a hypersurface), with `h = sigma_1`.
pub fn dual_variety_degree(ctx: GrassCtx) -> BigInt {
    let m = ctx.dim();
    let ct = tangent_chern(ctx, m);
    let mut h_power = ChowClass::one(ctx);
    let mut integrals = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let c_part = ct.degree_part((m - i) as u64);
        integrals.push(schubert_integrate(&c_part.mul(&h_power)));
        h_power = h_power.mul(&ChowClass::sigma1(ctx));
    }
    dual_degree_from_integrals(&integrals)
}

/// `c_3(wedge^2 E_3)^3` integrated over G(3, 6): the class of the locus of
/// companion 3-spaces.
pub fn two_companion_class() -> BigInt {
    let ctx = GrassCtx::new(3, 6);
    let b = BundleExpr::wedge(2, BundleExpr::taut_e());
    let c3 = chern_of_bundle(ctx, &b, 3).degree_part(3);
    schubert_integrate(&c3.pow(3))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Model {
    /// dim G(3,7) minus the rank of the cutting bundle.
    pub expected_dimension: i64,
    /// Whether `det(O(1) (+) (wedge^2 E_3)^3) = c_1(T_{G(3,7)})`.
    pub calabi_yau_determinant: bool,
    /// Pluecker degree of the zero locus.
    pub degree: BigInt,
}

/// The degree-22 K3 surface: zero locus of a section of
/// `O(1) (+) (wedge^2 E_3)^{(+)3}` on G(3, 7).
pub fn k3_model() -> K3Model {
    let ctx = GrassCtx::new(3, 7);
    let w2e = BundleExpr::wedge(2, BundleExpr::taut_e());
    let bundle = BundleExpr::line(1)
        .sum(w2e.clone())
        .sum(w2e.clone())
        .sum(w2e.clone());
    let rank = bundle.rank(ctx);
    let expected_dimension = ctx.dim() as i64
        - i64::try_from(rank.clone()).expect("rank fits in i64");

    let det = chern_of_bundle(ctx, &bundle, 1).degree_part(1);
    let c1_t = tangent_chern(ctx, 1).degree_part(1);
    let calabi_yau_determinant = det == c1_t;

    // degree = integral of sigma_1^2 . c_1(O(1)) . c_3(wedge^2 E_3)^3
    let c3 = chern_of_bundle(ctx, &w2e, 3).degree_part(3);
    let degree = schubert_integrate(
        &ChowClass::sigma1(ctx)
            .pow(3)
            .mul(&c3.pow(3)),
    );
    K3Model { expected_dimension, calabi_yau_determinant, degree }
}
