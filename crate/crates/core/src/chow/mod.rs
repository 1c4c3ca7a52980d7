//! The Chow ring of a Grassmannian `G(k, n)` in the Schubert basis, Chern
//! classes of formal bundle expressions, integration of top-degree classes,
//! and the named intersection numbers of the fourfold `Y` in `G(6, 10)`.

mod bundle;
mod chern;
mod numbers;
mod ratpoly;
mod ring;

pub use bundle::BundleExpr;
pub use chern::{chern_character, chern_class, chern_of_bundle, tangent_chern};
pub use numbers::{
    dual_degree_from_integrals, dual_variety_degree, k3_model, paper_intersection_numbers,
    restricted_c2_of_y, riemann_roch_hilbert, two_companion_class, K3Model,
};
pub use ratpoly::RationalPolynomial;
pub use ring::{schubert_integrate, ChowClass, GrassCtx};
