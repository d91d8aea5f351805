//! Localization integrals `I_d`, the Grassmannian series terms and the
//! product-of-projective-spaces check.

mod grassmannian;
mod hori_vafa;
mod integral;
mod series;

pub use grassmannian::{
    compositions, grassmannian_hg_term, grassmannian_roots, hg_term_by_display, hg_term_by_tableaux,
    reconstruct_class_from_pairings, schur_pairings,
};
pub use hori_vafa::{hori_vafa_side, hori_vafa_verify, HoriVafaReport, HoriVafaRow};
pub use integral::{
    hyperplane_pullback, integral_id, kahler_pairing, localized_integrand, pretty_t_series, t_expansion,
    IntegralResult, TTerm,
};
pub use series::{hg_series, HgSeries, HgTerm};

#[cfg(test)]
mod tests;
