//! Hodge integrals against `lambda_g lambda_{g-1}` and the identities they satisfy.

mod fcoeff;
mod hyperelliptic;
mod integrals;
mod localization;
mod socle;

pub use fcoeff::{
    f_coeff, f_routes_check, hples_check, kfgg_check, lemma1_check, lemma1_closed, prop1_check, prop2_check,
    pwp_check, tree_power_coefficient, weww_check, FRoute, TreeRoute,
};
pub use hyperelliptic::{
    binomial_sum_check, h_series, hyperelliptic_check, hyperelliptic_closed, hyperelliptic_via_i,
    hyperelliptic_via_series,
};
pub use integrals::{
    corollary1_check, corollary2_check, g_series, i_closed, i_dual_route_check, i_via_q, p_eval, p_eval_stirling, q,
    q_series_check, scaling_check, sdsd_series_check, stirling_form_check, theorem2_check,
};
pub use localization::{localization_check, localization_terms};
pub use socle::{
    b_inverse_check, b_inverse_matrix, b_matrix, coeff_formula_check, hodge_polynomial, matrix_route,
    matrix_route_check, named_evaluation, named_evaluation_check, polynomiality_check, shape_check,
    socle_extract, theorem1_check, triple_lambda_consistency, triple_lambda_via_linear, CoefficientFormula,
    HodgePolynomial, NamedEvaluation, SocleVector,
};
