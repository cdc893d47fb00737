//! Psi-class intersection numbers and the identities relating them.

mod bracket;
mod closed_forms;
mod identities;
mod tables;

pub use bracket::{one_point, Bracket, BracketTable, BracketValue};
pub use closed_forms::{d_boundary, d_from_table, three_point_f, two_point_d, verify_d_pde, verify_f_ode};
pub use identities::{
    brief0_check, brief0_sides, dilaton_on_tables, engine_vs_closed_form, f_vs_engine, five_lhs, five_rhs,
    identity_dfgf, identity_five, identity_five_via_f, identity_four, nv1_h_sum, one_point_check,
    string_on_tables, table_series_check, table_vs_closed_form, theorem1_leading, theorem1_via_kdv,
    two_point_engine_check, Nv1Form,
};
pub use tables::TauZeroTable;

#[cfg(test)]
mod oracle;
