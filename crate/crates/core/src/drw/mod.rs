//! The ghost-side de Rham–Witt complex `X_S^•(ℤ[x₁..x_t])`.

mod dwork;
mod form;
mod functional;
mod genexpr;

pub use dwork::{
    drw_dwork_check, drw_dwork_failure, drw_lift, drw_lift_certified, drw_multi_check, drw_multi_report, omega_power,
    phi_form, MultiCheckEntry,
};
pub use form::{convention_rescale, Convention, DrwForm};
pub use functional::{all_functionals, dual_functional, dual_functional_mobius};
pub use genexpr::{Factor, GenExpr, GenTerm};
