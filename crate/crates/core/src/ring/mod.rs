//! Integer arithmetic, truncation sets, and polynomials over ℤ and ℤ/N.

pub mod arith;
mod modpoly;
mod poly;
mod truncation;

pub use arith::{is_prime, mobius, ord_p};
pub use modpoly::{reduce_big, ModPoly};
pub use poly::{var_name, IntPoly, Monomial};
pub use truncation::TruncationSet;

use num_bigint::BigInt;

use crate::error::Result;

/// Divides every coefficient of `f` by `n`, failing if any is not a multiple.
pub fn exact_div(f: &IntPoly, n: &BigInt) -> Result<IntPoly> {
    f.exact_div(n)
}

/// The Frobenius lift `x_i ↦ x_i^p` on ℤ[x₁..x_t].
pub fn frobenius_lift_poly(f: &IntPoly, p: u64) -> IntPoly {
    f.frobenius_lift(p)
}
