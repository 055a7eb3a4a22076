//! Truncated big Witt vectors over `ℤ[x₁..x_t]`, computed on the ghost side.

mod blowup;
mod ghost;
mod ideals;
mod vector;

pub use blowup::{blowup_merge, blowup_split, iterated_split, iterated_split_witt, localized_member};
pub use ghost::{dwork_check, dwork_failure, generator_ghost, GhostTuple};
pub(crate) use ghost::check_quotient;
pub use ideals::{generator_product, ip_member, mu_element, verschiebung_teichmuller};
pub use vector::WittVector;

use crate::error::Result;
use crate::ring::{IntPoly, TruncationSet};

pub fn ghost_of_witt(set: TruncationSet, vars: usize, coords: Vec<IntPoly>) -> Result<WittVector> {
    WittVector::from_witt(set, vars, coords)
}

pub fn witt_of_ghost(g: GhostTuple) -> Result<WittVector> {
    WittVector::from_ghost(g)
}

pub fn teichmuller(r: &IntPoly, set: TruncationSet) -> WittVector {
    WittVector::teichmuller(r, set)
}

pub fn constant_witt(z: i64, set: TruncationSet, vars: usize) -> WittVector {
    WittVector::constant(z, set, vars)
}

pub fn in_kernel_gh_n(a: &WittVector, n: u64) -> Result<bool> {
    a.in_kernel_gh(n)
}
