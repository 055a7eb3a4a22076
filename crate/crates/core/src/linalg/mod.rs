//! Exact linear algebra over ℤ and ℤ/N, and the exactness decision
//! `ω ∈ NΩ^q + dΩ^{q−1}` built on it.

mod exactness;
mod howell;
mod ring;

pub use exactness::{exact_antiderivative, exactness_mod, exactness_modulus, member_mod, verify_witness};
pub use howell::{howell_solve, solve_integer, HowellForm, ModMatrix};
pub use ring::{Integers, SolveRing, ZMod};
