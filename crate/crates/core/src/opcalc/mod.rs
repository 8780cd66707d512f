//! Vertex-operator modes on the Fock space.
//!
//! For a monomial `u = x_1(-r_1) ... x_n(-r_n) 1` the field `Y(u, z)` is the
//! normally ordered product of the derivative fields `d^{p_k} x_k(z) / p_k!`,
//! `p_k = r_k - 1/2`, with annihilation modes to the right. The Borcherds
//! mode `u_m` (`Y(u, z) = sum u_m z^{-m-1}`) is therefore
//!
//! ```text
//! u_m = sum_{t_1 + ... + t_n = m + 1 - wt(u)}  prod_k C(-t_k - 1/2, p_k)  :x_1(t_1) ... x_n(t_n):
//! ```
//!
//! Physics-style modes `x(n)` of a homogeneous element are `x_{n + wt(x) - 1}`;
//! in particular `L(n) = omega_{n+1}`.

mod modes;
mod quadratic;
mod virasoro;

pub use modes::{mode, physics_mode};
pub use quadratic::{bracket, level_pairing, mode_action, QuadraticElement};
pub use virasoro::{
    central_charge, free_virasoro, heisenberg_virasoro, sugawara, virasoro_axioms, VirasoroReport,
};
