//! The Fock space `M_l` of `l` pairs of symplectic bosons `a_i^+(z)`, `a_i^-(z)`.
//!
//! A basis of `M_l` is given by monomials in creation modes `a_i^{+/-}(-r)`,
//! `r in 1/2 + Z_{>=0}`, applied to the vacuum. Creation modes commute with
//! each other, so a monomial is a multiset of modes. Annihilation modes act
//! through `[a_i^+(r), a_j^-(s)] = delta_{r+s,0} delta_{ij}`.

mod basis;
mod bbasis;
mod mode;
mod monomial;
mod theta;
mod vector;

pub use basis::{graded_basis, parity_split, split_by_parity};
pub use bbasis::{b_to_a, BRescaling};
pub use mode::{Charge, Mode};
pub use monomial::FockMonomial;
pub use theta::{theta, theta_mode, theta_monomial};
pub use vector::{apply_mode, FockVector};
pub(crate) use vector::apply_mode_to_monomial;
