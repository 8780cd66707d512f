//! Exact computer algebra for the Weyl (symplectic boson) vertex algebra and
//! the affine vertex algebras of level −1 it carries.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: rational scalars, half-integers, sparse elimination, q-series.
//! - [`weylfock`]: the Fock space `M_l`, its PBW monomials, single-mode
//!   actions, the involution `theta` and the `b`-basis.
//! - [`opcalc`]: vertex-operator modes of quadratic elements and their normal
//!   ordered products, Virasoro vectors and central charges.
//! - [`rootdata`]: root systems of types A and C, Weyl dimensions, dominant
//!   characters, tensor products and the `A_{2l-1} -> C_l` branching.
//! - [`realization`]: the free-field generator tables, singular vectors, the
//!   `Delta_3` determinant and the highest-weight classification polynomials.
//! - [`commutant`]: graded commutants, generated subalgebra spans and
//!   `theta`-parity splits.
//! - [`cli`]: the `voa` command line front-end and its JSON report.

pub mod cli;
pub mod commutant;
pub mod error;
pub mod exact;
pub mod opcalc;
pub mod realization;
pub mod rootdata;
pub mod weylfock;

pub use error::{Error, Result};
pub use exact::{HalfInt, QSeries, Scalar};
pub use weylfock::{Charge, FockMonomial, FockVector, Mode};
