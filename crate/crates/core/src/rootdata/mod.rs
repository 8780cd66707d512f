//! Root systems of types `A_n` and `C_l` in epsilon-coordinates, with Weyl
//! dimensions, dominant characters, tensor products and the restriction from
//! `A_{2l-1}` to `C_l`.
//!
//! All weights used here are integral in epsilon-coordinates, so a
//! [`WeightVector`] stores integers. Type-A weights live in `Z^{n+1}` modulo
//! `(1, ..., 1)` and are kept with last coordinate zero.

mod characters;
mod system;

pub use characters::{branch_a_to_c, dominant_character, full_character, tensor_decompose, weyl_dim, Character};
pub use system::{lowest_conformal_weight, RootSystem, RootType, WeightVector};
